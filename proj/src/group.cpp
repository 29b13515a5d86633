#include "schur/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

namespace schur {

ElementSet::ElementSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool ElementSet::contains(int x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

ElementSet ElementSet::unite(const ElementSet& other) const {
  std::vector<int> out;
  out.reserve(members_.size() + other.members_.size());
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out));
  ElementSet r;
  r.members_ = std::move(out);
  return r;
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  std::vector<int> out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out));
  ElementSet r;
  r.members_ = std::move(out);
  return r;
}

ElementSet ElementSet::minus(const ElementSet& other) const {
  std::vector<int> out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(out));
  ElementSet r;
  r.members_ = std::move(out);
  return r;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

namespace {

void check_table(const std::vector<int>& mult, int n) {
  std::vector<char> seen(n);
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) {
      int v = mult[static_cast<size_t>(r) * n + c];
      if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
      if (seen[v]) throw std::invalid_argument("table row is not a permutation");
      seen[v] = 1;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n; ++r) {
      int v = mult[static_cast<size_t>(r) * n + c];
      if (seen[v]) throw std::invalid_argument("table column is not a permutation");
      seen[v] = 1;
    }
  }
  for (int x = 0; x < n; ++x) {
    if (mult[x] != x || mult[static_cast<size_t>(x) * n] != x)
      throw std::invalid_argument("element 0 is not a two-sided identity");
  }
  // Full associativity up to the default cap, random triples above.
  auto at = [&](int a, int b) { return mult[static_cast<size_t>(a) * n + b]; };
  if (n <= kDefaultSizeCap) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int xy = at(x, y);
        for (int z = 0; z < n; ++z) {
          if (at(xy, z) != at(x, at(y, z)))
            throw std::invalid_argument("multiplication table is not associative");
        }
      }
  } else {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> d(0, n - 1);
    for (int t = 0; t < 10000; ++t) {
      int x = d(rng), y = d(rng), z = d(rng);
      if (at(at(x, y), z) != at(x, at(y, z)))
        throw std::invalid_argument("multiplication table is not associative");
    }
  }
}

}  // namespace

Group::Group(std::vector<std::vector<int>> table, std::vector<std::string> names,
             std::string family)
    : names_(std::move(names)), family_(std::move(family)) {
  n_ = static_cast<int>(table.size());
  if (n_ == 0) throw std::invalid_argument("empty multiplication table");
  mult_.resize(static_cast<size_t>(n_) * n_);
  for (int r = 0; r < n_; ++r) {
    if (static_cast<int>(table[r].size()) != n_)
      throw std::invalid_argument("multiplication table is not square");
    std::copy(table[r].begin(), table[r].end(), mult_.begin() + static_cast<size_t>(r) * n_);
  }
  check_table(mult_, n_);
  if (!names_.empty() && static_cast<int>(names_.size()) != n_)
    throw std::invalid_argument("names length does not match order");

  inv_.assign(n_, -1);
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      if (mul(x, y) == 0 && mul(y, x) == 0) {
        inv_[x] = y;
        break;
      }
    }
    if (inv_[x] < 0) throw std::invalid_argument("element without inverse");
  }

  order_of_.assign(n_, 0);
  for (int x = 0; x < n_; ++x) {
    int k = 1, y = x;
    while (y != 0) {
      y = mul(y, x);
      ++k;
    }
    order_of_[x] = k;
  }

  abelian_ = true;
  for (int x = 0; x < n_ && abelian_; ++x)
    for (int y = x + 1; y < n_; ++y)
      if (mul(x, y) != mul(y, x)) {
        abelian_ = false;
        break;
      }

  // Conjugacy classes, canonically ordered by (size, min element).
  std::vector<int> cls(n_, -1);
  std::vector<ElementSet> classes;
  for (int x = 0; x < n_; ++x) {
    if (cls[x] >= 0) continue;
    std::vector<int> orbit;
    for (int g = 0; g < n_; ++g) orbit.push_back(mul(mul(inv_[g], x), g));
    ElementSet c(std::move(orbit));
    for (int y : c) cls[y] = 0;  // provisional mark
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elems().front() < b.elems().front();
  });
  for (int i = 0; i < static_cast<int>(classes.size()); ++i)
    for (int y : classes[i]) cls[y] = i;
  classes_.classes = std::move(classes);
  classes_.class_of = std::move(cls);
}

int Group::power(int x, long long m) const {
  int ord = order_of_[x];
  long long e = ((m % ord) + ord) % ord;
  int acc = 0, base = x;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::string Group::name_of(int x) const {
  if (!names_.empty()) return names_[x];
  return std::to_string(x);
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Group build_cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return Group(std::move(t), {}, "cyclic:" + std::to_string(n));
}

Group build_dihedral(int two_n) {
  if (two_n < 2 || two_n % 2 != 0)
    throw std::invalid_argument("dihedral order must be a positive even integer");
  int m = two_n / 2;
  // 0..m-1 rotations r^k, m..2m-1 reflections s r^k.
  auto enc = [m](bool refl, int k) { return (refl ? m : 0) + ((k % m) + m) % m; };
  // s r^k s = r^-k, so (r^ka)(s r^kb) = s r^(kb-ka) and (s r^ka)(s r^kb) = r^(kb-ka).
  std::vector<std::vector<int>> t(two_n, std::vector<int>(two_n));
  for (int a = 0; a < two_n; ++a)
    for (int b = 0; b < two_n; ++b) {
      bool ra = a >= m, rb = b >= m;
      int ka = a % m, kb = b % m;
      if (!ra && !rb) t[a][b] = enc(false, ka + kb);
      if (!ra && rb) t[a][b] = enc(true, kb - ka);
      if (ra && !rb) t[a][b] = enc(true, ka + kb);
      if (ra && rb) t[a][b] = enc(false, kb - ka);
    }
  return Group(std::move(t), {}, "dihedral:" + std::to_string(two_n));
}

Group build_extraspecial(int p) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("p must be an odd prime");
  long long n = static_cast<long long>(p) * p * p;
  if (n > 1u << 16) throw std::invalid_argument("extraspecial group too large");
  int order = static_cast<int>(n);
  auto enc = [p](int a, int b, int c) { return (a * p + b) * p + c; };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int a2 = 0; a2 < p; ++a2)
          for (int b2 = 0; b2 < p; ++b2)
            for (int c2 = 0; c2 < p; ++c2)
              t[enc(a, b, c)][enc(a2, b2, c2)] =
                  enc((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
  return Group(std::move(t), {}, "extraspecial:" + std::to_string(p));
}

Group build_frobenius(int p, int q) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (q <= 1 || (p - 1) % q != 0)
    throw std::invalid_argument("q must divide p-1 and exceed 1");
  // Find a primitive root mod p, then an element of multiplicative order q.
  auto pow_mod = [p](long long b, long long e) {
    long long r = 1 % p;
    b %= p;
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  int root = -1;
  for (int g = 2; g < p && root < 0; ++g) {
    bool ok = true;
    for (int d = 1; d < p - 1 && ok; ++d)
      if ((p - 1) % d == 0 && pow_mod(g, d) == 1) ok = false;
    if (ok) root = g;
  }
  long long t0 = pow_mod(root, (p - 1) / q);
  std::vector<long long> tpow(q);
  tpow[0] = 1;
  for (int j = 1; j < q; ++j) tpow[j] = tpow[j - 1] * t0 % p;

  int n = p * q;
  auto enc = [p](int x, int j) { return j * p + x; };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < p; ++x)
    for (int j = 0; j < q; ++j)
      for (int x2 = 0; x2 < p; ++x2)
        for (int j2 = 0; j2 < q; ++j2)
          t[enc(x, j)][enc(x2, j2)] =
              enc(static_cast<int>((x + tpow[j] * x2) % p), (j + j2) % q);
  return Group(std::move(t), {}, "frobenius:" + std::to_string(p) + ":" + std::to_string(q));
}

namespace {

std::vector<Perm> all_perms(int k, bool even_only) {
  Perm base(k);
  std::iota(base.begin(), base.end(), 0);
  std::vector<Perm> out;
  Perm p = base;
  do {
    if (even_only) {
      int inversions = 0;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          if (p[i] > p[j]) ++inversions;
      if (inversions % 2 != 0) continue;
    }
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Group group_from_perms(std::vector<Perm> perms, const std::string& family) {
  std::sort(perms.begin(), perms.end());  // identity is lexicographically first
  std::map<Perm, int> index;
  for (int i = 0; i < static_cast<int>(perms.size()); ++i) index[perms[i]] = i;
  int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  int deg = static_cast<int>(perms[0].size());
  Perm prod(deg);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int i = 0; i < deg; ++i) prod[i] = perms[a][perms[b][i]];
      t[a][b] = index.at(prod);
    }
  return Group(std::move(t), {}, family);
}

}  // namespace

Group build_symmetric(int k) {
  if (k < 1 || k > 6) throw std::invalid_argument("symmetric degree must be in 1..6");
  return group_from_perms(all_perms(k, false), "symmetric:" + std::to_string(k));
}

Group build_alternating(int k) {
  if (k < 1 || k > 6) throw std::invalid_argument("alternating degree must be in 1..6");
  return group_from_perms(all_perms(k, true), "alternating:" + std::to_string(k));
}

Group build_quaternion() {
  // Elements 0..7 = 1, -1, i, -i, j, -j, k, -k.
  auto enc = [](int axis, int sign) { return axis * 2 + (sign < 0 ? 1 : 0); };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  // axis table for i*j etc.: res_axis[a][b], res_sign[a][b] with axes 0=1,1=i,2=j,3=k
  static const int res_axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int res_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ax = a / 2, bx = b / 2;
      int sa = a % 2 ? -1 : 1, sb = b % 2 ? -1 : 1;
      t[a][b] = enc(res_axis[ax][bx], sa * sb * res_sign[ax][bx]);
    }
  std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return Group(std::move(t), std::move(names), "quaternion:8");
}

Group direct_product(const Group& g1, const Group& g2, int size_cap) {
  long long n = static_cast<long long>(g1.order()) * g2.order();
  if (n > size_cap) throw std::invalid_argument("direct product exceeds size cap");
  int n1 = g1.order(), n2 = g2.order(), order = static_cast<int>(n);
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      t[a][b] = g1.mul(a / n2, b / n2) * n2 + g2.mul(a % n2, b % n2);
  std::string fam;
  if (!g1.family().empty() && !g2.family().empty())
    fam = "product:" + g1.family() + "*" + g2.family();
  return Group(std::move(t), {}, fam);
}

Perm parse_cycles(const std::string& text, int min_degree) {
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  int max_pt = min_degree - 1;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    size_t close = text.find(')', i);
    if (close == std::string::npos) throw std::invalid_argument("unbalanced cycle");
    std::istringstream body(text.substr(i + 1, close - i - 1));
    std::vector<int> cyc;
    std::string tok;
    while (body >> tok) {
      // allow comma- or space-separated points
      for (char& ch : tok)
        if (ch == ',') ch = ' ';
      std::istringstream inner(tok);
      int pt;
      while (inner >> pt) {
        if (pt < 1) throw std::invalid_argument("cycle points are 1-based");
        cyc.push_back(pt - 1);
        max_pt = std::max(max_pt, pt - 1);
      }
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    i = close + 1;
  }
  Perm p(max_pt + 1);
  std::iota(p.begin(), p.end(), 0);
  for (const auto& cyc : cycles)
    for (size_t j = 0; j < cyc.size(); ++j) p[cyc[j]] = cyc[(j + 1) % cyc.size()];
  return p;
}

Group from_permutation_generators(const std::vector<Perm>& gens, int size_cap) {
  int deg = 1;
  for (const auto& g : gens) deg = std::max(deg, static_cast<int>(g.size()));
  std::vector<Perm> padded;
  for (auto g : gens) {
    int old = static_cast<int>(g.size());
    g.resize(deg);
    std::iota(g.begin() + old, g.end(), old);
    padded.push_back(std::move(g));
  }
  Perm id(deg);
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::queue<Perm> todo;
  todo.push(id);
  Perm prod(deg);
  while (!todo.empty()) {
    Perm cur = todo.front();
    todo.pop();
    for (const auto& g : padded) {
      for (int i = 0; i < deg; ++i) prod[i] = cur[g[i]];
      if (seen.insert(prod).second) {
        if (static_cast<int>(seen.size()) > size_cap)
          throw std::invalid_argument("permutation closure exceeds size cap");
        todo.push(prod);
      }
    }
  }
  return group_from_perms(std::vector<Perm>(seen.begin(), seen.end()), "perm");
}

Subgroup generated_subgroup(const Group& g, const ElementSet& x) {
  // BFS over the Cayley graph with generators X u X^-1; the orbit of e is <X>.
  std::vector<int> gens;
  for (int s : x) {
    gens.push_back(s);
    gens.push_back(g.inv(s));
  }
  std::vector<char> in(g.order(), 0);
  std::vector<int> frontier{0};
  in[0] = 1;
  while (!frontier.empty()) {
    int a = frontier.back();
    frontier.pop_back();
    for (int s : gens) {
      int c = g.mul(a, s);
      if (!in[c]) {
        in[c] = 1;
        frontier.push_back(c);
      }
    }
  }
  std::vector<int> members;
  for (int a = 0; a < g.order(); ++a)
    if (in[a]) members.push_back(a);
  ElementSet h(std::move(members));
  bool normal = is_normal(g, h);
  return Subgroup{std::move(h), normal};
}

Subgroup radical(const Group& g, const ElementSet& x) {
  if (x.empty()) throw std::invalid_argument("radical of the empty set");
  std::vector<char> in_x(g.order(), 0);
  for (int e : x) in_x[e] = 1;
  std::vector<int> members;
  for (int a = 0; a < g.order(); ++a) {
    bool ok = true;
    for (int e : x) {
      if (!in_x[g.mul(a, e)] || !in_x[g.mul(e, a)]) {
        ok = false;
        break;
      }
    }
    if (ok) members.push_back(a);
  }
  ElementSet h(std::move(members));
  bool normal = is_normal(g, h);
  return Subgroup{std::move(h), normal};
}

bool is_subgroup(const Group& g, const ElementSet& h) {
  if (h.empty() || !h.contains(0)) return false;
  if (g.order() % h.size() != 0) return false;
  for (int a : h)
    for (int b : h)
      if (!h.contains(g.mul(a, b))) return false;
  return true;
}

bool is_normal(const Group& g, const ElementSet& h) {
  for (int a : h)
    for (int x = 0; x < g.order(); ++x)
      if (!h.contains(g.mul(g.mul(g.inv(x), a), x))) return false;
  return true;
}

Subgroup center(const Group& g) { return centralizer(g, full_set(g)); }

Subgroup centralizer(const Group& g, const ElementSet& s) {
  std::vector<int> members;
  for (int a = 0; a < g.order(); ++a) {
    bool ok = true;
    for (int x : s)
      if (g.mul(a, x) != g.mul(x, a)) {
        ok = false;
        break;
      }
    if (ok) members.push_back(a);
  }
  ElementSet h(std::move(members));
  bool normal = is_normal(g, h);
  return Subgroup{std::move(h), normal};
}

std::optional<Subgroup> normal_sylow_subgroup(const Group& g, int p) {
  if (!is_prime(p) || g.order() % p != 0)
    throw std::invalid_argument("p must be a prime dividing the group order");
  int ppart = 1, n = g.order();
  while (n % p == 0) {
    ppart *= p;
    n /= p;
  }
  std::vector<int> members;
  for (int x = 0; x < g.order(); ++x) {
    int o = g.element_order(x);
    while (o % p == 0) o /= p;
    if (o == 1) members.push_back(x);
  }
  if (static_cast<int>(members.size()) != ppart) return std::nullopt;
  ElementSet h(std::move(members));
  if (!is_subgroup(g, h)) return std::nullopt;
  // The p-power-order set is conjugation invariant, so the subgroup is normal.
  return Subgroup{std::move(h), true};
}

bool is_cyclic(const Group& g, const Subgroup& h) {
  for (int x : h.members)
    if (g.element_order(x) == h.members.size()) return true;
  return false;
}

ElementSet nonidentity_set(const Group& g) {
  std::vector<int> v(g.order() - 1);
  std::iota(v.begin(), v.end(), 1);
  return ElementSet(std::move(v));
}

ElementSet full_set(const Group& g) {
  std::vector<int> v(g.order());
  std::iota(v.begin(), v.end(), 0);
  return ElementSet(std::move(v));
}

}  // namespace schur
