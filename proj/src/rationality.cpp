#include "schur/rationality.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <Eigen/Dense>

namespace schur {

MultiplierAction multiplier_action(const Group& g, long long m) {
  long long n = g.order();
  if (gcd_ll(((m % n) + n) % n, n) != 1)
    throw std::invalid_argument("multiplier requires gcd(m, |G|) = 1");
  MultiplierAction act;
  act.m = m;
  act.class_perm.resize(g.num_classes());
  for (int i = 0; i < g.num_classes(); ++i) {
    int rep = g.classes().classes[i].elems().front();
    act.class_perm[i] = g.class_of(g.power(rep, m));
  }
  // A bijection preserving class sizes, by coprimality.
  std::vector<char> hit(g.num_classes(), 0);
  for (int img : act.class_perm) {
    if (hit[img]) throw std::logic_error("power map failed to permute classes");
    hit[img] = 1;
  }
  return act;
}

std::vector<long long> coprime_residues(int n) {
  if (n <= 1) return {1};
  std::vector<long long> out;
  for (int m = 1; m < n; ++m)
    if (gcd_ll(m, n) == 1) out.push_back(m);
  return out;
}

std::vector<int> sigma_action(const SRing& a, long long m) {
  const Group& g = a.group();
  long long n = g.order();
  if (gcd_ll(((m % n) + n) % n, n) != 1)
    throw std::invalid_argument("sigma_action requires gcd(m, |G|) = 1");
  if (!a.is_central()) throw std::invalid_argument("sigma_action requires a central S-ring");
  std::vector<int> perm(a.rank(), -1);
  for (int i = 0; i < a.rank(); ++i) {
    ElementSet image = power_map_set(g, a.basic_set(i), m);
    int j = a.set_of(image.elems().front());
    if (!(a.basic_set(j) == image)) {
      std::ostringstream os;
      os << "sigma_" << m << " maps basic set " << i
         << " outside the partition; this contradicts the multiplier theorem";
      throw TheoremViolation(os.str());
    }
    perm[i] = j;
  }
  return perm;
}

AutomorphismReport verify_automorphism(const SRing& a, long long m) {
  std::vector<int> perm = sigma_action(a, m);
  const StructureConstants& c = a.constants();
  AutomorphismReport rep;
  rep.m = m;
  for (int x = 0; x < a.rank(); ++x)
    for (int y = 0; y < a.rank(); ++y)
      for (int z = 0; z < a.rank(); ++z) {
        ++rep.triples_checked;
        if (c.c(perm[x], perm[y], perm[z]) != c.c(x, y, z)) {
          std::ostringstream os;
          os << "structure constant mismatch under sigma_" << m << " at triple (" << x
             << "," << y << "," << z << ")";
          throw TheoremViolation(os.str());
        }
      }
  return rep;
}

ElementSet trace_set(const Group& g, const ElementSet& x) {
  ElementSet acc;
  for (long long m : coprime_residues(g.order())) acc = acc.unite(power_map_set(g, x, m));
  return acc;
}

TraceClosure rational_closure(const SRing& a) {
  const Group& g = a.group();
  // Union-find over basic-set indices under every sigma_m.
  std::vector<int> parent(a.rank());
  for (int i = 0; i < a.rank(); ++i) parent[i] = i;
  auto find = [&parent](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (long long m : coprime_residues(g.order())) {
    std::vector<int> perm = sigma_action(a, m);
    for (int i = 0; i < a.rank(); ++i) {
      int ra = find(i), rb = find(perm[i]);
      if (ra != rb) parent[ra] = rb;
    }
  }
  std::vector<std::vector<int>> orbits;
  std::vector<int> orbit_of(a.rank(), -1);
  for (int i = 0; i < a.rank(); ++i) {
    int r = find(i);
    if (orbit_of[r] < 0) {
      orbit_of[r] = static_cast<int>(orbits.size());
      orbits.emplace_back();
    }
    orbits[orbit_of[r]].push_back(i);
  }
  std::vector<ElementSet> parts;
  parts.reserve(orbits.size());
  for (const auto& orbit : orbits) {
    ElementSet acc;
    for (int i : orbit) acc = acc.unite(a.basic_set(i));
    parts.push_back(std::move(acc));
  }
  TraceClosure tc{std::move(orbits), SRing::from_partition(g, std::move(parts))};
  return tc;
}

bool is_rational(const SRing& a) {
  for (long long m : coprime_residues(a.group().order())) {
    std::vector<int> perm = sigma_action(a, m);
    for (int i = 0; i < a.rank(); ++i)
      if (perm[i] != i) return false;
  }
  return true;
}

CharacterTable central_characters(const SRing& a, unsigned long long seed) {
  const int r = a.rank();
  const StructureConstants& sc = a.constants();
  for (int x = 0; x < r; ++x)
    for (int y = 0; y < x; ++y)
      for (int z = 0; z < r; ++z)
        if (sc.c(x, y, z) != sc.c(y, x, z))
          throw std::invalid_argument("central_characters requires a commutative S-ring");

  // Left multiplication by X in the basis of basic-set sums.
  std::vector<Eigen::MatrixXd> mats(r, Eigen::MatrixXd::Zero(r, r));
  for (int x = 0; x < r; ++x)
    for (int y = 0; y < r; ++y)
      for (int z = 0; z < r; ++z) mats[x](z, y) = static_cast<double>(sc.c(x, y, z));

  for (int attempt = 0; attempt < 8; ++attempt) {
    std::mt19937_64 rng(seed + attempt);
    std::uniform_real_distribution<double> dist(0.25, 1.0);
    Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(r, r);
    for (int x = 0; x < r; ++x) combo += dist(rng) * mats[x];

    Eigen::EigenSolver<Eigen::MatrixXd> solver(combo);
    if (solver.info() != Eigen::Success) continue;
    Eigen::VectorXcd evals = solver.eigenvalues();
    double scale = 1.0;
    for (int i = 0; i < r; ++i) scale = std::max(scale, std::abs(evals[i]));
    bool degenerate = false;
    for (int i = 0; i < r && !degenerate; ++i)
      for (int j = i + 1; j < r; ++j)
        if (std::abs(evals[i] - evals[j]) < 1e-6 * scale) {
          degenerate = true;
          break;
        }
    if (degenerate) continue;

    CharacterTable table;
    table.rank = r;
    table.values.assign(r, std::vector<std::complex<double>>(r));
    double residual = 0.0;
    Eigen::MatrixXcd vecs = solver.eigenvectors();
    for (int i = 0; i < r; ++i) {
      Eigen::VectorXcd v = vecs.col(i);
      int pivot = 0;
      for (int j = 1; j < r; ++j)
        if (std::abs(v[j]) > std::abs(v[pivot])) pivot = j;
      for (int x = 0; x < r; ++x) {
        Eigen::VectorXcd image = mats[x] * v;
        std::complex<double> value = image[pivot] / v[pivot];
        table.values[i][x] = value;
        residual = std::max(residual, (image - value * v).cwiseAbs().maxCoeff());
      }
    }
    table.residual = residual;
    if (residual > 1e-7) continue;  // treat as a degenerate draw and reseed
    // Deterministic row order: lexicographic on (re, im) down the columns.
    std::sort(table.values.begin(), table.values.end(),
              [](const std::vector<std::complex<double>>& p,
                 const std::vector<std::complex<double>>& q) {
                for (size_t x = 0; x < p.size(); ++x) {
                  if (p[x].real() != q[x].real()) return p[x].real() < q[x].real();
                  if (p[x].imag() != q[x].imag()) return p[x].imag() < q[x].imag();
                }
                return false;
              });
    return table;
  }
  throw std::runtime_error(
      "central_characters: degenerate random combination after 8 reseeds");
}

bool is_rational_numeric(const CharacterTable& table, double tol) {
  for (const auto& row : table.values)
    for (const auto& v : row) {
      if (std::abs(v.imag()) > tol) return false;
      if (std::abs(v.real() - std::round(v.real())) > tol) return false;
    }
  return true;
}

bool is_rational_numeric(const SRing& a, double tol, unsigned long long seed) {
  return is_rational_numeric(central_characters(a, seed), tol);
}

}  // namespace schur
