#include <algorithm>

#include "schur/sring.hpp"

namespace schur {

namespace {

// Depth-first search over the partitions of cla(G) \ {e-class}. Blocks are
// grown from the smallest unassigned class and sealed one at a time; sealing
// a block whose inverse is a different set immediately forces that mirror
// block too, which is how S2 is kept eagerly closed. Module closure is
// checked incrementally: products of sealed blocks (computed on the class
// algebra's structure constants) must be constant on every sealed block, and
// the cached product vectors double as signatures that prune the growth of
// later blocks. When every class is assigned the cached checks amount to the
// full S3 condition, so each recorded partition is a central S-ring.
class CentralEnumerator {
 public:
  CentralEnumerator(const SRing& class_algebra, long long max_results)
      : ca_(class_algebra), k_(class_algebra.rank()), max_results_(max_results) {
    inv_.resize(k_);
    for (int i = 0; i < k_; ++i) inv_[i] = ca_.inverse_index(i);
    assigned_.assign(k_, false);
    assigned_[0] = true;
    sealed_.push_back({0});
  }

  std::vector<std::vector<std::vector<int>>> run() {
    dfs();
    return std::move(results_);
  }

 private:
  std::vector<long long> product(const std::vector<int>& bi, const std::vector<int>& bj) const {
    std::vector<long long> v(k_, 0);
    for (int x : bi)
      for (int y : bj)
        for (int z = 0; z < k_; ++z) v[z] += ca_.constants().c(x, y, z);
    return v;
  }

  static bool constant_on(const std::vector<long long>& v, const std::vector<int>& block) {
    long long c0 = v[block.front()];
    for (int c : block)
      if (v[c] != c0) return false;
    return true;
  }

  // Pushes `block` onto the sealed list and caches its products with every
  // sealed block. Returns false on a closure violation, leaving partial
  // pushes for the caller's rollback.
  bool seal(const std::vector<int>& block) {
    for (const auto& v : cache_)
      if (!constant_on(v, block)) return false;
    sealed_.push_back(block);
    for (size_t i = 1; i < sealed_.size(); ++i) {  // block 0 is {e-class}
      auto v = product(block, sealed_[i]);
      for (size_t j = 1; j < sealed_.size(); ++j)
        if (!constant_on(v, sealed_[j])) return false;
      cache_.push_back(std::move(v));
    }
    return true;
  }

  bool try_seal_with_mirror(const std::vector<int>& block, std::vector<int>& mirror_assigned) {
    const size_t cs = cache_.size(), ss = sealed_.size();
    auto restore = [&] {
      cache_.resize(cs);
      sealed_.resize(ss);
      for (int c : mirror_assigned) assigned_[c] = false;
      mirror_assigned.clear();
    };
    if (!seal(block)) {
      restore();
      return false;
    }
    std::vector<int> mirror;
    mirror.reserve(block.size());
    for (int c : block) mirror.push_back(inv_[c]);
    std::sort(mirror.begin(), mirror.end());
    if (mirror != block) {
      for (int c : mirror)
        if (assigned_[c]) {
          restore();
          return false;
        }
      for (int c : mirror) {
        assigned_[c] = true;
        mirror_assigned.push_back(c);
      }
      if (!seal(mirror)) {
        restore();
        return false;
      }
    }
    return true;
  }

  bool sig_compatible(int cand, int rep) const {
    for (const auto& v : cache_)
      if (v[cand] != v[rep]) return false;
    return true;
  }

  void dfs() {
    if (static_cast<long long>(results_.size()) >= max_results_) return;
    int u = -1;
    for (int c = 1; c < k_; ++c)
      if (!assigned_[c]) {
        u = c;
        break;
      }
    if (u < 0) {
      results_.push_back(sealed_);
      return;
    }
    std::vector<int> block{u};
    assigned_[u] = true;
    grow(block, u + 1);
    assigned_[u] = false;
  }

  void grow(std::vector<int>& block, int from) {
    if (static_cast<long long>(results_.size()) >= max_results_) return;
    {
      const size_t cs = cache_.size(), ss = sealed_.size();
      std::vector<int> mirror_assigned;
      if (try_seal_with_mirror(block, mirror_assigned)) {
        dfs();
        cache_.resize(cs);
        sealed_.resize(ss);
        for (int c : mirror_assigned) assigned_[c] = false;
      }
    }
    for (int c = from; c < k_; ++c) {
      if (assigned_[c] || !sig_compatible(c, block.front())) continue;
      block.push_back(c);
      assigned_[c] = true;
      grow(block, c + 1);
      assigned_[c] = false;
      block.pop_back();
    }
  }

  const SRing& ca_;
  int k_;
  long long max_results_;
  std::vector<int> inv_;
  std::vector<char> assigned_;
  std::vector<std::vector<int>> sealed_;
  std::vector<std::vector<long long>> cache_;
  std::vector<std::vector<std::vector<int>>> results_;
};

}  // namespace

std::vector<SRing> enumerate_central_srings(const Group& g, const EnumLimits& limits) {
  if (g.num_classes() > limits.max_classes)
    throw ClassCountExceeded("group has " + std::to_string(g.num_classes()) +
                             " conjugacy classes, cap is " +
                             std::to_string(limits.max_classes));
  SRing ca = SRing::class_algebra(g);
  CentralEnumerator search(ca, limits.max_results);
  auto class_partitions = search.run();

  std::vector<SRing> out;
  out.reserve(class_partitions.size());
  for (const auto& blocks : class_partitions) {
    std::vector<ElementSet> parts;
    parts.reserve(blocks.size());
    for (const auto& block : blocks) {
      ElementSet acc;
      for (int cls : block) acc = acc.unite(g.classes().classes[cls]);
      parts.push_back(std::move(acc));
    }
    // Each candidate is re-validated from scratch; the enumerator's class
    // level pruning and from_partition are independent code paths.
    out.push_back(SRing::from_partition(g, std::move(parts)));
  }
  std::sort(out.begin(), out.end(), [](const SRing& a, const SRing& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return a.canonical_key() < b.canonical_key();
  });
  return out;
}

}  // namespace schur
