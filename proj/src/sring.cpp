#include "schur/sring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace schur {

namespace {

std::string set_to_string(const ElementSet& x) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int e : x) {
    if (!first) os << ",";
    os << e;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace

SRing SRing::from_partition(const Group& g, std::vector<ElementSet> parts) {
  const int n = g.order();
  std::vector<int> owner(n, -1);
  for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
    if (parts[i].empty())
      throw SRingError(SRingError::Kind::NotPartition, "empty part in partition");
    for (int x : parts[i]) {
      if (x < 0 || x >= n)
        throw SRingError(SRingError::Kind::NotPartition, "element out of range");
      if (owner[x] != -1)
        throw SRingError(SRingError::Kind::NotPartition,
                         "element " + std::to_string(x) + " appears in two parts");
      owner[x] = i;
    }
  }
  for (int x = 0; x < n; ++x)
    if (owner[x] == -1)
      throw SRingError(SRingError::Kind::NotPartition,
                       "element " + std::to_string(x) + " is not covered");

  std::sort(parts.begin(), parts.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elems() < b.elems();
  });

  // S1: {e} must be a class of the partition; canonically it is parts[0].
  if (parts[0].size() != 1 || parts[0].elems()[0] != 0)
    throw SRingError(SRingError::Kind::S1Violation, "{e} is not a part of the partition");

  SRing a;
  a.g_ = &g;
  a.basic_ = std::move(parts);
  const int rank = static_cast<int>(a.basic_.size());
  a.set_of_.assign(n, -1);
  for (int i = 0; i < rank; ++i)
    for (int x : a.basic_[i]) a.set_of_[x] = i;

  // S2: the inverse of each part is a part.
  a.inverse_of_.assign(rank, -1);
  for (int i = 0; i < rank; ++i) {
    std::vector<int> inv_members;
    inv_members.reserve(a.basic_[i].size());
    for (int x : a.basic_[i]) inv_members.push_back(g.inv(x));
    ElementSet inv_set(std::move(inv_members));
    int j = a.set_of_[inv_set.elems().front()];
    if (!(a.basic_[j] == inv_set))
      throw SRingError(SRingError::Kind::S2Violation,
                       "inverse of part " + set_to_string(a.basic_[i]) +
                           " is not a part (got " + set_to_string(inv_set) + ")");
    a.inverse_of_[i] = j;
  }

  // S3: every product of part sums has coefficients constant on parts.
  // The convolution also yields the structure constants. Coefficients are
  // bounded by |X||Y| <= n^2, so 64-bit arithmetic is exact here.
  std::vector<long long> flat(static_cast<size_t>(rank) * rank * rank, 0);
  std::vector<long long> conv(n);
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      std::fill(conv.begin(), conv.end(), 0);
      for (int x : a.basic_[i])
        for (int y : a.basic_[j]) conv[g.mul(x, y)] += 1;
      for (int z = 0; z < rank; ++z) {
        const ElementSet& part = a.basic_[z];
        long long c0 = conv[part.elems().front()];
        for (int w : part) {
          if (conv[w] != c0) {
            std::ostringstream os;
            os << "product " << set_to_string(a.basic_[i]) << " * "
               << set_to_string(a.basic_[j]) << " is not constant on part "
               << set_to_string(part) << ": coefficient " << c0 << " at "
               << part.elems().front() << " vs " << conv[w] << " at " << w;
            throw SRingError(SRingError::Kind::S3Violation, os.str());
          }
        }
        flat[(static_cast<size_t>(i) * rank + j) * rank + z] = c0;
      }
    }
  }
  a.constants_ = StructureConstants(rank, std::move(flat));

  a.central_ = true;
  for (const auto& cls : g.classes().classes) {
    int part = a.set_of_[cls.elems().front()];
    for (int x : cls)
      if (a.set_of_[x] != part) {
        a.central_ = false;
        break;
      }
    if (!a.central_) break;
  }
  return a;
}

SRing SRing::class_algebra(const Group& g) {
  return from_partition(g, g.classes().classes);
}

SRing SRing::trivial(const Group& g) {
  std::vector<ElementSet> parts{ElementSet::single(0)};
  if (g.order() > 1) parts.push_back(nonidentity_set(g));
  return from_partition(g, std::move(parts));
}

std::vector<std::vector<int>> SRing::canonical_key() const {
  std::vector<std::vector<int>> key;
  key.reserve(basic_.size());
  for (const auto& b : basic_) key.push_back(b.elems());
  std::sort(key.begin(), key.end());
  return key;
}

const StructureConstants& structure_constants(const SRing& a) { return a.constants(); }

bool is_A_set(const SRing& a, const ElementSet& x) {
  if (x.empty()) return true;
  std::vector<char> used(a.rank(), 0);
  for (int e : x) used[a.set_of(e)] = 1;
  int total = 0;
  for (int i = 0; i < a.rank(); ++i)
    if (used[i]) total += a.basic_set(i).size();
  return total == x.size();
}

ASubgroupLattice a_subgroups(const SRing& a) {
  const Group& g = a.group();
  std::vector<Subgroup> members;
  auto add_unique = [&members](Subgroup h) {
    for (const auto& m : members)
      if (m.members == h.members) return false;
    members.push_back(std::move(h));
    return true;
  };
  add_unique(Subgroup{ElementSet::single(0), true});
  for (int i = 1; i < a.rank(); ++i) add_unique(generated_subgroup(g, a.basic_set(i)));
  // Close under join. Every A-subgroup is the join of the <X> it contains,
  // so this reaches all of them; meets come along for free.
  bool grew = true;
  while (grew) {
    grew = false;
    const size_t sz = members.size();
    for (size_t i = 0; i < sz; ++i)
      for (size_t j = i + 1; j < sz; ++j) {
        if (members[i].members.is_subset_of(members[j].members) ||
            members[j].members.is_subset_of(members[i].members))
          continue;
        Subgroup join = generated_subgroup(g, members[i].members.unite(members[j].members));
        if (add_unique(std::move(join))) grew = true;
      }
  }
  std::sort(members.begin(), members.end(), [](const Subgroup& x, const Subgroup& y) {
    if (x.members.size() != y.members.size()) return x.members.size() < y.members.size();
    return x.members.elems() < y.members.elems();
  });

  ASubgroupLattice lat;
  lat.members = std::move(members);
  const int m = static_cast<int>(lat.members.size());
  auto index_of = [&lat, m](const ElementSet& s) {
    for (int i = 0; i < m; ++i)
      if (lat.members[i].members == s) return i;
    return -1;
  };
  lat.join.assign(m, std::vector<int>(m));
  lat.meet.assign(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      ElementSet meet = lat.members[i].members.intersect(lat.members[j].members);
      lat.meet[i][j] = index_of(meet);
      Subgroup join = generated_subgroup(a.group(), lat.members[i].members.unite(lat.members[j].members));
      lat.join[i][j] = index_of(join.members);
      if (lat.meet[i][j] < 0 || lat.join[i][j] < 0)
        throw std::logic_error("A-subgroup lattice is not closed");
    }
  return lat;
}

bool is_primitive(const SRing& a) {
  const Group& g = a.group();
  for (int i = 1; i < a.rank(); ++i) {
    if (generated_subgroup(g, a.basic_set(i)).members.size() != g.order()) return false;
  }
  return true;
}

Subgroup radical_of_basic(const SRing& a, int basic_index) {
  Subgroup r = radical(a.group(), a.basic_set(basic_index));
  if (!is_A_set(a, r.members))
    throw std::logic_error("radical of a basic set is not an A-set");
  return r;
}

bool is_fusion_of(const SRing& a, const SRing& b) {
  if (a.group().order() != b.group().order())
    throw std::invalid_argument("S-rings over different groups");
  for (int i = 0; i < a.rank(); ++i) {
    // every element of a basic set of a must pull in its whole b-set
    const ElementSet& x = a.basic_set(i);
    for (int e : x)
      if (!b.basic_set(b.set_of(e)).is_subset_of(x)) return false;
  }
  return true;
}

bool is_proper_central(const SRing& a) {
  return a.is_central() && a.rank() > 2 && a.rank() < a.group().num_classes();
}

}  // namespace schur
