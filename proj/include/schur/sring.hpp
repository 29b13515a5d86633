#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "schur/group.hpp"

namespace schur {

/// Raised by from_partition; the message names the failed axiom plus a
/// witness (the offending sets and, for S3, the two elements of one part
/// that received different coefficients).
class SRingError : public std::runtime_error {
 public:
  enum class Kind { NotPartition, S1Violation, S2Violation, S3Violation };
  SRingError(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class ClassCountExceeded : public std::runtime_error {
 public:
  explicit ClassCountExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

class StructureConstants {
 public:
  StructureConstants() = default;
  StructureConstants(int rank, std::vector<long long> flat)
      : rank_(rank), flat_(std::move(flat)) {}
  int rank() const { return rank_; }
  long long c(int x, int y, int z) const {
    return flat_[(static_cast<size_t>(x) * rank_ + y) * rank_ + z];
  }

 private:
  int rank_ = 0;
  std::vector<long long> flat_;
};

/// A validated S-ring over a group: a partition of G containing {e} as a
/// class, closed under inversion, whose span is multiplicatively closed.
/// Basic sets are kept in canonical order (size, then minimal element), so
/// basic_set(0) is always {e}. Structure constants are computed during
/// validation and cached.
class SRing {
 public:
  /// Validates S1-S3 on an arbitrary partition; throws SRingError.
  static SRing from_partition(const Group& g, std::vector<ElementSet> parts);
  /// Z(ZG): basic sets are the conjugacy classes.
  static SRing class_algebra(const Group& g);
  /// Ze + Z(G\e); rank 2 (rank 1 on the trivial group).
  static SRing trivial(const Group& g);

  const Group& group() const { return *g_; }
  int rank() const { return static_cast<int>(basic_.size()); }
  const std::vector<ElementSet>& basic_sets() const { return basic_; }
  const ElementSet& basic_set(int i) const { return basic_[i]; }
  int set_of(int element) const { return set_of_[element]; }
  bool is_central() const { return central_; }
  /// Index of the basic set (X_i)^-1.
  int inverse_index(int i) const { return inverse_of_[i]; }
  const StructureConstants& constants() const { return constants_; }

  /// Partition as a sorted set of sorted sets; the canonical form used for
  /// deduplication and deterministic report ordering.
  std::vector<std::vector<int>> canonical_key() const;

  friend bool operator==(const SRing& a, const SRing& b) {
    return a.g_ == b.g_ && a.basic_ == b.basic_;
  }

 private:
  SRing() = default;
  const Group* g_ = nullptr;
  std::vector<ElementSet> basic_;
  std::vector<int> set_of_;
  std::vector<int> inverse_of_;
  bool central_ = false;
  StructureConstants constants_;
};

const StructureConstants& structure_constants(const SRing& a);

/// True iff X is a union of basic sets.
bool is_A_set(const SRing& a, const ElementSet& x);

struct ASubgroupLattice {
  std::vector<Subgroup> members;           // sorted by (size, members)
  std::vector<std::vector<int>> join;      // index tables into members
  std::vector<std::vector<int>> meet;
};

/// Every subgroup of G that is a union of basic sets, via join-closure of
/// {<X> : X basic}. For a central S-ring these are precisely the normal
/// subgroups of G that are A-sets.
ASubgroupLattice a_subgroups(const SRing& a);

/// True iff <X> = G for every basic set X != {e}.
bool is_primitive(const SRing& a);

/// rad(X) for a basic set; always an A-subgroup.
Subgroup radical_of_basic(const SRing& a, int basic_index);

/// Every basic set of a is a union of basic sets of b.
bool is_fusion_of(const SRing& a, const SRing& b);

/// Strictly between Z(ZG) and the trivial S-ring.
bool is_proper_central(const SRing& a);

struct EnumLimits {
  int max_classes = 14;
  long long max_results = 1000000;
};

/// All central S-rings over G: every partition of cla(G) whose induced
/// partition of G satisfies S1-S3. Results are deduplicated and sorted by
/// (rank, canonical form). Throws ClassCountExceeded past the class cap.
std::vector<SRing> enumerate_central_srings(const Group& g, const EnumLimits& limits = {});

}  // namespace schur
