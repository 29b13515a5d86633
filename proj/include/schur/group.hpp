#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace schur {

/// Default cap on group order. Everything here is table-based and exact, so
/// the cap exists only to keep accidental blowups (permutation closures,
/// direct products) from eating memory.
inline constexpr int kDefaultSizeCap = 512;

/// A sorted, duplicate-free set of element indices.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::vector<int> members);
  static ElementSet single(int x) { return ElementSet({x}); }

  bool contains(int x) const;
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  const std::vector<int>& elems() const { return members_; }

  ElementSet unite(const ElementSet& other) const;
  ElementSet intersect(const ElementSet& other) const;
  ElementSet minus(const ElementSet& other) const;
  bool is_subset_of(const ElementSet& other) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const ElementSet& a, const ElementSet& b) = default;
  friend auto operator<=>(const ElementSet& a, const ElementSet& b) = default;

 private:
  std::vector<int> members_;
};

struct ConjClassTable {
  std::vector<ElementSet> classes;  // sorted by (size, min element); classes[0] = {e}
  std::vector<int> class_of;        // element index -> class index
};

struct Subgroup {
  ElementSet members;
  bool is_normal = false;
};

/// A finite group given by its full multiplication table. The identity is
/// always element 0. Inverses, element orders and the conjugacy class table
/// are computed at construction; instances are immutable afterwards and safe
/// to share across threads.
///
/// Construction validates the table: rows and columns must be permutations
/// of 0..n-1, element 0 must be a two-sided identity, and associativity is
/// checked on all triples for n <= 512 (10^4 random triples above that).
class Group {
 public:
  explicit Group(std::vector<std::vector<int>> table,
                 std::vector<std::string> names = {},
                 std::string family = "");

  int order() const { return n_; }
  int mul(int x, int y) const { return mult_[static_cast<size_t>(x) * n_ + y]; }
  int inv(int x) const { return inv_[x]; }
  int identity() const { return 0; }

  /// x^m for any integer m (x^0 = e, negative m via the inverse).
  int power(int x, long long m) const;
  int element_order(int x) const { return order_of_[x]; }

  const ConjClassTable& classes() const { return classes_; }
  int class_of(int x) const { return classes_.class_of[x]; }
  int num_classes() const { return static_cast<int>(classes_.classes.size()); }

  bool is_abelian() const { return abelian_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& family() const { return family_; }
  /// Display label for an element (its index if no names were given).
  std::string name_of(int x) const;

 private:
  int n_ = 0;
  std::vector<int> mult_;  // flat n*n
  std::vector<int> inv_;
  std::vector<int> order_of_;
  ConjClassTable classes_;
  bool abelian_ = false;
  std::vector<std::string> names_;
  std::string family_;
};

// ---- builders ----

Group build_cyclic(int n);
Group build_dihedral(int two_n);
/// Heisenberg group of order p^3 and exponent p (upper unitriangular 3x3
/// matrices over the p-element field), p an odd prime.
Group build_extraspecial(int p);
/// Z_p x| Z_q with Z_q acting by an automorphism of order q; requires q | p-1, q > 1.
Group build_frobenius(int p, int q);
Group build_symmetric(int k);
Group build_alternating(int k);
/// Quaternion group of order 8.
Group build_quaternion();
Group direct_product(const Group& g1, const Group& g2, int size_cap = kDefaultSizeCap);

/// Permutations in one-line notation over points 0..deg-1.
using Perm = std::vector<int>;
/// Parses disjoint-cycle notation with 1-based points, e.g. "(1 2 3)(4 5)".
Perm parse_cycles(const std::string& text, int min_degree = 0);
Group from_permutation_generators(const std::vector<Perm>& gens,
                                  int size_cap = kDefaultSizeCap);

// ---- subgroup machinery ----

/// Least subgroup containing X (product closure); <{}> = {e}.
Subgroup generated_subgroup(const Group& g, const ElementSet& x);
/// rad(X) = {g : gX = Xg = X}; X must be nonempty.
Subgroup radical(const Group& g, const ElementSet& x);
bool is_subgroup(const Group& g, const ElementSet& h);
bool is_normal(const Group& g, const ElementSet& h);
Subgroup center(const Group& g);
Subgroup centralizer(const Group& g, const ElementSet& s);
/// The normal Sylow p-subgroup if one exists: the set of all p-power-order
/// elements, provided it is a subgroup of full p-part size.
std::optional<Subgroup> normal_sylow_subgroup(const Group& g, int p);
bool is_cyclic(const Group& g, const Subgroup& h);

/// All non-identity elements of g.
ElementSet nonidentity_set(const Group& g);
ElementSet full_set(const Group& g);

bool is_prime(int p);

}  // namespace schur
