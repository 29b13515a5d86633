#pragma once

#include <functional>

#include <boost/multiprecision/cpp_int.hpp>

#include "schur/group.hpp"

namespace schur {

/// Coefficients are arbitrary-precision: X^p for a class sum blows past
/// 64 bits long before the congruence checks stop caring.
using BigInt = boost::multiprecision::cpp_int;

/// An element of the integral group ring ZG, as a dense coefficient vector.
/// Values are immutable; all operations return fresh elements.
class GroupRingElement {
 public:
  GroupRingElement(const Group& g, std::vector<BigInt> coeffs);
  static GroupRingElement zero(const Group& g);

  const Group& group() const { return *g_; }
  const BigInt& coeff(int x) const { return coeffs_[x]; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  /// Constant on every conjugacy class.
  bool is_central() const;

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b);
  GroupRingElement operator+(const GroupRingElement& rhs) const;
  GroupRingElement operator-(const GroupRingElement& rhs) const;
  GroupRingElement operator*(const GroupRingElement& rhs) const;
  GroupRingElement operator*(const BigInt& scalar) const;

 private:
  const Group* g_;
  std::vector<BigInt> coeffs_;
};

/// Indicator sum of X.
GroupRingElement set_sum(const Group& g, const ElementSet& x);
GroupRingElement basis_element(const Group& g, int x);

GroupRingElement ring_mul(const GroupRingElement& a, const GroupRingElement& b);
/// a^k by square-and-multiply, k >= 1.
GroupRingElement ring_pow(const GroupRingElement& a, int k);

using CoeffTransform = std::function<BigInt(const BigInt&)>;
/// f(a) = 1 if a != 0 else 0.
CoeffTransform indicator_transform();
/// f(a) = remainder of a divided by p, in [0, p).
CoeffTransform mod_remainder_transform(int p);

GroupRingElement coeff_transform(const CoeffTransform& f, const GroupRingElement& xi);
ElementSet support(const GroupRingElement& xi);

/// {x^m : x in X}; may shrink when gcd(m, |G|) != 1.
ElementSet power_map_set(const Group& g, const ElementSet& x, long long m);

/// Sum_g a_g g^m, keeping multiplicities. This is the map used inside the
/// Sylow congruence arguments, where m need not be coprime to |G|.
GroupRingElement power_pushforward(const GroupRingElement& xi, long long m);

/// The linear extension of class-sum images under x -> x^m. Requires
/// gcd(m, |G|) = 1 and a central argument; rejects anything else, since the
/// elementwise map is not linear on general vectors.
GroupRingElement sigma_m(const Group& g, const GroupRingElement& xi, long long m);

long long gcd_ll(long long a, long long b);

}  // namespace schur
