#include "schur/group_ring.hpp"

#include <numeric>

namespace schur {

GroupRingElement::GroupRingElement(const Group& g, std::vector<BigInt> coeffs)
    : g_(&g), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != g.order())
    throw std::invalid_argument("coefficient vector length must equal |G|");
}

GroupRingElement GroupRingElement::zero(const Group& g) {
  return GroupRingElement(g, std::vector<BigInt>(g.order()));
}

bool GroupRingElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool GroupRingElement::is_central() const {
  for (const auto& cls : g_->classes().classes) {
    const BigInt& first = coeffs_[cls.elems().front()];
    for (int x : cls)
      if (coeffs_[x] != first) return false;
  }
  return true;
}

bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
  return a.g_ == b.g_ && a.coeffs_ == b.coeffs_;
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& rhs) const {
  if (g_ != rhs.g_) throw std::invalid_argument("group mismatch");
  std::vector<BigInt> out(coeffs_);
  for (int i = 0; i < static_cast<int>(out.size()); ++i) out[i] += rhs.coeffs_[i];
  return GroupRingElement(*g_, std::move(out));
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& rhs) const {
  if (g_ != rhs.g_) throw std::invalid_argument("group mismatch");
  std::vector<BigInt> out(coeffs_);
  for (int i = 0; i < static_cast<int>(out.size()); ++i) out[i] -= rhs.coeffs_[i];
  return GroupRingElement(*g_, std::move(out));
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& rhs) const {
  return ring_mul(*this, rhs);
}

GroupRingElement GroupRingElement::operator*(const BigInt& scalar) const {
  std::vector<BigInt> out(coeffs_);
  for (auto& c : out) c *= scalar;
  return GroupRingElement(*g_, std::move(out));
}

GroupRingElement set_sum(const Group& g, const ElementSet& x) {
  std::vector<BigInt> c(g.order());
  for (int e : x) c[e] = 1;
  return GroupRingElement(g, std::move(c));
}

GroupRingElement basis_element(const Group& g, int x) {
  std::vector<BigInt> c(g.order());
  c.at(x) = 1;
  return GroupRingElement(g, std::move(c));
}

GroupRingElement ring_mul(const GroupRingElement& a, const GroupRingElement& b) {
  if (&a.group() != &b.group()) throw std::invalid_argument("group mismatch");
  const Group& g = a.group();
  std::vector<BigInt> out(g.order());
  for (int x = 0; x < g.order(); ++x) {
    if (a.coeff(x) == 0) continue;
    for (int y = 0; y < g.order(); ++y) {
      if (b.coeff(y) == 0) continue;
      out[g.mul(x, y)] += a.coeff(x) * b.coeff(y);
    }
  }
  return GroupRingElement(g, std::move(out));
}

GroupRingElement ring_pow(const GroupRingElement& a, int k) {
  if (k < 1) throw std::invalid_argument("exponent must be positive");
  GroupRingElement acc = basis_element(a.group(), 0);
  GroupRingElement base = a;
  while (k > 0) {
    if (k & 1) acc = ring_mul(acc, base);
    if (k >>= 1) base = ring_mul(base, base);
  }
  return acc;
}

CoeffTransform indicator_transform() {
  return [](const BigInt& a) { return BigInt(a != 0 ? 1 : 0); };
}

CoeffTransform mod_remainder_transform(int p) {
  if (p <= 0) throw std::invalid_argument("modulus must be positive");
  return [p](const BigInt& a) {
    BigInt r = a % p;
    if (r < 0) r += p;
    return r;
  };
}

GroupRingElement coeff_transform(const CoeffTransform& f, const GroupRingElement& xi) {
  std::vector<BigInt> out(xi.group().order());
  for (int x = 0; x < xi.group().order(); ++x) out[x] = f(xi.coeff(x));
  return GroupRingElement(xi.group(), std::move(out));
}

ElementSet support(const GroupRingElement& xi) {
  std::vector<int> s;
  for (int x = 0; x < xi.group().order(); ++x)
    if (xi.coeff(x) != 0) s.push_back(x);
  return ElementSet(std::move(s));
}

ElementSet power_map_set(const Group& g, const ElementSet& x, long long m) {
  std::vector<int> out;
  out.reserve(x.size());
  for (int e : x) out.push_back(g.power(e, m));
  return ElementSet(std::move(out));
}

GroupRingElement power_pushforward(const GroupRingElement& xi, long long m) {
  const Group& g = xi.group();
  std::vector<BigInt> out(g.order());
  for (int x = 0; x < g.order(); ++x)
    if (xi.coeff(x) != 0) out[g.power(x, m)] += xi.coeff(x);
  return GroupRingElement(g, std::move(out));
}

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

GroupRingElement sigma_m(const Group& g, const GroupRingElement& xi, long long m) {
  if (&xi.group() != &g) throw std::invalid_argument("group mismatch");
  long long n = g.order();
  if (gcd_ll(((m % n) + n) % n, n) != 1)
    throw std::invalid_argument("sigma_m requires gcd(m, |G|) = 1");
  if (!xi.is_central())
    throw std::invalid_argument("sigma_m is defined only on central elements");
  // With gcd(m,n)=1 the power map is a bijection taking classes to classes,
  // so the pushforward and the linear extension agree.
  return power_pushforward(xi, m);
}

}  // namespace schur
