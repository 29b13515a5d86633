#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "schur/group_ring.hpp"
#include "test_util.hpp"

using namespace schur;

namespace {

GroupRingElement random_element(const Group& g, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<BigInt> c(g.order());
  for (auto& v : c) v = d(rng);
  return GroupRingElement(g, std::move(c));
}

GroupRingElement random_central(const Group& g, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<BigInt> c(g.order());
  for (const auto& cls : g.classes().classes) {
    BigInt v = d(rng);
    for (int x : cls) c[x] = v;
  }
  return GroupRingElement(g, std::move(c));
}

}  // namespace

TEST_CASE("set sums") {
  Group g = build_symmetric(3);
  CHECK(set_sum(g, ElementSet::single(0)) == basis_element(g, 0));
  GroupRingElement all = set_sum(g, full_set(g));
  for (int x = 0; x < 6; ++x) CHECK(all.coeff(x) == 1);
  CHECK(set_sum(g, ElementSet()).is_zero());
}

TEST_CASE("ring multiplication matches direct convolution") {
  Group s3 = build_symmetric(3);
  const ElementSet& t = s3.classes().classes[2];  // transpositions
  const ElementSet& c = s3.classes().classes[1];  // 3-cycles
  GroupRingElement sq = ring_mul(set_sum(s3, t), set_sum(s3, t));
  CHECK(sq.coeff(0) == 3);
  for (int x : c) CHECK(sq.coeff(x) == 3);
  for (int x : t) CHECK(sq.coeff(x) == 0);

  std::mt19937 rng(3);
  GroupRingElement xi = random_element(s3, rng);
  CHECK(ring_mul(basis_element(s3, 0), xi) == xi);

  Group z7 = build_cyclic(7);
  ElementSet x({1, 2, 4}), y({3, 5, 6});
  GroupRingElement prod = ring_mul(set_sum(z7, x), set_sum(z7, y));
  CHECK(prod.coeff(0) == 3);
  for (int w = 1; w < 7; ++w) CHECK(prod.coeff(w) == 1);

  Group z5 = build_cyclic(5);
  CHECK_THROWS_AS(ring_mul(basis_element(z7, 1), basis_element(z5, 1)),
                  std::invalid_argument);
}

TEST_CASE("ring_mul is associative, bilinear, commutative on central elements") {
  std::vector<Group> groups;
  groups.push_back(build_symmetric(3));
  groups.push_back(build_quaternion());
  groups.push_back(build_frobenius(5, 4));
  std::mt19937 rng(17);
  for (const Group& g : groups) {
    for (int trial = 0; trial < 8; ++trial) {
      GroupRingElement a = random_element(g, rng), b = random_element(g, rng),
                       c = random_element(g, rng);
      CHECK(ring_mul(ring_mul(a, b), c) == ring_mul(a, ring_mul(b, c)));
      CHECK(ring_mul(a + b, c) == ring_mul(a, c) + ring_mul(b, c));
      GroupRingElement za = random_central(g, rng), zb = random_central(g, rng);
      CHECK(ring_mul(za, zb) == ring_mul(zb, za));
      CHECK(ring_mul(za, zb).is_central());
    }
  }
}

TEST_CASE("ring_pow") {
  Group s3 = build_symmetric(3);
  CHECK(ring_pow(basis_element(s3, 0), 5) == basis_element(s3, 0));
  int t = s3.classes().classes[2].elems()[0];
  CHECK(ring_pow(basis_element(s3, t), s3.element_order(t)) == basis_element(s3, 0));
  const ElementSet& transpositions = s3.classes().classes[2];
  GroupRingElement sq = ring_pow(set_sum(s3, transpositions), 2);
  CHECK(sq == ring_mul(set_sum(s3, transpositions), set_sum(s3, transpositions)));
  CHECK_THROWS_AS(ring_pow(basis_element(s3, 0), 0), std::invalid_argument);
}

TEST_CASE("coefficient transforms and support") {
  Group s3 = build_symmetric(3);
  const ElementSet& t = s3.classes().classes[2];
  GroupRingElement sq = ring_pow(set_sum(s3, t), 2);  // 3e + 3C
  GroupRingElement ind = coeff_transform(indicator_transform(), sq);
  CHECK(support(ind) == support(sq));
  for (int x : support(ind)) CHECK(ind.coeff(x) == 1);

  CHECK(coeff_transform(mod_remainder_transform(5), sq) == sq);
  CHECK(coeff_transform(mod_remainder_transform(3), sq).is_zero());

  CHECK(support(GroupRingElement::zero(s3)).empty());
  CHECK(support(set_sum(s3, t)) == t);

  // remainders land in [0, p) even for negative inputs
  GroupRingElement neg = basis_element(s3, 0) * BigInt(-7);
  CHECK(coeff_transform(mod_remainder_transform(5), neg).coeff(0) == 3);
}

TEST_CASE("power map on sets") {
  Group a5 = build_alternating(5);
  int five_a = -1, five_b = -1;
  for (int i = 0; i < a5.num_classes(); ++i)
    if (a5.classes().classes[i].size() == 12) (five_a < 0 ? five_a : five_b) = i;
  REQUIRE(five_b > 0);
  const ElementSet& xa = a5.classes().classes[five_a];
  CHECK(power_map_set(a5, xa, 1) == xa);
  CHECK(power_map_set(a5, xa, 2) == a5.classes().classes[five_b]);

  Group z6 = build_cyclic(6);
  CHECK(power_map_set(z6, ElementSet::single(1), 5) == ElementSet::single(5));
  CHECK(power_map_set(z6, ElementSet::single(1), 0) == ElementSet::single(0));
  CHECK(power_map_set(z6, ElementSet::single(1), -1) == ElementSet::single(5));

  // |X^(m)| = |X| whenever gcd(m, |G|) = 1
  for (const auto& cls : a5.classes().classes)
    for (long long m : {7, 11, 13})
      CHECK(power_map_set(a5, cls, m).size() == cls.size());
}

TEST_CASE("sigma_m") {
  Group s3 = build_symmetric(3);
  CHECK(sigma_m(s3, basis_element(s3, 0), 5) == basis_element(s3, 0));
  for (int i = 0; i < s3.num_classes(); ++i) {
    GroupRingElement cs = set_sum(s3, s3.classes().classes[i]);
    CHECK(sigma_m(s3, cs, 5) == cs);
  }

  Group a5 = build_alternating(5);
  int five_a = -1, five_b = -1;
  for (int i = 0; i < a5.num_classes(); ++i)
    if (a5.classes().classes[i].size() == 12) (five_a < 0 ? five_a : five_b) = i;
  GroupRingElement xa = set_sum(a5, a5.classes().classes[five_a]);
  GroupRingElement xb = set_sum(a5, a5.classes().classes[five_b]);
  // m = 7 is coprime to 60 and acts as squaring on order-5 elements.
  CHECK(sigma_m(a5, xa, 7) == xb);
  CHECK_THROWS_AS(sigma_m(a5, xa, 2), std::invalid_argument);

  CHECK_THROWS_AS(sigma_m(s3, basis_element(s3, 0), 3), std::invalid_argument);
  int t = s3.classes().classes[2].elems()[0];
  CHECK_THROWS_AS(sigma_m(s3, basis_element(s3, t), 5), std::invalid_argument);
}

TEST_CASE("sigma_mm' = sigma_m sigma_m' on central elements") {
  std::vector<Group> groups;
  groups.push_back(build_alternating(5));
  groups.push_back(build_dihedral(14));
  groups.push_back(build_cyclic(9));
  std::mt19937 rng(23);
  for (const Group& g : groups) {
    long long n = g.order();
    for (auto [m1, m2] : std::vector<std::pair<long long, long long>>{
             {7, 11}, {11, 13}, {13, 17}}) {
      if (gcd_ll(m1, n) != 1 || gcd_ll(m2, n) != 1) continue;
      GroupRingElement xi = random_central(g, rng);
      CHECK(sigma_m(g, xi, m1 * m2) == sigma_m(g, sigma_m(g, xi, m2), m1));
    }
  }
}

// For every class X and prime p coprime to |G|: X^p = X^(p) coefficientwise
// mod p (the congruence behind the multiplier theorem).
TEST_CASE("frobenius congruence for coprime primes") {
  std::vector<Group> groups;
  groups.push_back(build_symmetric(3));
  groups.push_back(build_quaternion());
  groups.push_back(build_dihedral(18));
  for (const Group& g : groups) {
    for (int p : {5, 7, 11, 13}) {
      if (g.order() % p == 0) continue;
      for (const auto& cls : g.classes().classes) {
        GroupRingElement pw = ring_pow(set_sum(g, cls), p);
        GroupRingElement img = set_sum(g, power_map_set(g, cls, p));
        GroupRingElement diff = pw - img;
        for (int x = 0; x < g.order(); ++x) CHECK(diff.coeff(x) % p == 0);
      }
    }
  }
}

// The class-power congruence with no coprimality assumption: writing
// X^p = sum a_Y Y over classes, a_Y |Y| = |X| (mod p) exactly at Y = X^(p)
// and 0 (mod p) elsewhere.
TEST_CASE("class power congruence for all primes up to 13") {
  std::vector<Group> groups;
  groups.push_back(build_symmetric(3));
  groups.push_back(build_dihedral(8));
  groups.push_back(build_quaternion());
  groups.push_back(build_dihedral(18));
  groups.push_back(build_alternating(4));
  groups.push_back(build_frobenius(7, 3));
  for (const Group& g : groups) {
    for (int p : {2, 3, 5, 7, 11, 13}) {
      for (const auto& cls : g.classes().classes) {
        GroupRingElement pw = ring_pow(set_sum(g, cls), p);
        ElementSet image = power_map_set(g, cls, p);
        for (const auto& y : g.classes().classes) {
          const BigInt& a = pw.coeff(y.elems().front());
          for (int w : y) REQUIRE(pw.coeff(w) == a);  // central
          BigInt expected = (y == image) ? BigInt(cls.size()) : BigInt(0);
          CHECK((a * y.size() - expected) % p == 0);
        }
      }
    }
  }
}

TEST_CASE("power pushforward keeps multiplicities") {
  // On the 3-cycle class of S3 cubing is 2-to-1 onto {e}.
  Group s3 = build_symmetric(3);
  const ElementSet& c = s3.classes().classes[1];
  GroupRingElement push = power_pushforward(set_sum(s3, c), 3);
  CHECK(push.coeff(0) == 2);
  CHECK(power_map_set(s3, c, 3) == ElementSet::single(0));
}
