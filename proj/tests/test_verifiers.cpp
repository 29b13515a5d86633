#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schur/verifiers.hpp"
#include "test_util.hpp"

using namespace schur;

namespace {

ElementSet quadratic_residues(int p) {
  std::vector<int> qr;
  for (int k = 1; k < p; ++k) qr.push_back(static_cast<int>((static_cast<long long>(k) * k) % p));
  return ElementSet(std::move(qr));
}

}  // namespace

TEST_CASE("multiplier congruence checker") {
  Group s3 = build_symmetric(3);
  CHECK(check_multiplier_congruence(s3, 0, 7).verdict == Verdict::Confirmed);
  CHECK(check_multiplier_congruence(s3, 2, 3).verdict == Verdict::Confirmed);
  CHECK(check_multiplier_congruence(s3, 2, 5).verdict == Verdict::Confirmed);
  CHECK_THROWS_AS(check_multiplier_congruence(s3, 2, 6), std::invalid_argument);

  Group q8 = build_quaternion();
  for (int i = 0; i < q8.num_classes(); ++i)
    for (int p : {2, 3, 5, 7, 11, 13})
      CHECK(check_multiplier_congruence(q8, i, p).verdict == Verdict::Confirmed);
}

TEST_CASE("centralizer congruence checker") {
  Group s3 = build_symmetric(3);
  CHECK(check_centralizer_congruence(s3, 3).verdict == Verdict::Confirmed);
  CHECK(check_centralizer_congruence(s3, 2).verdict == Verdict::OutOfScope);

  Group d18 = build_dihedral(18);
  CHECK(check_centralizer_congruence(d18, 3).verdict == Verdict::Confirmed);

  Group f20 = build_frobenius(5, 4);
  CHECK(check_centralizer_congruence(f20, 5).verdict == Verdict::Confirmed);

  Group z12 = build_cyclic(12);
  CHECK(check_centralizer_congruence(z12, 2).verdict == Verdict::Confirmed);
  CHECK(check_centralizer_congruence(z12, 3).verdict == Verdict::Confirmed);
}

TEST_CASE("coset lemma checker") {
  Group s3 = build_symmetric(3);
  CHECK(check_coset_lemma(s3, 3).verdict == Verdict::Confirmed);

  Group z12 = build_cyclic(12);
  CHECK(check_coset_lemma(z12, 3).verdict == Verdict::Confirmed);

  Group d18 = build_dihedral(18);
  CHECK(check_coset_lemma(d18, 3).verdict == Verdict::Confirmed);

  Group a5 = build_alternating(5);
  CHECK(check_coset_lemma(a5, 5).verdict == Verdict::OutOfScope);
}

TEST_CASE("wielandt central check") {
  for (auto&& g : {build_cyclic(4), build_cyclic(6), build_cyclic(9), build_cyclic(12),
                   build_symmetric(3), build_dihedral(18), build_frobenius(7, 3),
                   build_frobenius(5, 4)})
    CHECK(wielandt_central_check(g).verdict == Verdict::Confirmed);

  CHECK(wielandt_central_check(build_cyclic(7)).verdict == Verdict::OutOfScope);
  CHECK(wielandt_central_check(build_alternating(5)).verdict == Verdict::OutOfScope);
  CHECK(wielandt_central_check(build_quaternion()).verdict == Verdict::OutOfScope);
}

TEST_CASE("camina pairs") {
  Group s3 = build_symmetric(3);
  auto ps = camina_pairs(s3);
  REQUIRE(ps.size() == 1);
  CHECK(ps[0].h.members.size() == 3);  // A3

  Group d8 = build_dihedral(8);
  auto pd = camina_pairs(d8);
  REQUIRE(pd.size() == 1);
  CHECK(pd[0].h.members == ElementSet({0, 2}));  // the center

  Group q8 = build_quaternion();
  auto pq = camina_pairs(q8);
  REQUIRE(pq.size() == 1);
  CHECK(pq[0].h.members == ElementSet({0, 1}));  // {1, -1}

  Group f21 = build_frobenius(7, 3);
  auto pf = camina_pairs(f21);
  REQUIRE(pf.size() == 1);
  CHECK(pf[0].h.members == ElementSet({0, 1, 2, 3, 4, 5, 6}));  // Z7

  CHECK(camina_pairs(build_cyclic(6)).empty());

  // independent re-verification of the pair invariant by coset scan
  for (auto [gptr, pairs] : std::vector<std::pair<const Group*, std::vector<CaminaPair>*>>{
           {&s3, &ps}, {&d8, &pd}, {&q8, &pq}, {&f21, &pf}}) {
    const Group& g = *gptr;
    for (const auto& pair : *pairs) {
      CHECK(is_normal(g, pair.h.members));
      for (int x = 0; x < g.order(); ++x) {
        if (pair.h.members.contains(x)) continue;
        int cls = g.class_of(x);
        for (int hh : pair.h.members) CHECK(g.class_of(g.mul(hh, x)) == cls);
      }
    }
  }
}

TEST_CASE("camina groups are generalized B-groups") {
  for (auto&& g : {build_symmetric(3), build_dihedral(8), build_quaternion(),
                   build_frobenius(7, 3), build_frobenius(5, 4), build_alternating(4)})
    CHECK(camina_b_group_check(g).verdict == Verdict::Confirmed);

  CHECK(camina_b_group_check(build_cyclic(6)).verdict == Verdict::OutOfScope);
}

TEST_CASE("camina check on the extraspecial group of order 27") {
  Group e27 = build_extraspecial(3);
  CHECK(!camina_pairs(e27).empty());
  Diagnosis d = camina_b_group_check(e27);
  CHECK(d.verdict == Verdict::Confirmed);
}

TEST_CASE("separating subgroup checker") {
  Group s3 = build_symmetric(3);
  SRing ca = SRing::class_algebra(s3);
  // transpositions never meet A3
  ElementSet a3({0, 3, 4});
  CHECK(separating_subgroup_check(ca, 2, a3).verdict == Verdict::OutOfScope);

  // trivial ring over Z6, H = {0,3}: hypothesis and both conclusions hold
  Group z6 = build_cyclic(6);
  SRing tz = SRing::trivial(z6);
  Diagnosis d = separating_subgroup_check(tz, 1, ElementSet({0, 3}));
  CHECK(d.verdict == Verdict::Confirmed);

  // reflections of D18 never meet the rotation subgroup of order 3
  Group d18 = build_dihedral(18);
  SRing cd = SRing::class_algebra(d18);
  int refl = cd.rank() - 1;
  CHECK(cd.basic_set(refl).size() == 9);
  CHECK(separating_subgroup_check(cd, refl, ElementSet({0, 3, 6})).verdict ==
        Verdict::OutOfScope);

  CHECK_THROWS_AS(separating_subgroup_check(ca, 2, ElementSet({0, 3})),
                  std::invalid_argument);
}

TEST_CASE("separating subgroup: inflated H is flagged, not refuted") {
  // Over D8 take the ring {e | r,r2,r3 | reflections}, X the rotation part
  // and H the Klein subgroup {e, r2, s, sr2}. The hypothesis constrains H
  // only through X n H = {r2}, so H may contain elements outside <X>; the
  // core conclusion still holds.
  Group d8 = build_dihedral(8);
  SRing a = SRing::from_partition(
      d8, {ElementSet::single(0), ElementSet({1, 2, 3}), ElementSet({4, 5, 6, 7})});
  Diagnosis d = separating_subgroup_check(a, 1, ElementSet({0, 2, 4, 6}));
  CHECK(d.verdict == Verdict::Confirmed);
  CHECK(d.notes.find("manual review") != std::string::npos);

  // the uninflated H = <r2> satisfies the full conclusion
  Diagnosis clean = separating_subgroup_check(a, 1, ElementSet({0, 2}));
  CHECK(clean.verdict == Verdict::Confirmed);
  CHECK(clean.notes.find("manual review") == std::string::npos);
}

TEST_CASE("separating subgroup bulk scan never refutes") {
  for (auto&& g : {build_cyclic(6), build_dihedral(8), build_symmetric(4),
                   build_frobenius(5, 4), build_dihedral(18)}) {
    for (const auto& a : enumerate_central_srings(g)) {
      Diagnosis d = separating_subgroup_bulk(a);
      CHECK(d.verdict != Verdict::Refuted);
    }
  }
}

TEST_CASE("simple group witness for A5") {
  Group a5 = build_alternating(5);
  Diagnosis d = simple_group_witness(a5);
  CHECK(d.verdict == Verdict::Confirmed);
  REQUIRE(d.witness_srings.size() == 1);
  const SRing& w = d.witness_srings[0];
  CHECK(w.rank() == 4);
  CHECK(is_proper_central(w));
  CHECK(is_primitive(w));
  CHECK(testutil::brute_force_primitive(w));
}

TEST_CASE("simple group witness preconditions") {
  CHECK(simple_group_witness(build_cyclic(5)).verdict == Verdict::OutOfScope);
  CHECK(simple_group_witness(build_symmetric(4)).verdict == Verdict::OutOfScope);
}

TEST_CASE("product rank-3 construction") {
  Group z3 = build_cyclic(3);
  ProductRank3Result r = build_product_rank3(z3, z3);
  CHECK(r.sring.rank() == 3);
  CHECK(r.sring.is_central());
  CHECK(is_primitive(r.sring));
  CHECK(r.diagnosis.verdict == Verdict::Confirmed);

  Group z2 = build_cyclic(2);
  ProductRank3Result r2 = build_product_rank3(z2, z2);
  CHECK(r2.sring.rank() == 3);
  CHECK(r2.sring.is_central());
  CHECK(!is_primitive(r2.sring));
  CHECK(r2.diagnosis.verdict == Verdict::OutOfScope);
  // the witness A-subgroup {e, (1,1)}
  CHECK(is_subgroup(*r2.product, ElementSet({0, 3})));

  Group s3 = build_symmetric(3);
  ProductRank3Result r3 = build_product_rank3(s3, s3);
  CHECK(r3.sring.rank() == 3);
  CHECK(r3.sring.is_central());
  CHECK(is_primitive(r3.sring));

  CHECK_THROWS_AS(build_product_rank3(z3, z2), std::invalid_argument);
}

TEST_CASE("skew hadamard rank-3 rings") {
  Group z7 = build_cyclic(7);
  auto [ring, diag] = skew_hadamard_rank3(z7, ElementSet({1, 2, 4}));
  CHECK(ring.rank() == 3);
  CHECK(diag.verdict == Verdict::Confirmed);
  CHECK(is_primitive(ring));
  CHECK(ring.constants().c(1, 2, 0) == 3);  // XY = 3e + 1(X+Y)

  Group z3 = build_cyclic(3);
  auto [ring3, diag3] = skew_hadamard_rank3(z3, ElementSet::single(1));
  CHECK(ring3.rank() == 3);

  CHECK_THROWS_AS(skew_hadamard_rank3(z7, ElementSet({1, 2, 3})), IdentityFailsError);
  CHECK_THROWS_AS(skew_hadamard_rank3(z7, ElementSet({1, 2, 6})), NotSkewError);
  CHECK_THROWS_AS(skew_hadamard_rank3(build_cyclic(4), ElementSet({1})),
                  std::invalid_argument);
}

TEST_CASE("paley quadratic residue family") {
  for (int p : {3, 7, 11, 19, 23}) {
    Group zp = build_cyclic(p);
    auto [ring, diag] = skew_hadamard_rank3(zp, quadratic_residues(p));
    CHECK(diag.verdict == Verdict::Confirmed);
    CHECK(ring.rank() == 3);
    if (p >= 7) CHECK(is_primitive(ring));
  }
}

TEST_CASE("generalized B-group diagnostic") {
  CHECK(generalized_b_group_diagnostic(build_symmetric(3)).verdict == Verdict::Confirmed);
  CHECK(generalized_b_group_diagnostic(build_dihedral(8)).verdict == Verdict::Confirmed);

  Diagnosis a5 = generalized_b_group_diagnostic(build_alternating(5));
  CHECK(a5.verdict == Verdict::Refuted);
  REQUIRE(!a5.witness_srings.empty());
  CHECK(a5.witness_srings[0].rank() == 4);

  Group z3 = build_cyclic(3);
  Group e9 = direct_product(z3, z3);
  Diagnosis d9 = generalized_b_group_diagnostic(e9);
  CHECK(d9.verdict == Verdict::Refuted);
  bool has_rank3 = false;
  for (const auto& w : d9.witness_srings)
    if (w.rank() == 3) has_rank3 = true;
  CHECK(has_rank3);

  CHECK(generalized_b_group_diagnostic(build_cyclic(15)).verdict == Verdict::OutOfScope);
}

TEST_CASE("normal subgroup scan matches a direct filter") {
  for (auto&& g : {build_symmetric(4), build_dihedral(12), build_quaternion()}) {
    auto normals = normal_subgroups(g);
    // every class-closed subgroup must appear
    for (const auto& h : normals) {
      CHECK(is_subgroup(g, h.members));
      CHECK(is_normal(g, h.members));
    }
    // and the count matches a brute-force scan over unions of classes
    int k = g.num_classes();
    REQUIRE(k <= 20);
    int count = 0;
    for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
      ElementSet u = ElementSet::single(0);
      for (int i = 1; i < k; ++i)
        if (mask & (1u << (i - 1))) u = u.unite(g.classes().classes[i]);
      if (is_subgroup(g, u)) ++count;
    }
    CHECK(count == static_cast<int>(normals.size()));
  }
}
