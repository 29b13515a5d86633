#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "schur/rationality.hpp"
#include "schur/sring.hpp"

namespace schur {

enum class Verdict { Confirmed, Refuted, OutOfScope };
std::string verdict_name(Verdict v);

/// Outcome of one theorem/construction check. Refuted always carries at
/// least one witness; OutOfScope means the hypothesis was not met, never
/// that the check failed.
struct Diagnosis {
  std::string check;
  std::string subject;
  Verdict verdict = Verdict::OutOfScope;
  std::string notes;
  std::vector<SRing> witness_srings;
  std::vector<ElementSet> witness_sets;
};

struct CaminaPair {
  Subgroup h;
};

class NotSkewError : public std::runtime_error {
 public:
  explicit NotSkewError(const std::string& msg) : std::runtime_error(msg) {}
};

class IdentityFailsError : public std::runtime_error {
 public:
  explicit IdentityFailsError(const std::string& msg) : std::runtime_error(msg) {}
};

/// All normal subgroups of G, as the subgroup-unions of conjugacy classes
/// (the A-subgroups of the class algebra).
std::vector<Subgroup> normal_subgroups(const Group& g);
std::vector<Subgroup> cyclic_subgroups(const Group& g);

/// Lemma on class powers: X^p = sum a_Y Y with a_Y |Y| = |X| (mod p) for
/// Y = X^(p) and 0 (mod p) otherwise; p need not be coprime to |G|.
Diagnosis check_multiplier_congruence(const Group& g, int class_index, int p);

/// Sylow congruence: with a normal cyclic Sylow p-subgroup P, every class Y
/// has Y^p = sum_y y^p (mod p) if Y lies in C_G(P) and Y^p = 0 (mod p)
/// otherwise. The right side keeps multiplicities: y -> y^p need not be
/// injective when p divides |G|.
Diagnosis check_centralizer_congruence(const Group& g, int p);

/// Coset lemma: H the order-p subgroup of P; every x has Hx inside x^G or
/// lies in C_G(P).
Diagnosis check_coset_lemma(const Group& g, int p);

/// Wielandt-type theorem: over a group of composite order with a normal
/// cyclic Sylow subgroup, every nontrivial central S-ring is imprimitive.
/// Enumerates all of them; a Refuted verdict would falsify the theorem and
/// is treated as a fatal regression by callers.
Diagnosis wielandt_central_check(const Group& g, const EnumLimits& limits = {});

/// All proper nontrivial normal H such that every coset Hx != H lies inside
/// one conjugacy class.
std::vector<CaminaPair> camina_pairs(const Group& g);

/// Camina groups are generalized B-groups: no proper central S-ring over a
/// detected Camina group may be primitive.
Diagnosis camina_b_group_check(const Group& g, const EnumLimits& limits = {});

/// Separating-subgroup theorem for one (A, X, H): if X meets H and its
/// complement and <X n H> <= rad(X \ H), then X = <X> \ rad(X) and
/// rad(X) <= H <= <X>. Hypothesis unmet gives OutOfScope.
Diagnosis separating_subgroup_check(const SRing& a, int basic_index, const ElementSet& h);

/// Runs the separating check over all basic sets and all candidate H
/// (class-union subgroups plus cyclic subgroups); any conclusion failure is
/// reported for manual review.
Diagnosis separating_subgroup_bulk(const SRing& a);

/// Witness that a noncyclic, non-rational simple group is not a generalized
/// B-group: the rational closure of Z(ZG) is proper, primitive, of rank >= 3.
Diagnosis simple_group_witness(const Group& g);

struct ProductRank3Result {
  std::shared_ptr<Group> product;  // keeps the S-ring's group alive
  SRing sring;
  Diagnosis diagnosis;
};
/// The rank-3 central S-ring {e} | (e x G2# u G1# x e) | rest over G1 x G2
/// with |G1| = |G2| > 1. Primitivity is checked, not assumed: it fails for
/// order 2 factors.
ProductRank3Result build_product_rank3(const Group& g1, const Group& g2,
                                       int size_cap = kDefaultSizeCap);

/// Verifies X is a skew Hadamard difference set (X and X^-1 partition G#),
/// checks X Y = |X| e + ((|X|-1)/2)(X + Y) exactly, and builds the rank-3
/// S-ring {e}, X, X^-1. Throws NotSkewError / IdentityFailsError.
std::pair<SRing, Diagnosis> skew_hadamard_rank3(const Group& g, const ElementSet& x);

/// Full enumeration verdict: Confirmed iff no proper central S-ring over G
/// is primitive; Refuted carries every proper primitive one as witness.
Diagnosis generalized_b_group_diagnostic(const Group& g, const EnumLimits& limits = {});

}  // namespace schur
