#pragma once

#include <complex>
#include <vector>

#include "schur/group_ring.hpp"
#include "schur/sring.hpp"

namespace schur {

/// Raised when a computation contradicts a proved theorem; this always means
/// an implementation bug and is treated as fatal by the CLI.
class TheoremViolation : public std::logic_error {
 public:
  explicit TheoremViolation(const std::string& msg) : std::logic_error(msg) {}
};

/// The permutation of conjugacy classes induced by x -> x^m, gcd(m,|G|) = 1.
struct MultiplierAction {
  long long m;
  std::vector<int> class_perm;
};
MultiplierAction multiplier_action(const Group& g, long long m);

/// All residues m in [1, n) coprime to n (just {1} for n = 1).
std::vector<long long> coprime_residues(int n);

/// The induced permutation X -> X^(m) of the basic sets of a central S-ring.
/// Throws TheoremViolation if some image fails to be a basic set, which
/// would falsify the multiplier theorem.
std::vector<int> sigma_action(const SRing& a, long long m);

struct AutomorphismReport {
  long long m = 0;
  long long triples_checked = 0;
};
/// Checks c_{X^(m) Y^(m)}^{Z^(m)} = c_{XY}^Z over all basic triples; throws
/// TheoremViolation on any mismatch.
AutomorphismReport verify_automorphism(const SRing& a, long long m);

/// tr(X): the union of X^(m) over all m coprime to |G|.
ElementSet trace_set(const Group& g, const ElementSet& x);

struct TraceClosure {
  std::vector<std::vector<int>> orbits;  // sigma-orbits of the original's basic sets
  SRing closed;
};
/// The fusion of a central S-ring by the sigma_m-orbits of its basic sets,
/// revalidated as an S-ring.
TraceClosure rational_closure(const SRing& a);

/// True iff every sigma_m fixes every basic set.
bool is_rational(const SRing& a);

/// Numeric table of the irreducible characters of a commutative S-ring,
/// found as the common eigenvectors of the left-multiplication matrices.
struct CharacterTable {
  int rank = 0;
  std::vector<std::vector<std::complex<double>>> values;  // row = character
  double residual = 0.0;
};
CharacterTable central_characters(const SRing& a, unsigned long long seed = 42);

/// Theorem-level rationality test: every character value within tol of an
/// integer (values on basic-set sums are algebraic integers, so rational
/// means rational integer).
bool is_rational_numeric(const CharacterTable& table, double tol = 1e-8);
bool is_rational_numeric(const SRing& a, double tol = 1e-8, unsigned long long seed = 42);

}  // namespace schur
