#pragma once

#include "gfz/ifs_ideals.hpp"

namespace gfz {

// Extension of A by x: y -> (inf over g of mu(x g y), sup over g of nu(x g y)).
// The constructed pair is verified against the mu + nu <= 1 invariant and
// SumViolationInExtension is raised if it ever failed.
Ifs extend(const GammaSemigroup& g, int x, const Ifs& a);

// Predicate wrappers that tie a verdict to the extension context. The IFI,
// IFPI and IFSPI claims hold on commutative instances only, so those
// wrappers refuse non-commutative instances; the IFRI claim needs no
// commutativity.
IdealVerdict extension_is_ifi(const GammaSemigroup& g, int x, const Ifs& a);
IdealVerdict extension_is_ifri(const GammaSemigroup& g, int x, const Ifs& a);
IdealVerdict extension_is_ifpi(const GammaSemigroup& g, int x, const Ifs& a);
IdealVerdict extension_is_ifspi(const GammaSemigroup& g, int x, const Ifs& a);

// All mu values equal and all nu values equal.
bool is_constant(const Ifs& a);

enum class CheckOutcome { Pass, Fail, HypothesisNotMet };

struct FixedPointResult {
  CheckOutcome outcome = CheckOutcome::Pass;
  int witness = -1;  // mismatching point / pair member, when it failed
  std::string detail;
};

// Forward direction: when mu(x) is minimal over S and nu(x) maximal,
// extension by x must leave A unchanged (A is expected to be an IF prime
// ideal). Reports HypothesisNotMet when x is not extremal.
FixedPointResult fixed_point_forward(const GammaSemigroup& g, const Ifs& a, int x);

// Converse scan: when every y whose mu(y) is not maximal AND nu(y) not
// minimal fixes A under extension, checks the prime equalities. Vacuous
// hypotheses (no qualifying y, e.g. constant A) report HypothesisNotMet
// instead of a pass.
FixedPointResult fixed_point_converse(const GammaSemigroup& g, const Ifs& a);

}  // namespace gfz
