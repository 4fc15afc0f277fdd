#pragma once

#include "gfz/crisp.hpp"
#include "gfz/ifs.hpp"

namespace gfz {

// Outcome of one ideal-predicate check. A false verdict carries the first
// violating tuple in canonical scan order; unused slots stay -1.
struct IdealVerdict {
  bool holds = true;
  const char* condition = "";  // tag of the inequality that failed
  int x = -1;
  int g = -1;
  int y = -1;

  explicit operator bool() const { return holds; }
};

// Raw inequality checks of the defining conditions. These do not require the
// argument to be nonempty; the is_* wrappers below add that hypothesis.
IdealVerdict ifli_conditions(const GammaSemigroup& g, const Ifs& a);
IdealVerdict ifri_conditions(const GammaSemigroup& g, const Ifs& a);
IdealVerdict ifi_conditions(const GammaSemigroup& g, const Ifs& a);

IdealVerdict is_ifli(const GammaSemigroup& g, const Ifs& a);  // EmptyIFS when a is (0,1)
IdealVerdict is_ifri(const GammaSemigroup& g, const Ifs& a);
IdealVerdict is_ifi(const GammaSemigroup& g, const Ifs& a);

// Constant (1, 0): the characteristic pair of the whole carrier.
Ifs whole_space(const GammaSemigroup& g);

// Sup-min / inf-max composition over factorizations x = u g v; (0, 1) at
// points with no factorization. Uses the per-instance factorization index.
Ifs compose(const GammaSemigroup& g, const Ifs& a, const Ifs& b);

// Equality checks of the prime / semiprime conditions. For an IF ideal the
// inf over gamma automatically dominates the max (and dually for nu), so the
// literal equalities below are the whole content.
IdealVerdict ifpi_conditions(const GammaSemigroup& g, const Ifs& a);
IdealVerdict ifspi_conditions(const GammaSemigroup& g, const Ifs& a);

IdealVerdict is_ifpi(const GammaSemigroup& g, const Ifs& a);   // NotAnIFI unless is_ifi
IdealVerdict is_ifspi(const GammaSemigroup& g, const Ifs& a);  // NotAnIFI unless is_ifi

// { x : mu(x) >= mu(omega), nu(x) <= nu(omega) }. The result is checked to be
// a two-sided ideal before it is returned.
CrispSubset omega_set(const GammaSemigroup& g, const Ifs& a, int omega);

// { x : mu(x) = mu(0), nu(x) = nu(0) } for the designated zero.
CrispSubset zero_set(const GammaSemigroup& g, const Ifs& a);

}  // namespace gfz
