#pragma once

#include <vector>

#include "gfz/gamma_semigroup.hpp"

namespace gfz {

enum class Side { Left, Right, TwoSided };

const char* side_name(Side s);

// Left: s g i stays in I for all s, g; Right: i g s stays in I; TwoSided: both.
// I must be a nonempty subset of the carrier of g.
bool is_ideal(const GammaSemigroup& g, const CrispSubset& subset, Side side);

// { a g b : a in A, g in Gamma, b in B }.
CrispSubset ideal_product(const GammaSemigroup& g, const CrispSubset& a, const CrispSubset& b);

// Least two-sided ideal containing X: fixed point of X -> X u SGX u XGS.
CrispSubset ideal_closure(const GammaSemigroup& g, const CrispSubset& x);
CrispSubset ideal_closure(const GammaSemigroup& g, const CrispSubset& x, Side side);

// All nonempty ideals of the given side, as deduplicated closures of every
// nonempty subset. Hard cap at |S| <= 12 (CarrierTooLarge beyond). Sorted by
// size, then lexicographically on member indexes.
inline constexpr int kEnumerateCarrierCap = 12;
std::vector<CrispSubset> enumerate_ideals(const GammaSemigroup& g, Side side);

enum class PrimeCriterion { Pairs, Sandwich, Subsets };

// Pairs: x G y inside I forces x or y into I. Sandwich uses x G S G y.
// Subsets quantifies over enumerated ideal pairs (and needs the enumeration
// cap). All three agree on every valid instance.
bool is_prime_ideal(const GammaSemigroup& g, const CrispSubset& ideal,
                    PrimeCriterion criterion = PrimeCriterion::Pairs);

// x G x inside I forces x into I.
bool is_semiprime_ideal(const GammaSemigroup& g, const CrispSubset& ideal);

// { y : x g y in A for every g }. A may be any subset of the carrier.
CrispSubset crisp_extension(const GammaSemigroup& g, int x, const CrispSubset& a);

}  // namespace gfz
