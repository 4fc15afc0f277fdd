#pragma once

#include <span>
#include <vector>

#include "gfz/carrier.hpp"
#include "gfz/degree.hpp"

namespace gfz {

// Pair of membership / non-membership maps over a finite carrier, with
// mu(x) + nu(x) <= 1 at every point. Values are exact rationals.
struct Ifs {
  CarrierPtr carrier;
  std::vector<Degree> mu;
  std::vector<Degree> nu;

  int size() const { return carrier ? carrier->size() : 0; }
};

Ifs ifs_build(CarrierPtr carrier, std::vector<Degree> mu, std::vector<Degree> nu);

// Pointwise order: mu_A <= mu_B and nu_A >= nu_B.
bool ifs_leq(const Ifs& a, const Ifs& b);
bool ifs_eq(const Ifs& a, const Ifs& b);

Ifs ifs_complement(const Ifs& a);  // swap (mu, nu)
Ifs ifs_box(const Ifs& a);         // (mu, 1 - mu)
Ifs ifs_diamond(const Ifs& a);     // (1 - nu, nu)

Ifs ifs_meet(const Ifs& a, const Ifs& b);  // (min mu, max nu)
Ifs ifs_join(const Ifs& a, const Ifs& b);  // (max mu, min nu)
Ifs ifs_family_inf(std::span<const Ifs> family);
Ifs ifs_family_sup(std::span<const Ifs> family);

CrispSubset upper_cut(const Ifs& a, const Degree& t);  // { x : mu(x) >= t }
CrispSubset lower_cut(const Ifs& a, const Degree& t);  // { x : nu(x) <= t }

// { x : mu(x) > 0 and nu(x) < 1 }.
CrispSubset support(const Ifs& a);

// (1,0) on P, (0,1) off P.
Ifs characteristic_pair(const CrispSubset& p);

// (a0,b0) on I and (a1,b1) off I, with a1 < a0, b0 < b1, a_i + b_i <= 1.
Ifs step_ifs(const CrispSubset& i, const Degree& a0, const Degree& a1, const Degree& b0,
             const Degree& b1);

// Nonempty in the sense used for ideal predicates: some point has mu > 0 or
// nu < 1.
bool ifs_nonempty(const Ifs& a);

// Sorted distinct values of Im(mu) u Im(nu); the sweep grid for cut checks.
std::vector<Degree> degree_images(const Ifs& a);
// Sorted distinct values of Im(mu) n Im(nu).
std::vector<Degree> degree_images_common(const Ifs& a);

}  // namespace gfz
