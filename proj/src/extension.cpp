#include "gfz/extension.hpp"

namespace gfz {

Ifs extend(const GammaSemigroup& g, int x, const Ifs& a) {
  if (!a.carrier || !a.carrier->same_as(*g.carrier()))
    throw Error(Errc::CarrierMismatch, "IFS lives on a different carrier");
  if (x < 0 || x >= g.size()) throw Error(Errc::UnknownElement, "extension base out of range");
  Ifs out{g.carrier(), {}, {}};
  out.mu.reserve(g.size());
  out.nu.reserve(g.size());
  for (int y = 0; y < g.size(); ++y) {
    Degree m = a.mu[g.sgs(x, 0, y)];
    Degree n = a.nu[g.sgs(x, 0, y)];
    for (int ga = 1; ga < g.gamma_size(); ++ga) {
      m = degree_min(m, a.mu[g.sgs(x, ga, y)]);
      n = degree_max(n, a.nu[g.sgs(x, ga, y)]);
    }
    if (!sum_within_one(m, n))
      throw Error(Errc::SumViolationInExtension,
                  "extension by '" + g.id(x) + "' broke mu + nu <= 1 at '" + g.id(y) + "'");
    out.mu.push_back(m);
    out.nu.push_back(n);
  }
  return out;
}

namespace {

void require_commutative(const GammaSemigroup& g) {
  if (!is_commutative(g))
    throw Error(Errc::NotCommutative, "this preservation claim needs a commutative instance");
}

}  // namespace

IdealVerdict extension_is_ifi(const GammaSemigroup& g, int x, const Ifs& a) {
  require_commutative(g);
  return is_ifi(g, extend(g, x, a));
}

IdealVerdict extension_is_ifri(const GammaSemigroup& g, int x, const Ifs& a) {
  return is_ifri(g, extend(g, x, a));
}

IdealVerdict extension_is_ifpi(const GammaSemigroup& g, int x, const Ifs& a) {
  require_commutative(g);
  return is_ifpi(g, extend(g, x, a));
}

IdealVerdict extension_is_ifspi(const GammaSemigroup& g, int x, const Ifs& a) {
  require_commutative(g);
  return is_ifspi(g, extend(g, x, a));
}

bool is_constant(const Ifs& a) {
  for (int i = 1; i < a.size(); ++i)
    if (a.mu[i] != a.mu[0] || a.nu[i] != a.nu[0]) return false;
  return true;
}

FixedPointResult fixed_point_forward(const GammaSemigroup& g, const Ifs& a, int x) {
  Degree min_mu = a.mu[0], max_nu = a.nu[0];
  for (int i = 1; i < g.size(); ++i) {
    min_mu = degree_min(min_mu, a.mu[i]);
    max_nu = degree_max(max_nu, a.nu[i]);
  }
  if (a.mu[x] != min_mu || a.nu[x] != max_nu)
    return {CheckOutcome::HypothesisNotMet, x, "base point is not extremal"};
  Ifs ext = extend(g, x, a);
  for (int y = 0; y < g.size(); ++y)
    if (ext.mu[y] != a.mu[y] || ext.nu[y] != a.nu[y])
      return {CheckOutcome::Fail, y, "extension moved the value at '" + g.id(y) + "'"};
  return {CheckOutcome::Pass, -1, ""};
}

FixedPointResult fixed_point_converse(const GammaSemigroup& g, const Ifs& a) {
  Degree max_mu = a.mu[0], min_nu = a.nu[0];
  for (int i = 1; i < g.size(); ++i) {
    max_mu = degree_max(max_mu, a.mu[i]);
    min_nu = degree_min(min_nu, a.nu[i]);
  }
  bool any_qualifying = false;
  for (int y = 0; y < g.size(); ++y) {
    if (a.mu[y] == max_mu || a.nu[y] == min_nu) continue;
    any_qualifying = true;
    Ifs ext = extend(g, y, a);
    if (!ifs_eq(ext, a))
      return {CheckOutcome::HypothesisNotMet, y,
              "extension by qualifying '" + g.id(y) + "' already moves the set"};
  }
  if (!any_qualifying)
    return {CheckOutcome::HypothesisNotMet, -1, "no qualifying element, hypothesis is vacuous"};
  IdealVerdict v = ifpi_conditions(g, a);
  if (!v.holds)
    return {CheckOutcome::Fail, v.x,
            std::string("prime equality '") + v.condition + "' fails at (" + g.id(v.x) + ", " +
                g.id(v.y) + ")"};
  return {CheckOutcome::Pass, -1, ""};
}

}  // namespace gfz
