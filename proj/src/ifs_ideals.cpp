#include "gfz/ifs_ideals.hpp"

namespace gfz {

namespace {

void require_on(const GammaSemigroup& g, const Ifs& a) {
  if (!a.carrier || !a.carrier->same_as(*g.carrier()))
    throw Error(Errc::CarrierMismatch, "IFS lives on a different carrier");
}

void require_nonempty_ifs(const Ifs& a) {
  if (!ifs_nonempty(a))
    throw Error(Errc::EmptyIfs, "predicate needs a nonempty IFS (some mu > 0 or nu < 1)");
}

IdealVerdict translation_conditions(const GammaSemigroup& g, const Ifs& a, bool left,
                                    bool right) {
  require_on(g, a);
  for (int x = 0; x < g.size(); ++x)
    for (int ga = 0; ga < g.gamma_size(); ++ga)
      for (int y = 0; y < g.size(); ++y) {
        int p = g.sgs(x, ga, y);
        if (left) {
          if (a.mu[p] < a.mu[y]) return {false, "mu-left", x, ga, y};
          if (a.nu[y] < a.nu[p]) return {false, "nu-left", x, ga, y};
        }
        if (right) {
          if (a.mu[p] < a.mu[x]) return {false, "mu-right", x, ga, y};
          if (a.nu[x] < a.nu[p]) return {false, "nu-right", x, ga, y};
        }
      }
  return {};
}

}  // namespace

IdealVerdict ifli_conditions(const GammaSemigroup& g, const Ifs& a) {
  return translation_conditions(g, a, true, false);
}

IdealVerdict ifri_conditions(const GammaSemigroup& g, const Ifs& a) {
  return translation_conditions(g, a, false, true);
}

IdealVerdict ifi_conditions(const GammaSemigroup& g, const Ifs& a) {
  return translation_conditions(g, a, true, true);
}

IdealVerdict is_ifli(const GammaSemigroup& g, const Ifs& a) {
  require_nonempty_ifs(a);
  return ifli_conditions(g, a);
}

IdealVerdict is_ifri(const GammaSemigroup& g, const Ifs& a) {
  require_nonempty_ifs(a);
  return ifri_conditions(g, a);
}

IdealVerdict is_ifi(const GammaSemigroup& g, const Ifs& a) {
  require_nonempty_ifs(a);
  return ifi_conditions(g, a);
}

Ifs whole_space(const GammaSemigroup& g) {
  return characteristic_pair(CrispSubset::universe(g.carrier()));
}

Ifs compose(const GammaSemigroup& g, const Ifs& a, const Ifs& b) {
  require_on(g, a);
  require_on(g, b);
  const auto& fact = g.factorizations();
  Ifs out{g.carrier(), {}, {}};
  out.mu.reserve(g.size());
  out.nu.reserve(g.size());
  for (int x = 0; x < g.size(); ++x) {
    Degree m = Degree::zero();
    Degree n = Degree::one();
    for (const auto& [u, ga, v] : fact[x]) {
      (void)ga;
      m = degree_max(m, degree_min(a.mu[u], b.mu[v]));
      n = degree_min(n, degree_max(a.nu[u], b.nu[v]));
    }
    out.mu.push_back(m);
    out.nu.push_back(n);
  }
  return out;
}

IdealVerdict ifpi_conditions(const GammaSemigroup& g, const Ifs& a) {
  require_on(g, a);
  for (int x = 0; x < g.size(); ++x)
    for (int y = 0; y < g.size(); ++y) {
      Degree inf_mu = a.mu[g.sgs(x, 0, y)];
      Degree sup_nu = a.nu[g.sgs(x, 0, y)];
      for (int ga = 1; ga < g.gamma_size(); ++ga) {
        inf_mu = degree_min(inf_mu, a.mu[g.sgs(x, ga, y)]);
        sup_nu = degree_max(sup_nu, a.nu[g.sgs(x, ga, y)]);
      }
      if (inf_mu != degree_max(a.mu[x], a.mu[y])) return {false, "mu-prime-eq", x, -1, y};
      if (sup_nu != degree_min(a.nu[x], a.nu[y])) return {false, "nu-prime-eq", x, -1, y};
    }
  return {};
}

IdealVerdict ifspi_conditions(const GammaSemigroup& g, const Ifs& a) {
  require_on(g, a);
  for (int x = 0; x < g.size(); ++x) {
    Degree inf_mu = a.mu[g.sgs(x, 0, x)];
    Degree sup_nu = a.nu[g.sgs(x, 0, x)];
    for (int ga = 1; ga < g.gamma_size(); ++ga) {
      inf_mu = degree_min(inf_mu, a.mu[g.sgs(x, ga, x)]);
      sup_nu = degree_max(sup_nu, a.nu[g.sgs(x, ga, x)]);
    }
    if (a.mu[x] < inf_mu) return {false, "mu-semiprime", x, -1, -1};
    if (sup_nu < a.nu[x]) return {false, "nu-semiprime", x, -1, -1};
  }
  return {};
}

namespace {

void require_ifi(const GammaSemigroup& g, const Ifs& a) {
  require_nonempty_ifs(a);
  IdealVerdict v = ifi_conditions(g, a);
  if (!v.holds)
    throw Error(Errc::NotAnIfi,
                std::string("argument is not an IF ideal (") + v.condition + " fails)");
}

}  // namespace

IdealVerdict is_ifpi(const GammaSemigroup& g, const Ifs& a) {
  require_ifi(g, a);
  return ifpi_conditions(g, a);
}

IdealVerdict is_ifspi(const GammaSemigroup& g, const Ifs& a) {
  require_ifi(g, a);
  return ifspi_conditions(g, a);
}

namespace {

CrispSubset checked_ideal(const GammaSemigroup& g, CrispSubset s, const char* what) {
  if (!is_ideal(g, s, Side::TwoSided))
    throw Error(Errc::Internal, std::string(what) + " failed its ideal postcondition");
  return s;
}

}  // namespace

CrispSubset omega_set(const GammaSemigroup& g, const Ifs& a, int omega) {
  require_ifi(g, a);
  if (omega < 0 || omega >= g.size())
    throw Error(Errc::UnknownElement, "omega out of range");
  CrispSubset out(g.carrier());
  for (int x = 0; x < g.size(); ++x)
    if (a.mu[x] >= a.mu[omega] && a.nu[x] <= a.nu[omega]) out.add(x);
  return checked_ideal(g, std::move(out), "omega set");
}

CrispSubset zero_set(const GammaSemigroup& g, const Ifs& a) {
  require_ifi(g, a);
  if (!g.has_zero())
    throw Error(Errc::ZeroRequired, "instance has no designated zero element");
  const int z = g.zero();
  CrispSubset out(g.carrier());
  for (int x = 0; x < g.size(); ++x)
    if (a.mu[x] == a.mu[z] && a.nu[x] == a.nu[z]) out.add(x);
  return checked_ideal(g, std::move(out), "zero-level set");
}

}  // namespace gfz
