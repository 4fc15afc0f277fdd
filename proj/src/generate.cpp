#include "gfz/generate.hpp"

#include <algorithm>

#include "gfz/ifs_ideals.hpp"

namespace gfz::gen {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

const std::vector<Degree>& default_grid() {
  static const std::vector<Degree> grid = {
      Degree::zero(),      Degree::of(1, 10), Degree::of(1, 4), Degree::of(1, 2),
      Degree::of(3, 4),    Degree::of(9, 10), Degree::one()};
  return grid;
}

Degree draw_degree(Rng& rng) { return rng.pick(default_grid()); }

namespace {

// Valid (n, gamma subset) combinations: the subset has to absorb a*s*b mod n,
// which holds exactly for the sets of multiples of a divisor.
std::vector<std::pair<int, std::vector<int>>> modular_combos(int max_s, int max_g) {
  std::vector<std::pair<int, std::vector<int>>> out;
  for (int n = 1; n <= max_s; ++n) {
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      std::vector<int> gamma;
      for (int v = 0; v < n; v += d) gamma.push_back(v);
      if (d == n) gamma = {0};
      if (static_cast<int>(gamma.size()) <= max_g) out.emplace_back(n, std::move(gamma));
    }
  }
  return out;
}

}  // namespace

GsgPtr draw_modular(Rng& rng, int max_s, int max_g) {
  static const auto combos_cache = modular_combos(kMaxCarrier, kMaxGamma);
  std::vector<std::pair<int, std::vector<int>>> eligible;
  for (const auto& c : combos_cache)
    if (c.first <= max_s && static_cast<int>(c.second.size()) <= max_g) eligible.push_back(c);
  const auto& pickd = eligible[rng.below(static_cast<int>(eligible.size()))];
  return make_modular(pickd.first, pickd.second);
}

GsgTables draw_raw_tables(Rng& rng, int max_s, int max_g) {
  int ns = 1 + rng.below(max_s);
  int ng = 1 + rng.below(max_g);
  GsgTables t;
  for (int i = 0; i < ns; ++i) t.carrier.push_back("s" + std::to_string(i));
  for (int i = 0; i < ng; ++i) t.gamma.push_back("g" + std::to_string(i));
  t.sgs.resize(static_cast<size_t>(ns) * ng * ns);
  t.gsg.resize(static_cast<size_t>(ng) * ns * ng);
  for (int& v : t.sgs) v = rng.below(ns);
  for (int& v : t.gsg) v = rng.below(ng);
  return t;
}

GsgPtr draw_mutant(Rng& rng) {
  for (int attempt = 0; attempt < 40; ++attempt) {
    GsgTables t;
    if (rng.below(2) == 0) {
      // Fresh random table at tiny size; validity is rare but cheap to test.
      t = draw_raw_tables(rng, 2, 2);
    } else {
      // Perturb one entry of a known-valid base.
      GsgPtr base = rng.below(2) == 0 ? draw_modular(rng, 4, 4)
                                      : catalog()[rng.below(static_cast<int>(catalog().size()))]
                                            .instance;
      if (base->size() > 4) continue;
      t.carrier.clear();
      for (int i = 0; i < base->size(); ++i) t.carrier.push_back(base->id(i));
      for (int i = 0; i < base->gamma_size(); ++i) t.gamma.push_back(base->gamma_id(i));
      const int ns = base->size(), ng = base->gamma_size();
      t.sgs.resize(static_cast<size_t>(ns) * ng * ns);
      t.gsg.resize(static_cast<size_t>(ng) * ns * ng);
      for (int a = 0; a < ns; ++a)
        for (int g = 0; g < ng; ++g)
          for (int b = 0; b < ns; ++b) t.sgs[(a * ng + g) * ns + b] = base->sgs(a, g, b);
      for (int g = 0; g < ng; ++g)
        for (int a = 0; a < ns; ++a)
          for (int h = 0; h < ng; ++h) t.gsg[(g * ns + a) * ng + h] = base->gsg(g, a, h);
      if (rng.below(2) == 0)
        t.sgs[rng.below(static_cast<int>(t.sgs.size()))] = rng.below(ns);
      else
        t.gsg[rng.below(static_cast<int>(t.gsg.size()))] = rng.below(ng);
      // No zero claim: a mutation may break the absorbing property.
    }
    try {
      return GammaSemigroup::build(t);
    } catch (const Error&) {
      continue;
    }
  }
  return nullptr;
}

GsgPtr draw_instance(Rng& rng) {
  int roll = rng.below(10);
  if (roll < 5) return catalog()[rng.below(static_cast<int>(catalog().size()))].instance;
  if (roll < 8) return draw_modular(rng, 8, 4);
  GsgPtr m = draw_mutant(rng);
  return m ? m : catalog()[rng.below(static_cast<int>(catalog().size()))].instance;
}

GsgPtr draw_instance_small(Rng& rng, int max_s) {
  for (int i = 0; i < 20; ++i) {
    GsgPtr g = draw_instance(rng);
    if (g->size() <= max_s) return g;
  }
  return catalog_instance("mod4-full");
}

std::vector<GsgPtr> generate_gsemigroups(const GsgStreamSpec& spec, std::uint64_t seed,
                                         int count) {
  if (spec.max_s > kMaxCarrier || spec.max_g > kMaxGamma || spec.max_s < 1 || spec.max_g < 1)
    throw Error(Errc::CapExceeded, "size bounds outside the supported range");
  Rng rng(seed);
  std::vector<GsgPtr> out;
  for (int i = 0; i < count; ++i) {
    switch (spec.family) {
      case GsgFamily::Modular:
        out.push_back(draw_modular(rng, spec.max_s, spec.max_g));
        break;
      case GsgFamily::Mutation: {
        GsgPtr m = draw_mutant(rng);
        if (m && m->size() <= spec.max_s && m->gamma_size() <= spec.max_g)
          out.push_back(std::move(m));
        break;
      }
      case GsgFamily::Catalog: {
        const auto& e = catalog()[i % catalog().size()];
        if (e.instance->size() <= spec.max_s && e.instance->gamma_size() <= spec.max_g)
          out.push_back(e.instance);
        break;
      }
    }
  }
  return out;
}

namespace {

Ifs draw_unconstrained(Rng& rng, const CarrierPtr& carrier) {
  const auto& grid = default_grid();
  std::vector<Degree> mu, nu;
  for (int i = 0; i < carrier->size(); ++i) {
    Degree m = rng.pick(grid);
    std::vector<Degree> fits;
    for (const Degree& d : grid)
      if (sum_within_one(m, d)) fits.push_back(d);
    mu.push_back(m);
    nu.push_back(rng.pick(fits));
  }
  return ifs_build(carrier, std::move(mu), std::move(nu));
}

std::optional<Ifs> draw_constant(Rng& rng, const CarrierPtr& carrier) {
  for (int i = 0; i < 10; ++i) {
    Degree c = draw_degree(rng);
    std::vector<Degree> fits;
    for (const Degree& d : default_grid())
      if (sum_within_one(c, d)) fits.push_back(d);
    Degree d = rng.pick(fits);
    if (c == Degree::zero() && d == Degree::one()) continue;  // empty
    return ifs_build(carrier, std::vector<Degree>(carrier->size(), c),
                     std::vector<Degree>(carrier->size(), d));
  }
  return std::nullopt;
}

std::optional<Ifs> draw_step(Rng& rng, const GammaSemigroup& g, Side side, bool prime,
                             bool semiprime) {
  std::vector<CrispSubset> ideals;
  try {
    ideals = enumerate_ideals(g, side);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (prime || semiprime) {
    std::vector<CrispSubset> filtered;
    for (const CrispSubset& i : ideals) {
      if (prime && !is_prime_ideal(g, i, PrimeCriterion::Pairs)) continue;
      if (semiprime && !is_semiprime_ideal(g, i)) continue;
      filtered.push_back(i);
    }
    ideals = std::move(filtered);
  }
  if (ideals.empty()) return std::nullopt;
  const CrispSubset& ideal = rng.pick(ideals);
  for (int i = 0; i < 20; ++i) {
    Degree a0 = draw_degree(rng), a1 = draw_degree(rng);
    Degree b0 = draw_degree(rng), b1 = draw_degree(rng);
    if (!(a1 < a0) || !(b0 < b1)) continue;
    if (!sum_within_one(a0, b0) || !sum_within_one(a1, b1)) continue;
    return step_ifs(ideal, a0, a1, b0, b1);
  }
  // Characteristic parameters always qualify.
  return step_ifs(ideal, Degree::one(), Degree::zero(), Degree::zero(), Degree::one());
}

}  // namespace

std::optional<Ifs> draw_ifs(Rng& rng, const GammaSemigroup& g, IfsConstraint constraint) {
  if (constraint == IfsConstraint::None) return draw_unconstrained(rng, g.carrier());

  Side side = Side::TwoSided;
  if (constraint == IfsConstraint::Ifli) side = Side::Left;
  if (constraint == IfsConstraint::Ifri) side = Side::Right;
  const bool prime = constraint == IfsConstraint::Ifpi;
  const bool semiprime = constraint == IfsConstraint::Ifspi;

  auto satisfied = [&](const Ifs& a) {
    if (!ifs_nonempty(a)) return false;
    switch (constraint) {
      case IfsConstraint::Ifli: return ifli_conditions(g, a).holds;
      case IfsConstraint::Ifri: return ifri_conditions(g, a).holds;
      case IfsConstraint::Ifi: return ifi_conditions(g, a).holds;
      case IfsConstraint::Ifpi:
        return ifi_conditions(g, a).holds && ifpi_conditions(g, a).holds;
      case IfsConstraint::Ifspi:
        return ifi_conditions(g, a).holds && ifspi_conditions(g, a).holds;
      case IfsConstraint::None: return true;
    }
    return false;
  };

  for (int attempt = 0; attempt < 30; ++attempt) {
    std::optional<Ifs> cand;
    int flavor = rng.below(prime ? 2 : 3);  // the prime family is not meet-closed
    if (flavor == 0) {
      cand = draw_constant(rng, g.carrier());
    } else if (flavor == 1) {
      cand = draw_step(rng, g, side, prime, semiprime);
    } else {
      auto a = draw_step(rng, g, side, prime, semiprime);
      auto b = rng.below(2) == 0 ? draw_constant(rng, g.carrier())
                                 : draw_step(rng, g, side, prime, semiprime);
      if (a && b) cand = ifs_meet(*a, *b);
    }
    if (cand && satisfied(*cand)) return cand;
  }
  return std::nullopt;
}

CrispSubset draw_subset(Rng& rng, const CarrierPtr& carrier, bool nonempty) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    CrispSubset s(carrier);
    for (int i = 0; i < carrier->size(); ++i)
      if (rng.below(2) == 0) s.add(i);
    if (!nonempty || !s.empty()) return s;
  }
  CrispSubset s(carrier);
  s.add(0);
  return s;
}

}  // namespace gfz::gen
