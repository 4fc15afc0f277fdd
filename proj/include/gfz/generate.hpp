#pragma once

#include <optional>
#include <random>

#include "gfz/catalog.hpp"
#include "gfz/crisp.hpp"
#include "gfz/ifs.hpp"

namespace gfz::gen {

// All harness randomness flows through this; same seed, same stream.
struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}

  int below(int n) { return static_cast<int>(eng() % static_cast<std::uint64_t>(n)); }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[below(static_cast<int>(v.size()))];
  }
};

std::uint64_t fnv1a(std::string_view s);

// Degree grid used by samplers: {0, 1/10, 1/4, 1/2, 3/4, 9/10, 1}.
const std::vector<Degree>& default_grid();
Degree draw_degree(Rng& rng);

inline constexpr int kMaxCarrier = 12;
inline constexpr int kMaxGamma = 8;

enum class GsgFamily { Modular, Mutation, Catalog };

struct GsgStreamSpec {
  GsgFamily family = GsgFamily::Catalog;
  int max_s = 8;
  int max_g = 4;
};

// Deterministic stream of validated instances; same spec and seed give the
// same sequence. Mutation draws that never revalidate are dropped, so the
// result may be shorter than count.
std::vector<GsgPtr> generate_gsemigroups(const GsgStreamSpec& spec, std::uint64_t seed,
                                         int count);

// Mixed single draws used by theorem cases.
GsgPtr draw_instance(Rng& rng);
GsgPtr draw_instance_small(Rng& rng, int max_s);  // keeps ideal enumeration cheap
GsgPtr draw_modular(Rng& rng, int max_s, int max_g);
GsgPtr draw_mutant(Rng& rng);  // may be null when rejection sampling finds nothing

enum class IfsConstraint { None, Ifli, Ifri, Ifi, Ifpi, Ifspi };

// Unconstrained draws assign grid values under the sum cap. Constrained
// draws use step functions over enumerated crisp ideals of the right kind,
// constants, and meets (meets are skipped for the prime constraint, which is
// not meet-closed), then re-check the predicate. Empty optional = the
// constructive families produced nothing for this instance.
std::optional<Ifs> draw_ifs(Rng& rng, const GammaSemigroup& g, IfsConstraint constraint);

CrispSubset draw_subset(Rng& rng, const CarrierPtr& carrier, bool nonempty);

// Uniformly random total tables for small sizes; not validated.
GsgTables draw_raw_tables(Rng& rng, int max_s, int max_g);

}  // namespace gfz::gen
