#include "gfz/crisp.hpp"

#include <algorithm>

namespace gfz {

namespace {

void require_same_carrier(const GammaSemigroup& g, const CrispSubset& s) {
  if (!s.carrier || !s.carrier->same_as(*g.carrier()))
    throw Error(Errc::CarrierMismatch, "subset lives on a different carrier");
}

void require_nonempty(const CrispSubset& s) {
  if (s.empty()) throw Error(Errc::EmptySubset, "operation needs a nonempty subset");
}

}  // namespace

const char* side_name(Side s) {
  switch (s) {
    case Side::Left: return "left";
    case Side::Right: return "right";
    case Side::TwoSided: return "two-sided";
  }
  return "?";
}

bool is_ideal(const GammaSemigroup& g, const CrispSubset& subset, Side side) {
  require_same_carrier(g, subset);
  require_nonempty(subset);
  for (int i = 0; i < g.size(); ++i) {
    if (!subset.contains(i)) continue;
    for (int s = 0; s < g.size(); ++s)
      for (int ga = 0; ga < g.gamma_size(); ++ga) {
        if (side != Side::Right && !subset.contains(g.sgs(s, ga, i))) return false;
        if (side != Side::Left && !subset.contains(g.sgs(i, ga, s))) return false;
      }
  }
  return true;
}

CrispSubset ideal_product(const GammaSemigroup& g, const CrispSubset& a, const CrispSubset& b) {
  require_same_carrier(g, a);
  require_same_carrier(g, b);
  require_nonempty(a);
  require_nonempty(b);
  CrispSubset out(g.carrier());
  for (int i = 0; i < g.size(); ++i) {
    if (!a.contains(i)) continue;
    for (int ga = 0; ga < g.gamma_size(); ++ga)
      for (int j = 0; j < g.size(); ++j)
        if (b.contains(j)) out.add(g.sgs(i, ga, j));
  }
  return out;
}

CrispSubset ideal_closure(const GammaSemigroup& g, const CrispSubset& x, Side side) {
  require_same_carrier(g, x);
  require_nonempty(x);
  CrispSubset cur = x;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 0; i < g.size(); ++i) {
      if (!cur.contains(i)) continue;
      for (int s = 0; s < g.size(); ++s)
        for (int ga = 0; ga < g.gamma_size(); ++ga) {
          if (side != Side::Right) {
            int v = g.sgs(s, ga, i);
            if (!cur.contains(v)) { cur.add(v); grew = true; }
          }
          if (side != Side::Left) {
            int v = g.sgs(i, ga, s);
            if (!cur.contains(v)) { cur.add(v); grew = true; }
          }
        }
    }
  }
  return cur;
}

CrispSubset ideal_closure(const GammaSemigroup& g, const CrispSubset& x) {
  return ideal_closure(g, x, Side::TwoSided);
}

std::vector<CrispSubset> enumerate_ideals(const GammaSemigroup& g, Side side) {
  if (g.size() > kEnumerateCarrierCap)
    throw Error(Errc::CarrierTooLarge, "ideal enumeration is capped at |S| = " +
                                           std::to_string(kEnumerateCarrierCap));
  std::vector<CrispSubset> out;
  const unsigned limit = 1u << g.size();
  for (unsigned mask = 1; mask < limit; ++mask) {
    CrispSubset seed(g.carrier());
    for (int i = 0; i < g.size(); ++i)
      if (mask & (1u << i)) seed.add(i);
    CrispSubset closed = ideal_closure(g, seed, side);
    if (std::find(out.begin(), out.end(), closed) == out.end()) out.push_back(std::move(closed));
  }
  std::sort(out.begin(), out.end(), [](const CrispSubset& a, const CrispSubset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.bits < b.bits;
  });
  return out;
}

bool is_prime_ideal(const GammaSemigroup& g, const CrispSubset& ideal, PrimeCriterion criterion) {
  if (!is_ideal(g, ideal, Side::TwoSided))
    throw Error(Errc::NotAnIdeal, "prime test needs a two-sided ideal");
  switch (criterion) {
    case PrimeCriterion::Pairs:
      for (int x = 0; x < g.size(); ++x)
        for (int y = 0; y < g.size(); ++y) {
          if (ideal.contains(x) || ideal.contains(y)) continue;
          bool all_in = true;
          for (int ga = 0; ga < g.gamma_size() && all_in; ++ga)
            all_in = ideal.contains(g.sgs(x, ga, y));
          if (all_in) return false;
        }
      return true;
    case PrimeCriterion::Sandwich:
      for (int x = 0; x < g.size(); ++x)
        for (int y = 0; y < g.size(); ++y) {
          if (ideal.contains(x) || ideal.contains(y)) continue;
          bool all_in = true;
          for (int g1 = 0; g1 < g.gamma_size() && all_in; ++g1)
            for (int s = 0; s < g.size() && all_in; ++s)
              for (int g2 = 0; g2 < g.gamma_size() && all_in; ++g2)
                all_in = ideal.contains(g.sgs(g.sgs(x, g1, s), g2, y));
          if (all_in) return false;
        }
      return true;
    case PrimeCriterion::Subsets: {
      auto ideals = enumerate_ideals(g, Side::TwoSided);
      for (const CrispSubset& a : ideals)
        for (const CrispSubset& b : ideals) {
          if (a.subset_of(ideal) || b.subset_of(ideal)) continue;
          if (ideal_product(g, a, b).subset_of(ideal)) return false;
        }
      return true;
    }
  }
  return false;
}

bool is_semiprime_ideal(const GammaSemigroup& g, const CrispSubset& ideal) {
  if (!is_ideal(g, ideal, Side::TwoSided))
    throw Error(Errc::NotAnIdeal, "semiprime test needs a two-sided ideal");
  for (int x = 0; x < g.size(); ++x) {
    if (ideal.contains(x)) continue;
    bool all_in = true;
    for (int ga = 0; ga < g.gamma_size() && all_in; ++ga)
      all_in = ideal.contains(g.sgs(x, ga, x));
    if (all_in) return false;
  }
  return true;
}

CrispSubset crisp_extension(const GammaSemigroup& g, int x, const CrispSubset& a) {
  require_same_carrier(g, a);
  if (x < 0 || x >= g.size()) throw Error(Errc::UnknownElement, "extension base out of range");
  CrispSubset out(g.carrier());
  for (int y = 0; y < g.size(); ++y) {
    bool all_in = true;
    for (int ga = 0; ga < g.gamma_size() && all_in; ++ga)
      all_in = a.contains(g.sgs(x, ga, y));
    if (all_in) out.add(y);
  }
  return out;
}

}  // namespace gfz
