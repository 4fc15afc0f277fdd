#pragma once

// Test-only oracles, written directly against the raw table data so they
// stay independent of the library's validation and enumeration paths.

#include <vector>

#include "gfz/gamma_semigroup.hpp"

namespace oracle {

inline int sgs_at(const gfz::GsgTables& t, int a, int g, int b) {
  const int ns = static_cast<int>(t.carrier.size());
  const int ng = static_cast<int>(t.gamma.size());
  return t.sgs[(a * ng + g) * ns + b];
}

inline int gsg_at(const gfz::GsgTables& t, int g, int a, int h) {
  const int ns = static_cast<int>(t.carrier.size());
  const int ng = static_cast<int>(t.gamma.size());
  return t.gsg[(g * ns + a) * ng + h];
}

// Naive five-loop check of both associative-law families over raw tables.
inline bool naive_associative(const gfz::GsgTables& t) {
  const int ns = static_cast<int>(t.carrier.size());
  const int ng = static_cast<int>(t.gamma.size());
  for (int a = 0; a < ns; ++a)
    for (int al = 0; al < ng; ++al)
      for (int b = 0; b < ns; ++b)
        for (int be = 0; be < ng; ++be)
          for (int c = 0; c < ns; ++c) {
            int left = sgs_at(t, sgs_at(t, a, al, b), be, c);
            int mid = sgs_at(t, a, gsg_at(t, al, b, be), c);
            int right = sgs_at(t, a, al, sgs_at(t, b, be, c));
            if (left != mid || left != right) return false;
          }
  for (int al = 0; al < ng; ++al)
    for (int a = 0; a < ns; ++a)
      for (int be = 0; be < ng; ++be)
        for (int b = 0; b < ns; ++b)
          for (int ga = 0; ga < ng; ++ga) {
            int left = gsg_at(t, al, sgs_at(t, a, be, b), ga);
            int mid = gsg_at(t, gsg_at(t, al, a, be), b, ga);
            int right = gsg_at(t, al, a, gsg_at(t, be, b, ga));
            if (left != mid || left != right) return false;
          }
  return true;
}

// Direct definitional ideal check, bypassing gfz::is_ideal.
inline bool naive_is_ideal(const gfz::GammaSemigroup& g, const std::vector<bool>& members,
                           bool left, bool right) {
  for (int i = 0; i < g.size(); ++i) {
    if (!members[i]) continue;
    for (int s = 0; s < g.size(); ++s)
      for (int ga = 0; ga < g.gamma_size(); ++ga) {
        if (left && !members[g.sgs(s, ga, i)]) return false;
        if (right && !members[g.sgs(i, ga, s)]) return false;
      }
  }
  return true;
}

// All nonempty two-sided (or one-sided) ideals by scanning every subset.
inline std::vector<std::vector<bool>> naive_ideals(const gfz::GammaSemigroup& g, bool left,
                                                   bool right) {
  std::vector<std::vector<bool>> out;
  const unsigned limit = 1u << g.size();
  for (unsigned mask = 1; mask < limit; ++mask) {
    std::vector<bool> members(g.size(), false);
    for (int i = 0; i < g.size(); ++i) members[i] = (mask >> i) & 1u;
    if (naive_is_ideal(g, members, left, right)) out.push_back(std::move(members));
  }
  return out;
}

}  // namespace oracle
