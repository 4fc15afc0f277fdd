#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gfz/gamma_semigroup.hpp"
#include "gfz/ifs.hpp"

namespace gfz {

// Curated instance corpus replayed by the harness. Covers commutative and
// non-commutative instances, regular and non-regular ones, and instances
// with and without a designated zero; every entry has |S| <= 6.
struct CatalogEntry {
  std::string name;
  GsgPtr instance;
  std::string note;
};

const std::vector<CatalogEntry>& catalog();

GsgPtr catalog_instance(std::string_view name);  // UnknownCase on a bad name

// Non-positive integers under multiplication, collapsed by magnitude:
// S classes 0 / -1 / -2 / "-3 or below", operator classes 0 / -2 /
// "even, -4 or below". The graded IFS below lives on it: (1,0) at zero,
// (1/10, 6/10) at magnitudes 1 and 2, (2/10, 7/10) on the deep class.
Ifs graded_ifs(const GammaSemigroup& negq4);

// Three-point bare-carrier snapshot of the same grading (no tables), for
// set-algebra fixtures.
CarrierPtr graded_snapshot_carrier();
Ifs graded_snapshot_ifs();

}  // namespace gfz
