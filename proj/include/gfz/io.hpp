#pragma once

#include <string>
#include <string_view>

#include "gfz/gamma_semigroup.hpp"
#include "gfz/ifs.hpp"

namespace gfz::io {

// Line-based UTF-8 format, '#' starts a comment, ids match [A-Za-z0-9_-]+.
//
//   [carrier]
//   S = a b c
//   G = g h
//   zero = a          (optional)
//   [sgs]
//   a g a = a         (one line per S x G x S triple; must be total)
//   [gsg]
//   g a g = g         (one line per G x S x G triple; must be total)
//
// Duplicate table lines with conflicting values are a parse error.
GsgPtr parse_gsg(std::string_view text);
std::string print_gsg(const GammaSemigroup& g);

// IFS format, one line per carrier element:
//
//   [ifs]
//   a = 1/2 1/4
//
// Every carrier element must appear exactly once. Degrees accept p/q,
// decimals, and bare 0/1; canonical output prints reduced p/q.
// When carrier is null the file's own id order defines a bare carrier.
Ifs parse_ifs(std::string_view text, CarrierPtr carrier = nullptr);
std::string print_ifs(const Ifs& a);

// Comma-separated member list ("0,2"); EmptySubset on an empty list.
CrispSubset parse_subset(std::string_view csv, const CarrierPtr& carrier);

}  // namespace gfz::io
