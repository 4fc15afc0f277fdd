#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gfz/error.hpp"

namespace gfz {

// Ordered list of element ids. Declaration order is the canonical order used
// for iteration, reports, and file output.
struct Carrier {
  std::vector<std::string> ids;
  std::map<std::string, int, std::less<>> index;

  static std::shared_ptr<const Carrier> make(std::vector<std::string> ids);

  int size() const { return static_cast<int>(ids.size()); }

  int at(std::string_view id) const {
    auto it = index.find(id);
    if (it == index.end())
      throw Error(Errc::UnknownElement, "no element '" + std::string(id) + "'");
    return it->second;
  }

  bool same_as(const Carrier& other) const { return ids == other.ids; }
};

using CarrierPtr = std::shared_ptr<const Carrier>;

struct CrispSubset {
  CarrierPtr carrier;
  std::vector<bool> bits;

  CrispSubset() = default;
  explicit CrispSubset(CarrierPtr c) : carrier(std::move(c)), bits(carrier->size(), false) {}

  static CrispSubset universe(CarrierPtr c) {
    CrispSubset s(std::move(c));
    s.bits.assign(s.carrier->size(), true);
    return s;
  }

  bool contains(int i) const { return bits[i]; }
  void add(int i) { bits[i] = true; }

  bool empty() const {
    for (bool b : bits)
      if (b) return false;
    return true;
  }

  int count() const {
    int n = 0;
    for (bool b : bits) n += b;
    return n;
  }

  bool subset_of(const CrispSubset& other) const {
    for (size_t i = 0; i < bits.size(); ++i)
      if (bits[i] && !other.bits[i]) return false;
    return true;
  }

  friend bool operator==(const CrispSubset& a, const CrispSubset& b) {
    return a.bits == b.bits;
  }

  // Comma-joined member ids in canonical order.
  std::string str() const;
};

CrispSubset subset_intersect(const CrispSubset& a, const CrispSubset& b);

}  // namespace gfz
