#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace gfz {

// Exact rational in [0,1]. Stored reduced with a positive denominator.
// All comparisons and derived values are exact; nothing here ever rounds.
class Degree {
 public:
  Degree() = default;  // zero

  static Degree of(std::int64_t num, std::int64_t den);
  static Degree zero() { return Degree(); }
  static Degree one() { return of(1, 1); }

  // Accepts "p/q", a decimal like "0.25", or a bare integer 0/1.
  static Degree parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Degree complement() const;  // 1 - value

  std::string str() const;

  friend bool operator==(const Degree& a, const Degree& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Degree& a, const Degree& b) { return !(a == b); }
  friend bool operator<(const Degree& a, const Degree& b);
  friend bool operator>(const Degree& a, const Degree& b) { return b < a; }
  friend bool operator<=(const Degree& a, const Degree& b) { return !(b < a); }
  friend bool operator>=(const Degree& a, const Degree& b) { return !(a < b); }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// a + b <= 1, computed exactly (the sum itself may leave [0,1]).
bool sum_within_one(const Degree& a, const Degree& b);

inline const Degree& degree_min(const Degree& a, const Degree& b) { return b < a ? b : a; }
inline const Degree& degree_max(const Degree& a, const Degree& b) { return a < b ? b : a; }

}  // namespace gfz
