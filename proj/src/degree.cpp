#include "gfz/degree.hpp"

#include <charconv>
#include <numeric>

#include "gfz/error.hpp"

namespace gfz {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::MissingTableEntry: return "MissingTableEntry";
    case Errc::AssociativityViolation: return "AssociativityViolation";
    case Errc::InvalidZero: return "InvalidZero";
    case Errc::EmptySubset: return "EmptySubset";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::CarrierTooLarge: return "CarrierTooLarge";
    case Errc::NotAnIdeal: return "NotAnIdeal";
    case Errc::SumExceedsOne: return "SumExceedsOne";
    case Errc::MissingValue: return "MissingValue";
    case Errc::CarrierMismatch: return "CarrierMismatch";
    case Errc::EmptyFamily: return "EmptyFamily";
    case Errc::ParameterOrderViolation: return "ParameterOrderViolation";
    case Errc::EmptyIfs: return "EmptyIFS";
    case Errc::NotAnIfi: return "NotAnIFI";
    case Errc::ZeroRequired: return "ZeroRequired";
    case Errc::NotCommutative: return "NotCommutative";
    case Errc::SumViolationInExtension: return "SumViolationInExtension";
    case Errc::InvalidParameters: return "InvalidParameters";
    case Errc::InvalidDegree: return "InvalidDegree";
    case Errc::UnknownCase: return "UnknownCase";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::Parse: return "ParseError";
    case Errc::Internal: return "InternalError";
  }
  return "UnknownError";
}

Degree Degree::of(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0 || num > den)
    throw Error(Errc::InvalidDegree,
                "degree " + std::to_string(num) + "/" + std::to_string(den) +
                    " is not in [0,1]");
  std::int64_t g = std::gcd(num, den);
  Degree d;
  d.num_ = num / g;
  d.den_ = den / g;
  return d;
}

namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw Error(Errc::InvalidDegree, "bad integer '" + std::string(s) + "'");
  return v;
}

}  // namespace

Degree Degree::parse(std::string_view text) {
  if (text.empty()) throw Error(Errc::InvalidDegree, "empty degree literal");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return of(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (whole.empty() || frac.empty() || frac.size() > 15)
      throw Error(Errc::InvalidDegree, "bad decimal '" + std::string(text) + "'");
    std::int64_t den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    return of(parse_int(whole) * den + parse_int(frac), den);
  }
  return of(parse_int(text), 1);
}

Degree Degree::complement() const { return of(den_ - num_, den_); }

std::string Degree::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

bool operator<(const Degree& a, const Degree& b) {
  return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

bool sum_within_one(const Degree& a, const Degree& b) {
  __int128 lhs = static_cast<__int128>(a.num()) * b.den() +
                 static_cast<__int128>(b.num()) * a.den();
  __int128 rhs = static_cast<__int128>(a.den()) * b.den();
  return lhs <= rhs;
}

}  // namespace gfz
