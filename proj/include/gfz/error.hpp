#pragma once

#include <stdexcept>
#include <string>

namespace gfz {

enum class Errc {
  MissingTableEntry,
  AssociativityViolation,
  InvalidZero,
  EmptySubset,
  UnknownElement,
  CarrierTooLarge,
  NotAnIdeal,
  SumExceedsOne,
  MissingValue,
  CarrierMismatch,
  EmptyFamily,
  ParameterOrderViolation,
  EmptyIfs,
  NotAnIfi,
  ZeroRequired,
  NotCommutative,
  SumViolationInExtension,
  InvalidParameters,
  InvalidDegree,
  UnknownCase,
  CapExceeded,
  Parse,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gfz
