#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fnlab {

enum class ErrorCode {
  NotReflexive,
  NotAntisymmetric,
  NotTransitive,
  IndexOutOfRange,
  SizeExceeded,
  DomainMismatch,
  MapNotTotal,
  NotPermutation,
  NotARetraction,
  InvalidInputPair,
  EmptySubset,
  DegenerateCofactor,
  ZeroMember,
  RelationViolation,
  NotComparable,
  NoWitness,
  NotMonotone,
  BadParams,
  ParseError,
  InternalError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `witness` carries the element
/// indices that explain the failure (e.g. the triple breaking transitivity).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::vector<std::size_t> witness = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<std::size_t> witness_;
};

}  // namespace fnlab
