#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace basicfn {

/// Failure categories surfaced by the library. The CLI reports the name of
/// the kind when a computation aborts.
enum class ErrorKind {
  CartanViolation,
  GradingViolation,
  InfiniteWeyl,
  OrderCapExceeded,
  DatumMismatch,
  NonPositiveGrading,
  NotStronglyConvex,
  PsiNotCertified,
  NotAntiDominant,
  NotWInvariant,
  NegativeMultiplicity,
  IrrationalHalfPower,
  NotSaturated,
  DegenerateParameter,
  NotSimplyConnected,
  XiNotAntiDominant,
  CapExceeded,
  InvalidInput,
  InternalMismatch,
};

std::string_view error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

/// Raised when a weight multiset admits no strictly positive functional.
/// The witness is a convex combination (one coefficient per item) summing
/// the items to zero.
class NotStronglyConvexError : public Error {
 public:
  NotStronglyConvexError(std::vector<mpq_class> witness, const std::string& detail);

  const std::vector<mpq_class>& witness() const noexcept { return witness_; }

 private:
  std::vector<mpq_class> witness_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& detail);

}  // namespace basicfn
