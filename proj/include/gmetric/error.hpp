#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gmetric {

enum class Errc {
  AsymmetricTable,
  NegativeEntry,
  DimensionMismatch,
  DuplicateLabel,
  UnknownLabel,
  NotPartialMetric,
  NotMMetric,
  NonpositiveEpsilon,
  CarrierTooLarge,
  NegativeCarrierValue,
  CarrierViolation,
  InvalidArgument,
  NonTotalMap,
  NegativePotential,
  VariantSpaceMismatch,
  ExhaustedBudget,
  UnknownClaim,
  MalformedDocument,
  RationalParseError,
  TotalityError,
  UsageError,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gmetric
