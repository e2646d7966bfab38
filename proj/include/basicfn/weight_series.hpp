#pragma once

#include <cstdint>
#include <map>

#include "basicfn/laurent.hpp"
#include "basicfn/root_datum.hpp"

namespace basicfn {

/// Finite det-graded series sum_mu c_mu e^mu with 0 <= det(mu) <= max_det.
/// The X variable is implicit: the entry at mu carries X^{det mu}.
class WeightSeries {
 public:
  WeightSeries(BasedRootDatum datum, std::int64_t max_det);
  /// The series 1 = e^0.
  static WeightSeries one(BasedRootDatum datum, std::int64_t max_det);

  const BasedRootDatum& datum() const noexcept { return datum_; }
  std::int64_t max_det() const noexcept { return max_det_; }
  const std::map<Weight, LaurentV>& entries() const noexcept { return entries_; }
  LaurentV at(const Weight& mu) const;

  /// Adds c e^mu; silently dropped when det(mu) is outside [0, max_det].
  void add(const Weight& mu, const LaurentV& c);
  WeightSeries truncated(std::int64_t max_det) const;

  friend bool operator==(const WeightSeries& a, const WeightSeries& b);

 private:
  BasedRootDatum datum_;
  std::int64_t max_det_;
  std::map<Weight, LaurentV> entries_;
};

/// Convolution product truncated at the smaller bound. Throws
/// DatumMismatch when the operands live over different data.
WeightSeries series_mul(const WeightSeries& a, const WeightSeries& b);

/// sum_{j>=0} c^j e^{j mu} up to det max_det. Throws NonPositiveGrading
/// when det(mu) <= 0.
WeightSeries geometric_expand(const BasedRootDatum& datum, const Weight& mu, const LaurentV& c,
                              std::int64_t max_det);

}  // namespace basicfn
