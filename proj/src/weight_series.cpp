#include "basicfn/weight_series.hpp"

#include <algorithm>

#include "basicfn/errors.hpp"

namespace basicfn {

WeightSeries::WeightSeries(BasedRootDatum datum, std::int64_t max_det)
    : datum_(std::move(datum)), max_det_(max_det) {}

WeightSeries WeightSeries::one(BasedRootDatum datum, std::int64_t max_det) {
  WeightSeries s(datum, max_det);
  s.add(Weight::zero(datum.rank()), LaurentV(1));
  return s;
}

LaurentV WeightSeries::at(const Weight& mu) const {
  auto it = entries_.find(mu);
  return it == entries_.end() ? LaurentV() : it->second;
}

void WeightSeries::add(const Weight& mu, const LaurentV& c) {
  if (c.is_zero()) return;
  const std::int64_t d = datum_.det(mu);
  if (d < 0 || d > max_det_) return;
  auto [it, inserted] = entries_.try_emplace(mu, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) entries_.erase(it);
}

WeightSeries WeightSeries::truncated(std::int64_t max_det) const {
  WeightSeries s(datum_, max_det);
  for (const auto& [mu, c] : entries_) s.add(mu, c);
  return s;
}

bool operator==(const WeightSeries& a, const WeightSeries& b) {
  return a.datum_ == b.datum_ && a.max_det_ == b.max_det_ && a.entries_ == b.entries_;
}

WeightSeries series_mul(const WeightSeries& a, const WeightSeries& b) {
  if (!(a.datum() == b.datum())) fail(ErrorKind::DatumMismatch, "series over different root data");
  WeightSeries out(a.datum(), std::min(a.max_det(), b.max_det()));
  for (const auto& [ma, ca] : a.entries()) {
    const std::int64_t da = a.datum().det(ma);
    if (da > out.max_det()) continue;
    for (const auto& [mb, cb] : b.entries()) {
      if (da + a.datum().det(mb) > out.max_det()) continue;
      out.add(ma + mb, ca * cb);
    }
  }
  return out;
}

WeightSeries geometric_expand(const BasedRootDatum& datum, const Weight& mu, const LaurentV& c,
                              std::int64_t max_det) {
  const std::int64_t d = datum.det(mu);
  if (d <= 0) fail(ErrorKind::NonPositiveGrading, "det of " + mu.to_string() + " is " + std::to_string(d));
  WeightSeries s(datum, max_det);
  LaurentV power(1);
  Weight w = Weight::zero(datum.rank());
  for (std::int64_t j = 0; j * d <= max_det; ++j) {
    s.add(w, power);
    power *= c;
    w += mu;
  }
  return s;
}

}  // namespace basicfn
