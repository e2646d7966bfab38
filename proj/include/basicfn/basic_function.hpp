#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "basicfn/characters.hpp"
#include "basicfn/cone.hpp"
#include "basicfn/kostka.hpp"
#include "basicfn/weight_series.hpp"

namespace basicfn {

/// Basic-function coefficients: the entry at mu holds c_mu(q^{-1}), a
/// polynomial in q.
struct BasicFunction {
  RepSpec rep;
  WeightSeries coeffs;

  const BasedRootDatum& datum() const noexcept { return rep.datum(); }
  std::int64_t max_det() const noexcept { return coeffs.max_det(); }
};

SupportCone support_cone(const RepSpec& rep);

/// Supp(V) together with the positive coroots, as a certified multiset.
WeightMultiset basic_multiset(const RepSpec& rep);

/// Shares Sym^k decompositions and partition memos between queries.
/// Thread safe.
class BasicFunctionEngine {
 public:
  explicit BasicFunctionEngine(RepSpec rep, unsigned cap = PartitionFunction::default_cap);

  const RepSpec& rep() const noexcept { return rep_; }
  const BasedRootDatum& datum() const noexcept { return rep_.datum(); }
  const SupportCone& cone() const noexcept { return cone_; }

  /// Constituents of Sym^k with multiplicities.
  std::vector<std::pair<Weight, Integer>> sym_decomposition(unsigned k) const;

  /// c_mu(q^{-1}) from the Lusztig q-analogues; 0 when det mu < 0 or mu
  /// is not anti-dominant.
  LaurentV c_mu(const Weight& mu) const;
  /// The same value as m^mu_{0,psi}(q) q^{-det mu} with psi = Supp(V) + roots.
  LaurentV c_mu_via_gkf(const Weight& mu) const;

  /// Anti-dominant points of the support cone with det = k, sorted.
  std::vector<Weight> layer(std::int64_t k) const;
  std::size_t layer_count(std::int64_t k) const { return layer(k).size(); }

  /// threads = 0 picks BASICFN_THREADS or the hardware concurrency.
  BasicFunction basic_series(std::int64_t max_det, unsigned threads = 0) const;

 private:
  RepSpec rep_;
  SupportCone cone_;
  LusztigQ kostka_;
  std::shared_ptr<PartitionFunction> basic_psi_;
  mutable std::mutex sym_mutex_;
  mutable std::map<unsigned, std::vector<std::pair<Weight, Integer>>> sym_cache_;
};

/// Number of ways of writing mu as a nonnegative combination of the
/// weights of V (copies counted separately), by direct enumeration.
Integer classical_limit_count(const RepSpec& rep, const Weight& mu);

/// One specialised coefficient: value = coefficient * qF^exponent.
struct SpecializedValue {
  Weight mu;
  std::int64_t det = 0;
  /// c_mu(qF).
  Rational coefficient;
  /// -<rho_{B^-}, mu> - s det(mu).
  Rational exponent;
  /// Set when qF^exponent is rational.
  std::optional<Rational> value;

  std::string symbolic() const;
};

/// Cartan coefficients of f_{rho,s}. Throws IrrationalHalfPower when a
/// power of qF is irrational and symbolic is false.
std::vector<SpecializedValue> specialize(const BasicFunction& bf, const Rational& qF, const Rational& s,
                                         bool symbolic = false);

/// Number of worker threads to use: BASICFN_THREADS if set, else the
/// hardware concurrency.
unsigned default_threads();

}  // namespace basicfn
