#pragma once

#include <memory>

#include "basicfn/laurent.hpp"
#include "basicfn/partition.hpp"
#include "basicfn/root_datum.hpp"

namespace basicfn {

/// m^mu_{lambda,psi}(q) = sum_w sign(w) P_psi((mu + rho) - w(lambda + rho); q)
/// with rho the half-sum of the B^- coroots. The partition function is
/// taken by reference so its memo is shared across calls.
LaurentV generalized_kf(const BasedRootDatum& d, const Weight& lambda, const Weight& mu, const PartitionFunction& psi);

/// The positive coroots as a certified multiset.
WeightMultiset positive_coroot_multiset(const BasedRootDatum& d);

/// Lusztig's q-analogue K_{lambda,mu}(q) with a persistent partition memo.
class LusztigQ {
 public:
  explicit LusztigQ(BasedRootDatum d, unsigned cap = PartitionFunction::default_cap);

  const BasedRootDatum& datum() const noexcept { return d_; }
  /// Checks K_{lambda,lambda} = 1 and nonnegativity for anti-dominant mu.
  LaurentV operator()(const Weight& lambda, const Weight& mu) const;

 private:
  BasedRootDatum d_;
  std::shared_ptr<PartitionFunction> p_;
};

LaurentV lusztig_q(const BasedRootDatum& d, const Weight& lambda, const Weight& mu);

}  // namespace basicfn
