#include "basicfn/kostka.hpp"

#include "basicfn/errors.hpp"

namespace basicfn {

LaurentV generalized_kf(const BasedRootDatum& d, const Weight& lambda, const Weight& mu, const PartitionFunction& psi) {
  if (!d.is_antidominant(lambda)) fail(ErrorKind::NotAntiDominant, lambda.to_string() + " is not anti-dominant");
  if (psi.psi().rank() != d.rank() || psi.psi().side() != Side::Cocharacter) {
    fail(ErrorKind::PsiNotCertified, "multiset does not live in the cocharacter lattice of the datum");
  }
  const std::size_t n = d.rank();
  const auto& rho = d.corho_neg().doubled;
  std::vector<std::int64_t> top(n), base(n);
  for (std::size_t i = 0; i < n; ++i) {
    top[i] = 2 * lambda.coords[i] + rho[i];
    base[i] = 2 * mu.coords[i] + rho[i];
  }
  LaurentV sum;
  for (const auto& w : d.weyl_group()) {
    const auto moved = w.on_cocharacters.apply(top);
    Weight arg = Weight::zero(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t diff = base[i] - moved[i];
      if (diff % 2 != 0) fail(ErrorKind::InternalMismatch, "rho-shifted difference is not integral");
      arg.coords[i] = diff / 2;
    }
    if (psi.psi().height(arg) < 0) continue;
    LaurentV term = psi(arg);
    if (w.sign() < 0) term = -term;
    sum += term;
  }
  return sum;
}

WeightMultiset positive_coroot_multiset(const BasedRootDatum& d) {
  std::vector<WeightItem> items;
  for (const auto& p : d.positive_roots()) items.push_back({p.coroot, 1});
  if (items.empty()) return WeightMultiset::empty(d.rank());
  // rho_B pairs to the height of each positive coroot, so it is a certificate.
  linalg::RatVector l(d.rank());
  for (std::size_t i = 0; i < d.rank(); ++i) l[i] = ratio(-d.rho_neg().doubled[i], 2);
  return WeightMultiset::with_functional(std::move(items), std::move(l));
}

LusztigQ::LusztigQ(BasedRootDatum d, unsigned cap)
    : d_(std::move(d)), p_(std::make_shared<PartitionFunction>(positive_coroot_multiset(d_), cap)) {}

LaurentV LusztigQ::operator()(const Weight& lambda, const Weight& mu) const {
  LaurentV k = generalized_kf(d_, lambda, mu, *p_);
  if (lambda == mu && k != LaurentV(1)) fail(ErrorKind::InternalMismatch, "K_{lambda,lambda} is not 1");
  if (d_.is_antidominant(mu) && !k.nonnegative_coefficients()) {
    fail(ErrorKind::InternalMismatch, "negative coefficient in K at anti-dominant " + mu.to_string());
  }
  return k;
}

LaurentV lusztig_q(const BasedRootDatum& d, const Weight& lambda, const Weight& mu) { return LusztigQ(d)(lambda, mu); }

}  // namespace basicfn
