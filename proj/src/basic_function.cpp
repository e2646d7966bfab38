#include "basicfn/basic_function.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "basicfn/errors.hpp"

namespace basicfn {

namespace {

std::int64_t floor_div(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q.get_si();
}

std::int64_t ceil_div(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q.get_si();
}

std::vector<Weight> rep_weights(const RepSpec& rep) {
  std::vector<Weight> out;
  for (const auto& it : rep.supp()) out.push_back(it.weight);
  return out;
}

}  // namespace

unsigned default_threads() {
  if (const char* env = std::getenv("BASICFN_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SupportCone support_cone(const RepSpec& rep) { return cone_from_generators(rep_weights(rep), rep.datum().rank()); }

WeightMultiset basic_multiset(const RepSpec& rep) {
  std::map<Weight, unsigned> merged;
  for (const auto& it : rep.supp()) merged[it.weight] += it.multiplicity;
  for (const auto& p : rep.datum().positive_roots()) merged[p.coroot] += 1;
  std::vector<WeightItem> items;
  for (const auto& [w, m] : merged) items.push_back({w, m});
  if (items.empty()) return WeightMultiset::empty(rep.datum().rank());
  return WeightMultiset::certify(std::move(items));
}

BasicFunctionEngine::BasicFunctionEngine(RepSpec rep, unsigned cap)
    : rep_(std::move(rep)),
      cone_(support_cone(rep_)),
      kostka_(rep_.datum(), cap),
      basic_psi_(std::make_shared<PartitionFunction>(basic_multiset(rep_), cap)) {}

std::vector<std::pair<Weight, Integer>> BasicFunctionEngine::sym_decomposition(unsigned k) const {
  std::lock_guard lock(sym_mutex_);
  if (auto it = sym_cache_.find(k); it != sym_cache_.end()) return it->second;
  const auto tables = sym_power_characters(rep_, k);
  for (unsigned j = 0; j <= k; ++j) {
    if (!sym_cache_.count(j)) sym_cache_.emplace(j, decompose_character(tables[j]));
  }
  return sym_cache_.at(k);
}

LaurentV BasicFunctionEngine::c_mu(const Weight& mu) const {
  const BasedRootDatum& d = datum();
  if (mu.rank() != d.rank() || mu.side != Side::Cocharacter) {
    fail(ErrorKind::InvalidInput, mu.to_string() + " is not a cocharacter of the datum");
  }
  const std::int64_t k = d.det(mu);
  if (k < 0 || !d.is_antidominant(mu)) return {};
  LaurentV sum;
  for (const auto& [lambda, m] : sym_decomposition(static_cast<unsigned>(k))) {
    if (!d.bruhat_leq(mu, lambda)) continue;
    sum += kostka_(lambda, mu) * m;
  }
  return sum;
}

LaurentV BasicFunctionEngine::c_mu_via_gkf(const Weight& mu) const {
  const BasedRootDatum& d = datum();
  const std::int64_t k = d.det(mu);
  if (k < 0 || !d.is_antidominant(mu)) return {};
  const LaurentV m = generalized_kf(d, Weight::zero(d.rank()), mu, *basic_psi_);
  if (!m.nonnegative_coefficients()) {
    fail(ErrorKind::InternalMismatch, "negative coefficient in m^mu_{0,psi} at " + mu.to_string());
  }
  LaurentV c = m.shifted(static_cast<int>(-2 * k));
  if (!c.is_q_polynomial()) {
    fail(ErrorKind::InternalMismatch, "q^det does not divide m^mu_{0,psi} at " + mu.to_string());
  }
  return c;
}

std::vector<Weight> BasicFunctionEngine::layer(std::int64_t k) const {
  const BasedRootDatum& d = datum();
  const std::size_t n = d.rank();
  std::vector<Weight> out;
  if (k < 0) return out;
  const auto& supp = rep_.supp();
  if (supp.empty()) {
    if (k == 0) out.push_back(Weight::zero(n));
    return out;
  }
  std::vector<std::int64_t> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational mn, mx;
    bool first = true;
    for (const auto& it : supp) {
      const std::int64_t dg = d.det(it.weight);
      if (dg <= 0) {
        fail(ErrorKind::NonPositiveGrading, "weight " + it.weight.to_string() + " has det " + std::to_string(dg));
      }
      const Rational r = ratio(it.weight.coords[i], dg);
      if (first || r < mn) mn = r;
      if (first || r > mx) mx = r;
      first = false;
    }
    lo[i] = floor_div(mn * k);
    hi[i] = ceil_div(mx * k);
  }
  Weight x(lo);
  for (;;) {
    if (d.det(x) == k && d.is_antidominant(x) && cone_.contains(x)) out.push_back(x);
    std::size_t i = 0;
    while (i < n && x.coords[i] == hi[i]) {
      x.coords[i] = lo[i];
      ++i;
    }
    if (i == n) break;
    ++x.coords[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

BasicFunction BasicFunctionEngine::basic_series(std::int64_t max_det, unsigned threads) const {
  if (max_det < 0) fail(ErrorKind::InvalidInput, "max_det must be nonnegative");
  if (threads == 0) threads = default_threads();
  BasicFunction bf{rep_, WeightSeries(datum(), max_det)};
  sym_decomposition(static_cast<unsigned>(max_det));
  for (std::int64_t k = 0; k <= max_det; ++k) {
    const auto mus = layer(k);
    std::vector<LaurentV> values(mus.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= mus.size()) return;
        try {
          values[i] = c_mu(mus[i]);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    };
    const unsigned t = static_cast<unsigned>(std::min<std::size_t>(threads, mus.size()));
    if (t <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned j = 0; j < t; ++j) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);
    for (std::size_t i = 0; i < mus.size(); ++i) bf.coeffs.add(mus[i], values[i]);
  }
  return bf;
}

Integer classical_limit_count(const RepSpec& rep, const Weight& mu) {
  const BasedRootDatum& d = rep.datum();
  const std::int64_t k = d.det(mu);
  if (k < 0) return 0;
  std::vector<Weight> copies;
  std::vector<std::int64_t> dets;
  for (const auto& it : rep.supp()) {
    const std::int64_t dg = d.det(it.weight);
    if (dg <= 0) {
      fail(ErrorKind::NonPositiveGrading, "weight " + it.weight.to_string() + " has det " + std::to_string(dg));
    }
    for (unsigned c = 0; c < it.multiplicity; ++c) {
      copies.push_back(it.weight);
      dets.push_back(dg);
    }
  }
  Integer count = 0;
  // Choose a_j for each copy in turn; the det budget bounds every a_j.
  auto rec = [&](auto&& self, std::size_t j, std::int64_t budget, const Weight& rest) -> void {
    if (j == copies.size()) {
      if (budget == 0 && rest.is_zero()) ++count;
      return;
    }
    Weight r = rest;
    for (std::int64_t a = 0; a * dets[j] <= budget; ++a) {
      self(self, j + 1, budget - a * dets[j], r);
      r -= copies[j];
    }
  };
  rec(rec, 0, k, mu);
  return count;
}

std::string SpecializedValue::symbolic() const {
  return to_string(coefficient) + "*qF^(" + to_string(exponent) + ")";
}

std::vector<SpecializedValue> specialize(const BasicFunction& bf, const Rational& qF, const Rational& s,
                                         bool symbolic) {
  if (qF <= 1) fail(ErrorKind::InvalidInput, "qF must exceed 1");
  const BasedRootDatum& d = bf.datum();
  std::vector<SpecializedValue> out;
  for (const auto& [mu, poly] : bf.coeffs.entries()) {
    if (!poly.only_even_exponents()) fail(ErrorKind::InternalMismatch, "coefficient is not a polynomial in q");
    SpecializedValue v;
    v.mu = mu;
    v.det = d.det(mu);
    v.coefficient = 0;
    for (const auto& [e, c] : poly.terms()) v.coefficient += Rational(c) * pow(qF, -e / 2);
    v.exponent = -pairing(d.rho_neg(), mu) - s * v.det;
    if (auto p = rational_power(qF, v.exponent)) {
      v.value = v.coefficient * *p;
    } else if (!symbolic) {
      fail(ErrorKind::IrrationalHalfPower, "qF^(" + to_string(v.exponent) + ") is irrational at " + mu.to_string());
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace basicfn
