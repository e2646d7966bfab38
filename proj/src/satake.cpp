#include "basicfn/satake.hpp"

#include <algorithm>
#include <set>

#include "basicfn/errors.hpp"

namespace basicfn {

namespace {

// 2 <rho_{B^-}, mu>.
std::int64_t twice_rho(const BasedRootDatum& d, const Weight& mu) { return dot(d.rho_neg().doubled, mu.coords); }

}  // namespace

bool KLMatrix::verify_inverse() const {
  const std::size_t n = weights.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      LaurentV s;
      for (std::size_t k = 0; k < n; ++k) s += m[i][k] * inverse[k][j];
      if (s != LaurentV(i == j ? 1 : 0)) return false;
    }
  return true;
}

KLMatrix kato_lusztig_matrix(const LusztigQ& kostka, std::vector<Weight> s) {
  const BasedRootDatum& d = kostka.datum();
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  const std::set<Weight> members(s.begin(), s.end());
  for (const auto& lambda : s) {
    for (const auto& [w, mult] : irreducible_weights(d, lambda).weights) {
      if (d.is_antidominant(w) && !members.count(w)) {
        fail(ErrorKind::NotSaturated, w.to_string() + " <= " + lambda.to_string() + " is missing");
      }
    }
  }
  std::stable_sort(s.begin(), s.end(),
                   [&](const Weight& a, const Weight& b) { return twice_rho(d, a) > twice_rho(d, b); });

  KLMatrix out;
  out.weights = s;
  const std::size_t n = s.size();
  out.m.assign(n, std::vector<LaurentV>(n));
  out.inverse.assign(n, std::vector<LaurentV>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!d.bruhat_leq(s[j], s[i])) continue;
      out.m[i][j] = kostka(s[i], s[j]).inverted().shifted(static_cast<int>(-twice_rho(d, s[j])));
      if (j < i) fail(ErrorKind::InternalMismatch, "weight order does not refine the Bruhat order");
    }
  // Back substitution, row by row of the inverse.
  for (std::size_t i = 0; i < n; ++i) {
    auto inv_diag = LaurentV(1).divided_by_unit(out.m[i][i]);
    if (!inv_diag) fail(ErrorKind::InternalMismatch, "diagonal entry is not a unit");
    out.inverse[i][i] = *inv_diag;
    for (std::size_t j = i + 1; j < n; ++j) {
      LaurentV acc;
      for (std::size_t k = i; k < j; ++k) acc += out.inverse[i][k] * out.m[k][j];
      auto q = (-acc).divided_by_unit(out.m[j][j]);
      out.inverse[i][j] = *q;
    }
  }
  return out;
}

KLMatrix kato_lusztig_matrix(const BasedRootDatum& d, std::vector<Weight> s) {
  return kato_lusztig_matrix(LusztigQ(d), std::move(s));
}

SatakeParameter SatakeParameter::make(std::vector<Rational> coords, const Rational& qF) {
  for (const auto& c : coords)
    if (c == 0) fail(ErrorKind::InvalidInput, "Satake parameter has a zero coordinate");
  if (qF <= 1) fail(ErrorKind::InvalidInput, "qF must exceed 1");
  auto v = rational_power(qF, ratio(1, 2));
  if (!v) fail(ErrorKind::IrrationalHalfPower, "qF = " + to_string(qF) + " is not a rational square");
  return SatakeParameter{std::move(coords), qF, *v};
}

Rational SatakeParameter::monomial(const Weight& nu) const {
  Rational r = 1;
  for (std::size_t i = 0; i < nu.rank(); ++i) r *= pow(coords[i], nu.coords[i]);
  return r;
}

bool is_regular(const BasedRootDatum& d, const SatakeParameter& c) {
  for (const auto& w : d.weyl_group())
    for (const auto& p : d.positive_roots())
      if (c.monomial(w.act(p.coroot)) == 1) return false;
  return true;
}

SatakeParameter random_parameter(const BasedRootDatum& d, const Rational& qF, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  for (;;) {
    std::vector<Rational> coords(d.rank());
    for (auto& x : coords) {
      int a = 0;
      while (a == 0) a = num(rng);
      x = ratio(a, den(rng));
    }
    SatakeParameter c = SatakeParameter::make(std::move(coords), qF);
    if (is_regular(d, c)) return c;
  }
}

Rational char_eval(const CharacterTable& t, const SatakeParameter& c) {
  Rational s = 0;
  for (const auto& [w, m] : t.weights) s += Rational(m) * c.monomial(w);
  return s;
}

Rational char_eval(const BasedRootDatum& d, const Weight& lambda, const SatakeParameter& c) {
  return char_eval(irreducible_weights(d, lambda), c);
}

Rational macdonald_spherical(const BasedRootDatum& d, const Weight& mu, const SatakeParameter& c) {
  if (!d.is_antidominant(mu)) fail(ErrorKind::NotAntiDominant, mu.to_string() + " is not anti-dominant");
  const Rational q_inv = 1 / c.qF;
  Rational sum = 0;
  for (const auto& w : d.weyl_group()) {
    Rational term = c.monomial(w.act(mu));
    for (const auto& p : d.positive_roots()) {
      const Rational x = c.monomial(w.act(p.coroot));
      if (x == 1) fail(ErrorKind::DegenerateParameter, "denominator vanishes; choose another parameter");
      term *= (1 - q_inv * x) / (1 - x);
    }
    sum += term;
  }
  Rational stab = 0;
  for (const auto& w : d.weyl_group())
    if (w.act(mu) == mu) stab += pow(q_inv, w.length);
  return pow(c.vF, twice_rho(d, mu)) / stab * sum;
}

std::vector<Rational> lfactor_via_characters(const RepSpec& rep, const SatakeParameter& c, unsigned max_k) {
  std::vector<Rational> out;
  for (const auto& t : sym_power_characters(rep, max_k)) out.push_back(char_eval(t, c));
  return out;
}

std::vector<Rational> lfactor_via_product(const RepSpec& rep, const SatakeParameter& c, unsigned max_k) {
  std::vector<Rational> out(max_k + 1, Rational(0));
  out[0] = 1;
  for (const auto& it : rep.supp()) {
    const Rational t = c.monomial(it.weight);
    // Multiply by (1 - t X)^{-1} once per copy.
    for (unsigned copy = 0; copy < it.multiplicity; ++copy)
      for (unsigned k = 1; k <= max_k; ++k) out[k] += t * out[k - 1];
  }
  return out;
}

std::vector<Rational> lfactor_series(const RepSpec& rep, const SatakeParameter& c, unsigned max_k) {
  auto a = lfactor_via_characters(rep, c, max_k);
  const auto b = lfactor_via_product(rep, c, max_k);
  for (unsigned k = 0; k <= max_k; ++k) {
    if (a[k] != b[k]) {
      fail(ErrorKind::InternalMismatch, "L-factor routes differ at degree " + std::to_string(k) + ": " +
                                            to_string(a[k]) + " vs " + to_string(b[k]));
    }
  }
  return a;
}

std::vector<LDegreeCheck> verify_l_identity(const BasicFunctionEngine& engine, const SatakeParameter& c,
                                            unsigned max_k) {
  const BasedRootDatum& d = engine.datum();
  const auto lhs = lfactor_series(engine.rep(), c, max_k);
  std::vector<LDegreeCheck> out;
  for (unsigned k = 0; k <= max_k; ++k) {
    Rational rhs = 0;
    for (const auto& mu : engine.layer(k)) {
      const LaurentV p = engine.c_mu(mu);  // c_mu(q^{-1}) in v
      if (p.is_zero()) continue;
      const Rational c_at_qf = p.evaluate(1 / c.vF);
      rhs += c_at_qf * pow(c.vF, -twice_rho(d, mu)) * macdonald_spherical(d, mu, c);
    }
    out.push_back({k, lhs[k], rhs, lhs[k] == rhs});
  }
  return out;
}

}  // namespace basicfn
