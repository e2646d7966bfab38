// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "../common/oracles.hpp"
#include "basicfn/basic_function.hpp"
#include "basicfn/kostka.hpp"
#include "basicfn/presets.hpp"
#include "basicfn/satake.hpp"

using namespace basicfn;

namespace {

struct Outcome {
  std::size_t checks = 0;
  std::string failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failure.empty()) failure = what;
  }
  template <class A, class B>
  void equal(const A& a, const B& b, const std::string& where) {
    ++checks;
    if (!(a == b) && failure.empty()) {
      std::ostringstream os;
      os << where << ": " << show(a) << " != " << show(b);
      failure = os.str();
    }
  }

 private:
  static std::string show(const LaurentV& p) { return p.to_string(); }
  static std::string show(const Rational& r) { return to_string(r); }
  static std::string show(const Integer& z) { return z.get_str(); }
  static std::string show(std::size_t n) { return std::to_string(n); }
  static std::string show(bool b) { return b ? "true" : "false"; }
};

// Nondecreasing vectors of length n, entries >= lo, summing to k.
std::vector<Weight> gl_antidominant(unsigned n, std::int64_t lo, std::int64_t k) {
  std::vector<Weight> out;
  std::vector<std::int64_t> v;
  std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t min, std::int64_t rest) {
    const auto left = static_cast<std::int64_t>(n - v.size());
    if (left == 0) {
      if (rest == 0) out.emplace_back(v);
      return;
    }
    for (std::int64_t x = min; x * left <= rest; ++x) {
      v.push_back(x);
      rec(x, rest - x);
      v.pop_back();
    }
  };
  rec(lo, k);
  return out;
}

struct Suite {
  BasedRootDatum datum;
  std::vector<Weight> lambdas;
};

std::vector<Suite> kostka_suite() {
  const auto g = gsp4_preset().datum;
  return {
      {gl_preset(2).datum, {Weight({0, 3}), Weight({-1, 2}), Weight({0, 4})}},
      {gl_preset(3).datum, {Weight({-1, 0, 1}), Weight({0, 0, 3}), Weight({0, 1, 2}), Weight({-2, 0, 2})}},
      {gl_preset(4).datum, {Weight({0, 0, 1, 1}), Weight({-1, 0, 0, 1}), Weight({0, 0, 0, 3}), Weight({0, 0, 1, 2})}},
      {g, {Weight({-1, -2, 1}), Weight({-2, -4, 2}), Weight({-1, -1, 0}), Weight({-2, -3, 2}), Weight({-3, -5, 3})}},
  };
}

Outcome gl_closed_form() {
  Outcome o;
  for (unsigned n = 2; n <= 4; ++n) {
    const BasicFunctionEngine e(gl_preset(n).rep);
    for (std::int64_t k = 0; k <= 6; ++k)
      for (const auto& mu : gl_antidominant(n, -3, k)) {
        const LaurentV c = e.c_mu(mu);
        const LaurentV closed = gl_closed_cmu(n, mu);
        o.equal(c, closed, "GL(" + std::to_string(n) + ") mu=" + mu.to_string());
        const bool in_lambda = mu.coords.front() >= 0;
        if (in_lambda) {
          o.expect(c.only_even_exponents() && c.terms().size() == 1 && c.at_one() == 1,
                   "not a monomial at " + mu.to_string());
        } else {
          o.expect(c.is_zero(), "nonzero off the monoid at " + mu.to_string());
        }
      }
  }
  return o;
}

Outcome gl_product() {
  Outcome o;
  for (unsigned n = 1; n <= 4; ++n) {
    const BasicFunctionEngine e(gl_preset(n).rep);
    const auto series = e.basic_series(6).coeffs;
    const auto product = gl_product_series(n, 6);
    std::set<Weight> keys;
    for (const auto& [mu, c] : series.entries()) keys.insert(mu);
    for (const auto& [mu, c] : product.entries()) keys.insert(mu);
    for (const auto& mu : keys) o.equal(series.at(mu), product.at(mu), "GL(" + std::to_string(n) + ") mu=" + mu.to_string());
    o.expect(series == product, "series differ");
  }
  return o;
}

Outcome dual_route() {
  Outcome o;
  const std::vector<std::pair<Preset, std::int64_t>> cases = {{gl_preset(3), 5}, {gsp4_preset(), 4}};
  for (const auto& [p, max_det] : cases) {
    const BasicFunctionEngine e(p.rep);
    for (std::int64_t k = 0; k <= max_det; ++k)
      for (const auto& mu : e.layer(k)) o.equal(e.c_mu(mu), e.c_mu_via_gkf(mu), p.name + " mu=" + mu.to_string());
  }
  return o;
}

Outcome specialization() {
  Outcome o;
  std::size_t lambdas = 0;
  for (const auto& s : kostka_suite()) {
    const LusztigQ kq(s.datum);
    for (const auto& lambda : s.lambdas) {
      ++lambdas;
      for (const auto& [mu, m] : irreducible_weights(s.datum, lambda).weights)
        o.equal(kq(lambda, mu).at_one(), m, s.datum.label() + " lambda=" + lambda.to_string() + " mu=" + mu.to_string());
    }
  }
  o.expect(lambdas >= 10, "suite too small");
  return o;
}

Outcome degree_positivity_vanishing() {
  Outcome o;
  for (const auto& s : kostka_suite()) {
    const auto& d = s.datum;
    const LusztigQ kq(d);
    for (const auto& lambda : s.lambdas) {
      const std::string at = d.label() + " lambda=" + lambda.to_string();
      for (const auto& [mu, m] : irreducible_weights(d, lambda).weights) {
        if (!d.is_antidominant(mu)) continue;
        const LaurentV k = kq(lambda, mu);
        o.expect(k.nonnegative_coefficients(), at + " negative coefficient at mu=" + mu.to_string());
        const std::int64_t twice = dot(d.rho_neg().doubled, (lambda - mu).coords);
        o.equal(static_cast<std::size_t>(2 * k.q_degree()), static_cast<std::size_t>(twice),
                at + " degree at mu=" + mu.to_string());
      }
      for (const auto& mu : oracle::box(d.rank(), -3, 3)) {
        if (d.bruhat_leq(mu, lambda)) continue;
        o.equal(kq(lambda, mu), LaurentV(), at + " vanishing at mu=" + mu.to_string());
      }
    }
  }
  return o;
}

Outcome classical_limit() {
  Outcome o;
  for (const auto& p : {gl_preset(2), gl_preset(3), gl_preset(4), gsp4_preset()}) {
    const BasicFunctionEngine e(p.rep);
    const auto bf = e.basic_series(5);
    for (std::int64_t k = 0; k <= 5; ++k) {
      const auto sym = oracle::sym_by_multisets(p.rep.supp(), static_cast<unsigned>(k), p.datum.rank());
      for (const auto& [mu, c] : bf.coeffs.entries()) {
        if (p.datum.det(mu) != k) continue;
        const auto it = sym.find(mu);
        const Integer count = it == sym.end() ? Integer(0) : it->second;
        o.equal(c.at_one(), count, p.name + " mu=" + mu.to_string());
        o.equal(classical_limit_count(p.rep, mu), count, p.name + " library count at mu=" + mu.to_string());
      }
    }
  }
  return o;
}

Outcome satake_and_l() {
  Outcome o;
  for (const auto& p : {gl_preset(2), gsp4_preset()}) {
    const BasicFunctionEngine e(p.rep);
    for (std::int64_t k = 0; k <= 4; ++k) {
      const auto km = kato_lusztig_matrix(p.datum, e.layer(k));
      o.expect(km.verify_inverse(), p.name + " M*M^-1 != I on layer " + std::to_string(k));
    }
    const Rational qf = p.name == "gl2" ? Rational(9) : Rational(25);
    std::mt19937_64 rng(2024);
    for (int sample = 0; sample < 5; ++sample) {
      const auto c = random_parameter(p.datum, qf, rng);
      for (const auto& chk : verify_l_identity(e, c, 3))
        o.equal(chk.lhs, chk.rhs, p.name + " sample " + std::to_string(sample) + " degree " + std::to_string(chk.degree));
    }
  }
  return o;
}

Outcome gsp4_combinatorics() {
  Outcome o;
  const auto g = gsp4_preset();
  const BasicFunctionEngine e(g.rep);
  const std::vector<std::size_t> expected = {1, 1, 3, 3, 6, 6, 10};
  for (std::int64_t k = 0; k <= 6; ++k) o.equal(e.layer_count(k), expected[k], "layer " + std::to_string(k));
  for (const auto& w : oracle::box(3, -8, 6)) {
    const std::int64_t k = g.datum.det(w);
    if (k < 0 || k > 6) continue;
    o.equal(gsp4_cone_member(w), g.datum.is_antidominant(w) && e.cone().contains(w), "cone at " + w.to_string());
  }
  bool witness = false;
  for (std::int64_t k = 0; k <= 4 && !witness; ++k)
    for (const auto& mu : e.layer(k)) witness = witness || e.c_mu(mu).at_one() >= 2;
  o.expect(witness, "no mu with det <= 4 and c_mu(1) >= 2");
  return o;
}

Outcome sym_irreducible() {
  Outcome o;
  for (const auto& p : {gl_preset(1), gl_preset(2), gl_preset(3), gl_preset(4), gsp4_preset()}) {
    for (unsigned k = 0; k <= 6; ++k) {
      const auto dec = decompose_character(sym_power_character(p.rep, k));
      o.expect(dec.size() == 1 && dec[0].second == 1, p.name + " Sym^" + std::to_string(k) + " is reducible");
    }
  }
  return o;
}

Outcome ngo_recipe() {
  Outcome o;
  for (unsigned n = 2; n <= 4; ++n) {
    std::vector<std::int64_t> xi(n - 1, 0);
    xi.back() = -1;
    const auto ext = ngo_extend(simply_connected_datum("A" + std::to_string(n - 1)), xi);
    const auto iso = find_isomorphism(ext, gl_preset(n));
    o.expect(iso.has_value(), "SL(" + std::to_string(n) + ") extension not isomorphic to GL(" + std::to_string(n) + ")");
    if (iso) {
      std::ostringstream os;
      for (const auto& r : iso->map.rows()) os << Weight(r).to_string();
      std::cout << "      A" << n - 1 << " -> gl" << n << " map rows " << os.str() << '\n';
    }
  }
  const auto ext = ngo_extend(simply_connected_datum("C2"), {0, -1});
  const auto iso = find_isomorphism(ext, gsp4_preset());
  o.expect(iso.has_value(), "Sp(4) extension not isomorphic to GSp(4)");
  if (iso) {
    std::ostringstream os;
    for (const auto& r : iso->map.rows()) os << Weight(r).to_string();
    std::cout << "      C2 -> gsp4 map rows " << os.str() << '\n';
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"GL(n) closed form", 60, gl_closed_form},
      {"GL(n) generating product", 30, gl_product},
      {"dual-route identity", 300, dual_route},
      {"specialization to weight multiplicities", 300, specialization},
      {"degree, positivity and vanishing", 300, degree_positivity_vanishing},
      {"classical limit", 300, classical_limit},
      {"Satake round trip and L-identity", 300, satake_and_l},
      {"GSp(4) combinatorics", 300, gsp4_combinatorics},
      {"irreducibility of symmetric powers", 300, sym_irreducible},
      {"central extension recipe", 300, ngo_recipe},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.failure = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.failure.empty() && secs > criteria[i].budget_seconds) o.failure = "over time budget";
    const bool ok = o.failure.empty() && o.checks > 0;
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].name << "  (" << o.checks
              << " checks, " << secs << " s)";
    if (!ok) std::cout << "  first failure: " << (o.failure.empty() ? "no checks ran" : o.failure);
    std::cout << '\n';
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
