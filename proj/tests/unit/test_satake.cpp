#include <doctest.h>

#include <random>

#include "../common/oracles.hpp"
#include "basicfn/errors.hpp"
#include "basicfn/presets.hpp"
#include "basicfn/satake.hpp"

using namespace basicfn;

namespace {

LaurentV q(int e) { return LaurentV::q_power(e); }

SatakeParameter param(std::vector<Rational> c, long qf) { return SatakeParameter::make(std::move(c), Rational(qf)); }

// All anti-dominant weights mu <= lambda for lambda in `tops`.
std::vector<Weight> saturate(const BasedRootDatum& d, const std::vector<Weight>& tops) {
  std::set<Weight> s;
  for (const auto& t : tops)
    for (const auto& [w, m] : irreducible_weights(d, t).weights)
      if (d.is_antidominant(w)) s.insert(w);
  return {s.begin(), s.end()};
}

}  // namespace

TEST_CASE("Kato-Lusztig matrices") {
  const auto gl2 = gl_preset(2).datum;
  const auto one = kato_lusztig_matrix(gl2, {Weight({0, 0})});
  CHECK(one.m[0][0] == 1);
  CHECK(one.inverse[0][0] == 1);

  const auto m2 = kato_lusztig_matrix(gl2, {Weight({1, 1}), Weight({0, 2})});
  REQUIRE(m2.weights.size() == 2);
  CHECK(m2.weights[0] == Weight({0, 2}));
  CHECK(m2.m[0][1] == q(-1));
  CHECK(m2.m[1][0] == LaurentV());
  CHECK(m2.m[0][0] == q(-1));
  CHECK(m2.m[1][1] == 1);
  // M = K(q^-1) diag(q^-<rho,mu>); the unitriangular factor has inverse entry -q^-1.
  CHECK(m2.inverse[0][0] == q(1));
  CHECK(m2.inverse[0][1] == q(1) * -q(-1));
  CHECK(m2.verify_inverse());

  CHECK_THROWS_WITH_AS(kato_lusztig_matrix(gl2, {Weight({0, 2})}), doctest::Contains("NotSaturated"), Error);

  const auto g = gsp4_preset();
  const BasicFunctionEngine eg(g.rep);
  const auto layer2 = eg.layer(2);
  CHECK(layer2.size() == 3);
  const auto mg = kato_lusztig_matrix(g.datum, layer2);
  CHECK(mg.weights.size() == 3);
  CHECK(mg.verify_inverse());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < i; ++j) CHECK(mg.m[i][j].is_zero());
}

TEST_CASE("character evaluation") {
  const auto gl2 = gl_preset(2).datum;
  const auto c = param({Rational(2), Rational(3)}, 9);
  CHECK(char_eval(gl2, Weight({0, 0}), c) == 1);
  CHECK(char_eval(gl2, Weight({0, 1}), c) == 5);
  CHECK(char_eval(gl2, Weight({0, 2}), c) == 19);
}

TEST_CASE("Macdonald spherical function") {
  const auto gl2 = gl_preset(2).datum;
  const auto c = param({Rational(2), Rational(3)}, 9);
  CHECK(macdonald_spherical(gl2, Weight({0, 0}), c) == 1);
  // Two-term Weyl sum written out by hand.
  const Rational v = macdonald_spherical(gl2, Weight({0, 1}), c);
  const Rational x = ratio(2, 3);  // c^{(1,-1)}
  const Rational manual =
      3 * (Rational(3) * (1 - x / 9) / (1 - x) + Rational(2) * (1 - (1 / x) / 9) / (1 - 1 / x));
  CHECK(v == manual);
  CHECK_THROWS_WITH_AS(macdonald_spherical(gl2, Weight({0, 1}), param({Rational(2), Rational(2)}, 9)),
                       doctest::Contains("DegenerateParameter"), Error);
  CHECK_THROWS_AS(SatakeParameter::make({Rational(2), Rational(3)}, Rational(2)), Error);
}

TEST_CASE("Macdonald function is W-invariant in the parameter") {
  std::mt19937_64 rng(17);
  for (const auto& pr : {gl_preset(3), gsp4_preset()}) {
    const auto& d = pr.datum;
    const BasicFunctionEngine e(pr.rep);
    for (int t = 0; t < 3; ++t) {
      const auto c = random_parameter(d, Rational(25), rng);
      for (const auto& mu : e.layer(2)) {
        const Rational base = macdonald_spherical(d, mu, c);
        for (const auto& w : d.weyl_group()) {
          // (w c)^nu = c^{w nu}.
          std::vector<Rational> wc(d.rank());
          for (std::size_t i = 0; i < d.rank(); ++i) {
            Weight e_i = Weight::zero(d.rank());
            e_i.coords[i] = 1;
            wc[i] = c.monomial(w.act(e_i));
          }
          CHECK(macdonald_spherical(d, mu, SatakeParameter::make(wc, c.qF)) == base);
        }
      }
    }
  }
}

TEST_CASE("round trip through the Hecke basis") {
  std::mt19937_64 rng(23);
  struct Case {
    Preset p;
    std::vector<Weight> tops;
  };
  const auto g = gsp4_preset();
  std::vector<Case> cases = {{gl_preset(2), {Weight({0, 2}), Weight({0, 3})}},
                             {gl_preset(3), {Weight({-1, 0, 1}), Weight({0, 0, 2})}},
                             {g, {Weight({-2, -4, 2}), Weight({-1, -1, 0})}}};
  for (const auto& cs : cases) {
    const auto& d = cs.p.datum;
    const auto s = saturate(d, cs.tops);
    const auto km = kato_lusztig_matrix(d, s);
    CHECK(km.verify_inverse());
    for (int t = 0; t < 2; ++t) {
      const auto c = random_parameter(d, Rational(9), rng);
      for (std::size_t i = 0; i < km.weights.size(); ++i) {
        // tr V(lambda) = sum_mu M[lambda][mu](vF) S(1_{K mu K})(c).
        Rational rhs = 0;
        for (std::size_t j = 0; j < km.weights.size(); ++j) {
          if (km.m[i][j].is_zero()) continue;
          rhs += km.m[i][j].evaluate(c.vF) * macdonald_spherical(d, km.weights[j], c);
        }
        CHECK(rhs == char_eval(d, km.weights[i], c));
      }
    }
  }
}

TEST_CASE("L-factor routes") {
  const auto gl2 = gl_preset(2);
  const auto c = param({Rational(2), Rational(3)}, 9);
  const auto l = lfactor_series(gl2.rep, c, 3);
  CHECK(l[0] == 1);
  CHECK(l[1] == 5);
  CHECK(l[2] == 19);
  CHECK(l[3] == 65);

  std::mt19937_64 rng(4);
  for (const auto& pr : {gl_preset(2), gl_preset(3), gl_preset(4), gsp4_preset()}) {
    const auto cp = random_parameter(pr.datum, Rational(25), rng);
    const auto a = lfactor_via_characters(pr.rep, cp, 6);
    const auto b = lfactor_via_product(pr.rep, cp, 6);
    CHECK(a == b);
    std::vector<Rational> vals;
    for (const auto& it : pr.rep.supp()) vals.push_back(cp.monomial(it.weight));
    for (unsigned k = 0; k <= 6; ++k) CHECK(a[k] == oracle::h_k(vals, k));
  }
}

TEST_CASE("L-factor identity") {
  const BasicFunctionEngine e2(gl_preset(2).rep);
  for (const auto& chk : verify_l_identity(e2, param({Rational(2), Rational(3)}, 9), 3)) CHECK(chk.equal);
  const auto g = gsp4_preset();
  const BasicFunctionEngine eg(g.rep);
  std::mt19937_64 rng(7);
  const auto c = random_parameter(g.datum, Rational(25), rng);
  const auto checks = verify_l_identity(eg, c, 3);
  REQUIRE(checks.size() == 4);
  CHECK(checks[0].lhs == 1);
  for (const auto& chk : checks) CHECK(chk.lhs == chk.rhs);
}
