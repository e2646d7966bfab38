#include <doctest.h>

#include <algorithm>
#include <random>

#include "../common/oracles.hpp"
#include "basicfn/basic_function.hpp"
#include "basicfn/errors.hpp"
#include "basicfn/kostka.hpp"
#include "basicfn/presets.hpp"

using namespace basicfn;

namespace {

LaurentV q(int e) { return LaurentV::q_power(e); }

unsigned parts_bound(const WeightMultiset& psi, const Weight& nu) {
  // Every item has height >= 1, so the number of parts is at most the height.
  const Rational h = psi.height(nu);
  if (h < 0) return 0;
  mpz_class f = h.get_num() / h.get_den();
  return static_cast<unsigned>(f.get_ui());
}

}  // namespace

TEST_CASE("positive functionals") {
  const auto gl3 = gl_preset(3).datum;
  std::vector<Weight> cor;
  for (const auto& p : gl3.positive_roots()) cor.push_back(p.coroot);
  const auto l = positive_functional(cor);
  for (const auto& c : cor) {
    Rational s = 0;
    for (std::size_t i = 0; i < c.rank(); ++i) s += l[i] * c.coords[i];
    CHECK(s >= 1);
  }

  const Weight a({1, -1});
  try {
    positive_functional({a, -a});
    FAIL("expected NotStronglyConvex");
  } catch (const NotStronglyConvexError& e) {
    CHECK(e.kind() == ErrorKind::NotStronglyConvex);
    REQUIRE(e.witness().size() == 2);
    CHECK(e.witness()[0] == ratio(1, 2));
    CHECK(e.witness()[1] == ratio(1, 2));
  }

  const auto g = gsp4_preset();
  const auto psi = basic_multiset(g.rep);
  CHECK(psi.total_multiplicity() == 8);
  for (const auto& it : psi.items()) CHECK(psi.height(it.weight) >= 1);
}

TEST_CASE("partition function examples") {
  const auto gl3 = gl_preset(3).datum;
  const PartitionFunction p(positive_coroot_multiset(gl3));
  CHECK(p(Weight({0, 0, 0})) == 1);
  CHECK(p(Weight({1, 0, -1})) == q(1) + q(2));
  CHECK(p(Weight({-1, 0, 1})) == LaurentV());

  const Weight beta({1, -1});
  const PartitionFunction twice(WeightMultiset::certify({{beta, 2}}));
  CHECK(twice(beta) == LaurentV(2) * q(1));
  CHECK(kostant_partition_q(WeightMultiset::certify({{beta, 2}}), 2 * beta) == LaurentV(3) * q(2));
}

TEST_CASE("partition function agrees with enumeration") {
  std::vector<WeightMultiset> cases;
  cases.push_back(positive_coroot_multiset(gl_preset(3).datum));
  cases.push_back(positive_coroot_multiset(gsp4_preset().datum));
  cases.push_back(basic_multiset(gsp4_preset().rep));
  cases.push_back(basic_multiset(gl_preset(2).rep));
  cases.push_back(WeightMultiset::certify({{Weight({1, 0}), 2}, {Weight({1, 1}), 1}, {Weight({0, 1}), 3}}));
  for (const auto& psi : cases) {
    const PartitionFunction p(psi);
    for (const auto& nu : oracle::box(psi.rank(), -3, 3)) {
      if (psi.height(nu) > 8) continue;
      const LaurentV got = p(nu);
      const LaurentV want = oracle::q_partition(psi.items(), nu, parts_bound(psi, nu));
      CHECK(got == want);
      if (!got.is_zero()) {
        CHECK(got.q_degree() <= psi.height(nu));
        CHECK(got.nonnegative_coefficients());
      }
    }
  }
}

TEST_CASE("partition function ignores item order") {
  const auto base = basic_multiset(gsp4_preset().rep);
  auto items = base.items();
  std::mt19937_64 rng(2);
  const PartitionFunction p(base);
  for (int t = 0; t < 4; ++t) {
    std::shuffle(items.begin(), items.end(), rng);
    const PartitionFunction r(WeightMultiset::with_functional(items, base.functional()));
    for (const auto& nu : oracle::box(3, -2, 2)) CHECK(p(nu) == r(nu));
  }
}

TEST_CASE("partition function lowest power is the minimal number of parts") {
  const auto psi = positive_coroot_multiset(gl_preset(3).datum);
  const PartitionFunction p(psi);
  // 2 alpha_1 + 2 alpha_2 needs at least two parts (two copies of alpha_1 + alpha_2).
  const auto v = p(Weight({2, 0, -2}));
  CHECK(v.min_exponent() == 4);
}

TEST_CASE("partition function cap") {
  const auto psi = positive_coroot_multiset(gl_preset(2).datum);
  const PartitionFunction small(psi, 3);
  CHECK_NOTHROW(small(Weight({1, -1})));
  CHECK_THROWS_WITH_AS(small(Weight({9, -9})), doctest::Contains("CapExceeded"), Error);
}

TEST_CASE("uncertified multisets are rejected") {
  const Weight a({1, -1});
  CHECK_THROWS_AS(WeightMultiset::certify({{a, 1}, {-a, 1}}), NotStronglyConvexError);
  CHECK_THROWS_WITH_AS(WeightMultiset::with_functional({{a, 1}}, {Rational(-1), Rational(0)}),
                       doctest::Contains("PsiNotCertified"), Error);
}
