#include "basicfn/cone.hpp"

#include <algorithm>
#include <set>

#include "basicfn/errors.hpp"
#include "basicfn/linalg.hpp"
#include "basicfn/partition.hpp"

namespace basicfn {

namespace {

using linalg::RatMatrix;
using linalg::RatVector;

Rational rdot(const RatVector& a, const std::vector<std::int64_t>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

// Calls f on every k-subset of {0..n-1}.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool SupportCone::contains(const Weight& x) const {
  for (const auto& e : equations)
    if (dot(e, x.coords) != 0) return false;
  for (const auto& f : facets)
    if (dot(f, x.coords) < 0) return false;
  return true;
}

SupportCone cone_from_generators(const std::vector<Weight>& generators, std::size_t rank) {
  SupportCone cone;
  cone.rank = rank;
  std::vector<std::vector<std::int64_t>> gens;
  {
    std::set<std::vector<std::int64_t>> seen;
    for (const auto& g : generators) {
      if (g.rank() != rank) fail(ErrorKind::InvalidInput, "generator has the wrong rank");
      if (g.is_zero()) continue;
      auto p = linalg::primitive(linalg::to_rational(g.coords));
      if (seen.insert(p).second) gens.push_back(std::move(p));
    }
  }
  if (gens.empty()) {
    for (std::size_t i = 0; i < rank; ++i) {
      std::vector<std::int64_t> e(rank, 0);
      e[i] = 1;
      cone.equations.push_back(std::move(e));
    }
    return cone;
  }
  {
    std::vector<Weight> ws;
    for (const auto& g : gens) ws.emplace_back(g);
    positive_functional(ws);  // throws when not pointed
  }

  const RatMatrix g_rows = linalg::to_rational(gens);
  for (const auto& e : linalg::nullspace(g_rows, rank)) cone.equations.push_back(linalg::primitive(e));
  RatMatrix span = g_rows;
  const auto pivots = linalg::row_reduce(span);
  const std::size_t d = pivots.size();
  span.resize(d);  // basis of the linear span

  std::set<std::vector<std::int64_t>> facets;
  for_each_subset(gens.size(), d - 1, [&](const std::vector<std::size_t>& subset) {
    // f = sum c_j span_j with <f, g_s> = 0 for s in subset.
    RatMatrix a(subset.size(), RatVector(d));
    for (std::size_t r = 0; r < subset.size(); ++r)
      for (std::size_t j = 0; j < d; ++j) a[r][j] = rdot(span[j], gens[subset[r]]);
    const auto sol = linalg::nullspace(a, d);
    if (sol.size() != 1) return;
    RatVector f(rank, Rational(0));
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < rank; ++i) f[i] += sol[0][j] * span[j][i];
    bool pos = false, neg = false;
    for (const auto& g : gens) {
      const Rational v = rdot(f, g);
      pos = pos || v > 0;
      neg = neg || v < 0;
    }
    if (pos && neg) return;
    auto p = linalg::primitive(f);
    if (neg) {
      for (auto& x : p) x = -x;
    }
    facets.insert(std::move(p));
  });
  cone.facets.assign(facets.begin(), facets.end());

  for (const auto& g : gens) {
    RatMatrix tight = linalg::to_rational(cone.equations);
    for (const auto& f : cone.facets)
      if (dot(f, g) == 0) tight.push_back(linalg::to_rational(f));
    if (linalg::rank(tight) == rank - 1) cone.rays.emplace_back(g);
  }
  std::sort(cone.rays.begin(), cone.rays.end());
  return cone;
}

}  // namespace basicfn
