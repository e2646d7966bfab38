#pragma once

// Brute-force reference computations. Nothing here calls the engines it is
// used to check.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "basicfn/characters.hpp"
#include "basicfn/laurent.hpp"
#include "basicfn/partition.hpp"
#include "basicfn/root_datum.hpp"

namespace oracle {

using basicfn::Integer;
using basicfn::LaurentV;
using basicfn::Weight;
using Vec = std::vector<std::int64_t>;

// Number of Gelfand-Tsetlin patterns with top row `top` (nonincreasing)
// whose row sums produce the content `content`. This is the multiplicity
// of the weight `content` in the GL(n) irreducible of highest weight `top`.
inline Integer gt_count(const Vec& top, const Vec& content) {
  const std::size_t n = top.size();
  if (content.size() != n) return 0;
  Integer total = 0;
  // row[r] has length r; row sums s_r; content_r = s_r - s_{r-1}.
  std::function<void(const Vec&, std::int64_t)> descend = [&](const Vec& upper, std::int64_t upper_sum) {
    const std::size_t len = upper.size();
    if (len == 0) {
      total += 1;
      return;
    }
    const std::int64_t want = upper_sum - content[len - 1];
    Vec row(len - 1);
    std::function<void(std::size_t, std::int64_t)> fill = [&](std::size_t i, std::int64_t sum) {
      if (i == row.size()) {
        if (sum == want) descend(row, sum);
        return;
      }
      for (std::int64_t x = upper[i + 1]; x <= upper[i]; ++x) {
        row[i] = x;
        fill(i + 1, sum + x);
      }
    };
    fill(0, 0);
  };
  std::int64_t s = 0;
  for (auto x : top) s += x;
  descend(top, s);
  return total;
}

// GL(n) anti-dominant weights are nondecreasing; the matching partition is
// the reversed vector.
inline Integer gl_weight_multiplicity(const Weight& lambda, const Weight& mu) {
  Vec top(lambda.coords.rbegin(), lambda.coords.rend());
  return gt_count(top, mu.coords);
}

// All size-k multisets of the labelled weights, summed.
inline std::map<Weight, Integer> sym_by_multisets(const std::vector<basicfn::WeightItem>& items, unsigned k,
                                                  std::size_t rank) {
  std::vector<Weight> labelled;
  for (const auto& it : items)
    for (unsigned c = 0; c < it.multiplicity; ++c) labelled.push_back(it.weight);
  std::map<Weight, Integer> out;
  Vec acc(rank, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t from, unsigned left) {
    if (left == 0) {
      out[Weight(acc)] += 1;
      return;
    }
    for (std::size_t i = from; i < labelled.size(); ++i) {
      for (std::size_t j = 0; j < rank; ++j) acc[j] += labelled[i].coords[j];
      rec(i, left - 1);
      for (std::size_t j = 0; j < rank; ++j) acc[j] -= labelled[i].coords[j];
    }
  };
  rec(0, k);
  return out;
}

// Sum over all ways to write nu as a nonnegative combination of the labelled
// vectors, each way weighted by q^{number of parts}. `max_parts` bounds the
// search; callers choose it from a positive functional.
inline LaurentV q_partition(const std::vector<basicfn::WeightItem>& items, const Weight& nu, unsigned max_parts) {
  std::vector<Vec> labelled;
  for (const auto& it : items)
    for (unsigned c = 0; c < it.multiplicity; ++c) labelled.push_back(it.weight.coords);
  const std::size_t rank = nu.rank();
  LaurentV total;
  Vec rest = nu.coords;
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned parts) {
    if (i == labelled.size()) {
      if (std::all_of(rest.begin(), rest.end(), [](std::int64_t x) { return x == 0; }))
        total += LaurentV::q_power(static_cast<int>(parts));
      return;
    }
    unsigned a = 0;
    for (;;) {
      rec(i + 1, parts + a);
      if (parts + a == max_parts) break;
      for (std::size_t j = 0; j < rank; ++j) rest[j] -= labelled[i][j];
      ++a;
    }
    for (std::size_t j = 0; j < rank; ++j) rest[j] += static_cast<std::int64_t>(a) * labelled[i][j];
  };
  rec(0, 0);
  return total;
}

// Group generated by the simple reflections acting on cocharacters, as a set
// of matrices (closure by multiplication).
inline std::size_t weyl_order_by_closure(const basicfn::BasedRootDatum& d) {
  const std::size_t n = d.rank();
  using M = std::vector<Vec>;
  std::vector<M> gens;
  for (std::size_t i = 0; i < d.simple_roots().size(); ++i) {
    M m(n, Vec(n, 0));
    for (std::size_t col = 0; col < n; ++col) {
      Vec e(n, 0);
      e[col] = 1;
      const std::int64_t p = d.simple_roots()[i].coords[col];
      for (std::size_t r = 0; r < n; ++r) m[r][col] = e[r] - p * d.simple_coroots()[i].coords[r];
    }
    gens.push_back(m);
  }
  M id(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  std::set<M> seen{id};
  std::vector<M> frontier{id};
  while (!frontier.empty()) {
    std::vector<M> next;
    for (const auto& a : frontier)
      for (const auto& g : gens) {
        M p(n, Vec(n, 0));
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c)
            for (std::size_t k = 0; k < n; ++k) p[r][c] += g[r][k] * a[k][c];
        if (seen.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
    if (seen.size() > 100000) break;
  }
  return seen.size();
}

// mu <= lambda: mu - lambda a nonnegative combination of simple coroots with
// coefficients at most `bound`.
inline bool bruhat_by_search(const basicfn::BasedRootDatum& d, const Weight& mu, const Weight& lambda,
                             std::int64_t bound) {
  const auto& cor = d.simple_coroots();
  Vec coef(cor.size(), 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == cor.size()) {
      for (std::size_t j = 0; j < mu.rank(); ++j) {
        std::int64_t s = lambda.coords[j];
        for (std::size_t k = 0; k < cor.size(); ++k) s += coef[k] * cor[k].coords[j];
        if (s != mu.coords[j]) return false;
      }
      return true;
    }
    for (std::int64_t a = 0; a <= bound; ++a) {
      coef[i] = a;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

// All integer points of [lo, hi]^rank.
inline std::vector<Weight> box(std::size_t rank, std::int64_t lo, std::int64_t hi) {
  std::vector<Weight> out;
  Vec x(rank, lo);
  for (;;) {
    out.emplace_back(x);
    std::size_t i = 0;
    while (i < rank && x[i] == hi) x[i++] = lo;
    if (i == rank) break;
    ++x[i];
  }
  return out;
}

// Complete homogeneous symmetric polynomial h_k of the values, via all
// monomials of degree k.
inline basicfn::Rational h_k(const std::vector<basicfn::Rational>& xs, unsigned k) {
  basicfn::Rational total = 0;
  std::function<void(std::size_t, unsigned, basicfn::Rational)> rec = [&](std::size_t i, unsigned left,
                                                                          basicfn::Rational acc) {
    if (left == 0) {
      total += acc;
      return;
    }
    if (i == xs.size()) return;
    rec(i, left - 1, acc * xs[i]);
    rec(i + 1, left, acc);
  };
  rec(0, k, 1);
  return total;
}

}  // namespace oracle
