#include "basicfn/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "basicfn/errors.hpp"

namespace basicfn::linalg {

RatMatrix to_rational(const std::vector<std::vector<std::int64_t>>& rows) {
  RatMatrix m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.push_back(to_rational(r));
  return m;
}

RatVector to_rational(std::span<const std::int64_t> v) {
  RatVector out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

std::vector<std::size_t> row_reduce(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(RatMatrix m) { return row_reduce(m).size(); }

std::vector<RatVector> nullspace(RatMatrix m, std::size_t cols) {
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix aug(n, RatVector(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  RatMatrix inv(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

RatVector multiply(const RatMatrix& m, const RatVector& v) {
  RatVector out(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

std::optional<RatVector> solve_unique(const RatMatrix& m, const RatVector& b) {
  if (m.empty()) return RatVector{};
  const std::size_t cols = m[0].size();
  RatMatrix aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  if (pivots.size() != cols) fail(ErrorKind::InternalMismatch, "linear system has no unique solution");
  RatVector x(cols);
  for (std::size_t i = 0; i < cols; ++i) x[i] = aug[i][cols];
  return x;
}

std::vector<std::int64_t> primitive(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& x : v) {
    Integer z = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    ints.push_back(z);
  }
  std::vector<std::int64_t> out;
  for (auto& z : ints) {
    if (g != 0) z /= g;
    out.push_back(z.get_si());
  }
  return out;
}

namespace {

struct Tableau {
  RatMatrix rows;  // constraint rows, last column is the right-hand side
  RatVector obj;   // reduced costs, last entry is minus the objective value
  std::vector<std::size_t> basis;
  std::size_t cols = 0;  // variable count (excluding rhs)

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    auto eliminate = [&](RatVector& row) {
      if (row[c] == 0) return;
      const Rational f = row[c];
      for (std::size_t j = 0; j <= cols; ++j) row[j] -= f * rows[r][j];
    };
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r) eliminate(rows[i]);
    eliminate(obj);
    basis[r] = c;
  }

  // Bland's rule over columns in [0, allowed).
  void run(std::size_t allowed) {
    for (;;) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (obj[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == allowed) return;
      std::size_t leave = rows.size();
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        Rational ratio = rows[i][cols] / rows[i][enter];
        if (leave == rows.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows.size()) fail(ErrorKind::InternalMismatch, "linear program is unbounded");
      pivot(leave, enter);
    }
  }
};

}  // namespace

std::optional<RatVector> lp_minimize(const RatMatrix& a, const RatVector& b, const RatVector& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  Tableau t;
  t.cols = n + m;
  t.rows.assign(m, RatVector(n + m + 1, Rational(0)));
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    t.rows[i][n + i] = 1;
    t.rows[i][n + m] = flip ? Rational(-b[i]) : b[i];
    t.basis[i] = n + i;
  }
  // Phase one: minimise the sum of artificials.
  t.obj.assign(n + m + 1, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.obj[j] -= t.rows[i][j];
    t.obj[n + m] -= t.rows[i][n + m];
  }
  t.run(n + m);
  if (t.obj[n + m] != 0) return std::nullopt;
  // Drive remaining artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t c_in = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (t.rows[i][j] != 0) {
        c_in = j;
        break;
      }
    }
    if (c_in == n) {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      continue;
    }
    t.pivot(i, c_in);
    ++i;
  }
  // Phase two.
  t.obj.assign(n + m + 1, Rational(0));
  for (std::size_t j = 0; j < n; ++j) t.obj[j] = c[j];
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const Rational cb = c[t.basis[i]];
    if (cb == 0) continue;
    for (std::size_t j = 0; j <= n + m; ++j) t.obj[j] -= cb * t.rows[i][j];
  }
  t.run(n);
  RatVector x(n, Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i) x[t.basis[i]] = t.rows[i][n + m];
  return x;
}

std::vector<std::vector<std::int64_t>> hermite_basis(const std::vector<std::vector<std::int64_t>>& generators,
                                                     std::size_t dim) {
  // Work on rows = generators; integer row operations produce an upper
  // echelon form whose nonzero rows are a lattice basis.
  std::vector<std::vector<Integer>> m;
  for (const auto& g : generators) {
    if (g.size() != dim) fail(ErrorKind::InvalidInput, "generator dimension mismatch");
    m.emplace_back(g.begin(), g.end());
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < m.size(); ++c) {
    // Euclid on column c among rows r..end.
    for (;;) {
      std::size_t best = m.size();
      for (std::size_t i = r; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        if (best == m.size() || abs(m[i][c]) < abs(m[best][c])) best = i;
      }
      if (best == m.size()) break;
      std::swap(m[r], m[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        Integer f;
        mpz_fdiv_q(f.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
        for (std::size_t j = 0; j < dim; ++j) m[i][j] -= f * m[r][j];
        if (m[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r < m.size() && m[r][c] != 0) {
      if (m[r][c] < 0)
        for (auto& x : m[r]) x = -x;
      // Reduce rows above into [0, pivot).
      for (std::size_t i = 0; i < r; ++i) {
        Integer f;
        mpz_fdiv_q(f.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
        for (std::size_t j = 0; j < dim; ++j) m[i][j] -= f * m[r][j];
      }
      ++r;
    }
  }
  if (r != dim) fail(ErrorKind::InvalidInput, "lattice is not of full rank");
  std::vector<std::vector<std::int64_t>> basis;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<std::int64_t> v;
    for (const auto& x : m[i]) v.push_back(x.get_si());
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace basicfn::linalg
