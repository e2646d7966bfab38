#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "basicfn/rational.hpp"
#include "basicfn/weight.hpp"

namespace basicfn::linalg {

using RatVector = std::vector<Rational>;
/// Row-major dense rational matrix.
using RatMatrix = std::vector<RatVector>;

RatMatrix to_rational(const std::vector<std::vector<std::int64_t>>& rows);
RatVector to_rational(std::span<const std::int64_t> v);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(RatMatrix& m);
std::size_t rank(RatMatrix m);
/// Basis of {x : m x = 0}; `cols` is needed when m has no rows.
std::vector<RatVector> nullspace(RatMatrix m, std::size_t cols);
std::optional<RatMatrix> inverse(const RatMatrix& m);
RatVector multiply(const RatMatrix& m, const RatVector& v);
/// The unique solution of m x = b, nullopt when inconsistent. Throws when
/// the solution is not unique.
std::optional<RatVector> solve_unique(const RatMatrix& m, const RatVector& b);

/// Smallest positive integer multiple with coprime entries (sign kept).
std::vector<std::int64_t> primitive(const RatVector& v);

/// Exact two-phase simplex with Bland's rule:
/// minimise c.x subject to a x = b, x >= 0. Returns nullopt when
/// infeasible; throws InternalMismatch when unbounded.
std::optional<RatVector> lp_minimize(const RatMatrix& a, const RatVector& b, const RatVector& c);

/// Hermite normal form basis of the lattice spanned by `generators`
/// (each of length `dim`). Basis vectors are returned upper-echelon with
/// positive pivots; only full-rank lattices are supported.
std::vector<std::vector<std::int64_t>> hermite_basis(const std::vector<std::vector<std::int64_t>>& generators,
                                                     std::size_t dim);

}  // namespace basicfn::linalg
