#ifndef SPARSEMULT_LINALG_HPP
#define SPARSEMULT_LINALG_HPP

#include "sparsemult/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

// Small dense exact linear algebra. Sizes here never exceed a handful of rows,
// so everything is plain Gauss-Jordan over the rationals.
namespace sparsemult::linalg {

using Matrix = std::vector<RationalPoint>;

std::size_t rank(Matrix rows);
Rational determinant(Matrix square);

/// Basis of { x : rows * x = 0 } for a matrix with `cols` columns.
std::vector<RationalPoint> nullspace(Matrix rows, std::size_t cols);

/// Unique solution of a square system, or nullopt when singular.
std::optional<RationalPoint> solve(Matrix square, RationalPoint rhs);

/// Dimension of the affine hull; -1 for an empty list.
int affine_rank(std::span<const RationalPoint> points);

Rational dot(const RationalPoint& a, const RationalPoint& b);
RationalPoint sub(const RationalPoint& a, const RationalPoint& b);
RationalPoint add(const RationalPoint& a, const RationalPoint& b);

} // namespace sparsemult::linalg

#endif
