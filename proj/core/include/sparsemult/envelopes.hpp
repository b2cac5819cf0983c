#ifndef SPARSEMULT_ENVELOPES_HPP
#define SPARSEMULT_ENVELOPES_HPP

#include "sparsemult/geometry.hpp"

#include <span>
#include <vector>

namespace sparsemult {

enum class Side { lower, upper };

/// x -> gradient . x + constant
struct AffineMap {
    RationalPoint gradient;
    Rational constant;

    Rational operator()(const RationalPoint& x) const;
};

struct Piece {
    Polytope cell;
    AffineMap map;
};

/// Piecewise-linear function on domain = pi(source), where pi drops the last coordinate.
/// Lower side: the convex function x -> min{t : (x,t) in source}; upper side: the concave max.
struct PLFunction {
    Polytope source;
    Side side = Side::lower;
    Polytope domain;
    /// Projected lower (upper) facets of source; they tile the domain.
    std::vector<Piece> pieces;

    /// Dimension of the domain.
    std::size_t dim() const { return domain.dim(); }
    /// Value at x, through the first piece whose cell contains x. Throws InputError outside the domain.
    Rational operator()(const RationalPoint& x) const;
};

PLFunction lower_envelope(const Polytope& q);
PLFunction upper_envelope(const Polytope& q);

struct AxisSimplex {
    std::vector<Integer> lambdas;
    /// conv{0, lambda_1 e_1, ..., lambda_n e_n}
    Polytope simplex;
};

/// lambda_i is the least positive integer mu with mu e_i in q. q must lie in the nonnegative orthant.
AxisSimplex axis_simplex(const Polytope& q);

/// f on r. r must be contained in the domain and be either full-dimensional or a single point.
PLFunction restrict(const PLFunction& f, const Polytope& r);

/// Infimal convolution of convex functions, realized as the lower envelope of the Minkowski sum of sources.
PLFunction inf_convolution(std::span<const PLFunction> fs);
/// Supremal convolution of concave functions, realized as the upper envelope of the Minkowski sum of sources.
PLFunction sup_convolution(std::span<const PLFunction> fs);

PLFunction negate(const PLFunction& f);

/// Exact integral of f over r (r inside the domain). Lower-dimensional pieces of the intersection add nothing.
/// In a zero-dimensional domain the measure is counting measure, so the integral is the value at the point.
Rational integrate(const PLFunction& f, const Polytope& r);
Rational integrate(const PLFunction& f);

/// Alternating sum over nonempty J of the integral of the infimal convolution of f_j, j in J,
/// over the sum of their domains. Takes n convex functions on R^{n-1}.
Rational mixed_integral_prime(std::span<const PLFunction> fs);
/// Same with concave functions and supremal convolution.
Rational mixed_integral(std::span<const PLFunction> fs);

} // namespace sparsemult

#endif
