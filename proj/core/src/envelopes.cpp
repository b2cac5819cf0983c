#include "sparsemult/envelopes.hpp"

#include "sparsemult/error.hpp"
#include "sparsemult/linalg.hpp"

#include <algorithm>
#include <optional>

namespace sparsemult {

using linalg::dot;

Rational AffineMap::operator()(const RationalPoint& x) const { return dot(gradient, x) + constant; }

Rational PLFunction::operator()(const RationalPoint& x) const
{
    for (const auto& piece : pieces) {
        if (piece.cell.contains(x)) {
            return piece.map(x);
        }
    }
    throw InputError("evaluation point outside the domain");
}

namespace {

RationalPoint drop_last(const RationalPoint& p) { return RationalPoint(p.begin(), p.end() - 1); }

PLFunction envelope(const Polytope& q, Side side)
{
    if (q.dim() == 0) {
        throw InputError("envelope of a polytope in R^0");
    }
    const std::size_t d = q.dim();
    PLFunction f;
    f.source = q;
    f.side = side;
    if (d == 1 && q.affine_dim() == 0) {
        // A point on the line: both envelopes are the constant on the point of R^0.
        f.domain = convex_hull({RationalPoint{}});
        f.pieces.push_back({f.domain, {RationalPoint{}, q.vertices().front().front()}});
        return f;
    }
    if (!q.full_dimensional()) {
        throw InputError("degenerate polytope");
    }
    std::vector<RationalPoint> shadow;
    for (const auto& v : q.vertices()) {
        shadow.push_back(drop_last(v));
    }
    f.domain = convex_hull(std::move(shadow));
    for (const auto& facet : q.facets()) {
        const Rational& last = facet.normal.back();
        if ((side == Side::lower && sgn(last) <= 0) || (side == Side::upper && sgn(last) >= 0)) {
            continue;
        }
        // On the facet: normal' . x + last * t = offset.
        Piece piece;
        for (std::size_t c = 0; c + 1 < d; ++c) {
            piece.map.gradient.push_back(-facet.normal[c] / last);
        }
        piece.map.constant = facet.offset / last;
        std::vector<RationalPoint> cell;
        for (auto v : facet.vertices) {
            cell.push_back(drop_last(q.vertices()[v]));
        }
        piece.cell = convex_hull(std::move(cell));
        f.pieces.push_back(std::move(piece));
    }
    return f;
}

bool inside(const Polytope& outer, const Polytope& inner)
{
    return std::all_of(inner.vertices().begin(), inner.vertices().end(),
                       [&](const RationalPoint& x) { return outer.contains(x); });
}

// Part of the cell inside r, both full-dimensional in the same space.
Polytope clip(const Polytope& cell, const Polytope& r)
{
    if (cell.dim() == 0) {
        return cell;
    }
    return intersect(cell, r);
}

PLFunction convolution(std::span<const PLFunction> fs, Side side)
{
    if (fs.empty()) {
        throw InputError("convolution of an empty list");
    }
    const std::size_t d = fs.front().source.dim();
    for (const auto& f : fs) {
        if (f.side != side) {
            throw InputError(side == Side::lower ? "infimal convolution needs lower-side functions"
                                                 : "supremal convolution needs upper-side functions");
        }
        if (f.source.dim() != d) {
            throw InputError("convolution: dimension mismatch");
        }
    }
    std::vector<RationalPoint> sum = fs.front().source.vertices();
    for (std::size_t j = 1; j < fs.size(); ++j) {
        sum = minkowski_vertices(sum, fs[j].source.vertices());
    }
    const Polytope q = convex_hull(std::move(sum));
    return side == Side::lower ? lower_envelope(q) : upper_envelope(q);
}

Rational mixed(std::span<const PLFunction> fs, Side side)
{
    const std::size_t n = fs.size();
    if (n == 0 || n > 16) {
        throw InputError("mixed integral: between 1 and 16 functions required");
    }
    for (const auto& f : fs) {
        if (f.side != side) {
            throw InputError(side == Side::lower ? "mixed integral needs lower-side functions"
                                                 : "mixed integral needs upper-side functions");
        }
        if (f.dim() + 1 != n) {
            throw InputError("mixed integral: " + std::to_string(n) + " functions must live in dimension " +
                             std::to_string(n - 1));
        }
    }
    Rational total = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<PLFunction> chosen;
        for (std::size_t j = 0; j < n; ++j) {
            if (mask & (1u << j)) {
                chosen.push_back(fs[j]);
            }
        }
        const auto g = chosen.size() == 1 ? chosen.front() : convolution(chosen, side);
        const Rational term = integrate(g);
        if ((n - chosen.size()) % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

} // namespace

PLFunction lower_envelope(const Polytope& q) { return envelope(q, Side::lower); }

PLFunction upper_envelope(const Polytope& q) { return envelope(q, Side::upper); }

AxisSimplex axis_simplex(const Polytope& q)
{
    const std::size_t n = q.dim();
    if (q.affine_dim() < 0 || n == 0) {
        throw InputError("axis simplex of an empty polytope");
    }
    for (const auto& v : q.vertices()) {
        if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) < 0; })) {
            throw InputError("axis simplex: polytope leaves the nonnegative orthant");
        }
    }
    // Inside the orthant the polytope meets the i-th axis in the hull of its vertices on that axis.
    AxisSimplex out;
    std::vector<RationalPoint> corners{RationalPoint(n, Rational(0))};
    for (std::size_t i = 0; i < n; ++i) {
        std::optional<Rational> lo;
        std::optional<Rational> hi;
        for (const auto& v : q.vertices()) {
            bool on_axis = true;
            for (std::size_t c = 0; c < n; ++c) {
                on_axis = on_axis && (c == i || sgn(v[c]) == 0);
            }
            if (on_axis) {
                if (!lo || v[i] < *lo) {
                    lo = v[i];
                }
                if (!hi || v[i] > *hi) {
                    hi = v[i];
                }
            }
        }
        Integer mu;
        if (lo) {
            mpz_cdiv_q(mu.get_mpz_t(), lo->get_num_mpz_t(), lo->get_den_mpz_t());
            if (mu < 1) {
                mu = 1;
            }
        }
        if (!lo || Rational(mu) > *hi) {
            throw ConditionError("H3 violated on axis " + std::to_string(i + 1));
        }
        out.lambdas.push_back(mu);
        RationalPoint e(n, Rational(0));
        e[i] = mu;
        corners.push_back(std::move(e));
    }
    out.simplex = convex_hull(std::move(corners));
    return out;
}

PLFunction restrict(const PLFunction& f, const Polytope& r)
{
    if (r.dim() != f.dim()) {
        throw InputError("restrict: dimension mismatch");
    }
    if (r.affine_dim() < 0 || !inside(f.domain, r)) {
        throw InputError("restriction region is not contained in the domain");
    }
    const Rational step = f.side == Side::lower ? 1 : -1;
    if (!r.full_dimensional()) {
        if (r.affine_dim() != 0) {
            throw InputError("restriction region must be full-dimensional or a single point");
        }
        const auto& x = r.vertices().front();
        PLFunction out;
        out.side = f.side;
        out.domain = r;
        Piece piece{r, {RationalPoint(f.dim(), Rational(0)), f(x)}};
        auto bottom = x;
        bottom.push_back(piece.map.constant);
        auto top = x;
        top.push_back(piece.map.constant + step);
        out.source = convex_hull({bottom, top});
        out.pieces.push_back(std::move(piece));
        return out;
    }
    // The graph over every vertex of every clipped piece, thickened away from the envelope side,
    // has exactly the restricted function as its envelope.
    std::vector<RationalPoint> graph;
    for (const auto& piece : f.pieces) {
        const Polytope part = clip(piece.cell, r);
        if (!part.full_dimensional()) {
            continue;
        }
        for (const auto& v : part.vertices()) {
            auto p = v;
            p.push_back(piece.map(v));
            graph.push_back(p);
            p.back() += step;
            graph.push_back(std::move(p));
        }
    }
    const Polytope source = convex_hull(std::move(graph));
    return f.side == Side::lower ? lower_envelope(source) : upper_envelope(source);
}

PLFunction inf_convolution(std::span<const PLFunction> fs)
{
    if (fs.size() == 1 && fs.front().side == Side::lower) {
        return fs.front();
    }
    return convolution(fs, Side::lower);
}

PLFunction sup_convolution(std::span<const PLFunction> fs)
{
    if (fs.size() == 1 && fs.front().side == Side::upper) {
        return fs.front();
    }
    return convolution(fs, Side::upper);
}

PLFunction negate(const PLFunction& f)
{
    PLFunction out;
    out.side = f.side == Side::lower ? Side::upper : Side::lower;
    std::vector<RationalPoint> mirrored;
    for (auto v : f.source.vertices()) {
        v.back() = -v.back();
        mirrored.push_back(std::move(v));
    }
    out.source = convex_hull(std::move(mirrored));
    out.domain = f.domain;
    for (const auto& piece : f.pieces) {
        Piece p = piece;
        for (auto& g : p.map.gradient) {
            g = -g;
        }
        p.map.constant = -p.map.constant;
        out.pieces.push_back(std::move(p));
    }
    return out;
}

Rational integrate(const PLFunction& f, const Polytope& r)
{
    if (r.dim() != f.dim()) {
        throw InputError("integrate: dimension mismatch");
    }
    if (r.affine_dim() < 0 || !inside(f.domain, r)) {
        throw InputError("integration region is not contained in the domain");
    }
    if (f.dim() == 0) {
        return f(r.vertices().front());
    }
    if (!r.full_dimensional()) {
        return 0;
    }
    const std::size_t d = f.dim();
    const Rational d_fact = factorial(static_cast<unsigned>(d));
    Rational total = 0;
    for (const auto& piece : f.pieces) {
        const Polytope part = clip(piece.cell, r);
        if (!part.full_dimensional()) {
            continue;
        }
        const auto& v = part.vertices();
        for (const auto& simplex : triangulate(part)) {
            linalg::Matrix m;
            Rational values = 0;
            for (std::size_t i = 0; i < simplex.size(); ++i) {
                values += piece.map(v[simplex[i]]);
                if (i > 0) {
                    m.push_back(linalg::sub(v[simplex[i]], v[simplex[0]]));
                }
            }
            const Rational vol = abs(linalg::determinant(std::move(m))) / d_fact;
            total += vol * values / static_cast<unsigned long>(d + 1);
        }
    }
    return total;
}

Rational integrate(const PLFunction& f) { return integrate(f, f.domain); }

Rational mixed_integral_prime(std::span<const PLFunction> fs) { return mixed(fs, Side::lower); }

Rational mixed_integral(std::span<const PLFunction> fs) { return mixed(fs, Side::upper); }

} // namespace sparsemult
