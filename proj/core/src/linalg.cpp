#include "sparsemult/linalg.hpp"

#include "sparsemult/error.hpp"

#include <utility>

namespace sparsemult::linalg {

namespace {

// Reduces in place to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && sgn(m[sel][col]) == 0) {
            ++sel;
        }
        if (sel == m.size()) {
            continue;
        }
        std::swap(m[row], m[sel]);
        const Rational inv = 1 / m[row][col];
        for (std::size_t c = col; c < cols; ++c) {
            m[row][c] *= inv;
        }
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || sgn(m[r][col]) == 0) {
                continue;
            }
            const Rational factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c) {
                m[r][c] -= factor * m[row][c];
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t rank(Matrix rows)
{
    if (rows.empty()) {
        return 0;
    }
    const std::size_t cols = rows.front().size();
    return rref(rows, cols).size();
}

Rational determinant(Matrix a)
{
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && sgn(a[sel][col]) == 0) {
            ++sel;
        }
        if (sel == n) {
            return 0;
        }
        if (sel != col) {
            std::swap(a[sel], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (sgn(a[r][col]) == 0) {
                continue;
            }
            const Rational factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) {
                a[r][c] -= factor * a[col][c];
            }
        }
    }
    return det;
}

std::vector<RationalPoint> nullspace(Matrix rows, std::size_t cols)
{
    const auto pivots = rref(rows, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<RationalPoint> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        RationalPoint v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -rows[r][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RationalPoint> solve(Matrix a, RationalPoint rhs)
{
    const std::size_t n = a.size();
    for (std::size_t r = 0; r < n; ++r) {
        a[r].push_back(rhs[r]);
    }
    const auto pivots = rref(a, n + 1);
    if (pivots.size() != n || (n > 0 && pivots.back() != n - 1)) {
        return std::nullopt;
    }
    RationalPoint x(n);
    for (std::size_t r = 0; r < n; ++r) {
        x[r] = a[r][n];
    }
    return x;
}

int affine_rank(std::span<const RationalPoint> points)
{
    if (points.empty()) {
        return -1;
    }
    Matrix diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) {
        diffs.push_back(sub(points[i], points[0]));
    }
    if (diffs.empty() || diffs.front().empty()) {
        return 0;
    }
    return static_cast<int>(rank(std::move(diffs)));
}

Rational dot(const RationalPoint& a, const RationalPoint& b)
{
    if (a.size() != b.size()) {
        throw InputError("dot: dimension mismatch");
    }
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

RationalPoint sub(const RationalPoint& a, const RationalPoint& b)
{
    RationalPoint r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
    }
    return r;
}

RationalPoint add(const RationalPoint& a, const RationalPoint& b)
{
    RationalPoint r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] + b[i];
    }
    return r;
}

} // namespace sparsemult::linalg
