#include "fixtures.hpp"

#include "sparsemult/error.hpp"
#include "sparsemult/geometry.hpp"
#include "sparsemult/linalg.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace sparsemult;

namespace {

RationalPoint rp(std::initializer_list<Rational> xs) { return RationalPoint(xs); }

// Independent 2D oracle: monotone-chain hull + shoelace.
Rational shoelace_area(std::vector<RationalPoint> pts)
{
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) {
        return 0;
    }
    auto cross = [](const RationalPoint& o, const RationalPoint& a, const RationalPoint& b) -> Rational {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    std::vector<RationalPoint> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && sgn(cross(hull[k - 2], hull[k - 1], pts[i])) <= 0) {
            --k;
        }
        hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
        while (k >= t && sgn(cross(hull[k - 2], hull[k - 1], pts[i - 1])) <= 0) {
            --k;
        }
        hull[k++] = pts[i - 1];
    }
    hull.resize(k - 1);
    Rational area = 0;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const auto& a = hull[i];
        const auto& b = hull[(i + 1) % hull.size()];
        area += a[0] * b[1] - a[1] * b[0];
    }
    return abs(area) / 2;
}

// Volume after a coordinate permutation and reflection: the pulling apex changes,
// so the triangulation is a different one.
Rational reflected_volume(const std::vector<RationalPoint>& pts, std::mt19937_64& rng)
{
    const std::size_t d = pts.front().size();
    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<RationalPoint> out;
    for (const auto& p : pts) {
        RationalPoint q(d);
        for (std::size_t c = 0; c < d; ++c) {
            q[c] = -p[perm[c]];
        }
        out.push_back(std::move(q));
    }
    return volume(convex_hull(std::move(out)));
}

std::vector<PointSet> random_family(std::mt19937_64& rng, std::size_t n, int max_points, int max_exp)
{
    std::vector<PointSet> out;
    for (std::size_t j = 0; j < n; ++j) {
        out.push_back(fixtures::random_support(rng, n, max_points, max_exp));
    }
    return out;
}

// Brute-force extreme point test: p is extreme iff it is not in the hull of the others
// (decided by a 2D orientation scan, enough for the planar cases used here).
bool extreme_2d(const std::vector<RationalPoint>& pts, std::size_t i)
{
    std::vector<RationalPoint> others;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (k != i) {
            others.push_back(pts[k]);
        }
    }
    auto all = others;
    all.push_back(pts[i]);
    return shoelace_area(all) != shoelace_area(others) || others.size() < 3;
}

} // namespace

TEST_CASE("convex hull removes interior points")
{
    const auto p = convex_hull({rp({0, 0}), rp({1, 0}), rp({0, 1}), rp({Rational(1, 2), Rational(1, 2)})});
    CHECK(p.affine_dim() == 2);
    CHECK(p.vertices() == std::vector<RationalPoint>{rp({0, 0}), rp({0, 1}), rp({1, 0})});
    CHECK(p.facets().size() == 3);
}

TEST_CASE("convex hull of collinear points is a segment without facets")
{
    const auto p = convex_hull({rp({0, 0, 0}), rp({1, 1, 1}), rp({2, 2, 2})});
    CHECK(p.affine_dim() == 1);
    CHECK(p.vertices() == std::vector<RationalPoint>{rp({0, 0, 0}), rp({2, 2, 2})});
    CHECK(p.facets().empty());
}

TEST_CASE("convex hull keeps the three points of a projected support")
{
    const PointSet b{{2, 0}, {1, 1}, {0, 4}};
    const auto pts = b.rational_points();
    const auto p = convex_hull(b);
    CHECK(p.affine_dim() == 2);
    std::size_t extreme = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        extreme += extreme_2d(pts, i) ? 1 : 0;
    }
    CHECK(extreme == 3);
    CHECK(p.vertices().size() == 3);
}

TEST_CASE("convex hull rejects empty input")
{
    CHECK_THROWS_WITH_AS(convex_hull(std::vector<RationalPoint>{}), "empty point set", InputError);
}

TEST_CASE("facet invariants hold on random hulls")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t d = 2 + trial % 3;
        const auto set = fixtures::random_support(rng, d, 12, 4);
        const auto p = convex_hull(set);
        if (!p.full_dimensional()) {
            continue;
        }
        for (const auto& f : p.facets()) {
            std::vector<RationalPoint> on;
            for (auto v : f.vertices) {
                on.push_back(p.vertices()[v]);
            }
            CHECK(linalg::affine_rank(on) == static_cast<int>(d) - 1);
            for (const auto& v : p.vertices()) {
                CHECK(linalg::dot(f.normal, v) >= f.offset);
            }
        }
        for (const auto& x : set.rational_points()) {
            CHECK(p.contains(x));
        }
    }
}

TEST_CASE("volume of cubes and standard simplices")
{
    for (std::size_t d = 1; d <= 4; ++d) {
        std::vector<RationalPoint> cube;
        for (std::uint32_t m = 0; m < (1u << d); ++m) {
            RationalPoint p(d);
            for (std::size_t c = 0; c < d; ++c) {
                p[c] = (m >> c) & 1u;
            }
            cube.push_back(p);
        }
        CHECK(volume(convex_hull(cube)) == 1);

        std::vector<RationalPoint> simplex{RationalPoint(d, Rational(0))};
        for (std::size_t c = 0; c < d; ++c) {
            RationalPoint e(d, Rational(0));
            e[c] = 1;
            simplex.push_back(e);
        }
        CHECK(volume(convex_hull(simplex)) == 1 / factorial(static_cast<unsigned>(d)));
    }
}

TEST_CASE("volume of the envelope chain region matches trapezoid sums")
{
    // Trapezoids under the chain (0,8),(1,5),(3,2),(4,1),(6,0).
    const std::vector<std::pair<int, int>> chain{{0, 8}, {1, 5}, {3, 2}, {4, 1}, {6, 0}};
    Rational under = 0;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        under += Rational(chain[i].second + chain[i + 1].second, 2) * (chain[i + 1].first - chain[i].first);
    }
    CHECK(under == 16);
    // The chain is convex, so its hull is the region between the chain and the chord.
    std::vector<RationalPoint> pts;
    for (auto [x, y] : chain) {
        pts.push_back(rp({x, y}));
    }
    CHECK(volume(convex_hull(pts)) == Rational(24) - under);
    pts.push_back(rp({0, 0}));
    CHECK(volume(convex_hull(pts)) == 24);
}

TEST_CASE("volume agrees with independent computations on random polytopes")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t d = 1 + trial % 3;
        const auto pts = fixtures::random_support(rng, d, 10, 5).rational_points();
        const auto p = convex_hull(pts);
        const Rational v = volume(p);
        CHECK(v == reflected_volume(pts, rng));
        if (d == 2) {
            CHECK(v == shoelace_area(pts));
        }
    }
}

TEST_CASE("minkowski sums")
{
    CHECK(minkowski_sum(PointSet{{0, 0}}, PointSet{{3, 4}}) == PointSet{{3, 4}});
    CHECK(minkowski_sum(PointSet{{0}, {1}}, PointSet{{0}, {1}}) == PointSet{{0}, {1}, {2}});
    // Projected axis simplices of the planar example: [0,2] + [0,4] = [0,6].
    const auto hull = convex_hull(minkowski_sum(PointSet{{0}, {2}}, PointSet{{0}, {4}}));
    CHECK(hull.vertices() == std::vector<RationalPoint>{rp({0}), rp({6})});
    CHECK_THROWS_AS(minkowski_sum(PointSet{{0}}, PointSet{{0, 0}}), InputError);
}

TEST_CASE("mixed volume of unit segments is one")
{
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<PointSet> family;
        for (std::size_t j = 0; j < n; ++j) {
            LatticePoint e(n, 0);
            e[j] = 1;
            family.push_back(PointSet(n, {LatticePoint(n, 0), e}));
        }
        CHECK(mixed_volume(family) == 1);
    }
}

TEST_CASE("mixed volumes of the worked three-variable families")
{
    const auto axes = fixtures::axes_example();
    CHECK(mixed_volume(axes.sets()) == 144);
    CHECK(mixed_volume(axes.with_origin().sets()) == 147);
    const auto general = fixtures::general_example();
    CHECK(mixed_volume(general.sets()) == 22);
    CHECK(mixed_volume(general.with_origin().sets()) == 28);
}

TEST_CASE("mixed volume rejects malformed families")
{
    std::vector<PointSet> wrong_dim{PointSet{{1, 0}}, PointSet{{0, 1, 0}}};
    CHECK_THROWS_AS(mixed_volume(wrong_dim), InputError);
    std::vector<PointSet> with_empty{PointSet{{1, 0}}, PointSet(2)};
    CHECK_THROWS_AS(mixed_volume(with_empty), InputError);
}

TEST_CASE("mixed volume properties on random families")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 24; ++trial) {
        const std::size_t n = 2 + trial % 2;
        auto family = random_family(rng, n, 5, 4);
        const Integer mv = mixed_volume(family);

        auto perm = family;
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(mixed_volume(perm) == mv);

        std::vector<PointSet> shifted;
        for (const auto& a : family) {
            LatticePoint t(n);
            for (auto& c : t) {
                c = static_cast<Coord>(fixtures::draw(rng, 7)) - 3;
            }
            shifted.push_back(minkowski_sum(a, PointSet(n, {t})));
        }
        CHECK(mixed_volume(shifted) == mv);

        auto bigger = family;
        bigger[trial % n].insert(fixtures::random_support(rng, n, 1, 4).points().front());
        CHECK(mixed_volume(bigger) >= mv);

        const std::vector<PointSet> same(n, family[0]);
        CHECK(Rational(mixed_volume(same)) == factorial(static_cast<unsigned>(n)) * volume(convex_hull(family[0])));

        const Integer sm = stable_mixed_volume(family);
        CHECK(mv <= sm);
        CHECK(sm <= mixed_volume(fixtures::SupportFamily(family).with_origin().sets()));
    }
}

TEST_CASE("stable mixed volume")
{
    CHECK(stable_mixed_volume(fixtures::axes_example().sets()) == 147);
    CHECK(stable_mixed_volume(fixtures::census_example().sets()) == 65);
    for (std::size_t n = 1; n <= 3; ++n) {
        std::vector<PointSet> family;
        for (std::size_t j = 0; j < n; ++j) {
            LatticePoint e(n, 0);
            e[j] = 1;
            family.push_back(PointSet(n, {e}));
        }
        CHECK(stable_mixed_volume(family) == 1);
    }
}

TEST_CASE("lifted cells carry positive last normal coordinates")
{
    const auto cells = lifted_cells(fixtures::axes_example().sets());
    REQUIRE_FALSE(cells.empty());
    bool found_trivial = false;
    for (const auto& c : cells) {
        CHECK(sgn(c.normal.back()) > 0);
        const bool trivial = std::all_of(c.normal.begin(), c.normal.end() - 1,
                                         [](const Rational& x) { return sgn(x) == 0; });
        if (trivial) {
            found_trivial = true;
            CHECK(c.parts == fixtures::axes_example().sets());
        }
        // Under H1 and H3 every cell is stable.
        CHECK(c.stable);
    }
    CHECK(found_trivial);
}

TEST_CASE("coordinate projection")
{
    const std::vector<std::size_t> first_two{0, 1};
    CHECK(project(PointSet{{1, 0, 0}, {1, 0, 5}}, first_two) == PointSet{{1, 0}});
    const std::vector<std::size_t> last_two{2, 3};
    CHECK(project(PointSet{{1, 0, 0, 0}, {1, 1, 0, 0}}, last_two) == PointSet{{0, 0}});
    const std::vector<std::size_t> all{0, 1, 2};
    const PointSet s{{1, 2, 3}, {0, 0, 1}};
    CHECK(project(s, all) == s);
    const std::vector<std::size_t> bad{3};
    CHECK_THROWS_AS(project(s, bad), InputError);
}
