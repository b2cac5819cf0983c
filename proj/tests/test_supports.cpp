#include "fixtures.hpp"

#include "sparsemult/supports.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace sparsemult;

namespace {

IndexSet I(std::vector<int> one_based) { return IndexSet::from_one_based(one_based); }

bool contains(const PointSet& s, const LatticePoint& p)
{
    const auto& pts = s.points();
    return std::find(pts.begin(), pts.end(), p) != pts.end();
}

// Independent J_I scan over raw coordinates.
IndexSet brute_j_set(const SupportFamily& a, IndexSet in)
{
    std::uint32_t bits = 0;
    for (std::size_t j = 0; j < a.n(); ++j) {
        for (const auto& p : a[j].points()) {
            bool vanishes = true;
            for (std::size_t i = 0; i < a.n(); ++i) {
                vanishes = vanishes && (!in.contains(i) || p[i] == 0);
            }
            if (vanishes) {
                bits |= 1u << j;
                break;
            }
        }
    }
    return IndexSet(bits);
}

} // namespace

TEST_CASE("index sets")
{
    const auto s = I({1, 3});
    CHECK(s.bits() == 5);
    CHECK(s.to_string() == "{1,3}");
    CHECK(s.one_based() == std::vector<int>{1, 3});
    CHECK(s.complement(4) == I({2, 4}));
    CHECK(IndexSet().to_string() == "{}");
    CHECK(s.subset_of(IndexSet::full(3)));
    CHECK_FALSE(IndexSet::full(3).subset_of(s));
}

TEST_CASE("families reject malformed supports")
{
    CHECK_THROWS(SupportFamily({PointSet{{1, 0}}}));
    CHECK_THROWS(SupportFamily({PointSet{{1, -1}}, PointSet{{0, 1}}}));
    CHECK_THROWS(SupportFamily(std::vector<PointSet>{}));
}

TEST_CASE("J_I")
{
    const auto census = fixtures::census_example();
    CHECK(j_set(census, IndexSet()) == IndexSet::full(4));
    CHECK(j_set(census, I({3})) == I({1, 2, 4}));
    const SupportFamily diagonal({PointSet{{1, 1}}, PointSet{{1, 1}}});
    CHECK(j_set(diagonal, I({1})).empty());

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        std::mt19937_64 rng(seed);
        std::vector<PointSet> sets;
        for (std::size_t j = 0; j < 3; ++j) {
            sets.push_back(fixtures::random_support(rng, 3, 4, 2));
        }
        const SupportFamily a(std::move(sets));
        for (std::uint32_t bits = 0; bits < 8; ++bits) {
            CHECK(j_set(a, IndexSet(bits)) == brute_j_set(a, IndexSet(bits)));
        }
    }
}

TEST_CASE("conditions on the worked families")
{
    const auto ax = check_conditions(fixtures::axes_example());
    CHECK(ax.h1);
    CHECK(ax.h2);
    CHECK(ax.h3);
    CHECK_FALSE(ax.failing_I);

    const auto gen = check_conditions(fixtures::general_example());
    CHECK(gen.h1);
    CHECK(gen.h2);
    CHECK_FALSE(gen.h3);

    const auto diag = check_conditions(SupportFamily({PointSet{{1, 1}}, PointSet{{1, 1}}}));
    CHECK(diag.h1);
    CHECK_FALSE(diag.h2);
    REQUIRE(diag.failing_I);
    CHECK(*diag.failing_I == I({1}));

    const auto with_origin = check_conditions(fixtures::axes_example().with_origin());
    CHECK_FALSE(with_origin.h1);
}

TEST_CASE("H3 implies H2 on random families")
{
    std::mt19937_64 rng(7);
    int with_h3 = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + fixtures::draw(rng, 3);
        std::vector<PointSet> sets;
        for (std::size_t j = 0; j < n; ++j) {
            auto s = fixtures::random_support(rng, n, 4, 3);
            // Half of the families get every axis point, so both branches are exercised.
            if (trial % 2 == 0) {
                auto pts = s.points();
                for (std::size_t i = 0; i < n; ++i) {
                    LatticePoint e(n, 0);
                    e[i] = 1 + static_cast<Coord>(fixtures::draw(rng, 3));
                    if (std::find(pts.begin(), pts.end(), e) == pts.end()) {
                        pts.push_back(e);
                    }
                }
                s = PointSet(n, std::move(pts));
            }
            sets.push_back(std::move(s));
        }
        const auto r = check_conditions(SupportFamily(std::move(sets)));
        if (r.h3) {
            ++with_h3;
            CHECK(r.h2);
        }
    }
    CHECK(with_h3 >= 50);
}

TEST_CASE("strata of the four-variable example")
{
    const auto strata = enumerate_strata(fixtures::census_example());
    std::vector<IndexSet> got;
    for (const auto& s : strata) {
        got.push_back(s.I);
        CHECK(s.valid());
        CHECK(s.I.size() + s.J.size() == 4);
    }
    const std::vector<IndexSet> expected{IndexSet(), I({1, 2}), I({3}), I({1, 2, 3}), I({3, 4}), I({1, 2, 3, 4})};
    CHECK(got == expected);
}

TEST_CASE("strata of the three-variable example")
{
    const auto strata = enumerate_strata(fixtures::stratum_example());
    REQUIRE(strata.size() == 2);
    CHECK(strata[0].I.empty());
    const auto& s = strata[1];
    CHECK(s.I == I({1, 3}));
    CHECK(s.J == I({3}));
    CHECK(s.projected.size() == 2);
    CHECK(s.torus_supports.size() == 1);
}

TEST_CASE("strata of a family failing H2")
{
    const auto strata = enumerate_strata(SupportFamily({PointSet{{1, 1}}, PointSet{{1, 1}}}));
    REQUIRE(strata.size() == 1);
    CHECK(strata[0].I.empty());
    // The torus is always listed; here the single monomial leaves a zero-dimensional sum, so A3 fails.
    CHECK(strata[0].a1);
    CHECK(strata[0].a2);
    CHECK_FALSE(strata[0].a3);
}

TEST_CASE("stratum invariants on random families")
{
    for (std::uint64_t seed = 200; seed < 240; ++seed) {
        const std::size_t n = 2 + seed % 3;
        const auto a = fixtures::random_h1h2_family(seed, n, 4, 2);
        for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
            const auto d = describe_stratum(a, IndexSet(bits));
            CHECK(d.J == brute_j_set(a, d.I));
            CHECK(d.a1 == (d.I.size() + d.J.size() == n));
        }
        for (const auto& s : enumerate_strata(a)) {
            CHECK(s.I.size() + s.J.size() == n);
            for (std::uint32_t sub = 0; sub <= s.I.bits(); ++sub) {
                const IndexSet t(sub);
                if (t.subset_of(s.I)) {
                    CHECK(t.size() + j_set(a, t).size() >= n);
                }
            }
            if (!s.I.empty()) {
                const auto r = check_conditions(SupportFamily(s.projected));
                CHECK(r.h1);
                CHECK(r.h2);
            }
        }
    }
}

TEST_CASE("refined augmentation")
{
    const auto aug = augment_refined(fixtures::general_example(), 7);
    CHECK(aug.plain == fixtures::axes_example());
    CHECK(aug.with_origin == fixtures::axes_example().with_origin());

    const auto ax = fixtures::axes_example();
    CHECK(augment_refined(ax, 5).plain == ax);

    const auto one = augment_refined(SupportFamily({PointSet{{1, 1}}, PointSet{{1, 0}, {0, 1}}}), 3);
    CHECK(one.plain[0] == PointSet{{1, 1}, {3, 0}, {0, 3}});
    CHECK(one.plain[1] == PointSet{{1, 0}, {0, 1}});
    CHECK(check_conditions(one.plain).h3);
    CHECK(contains(one.with_origin[0], {0, 0}));
}

TEST_CASE("full augmentation")
{
    const auto full = augment_full(SupportFamily({PointSet{{1, 1}}, PointSet{{1, 0}}}), 2);
    CHECK(full.plain[0] == PointSet{{1, 1}, {2, 0}, {0, 2}});
    CHECK(full.plain[1] == PointSet{{1, 0}, {2, 0}, {0, 2}});

    const auto a = fixtures::general_example();
    const auto refined = augment_refined(a, 7);
    const auto f = augment_full(a, 7);
    for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t i = 0; i < 3; ++i) {
            LatticePoint e(3, 0);
            e[i] = 7;
            CHECK(contains(f.plain[j], e));
            bool meets_axis = false;
            for (const auto& p : a[j].points()) {
                bool on_axis = p[i] > 0;
                for (std::size_t k = 0; k < 3; ++k) {
                    on_axis = on_axis && (k == i || p[k] == 0);
                }
                meets_axis = meets_axis || on_axis;
            }
            CHECK(contains(refined.plain[j], e) != meets_axis);
        }
    }

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto r = fixtures::random_h1h2_family(seed, 3, 4, 3);
        const Coord m = 1 + static_cast<Coord>(seed % 6);
        const auto lo = augment_refined(r, m);
        const auto hi = augment_full(r, m);
        CHECK(check_conditions(lo.plain).h3);
        CHECK(check_conditions(lo.plain).h1);
        for (std::size_t j = 0; j < 3; ++j) {
            for (const auto& p : lo.plain[j].points()) {
                CHECK(contains(hi.plain[j], p));
            }
        }
    }
}

TEST_CASE("dominated monomials are dropped")
{
    const auto r = reduce_minimal(SupportFamily({PointSet{{1, 0}, {2, 0}, {0, 3}}, PointSet{{1, 1}}}));
    CHECK(r[0] == PointSet{{1, 0}, {0, 3}});
    CHECK(r[1] == PointSet{{1, 1}});

    const auto ex = reduce_minimal(fixtures::axes_example());
    CHECK(ex[0] == PointSet{{1, 0, 0}, {0, 1, 0}, {0, 0, 7}});

    const auto antichain = SupportFamily({PointSet{{2, 0}, {1, 1}, {0, 2}}, PointSet{{3, 0}, {0, 1}}});
    CHECK(reduce_minimal(antichain) == antichain);

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto a = fixtures::random_h1h2_family(seed, 3, 5, 3);
        const auto once = reduce_minimal(a);
        CHECK(reduce_minimal(once) == once);
        for (std::size_t j = 0; j < 3; ++j) {
            for (const auto& p : a[j].points()) {
                // Every dropped point dominates a kept one.
                bool covered = false;
                for (const auto& q : once[j].points()) {
                    bool dominated = true;
                    for (std::size_t i = 0; i < 3; ++i) {
                        dominated = dominated && q[i] <= p[i];
                    }
                    covered = covered || dominated;
                }
                CHECK(covered);
            }
        }
    }
}
