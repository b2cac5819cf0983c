// Shared support families and seeded generators for the test suites.
#ifndef SPARSEMULT_TESTS_FIXTURES_HPP
#define SPARSEMULT_TESTS_FIXTURES_HPP

#include "sparsemult/geometry.hpp"
#include "sparsemult/supports.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace fixtures {

using sparsemult::LatticePoint;
using sparsemult::PointSet;
using sparsemult::SupportFamily;

// Pure powers of every variable in every polynomial; origin of multiplicity 3.
inline SupportFamily axes_example()
{
    return SupportFamily({
        PointSet{{1, 0, 0}, {0, 1, 0}, {0, 2, 0}, {2, 1, 1}, {0, 0, 7}},
        PointSet{{2, 0, 0}, {3, 0, 0}, {2, 1, 0}, {0, 0, 3}, {0, 7, 0}},
        PointSet{{1, 0, 0}, {1, 1, 0}, {0, 0, 2}, {0, 1, 3}, {0, 7, 0}},
    });
}

// Same family without the axis points; needs augmentation, M = 7.
inline SupportFamily general_example()
{
    return SupportFamily({
        PointSet{{1, 0, 0}, {0, 1, 0}, {0, 2, 0}, {2, 1, 1}},
        PointSet{{2, 0, 0}, {3, 0, 0}, {2, 1, 0}, {0, 0, 3}},
        PointSet{{1, 0, 0}, {1, 1, 0}, {0, 0, 2}, {0, 1, 3}},
    });
}

// Planar pair whose lower envelopes are drawn as the piecewise-linear chains; origin multiplicity 7.
inline SupportFamily planar_example()
{
    return SupportFamily({
        PointSet{{2, 0}, {1, 1}, {0, 4}, {1, 3}, {3, 3}},
        PointSet{{4, 0}, {2, 1}, {0, 4}, {2, 5}, {1, 3}},
    });
}

// The minimal planar pair obtained by projecting the three-variable stratum example onto I = {1,3}.
inline SupportFamily planar_minimal()
{
    return SupportFamily({
        PointSet{{2, 0}, {1, 1}, {0, 4}},
        PointSet{{4, 0}, {2, 1}, {0, 4}},
    });
}

// Three equations whose only nontrivial stratum is I = {1,3}.
inline SupportFamily stratum_example()
{
    return SupportFamily({
        PointSet{{2, 0, 0}, {2, 2, 0}, {1, 0, 1}, {1, 2, 1}, {0, 0, 4}, {0, 2, 4}},
        PointSet{{4, 0, 0}, {4, 2, 0}, {2, 0, 1}, {2, 2, 1}, {0, 0, 4}, {0, 2, 4}},
        PointSet{{1, 0, 0}, {1, 2, 0}, {0, 0, 0}, {0, 2, 0}, {0, 0, 1}, {0, 2, 1}},
    });
}

// Four equations with six zero strata and 65 zeros counted with multiplicity.
inline SupportFamily census_example()
{
    return SupportFamily({
        PointSet{{1, 0, 0, 0}, {1, 1, 0, 0}},
        PointSet{{0, 2, 0, 0}, {2, 4, 0, 0}, {3, 0, 0, 0}},
        PointSet{{0, 0, 1, 0}, {1, 0, 1, 0}, {0, 0, 2, 2}, {0, 0, 3, 1}},
        PointSet{{0, 0, 0, 3}, {0, 3, 0, 3}, {0, 0, 2, 3}, {0, 0, 0, 5}, {0, 0, 2, 5}},
    });
}

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound)
{
    // Rejection sampling keeps the draw identical across standard libraries.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

/// Random point set in [0, max_exp]^n without the origin, 1..max_points points.
inline PointSet random_support(std::mt19937_64& rng, std::size_t n, int max_points, int max_exp)
{
    const auto count = 1 + draw(rng, static_cast<std::uint64_t>(max_points));
    std::vector<LatticePoint> pts;
    while (pts.size() < count) {
        LatticePoint p(n);
        bool zero = true;
        for (auto& c : p) {
            c = static_cast<sparsemult::Coord>(draw(rng, static_cast<std::uint64_t>(max_exp) + 1));
            zero = zero && c == 0;
        }
        if (!zero) {
            pts.push_back(std::move(p));
        }
    }
    return PointSet(n, std::move(pts));
}

/// Random family with every support free of the origin; rejection-samples until H2 holds.
inline SupportFamily random_h1h2_family(std::uint64_t seed, std::size_t n, int max_points, int max_exp)
{
    std::mt19937_64 rng(seed);
    for (;;) {
        std::vector<PointSet> sets;
        for (std::size_t j = 0; j < n; ++j) {
            sets.push_back(random_support(rng, n, max_points, max_exp));
        }
        SupportFamily family(std::move(sets));
        if (sparsemult::check_conditions(family).h2) {
            return family;
        }
    }
}

} // namespace fixtures

#endif
