#include "sparsemult/supports.hpp"

#include "sparsemult/error.hpp"
#include "sparsemult/linalg.hpp"

#include <algorithm>

namespace sparsemult {

IndexSet IndexSet::from_one_based(const std::vector<int>& indices)
{
    std::uint32_t bits = 0;
    for (int i : indices) {
        if (i < 1 || i > 32) {
            throw InputError("index " + std::to_string(i) + " out of range");
        }
        bits |= 1u << (i - 1);
    }
    return IndexSet(bits);
}

std::vector<std::size_t> IndexSet::indices() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < 32; ++i) {
        if (contains(i)) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<int> IndexSet::one_based() const
{
    std::vector<int> out;
    for (auto i : indices()) {
        out.push_back(static_cast<int>(i) + 1);
    }
    return out;
}

std::string IndexSet::to_string() const
{
    std::string s = "{";
    bool first = true;
    for (int i : one_based()) {
        if (!first) {
            s += ",";
        }
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

SupportFamily::SupportFamily(std::vector<PointSet> supports) : supports_(std::move(supports))
{
    const std::size_t n = supports_.size();
    if (n == 0) {
        throw InputError("support family: at least one support required");
    }
    if (n > 16) {
        throw InputError("support family: at most 16 variables supported");
    }
    for (std::size_t j = 0; j < n; ++j) {
        const auto& a = supports_[j];
        if (a.empty()) {
            throw InputError("support " + std::to_string(j + 1) + " is empty");
        }
        if (a.dim() != n) {
            throw InputError("support " + std::to_string(j + 1) + " has dimension " + std::to_string(a.dim()) +
                             ", expected " + std::to_string(n));
        }
        for (const auto& p : a) {
            if (std::any_of(p.begin(), p.end(), [](Coord c) { return c < 0; })) {
                throw InputError("support " + std::to_string(j + 1) + " has a negative exponent");
            }
        }
    }
}

SupportFamily SupportFamily::with_origin() const
{
    std::vector<PointSet> out;
    for (const auto& a : supports_) {
        out.push_back(a.with_origin());
    }
    return SupportFamily(std::move(out));
}

namespace {

bool vanishes_on(const LatticePoint& a, IndexSet I)
{
    for (auto i : I.indices()) {
        if (a[i] != 0) {
            return false;
        }
    }
    return true;
}

// Points of A_j vanishing on I (the support of the specialized polynomial).
std::vector<LatticePoint> restricted(const PointSet& a, IndexSet I)
{
    std::vector<LatticePoint> out;
    for (const auto& p : a) {
        if (vanishes_on(p, I)) {
            out.push_back(p);
        }
    }
    return out;
}

bool meets_axis(const PointSet& a, std::size_t axis)
{
    return std::any_of(a.begin(), a.end(), [&](const LatticePoint& p) {
        for (std::size_t c = 0; c < p.size(); ++c) {
            if (c != axis && p[c] != 0) {
                return false;
            }
        }
        return true;
    });
}

} // namespace

IndexSet j_set(const SupportFamily& family, IndexSet I)
{
    std::uint32_t bits = 0;
    for (std::size_t j = 0; j < family.n(); ++j) {
        const auto& a = family[j];
        if (std::any_of(a.begin(), a.end(), [&](const LatticePoint& p) { return vanishes_on(p, I); })) {
            bits |= 1u << j;
        }
    }
    return IndexSet(bits);
}

ConditionReport check_conditions(const SupportFamily& family)
{
    const std::size_t n = family.n();
    ConditionReport report;
    const LatticePoint origin(n, 0);
    report.h1 = std::none_of(family.sets().begin(), family.sets().end(),
                             [&](const PointSet& a) { return a.contains(origin); });
    report.h2 = true;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        const IndexSet I(bits);
        if (I.size() + j_set(family, I).size() < n) {
            report.h2 = false;
            report.failing_I = I;
            break;
        }
    }
    report.h3 = true;
    for (const auto& a : family.sets()) {
        for (std::size_t i = 0; i < n; ++i) {
            const bool hit = std::any_of(a.begin(), a.end(), [&](const LatticePoint& p) {
                for (std::size_t c = 0; c < n; ++c) {
                    if ((c == i) != (p[c] != 0)) {
                        return false;
                    }
                }
                return true;
            });
            report.h3 = report.h3 && hit;
        }
    }
    return report;
}

StratumDescriptor describe_stratum(const SupportFamily& family, IndexSet I)
{
    const std::size_t n = family.n();
    if (!I.subset_of(IndexSet::full(n))) {
        throw InputError("stratum " + I.to_string() + " out of range");
    }
    StratumDescriptor s;
    s.I = I;
    s.J = j_set(family, I);
    s.a1 = I.size() + s.J.size() == n;

    s.a2 = true;
    // Subsets of I by the standard submask walk, including the empty one.
    for (std::uint32_t sub = I.bits();; sub = (sub - 1) & I.bits()) {
        const IndexSet t(sub);
        if (t.size() + j_set(family, t).size() < n) {
            s.a2 = false;
        }
        if (sub == 0) {
            break;
        }
    }

    const auto Jidx = s.J.indices();
    std::vector<std::vector<LatticePoint>> restricted_sets;
    for (auto j : Jidx) {
        restricted_sets.push_back(restricted(family[j], I));
    }
    s.a3 = true;
    for (std::uint32_t mask = 1; mask < (1u << Jidx.size()); ++mask) {
        linalg::Matrix diffs;
        for (std::size_t k = 0; k < Jidx.size(); ++k) {
            if (!(mask & (1u << k))) {
                continue;
            }
            const auto& pts = restricted_sets[k];
            for (std::size_t i = 1; i < pts.size(); ++i) {
                diffs.push_back(linalg::sub(to_rational(pts[i]), to_rational(pts[0])));
            }
        }
        if (linalg::rank(std::move(diffs)) < static_cast<std::size_t>(__builtin_popcount(mask))) {
            s.a3 = false;
            break;
        }
    }

    const auto keep = I.indices();
    const auto drop = I.complement(n).indices();
    for (std::size_t j = 0; j < n; ++j) {
        if (s.J.contains(j)) {
            s.torus_supports.push_back(project(PointSet(n, restricted(family[j], I)), drop));
        } else {
            s.projected.push_back(project(family[j], keep));
        }
    }
    return s;
}

std::vector<StratumDescriptor> enumerate_strata(const SupportFamily& family)
{
    const std::size_t n = family.n();
    std::vector<StratumDescriptor> out;
    out.push_back(describe_stratum(family, IndexSet()));
    for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
        auto s = describe_stratum(family, IndexSet(bits));
        if (s.valid()) {
            out.push_back(std::move(s));
        }
    }
    return out;
}

namespace {

Augmentation augment(const SupportFamily& family, Coord M, bool refined)
{
    if (M < 1) {
        throw InputError("augmentation bound M must be positive");
    }
    const std::size_t n = family.n();
    std::vector<PointSet> plain;
    for (const auto& a : family.sets()) {
        PointSet b = a;
        for (std::size_t i = 0; i < n; ++i) {
            // A point mu e_i with mu >= 0; the origin meets every axis.
            if (refined && meets_axis(a, i)) {
                continue;
            }
            LatticePoint e(n, 0);
            e[i] = M;
            b.insert(std::move(e));
        }
        plain.push_back(std::move(b));
    }
    SupportFamily aug(std::move(plain));
    auto with0 = aug.with_origin();
    return {std::move(aug), std::move(with0)};
}

} // namespace

Augmentation augment_refined(const SupportFamily& family, Coord M) { return augment(family, M, true); }

Augmentation augment_full(const SupportFamily& family, Coord M) { return augment(family, M, false); }

SupportFamily reduce_minimal(const SupportFamily& family)
{
    std::vector<PointSet> out;
    for (const auto& a : family.sets()) {
        std::vector<LatticePoint> keep;
        for (const auto& p : a) {
            const bool dominates = std::any_of(a.begin(), a.end(), [&](const LatticePoint& q) {
                if (q == p) {
                    return false;
                }
                for (std::size_t c = 0; c < p.size(); ++c) {
                    if (q[c] > p[c]) {
                        return false;
                    }
                }
                return true;
            });
            if (!dominates) {
                keep.push_back(p);
            }
        }
        out.emplace_back(a.dim(), std::move(keep));
    }
    return SupportFamily(std::move(out));
}

} // namespace sparsemult
