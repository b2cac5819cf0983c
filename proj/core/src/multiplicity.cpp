#include "sparsemult/multiplicity.hpp"

#include "sparsemult/envelopes.hpp"
#include "sparsemult/error.hpp"

namespace sparsemult {

namespace {

void require(const SupportFamily& family, bool need_h3)
{
    const auto report = check_conditions(family);
    if (!report.h1) {
        throw ConditionError("H1 violated: some support contains the origin");
    }
    if (need_h3 && !report.h3) {
        throw ConditionError("H3 violated: some support misses a coordinate axis");
    }
    if (!report.h2) {
        throw ConditionError("H2 violated for I = " + report.failing_I->to_string() +
                             ": the origin is not an isolated zero");
    }
}

Integer mv_gap(const SupportFamily& plain, const SupportFamily& with_origin)
{
    return mixed_volume(with_origin.sets()) - mixed_volume(plain.sets());
}

Coord resolve_M(const SupportFamily& family, std::optional<Coord> M)
{
    if (!M) {
        return default_M(family);
    }
    if (*M < 1) {
        throw InputError("augmentation bound M must be positive");
    }
    return *M;
}

Integer mixed_integral_route(const SupportFamily& family, Coord M)
{
    const auto aug = augment_refined(family, M).plain;
    const std::size_t n = family.n();
    std::vector<PLFunction> bars;
    for (const auto& a : aug.sets()) {
        // Lifting every point by e_n keeps the lower envelope and makes the polytope full-dimensional.
        auto pts = a.rational_points();
        const std::size_t base = pts.size();
        for (std::size_t i = 0; i < base; ++i) {
            auto p = pts[i];
            p.back() += 1;
            pts.push_back(std::move(p));
        }
        const auto rho = lower_envelope(convex_hull(std::move(pts)));
        const auto delta = axis_simplex(convex_hull(a));
        std::vector<RationalPoint> shadow{RationalPoint(n - 1, Rational(0))};
        for (std::size_t i = 0; i + 1 < n; ++i) {
            RationalPoint e(n - 1, Rational(0));
            e[i] = delta.lambdas[i];
            shadow.push_back(std::move(e));
        }
        bars.push_back(restrict(rho, convex_hull(std::move(shadow))));
    }
    const Rational value = mixed_integral_prime(bars);
    if (!is_integer(value)) {
        throw InvariantError("mixed integral is not an integer: " + to_string(value));
    }
    return value.get_num();
}

} // namespace

std::map<std::string, Integer> Mult0Routes::by_name() const
{
    std::map<std::string, Integer> out{{"mv_refined", refined}, {"mv_full", full}, {"mixed_integral", mixed_integral}};
    if (axes) {
        out.emplace("mv_axes", *axes);
    }
    return out;
}

Integer mult0_axes(const SupportFamily& family)
{
    require(family, true);
    const Integer value = mv_gap(family, family.with_origin());
    if (value < 1) {
        throw InvariantError("origin multiplicity below 1 for a family meeting every axis");
    }
    return value;
}

Coord default_M(const SupportFamily& family)
{
    require(family, false);
    const Integer gap = mv_gap(family, family.with_origin());
    if (!gap.fits_slong_p()) {
        throw InputError("augmentation bound does not fit in 64 bits");
    }
    return static_cast<Coord>(gap.get_si()) + 1;
}

Integer mult0(const SupportFamily& family, std::optional<Coord> M)
{
    require(family, false);
    const Coord m = resolve_M(family, M);
    const auto refined = augment_refined(family, m);
    const auto full = augment_full(family, m);
    const Integer a = mv_gap(refined.plain, refined.with_origin);
    const Integer b = mv_gap(full.plain, full.with_origin);
    if (a != b) {
        throw InvariantError("refined and full augmentation disagree: " + a.get_str() + " vs " + b.get_str());
    }
    return a;
}

Integer mult0_mixed_integral(const SupportFamily& family, std::optional<Coord> M)
{
    require(family, false);
    return mixed_integral_route(family, resolve_M(family, M));
}

Mult0Routes mult0_routes(const SupportFamily& family, std::optional<Coord> M)
{
    require(family, false);
    Mult0Routes r;
    r.M = resolve_M(family, M);
    const auto refined = augment_refined(family, r.M);
    const auto full = augment_full(family, r.M);
    r.refined = mv_gap(refined.plain, refined.with_origin);
    r.full = mv_gap(full.plain, full.with_origin);
    r.mixed_integral = mixed_integral_route(family, r.M);
    if (check_conditions(family).h3) {
        r.axes = mv_gap(family, family.with_origin());
    }
    for (const auto& [name, value] : r.by_name()) {
        if (value != r.refined) {
            throw InvariantError("multiplicity routes disagree: mv_refined = " + r.refined.get_str() + ", " + name +
                                 " = " + value.get_str());
        }
    }
    return r;
}

namespace {

StratumDescriptor valid_stratum(const SupportFamily& family, IndexSet I)
{
    auto s = describe_stratum(family, I);
    if (!s.valid()) {
        throw ConditionError("stratum " + I.to_string() + " violates " +
                             std::string(!s.a1 ? "A1" : !s.a2 ? "A2" : "A3"));
    }
    return s;
}

} // namespace

Integer stratum_multiplicity(const SupportFamily& family, IndexSet I)
{
    if (I.empty()) {
        throw InputError("stratum multiplicity needs a nonempty index set");
    }
    const auto s = valid_stratum(family, I);
    return mult0(SupportFamily(s.projected));
}

Integer stratum_count(const SupportFamily& family, IndexSet I)
{
    if (I.empty()) {
        return mixed_volume(family.sets());
    }
    const auto s = valid_stratum(family, I);
    return mixed_volume(s.torus_supports);
}

CensusReport census(const SupportFamily& family)
{
    CensusReport out;
    out.torus_count = mixed_volume(family.sets());
    out.total_with_multiplicity = 0;
    for (auto& s : enumerate_strata(family)) {
        MultiplicityReport r;
        if (s.I.empty()) {
            r.count = out.torus_count;
            r.multiplicity = 1;
        } else {
            r.count = mixed_volume(s.torus_supports);
            const auto routes = mult0_routes(SupportFamily(s.projected));
            r.multiplicity = routes.refined;
            r.routes = routes.by_name();
        }
        r.stratum = std::move(s);
        out.total_with_multiplicity += r.count * r.multiplicity;
        out.strata.push_back(std::move(r));
    }
    out.sm = stable_mixed_volume(family.sets());
    out.mv_A0 = mixed_volume(family.with_origin().sets());
    return out;
}

} // namespace sparsemult
