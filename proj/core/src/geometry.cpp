#include "sparsemult/geometry.hpp"

#include "sparsemult/error.hpp"
#include "sparsemult/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace sparsemult {

using linalg::dot;
using linalg::sub;

RationalPoint to_rational(const LatticePoint& p)
{
    RationalPoint r;
    r.reserve(p.size());
    for (Coord c : p) {
        r.emplace_back(static_cast<long>(c));
    }
    return r;
}

// ---------------------------------------------------------------------------
// PointSet

PointSet::PointSet(std::size_t dim, std::vector<LatticePoint> points) : dim_(dim), points_(std::move(points))
{
    for (const auto& p : points_) {
        if (p.size() != dim_) {
            throw InputError("point set: dimension mismatch");
        }
    }
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

PointSet::PointSet(std::initializer_list<LatticePoint> points)
    : PointSet(points.size() == 0 ? 0 : points.begin()->size(), std::vector<LatticePoint>(points))
{
}

bool PointSet::contains(const LatticePoint& p) const
{
    return std::binary_search(points_.begin(), points_.end(), p);
}

void PointSet::insert(LatticePoint p)
{
    if (p.size() != dim_) {
        throw InputError("point set: dimension mismatch");
    }
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || *it != p) {
        points_.insert(it, std::move(p));
    }
}

PointSet PointSet::with_origin() const
{
    PointSet out = *this;
    out.insert(LatticePoint(dim_, 0));
    return out;
}

std::vector<RationalPoint> PointSet::rational_points() const
{
    std::vector<RationalPoint> out;
    out.reserve(points_.size());
    for (const auto& p : points_) {
        out.push_back(to_rational(p));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Convex hull

namespace {

// Scales a nonzero rational vector to the primitive integer vector with the same direction.
RationalPoint primitive(RationalPoint v)
{
    Integer lcm = 1;
    for (const auto& x : v) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    }
    Integer g = 0;
    for (auto& x : v) {
        x *= lcm;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    }
    if (g == 0) {
        throw InvariantError("primitive: zero vector");
    }
    for (auto& x : v) {
        x /= g;
    }
    return v;
}

struct SimplexFacet {
    std::vector<std::size_t> verts;
    RationalPoint normal;
    Rational offset;
};

SimplexFacet make_facet(const std::vector<RationalPoint>& pts, std::vector<std::size_t> verts,
                        const RationalPoint& interior)
{
    const std::size_t d = interior.size();
    linalg::Matrix diffs;
    for (std::size_t i = 1; i < verts.size(); ++i) {
        diffs.push_back(sub(pts[verts[i]], pts[verts[0]]));
    }
    auto basis = linalg::nullspace(std::move(diffs), d);
    if (basis.size() != 1) {
        throw InvariantError("convex hull: degenerate facet");
    }
    SimplexFacet f;
    f.normal = primitive(std::move(basis.front()));
    f.offset = dot(f.normal, pts[verts[0]]);
    const Rational side = dot(f.normal, interior);
    if (side == f.offset) {
        throw InvariantError("convex hull: interior point on facet hyperplane");
    }
    if (side < f.offset) {
        for (auto& x : f.normal) {
            x = -x;
        }
        f.offset = -f.offset;
    }
    std::sort(verts.begin(), verts.end());
    f.verts = std::move(verts);
    return f;
}

// Beneath-beyond over lexicographically ordered, full-dimensional, deduplicated input.
void full_hull(const std::vector<RationalPoint>& pts, std::size_t d, std::vector<Facet>& facets_out,
               std::vector<std::size_t>& vertex_ids)
{
    // Initial simplex: greedy affine basis in input order.
    std::vector<std::size_t> simplex{0};
    std::vector<RationalPoint> chosen{pts[0]};
    for (std::size_t i = 1; i < pts.size() && simplex.size() < d + 1; ++i) {
        chosen.push_back(pts[i]);
        if (linalg::affine_rank(chosen) == static_cast<int>(simplex.size())) {
            simplex.push_back(i);
        } else {
            chosen.pop_back();
        }
    }
    if (simplex.size() != d + 1) {
        throw InvariantError("convex hull: input not full-dimensional");
    }
    RationalPoint interior(d, Rational(0));
    for (auto i : simplex) {
        for (std::size_t c = 0; c < d; ++c) {
            interior[c] += pts[i][c];
        }
    }
    for (auto& x : interior) {
        x /= static_cast<long>(d + 1);
    }

    std::vector<SimplexFacet> facets;
    for (std::size_t skip = 0; skip <= d; ++skip) {
        std::vector<std::size_t> verts;
        for (std::size_t k = 0; k <= d; ++k) {
            if (k != skip) {
                verts.push_back(simplex[k]);
            }
        }
        facets.push_back(make_facet(pts, std::move(verts), interior));
    }

    std::vector<bool> in_simplex(pts.size(), false);
    for (auto i : simplex) {
        in_simplex[i] = true;
    }
    for (std::size_t p = 0; p < pts.size(); ++p) {
        if (in_simplex[p]) {
            continue;
        }
        std::vector<bool> visible(facets.size(), false);
        bool any = false;
        for (std::size_t f = 0; f < facets.size(); ++f) {
            if (dot(facets[f].normal, pts[p]) < facets[f].offset) {
                visible[f] = true;
                any = true;
            }
        }
        if (!any) {
            continue;
        }
        std::map<std::vector<std::size_t>, int> ridges;
        for (std::size_t f = 0; f < facets.size(); ++f) {
            if (!visible[f]) {
                continue;
            }
            const auto& v = facets[f].verts;
            for (std::size_t drop = 0; drop < v.size(); ++drop) {
                std::vector<std::size_t> ridge;
                ridge.reserve(v.size() - 1);
                for (std::size_t k = 0; k < v.size(); ++k) {
                    if (k != drop) {
                        ridge.push_back(v[k]);
                    }
                }
                ++ridges[ridge];
            }
        }
        std::vector<SimplexFacet> next;
        next.reserve(facets.size());
        for (std::size_t f = 0; f < facets.size(); ++f) {
            if (!visible[f]) {
                next.push_back(std::move(facets[f]));
            }
        }
        for (const auto& [ridge, count] : ridges) {
            if (count != 1) {
                continue;
            }
            auto verts = ridge;
            verts.push_back(p);
            next.push_back(make_facet(pts, std::move(verts), interior));
        }
        facets = std::move(next);
    }

    // Merge coplanar simplices into true facets.
    std::map<std::pair<RationalPoint, Rational>, std::set<std::size_t>> merged;
    for (auto& f : facets) {
        auto& bucket = merged[{f.normal, f.offset}];
        bucket.insert(f.verts.begin(), f.verts.end());
    }
    // A boundary point is extreme iff the normals of the facets through it span R^d.
    std::map<std::size_t, linalg::Matrix> incident;
    for (const auto& [key, verts] : merged) {
        for (auto v : verts) {
            incident[v].push_back(key.first);
        }
    }
    vertex_ids.clear();
    for (auto& [v, normals] : incident) {
        if (linalg::rank(normals) == d) {
            vertex_ids.push_back(v);
        }
    }
    std::map<std::size_t, std::size_t> remap;
    for (std::size_t i = 0; i < vertex_ids.size(); ++i) {
        remap[vertex_ids[i]] = i;
    }
    facets_out.clear();
    for (const auto& [key, verts] : merged) {
        Facet f;
        f.normal = key.first;
        f.offset = key.second;
        for (auto v : verts) {
            auto it = remap.find(v);
            if (it != remap.end()) {
                f.vertices.push_back(it->second);
            }
        }
        facets_out.push_back(std::move(f));
    }
}

} // namespace

Polytope convex_hull(std::vector<RationalPoint> points)
{
    if (points.empty()) {
        throw InputError("empty point set");
    }
    const std::size_t d = points.front().size();
    for (const auto& p : points) {
        if (p.size() != d) {
            throw InputError("convex hull: dimension mismatch");
        }
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    Polytope out;
    out.dim_ = d;
    out.affine_dim_ = linalg::affine_rank(points);
    if (out.affine_dim_ == 0) {
        out.vertices_ = {points.front()};
        return out;
    }
    const auto k = static_cast<std::size_t>(out.affine_dim_);
    if (k == d) {
        std::vector<std::size_t> ids;
        full_hull(points, d, out.facets_, ids);
        for (auto i : ids) {
            out.vertices_.push_back(points[i]);
        }
        std::sort(out.facets_.begin(), out.facets_.end(), [](const Facet& a, const Facet& b) {
            return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
        });
        return out;
    }

    // Lower-dimensional: pick k coordinates on which the affine hull projects isomorphically.
    std::vector<std::size_t> chart;
    for (std::size_t c = 0; c < d && chart.size() < k; ++c) {
        linalg::Matrix rows;
        for (std::size_t i = 1; i < points.size(); ++i) {
            RationalPoint r;
            for (auto cc : chart) {
                r.push_back(points[i][cc] - points[0][cc]);
            }
            r.push_back(points[i][c] - points[0][c]);
            rows.push_back(std::move(r));
        }
        if (linalg::rank(std::move(rows)) == chart.size() + 1) {
            chart.push_back(c);
        }
    }
    std::vector<RationalPoint> projected;
    for (const auto& p : points) {
        RationalPoint q;
        for (auto c : chart) {
            q.push_back(p[c]);
        }
        projected.push_back(std::move(q));
    }
    // points is lex-sorted but its projection need not be; sort indices by projection.
    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return projected[a] < projected[b]; });
    std::vector<RationalPoint> sorted_proj;
    for (auto i : order) {
        sorted_proj.push_back(projected[i]);
    }
    std::vector<Facet> ignored;
    std::vector<std::size_t> ids;
    full_hull(sorted_proj, k, ignored, ids);
    for (auto i : ids) {
        out.vertices_.push_back(points[order[i]]);
    }
    std::sort(out.vertices_.begin(), out.vertices_.end());
    return out;
}

Polytope convex_hull(const PointSet& points) { return convex_hull(points.rational_points()); }

bool Polytope::contains(const RationalPoint& x) const
{
    if (x.size() != dim_) {
        throw InputError("contains: dimension mismatch");
    }
    if (affine_dim_ < 0) {
        return false;
    }
    if (full_dimensional() && dim_ > 0) {
        return std::all_of(facets_.begin(), facets_.end(),
                           [&](const Facet& f) { return dot(f.normal, x) >= f.offset; });
    }
    auto pts = vertices_;
    pts.push_back(x);
    const Polytope grown = convex_hull(std::move(pts));
    return grown.affine_dim_ == affine_dim_ && grown.vertices_ == vertices_;
}

// ---------------------------------------------------------------------------
// Triangulation and volume

namespace {

using Face = std::vector<std::size_t>;

std::vector<Face> facets_of_face(const Polytope& p, const Face& face, int k)
{
    std::vector<Face> out;
    if (k == static_cast<int>(p.dim())) {
        for (const auto& f : p.facets()) {
            out.push_back(f.vertices);
        }
        return out;
    }
    std::set<Face> seen;
    for (const auto& f : p.facets()) {
        Face inter;
        std::set_intersection(face.begin(), face.end(), f.vertices.begin(), f.vertices.end(),
                              std::back_inserter(inter));
        if (inter.size() < static_cast<std::size_t>(k) || inter.size() == face.size() || seen.count(inter)) {
            continue;
        }
        std::vector<RationalPoint> pts;
        for (auto v : inter) {
            pts.push_back(p.vertices()[v]);
        }
        if (linalg::affine_rank(pts) == k - 1) {
            seen.insert(inter);
            out.push_back(std::move(inter));
        }
    }
    return out;
}

void pull(const Polytope& p, const Face& face, int k, Face& cone, std::vector<Face>& out)
{
    const std::size_t apex = face.front();
    if (k == 0) {
        cone.push_back(apex);
        out.push_back(cone);
        cone.pop_back();
        return;
    }
    for (const auto& sub_face : facets_of_face(p, face, k)) {
        if (std::binary_search(sub_face.begin(), sub_face.end(), apex)) {
            continue;
        }
        cone.push_back(apex);
        pull(p, sub_face, k - 1, cone, out);
        cone.pop_back();
    }
}

} // namespace

std::vector<std::vector<std::size_t>> triangulate(const Polytope& polytope)
{
    std::vector<Face> out;
    if (!polytope.full_dimensional()) {
        return out;
    }
    Face all(polytope.vertices().size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        all[i] = i;
    }
    Face cone;
    pull(polytope, all, static_cast<int>(polytope.dim()), cone, out);
    return out;
}

Rational volume(const Polytope& polytope)
{
    if (!polytope.full_dimensional()) {
        return 0;
    }
    const std::size_t d = polytope.dim();
    if (d == 0) {
        return 1;
    }
    Rational total = 0;
    const auto& v = polytope.vertices();
    for (const auto& simplex : triangulate(polytope)) {
        linalg::Matrix m;
        for (std::size_t i = 1; i < simplex.size(); ++i) {
            m.push_back(sub(v[simplex[i]], v[simplex[0]]));
        }
        total += abs(linalg::determinant(std::move(m)));
    }
    return total / factorial(static_cast<unsigned>(d));
}

Polytope intersect(const Polytope& a, const Polytope& b)
{
    if (a.dim() != b.dim()) {
        throw InputError("intersect: dimension mismatch");
    }
    if (!a.full_dimensional() || !b.full_dimensional()) {
        throw InputError("intersect: operands must be full-dimensional");
    }
    const std::size_t d = a.dim();
    if (d == 0) {
        return a;
    }
    auto inside = [](const Polytope& outer, const Polytope& inner) {
        return std::all_of(inner.vertices().begin(), inner.vertices().end(),
                           [&](const RationalPoint& x) { return outer.contains(x); });
    };
    if (inside(b, a)) {
        return a;
    }
    if (inside(a, b)) {
        return b;
    }
    std::vector<const Facet*> halfspaces;
    for (const auto& f : a.facets()) {
        halfspaces.push_back(&f);
    }
    for (const auto& f : b.facets()) {
        halfspaces.push_back(&f);
    }
    auto feasible = [&](const RationalPoint& x) {
        return std::all_of(halfspaces.begin(), halfspaces.end(),
                           [&](const Facet* f) { return dot(f->normal, x) >= f->offset; });
    };
    std::vector<RationalPoint> found;
    std::vector<std::size_t> pick(d);
    const std::size_t m = halfspaces.size();
    // Every vertex of the intersection is the unique solution of d tight inequalities.
    auto recurse = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
        if (depth == d) {
            linalg::Matrix rows;
            RationalPoint rhs;
            for (auto i : pick) {
                rows.push_back(halfspaces[i]->normal);
                rhs.push_back(halfspaces[i]->offset);
            }
            auto x = linalg::solve(std::move(rows), std::move(rhs));
            if (x && feasible(*x)) {
                found.push_back(std::move(*x));
            }
            return;
        }
        for (std::size_t i = start; i + (d - depth) <= m; ++i) {
            pick[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    recurse(recurse, 0, 0);
    if (found.empty()) {
        Polytope empty;
        return empty;
    }
    return convex_hull(std::move(found));
}

// ---------------------------------------------------------------------------
// Minkowski sums and mixed volumes

std::vector<RationalPoint> minkowski_vertices(std::span<const RationalPoint> a, std::span<const RationalPoint> b)
{
    std::vector<RationalPoint> sums;
    sums.reserve(a.size() * b.size());
    for (const auto& p : a) {
        for (const auto& q : b) {
            sums.push_back(linalg::add(p, q));
        }
    }
    return convex_hull(std::move(sums)).vertices();
}

PointSet minkowski_sum(const PointSet& s, const PointSet& t)
{
    if (s.dim() != t.dim()) {
        throw InputError("minkowski sum: dimension mismatch");
    }
    std::vector<LatticePoint> sums;
    sums.reserve(s.size() * t.size());
    for (const auto& p : s) {
        for (const auto& q : t) {
            LatticePoint r(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) {
                r[i] = p[i] + q[i];
            }
            sums.push_back(std::move(r));
        }
    }
    return PointSet(s.dim(), std::move(sums));
}

namespace {

void check_family(std::span<const PointSet> family)
{
    const std::size_t n = family.size();
    for (const auto& a : family) {
        if (a.dim() != n) {
            throw InputError("mixed volume: expected " + std::to_string(n) + " sets in dimension " +
                             std::to_string(n));
        }
        if (a.empty()) {
            throw InputError("empty point set");
        }
    }
}

} // namespace

Integer mixed_volume(std::span<const PointSet> family)
{
    check_family(family);
    const std::size_t n = family.size();
    if (n == 0) {
        return 1;
    }
    if (n > 20) {
        throw InputError("mixed volume: family too large");
    }
    std::vector<std::vector<RationalPoint>> hulls;
    for (const auto& a : family) {
        hulls.push_back(convex_hull(a).vertices());
    }
    // sums[mask] holds the vertices of the Minkowski sum over mask, built from mask minus its lowest bit.
    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::vector<RationalPoint>> sums(full + 1);
    Rational total = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const int low = __builtin_ctz(mask);
        const std::uint32_t rest = mask & (mask - 1);
        if (rest == 0) {
            sums[mask] = hulls[low];
        } else {
            sums[mask] = minkowski_vertices(sums[rest], hulls[low]);
        }
        const Rational vol = volume(convex_hull(sums[mask]));
        const int size = __builtin_popcount(mask);
        if ((n - size) % 2 == 0) {
            total += vol;
        } else {
            total -= vol;
        }
    }
    if (!is_integer(total) || total < 0) {
        throw InvariantError("mixed volume is not a nonnegative integer: " + to_string(total));
    }
    return total.get_num();
}

namespace {

// Minkowski's positivity criterion: MV > 0 iff every subfamily J spans dimension >= #J.
bool mixed_volume_positive(std::span<const PointSet> family)
{
    const std::size_t n = family.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        linalg::Matrix diffs;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask & (1u << j))) {
                continue;
            }
            const auto& pts = family[j].points();
            for (std::size_t i = 1; i < pts.size(); ++i) {
                RationalPoint d(n);
                for (std::size_t c = 0; c < n; ++c) {
                    d[c] = static_cast<long>(pts[i][c] - pts[0][c]);
                }
                diffs.push_back(std::move(d));
            }
        }
        if (linalg::rank(std::move(diffs)) < static_cast<std::size_t>(__builtin_popcount(mask))) {
            return false;
        }
    }
    return true;
}

} // namespace

std::vector<LiftedCell> lifted_cells(std::span<const PointSet> family)
{
    check_family(family);
    const std::size_t n = family.size();
    std::vector<LiftedCell> cells;
    if (n == 0) {
        return cells;
    }
    // Lifted copies of A_j^0: height 0 on A_j, height 1 on an adjoined origin.
    std::vector<std::vector<LatticePoint>> lifted(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (const auto& a : family[j]) {
            auto q = a;
            q.push_back(0);
            lifted[j].push_back(std::move(q));
        }
        if (!family[j].contains(LatticePoint(n, 0))) {
            LatticePoint q(n + 1, 0);
            q[n] = 1;
            lifted[j].push_back(std::move(q));
        }
    }
    std::vector<RationalPoint> sum;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<RationalPoint> pts;
        for (const auto& q : lifted[j]) {
            pts.push_back(to_rational(q));
        }
        sum = j == 0 ? convex_hull(pts).vertices() : minkowski_vertices(sum, pts);
    }
    const Polytope hull = convex_hull(sum);

    auto make_cell = [&](RationalPoint normal) {
        LiftedCell cell;
        for (std::size_t j = 0; j < n; ++j) {
            Rational best;
            std::vector<LatticePoint> arg;
            for (const auto& q : lifted[j]) {
                const Rational v = dot(normal, to_rational(q));
                if (arg.empty() || v < best) {
                    best = v;
                    arg.clear();
                }
                if (v == best) {
                    arg.emplace_back(q.begin(), q.end() - 1);
                }
            }
            cell.parts.emplace_back(n, std::move(arg));
        }
        cell.stable = std::all_of(normal.begin(), normal.end(), [](const Rational& x) { return sgn(x) >= 0; });
        cell.normal = std::move(normal);
        return cell;
    };

    if (hull.full_dimensional()) {
        for (const auto& f : hull.facets()) {
            if (sgn(f.normal[n]) > 0) {
                cells.push_back(make_cell(f.normal));
            }
        }
        return cells;
    }
    // Degenerate lift: only a hyperplane (codimension one) with a non-vertical normal yields a cell.
    if (hull.affine_dim() == static_cast<int>(n)) {
        linalg::Matrix diffs;
        const auto& v = hull.vertices();
        for (std::size_t i = 1; i < v.size(); ++i) {
            diffs.push_back(sub(v[i], v[0]));
        }
        auto basis = linalg::nullspace(std::move(diffs), n + 1);
        auto normal = primitive(std::move(basis.front()));
        if (sgn(normal[n]) != 0) {
            if (sgn(normal[n]) < 0) {
                for (auto& x : normal) {
                    x = -x;
                }
            }
            cells.push_back(make_cell(std::move(normal)));
        }
    }
    return cells;
}

Integer stable_mixed_volume(std::span<const PointSet> family)
{
    Integer total = 0;
    for (const auto& cell : lifted_cells(family)) {
        if (cell.stable && mixed_volume_positive(cell.parts)) {
            total += mixed_volume(cell.parts);
        }
    }
    return total;
}

PointSet project(const PointSet& points, std::span<const std::size_t> keep)
{
    for (auto i : keep) {
        if (i >= points.dim()) {
            throw InputError("project: index " + std::to_string(i) + " out of range");
        }
    }
    std::vector<LatticePoint> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        LatticePoint q;
        q.reserve(keep.size());
        for (auto i : keep) {
            q.push_back(p[i]);
        }
        out.push_back(std::move(q));
    }
    return PointSet(keep.size(), std::move(out));
}

} // namespace sparsemult
