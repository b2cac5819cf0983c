#ifndef SPARSEMULT_GEOMETRY_HPP
#define SPARSEMULT_GEOMETRY_HPP

#include "sparsemult/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace sparsemult {

using Coord = std::int64_t;

/// Integer point; nonnegative when it is a support exponent, any sign for lifted points.
using LatticePoint = std::vector<Coord>;

RationalPoint to_rational(const LatticePoint& p);

/// Finite set of lattice points of a common ambient dimension, kept sorted and deduplicated.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::size_t dim) : dim_(dim) {}
    PointSet(std::size_t dim, std::vector<LatticePoint> points);
    /// Dimension is taken from the first point; the list must be nonempty.
    PointSet(std::initializer_list<LatticePoint> points);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const std::vector<LatticePoint>& points() const { return points_; }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    bool contains(const LatticePoint& p) const;
    void insert(LatticePoint p);
    /// Copy with the origin adjoined.
    PointSet with_origin() const;
    std::vector<RationalPoint> rational_points() const;

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<LatticePoint> points_;
};

/// Supporting halfspace { x : normal . x >= offset } with the indices of the vertices on it.
struct Facet {
    RationalPoint normal;
    Rational offset;
    std::vector<std::size_t> vertices;
};

/// Convex polytope held by its extreme points (lexicographically sorted) and, when
/// full-dimensional, by its facets with primitive integer inner normals.
class Polytope {
public:
    Polytope() = default;

    std::size_t dim() const { return dim_; }
    int affine_dim() const { return affine_dim_; }
    bool full_dimensional() const { return affine_dim_ == static_cast<int>(dim_); }
    const std::vector<RationalPoint>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }

    bool contains(const RationalPoint& x) const;

private:
    friend Polytope convex_hull(std::vector<RationalPoint> points);

    std::size_t dim_ = 0;
    int affine_dim_ = -1;
    std::vector<RationalPoint> vertices_;
    std::vector<Facet> facets_;
};

Polytope convex_hull(std::vector<RationalPoint> points);
Polytope convex_hull(const PointSet& points);

/// Simplices (as indices into P.vertices()) of the pulling triangulation that cones
/// from the lexicographically smallest vertex of every face. Empty unless P is full-dimensional.
std::vector<std::vector<std::size_t>> triangulate(const Polytope& polytope);

/// Euclidean volume; 0 when P is not full-dimensional, 1 for the point in R^0.
Rational volume(const Polytope& polytope);

/// Intersection of two full-dimensional polytopes of equal dimension (may come out lower-dimensional
/// or, if disjoint, empty with affine_dim -1).
Polytope intersect(const Polytope& a, const Polytope& b);

/// Vertices of conv(a) + conv(b) given vertex lists of the summands.
std::vector<RationalPoint> minkowski_vertices(std::span<const RationalPoint> a,
                                              std::span<const RationalPoint> b);

PointSet minkowski_sum(const PointSet& s, const PointSet& t);

/// Mixed volume of n point sets in dimension n by inclusion-exclusion over Euclidean volumes.
/// The empty family (n = 0) has mixed volume 1.
Integer mixed_volume(std::span<const PointSet> family);

/// Cell of the subdivision of A^0 induced by the origin lifting.
struct LiftedCell {
    std::vector<PointSet> parts;
    RationalPoint normal;
    bool stable = false;
};

/// Lower cells of the lifted Minkowski sum of A^0 under the lifting with height 1 on adjoined origins.
std::vector<LiftedCell> lifted_cells(std::span<const PointSet> family);

Integer stable_mixed_volume(std::span<const PointSet> family);

/// Coordinate projection onto `keep` (0-based, in the given order), deduplicated.
PointSet project(const PointSet& points, std::span<const std::size_t> keep);

} // namespace sparsemult

#endif
