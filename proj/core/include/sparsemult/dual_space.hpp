#ifndef SPARSEMULT_DUAL_SPACE_HPP
#define SPARSEMULT_DUAL_SPACE_HPP

#include "sparsemult/supports.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace sparsemult {

class SparsePolynomial {
public:
    explicit SparsePolynomial(std::size_t n) : n_(n) {}

    std::size_t n() const { return n_; }
    /// Exponent -> nonzero coefficient.
    const std::map<LatticePoint, Rational>& terms() const { return terms_; }
    /// Adds c x^a, dropping the term if the coefficient cancels.
    void add_term(const LatticePoint& a, const Rational& c);
    Rational coefficient(const LatticePoint& a) const;
    Rational evaluate(const RationalPoint& x) const;
    PointSet support() const;
    SparsePolynomial scaled(const Rational& c) const;

    friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

private:
    std::size_t n_;
    std::map<LatticePoint, Rational> terms_;
};

struct SparseSystem {
    std::vector<SparsePolynomial> polys;
    std::uint64_t seed = 0;

    std::size_t n() const { return polys.size(); }
};

inline constexpr std::uint64_t default_bound = 1'000'000;
inline constexpr std::size_t default_kmax = 24;

/// A cap that always suffices for a zero of multiplicity mu: the nullities grow strictly from 1 until they
/// stabilize, so they stop by order mu.
inline std::size_t kmax_for(const Integer& mu)
{
    return mu.fits_ulong_p() && mu.get_ui() + 1 > default_kmax ? static_cast<std::size_t>(mu.get_ui()) + 1
                                                                : default_kmax;
}

/// Coefficients drawn from the nonzero integers in [-bound, bound] by rejection sampling on mt19937_64,
/// polynomial by polynomial, exponents in increasing lexicographic order.
SparseSystem random_system(const SupportFamily& family, std::uint64_t seed, std::uint64_t bound = default_bound);

/// q(y) = p(y + zeta).
SparsePolynomial shift(const SparsePolynomial& p, const RationalPoint& zeta);

/// Monomials of total degree at most `degree` in n variables: by degree, then x_1 > x_2 > ... lexicographically.
std::vector<LatticePoint> graded_monomials(std::size_t n, std::size_t degree);

/// Sparse rows of S_k: row (beta, j) at position index(beta) * n + j, columns in graded_monomials order.
struct MultiplicityMatrix {
    std::size_t k = 0;
    std::size_t n = 0;
    std::vector<LatticePoint> row_monomials;
    std::vector<LatticePoint> column_monomials;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;

    std::size_t row_count() const { return rows.size(); }
    std::size_t column_count() const { return column_monomials.size(); }
    std::vector<RationalPoint> dense() const;
};

/// Throws InputError "not a zero" unless every polynomial vanishes at zeta.
MultiplicityMatrix build_S_k(const SparseSystem& f, const RationalPoint& zeta, std::size_t k);

/// Columns minus rank, the rank taken by fraction-free elimination on integer rows.
std::size_t nullity(const MultiplicityMatrix& m);

/// Nullities of S_0, ..., S_k.
std::vector<std::size_t> nullity_profile(const SparseSystem& f, const RationalPoint& zeta, std::size_t k);

/// Nullity at the first k where dim ker S_k = dim ker S_{k+1}, searched over k + 1 <= kmax.
std::size_t multiplicity_dz(const SparseSystem& f, const RationalPoint& zeta, std::size_t kmax = default_kmax);

struct PlantedSystem {
    SparseSystem system;
    /// (xi, 0): xi the nondegenerate zero of the first r polynomials.
    RationalPoint zeta;
    /// The last n - r polynomials with x_1..x_r replaced by xi, in the variables x_{r+1}..x_n.
    SparseSystem specialized;
};

/// r random affine-linear polynomials in x_1..x_r vanishing at an integer point xi with invertible
/// Jacobian, followed by one polynomial per lower support whose coefficients are random affine-linear
/// functions of x_1..x_r, nonzero at xi.
PlantedSystem planted_triangular_system(std::size_t r, const std::vector<PointSet>& lower_supports,
                                        std::uint64_t seed, std::uint64_t bound = 1000);

/// Outcome of comparing an expected origin multiplicity against the dual-space oracle.
struct OracleCheck {
    Integer expected;
    std::size_t observed = 0;
    /// Seeds actually used, first one is the requested seed.
    std::vector<std::uint64_t> seeds;
    bool match = false;

    std::size_t resamples() const { return seeds.empty() ? 0 : seeds.size() - 1; }
};

/// Runs the oracle at the origin on random instances seed, seed + 1, ... and stops at the first match,
/// after at most `max_resamples` extra draws.
OracleCheck check_origin_multiplicity(const SupportFamily& family, const Integer& expected, std::uint64_t seed,
                                      std::uint64_t bound = default_bound, std::size_t kmax = default_kmax,
                                      std::size_t max_resamples = 3);

} // namespace sparsemult

#endif
