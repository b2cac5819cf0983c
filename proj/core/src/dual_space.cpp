#include "sparsemult/dual_space.hpp"

#include "sparsemult/error.hpp"
#include "sparsemult/linalg.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <random>

namespace sparsemult {

void SparsePolynomial::add_term(const LatticePoint& a, const Rational& c)
{
    if (a.size() != n_) {
        throw InputError("polynomial term has the wrong number of variables");
    }
    if (sgn(c) == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) {
            terms_.erase(it);
        }
    }
}

Rational SparsePolynomial::coefficient(const LatticePoint& a) const
{
    const auto it = terms_.find(a);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational SparsePolynomial::evaluate(const RationalPoint& x) const
{
    if (x.size() != n_) {
        throw InputError("evaluation point has the wrong dimension");
    }
    Rational total = 0;
    for (const auto& [a, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < n_; ++i) {
            for (Coord e = 0; e < a[i]; ++e) {
                term *= x[i];
            }
        }
        total += term;
    }
    return total;
}

PointSet SparsePolynomial::support() const
{
    std::vector<LatticePoint> pts;
    for (const auto& [a, c] : terms_) {
        pts.push_back(a);
    }
    return PointSet(n_, std::move(pts));
}

SparsePolynomial SparsePolynomial::scaled(const Rational& c) const
{
    SparsePolynomial out(n_);
    for (const auto& [a, coeff] : terms_) {
        out.add_term(a, coeff * c);
    }
    return out;
}

namespace {

// Uniform on [0, bound) independent of the standard library's distributions.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound)
{
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

// Uniform on the nonzero integers of [-bound, bound].
Integer nonzero(std::mt19937_64& rng, std::uint64_t bound)
{
    const auto u = draw(rng, 2 * bound);
    if (u < bound) {
        return -Integer(static_cast<unsigned long>(bound - u));
    }
    return Integer(static_cast<unsigned long>(u - bound + 1));
}

} // namespace

SparseSystem random_system(const SupportFamily& family, std::uint64_t seed, std::uint64_t bound)
{
    if (bound < 1 || bound > (std::uint64_t{1} << 62)) {
        throw InputError("coefficient bound out of range");
    }
    std::mt19937_64 rng(seed);
    SparseSystem out;
    out.seed = seed;
    for (const auto& a : family.sets()) {
        SparsePolynomial p(family.n());
        for (const auto& e : a) {
            p.add_term(e, Rational(nonzero(rng, bound)));
        }
        out.polys.push_back(std::move(p));
    }
    return out;
}

SparsePolynomial shift(const SparsePolynomial& p, const RationalPoint& zeta)
{
    const std::size_t n = p.n();
    if (zeta.size() != n) {
        throw InputError("shift: dimension mismatch");
    }
    SparsePolynomial out(n);
    for (const auto& [a, c] : p.terms()) {
        // prod_i (y_i + zeta_i)^{a_i}, expanded one variable at a time.
        std::map<LatticePoint, Rational> acc{{LatticePoint(n, 0), c}};
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] == 0) {
                continue;
            }
            std::vector<Rational> factor;
            Integer binom = 1;
            for (Coord b = 0; b <= a[i]; ++b) {
                // coefficient of y_i^b: C(a_i, b) zeta_i^(a_i - b)
                Rational z = 1;
                for (Coord e = 0; e < a[i] - b; ++e) {
                    z *= zeta[i];
                }
                factor.push_back(Rational(binom) * z);
                binom = binom * (a[i] - b) / (b + 1);
            }
            std::map<LatticePoint, Rational> next;
            for (const auto& [m, v] : acc) {
                for (Coord b = 0; b <= a[i]; ++b) {
                    if (sgn(factor[static_cast<std::size_t>(b)]) == 0) {
                        continue;
                    }
                    auto mm = m;
                    mm[i] = b;
                    next[mm] += v * factor[static_cast<std::size_t>(b)];
                }
            }
            acc = std::move(next);
        }
        for (const auto& [m, v] : acc) {
            out.add_term(m, v);
        }
    }
    return out;
}

std::vector<LatticePoint> graded_monomials(std::size_t n, std::size_t degree)
{
    std::vector<LatticePoint> out;
    LatticePoint cur(n, 0);
    // All exponents of total degree d with the first coordinate largest first.
    auto fill = [&](auto&& self, std::size_t i, Coord left) -> void {
        if (i + 1 == n) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (Coord e = left; e >= 0; --e) {
            cur[i] = e;
            self(self, i + 1, left - e);
        }
    };
    for (std::size_t d = 0; d <= degree; ++d) {
        if (n == 0) {
            if (d == 0) {
                out.emplace_back();
            }
            continue;
        }
        fill(fill, 0, static_cast<Coord>(d));
    }
    return out;
}

std::vector<RationalPoint> MultiplicityMatrix::dense() const
{
    std::vector<RationalPoint> out(rows.size(), RationalPoint(column_count(), Rational(0)));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (const auto& [c, v] : rows[r]) {
            out[r][c] = v;
        }
    }
    return out;
}

MultiplicityMatrix build_S_k(const SparseSystem& f, const RationalPoint& zeta, std::size_t k)
{
    const std::size_t n = f.n();
    if (zeta.size() != n) {
        throw InputError("evaluation point has the wrong dimension");
    }
    for (const auto& p : f.polys) {
        if (p.n() != n) {
            throw InputError("system is not square");
        }
        if (sgn(p.evaluate(zeta)) != 0) {
            throw InputError("not a zero");
        }
    }
    MultiplicityMatrix m;
    m.k = k;
    m.n = n;
    m.column_monomials = graded_monomials(n, k);
    if (k == 0) {
        // The values f_j(zeta), all zero.
        m.rows.assign(n, {});
        return m;
    }
    m.row_monomials = graded_monomials(n, k - 1);
    std::map<LatticePoint, std::size_t> column;
    for (std::size_t i = 0; i < m.column_monomials.size(); ++i) {
        column.emplace(m.column_monomials[i], i);
    }
    std::vector<SparsePolynomial> shifted;
    for (const auto& p : f.polys) {
        shifted.push_back(shift(p, zeta));
    }
    const auto k_coord = static_cast<Coord>(k);
    for (const auto& beta : m.row_monomials) {
        Coord beta_deg = 0;
        for (auto b : beta) {
            beta_deg += b;
        }
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::pair<std::size_t, Rational>> row;
            for (const auto& [gamma, c] : shifted[j].terms()) {
                Coord deg = beta_deg;
                for (auto g : gamma) {
                    deg += g;
                }
                if (deg > k_coord) {
                    continue;
                }
                LatticePoint alpha(n);
                for (std::size_t i = 0; i < n; ++i) {
                    alpha[i] = beta[i] + gamma[i];
                }
                row.emplace_back(column.at(alpha), c);
            }
            std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            m.rows.push_back(std::move(row));
        }
    }
    return m;
}

namespace {

using IntRow = std::vector<std::pair<std::size_t, Integer>>;

void make_primitive(IntRow& row)
{
    Integer g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) {
            break;
        }
    }
    if (g > 1) {
        for (auto& [c, v] : row) {
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        }
    }
}

// a * x - b * y over the union of supports.
IntRow combine(const Integer& a, const IntRow& x, const Integer& b, const IntRow& y)
{
    IntRow out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0;
    std::size_t j = 0;
    Integer t;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.emplace_back(x[i].first, a * x[i].second);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, -b * y[j].second);
            ++j;
        } else {
            t = a * x[i].second - b * y[j].second;
            if (sgn(t) != 0) {
                out.emplace_back(x[i].first, t);
            }
            ++i;
            ++j;
        }
    }
    return out;
}

// Row echelon form grown one row at a time; each stored row is keyed by its leading column.
class Echelon {
public:
    explicit Echelon(std::size_t columns) : pivots_(columns) {}

    void insert(IntRow row)
    {
        while (!row.empty()) {
            auto& pivot = pivots_[row.front().first];
            if (!pivot) {
                make_primitive(row);
                pivot = std::move(row);
                ++rank_;
                return;
            }
            Integer g;
            mpz_gcd(g.get_mpz_t(), pivot->front().second.get_mpz_t(), row.front().second.get_mpz_t());
            const Integer a = pivot->front().second / g;
            const Integer b = row.front().second / g;
            row = combine(a, row, b, *pivot);
            make_primitive(row);
        }
    }

    std::size_t rank() const { return rank_; }

private:
    std::vector<std::optional<IntRow>> pivots_;
    std::size_t rank_ = 0;
};

IntRow integer_row(const std::vector<std::pair<std::size_t, Rational>>& row)
{
    Integer l = 1;
    for (const auto& [c, v] : row) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    }
    IntRow out;
    out.reserve(row.size());
    for (const auto& [c, v] : row) {
        out.emplace_back(c, Integer(v.get_num() * (l / v.get_den())));
    }
    return out;
}

} // namespace

std::size_t nullity(const MultiplicityMatrix& m)
{
    const std::size_t cols = m.column_count();
    std::vector<IntRow> rows;
    for (const auto& row : m.rows) {
        auto r = integer_row(row);
        for (auto& [c, v] : r) {
            c = cols - 1 - c;
        }
        std::reverse(r.begin(), r.end());
        rows.push_back(std::move(r));
    }
    std::stable_sort(rows.begin(), rows.end(), [](const IntRow& a, const IntRow& b) { return a.size() < b.size(); });
    Echelon e(cols);
    for (auto& row : rows) {
        e.insert(std::move(row));
    }
    return cols - e.rank();
}

std::vector<std::size_t> nullity_profile(const SparseSystem& f, const RationalPoint& zeta, std::size_t k)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i <= k; ++i) {
        out.push_back(nullity(build_S_k(f, zeta, i)));
    }
    return out;
}

std::size_t multiplicity_dz(const SparseSystem& f, const RationalPoint& zeta, std::size_t kmax)
{
    std::size_t previous = nullity(build_S_k(f, zeta, 0));
    for (std::size_t k = 1; k <= kmax; ++k) {
        const std::size_t current = nullity(build_S_k(f, zeta, k));
        if (current == previous) {
            return current;
        }
        previous = current;
    }
    throw StabilizationError("no stabilization <= K_max (zero may be non-isolated or cap too small)");
}

PlantedSystem planted_triangular_system(std::size_t r, const std::vector<PointSet>& lower_supports,
                                        std::uint64_t seed, std::uint64_t bound)
{
    if (r < 1) {
        throw InputError("planted system needs r >= 1");
    }
    const std::size_t m = lower_supports.size();
    const std::size_t n = r + m;
    for (const auto& s : lower_supports) {
        if (s.empty() || s.dim() != m) {
            throw InputError("lower supports must be nonempty sets in dimension " + std::to_string(m));
        }
    }
    std::mt19937_64 rng(seed);
    RationalPoint xi;
    for (std::size_t i = 0; i < r; ++i) {
        xi.emplace_back(nonzero(rng, 5));
    }
    linalg::Matrix jac;
    for (int attempt = 0;; ++attempt) {
        if (attempt == 100) {
            throw InvariantError("could not draw an invertible linear part");
        }
        jac.assign(r, RationalPoint(r));
        for (auto& row : jac) {
            for (auto& v : row) {
                v = Rational(nonzero(rng, bound));
            }
        }
        if (sgn(linalg::determinant(jac)) != 0) {
            break;
        }
    }
    PlantedSystem out;
    out.system.seed = seed;
    out.specialized.seed = seed;
    for (std::size_t j = 0; j < r; ++j) {
        SparsePolynomial p(n);
        Rational constant = 0;
        for (std::size_t i = 0; i < r; ++i) {
            LatticePoint e(n, 0);
            e[i] = 1;
            p.add_term(e, jac[j][i]);
            constant -= jac[j][i] * xi[i];
        }
        p.add_term(LatticePoint(n, 0), constant);
        out.system.polys.push_back(std::move(p));
    }
    for (const auto& s : lower_supports) {
        SparsePolynomial p(n);
        SparsePolynomial q(m);
        for (const auto& a : s) {
            // Coefficient c0 + sum c_i x_i with a nonzero value at xi.
            std::vector<Rational> c;
            Rational at_xi;
            do {
                c.clear();
                for (std::size_t i = 0; i <= r; ++i) {
                    c.emplace_back(nonzero(rng, bound));
                }
                at_xi = c[0];
                for (std::size_t i = 0; i < r; ++i) {
                    at_xi += c[i + 1] * xi[i];
                }
            } while (sgn(at_xi) == 0);
            LatticePoint e(n, 0);
            std::copy(a.begin(), a.end(), e.begin() + static_cast<std::ptrdiff_t>(r));
            p.add_term(e, c[0]);
            for (std::size_t i = 0; i < r; ++i) {
                auto ei = e;
                ei[i] += 1;
                p.add_term(ei, c[i + 1]);
            }
            q.add_term(a, at_xi);
        }
        out.system.polys.push_back(std::move(p));
        out.specialized.polys.push_back(std::move(q));
    }
    out.zeta = xi;
    out.zeta.resize(n, Rational(0));
    return out;
}

OracleCheck check_origin_multiplicity(const SupportFamily& family, const Integer& expected, std::uint64_t seed,
                                      std::uint64_t bound, std::size_t kmax, std::size_t max_resamples)
{
    OracleCheck out;
    out.expected = expected;
    const RationalPoint origin(family.n(), Rational(0));
    for (std::size_t attempt = 0; attempt <= max_resamples; ++attempt) {
        const std::uint64_t s = seed + attempt;
        out.seeds.push_back(s);
        out.observed = multiplicity_dz(random_system(family, s, bound), origin, kmax);
        if (Integer(static_cast<unsigned long>(out.observed)) == expected) {
            out.match = true;
            break;
        }
    }
    return out;
}

} // namespace sparsemult
