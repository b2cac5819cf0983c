#ifndef SPARSEMULT_SUPPORTS_HPP
#define SPARSEMULT_SUPPORTS_HPP

#include "sparsemult/geometry.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sparsemult {

/// Subset of {0, ..., n-1} stored as a bitmask. Iteration order over subsets is the bitmask order.
class IndexSet {
public:
    constexpr IndexSet() = default;
    constexpr explicit IndexSet(std::uint32_t bits) : bits_(bits) {}
    static IndexSet from_one_based(const std::vector<int>& indices);
    static IndexSet full(std::size_t n) { return IndexSet(n >= 32 ? ~0u : (1u << n) - 1); }

    std::uint32_t bits() const { return bits_; }
    bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
    std::size_t size() const { return static_cast<std::size_t>(__builtin_popcount(bits_)); }
    bool empty() const { return bits_ == 0; }
    bool subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
    IndexSet complement(std::size_t n) const { return IndexSet(full(n).bits_ & ~bits_); }

    /// 0-based members in increasing order.
    std::vector<std::size_t> indices() const;
    std::vector<int> one_based() const;
    /// "{1,3}" style, 1-based.
    std::string to_string() const;

    friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

private:
    std::uint32_t bits_ = 0;
};

/// n nonempty supports in (Z_{>=0})^n.
class SupportFamily {
public:
    explicit SupportFamily(std::vector<PointSet> supports);

    std::size_t n() const { return supports_.size(); }
    const PointSet& operator[](std::size_t j) const { return supports_[j]; }
    const std::vector<PointSet>& sets() const { return supports_; }
    /// A^0: the origin adjoined to every support.
    SupportFamily with_origin() const;

    friend bool operator==(const SupportFamily&, const SupportFamily&) = default;

private:
    std::vector<PointSet> supports_;
};

struct ConditionReport {
    bool h1 = false;
    bool h2 = false;
    bool h3 = false;
    /// First I (bitmask order) with #I + #J_I < n, when H2 fails.
    std::optional<IndexSet> failing_I;
};

struct StratumDescriptor {
    IndexSet I;
    IndexSet J;
    bool a1 = false;
    bool a2 = false;
    bool a3 = false;
    /// B_j^I = pi_I(A_j) for j not in J_I, increasing j; a family in dimension #I when A1 holds.
    std::vector<PointSet> projected;
    /// pi_{I^c}(A_j^I) for j in J_I, increasing j; the supports of the restricted torus system.
    std::vector<PointSet> torus_supports;

    bool valid() const { return a1 && a2 && a3; }
};

/// Indices j such that A_j has a point vanishing on every coordinate of I.
IndexSet j_set(const SupportFamily& family, IndexSet I);

ConditionReport check_conditions(const SupportFamily& family);

/// Evaluates A1, A2, A3 for I and fills the projected families.
StratumDescriptor describe_stratum(const SupportFamily& family, IndexSet I);

/// The torus stratum I = {} first, then every nonempty I satisfying A1, A2 and A3, in bitmask order.
/// The torus entry is always present; its flags are the literal evaluation of the conditions.
std::vector<StratumDescriptor> enumerate_strata(const SupportFamily& family);

struct Augmentation {
    SupportFamily plain;
    SupportFamily with_origin;
};

/// Adds M e_i to A_j only for axes i that A_j does not meet.
Augmentation augment_refined(const SupportFamily& family, Coord M);
/// Adds every M e_i to every A_j.
Augmentation augment_full(const SupportFamily& family, Coord M);

/// Keeps only the coordinatewise-minimal points of every support.
SupportFamily reduce_minimal(const SupportFamily& family);

} // namespace sparsemult

#endif
