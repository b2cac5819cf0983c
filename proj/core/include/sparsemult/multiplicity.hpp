#ifndef SPARSEMULT_MULTIPLICITY_HPP
#define SPARSEMULT_MULTIPLICITY_HPP

#include "sparsemult/supports.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sparsemult {

/// Origin multiplicity of a generic system computed along every available route.
struct Mult0Routes {
    Coord M = 0;
    /// MV(A^0) - MV(A), only when the family meets every axis.
    std::optional<Integer> axes;
    Integer refined;
    Integer full;
    Integer mixed_integral;

    /// Route name -> value, using the names mv_axes, mv_refined, mv_full, mixed_integral.
    std::map<std::string, Integer> by_name() const;
};

struct MultiplicityReport {
    StratumDescriptor stratum;
    /// Isolated zeros of a generic system in the stratum.
    Integer count;
    /// Multiplicity shared by each of those zeros.
    Integer multiplicity;
    /// Empty for the torus, whose zeros are simple.
    std::map<std::string, Integer> routes;
};

struct CensusReport {
    std::vector<MultiplicityReport> strata;
    Integer torus_count;
    Integer total_with_multiplicity;
    Integer sm;
    Integer mv_A0;
};

/// MV(A^0) - MV(A). Requires H1 and H3.
Integer mult0_axes(const SupportFamily& family);

/// MV(A^0) - MV(A) + 1, an augmentation bound that is always large enough. Requires H1 and H2.
Coord default_M(const SupportFamily& family);

/// Origin multiplicity through the refined and the full augmentation; throws InvariantError if they differ.
/// Requires H1 and H2; M defaults to default_M.
Integer mult0(const SupportFamily& family, std::optional<Coord> M = {});

/// Origin multiplicity as the mixed integral of the restricted lower envelopes of the refined augmentation.
Integer mult0_mixed_integral(const SupportFamily& family, std::optional<Coord> M = {});

/// Every route at once; throws InvariantError on any disagreement.
Mult0Routes mult0_routes(const SupportFamily& family, std::optional<Coord> M = {});

/// Multiplicity of the zeros in a valid nonempty stratum: the origin multiplicity of the projected family.
Integer stratum_multiplicity(const SupportFamily& family, IndexSet I);

/// Number of isolated zeros in a valid stratum: the mixed volume of the restricted torus supports.
Integer stratum_count(const SupportFamily& family, IndexSet I);

CensusReport census(const SupportFamily& family);

} // namespace sparsemult

#endif
