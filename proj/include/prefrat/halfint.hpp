#ifndef PREFRAT_HALFINT_HPP
#define PREFRAT_HALFINT_HPP

#include <cstdint>
#include <vector>

#include "prefrat/matrix.hpp"
#include "prefrat/profile.hpp"

namespace prefrat {

/// Connected components of the unanimity graph, with induced submatrices.
/// Components are listed by ascending minimum label; members ascending.
/// All cross-component entries of a half-integral matrix are 1/2.
struct ComponentPartition {
    std::vector<std::vector<int>> components;
    std::vector<PreferenceMatrix> submatrices; // candidates relabelled 1..|V_l|
};

ComponentPartition components(const PreferenceMatrix& m);

/// Product construction: per-component profiles are merged into
/// 2 * prod(m_l) voters. For each tuple of one voter per component, voter L
/// copies the tuple inside each component and prefers earlier components
/// wholesale; voter R reverses the cross-component preference. Throws
/// InconsistentInputError if some per-component profile fails its submatrix.
VoterProfile combine_component_profiles(const PreferenceMatrix& m,
                                        const ComponentPartition& partition,
                                        const std::vector<VoterProfile>& per_component);

/// Partition of candidates into independent sets of the unanimity graph.
struct ProperColoring {
    std::vector<std::vector<int>> classes;
};

bool is_proper(const UnanimityGraph& g, const ProperColoring& coloring);

/// DSATUR greedy coloring; ties broken toward the lowest label.
ProperColoring greedy_coloring(const UnanimityGraph& g);

/// Two voters: one chain per color class, ascending labels for voter 1 and
/// the exact reversal for voter 2. Consistent with every half-integral
/// matrix the coloring is proper for; each voter's width is the number of
/// nonempty classes.
VoterProfile two_voter_construction(const PreferenceMatrix& m,
                                    const ProperColoring& coloring);

/// Half-integral matrix whose unanimity graph is complete k-partite with
/// parts of size n/k and whose unanimity edges are oriented uniformly at
/// random. Deterministic per seed.
PreferenceMatrix random_lower_bound_instance(int n, int k, std::uint64_t seed);

enum class TriangleOutcome { Proved, Refuted, SampledOk };

struct TriangleCheck {
    TriangleOutcome outcome = TriangleOutcome::Proved;
    std::vector<int> witness;      // triangle-free subset when refuted
    std::int64_t subsets_checked = 0;
    bool exhaustive = false;
};

/// Does every size-s vertex subset of D contain a directed triangle?
/// Exhaustive when C(n,s) is at most 10^6 subsets, else Monte Carlo with
/// `budget` samples under the given seed.
TriangleCheck verify_triangle_property(const VotingGraph& d, int s,
                                       std::int64_t budget, std::uint64_t seed);

} // namespace prefrat

#endif
