#ifndef PREFRAT_INTEGRAL_HPP
#define PREFRAT_INTEGRAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prefrat/matrix.hpp"
#include "prefrat/profile.hpp"

namespace prefrat {

/// Orientation of the complete graph on candidates 1..n.
class Tournament {
public:
    explicit Tournament(int n);
    static Tournament from_voting_graph(const VotingGraph& g);
    static Tournament parse_json(const std::string& text);
    std::string to_json() const;

    int n() const { return n_; }
    bool arc(int i, int j) const { return arc_[idx(i, j)]; }
    void set_arc(int i, int j); // clears the opposite direction
    PreferenceMatrix to_matrix() const;

private:
    int idx(int i, int j) const;

    int n_;
    std::vector<char> arc_;
};

/// Partition of vertices into acyclic induced subtournaments.
struct Dicoloring {
    std::vector<std::vector<int>> classes;

    static Dicoloring parse_json(const std::string& text);
    std::string to_json() const;
};

/// Partition validity plus per-class acyclicity (topological check).
bool valid_dicoloring(const Tournament& t, const Dicoloring& d);

struct ExactDicoloringResult {
    int k = 0;
    Dicoloring witness;
};

/// Minimum dicoloring by iterative deepening on k with backtracking vertex
/// assignment; class acyclicity maintained through ordered insertion.
/// Throws SizeLimitError above exact_limit vertices.
ExactDicoloringResult dichromatic_number_exact(const Tournament& t, int exact_limit = 20);

/// Repeatedly peel a class: take the max-out-degree vertex of the current
/// candidate set, restrict to its out-neighbours, repeat until empty.
/// Ties go to the lowest label.
Dicoloring greedy_dicoloring(const Tournament& t);

/// Single voter whose chains are the unique acyclic orderings of the
/// classes. Throws InvalidDicoloringError if some class is cyclic.
VoterProfile voter_from_dicoloring(const Tournament& t, const Dicoloring& d);

/// Every pair oriented by an independent fair coin; deterministic per seed.
Tournament random_tournament(int n, std::uint64_t seed);

struct MaxAcyclicResult {
    int size = 0;
    std::vector<int> witness;
    bool exact = false;
};

/// Largest vertex set inducing an acyclic subtournament. Exact (subset DP)
/// up to exact_limit vertices, greedy insertion above it (lower bound,
/// flagged by exact = false).
MaxAcyclicResult max_acyclic_subset(const Tournament& t, int exact_limit = 20);

struct RationalityResult {
    MatrixClass matrix_class = MatrixClass::General;
    bool exact = false; // lower == upper with a matching certificate path
    int lower = 1;
    int upper = 1;
    std::optional<VoterProfile> certificate; // witnesses the upper bound
    std::string method;
};

/// Rationality number dispatch. Integral: dichromatic number of the voting
/// graph (exact below the size limit, greedy above) with a single-voter
/// certificate. Half-integral: per unanimity component, integral components
/// solved as tournaments, the rest bounded by a proper coloring of the
/// component's unanimity graph; results merged through the product profile.
/// General: antichain certificate, bounds [1 or 2, n].
RationalityResult rationality_number(const PreferenceMatrix& m, int exact_limit = 20);

} // namespace prefrat

#endif
