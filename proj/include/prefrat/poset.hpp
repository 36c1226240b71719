#ifndef PREFRAT_POSET_HPP
#define PREFRAT_POSET_HPP

#include <string>
#include <utility>
#include <vector>

#include "prefrat/errors.hpp"

namespace prefrat {

using Chain = std::vector<int>;              // most-preferred first
using ChainDecomposition = std::vector<Chain>;

/// Strict partial order over candidates 1..n, stored transitively closed.
class PartialOrder {
public:
    /// Transitive closure of the given pairs; CycleError if the closure
    /// would make some element precede itself.
    static PartialOrder from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

    /// i > j iff i precedes j within the same chain; chains must partition 1..n.
    static PartialOrder from_chains(int n, const ChainDecomposition& chains);

    static PartialOrder antichain(int n) { return PartialOrder(n); }

    int n() const { return n_; }
    bool prefers(int i, int j) const { return rel_[index(i, j)]; }
    bool comparable(int i, int j) const { return prefers(i, j) || prefers(j, i); }
    std::vector<std::pair<int, int>> relation_pairs() const;
    std::size_t relation_size() const;

    /// Maximum antichain cardinality, via minimum chain cover (Dilworth).
    int width() const;

    /// Partition into width(P) chains, recovered from a maximum matching in
    /// the split bipartite comparability graph. Deterministic: augmenting
    /// paths and chain starts are tried in ascending label order.
    ChainDecomposition min_chain_decomposition() const;

    /// An antichain of cardinality width(P), from the Koenig cover of the
    /// same matching.
    std::vector<int> max_antichain() const;

    /// Remove exactly the pair (x,y). Throws NotComparableError if x does
    /// not precede y, NotRemovableError if the remaining relation would not
    /// be transitively closed (covering-pair requirement).
    PartialOrder weaken(int x, int y) const;

    /// Hasse diagram (covering pairs only).
    std::string to_dot() const;

    friend bool operator==(const PartialOrder& a, const PartialOrder& b) {
        return a.n_ == b.n_ && a.rel_ == b.rel_;
    }

private:
    explicit PartialOrder(int n);
    int index(int i, int j) const;
    void check_label(int v) const;

    // Maximum matching on the split graph; match_right[j] = i when the
    // matched edge i -> j carries "j directly follows i" in a chain.
    std::vector<int> matching() const;

    int n_;
    std::vector<char> rel_; // row-major, rel_[(i-1)*n + (j-1)] iff i > j
};

} // namespace prefrat

#endif
