#ifndef PREFRAT_MATRIX_HPP
#define PREFRAT_MATRIX_HPP

#include <string>
#include <utility>
#include <vector>

#include "prefrat/rational.hpp"

namespace prefrat {

enum class MatrixClass { Integral, HalfIntegral, General };

std::string to_string(MatrixClass c);

/// n x n matrix of pairwise preference proportions. Validated on
/// construction: zero diagonal, p_ij + p_ji = 1, entries in [0,1].
/// Candidates are labelled 1..n in all public interfaces.
class PreferenceMatrix {
public:
    /// entries is row-major n x n; throws InvariantError on violation.
    PreferenceMatrix(int n, std::vector<Rational> entries);

    int n() const { return n_; }
    const Rational& at(int i, int j) const { return entries_[idx(i, j)]; }

    static PreferenceMatrix parse_json(const std::string& text);
    static PreferenceMatrix parse_csv(const std::string& text);
    std::string to_json() const;
    std::string to_csv() const;

    friend bool operator==(const PreferenceMatrix& a, const PreferenceMatrix& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

private:
    int idx(int i, int j) const;
    void validate() const;

    int n_;
    std::vector<Rational> entries_;
};

/// Digraph with an arc i -> j iff p_ij = 1.
struct VotingGraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs; // sorted lexicographically

    bool has_arc(int i, int j) const;
    bool is_acyclic() const;
    std::string to_dot() const;
};

/// Undirected graph with an edge {i,j} iff p_ij is 0 or 1.
struct UnanimityGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // i < j, sorted

    bool has_edge(int i, int j) const;
    std::string to_dot() const;
};

MatrixClass classify(const PreferenceMatrix& m);
VotingGraph voting_graph(const PreferenceMatrix& m);
UnanimityGraph unanimity_graph(const PreferenceMatrix& m);

} // namespace prefrat

#endif
