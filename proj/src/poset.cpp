#include "prefrat/poset.hpp"

#include <algorithm>
#include <sstream>

namespace prefrat {

PartialOrder::PartialOrder(int n) : n_(n) {
    if (n_ < 1) throw Error("candidate count must be at least 1");
    rel_.assign(static_cast<std::size_t>(n_) * n_, 0);
}

int PartialOrder::index(int i, int j) const {
    check_label(i);
    check_label(j);
    return (i - 1) * n_ + (j - 1);
}

void PartialOrder::check_label(int v) const {
    if (v < 1 || v > n_) throw Error("candidate label out of range");
}

PartialOrder PartialOrder::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    PartialOrder p(n);
    for (auto [i, j] : pairs) {
        if (i == j) throw CycleError("reflexive pair (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")");
        p.rel_[p.index(i, j)] = 1;
    }
    // Warshall closure; a violation of asymmetry surfaces as a diagonal hit.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (p.rel_[i * n + k])
                for (int j = 0; j < n; ++j)
                    if (p.rel_[k * n + j]) p.rel_[i * n + j] = 1;
    for (int i = 0; i < n; ++i)
        if (p.rel_[i * n + i])
            throw CycleError("pairs contain a preference cycle through candidate " +
                             std::to_string(i + 1));
    return p;
}

PartialOrder PartialOrder::from_chains(int n, const ChainDecomposition& chains) {
    PartialOrder p(n);
    std::vector<char> seen(n + 1, 0);
    for (const Chain& chain : chains) {
        for (std::size_t a = 0; a < chain.size(); ++a) {
            int v = chain[a];
            p.check_label(v);
            if (seen[v])
                throw PartitionError("candidate " + std::to_string(v) +
                                     " appears in more than one chain");
            seen[v] = 1;
            for (std::size_t b = a + 1; b < chain.size(); ++b)
                p.rel_[p.index(v, chain[b])] = 1;
        }
    }
    for (int v = 1; v <= n; ++v)
        if (!seen[v])
            throw PartitionError("candidate " + std::to_string(v) +
                                 " missing from the chains");
    return p;
}

std::vector<std::pair<int, int>> PartialOrder::relation_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            if (rel_[(i - 1) * n_ + (j - 1)]) out.emplace_back(i, j);
    return out;
}

std::size_t PartialOrder::relation_size() const {
    std::size_t c = 0;
    for (char b : rel_) c += b != 0;
    return c;
}

std::vector<int> PartialOrder::matching() const {
    // Split graph: left copy of i joined to right copy of j iff i > j.
    std::vector<int> match_right(n_ + 1, 0), match_left(n_ + 1, 0);
    std::vector<char> visited(n_ + 1, 0);

    // Kuhn's augmenting paths, left vertices in ascending order.
    auto try_augment = [&](auto&& self, int i) -> bool {
        for (int j = 1; j <= n_; ++j) {
            if (!rel_[(i - 1) * n_ + (j - 1)] || visited[j]) continue;
            visited[j] = 1;
            if (match_right[j] == 0 || self(self, match_right[j])) {
                match_right[j] = i;
                match_left[i] = j;
                return true;
            }
        }
        return false;
    };
    for (int i = 1; i <= n_; ++i) {
        std::fill(visited.begin(), visited.end(), 0);
        try_augment(try_augment, i);
    }
    return match_right;
}

int PartialOrder::width() const {
    const std::vector<int> match_right = matching();
    int matched = 0;
    for (int j = 1; j <= n_; ++j) matched += match_right[j] != 0;
    return n_ - matched;
}

ChainDecomposition PartialOrder::min_chain_decomposition() const {
    const std::vector<int> match_right = matching();
    std::vector<int> successor(n_ + 1, 0);
    for (int j = 1; j <= n_; ++j)
        if (match_right[j] != 0) successor[match_right[j]] = j;
    std::vector<char> has_pred(n_ + 1, 0);
    for (int j = 1; j <= n_; ++j)
        if (match_right[j] != 0) has_pred[j] = 1;

    ChainDecomposition chains;
    for (int start = 1; start <= n_; ++start) {
        if (has_pred[start]) continue;
        Chain chain;
        for (int v = start; v != 0; v = successor[v]) chain.push_back(v);
        chains.push_back(std::move(chain));
    }
    return chains;
}

std::vector<int> PartialOrder::max_antichain() const {
    const std::vector<int> match_right = matching();
    std::vector<int> match_left(n_ + 1, 0);
    for (int j = 1; j <= n_; ++j)
        if (match_right[j] != 0) match_left[match_right[j]] = j;

    // Koenig: alternate from unmatched left vertices; the elements whose
    // left copy is reached and right copy is not form a maximum antichain.
    std::vector<char> left_reached(n_ + 1, 0), right_reached(n_ + 1, 0);
    std::vector<int> stack;
    for (int i = 1; i <= n_; ++i)
        if (match_left[i] == 0) {
            left_reached[i] = 1;
            stack.push_back(i);
        }
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 1; j <= n_; ++j) {
            if (!rel_[(i - 1) * n_ + (j - 1)] || right_reached[j]) continue;
            if (match_left[i] == j) continue; // only unmatched edges leftward
            right_reached[j] = 1;
            int i2 = match_right[j];
            if (i2 != 0 && !left_reached[i2]) {
                left_reached[i2] = 1;
                stack.push_back(i2);
            }
        }
    }
    std::vector<int> antichain;
    for (int v = 1; v <= n_; ++v)
        if (left_reached[v] && !right_reached[v]) antichain.push_back(v);
    return antichain;
}

PartialOrder PartialOrder::weaken(int x, int y) const {
    if (!prefers(x, y))
        throw NotComparableError("candidate " + std::to_string(x) +
                                 " does not precede " + std::to_string(y));
    for (int z = 1; z <= n_; ++z)
        if (z != x && z != y && prefers(x, z) && prefers(z, y))
            throw NotRemovableError("pair (" + std::to_string(x) + "," +
                                    std::to_string(y) + ") is not removable: " +
                                    std::to_string(z) + " lies between them");
    PartialOrder out = *this;
    out.rel_[out.index(x, y)] = 0;
    return out;
}

std::string PartialOrder::to_dot() const {
    std::ostringstream out;
    out << "digraph hasse {\n";
    for (int v = 1; v <= n_; ++v) out << "  " << v << ";\n";
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) {
            if (!prefers(i, j)) continue;
            bool covering = true;
            for (int z = 1; z <= n_ && covering; ++z)
                if (z != i && z != j && prefers(i, z) && prefers(z, j)) covering = false;
            if (covering) out << "  " << i << " -> " << j << ";\n";
        }
    out << "}\n";
    return out.str();
}

} // namespace prefrat
