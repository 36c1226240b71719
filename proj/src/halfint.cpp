#include "prefrat/halfint.hpp"

#include <algorithm>
#include <numeric>

#include "prefrat/rng.hpp"

namespace prefrat {

ComponentPartition components(const PreferenceMatrix& m) {
    MatrixClass cls = classify(m);
    if (cls == MatrixClass::General)
        throw ClassError("component decomposition needs a half-integral matrix");
    UnanimityGraph g = unanimity_graph(m);
    std::vector<std::vector<int>> adj(g.n + 1);
    for (auto [i, j] : g.edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    ComponentPartition out;
    std::vector<char> seen(g.n + 1, 0);
    for (int start = 1; start <= g.n; ++start) {
        if (seen[start]) continue;
        std::vector<int> comp, stack{start};
        seen[start] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        int size = static_cast<int>(comp.size());
        std::vector<Rational> entries;
        entries.reserve(static_cast<std::size_t>(size) * size);
        for (int a = 0; a < size; ++a)
            for (int b = 0; b < size; ++b)
                entries.push_back(m.at(comp[a], comp[b]));
        out.components.push_back(std::move(comp));
        out.submatrices.emplace_back(size, std::move(entries));
    }
    return out;
}

VoterProfile combine_component_profiles(const PreferenceMatrix& m,
                                        const ComponentPartition& partition,
                                        const std::vector<VoterProfile>& per_component) {
    const std::size_t t = partition.components.size();
    if (per_component.size() != t)
        throw DimensionMismatchError("one profile per component required");
    for (std::size_t l = 0; l < t; ++l) {
        if (per_component[l].n() != static_cast<int>(partition.components[l].size()))
            throw DimensionMismatchError("component profile has wrong candidate count");
        if (!check_consistency(per_component[l], partition.submatrices[l]).consistent)
            throw InconsistentInputError("profile for component " + std::to_string(l + 1) +
                                         " is inconsistent with its submatrix");
    }

    std::vector<PartialOrder> voters;
    std::vector<std::size_t> pick(t, 0); // odometer over voter tuples
    for (;;) {
        // Within-component pairs from the picked voters, in original labels.
        std::vector<std::pair<int, int>> shared;
        for (std::size_t l = 0; l < t; ++l) {
            const std::vector<int>& labels = partition.components[l];
            const PartialOrder& voter = per_component[l].voters()[pick[l]];
            for (int a = 1; a <= voter.n(); ++a)
                for (int b = 1; b <= voter.n(); ++b)
                    if (voter.prefers(a, b))
                        shared.emplace_back(labels[a - 1], labels[b - 1]);
        }
        std::vector<std::pair<int, int>> left = shared, right = shared;
        for (std::size_t g = 0; g < t; ++g)
            for (std::size_t l = g + 1; l < t; ++l)
                for (int a : partition.components[g])
                    for (int b : partition.components[l]) {
                        left.emplace_back(a, b);
                        right.emplace_back(b, a);
                    }
        voters.push_back(PartialOrder::from_pairs(m.n(), left));
        voters.push_back(PartialOrder::from_pairs(m.n(), right));

        std::size_t l = 0;
        while (l < t && ++pick[l] == per_component[l].size()) pick[l++] = 0;
        if (l == t) break;
    }
    return VoterProfile(m.n(), std::move(voters));
}

bool is_proper(const UnanimityGraph& g, const ProperColoring& coloring) {
    std::vector<int> color(g.n + 1, 0);
    int c = 0;
    for (const std::vector<int>& cls : coloring.classes) {
        ++c;
        for (int v : cls) {
            if (v < 1 || v > g.n || color[v] != 0) return false;
            color[v] = c;
        }
    }
    for (int v = 1; v <= g.n; ++v)
        if (color[v] == 0) return false;
    for (auto [i, j] : g.edges)
        if (color[i] == color[j]) return false;
    return true;
}

ProperColoring greedy_coloring(const UnanimityGraph& g) {
    std::vector<std::vector<char>> adj(g.n + 1, std::vector<char>(g.n + 1, 0));
    std::vector<int> degree(g.n + 1, 0);
    for (auto [i, j] : g.edges) {
        adj[i][j] = adj[j][i] = 1;
        ++degree[i];
        ++degree[j];
    }
    std::vector<int> color(g.n + 1, 0);
    std::vector<std::vector<char>> neighbor_colors(g.n + 1);
    int max_color = 0;
    for (int step = 0; step < g.n; ++step) {
        // DSATUR order: most distinct neighbor colors, then highest degree,
        // then lowest label.
        int best = 0, best_sat = -1, best_deg = -1;
        for (int v = 1; v <= g.n; ++v) {
            if (color[v] != 0) continue;
            int sat = 0;
            for (char used : neighbor_colors[v]) sat += used != 0;
            if (sat > best_sat || (sat == best_sat && degree[v] > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = degree[v];
            }
        }
        int c = 1;
        while (c <= static_cast<int>(neighbor_colors[best].size()) &&
               neighbor_colors[best][c - 1])
            ++c;
        color[best] = c;
        max_color = std::max(max_color, c);
        for (int w = 1; w <= g.n; ++w)
            if (adj[best][w]) {
                auto& used = neighbor_colors[w];
                if (static_cast<int>(used.size()) < c) used.resize(c, 0);
                used[c - 1] = 1;
            }
    }
    ProperColoring out;
    out.classes.assign(max_color, {});
    for (int v = 1; v <= g.n; ++v) out.classes[color[v] - 1].push_back(v);
    return out;
}

VoterProfile two_voter_construction(const PreferenceMatrix& m,
                                    const ProperColoring& coloring) {
    if (classify(m) == MatrixClass::General)
        throw ClassError("two-voter construction needs a half-integral matrix");
    UnanimityGraph g = unanimity_graph(m);
    if (!is_proper(g, coloring))
        throw ImproperColoringError("coloring is not a proper coloring of the unanimity graph");
    ChainDecomposition forward, backward;
    for (const std::vector<int>& cls : coloring.classes) {
        if (cls.empty()) continue;
        Chain up = cls;
        std::sort(up.begin(), up.end());
        Chain down(up.rbegin(), up.rend());
        forward.push_back(std::move(up));
        backward.push_back(std::move(down));
    }
    std::vector<PartialOrder> voters;
    voters.push_back(PartialOrder::from_chains(m.n(), forward));
    voters.push_back(PartialOrder::from_chains(m.n(), backward));
    return VoterProfile(m.n(), std::move(voters));
}

PreferenceMatrix random_lower_bound_instance(int n, int k, std::uint64_t seed) {
    if (n < 1 || k < 1 || n % k != 0)
        throw DivisibilityError("part count must divide the candidate count");
    const int part_size = n / k;
    auto part = [part_size](int v) { return (v - 1) / part_size; };
    const Rational zero(0), half(1, 2), one(1);
    std::vector<Rational> entries(static_cast<std::size_t>(n) * n, zero);
    auto set = [&](int i, int j, const Rational& r) {
        entries[static_cast<std::size_t>(i - 1) * n + (j - 1)] = r;
    };
    Rng rng(seed);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (part(i) == part(j)) {
                set(i, j, half);
                set(j, i, half);
            } else if (rng.coin()) {
                set(i, j, one);
            } else {
                set(j, i, one);
            }
        }
    return PreferenceMatrix(n, std::move(entries));
}

namespace {

bool subset_has_triangle(const std::vector<std::vector<char>>& arc,
                         const std::vector<int>& subset) {
    const std::size_t s = subset.size();
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = a + 1; b < s; ++b)
            for (std::size_t c = b + 1; c < s; ++c) {
                int x = subset[a], y = subset[b], z = subset[c];
                if ((arc[x][y] && arc[y][z] && arc[z][x]) ||
                    (arc[x][z] && arc[z][y] && arc[y][x]))
                    return true;
            }
    return false;
}

} // namespace

TriangleCheck verify_triangle_property(const VotingGraph& d, int s,
                                       std::int64_t budget, std::uint64_t seed) {
    if (s < 3) throw Error("subset size must be at least 3");
    TriangleCheck result;
    if (s > d.n) { // no subset of that size exists; vacuously true
        result.outcome = TriangleOutcome::Proved;
        result.exhaustive = true;
        return result;
    }
    std::vector<std::vector<char>> arc(d.n + 1, std::vector<char>(d.n + 1, 0));
    for (auto [i, j] : d.arcs) arc[i][j] = 1;

    const std::int64_t kEnumerationLimit = 1000000;
    std::int64_t count = 1;
    for (int i = 1; i <= s && count <= kEnumerationLimit; ++i)
        count = count * (d.n - i + 1) / i; // exact: product of consecutive ints

    if (count <= kEnumerationLimit) {
        std::vector<int> subset(s);
        std::iota(subset.begin(), subset.end(), 1);
        for (;;) {
            ++result.subsets_checked;
            if (!subset_has_triangle(arc, subset)) {
                result.outcome = TriangleOutcome::Refuted;
                result.witness = subset;
                return result;
            }
            // next combination in lexicographic order
            int i = s - 1;
            while (i >= 0 && subset[i] == d.n - (s - 1 - i)) --i;
            if (i < 0) break;
            ++subset[i];
            for (int j = i + 1; j < s; ++j) subset[j] = subset[j - 1] + 1;
        }
        result.outcome = TriangleOutcome::Proved;
        result.exhaustive = true;
        return result;
    }

    Rng rng(seed);
    std::vector<int> pool(d.n);
    for (std::int64_t trial = 0; trial < budget; ++trial) {
        std::iota(pool.begin(), pool.end(), 1);
        for (int i = 0; i < s; ++i) {
            std::size_t j = i + rng.below(d.n - i);
            std::swap(pool[i], pool[j]);
        }
        std::vector<int> subset(pool.begin(), pool.begin() + s);
        std::sort(subset.begin(), subset.end());
        ++result.subsets_checked;
        if (!subset_has_triangle(arc, subset)) {
            result.outcome = TriangleOutcome::Refuted;
            result.witness = subset;
            return result;
        }
    }
    result.outcome = TriangleOutcome::SampledOk;
    return result;
}

} // namespace prefrat
