#include "prefrat/oracle.hpp"

#include <vector>

namespace prefrat {
namespace oracle {

int brute_width(const PartialOrder& p) {
    const int n = p.n();
    if (n > 16) throw SizeLimitError("brute_width limit is 16 candidates");
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        bool antichain = true;
        for (int i = 1; i <= n && antichain; ++i) {
            if (!(mask >> (i - 1) & 1)) continue;
            for (int j = i + 1; j <= n; ++j)
                if ((mask >> (j - 1) & 1) && p.comparable(i, j)) {
                    antichain = false;
                    break;
                }
        }
        if (antichain) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

int brute_dichromatic(const Tournament& t) {
    const int n = t.n();
    if (n > 18) throw SizeLimitError("brute_dichromatic limit is 18 vertices");
    const std::uint32_t full = (1u << n) - 1;

    // acyclicity per mask, checked from scratch: a subtournament is cyclic
    // iff it contains a directed triangle
    std::vector<char> acyclic(full + 1, 1);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::vector<int> members;
        for (int v = 1; v <= n; ++v)
            if (mask >> (v - 1) & 1) members.push_back(v);
        bool ok = true;
        for (std::size_t a = 0; a < members.size() && ok; ++a)
            for (std::size_t b = a + 1; b < members.size() && ok; ++b)
                for (std::size_t c = b + 1; c < members.size(); ++c) {
                    int x = members[a], y = members[b], z = members[c];
                    if ((t.arc(x, y) && t.arc(y, z) && t.arc(z, x)) ||
                        (t.arc(x, z) && t.arc(z, y) && t.arc(y, x))) {
                        ok = false;
                        break;
                    }
                }
        acyclic[mask] = ok;
    }

    // min cover: peel a subset containing the lowest uncovered vertex
    std::vector<int> dp(full + 1, n + 1);
    dp[0] = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t low = mask & (0 - mask);
        for (std::uint32_t sub = mask; sub != 0; sub = (sub - 1) & mask) {
            if (!(sub & low) || !acyclic[sub]) continue;
            dp[mask] = std::min(dp[mask], dp[mask ^ sub] + 1);
        }
    }
    return dp[full];
}

namespace {

struct PartitionSearch {
    const Tournament& t;
    int n;
    std::vector<std::vector<int>> blocks;
    int best;

    bool block_acyclic(const std::vector<int>& block) const {
        for (std::size_t a = 0; a < block.size(); ++a)
            for (std::size_t b = a + 1; b < block.size(); ++b)
                for (std::size_t c = b + 1; c < block.size(); ++c) {
                    int x = block[a], y = block[b], z = block[c];
                    if ((t.arc(x, y) && t.arc(y, z) && t.arc(z, x)) ||
                        (t.arc(x, z) && t.arc(z, y) && t.arc(y, x)))
                        return false;
                }
        return true;
    }

    void place(int v) {
        if (v > n) {
            for (const auto& block : blocks)
                if (!block_acyclic(block)) return;
            best = std::min(best, static_cast<int>(blocks.size()));
            return;
        }
        // index loop: recursion below grows `blocks`, which can reallocate
        for (std::size_t idx = 0; idx < blocks.size(); ++idx) {
            blocks[idx].push_back(v);
            place(v + 1);
            blocks[idx].pop_back();
        }
        blocks.push_back({v});
        place(v + 1);
        blocks.pop_back();
    }
};

} // namespace

int brute_alpha_integral(const PreferenceMatrix& m) {
    if (classify(m) != MatrixClass::Integral)
        throw ClassError("brute_alpha_integral needs an integral matrix");
    if (m.n() > 10) throw SizeLimitError("brute_alpha_integral limit is 10 candidates");
    Tournament t = Tournament::from_voting_graph(voting_graph(m));
    PartitionSearch search{t, m.n(), {}, m.n()};
    search.place(1);
    return search.best;
}

} // namespace oracle
} // namespace prefrat
