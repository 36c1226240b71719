#ifndef PREFRAT_TEST_HELPERS_HPP
#define PREFRAT_TEST_HELPERS_HPP

#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "prefrat/integral.hpp"
#include "prefrat/matrix.hpp"
#include "prefrat/poset.hpp"
#include "prefrat/profile.hpp"
#include "prefrat/rng.hpp"

namespace testutil {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

inline std::string data_path(const std::string& name) {
    return std::string(PREFRAT_TEST_DATA) + "/" + name;
}

inline prefrat::PreferenceMatrix load_matrix(const std::string& name) {
    return prefrat::PreferenceMatrix::parse_json(read_file(data_path(name)));
}

inline prefrat::VoterProfile load_profile(const std::string& name) {
    return prefrat::VoterProfile::parse_json(read_file(data_path(name)));
}

/// Random poset: orient random pairs along a random permutation, close.
inline prefrat::PartialOrder random_poset(int n, std::uint64_t seed,
                                          int edge_percent = 35) {
    prefrat::Rng rng(seed);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.below(i + 1)]);
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rng.below(100) < static_cast<std::uint64_t>(edge_percent))
                pairs.emplace_back(perm[a], perm[b]);
    return prefrat::PartialOrder::from_pairs(n, pairs);
}

/// Random half-integral matrix; pair entries drawn from {1/2, 0, 1}.
inline prefrat::PreferenceMatrix random_half_integral(int n, std::uint64_t seed) {
    prefrat::Rng rng(seed);
    const prefrat::Rational zero(0), half(1, 2), one(1);
    std::vector<prefrat::Rational> entries(static_cast<std::size_t>(n) * n, zero);
    auto set = [&](int i, int j, const prefrat::Rational& r) {
        entries[static_cast<std::size_t>(i - 1) * n + (j - 1)] = r;
    };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            switch (rng.below(4)) {
            case 0: set(i, j, one); break;
            case 1: set(j, i, one); break;
            default:
                set(i, j, half);
                set(j, i, half);
            }
        }
    return prefrat::PreferenceMatrix(n, std::move(entries));
}

/// Random fully general matrix: entries p/q with random small q.
inline prefrat::PreferenceMatrix random_general(int n, std::uint64_t seed) {
    prefrat::Rng rng(seed);
    const prefrat::Rational zero(0), one(1);
    std::vector<prefrat::Rational> entries(static_cast<std::size_t>(n) * n, zero);
    auto set = [&](int i, int j, const prefrat::Rational& r) {
        entries[static_cast<std::size_t>(i - 1) * n + (j - 1)] = r;
    };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            std::int64_t q = 2 + static_cast<std::int64_t>(rng.below(9));
            std::int64_t p = static_cast<std::int64_t>(rng.below(q + 1));
            prefrat::Rational r(p, q);
            set(i, j, r);
            set(j, i, one - r);
        }
    return prefrat::PreferenceMatrix(n, std::move(entries));
}

} // namespace testutil

#endif
