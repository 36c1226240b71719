#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>

#include "helpers.hpp"
#include "prefrat/oracle.hpp"

using namespace prefrat;
using testutil::load_matrix;
using testutil::random_general;
using testutil::random_half_integral;

namespace {

Tournament load_tournament(const std::string& name) {
    return Tournament::parse_json(testutil::read_file(testutil::data_path(name)));
}

Tournament transitive(int n) {
    Tournament t(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) t.set_arc(i, j);
    return t;
}

std::set<int> vertex_set(const std::vector<std::vector<int>>& classes) {
    std::set<int> s;
    for (const auto& cls : classes) s.insert(cls.begin(), cls.end());
    return s;
}

} // namespace

TEST_CASE("tournament basics and json round trip") {
    Tournament t = load_tournament("fig7_tournament.json");
    CHECK(t.n() == 7);
    CHECK(t.arc(3, 1));
    CHECK_FALSE(t.arc(1, 3));
    Tournament parsed = Tournament::parse_json(t.to_json());
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j)
            if (i != j) CHECK(parsed.arc(i, j) == t.arc(i, j));

    CHECK(classify(t.to_matrix()) == MatrixClass::Integral);
    Tournament back = Tournament::from_voting_graph(voting_graph(t.to_matrix()));
    CHECK(back.arc(3, 1));
}

TEST_CASE("from_voting_graph rejects incomplete orientations") {
    VotingGraph g;
    g.n = 3;
    g.arcs = {{1, 2}};
    CHECK_THROWS_AS(Tournament::from_voting_graph(g), InvariantError);
}

TEST_CASE("valid_dicoloring") {
    Tournament cycle = Tournament::from_voting_graph(voting_graph(load_matrix("fig1.json")));
    CHECK(valid_dicoloring(cycle, Dicoloring{{{1, 2}, {3}}}));
    CHECK_FALSE(valid_dicoloring(cycle, Dicoloring{{{1, 2, 3}}}));       // cyclic class
    CHECK_FALSE(valid_dicoloring(cycle, Dicoloring{{{1, 2}}}));          // not a partition
    CHECK_FALSE(valid_dicoloring(cycle, Dicoloring{{{1, 2}, {2, 3}}})); // repeated vertex
}

TEST_CASE("exact dichromatic number on goldens") {
    Tournament cycle = Tournament::from_voting_graph(voting_graph(load_matrix("fig1.json")));
    ExactDicoloringResult r3 = dichromatic_number_exact(cycle);
    CHECK(r3.k == 2);
    CHECK(valid_dicoloring(cycle, r3.witness));

    ExactDicoloringResult r7 = dichromatic_number_exact(load_tournament("fig7_tournament.json"));
    CHECK(r7.k == 3);
    CHECK(valid_dicoloring(load_tournament("fig7_tournament.json"), r7.witness));

    CHECK(dichromatic_number_exact(transitive(8)).k == 1);
    CHECK(dichromatic_number_exact(Tournament(1)).k == 1);

    CHECK_THROWS_AS(dichromatic_number_exact(transitive(9), 8), SizeLimitError);
}

TEST_CASE("exact matches the subset-DP oracle on random tournaments") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        int n = 5 + static_cast<int>(seed % 6); // 5..10
        Tournament t = random_tournament(n, seed);
        ExactDicoloringResult r = dichromatic_number_exact(t);
        CHECK(r.k == oracle::brute_dichromatic(t));
        CHECK(valid_dicoloring(t, r.witness));
        CHECK(static_cast<int>(r.witness.classes.size()) == r.k);
        CHECK(vertex_set(r.witness.classes).size() == static_cast<std::size_t>(n));
    }
}

TEST_CASE("greedy dicoloring hand simulation on the 3-cycle") {
    // out-degrees all 1; lowest label 1 starts, out-neighbourhood {2},
    // so the first class is {1,2} and 3 is peeled alone
    Tournament cycle = Tournament::from_voting_graph(voting_graph(load_matrix("fig1.json")));
    Dicoloring d = greedy_dicoloring(cycle);
    REQUIRE(d.classes.size() == 2);
    CHECK(d.classes[0] == std::vector<int>{1, 2});
    CHECK(d.classes[1] == std::vector<int>{3});
}

TEST_CASE("greedy dicoloring is valid and within the stated bound") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        int n = 8 + static_cast<int>(seed % 9); // 8..16
        Tournament t = random_tournament(n, seed);
        Dicoloring d = greedy_dicoloring(t);
        CHECK(valid_dicoloring(t, d));
        double bound = 3.0 * n / std::log2(n);
        CHECK(static_cast<double>(d.classes.size()) <= std::ceil(bound));
        if (n <= 12) CHECK(static_cast<int>(d.classes.size()) >= oracle::brute_dichromatic(t));
    }
    CHECK(greedy_dicoloring(transitive(10)).classes.size() == 1);
}

TEST_CASE("voter_from_dicoloring orders each class by the unique acyclic order") {
    Tournament t = load_tournament("fig7_tournament.json");
    VoterProfile v = voter_from_dicoloring(t, Dicoloring{{{3, 1, 4}, {5, 6}, {7, 2}}});
    REQUIRE(v.size() == 1);
    const PartialOrder& voter = v.voters()[0];
    CHECK(voter.prefers(3, 1));
    CHECK(voter.prefers(1, 4));
    CHECK(voter.prefers(3, 4));
    CHECK(voter.prefers(5, 6));
    CHECK(voter.prefers(7, 2));
    CHECK_FALSE(voter.comparable(3, 5));
    CHECK(voter.width() == 3);
    CHECK(check_consistency(v, t.to_matrix()).consistent);

    Tournament cycle = Tournament::from_voting_graph(voting_graph(load_matrix("fig1.json")));
    CHECK_THROWS_AS(voter_from_dicoloring(cycle, Dicoloring{{{1, 2, 3}}}),
                    InvalidDicoloringError);
}

TEST_CASE("random tournaments are deterministic and differ across seeds") {
    Tournament a = random_tournament(10, 42);
    Tournament b = random_tournament(10, 42);
    CHECK(a.to_json() == b.to_json());
    CHECK(random_tournament(10, 43).to_json() != a.to_json());
    int arcs = 0;
    for (int i = 1; i <= 10; ++i)
        for (int j = i + 1; j <= 10; ++j) arcs += a.arc(i, j) + a.arc(j, i);
    CHECK(arcs == 45);
}

TEST_CASE("max acyclic subset: exact values") {
    CHECK(max_acyclic_subset(transitive(9)).size == 9);
    Tournament cycle = Tournament::from_voting_graph(voting_graph(load_matrix("fig1.json")));
    MaxAcyclicResult r = max_acyclic_subset(cycle);
    CHECK(r.size == 2);
    CHECK(r.exact);
}

TEST_CASE("max acyclic subset matches brute enumeration at n=14") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Tournament t = random_tournament(14, seed);
        MaxAcyclicResult r = max_acyclic_subset(t);
        CHECK(r.exact);
        CHECK(static_cast<int>(r.witness.size()) == r.size);
        // witness must induce an acyclic (triangle-free) subtournament
        for (std::size_t a = 0; a < r.witness.size(); ++a)
            for (std::size_t b = a + 1; b < r.witness.size(); ++b)
                for (std::size_t c = b + 1; c < r.witness.size(); ++c) {
                    int x = r.witness[a], y = r.witness[b], z = r.witness[c];
                    bool cyc = (t.arc(x, y) && t.arc(y, z) && t.arc(z, x)) ||
                               (t.arc(x, z) && t.arc(z, y) && t.arc(y, x));
                    CHECK_FALSE(cyc);
                }
        // oracle: no larger acyclic subset exists
        int best = 0;
        for (int mask = 0; mask < (1 << 14); ++mask) {
            bool acyclic = true;
            for (int x = 1; x <= 14 && acyclic; ++x)
                for (int y = x + 1; y <= 14 && acyclic; ++y)
                    for (int z = y + 1; z <= 14 && acyclic; ++z) {
                        if (!((mask >> (x - 1)) & 1) || !((mask >> (y - 1)) & 1) ||
                            !((mask >> (z - 1)) & 1))
                            continue;
                        if ((t.arc(x, y) && t.arc(y, z) && t.arc(z, x)) ||
                            (t.arc(x, z) && t.arc(z, y) && t.arc(y, x)))
                            acyclic = false;
                    }
            if (acyclic) best = std::max(best, __builtin_popcount(mask));
        }
        CHECK(r.size == best);
    }
}

TEST_CASE("greedy fallback above the exact limit stays a valid lower bound") {
    Tournament t = random_tournament(26, 3);
    MaxAcyclicResult r = max_acyclic_subset(t, 20);
    CHECK_FALSE(r.exact);
    CHECK(r.size >= 1);
    CHECK(static_cast<int>(r.witness.size()) == r.size);
    MaxAcyclicResult exact_small = max_acyclic_subset(t, 26);
    CHECK(r.size <= exact_small.size);
}

TEST_CASE("rationality: figure 1 cycle needs exactly 2 voters") {
    RationalityResult r = rationality_number(load_matrix("fig1.json"));
    CHECK(r.matrix_class == MatrixClass::Integral);
    CHECK(r.exact);
    CHECK(r.lower == 2);
    CHECK(r.upper == 2);
    REQUIRE(r.certificate.has_value());
    CHECK(check_consistency(*r.certificate, load_matrix("fig1.json")).consistent);
    CHECK(profile_width(*r.certificate) <= 2);
}

TEST_CASE("rationality: figure 7 tournament needs 3") {
    PreferenceMatrix m = load_tournament("fig7_tournament.json").to_matrix();
    RationalityResult r = rationality_number(m);
    CHECK(r.exact);
    CHECK(r.lower == 3);
    CHECK(r.upper == 3);
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->size() == 1);
    CHECK(check_consistency(*r.certificate, m).consistent);
    CHECK(profile_width(*r.certificate) == 3);
}

TEST_CASE("rationality: transitive tournament is fully rational") {
    RationalityResult r = rationality_number(transitive(6).to_matrix());
    CHECK(r.exact);
    CHECK(r.upper == 1);
}

TEST_CASE("rationality: figure 2 half-integral bounds") {
    RationalityResult r = rationality_number(load_matrix("fig2.json"));
    CHECK(r.matrix_class == MatrixClass::HalfIntegral);
    CHECK(r.lower == 2);
    CHECK(r.upper == 2);
    REQUIRE(r.certificate.has_value());
    CHECK(check_consistency(*r.certificate, load_matrix("fig2.json")).consistent);
}

TEST_CASE("rationality: figure 5 multi-component half-integral") {
    PreferenceMatrix m = load_matrix("fig5.json");
    RationalityResult r = rationality_number(m);
    CHECK(r.lower == 2);
    CHECK(r.upper == 2);
    REQUIRE(r.certificate.has_value());
    CHECK(check_consistency(*r.certificate, m).consistent);
}

TEST_CASE("rationality: general matrix gets antichain bounds") {
    RationalityResult r = rationality_number(load_matrix("fig3.json"));
    CHECK(r.matrix_class == MatrixClass::General);
    CHECK_FALSE(r.exact);
    // fig3 has no {0,1} entries, so its voting graph is empty (acyclic)
    CHECK(r.lower == 1);
    CHECK(r.upper == 3);
    REQUIRE(r.certificate.has_value());
    CHECK(check_consistency(*r.certificate, load_matrix("fig3.json")).consistent);
}

TEST_CASE("rationality bounds are ordered and certified on random matrices") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        PreferenceMatrix m = seed % 3 == 0 ? random_general(6, seed)
                                           : random_half_integral(6, seed);
        RationalityResult r = rationality_number(m);
        CHECK(r.lower >= 1);
        CHECK(r.lower <= r.upper);
        CHECK(r.upper <= m.n());
        REQUIRE(r.certificate.has_value());
        CHECK(check_consistency(*r.certificate, m).consistent);
        CHECK(profile_width(*r.certificate) <= r.upper);
        if (r.exact) CHECK(r.lower == r.upper);
    }
}

TEST_CASE("integral rationality equals the brute partition oracle") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        PreferenceMatrix m = random_tournament(7, seed).to_matrix();
        RationalityResult r = rationality_number(m);
        CHECK(r.exact);
        CHECK(r.upper == oracle::brute_alpha_integral(m));
    }
}

TEST_CASE("deleting a candidate never increases the rationality number") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        Tournament t = random_tournament(8, seed);
        int full = rationality_number(t.to_matrix()).upper;
        // delete candidate 8: take the leading 7x7 principal submatrix
        PreferenceMatrix m = t.to_matrix();
        std::vector<Rational> entries;
        for (int i = 1; i <= 7; ++i)
            for (int j = 1; j <= 7; ++j) entries.push_back(m.at(i, j));
        RationalityResult sub = rationality_number(PreferenceMatrix(7, std::move(entries)));
        CHECK(sub.upper <= full);
    }
}

TEST_CASE("acyclic voting graph means rationality 1") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Tournament t = random_tournament(7, seed);
        PreferenceMatrix m = t.to_matrix();
        RationalityResult r = rationality_number(m);
        CHECK((r.upper == 1) == voting_graph(m).is_acyclic());
    }
    CHECK(rationality_number(transitive(12).to_matrix()).upper == 1);
}

TEST_CASE("greedy fallback above the exact limit reports bounds, not exactness") {
    PreferenceMatrix m = random_tournament(24, 9).to_matrix();
    RationalityResult r = rationality_number(m, 20);
    CHECK_FALSE(r.exact);
    CHECK(r.lower >= 2);
    CHECK(r.lower <= r.upper);
    REQUIRE(r.certificate.has_value());
    CHECK(check_consistency(*r.certificate, m).consistent);
}

TEST_CASE("dicoloring json round trip") {
    Dicoloring d{{{3, 1, 4}, {5, 6}, {7, 2}}};
    Dicoloring parsed = Dicoloring::parse_json(d.to_json());
    CHECK(parsed.classes == d.classes);
}
