#include "prefrat/integral.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "prefrat/halfint.hpp"
#include "prefrat/rng.hpp"

namespace prefrat {

using nlohmann::json;

Tournament::Tournament(int n) : n_(n) {
    if (n_ < 1) throw Error("vertex count must be at least 1");
    arc_.assign(static_cast<std::size_t>(n_) * n_, 0);
}

int Tournament::idx(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw Error("vertex label out of range");
    return (i - 1) * n_ + (j - 1);
}

void Tournament::set_arc(int i, int j) {
    if (i == j) throw Error("self-loop arc");
    arc_[idx(i, j)] = 1;
    arc_[idx(j, i)] = 0;
}

Tournament Tournament::from_voting_graph(const VotingGraph& g) {
    Tournament t(g.n);
    for (auto [i, j] : g.arcs) t.set_arc(i, j);
    // every pair must be oriented
    for (int i = 1; i <= g.n; ++i)
        for (int j = i + 1; j <= g.n; ++j)
            if (!t.arc(i, j) && !t.arc(j, i))
                throw InvariantError("voting graph is not a tournament: pair (" +
                                     std::to_string(i) + "," + std::to_string(j) +
                                     ") unoriented");
    return t;
}

Tournament Tournament::parse_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad tournament JSON: ") + e.what());
    }
    VotingGraph g;
    g.n = doc.at("n").get<int>();
    for (const json& pr : doc.at("arcs"))
        g.arcs.emplace_back(pr.at(0).get<int>(), pr.at(1).get<int>());
    return from_voting_graph(g);
}

std::string Tournament::to_json() const {
    json arcs = json::array();
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            if (arc(i, j)) arcs.push_back(json::array({i, j}));
    json doc;
    doc["n"] = n_;
    doc["arcs"] = std::move(arcs);
    return doc.dump(2) + "\n";
}

PreferenceMatrix Tournament::to_matrix() const {
    const Rational zero(0), one(1);
    std::vector<Rational> entries(static_cast<std::size_t>(n_) * n_, zero);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            if (arc(i, j)) entries[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] = one;
    return PreferenceMatrix(n_, std::move(entries));
}

Dicoloring Dicoloring::parse_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad dicoloring JSON: ") + e.what());
    }
    Dicoloring d;
    for (const json& cls : doc.at("classes"))
        d.classes.push_back(cls.get<std::vector<int>>());
    return d;
}

std::string Dicoloring::to_json() const {
    json doc;
    doc["classes"] = classes;
    return doc.dump(2) + "\n";
}

namespace {

/// Topological order of an acyclic subtournament (unique); empty optional
/// when the class is cyclic. Selection of the all-beating source each round.
std::optional<std::vector<int>> acyclic_order(const Tournament& t,
                                              std::vector<int> members) {
    std::vector<int> order;
    while (!members.empty()) {
        int source = 0;
        for (int v : members) {
            bool beats_all = true;
            for (int w : members)
                if (w != v && !t.arc(v, w)) {
                    beats_all = false;
                    break;
                }
            if (beats_all) {
                source = v;
                break;
            }
        }
        if (source == 0) return std::nullopt;
        order.push_back(source);
        members.erase(std::find(members.begin(), members.end(), source));
    }
    return order;
}

} // namespace

bool valid_dicoloring(const Tournament& t, const Dicoloring& d) {
    std::vector<char> seen(t.n() + 1, 0);
    for (const std::vector<int>& cls : d.classes) {
        for (int v : cls) {
            if (v < 1 || v > t.n() || seen[v]) return false;
            seen[v] = 1;
        }
        if (!acyclic_order(t, cls)) return false;
    }
    for (int v = 1; v <= t.n(); ++v)
        if (!seen[v]) return false;
    return true;
}

namespace {

/// Can v be inserted into a class kept in acyclic order? The order of a
/// subtournament is acyclic iff arcs against v split it into a prefix that
/// beats v and a suffix that v beats.
bool insertion_ok(const Tournament& t, const std::vector<int>& order, int v) {
    bool v_beats_seen = false;
    for (int w : order) {
        if (t.arc(v, w))
            v_beats_seen = true;
        else if (v_beats_seen)
            return false;
    }
    return true;
}

void insert_in_order(const Tournament& t, std::vector<int>& order, int v) {
    std::size_t pos = 0;
    while (pos < order.size() && t.arc(order[pos], v)) ++pos;
    order.insert(order.begin() + pos, v);
}

bool assign(const Tournament& t, int v, int k,
            std::vector<std::vector<int>>& classes, int used) {
    if (v > t.n()) return true;
    // one fresh class at most keeps symmetric branches out
    int limit = std::min(used + 1, k);
    for (int c = 0; c < limit; ++c) {
        if (!insertion_ok(t, classes[c], v)) continue;
        std::vector<int> saved = classes[c];
        insert_in_order(t, classes[c], v);
        if (assign(t, v + 1, k, classes, std::max(used, c + 1))) return true;
        classes[c] = std::move(saved);
    }
    return false;
}

} // namespace

ExactDicoloringResult dichromatic_number_exact(const Tournament& t, int exact_limit) {
    if (t.n() > exact_limit)
        throw SizeLimitError("tournament exceeds the exact-solver limit of " +
                             std::to_string(exact_limit));
    for (int k = 1; k <= t.n(); ++k) {
        std::vector<std::vector<int>> classes(k);
        if (assign(t, 1, k, classes, 0)) {
            ExactDicoloringResult result;
            result.k = k;
            for (auto& cls : classes)
                if (!cls.empty()) result.witness.classes.push_back(std::move(cls));
            return result;
        }
    }
    throw Error("unreachable: n classes always suffice");
}

Dicoloring greedy_dicoloring(const Tournament& t) {
    std::vector<char> remaining(t.n() + 1, 1);
    int left = t.n();
    Dicoloring d;
    while (left > 0) {
        std::vector<char> candidates = remaining;
        std::vector<int> cls;
        for (;;) {
            int best = 0, best_deg = -1;
            for (int v = 1; v <= t.n(); ++v) {
                if (!candidates[v]) continue;
                int deg = 0;
                for (int w = 1; w <= t.n(); ++w)
                    if (candidates[w] && t.arc(v, w)) ++deg;
                if (deg > best_deg) {
                    best = v;
                    best_deg = deg;
                }
            }
            if (best == 0) break;
            cls.push_back(best);
            // restrict to out-neighbours of the chosen vertex
            for (int w = 1; w <= t.n(); ++w)
                if (candidates[w] && (w == best || !t.arc(best, w))) candidates[w] = 0;
        }
        for (int v : cls) {
            remaining[v] = 0;
            --left;
        }
        d.classes.push_back(std::move(cls));
    }
    return d;
}

VoterProfile voter_from_dicoloring(const Tournament& t, const Dicoloring& d) {
    std::vector<char> seen(t.n() + 1, 0);
    ChainDecomposition chains;
    for (const std::vector<int>& cls : d.classes) {
        if (cls.empty()) continue;
        for (int v : cls) {
            if (v < 1 || v > t.n() || seen[v])
                throw InvalidDicoloringError("classes do not partition the vertices");
            seen[v] = 1;
        }
        auto order = acyclic_order(t, cls);
        if (!order)
            throw InvalidDicoloringError("class contains a directed cycle");
        chains.push_back(std::move(*order));
    }
    for (int v = 1; v <= t.n(); ++v)
        if (!seen[v]) throw InvalidDicoloringError("classes do not cover every vertex");
    return VoterProfile(t.n(), {PartialOrder::from_chains(t.n(), chains)});
}

Tournament random_tournament(int n, std::uint64_t seed) {
    Tournament t(n);
    Rng rng(seed);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (rng.coin())
                t.set_arc(i, j);
            else
                t.set_arc(j, i);
        }
    return t;
}

MaxAcyclicResult max_acyclic_subset(const Tournament& t, int exact_limit) {
    MaxAcyclicResult result;
    if (t.n() <= exact_limit) {
        const int n = t.n();
        const std::uint32_t full = (n >= 32) ? 0xffffffffu : ((1u << n) - 1);
        std::vector<char> acyclic(static_cast<std::size_t>(full) + 1, 0);
        acyclic[0] = 1;
        std::uint32_t best_mask = 0;
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            int hi = 31 - __builtin_clz(mask);
            std::uint32_t rest = mask & ~(1u << hi);
            if (!acyclic[rest]) continue;
            // adding vertex hi+1: cyclic iff some a,b in rest close a triangle
            bool ok = true;
            int v = hi + 1;
            for (int a = 1; a <= n && ok; ++a) {
                if (!(rest >> (a - 1) & 1) || !t.arc(v, a)) continue;
                for (int b = 1; b <= n; ++b)
                    if ((rest >> (b - 1) & 1) && t.arc(a, b) && t.arc(b, v)) {
                        ok = false;
                        break;
                    }
            }
            if (!ok) continue;
            acyclic[mask] = 1;
            if (__builtin_popcount(mask) > __builtin_popcount(best_mask))
                best_mask = mask;
        }
        for (int v = 1; v <= n; ++v)
            if (best_mask >> (v - 1) & 1) result.witness.push_back(v);
        result.size = __builtin_popcount(best_mask);
        result.exact = true;
        return result;
    }
    // greedy insertion in label order; a lower bound only
    std::vector<int> order;
    for (int v = 1; v <= t.n(); ++v)
        if (insertion_ok(t, order, v)) insert_in_order(t, order, v);
    std::sort(order.begin(), order.end());
    result.witness = std::move(order);
    result.size = static_cast<int>(result.witness.size());
    result.exact = false;
    return result;
}

namespace {

RationalityResult integral_rationality(const PreferenceMatrix& m, int exact_limit) {
    RationalityResult r;
    r.matrix_class = MatrixClass::Integral;
    Tournament t = Tournament::from_voting_graph(voting_graph(m));
    if (t.n() <= exact_limit) {
        ExactDicoloringResult exact = dichromatic_number_exact(t, exact_limit);
        r.exact = true;
        r.lower = r.upper = exact.k;
        r.certificate = voter_from_dicoloring(t, exact.witness);
        r.method = "dichromatic-exact";
    } else {
        Dicoloring greedy = greedy_dicoloring(t);
        r.exact = false;
        r.upper = static_cast<int>(greedy.classes.size());
        r.lower = voting_graph(m).is_acyclic() ? 1 : 2;
        r.certificate = voter_from_dicoloring(t, greedy);
        r.method = "dichromatic-greedy";
    }
    return r;
}

RationalityResult half_integral_rationality(const PreferenceMatrix& m, int exact_limit) {
    RationalityResult r;
    r.matrix_class = MatrixClass::HalfIntegral;
    ComponentPartition partition = components(m);
    std::vector<VoterProfile> witnesses;
    int lo = 1, hi = 1;
    bool all_exact = true;
    for (const PreferenceMatrix& sub : partition.submatrices) {
        RationalityResult comp;
        if (classify(sub) == MatrixClass::Integral) {
            comp = integral_rationality(sub, exact_limit);
        } else {
            ProperColoring coloring = greedy_coloring(unanimity_graph(sub));
            comp.upper = static_cast<int>(coloring.classes.size());
            comp.lower = voting_graph(sub).is_acyclic() ? 1 : 2;
            comp.exact = comp.lower == comp.upper;
            comp.certificate = two_voter_construction(sub, coloring);
        }
        lo = std::max(lo, comp.lower);
        hi = std::max(hi, comp.upper);
        all_exact = all_exact && comp.exact;
        witnesses.push_back(std::move(*comp.certificate));
    }
    r.lower = lo;
    r.upper = hi;
    r.exact = all_exact || lo == hi;
    if (partition.components.size() == 1)
        r.certificate = std::move(witnesses.front());
    else
        r.certificate = combine_component_profiles(m, partition, witnesses);
    r.method = "unanimity-components";
    return r;
}

} // namespace

RationalityResult rationality_number(const PreferenceMatrix& m, int exact_limit) {
    switch (classify(m)) {
    case MatrixClass::Integral:
        return integral_rationality(m, exact_limit);
    case MatrixClass::HalfIntegral:
        return half_integral_rationality(m, exact_limit);
    default: {
        RationalityResult r;
        r.matrix_class = MatrixClass::General;
        r.lower = voting_graph(m).is_acyclic() ? 1 : 2;
        r.upper = m.n();
        r.exact = r.lower == r.upper;
        r.certificate = antichain_profile(m.n());
        r.method = "antichain";
        return r;
    }
    }
}

} // namespace prefrat
