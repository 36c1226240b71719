#include "prefrat/profile.hpp"

#include <nlohmann/json.hpp>

namespace prefrat {

using nlohmann::json;

VoterProfile::VoterProfile(int n, std::vector<PartialOrder> voters)
    : n_(n), voters_(std::move(voters)) {
    if (n_ < 1) throw Error("candidate count must be at least 1");
    if (voters_.empty()) throw Error("profile needs at least one voter");
    for (const PartialOrder& v : voters_)
        if (v.n() != n_)
            throw DimensionMismatchError("voter candidate count differs from profile");
}

VoterProfile VoterProfile::parse_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad profile JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("voters"))
        throw ParseError("profile JSON needs fields \"n\" and \"voters\"");
    int n = doc["n"].get<int>();
    std::vector<PartialOrder> voters;
    for (const json& voter : doc["voters"]) {
        if (voter.contains("chains")) {
            ChainDecomposition chains;
            for (const json& chain : voter["chains"])
                chains.push_back(chain.get<std::vector<int>>());
            voters.push_back(PartialOrder::from_chains(n, chains));
        } else if (voter.contains("pairs")) {
            std::vector<std::pair<int, int>> pairs;
            for (const json& pr : voter["pairs"])
                pairs.emplace_back(pr.at(0).get<int>(), pr.at(1).get<int>());
            voters.push_back(PartialOrder::from_pairs(n, pairs));
        } else {
            throw ParseError("voter needs \"chains\" or \"pairs\"");
        }
    }
    return VoterProfile(n, std::move(voters));
}

std::string VoterProfile::to_json() const {
    json voters = json::array();
    for (const PartialOrder& v : voters_) {
        json chains = json::array();
        for (const Chain& c : v.min_chain_decomposition()) chains.push_back(c);
        voters.push_back(json{{"chains", std::move(chains)}});
    }
    json doc;
    doc["n"] = n_;
    doc["voters"] = std::move(voters);
    return doc.dump(2) + "\n";
}

Rational strong_fraction(const VoterProfile& v, int i, int j) {
    if (i == j) throw Error("strong_fraction needs distinct candidates");
    std::int64_t count = 0;
    for (const PartialOrder& voter : v.voters()) count += voter.prefers(i, j);
    return Rational(count, static_cast<std::int64_t>(v.size()));
}

Rational weak_fraction(const VoterProfile& v, int i, int j) {
    if (i == j) throw Error("weak_fraction needs distinct candidates");
    std::int64_t count = 0;
    for (const PartialOrder& voter : v.voters()) count += !voter.prefers(j, i);
    return Rational(count, static_cast<std::int64_t>(v.size()));
}

ConsistencyReport check_consistency(const VoterProfile& v, const PreferenceMatrix& m) {
    if (v.n() != m.n())
        throw DimensionMismatchError("profile and matrix candidate counts differ");
    ConsistencyReport report;
    for (int i = 1; i <= m.n(); ++i)
        for (int j = 1; j <= m.n(); ++j) {
            if (i == j) continue;
            Rational strong = strong_fraction(v, i, j);
            Rational weak = weak_fraction(v, i, j);
            const Rational& p = m.at(i, j);
            // upper: the strong fraction exceeds its allowance p_ij;
            // lower: the weak fraction falls short of p_ij
            if (p < strong)
                report.violations.push_back({i, j, strong, p, weak, ViolationSide::Upper});
            if (weak < p)
                report.violations.push_back({i, j, strong, p, weak, ViolationSide::Lower});
        }
    report.consistent = report.violations.empty();
    return report;
}

std::string ConsistencyReport::to_json() const {
    json viols = json::array();
    for (const Violation& v : violations) {
        viols.push_back(json{{"i", v.i},
                             {"j", v.j},
                             {"strong_fraction", v.strong_fraction.str()},
                             {"p_ij", v.p_ij.str()},
                             {"weak_fraction", v.weak_fraction.str()},
                             {"side", v.side == ViolationSide::Lower ? "lower" : "upper"}});
    }
    json doc;
    doc["consistent"] = consistent;
    doc["violations"] = std::move(viols);
    return doc.dump(2) + "\n";
}

int profile_width(const VoterProfile& v) {
    int w = 0;
    for (const PartialOrder& voter : v.voters()) w = std::max(w, voter.width());
    return w;
}

VoterProfile antichain_profile(int n) {
    return VoterProfile(n, {PartialOrder::antichain(n)});
}

VoterProfile normalize_to_chains(const VoterProfile& v) {
    std::vector<PartialOrder> voters;
    voters.reserve(v.size());
    for (const PartialOrder& voter : v.voters())
        voters.push_back(PartialOrder::from_chains(v.n(), voter.min_chain_decomposition()));
    return VoterProfile(v.n(), std::move(voters));
}

} // namespace prefrat
