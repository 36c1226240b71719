#ifndef PREFRAT_PROFILE_HPP
#define PREFRAT_PROFILE_HPP

#include <string>
#include <vector>

#include "prefrat/matrix.hpp"
#include "prefrat/poset.hpp"

namespace prefrat {

/// Finite multiset of voters (ordered, duplicates allowed), all ranking the
/// same candidate set 1..n.
class VoterProfile {
public:
    VoterProfile(int n, std::vector<PartialOrder> voters);

    int n() const { return n_; }
    const std::vector<PartialOrder>& voters() const { return voters_; }
    std::size_t size() const { return voters_.size(); }

    /// JSON {"n": ..., "voters": [{"chains": [[...], ...]}, ...]}. Voters
    /// are serialized via their minimum chain decomposition.
    static VoterProfile parse_json(const std::string& text);
    std::string to_json() const;

private:
    int n_;
    std::vector<PartialOrder> voters_;
};

enum class ViolationSide { Lower, Upper };

struct Violation {
    int i = 0;
    int j = 0;
    Rational strong_fraction;
    Rational p_ij;
    Rational weak_fraction;
    ViolationSide side = ViolationSide::Lower;
};

struct ConsistencyReport {
    bool consistent = true;
    std::vector<Violation> violations;

    std::string to_json() const;
};

/// Fraction of voters with i strictly above j.
Rational strong_fraction(const VoterProfile& v, int i, int j);

/// Fraction of voters with i above j or i,j incomparable.
Rational weak_fraction(const VoterProfile& v, int i, int j);

/// Rationality constraints: strong(i,j) <= p_ij <= weak(i,j) for all pairs.
ConsistencyReport check_consistency(const VoterProfile& v, const PreferenceMatrix& m);

/// Max voter width.
int profile_width(const VoterProfile& v);

/// Single voter with the empty relation; consistent with every valid matrix.
VoterProfile antichain_profile(int n);

/// Replace each voter by its minimum chain decomposition. Width is
/// preserved, and so is consistency with any matrix the input satisfied.
VoterProfile normalize_to_chains(const VoterProfile& v);

} // namespace prefrat

#endif
