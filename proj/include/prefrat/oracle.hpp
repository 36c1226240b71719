#ifndef PREFRAT_ORACLE_HPP
#define PREFRAT_ORACLE_HPP

#include "prefrat/integral.hpp"
#include "prefrat/matrix.hpp"
#include "prefrat/poset.hpp"

namespace prefrat {
namespace oracle {

// Deliberately naive reference implementations. They share no code with
// the optimized paths so the two sides can validate each other.

/// Maximum antichain by exhaustive subset enumeration; n <= 16.
int brute_width(const PartialOrder& p);

/// Minimum partition into acyclic sets by subset DP over masks; n <= 18.
int brute_dichromatic(const Tournament& t);

/// Minimum chain count over all consistent single-voter chain partitions,
/// by enumerating set partitions; integral matrices only, n <= 10.
int brute_alpha_integral(const PreferenceMatrix& m);

} // namespace oracle
} // namespace prefrat

#endif
