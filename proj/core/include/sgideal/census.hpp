#pragma once

#include <cstdint>
#include <vector>

#include "sgideal/relative_ideal.hpp"
#include "sgideal/semigroup.hpp"

namespace sgideal {

/// Hard cap for exhaustive enumeration requests.
inline constexpr std::int64_t kMaxGenusBound = 20;

/// All numerical semigroups up to a genus bound, in deterministic order:
/// ascending genus, then lexicographic by gap sequence.
struct SemigroupUniverse {
    std::int64_t genus_bound = 0;
    std::vector<RelativeIdeal::SemigroupPtr> semigroups;
    /// per_genus_counts[g] = number of semigroups of genus g.
    std::vector<std::int64_t> per_genus_counts;
};

/// Enumerates via the semigroup tree: the root is N and the children of S
/// are S minus one minimal generator exceeding F(S). Throws
/// std::runtime_error beyond kMaxGenusBound, std::invalid_argument on a
/// negative bound.
SemigroupUniverse semigroups_up_to_genus(std::int64_t genus_bound);

/// One census entry with its precomputed predicate flags.
struct IdealRecord {
    RelativeIdeal ideal;
    bool reflexive = false;
    bool integrally_closed = false;
    bool stable = false;
    bool principal = false;
    /// B + E contained in E for the blow-up B = m - m.
    bool b_ideal = false;
};

/// All relative ideals E with C contained in E contained in S, flags
/// included. Deterministic order: ascending in the member-subset bitmask
/// over S intersect [0, F]. Always contains C (first) and S (last).
struct IdealCensus {
    RelativeIdeal::SemigroupPtr semigroup;
    std::vector<IdealRecord> ideals;
};

IdealCensus ideals_between(const RelativeIdeal::SemigroupPtr& s);

/// One representative per translation class of fractional ideals: exactly
/// the E with S contained in E contained in N and min(E) = 0 (each class
/// shifts uniquely to such a set). Deterministic order: ascending in the
/// gap-subset bitmask. First entry S, last entry N.
std::vector<RelativeIdeal> fractional_ideal_classes(const RelativeIdeal::SemigroupPtr& s);

}  // namespace sgideal
