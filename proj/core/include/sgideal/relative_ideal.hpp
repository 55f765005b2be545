#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sgideal/semigroup.hpp"

namespace sgideal {

/// A relative ideal of a numerical semigroup S: a set E of integers with
/// E + S contained in E, bounded below and cofinite above its minimum.
/// This is the exponent-set model of a fractional monomial ideal of
/// K[[t^S]].
///
/// Normal form: the least member `min`, the least threshold `stable_from`
/// with [stable_from, oo) contained in E, and a bit window covering
/// [min, stable_from). Equality is structural over that triple (plus equal
/// ambient semigroups), so set-level identities can be tested exactly.
class RelativeIdeal {
public:
    using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

    /// E = union of (g + S) over the given generators. The list may be
    /// redundant and need not be sorted.
    static RelativeIdeal from_generators(SemigroupPtr semigroup,
                                         std::span<const std::int64_t> gens);
    static RelativeIdeal from_generators(SemigroupPtr semigroup,
                                         std::initializer_list<std::int64_t> gens);

    /// Builds E from an explicit member list below `tail_from` plus the full
    /// tail [tail_from, oo). Throws std::invalid_argument if the set is not
    /// closed under adding semigroup elements.
    static RelativeIdeal from_members(SemigroupPtr semigroup,
                                      std::span<const std::int64_t> members,
                                      std::int64_t tail_from);

    const NumericalSemigroup& semigroup() const { return *semigroup_; }
    const SemigroupPtr& semigroup_ptr() const { return semigroup_; }

    /// Least member of E (the valuation of the canonical minimal reduction).
    std::int64_t min() const { return min_; }

    /// Least c with [c, oo) contained in E. Equals min() when E is a full
    /// integer tail; otherwise stable_from() - 1 is not a member.
    std::int64_t stable_from() const { return stable_from_; }

    bool contains(std::int64_t z) const {
        if (z < min_) return false;
        if (z >= stable_from_) return true;
        return window_[static_cast<std::size_t>(z - min_)];
    }

    /// Members in [min, stable_from), ascending. Together with the tail
    /// marker these determine E.
    std::vector<std::int64_t> window_members() const;

    /// All members up to and including `bound`, ascending.
    std::vector<std::int64_t> members_up_to(std::int64_t bound) const;

    bool is_subset_of(const RelativeIdeal& other) const;

    /// Structural equality in normal form over the same ambient semigroup.
    bool operator==(const RelativeIdeal& other) const;

    /// Rechecks every representation invariant; throws std::logic_error on
    /// violation. Intended for tests and debug builds.
    void validate() const;

    /// Window members then the tail threshold, e.g. "0 2 5 | ≥7".
    std::string to_string() const;

private:
    RelativeIdeal(SemigroupPtr semigroup, std::int64_t min, std::int64_t stable_from,
                  std::vector<bool> window);

    /// Normalizes a raw bit table over [lo, lo + bits.size()) whose every
    /// integer at or beyond the table end is a member.
    static RelativeIdeal from_raw_window(SemigroupPtr semigroup, std::int64_t lo,
                                         std::vector<bool> bits);

    SemigroupPtr semigroup_;
    std::int64_t min_ = 0;
    std::int64_t stable_from_ = 0;
    std::vector<bool> window_;

    friend RelativeIdeal sum(const RelativeIdeal&, const RelativeIdeal&);
    friend RelativeIdeal colon(const RelativeIdeal&, const RelativeIdeal&);
    friend RelativeIdeal translate(const RelativeIdeal&, std::int64_t);
    friend RelativeIdeal integral_closure(const RelativeIdeal&);
};

/// The distinguished ideals of the theory.
RelativeIdeal unit_ideal(RelativeIdeal::SemigroupPtr semigroup);          // S
RelativeIdeal maximal_ideal(RelativeIdeal::SemigroupPtr semigroup);       // m = S \ {0}
RelativeIdeal conductor_ideal(RelativeIdeal::SemigroupPtr semigroup);     // C = [F+1, oo)
RelativeIdeal normalization_ideal(RelativeIdeal::SemigroupPtr semigroup); // N = [0, oo)
/// The canonical ideal K(S) = { F(S) - s : s integer not in S }; the
/// normalized canonical module with S contained in K contained in N.
RelativeIdeal canonical_ideal(RelativeIdeal::SemigroupPtr semigroup);

/// {e + f}; realizes the ideal product, so sum(E, E) is E squared.
RelativeIdeal sum(const RelativeIdeal& e, const RelativeIdeal& f);

/// E - F = { z : z + F contained in E }; the fractional colon (E : F).
RelativeIdeal colon(const RelativeIdeal& e, const RelativeIdeal& f);

/// z + E; the monomial-isomorphism shift.
RelativeIdeal translate(const RelativeIdeal& e, std::int64_t z);

/// K - E. An involution: dual(dual(E)) = E.
RelativeIdeal dual(const RelativeIdeal& e);

/// S - (S - E); the divisorial closure. Contains E.
RelativeIdeal reflexive_closure(const RelativeIdeal& e);

/// H - (H - E); closure relative to an arbitrary ideal H. Contains E.
RelativeIdeal h_closure(const RelativeIdeal& h, const RelativeIdeal& e);

/// (min E + N) intersect S, defined for integral ideals E contained in S
/// only. Throws std::domain_error("not an integral ideal") otherwise.
RelativeIdeal integral_closure(const RelativeIdeal& e);

/// E - E, the multiplier ring of E. Contains S, closed under addition.
RelativeIdeal end_ring(const RelativeIdeal& e);

/// B = m - m as a relative ideal over S.
RelativeIdeal blowup_ideal(RelativeIdeal::SemigroupPtr semigroup);

/// B = m - m re-read as a numerical semigroup (its minimum is always 0).
NumericalSemigroup blowup_semigroup(const NumericalSemigroup& s);

bool is_reflexive(const RelativeIdeal& e);
bool is_h_reflexive(const RelativeIdeal& h, const RelativeIdeal& e);
/// Requires E contained in S, like integral_closure.
bool is_integrally_closed(const RelativeIdeal& e);
/// min(E) + (E - E) = E, i.e. the minimal reduction is already a reduction
/// with reduction number one.
bool is_stable(const RelativeIdeal& e);
bool is_principal(const RelativeIdeal& e);
/// h + E contained in E: E is a relative ideal over the larger ring h.
bool is_ideal_over(const RelativeIdeal& h, const RelativeIdeal& e);

/// Shift certificate for moving an ideal into a distinguished window.
/// result = translate(e, z + w).
struct NormalizationCertificate {
    std::int64_t z = 0;
    std::int64_t w = 0;
    RelativeIdeal result;
};

/// z = min(K - E); the shifted ideal satisfies C in z+E in K. w stays 0.
NormalizationCertificate normalize_to_canonical_window(const RelativeIdeal& e);

/// z = min(K - E), then w = min(S - (z + E)). For reflexive inputs w = 0
/// and the result satisfies C in result in S; for non-reflexive inputs the
/// certificate is still returned but those containments can fail.
NormalizationCertificate normalize_reflexive(const RelativeIdeal& e);

std::ostream& operator<<(std::ostream& os, const RelativeIdeal& e);

}  // namespace sgideal
