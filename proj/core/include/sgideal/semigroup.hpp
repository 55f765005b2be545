#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sgideal {

/// A numerical semigroup S: a cofinite additive submonoid of the nonnegative
/// integers containing 0. Models the exponent set of a monomial curve ring
/// K[[t^S]]; its normalization is the full set of nonnegative integers.
///
/// Values are immutable after construction and safe to share across threads.
/// Membership is stored on the window [0, frobenius()+1]; every integer
/// beyond the window is a member (cofiniteness), every negative integer is
/// not.
class NumericalSemigroup {
public:
    /// Builds the semigroup generated by `gens`. The input may be redundant;
    /// minimal generators are recomputed from the membership table.
    /// Throws std::invalid_argument if the list is empty, contains an entry
    /// < 1, has gcd != 1 (the complement would be infinite), or exceeds the
    /// desk-scale generator limit of 10^4.
    static NumericalSemigroup from_generators(std::span<const std::int64_t> gens);
    static NumericalSemigroup from_generators(std::initializer_list<std::int64_t> gens);

    /// Builds a semigroup from an explicit membership window: membership[i]
    /// says whether i is a member, and every integer >= membership.size() is
    /// a member by convention. Throws std::invalid_argument if 0 is missing
    /// or the set is not closed under addition.
    static NumericalSemigroup from_membership(const std::vector<bool>& membership);

    /// The full monoid of nonnegative integers (frobenius -1, genus 0).
    static NumericalSemigroup naturals();

    bool contains(std::int64_t z) const {
        if (z < 0) return false;
        if (z >= static_cast<std::int64_t>(membership_.size())) return true;
        return membership_[static_cast<std::size_t>(z)];
    }

    const std::vector<std::int64_t>& minimal_generators() const { return minimal_generators_; }
    /// Largest integer not in S; -1 when S is the whole monoid.
    std::int64_t frobenius() const { return frobenius_; }
    /// Smallest positive member.
    std::int64_t multiplicity() const { return multiplicity_; }
    /// Number of minimal generators. Always <= multiplicity().
    std::int64_t embedding_dimension() const {
        return static_cast<std::int64_t>(minimal_generators_.size());
    }
    /// Number of positive integers outside S.
    std::int64_t genus() const { return genus_; }

    /// The positive integers outside S, ascending.
    std::vector<std::int64_t> gaps() const;
    /// Members of S in [0, bound], ascending.
    std::vector<std::int64_t> elements_up_to(std::int64_t bound) const;

    bool operator==(const NumericalSemigroup&) const = default;

    /// Canonical form: the ascending minimal generator list, comma separated.
    std::string to_string() const;

private:
    NumericalSemigroup() = default;
    static NumericalSemigroup from_window(std::vector<bool> window);

    std::vector<std::int64_t> minimal_generators_;
    std::int64_t frobenius_ = -1;
    std::int64_t multiplicity_ = 1;
    std::int64_t genus_ = 0;
    std::vector<bool> membership_;  // [0, frobenius_ + 1]
};

/// Parses "a,b,c", "<a,b,c>" or the bracketed form with angle quotes,
/// tolerating whitespace. Throws std::invalid_argument on malformed input.
std::vector<std::int64_t> parse_generator_list(std::string_view text);

std::ostream& operator<<(std::ostream& os, const NumericalSemigroup& s);

}  // namespace sgideal
