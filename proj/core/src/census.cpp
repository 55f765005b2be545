#include "sgideal/census.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

namespace sgideal {

namespace {

using SemigroupPtr = RelativeIdeal::SemigroupPtr;

// Children of S in the semigroup tree: remove one minimal generator beyond
// the Frobenius number. Every semigroup of positive genus arises exactly
// once this way, from re-adding its own Frobenius number.
std::vector<SemigroupPtr> children_of(const NumericalSemigroup& s) {
    std::vector<SemigroupPtr> out;
    for (std::int64_t a : s.minimal_generators()) {
        if (a <= s.frobenius()) continue;
        std::vector<bool> membership(static_cast<std::size_t>(a) + 1);
        for (std::int64_t z = 0; z < a; ++z)
            membership[static_cast<std::size_t>(z)] = s.contains(z);
        membership[static_cast<std::size_t>(a)] = false;
        out.push_back(std::make_shared<const NumericalSemigroup>(
            NumericalSemigroup::from_membership(membership)));
    }
    return out;
}

// Shared helper for both censuses: enumerate the subsets of `optional_members`
// that stay closed under adding minimal generators, given that `floor_members`
// and the tail [F+1, oo) are always present. Returns the selected subsets in
// ascending bitmask order.
std::vector<RelativeIdeal> closed_subsets(const SemigroupPtr& s,
                                          const std::vector<std::int64_t>& floor_members,
                                          const std::vector<std::int64_t>& optional_members) {
    const NumericalSemigroup& sg = *s;
    const std::int64_t f = sg.frobenius();
    const std::size_t k = optional_members.size();
    if (k > 25) {
        throw std::runtime_error("ideal census too large: " + std::to_string(k) +
                                 " optional members exceed the enumeration limit of 25");
    }

    // index_of[v] = position of v in optional_members, or -1.
    std::vector<int> index_of(static_cast<std::size_t>(f + 1), -1);
    for (std::size_t i = 0; i < k; ++i)
        index_of[static_cast<std::size_t>(optional_members[i])] = static_cast<int>(i);

    // required[i] = optional members forced into E whenever optional_members[i]
    // is. Sums landing in floor_members or beyond F impose nothing.
    std::vector<std::uint32_t> required(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::int64_t g : sg.minimal_generators()) {
            const std::int64_t v = optional_members[i] + g;
            if (v > f) continue;
            const int j = index_of[static_cast<std::size_t>(v)];
            if (j >= 0) required[i] |= std::uint32_t{1} << j;
        }
    }

    std::vector<RelativeIdeal> out;
    std::vector<std::int64_t> members;
    for (std::uint32_t mask = 0;; ++mask) {
        bool closed = true;
        for (std::size_t i = 0; i < k && closed; ++i) {
            if (mask & (std::uint32_t{1} << i)) closed = (required[i] & ~mask) == 0;
        }
        if (closed) {
            members = floor_members;
            for (std::size_t i = 0; i < k; ++i) {
                if (mask & (std::uint32_t{1} << i)) members.push_back(optional_members[i]);
            }
            std::sort(members.begin(), members.end());
            out.push_back(RelativeIdeal::from_members(s, members, f + 1));
        }
        if (mask == (std::uint32_t{1} << k) - 1) break;
    }
    return out;
}

}  // namespace

SemigroupUniverse semigroups_up_to_genus(std::int64_t genus_bound) {
    if (genus_bound < 0) throw std::invalid_argument("genus bound must be nonnegative");
    if (genus_bound > kMaxGenusBound) {
        throw std::runtime_error("genus bound " + std::to_string(genus_bound) +
                                 " exceeds the enumeration cap of " +
                                 std::to_string(kMaxGenusBound));
    }

    SemigroupUniverse u;
    u.genus_bound = genus_bound;
    std::vector<SemigroupPtr> level = {
        std::make_shared<const NumericalSemigroup>(NumericalSemigroup::naturals())};
    u.per_genus_counts.assign(static_cast<std::size_t>(genus_bound) + 1, 0);
    for (std::int64_t g = 0;; ++g) {
        u.per_genus_counts[static_cast<std::size_t>(g)] =
            static_cast<std::int64_t>(level.size());
        u.semigroups.insert(u.semigroups.end(), level.begin(), level.end());
        if (g == genus_bound) break;

        std::vector<std::pair<std::vector<std::int64_t>, SemigroupPtr>> next;
        for (const SemigroupPtr& s : level) {
            for (SemigroupPtr& child : children_of(*s)) {
                auto key = child->gaps();
                next.emplace_back(std::move(key), std::move(child));
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        level.clear();
        level.reserve(next.size());
        for (auto& [key, child] : next) level.push_back(std::move(child));
    }
    return u;
}

IdealCensus ideals_between(const SemigroupPtr& s) {
    const std::int64_t f = s->frobenius();
    IdealCensus census;
    census.semigroup = s;

    const std::vector<std::int64_t> optional = s->elements_up_to(f);
    std::vector<RelativeIdeal> ideals = closed_subsets(s, {}, optional);

    const RelativeIdeal b = blowup_ideal(s);
    census.ideals.reserve(ideals.size());
    for (RelativeIdeal& e : ideals) {
        IdealRecord rec{std::move(e), false, false, false, false, false};
        rec.reflexive = is_reflexive(rec.ideal);
        rec.integrally_closed = is_integrally_closed(rec.ideal);
        rec.stable = is_stable(rec.ideal);
        rec.principal = is_principal(rec.ideal);
        rec.b_ideal = is_ideal_over(b, rec.ideal);
        census.ideals.push_back(std::move(rec));
    }
    return census;
}

std::vector<RelativeIdeal> fractional_ideal_classes(const SemigroupPtr& s) {
    const std::int64_t f = s->frobenius();
    return closed_subsets(s, s->elements_up_to(f), s->gaps());
}

}  // namespace sgideal
