#include "sgideal/classify.hpp"

#include <stdexcept>

namespace sgideal {

namespace {

/// First member of `a` missing from `b`, if any. Scans the joint window.
std::optional<std::int64_t> first_member_outside(const RelativeIdeal& a, const RelativeIdeal& b) {
    const std::int64_t hi = std::max(a.stable_from(), b.stable_from());
    for (std::int64_t z = a.min(); z < hi; ++z)
        if (a.contains(z) && !b.contains(z)) return z;
    return std::nullopt;
}

}  // namespace

RelativeIdeal closed_ideal_at(RelativeIdeal::SemigroupPtr s, std::int64_t v) {
    if (!s || !s->contains(v)) throw std::invalid_argument("v must belong to the semigroup");
    std::vector<std::int64_t> members;
    for (std::int64_t z = v; z <= s->frobenius(); ++z)
        if (s->contains(z)) members.push_back(z);
    const std::int64_t tail = std::max(v, s->frobenius() + 1);
    return RelativeIdeal::from_members(std::move(s), members, tail);
}

bool is_gorenstein(const RelativeIdeal::SemigroupPtr& s) {
    return canonical_ideal(s) == unit_ideal(s);
}

bool is_almost_gorenstein(const RelativeIdeal::SemigroupPtr& s) {
    RelativeIdeal m = maximal_ideal(s);
    return sum(canonical_ideal(s), m).is_subset_of(m);
}

bool has_minimal_multiplicity(const RelativeIdeal::SemigroupPtr& s) {
    return is_stable(maximal_ideal(s));
}

bool is_arf(const RelativeIdeal::SemigroupPtr& s) {
    for (std::int64_t v = 0; v <= s->frobenius() + 1; ++v) {
        if (!s->contains(v)) continue;
        if (!is_stable(closed_ideal_at(s, v))) return false;
    }
    return true;
}

ClassificationReport classify(const RelativeIdeal::SemigroupPtr& s) {
    ClassificationReport r;
    r.embedding_dimension = s->embedding_dimension();
    r.multiplicity = s->multiplicity();
    r.frobenius = s->frobenius();
    r.genus = s->genus();

    RelativeIdeal unit = unit_ideal(s);
    RelativeIdeal m = maximal_ideal(s);
    RelativeIdeal k = canonical_ideal(s);

    r.gorenstein = k == unit;
    if (!r.gorenstein) r.gorenstein_witness = first_member_outside(k, unit);

    RelativeIdeal km = sum(k, m);
    r.almost_gorenstein = km.is_subset_of(m);
    if (!r.almost_gorenstein) r.almost_gorenstein_witness = first_member_outside(km, m);

    RelativeIdeal reduced = translate(end_ring(m), m.min());
    r.minimal_multiplicity = reduced == m;
    if (!r.minimal_multiplicity) r.minimal_multiplicity_witness = first_member_outside(m, reduced);

    r.arf = true;
    for (std::int64_t v = 0; v <= s->frobenius() + 1; ++v) {
        if (!s->contains(v)) continue;
        if (!is_stable(closed_ideal_at(s, v))) {
            r.arf = false;
            r.arf_witness = v;
            break;
        }
    }
    return r;
}

}  // namespace sgideal
