#include "sgideal/relative_ideal.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace sgideal {

namespace {

void require_ambient(const RelativeIdeal& a, const RelativeIdeal& b) {
    if (a.semigroup_ptr() == b.semigroup_ptr()) return;
    if (a.semigroup() == b.semigroup()) return;
    throw std::invalid_argument("ideals have different ambient semigroups");
}

}  // namespace

RelativeIdeal::RelativeIdeal(SemigroupPtr semigroup, std::int64_t min, std::int64_t stable_from,
                             std::vector<bool> window)
    : semigroup_(std::move(semigroup)),
      min_(min),
      stable_from_(stable_from),
      window_(std::move(window)) {}

RelativeIdeal RelativeIdeal::from_raw_window(SemigroupPtr semigroup, std::int64_t lo,
                                             std::vector<bool> bits) {
    const std::int64_t n = static_cast<std::int64_t>(bits.size());
    std::int64_t first = 0;
    while (first < n && !bits[static_cast<std::size_t>(first)]) ++first;
    const std::int64_t min = lo + first;

    std::int64_t last_gap = -1;
    for (std::int64_t i = n - 1; i >= first; --i) {
        if (!bits[static_cast<std::size_t>(i)]) {
            last_gap = i;
            break;
        }
    }
    const std::int64_t stable_from = last_gap < 0 ? min : lo + last_gap + 1;

    std::vector<bool> window;
    window.reserve(static_cast<std::size_t>(stable_from - min));
    for (std::int64_t z = min; z < stable_from; ++z)
        window.push_back(bits[static_cast<std::size_t>(z - lo)]);
    return RelativeIdeal(std::move(semigroup), min, stable_from, std::move(window));
}

RelativeIdeal RelativeIdeal::from_generators(SemigroupPtr semigroup,
                                             std::span<const std::int64_t> gens) {
    if (!semigroup) throw std::invalid_argument("null ambient semigroup");
    if (gens.empty()) throw std::invalid_argument("ideal generator list is empty");
    const std::int64_t lo = *std::min_element(gens.begin(), gens.end());
    // lo + C is inside E, so membership is free from lo + F + 1 on.
    const std::int64_t bound = lo + semigroup->frobenius() + 1;
    std::vector<bool> bits(static_cast<std::size_t>(bound - lo), false);
    for (std::int64_t z = lo; z < bound; ++z) {
        for (std::int64_t g : gens) {
            if (semigroup->contains(z - g)) {
                bits[static_cast<std::size_t>(z - lo)] = true;
                break;
            }
        }
    }
    return from_raw_window(std::move(semigroup), lo, std::move(bits));
}

RelativeIdeal RelativeIdeal::from_generators(SemigroupPtr semigroup,
                                             std::initializer_list<std::int64_t> gens) {
    return from_generators(std::move(semigroup),
                           std::span<const std::int64_t>(gens.begin(), gens.size()));
}

RelativeIdeal RelativeIdeal::from_members(SemigroupPtr semigroup,
                                          std::span<const std::int64_t> members,
                                          std::int64_t tail_from) {
    if (!semigroup) throw std::invalid_argument("null ambient semigroup");
    std::int64_t lo = tail_from;
    for (std::int64_t m : members) lo = std::min(lo, m);
    std::vector<bool> bits(static_cast<std::size_t>(tail_from - lo), false);
    for (std::int64_t m : members)
        if (m < tail_from) bits[static_cast<std::size_t>(m - lo)] = true;
    RelativeIdeal e = from_raw_window(std::move(semigroup), lo, std::move(bits));
    for (std::int64_t m : e.window_members()) {
        for (std::int64_t g : e.semigroup().minimal_generators()) {
            if (!e.contains(m + g))
                throw std::invalid_argument("member set is not closed under the semigroup action");
        }
    }
    return e;
}

std::vector<std::int64_t> RelativeIdeal::window_members() const {
    std::vector<std::int64_t> out;
    for (std::int64_t z = min_; z < stable_from_; ++z)
        if (window_[static_cast<std::size_t>(z - min_)]) out.push_back(z);
    return out;
}

std::vector<std::int64_t> RelativeIdeal::members_up_to(std::int64_t bound) const {
    std::vector<std::int64_t> out;
    for (std::int64_t z = min_; z <= bound; ++z)
        if (contains(z)) out.push_back(z);
    return out;
}

bool RelativeIdeal::is_subset_of(const RelativeIdeal& other) const {
    require_ambient(*this, other);
    if (min_ < other.min_) return false;
    const std::int64_t hi = std::max(stable_from_, other.stable_from_);
    for (std::int64_t z = min_; z < hi; ++z)
        if (contains(z) && !other.contains(z)) return false;
    return true;
}

bool RelativeIdeal::operator==(const RelativeIdeal& other) const {
    if (min_ != other.min_ || stable_from_ != other.stable_from_ || window_ != other.window_)
        return false;
    return semigroup_ == other.semigroup_ || *semigroup_ == *other.semigroup_;
}

void RelativeIdeal::validate() const {
    if (!semigroup_) throw std::logic_error("ideal without ambient semigroup");
    if (stable_from_ < min_) throw std::logic_error("stable_from below min");
    if (static_cast<std::int64_t>(window_.size()) != stable_from_ - min_)
        throw std::logic_error("window size disagrees with [min, stable_from)");
    if (!window_.empty()) {
        if (!window_.front()) throw std::logic_error("min is not a member");
        if (window_.back()) throw std::logic_error("stable_from is not minimal");
    }
    for (std::int64_t m : window_members()) {
        for (std::int64_t g : semigroup_->minimal_generators()) {
            if (!contains(m + g))
                throw std::logic_error("ideal is not closed under the semigroup action");
        }
    }
}

std::string RelativeIdeal::to_string() const {
    std::ostringstream os;
    for (std::int64_t m : window_members()) os << m << ' ';
    os << "| ≥" << stable_from_;
    return os.str();
}

RelativeIdeal unit_ideal(RelativeIdeal::SemigroupPtr semigroup) {
    return RelativeIdeal::from_generators(std::move(semigroup), {0});
}

RelativeIdeal maximal_ideal(RelativeIdeal::SemigroupPtr semigroup) {
    if (!semigroup) throw std::invalid_argument("null ambient semigroup");
    std::vector<std::int64_t> gens = semigroup->minimal_generators();
    return RelativeIdeal::from_generators(std::move(semigroup), gens);
}

RelativeIdeal conductor_ideal(RelativeIdeal::SemigroupPtr semigroup) {
    if (!semigroup) throw std::invalid_argument("null ambient semigroup");
    const std::int64_t f = semigroup->frobenius();
    return RelativeIdeal::from_members(std::move(semigroup), {}, f + 1);
}

RelativeIdeal normalization_ideal(RelativeIdeal::SemigroupPtr semigroup) {
    if (!semigroup) throw std::invalid_argument("null ambient semigroup");
    return RelativeIdeal::from_members(std::move(semigroup), {}, 0);
}

RelativeIdeal canonical_ideal(RelativeIdeal::SemigroupPtr semigroup) {
    if (!semigroup) throw std::invalid_argument("null ambient semigroup");
    const std::int64_t f = semigroup->frobenius();
    // F - s for negative s fills (F, oo); gaps s contribute F - s in [0, F),
    // and s = F itself contributes 0.
    std::vector<std::int64_t> members;
    for (std::int64_t s : semigroup->gaps()) members.push_back(f - s);
    return RelativeIdeal::from_members(std::move(semigroup), members, f + 1);
}

RelativeIdeal sum(const RelativeIdeal& e, const RelativeIdeal& f) {
    require_ambient(e, f);
    const std::int64_t lo = e.min_ + f.min_;
    // Past either stable tail plus the other minimum, membership is free.
    const std::int64_t bound = std::min(e.stable_from_ + f.min_, e.min_ + f.stable_from_);
    std::vector<bool> bits(static_cast<std::size_t>(bound - lo), false);
    for (std::int64_t z = lo; z < bound; ++z) {
        for (std::int64_t a = e.min_; a <= z - f.min_; ++a) {
            if (e.contains(a) && f.contains(z - a)) {
                bits[static_cast<std::size_t>(z - lo)] = true;
                break;
            }
        }
    }
    return RelativeIdeal::from_raw_window(e.semigroup_, lo, std::move(bits));
}

RelativeIdeal colon(const RelativeIdeal& e, const RelativeIdeal& f) {
    require_ambient(e, f);
    // z + min(F) >= min(E) bounds below; z >= stable(E) - min(F) makes
    // every z + f land in the stable tail of E.
    const std::int64_t lo = e.min_ - f.min_;
    const std::int64_t bound = e.stable_from_ - f.min_;
    std::vector<bool> bits(static_cast<std::size_t>(std::max<std::int64_t>(0, bound - lo)), false);
    for (std::int64_t z = lo; z < bound; ++z) {
        bool ok = true;
        for (std::int64_t fe = f.min_; fe < e.stable_from_ - z; ++fe) {
            if (f.contains(fe) && !e.contains(z + fe)) {
                ok = false;
                break;
            }
        }
        bits[static_cast<std::size_t>(z - lo)] = ok;
    }
    return RelativeIdeal::from_raw_window(e.semigroup_, lo, std::move(bits));
}

RelativeIdeal translate(const RelativeIdeal& e, std::int64_t z) {
    return RelativeIdeal(e.semigroup_, e.min_ + z, e.stable_from_ + z, e.window_);
}

RelativeIdeal dual(const RelativeIdeal& e) {
    return colon(canonical_ideal(e.semigroup_ptr()), e);
}

RelativeIdeal reflexive_closure(const RelativeIdeal& e) {
    return h_closure(unit_ideal(e.semigroup_ptr()), e);
}

RelativeIdeal h_closure(const RelativeIdeal& h, const RelativeIdeal& e) {
    return colon(h, colon(h, e));
}

RelativeIdeal integral_closure(const RelativeIdeal& e) {
    if (!e.is_subset_of(unit_ideal(e.semigroup_ptr())))
        throw std::domain_error("not an integral ideal");
    const std::int64_t lo = e.min();
    const std::int64_t bound = std::max(lo, e.semigroup().frobenius() + 1);
    std::vector<bool> bits(static_cast<std::size_t>(bound - lo), false);
    for (std::int64_t z = lo; z < bound; ++z)
        bits[static_cast<std::size_t>(z - lo)] = e.semigroup().contains(z);
    return RelativeIdeal::from_raw_window(e.semigroup_ptr(), lo, std::move(bits));
}

RelativeIdeal end_ring(const RelativeIdeal& e) {
    return colon(e, e);
}

RelativeIdeal blowup_ideal(RelativeIdeal::SemigroupPtr semigroup) {
    RelativeIdeal m = maximal_ideal(std::move(semigroup));
    return colon(m, m);
}

NumericalSemigroup blowup_semigroup(const NumericalSemigroup& s) {
    auto shared = std::make_shared<NumericalSemigroup>(s);
    RelativeIdeal b = blowup_ideal(shared);
    if (b.min() != 0) throw std::logic_error("blow-up does not contain 0");
    std::vector<bool> membership(static_cast<std::size_t>(b.stable_from()), false);
    for (std::int64_t z : b.window_members()) membership[static_cast<std::size_t>(z)] = true;
    return NumericalSemigroup::from_membership(membership);
}

bool is_reflexive(const RelativeIdeal& e) {
    return reflexive_closure(e) == e;
}

bool is_h_reflexive(const RelativeIdeal& h, const RelativeIdeal& e) {
    return h_closure(h, e) == e;
}

bool is_integrally_closed(const RelativeIdeal& e) {
    return integral_closure(e) == e;
}

bool is_stable(const RelativeIdeal& e) {
    return translate(end_ring(e), e.min()) == e;
}

bool is_principal(const RelativeIdeal& e) {
    return translate(unit_ideal(e.semigroup_ptr()), e.min()) == e;
}

bool is_ideal_over(const RelativeIdeal& h, const RelativeIdeal& e) {
    return sum(h, e).is_subset_of(e);
}

NormalizationCertificate normalize_to_canonical_window(const RelativeIdeal& e) {
    const std::int64_t z = colon(canonical_ideal(e.semigroup_ptr()), e).min();
    return NormalizationCertificate{z, 0, translate(e, z)};
}

NormalizationCertificate normalize_reflexive(const RelativeIdeal& e) {
    const std::int64_t z = colon(canonical_ideal(e.semigroup_ptr()), e).min();
    RelativeIdeal shifted = translate(e, z);
    const std::int64_t w = colon(unit_ideal(e.semigroup_ptr()), shifted).min();
    return NormalizationCertificate{z, w, translate(shifted, w)};
}

std::ostream& operator<<(std::ostream& os, const RelativeIdeal& e) {
    return os << e.to_string();
}

}  // namespace sgideal
