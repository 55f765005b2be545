#pragma once

// Brute-force reference implementations. Every oracle here recomputes its
// answer from membership predicates and subset scans; none of them call
// the library operation they are used to check. Library values appear
// only as inputs (sampled windows) and as the other side of comparisons.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "sgideal/relative_ideal.hpp"
#include "sgideal/semigroup.hpp"

namespace oracle {

using std::int64_t;

// DP membership table on [0, bound) for the monoid generated by gens.
inline std::vector<bool> monoid_membership(const std::vector<int64_t>& gens, int64_t bound) {
    std::vector<bool> m(static_cast<std::size_t>(bound), false);
    m[0] = true;
    for (int64_t i = 0; i < bound; ++i) {
        if (!m[static_cast<std::size_t>(i)]) continue;
        for (int64_t g : gens)
            if (i + g < bound) m[static_cast<std::size_t>(i + g)] = true;
    }
    return m;
}

// An integer set that is empty below lo and full from hi on.
struct SetWindow {
    int64_t lo = 0;
    int64_t hi = 0;
    std::vector<bool> bits;  // [lo, hi)

    bool contains(int64_t z) const {
        if (z >= hi) return true;
        if (z < lo) return false;
        return bits[static_cast<std::size_t>(z - lo)];
    }

    static SetWindow sample(const sgideal::RelativeIdeal& e) {
        SetWindow w;
        w.lo = e.min();
        w.hi = e.stable_from();
        for (int64_t z = w.lo; z < w.hi; ++z) w.bits.push_back(e.contains(z));
        return w;
    }

    static SetWindow of_semigroup(const sgideal::NumericalSemigroup& s) {
        SetWindow w;
        w.lo = 0;
        w.hi = s.frobenius() + 1;
        if (w.hi < w.lo) w.hi = w.lo;
        for (int64_t z = w.lo; z < w.hi; ++z) w.bits.push_back(s.contains(z));
        return w;
    }
};

// {a + b}. Stable from a.hi + b.hi at the latest.
inline SetWindow sum_sets(const SetWindow& a, const SetWindow& b) {
    SetWindow r;
    r.lo = a.lo + b.lo;
    r.hi = std::max(r.lo, a.hi + b.hi);
    for (int64_t z = r.lo; z < r.hi; ++z) {
        bool in = false;
        for (int64_t e = a.lo; e <= z - b.lo && !in; ++e)
            in = a.contains(e) && b.contains(z - e);
        r.bits.push_back(in);
    }
    return r;
}

// { z : z + b contained in a }. Only finitely many constraints matter:
// once f >= a.hi - z every z + f lands in a's tail.
inline SetWindow colon_sets(const SetWindow& a, const SetWindow& b) {
    SetWindow r;
    r.lo = a.lo - b.lo;
    r.hi = std::max(r.lo, a.hi - b.lo);
    for (int64_t z = r.lo; z < r.hi; ++z) {
        bool in = true;
        const int64_t f_end = std::max(b.hi, a.hi - z);
        for (int64_t f = b.lo; f < f_end && in; ++f)
            if (b.contains(f)) in = a.contains(z + f);
        r.bits.push_back(in);
    }
    return r;
}

// (min + N) intersect S for a window known to sit inside S.
inline SetWindow closure_set(const SetWindow& e, const sgideal::NumericalSemigroup& s) {
    SetWindow r;
    int64_t lo = e.lo;
    while (lo < e.hi && !e.contains(lo)) ++lo;
    r.lo = lo;
    r.hi = std::max(lo, s.frobenius() + 1);
    for (int64_t z = r.lo; z < r.hi; ++z) r.bits.push_back(s.contains(z));
    return r;
}

inline bool subset_of(const SetWindow& a, const SetWindow& b) {
    const int64_t end = std::max(a.hi, b.hi) + 2;
    for (int64_t z = std::min(a.lo, b.lo) - 2; z < end; ++z)
        if (a.contains(z) && !b.contains(z)) return false;
    return true;
}

inline bool same_set(const SetWindow& w, const sgideal::RelativeIdeal& e) {
    const int64_t end = std::max(w.hi, e.stable_from()) + 2;
    for (int64_t z = std::min(w.lo, e.min()) - 2; z < end; ++z)
        if (w.contains(z) != e.contains(z)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Semigroup-level oracles, all straight off the membership predicate.

// All numerical semigroups of genus exactly g, as sorted gap lists. Gaps
// live in [1, 2g-1]; closure is tested over every member pair.
inline std::vector<std::vector<int64_t>> gap_sets_of_genus(int g) {
    std::vector<std::vector<int64_t>> out;
    const int w = g == 0 ? 0 : 2 * g - 1;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << w); ++mask) {
        if (__builtin_popcount(mask) != g) continue;
        std::vector<char> member(static_cast<std::size_t>(w) + 1, 1);
        for (int i = 1; i <= w; ++i)
            if (mask & (std::uint32_t{1} << (i - 1))) member[static_cast<std::size_t>(i)] = 0;
        bool closed = true;
        for (int a = 1; a <= w && closed; ++a) {
            if (!member[static_cast<std::size_t>(a)]) continue;
            for (int b = a; a + b <= w && closed; ++b)
                if (member[static_cast<std::size_t>(b)])
                    closed = member[static_cast<std::size_t>(a + b)];
        }
        if (!closed) continue;
        std::vector<int64_t> gaps;
        for (int i = 1; i <= w; ++i)
            if (!member[static_cast<std::size_t>(i)]) gaps.push_back(i);
        out.push_back(std::move(gaps));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Member lists (window part only) of every E with C <= E <= S, closed
// under adding arbitrary members of S, by scanning all subsets.
inline std::vector<std::vector<int64_t>> census_member_sets(const sgideal::NumericalSemigroup& s) {
    const int64_t f = s.frobenius();
    std::vector<int64_t> base = s.elements_up_to(f);
    const std::size_t k = base.size();
    std::vector<std::vector<int64_t>> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
        std::vector<int64_t> members;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::uint32_t{1} << i)) members.push_back(base[i]);
        auto in = [&](int64_t z) {
            return z > f || std::find(members.begin(), members.end(), z) != members.end();
        };
        bool closed = true;
        for (int64_t e : members)
            for (int64_t a = 1; a <= f && closed; ++a)
                if (s.contains(a) && e + a <= f) closed = in(e + a);
        if (closed) out.push_back(std::move(members));
    }
    return out;
}

// Member lists on [0, F] of every E with S <= E <= N and min 0, closed
// under adding members of S.
inline std::vector<std::vector<int64_t>> class_member_sets(const sgideal::NumericalSemigroup& s) {
    const int64_t f = s.frobenius();
    std::vector<int64_t> gaps = s.gaps();
    const std::size_t k = gaps.size();
    std::vector<std::vector<int64_t>> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
        std::vector<int64_t> members = s.elements_up_to(f);
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::uint32_t{1} << i)) members.push_back(gaps[i]);
        std::sort(members.begin(), members.end());
        auto in = [&](int64_t z) {
            return z > f || std::find(members.begin(), members.end(), z) != members.end();
        };
        bool closed = true;
        for (int64_t e : members)
            for (int64_t a = 1; a <= f && closed; ++a)
                if (s.contains(a) && e + a <= f) closed = in(e + a);
        if (closed) out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Gorenstein iff the gap set is symmetric about F.
inline bool is_symmetric(const sgideal::NumericalSemigroup& s) {
    const int64_t f = s.frobenius();
    for (int64_t z = 0; z <= f; ++z)
        if (s.contains(z) == s.contains(f - z)) return false;
    return true;
}

// Arf iff x + y - z stays in S for all members x >= y >= z of S. Values
// beyond F + 1 never violate the condition.
inline bool is_arf_brute(const sgideal::NumericalSemigroup& s) {
    const int64_t top = s.frobenius() + 1;
    for (int64_t x = 0; x <= top; ++x) {
        if (!s.contains(x)) continue;
        for (int64_t y = 0; y <= x; ++y) {
            if (!s.contains(y)) continue;
            for (int64_t z = 0; z <= y; ++z)
                if (s.contains(z) && !s.contains(x + y - z)) return false;
        }
    }
    return true;
}

// Almost Gorenstein iff K + m <= m, where z in K iff F - z is a gap.
inline bool is_ag_brute(const sgideal::NumericalSemigroup& s) {
    const int64_t f = s.frobenius();
    for (int64_t k = 0; k <= f; ++k) {
        if (s.contains(f - k)) continue;  // k not in K
        for (int64_t a = 1; k + a <= f; ++a)
            if (s.contains(a) && !s.contains(k + a)) return false;
    }
    return true;
}

// Minimal generators: positive members that are not sums of two positive
// members. Candidates beyond F + min(S \ {0}) cannot be minimal.
inline std::vector<int64_t> minimal_generators_brute(const sgideal::NumericalSemigroup& s) {
    int64_t mult = 1;
    while (!s.contains(mult)) ++mult;
    const int64_t top = std::max(s.frobenius() + mult, mult);
    std::vector<int64_t> out;
    for (int64_t c = 1; c <= top; ++c) {
        if (!s.contains(c)) continue;
        bool decomposable = false;
        for (int64_t a = 1; a <= c - 1 && !decomposable; ++a)
            decomposable = s.contains(a) && s.contains(c - a);
        if (!decomposable) out.push_back(c);
    }
    return out;
}

}  // namespace oracle
