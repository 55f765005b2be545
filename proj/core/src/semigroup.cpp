#include "sgideal/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sgideal {

namespace {

constexpr std::int64_t kGeneratorLimit = 10000;

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const std::int64_t> gens) {
    if (gens.empty()) throw std::invalid_argument("generator list is empty");
    std::int64_t g = 0;
    std::int64_t max_gen = 0;
    std::int64_t min_gen = kGeneratorLimit + 1;
    for (std::int64_t a : gens) {
        if (a < 1) throw std::invalid_argument("generators must be positive");
        if (a > kGeneratorLimit)
            throw std::invalid_argument("generator exceeds the desk-scale limit of 10000");
        g = std::gcd(g, a);
        max_gen = std::max(max_gen, a);
        min_gen = std::min(min_gen, a);
    }
    if (g != 1) {
        std::ostringstream msg;
        msg << "not cofinite: generators have gcd " << g;
        throw std::invalid_argument(msg.str());
    }

    // Forward DP over [0, B). B = max^2 + min + 1 exceeds the Frobenius
    // number of any gcd-1 generating set (Schur bound (min-1)(max-1) - 1)
    // with room to observe the stabilized tail.
    const std::int64_t bound = max_gen * max_gen + min_gen + 1;
    std::vector<bool> table(static_cast<std::size_t>(bound), false);
    table[0] = true;
    for (std::int64_t z = 1; z < bound; ++z) {
        for (std::int64_t a : gens) {
            if (a <= z && table[static_cast<std::size_t>(z - a)]) {
                table[static_cast<std::size_t>(z)] = true;
                break;
            }
        }
    }

    std::int64_t frob = -1;
    for (std::int64_t z = bound - 1; z >= 0; --z) {
        if (!table[static_cast<std::size_t>(z)]) {
            frob = z;
            break;
        }
    }
    // Stabilization: a run of min_gen consecutive members closes the tail.
    for (std::int64_t z = frob + 1; z < frob + 1 + min_gen && z < bound; ++z) {
        if (!table[static_cast<std::size_t>(z)])
            throw std::logic_error("membership table failed to stabilize past the last gap");
    }

    table.resize(static_cast<std::size_t>(frob + 2));
    return from_window(std::move(table));
}

NumericalSemigroup NumericalSemigroup::from_generators(std::initializer_list<std::int64_t> gens) {
    return from_generators(std::span<const std::int64_t>(gens.begin(), gens.size()));
}

NumericalSemigroup NumericalSemigroup::from_membership(const std::vector<bool>& membership) {
    const std::int64_t n = static_cast<std::int64_t>(membership.size());
    if (n > 0 && !membership[0]) throw std::invalid_argument("0 must be a member");
    auto member = [&](std::int64_t z) { return z >= n || membership[static_cast<std::size_t>(z)]; };
    for (std::int64_t a = 1; a < n; ++a) {
        if (!member(a)) continue;
        for (std::int64_t b = a; a + b < n; ++b) {
            if (member(b) && !member(a + b))
                throw std::invalid_argument("membership set is not closed under addition");
        }
    }
    std::int64_t frob = -1;
    for (std::int64_t z = n - 1; z >= 0; --z) {
        if (!member(z)) {
            frob = z;
            break;
        }
    }
    std::vector<bool> window(static_cast<std::size_t>(frob + 2), true);
    for (std::int64_t z = 0; z <= frob + 1; ++z) window[static_cast<std::size_t>(z)] = member(z);
    return from_window(std::move(window));
}

NumericalSemigroup NumericalSemigroup::naturals() {
    return from_membership({true});
}

// `window` covers [0, F+2) with window[F] the last false entry (or is {true}
// for the full monoid). Derives every invariant from the table.
NumericalSemigroup NumericalSemigroup::from_window(std::vector<bool> window) {
    NumericalSemigroup s;
    s.membership_ = std::move(window);
    const std::int64_t size = static_cast<std::int64_t>(s.membership_.size());
    s.frobenius_ = size - 2;

    s.genus_ = 0;
    for (std::int64_t z = 1; z <= s.frobenius_; ++z)
        if (!s.membership_[static_cast<std::size_t>(z)]) ++s.genus_;

    s.multiplicity_ = 1;
    while (!s.contains(s.multiplicity_)) ++s.multiplicity_;

    // s is a minimal generator iff s in S, s != 0, and s is not the sum of
    // two positive members. Minimal generators never exceed F + multiplicity
    // (and never the multiplicity itself, which covers the full monoid).
    s.minimal_generators_.clear();
    const std::int64_t gen_bound = std::max(s.frobenius_ + s.multiplicity_, s.multiplicity_);
    for (std::int64_t cand = s.multiplicity_; cand <= gen_bound; ++cand) {
        if (!s.contains(cand)) continue;
        bool decomposable = false;
        for (std::int64_t a = s.multiplicity_; a + s.multiplicity_ <= cand; ++a) {
            if (s.contains(a) && s.contains(cand - a)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) s.minimal_generators_.push_back(cand);
    }
    return s;
}

std::vector<std::int64_t> NumericalSemigroup::gaps() const {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(genus_));
    for (std::int64_t z = 1; z <= frobenius_; ++z)
        if (!contains(z)) out.push_back(z);
    return out;
}

std::vector<std::int64_t> NumericalSemigroup::elements_up_to(std::int64_t bound) const {
    std::vector<std::int64_t> out;
    for (std::int64_t z = 0; z <= bound; ++z)
        if (contains(z)) out.push_back(z);
    return out;
}

std::string NumericalSemigroup::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < minimal_generators_.size(); ++i) {
        if (i) os << ',';
        os << minimal_generators_[i];
    }
    return os.str();
}

std::vector<std::int64_t> parse_generator_list(std::string_view text) {
    std::string cleaned;
    cleaned.reserve(text.size());
    for (std::size_t i = 0; i < text.size();) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c == '<' || c == '>') {
            ++i;
            continue;
        }
        // U+27E8 / U+27E9 angle brackets as three-byte UTF-8 sequences.
        if (c == 0xE2 && i + 2 < text.size() &&
            static_cast<unsigned char>(text[i + 1]) == 0x9F &&
            (static_cast<unsigned char>(text[i + 2]) == 0xA8 ||
             static_cast<unsigned char>(text[i + 2]) == 0xA9)) {
            i += 3;
            continue;
        }
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        cleaned.push_back(static_cast<char>(c));
        ++i;
    }
    if (cleaned.empty()) throw std::invalid_argument("generator list is empty");

    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos <= cleaned.size()) {
        std::size_t comma = cleaned.find(',', pos);
        std::string token = cleaned.substr(pos, comma == std::string::npos ? std::string::npos
                                                                           : comma - pos);
        if (token.empty()) throw std::invalid_argument("malformed generator list: empty entry");
        std::size_t used = 0;
        std::int64_t value = 0;
        try {
            value = std::stoll(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed generator list: '" + token + "'");
        }
        if (used != token.size())
            throw std::invalid_argument("malformed generator list: '" + token + "'");
        out.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const NumericalSemigroup& s) {
    return os << s.to_string();
}

}  // namespace sgideal
