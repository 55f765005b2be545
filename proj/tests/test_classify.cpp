#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "oracles.hpp"
#include "sgideal/census.hpp"
#include "sgideal/classify.hpp"
#include "sgideal/relative_ideal.hpp"

using namespace sgideal;

namespace {

RelativeIdeal::SemigroupPtr make(std::initializer_list<std::int64_t> gens) {
    return std::make_shared<const NumericalSemigroup>(NumericalSemigroup::from_generators(gens));
}

}  // namespace

TEST_CASE("classification of <3,7,8>") {
    auto s = make({3, 7, 8});
    auto r = classify(s);
    CHECK_FALSE(r.gorenstein);
    CHECK_FALSE(r.almost_gorenstein);
    CHECK(r.minimal_multiplicity);
    CHECK(r.arf);
    CHECK(r.embedding_dimension == 3);
    CHECK(r.multiplicity == 3);
    CHECK(r.frobenius == 5);
    CHECK(r.genus == 4);

    // Witnesses certify the failures: a gap z with F - z also a gap, and
    // an element of K whose m-translates escape m.
    REQUIRE(r.gorenstein_witness.has_value());
    const std::int64_t gw = *r.gorenstein_witness;
    CHECK_FALSE(s->contains(gw));
    CHECK_FALSE(s->contains(s->frobenius() - gw));

    REQUIRE(r.almost_gorenstein_witness.has_value());
    auto k = canonical_ideal(s);
    auto m = maximal_ideal(s);
    CHECK_FALSE(sum(k, m).is_subset_of(m));
    CHECK(k.contains(*r.almost_gorenstein_witness));

    CHECK_FALSE(r.minimal_multiplicity_witness.has_value());
    CHECK_FALSE(r.arf_witness.has_value());
}

TEST_CASE("classification of <4,5,7>") {
    auto s = make({4, 5, 7});
    auto r = classify(s);
    CHECK_FALSE(r.gorenstein);
    CHECK(r.almost_gorenstein);
    CHECK_FALSE(r.minimal_multiplicity);
    CHECK_FALSE(r.arf);
    REQUIRE(r.arf_witness.has_value());
    // The witness names a v whose closed ideal (v + N) cap S is not stable.
    CHECK_FALSE(is_stable(closed_ideal_at(s, *r.arf_witness)));
}

TEST_CASE("gorenstein examples") {
    CHECK(is_gorenstein(make({2, 3})));
    CHECK(is_gorenstein(make({3, 5})));
    CHECK(is_gorenstein(make({4, 6, 9})));  // symmetric, not a complete intersection of 2
    CHECK_FALSE(is_gorenstein(make({3, 4, 5})));
    auto n = std::make_shared<const NumericalSemigroup>(NumericalSemigroup::naturals());
    CHECK(is_gorenstein(n));
    CHECK(is_almost_gorenstein(n));
    CHECK(has_minimal_multiplicity(n));
    CHECK(is_arf(n));
}

TEST_CASE("flags agree with independent predicates across all small semigroups") {
    auto universe = semigroups_up_to_genus(7);
    for (const auto& s : universe.semigroups) {
        CAPTURE(s->to_string());
        auto r = classify(s);
        CHECK(r.gorenstein == oracle::is_symmetric(*s));
        CHECK(r.almost_gorenstein == oracle::is_ag_brute(*s));
        CHECK(r.arf == oracle::is_arf_brute(*s));
        CHECK(r.minimal_multiplicity ==
              (static_cast<std::int64_t>(oracle::minimal_generators_brute(*s).size()) ==
               s->multiplicity()));
    }
}

TEST_CASE("implications between the classes hold on the census") {
    auto universe = semigroups_up_to_genus(8);
    std::int64_t gorenstein = 0, ag = 0, arf = 0, minmult = 0;
    for (const auto& s : universe.semigroups) {
        CAPTURE(s->to_string());
        auto r = classify(s);
        if (r.gorenstein) CHECK(r.almost_gorenstein);
        if (r.arf) CHECK(r.minimal_multiplicity);
        CHECK(r.minimal_multiplicity == (r.embedding_dimension == r.multiplicity));
        gorenstein += r.gorenstein;
        ag += r.almost_gorenstein;
        arf += r.arf;
        minmult += r.minimal_multiplicity;
    }
    // None of the classes is empty or all of the universe.
    const auto total = static_cast<std::int64_t>(universe.semigroups.size());
    for (std::int64_t count : {gorenstein, ag, arf, minmult}) {
        CHECK(count > 0);
        CHECK(count < total);
    }
}

TEST_CASE("closed ideals drive the arf test") {
    auto s = make({3, 7, 8});
    auto c0 = closed_ideal_at(s, 0);
    CHECK(c0 == unit_ideal(s));
    auto c3 = closed_ideal_at(s, 3);
    CHECK(c3 == maximal_ideal(s));
    auto c7 = closed_ideal_at(s, 7);
    CHECK(c7.min() == 7);
    CHECK(is_integrally_closed(c7));
    for (std::int64_t v : {0, 3, 6, 7}) CHECK(is_stable(closed_ideal_at(s, v)));
    CHECK_THROWS_AS(closed_ideal_at(s, 1), std::invalid_argument);
    CHECK_THROWS_AS(closed_ideal_at(s, -3), std::invalid_argument);
}
