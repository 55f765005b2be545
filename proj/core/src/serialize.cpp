#include "sgideal/serialize.hpp"

#include <memory>
#include <stdexcept>

namespace sgideal {

namespace {

Json optional_to_json(const std::optional<std::int64_t>& v) {
    return v ? Json(*v) : Json(nullptr);
}

// json.hpp reports schema problems as nlohmann exceptions; the public
// contract promises std::invalid_argument instead.
template <class F>
auto reschema(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Json::exception& err) {
        throw std::invalid_argument(std::string("malformed document: ") + err.what());
    }
}

}  // namespace

Json to_json(const NumericalSemigroup& s) {
    return Json{{"generators", s.minimal_generators()},
                {"multiplicity", s.multiplicity()},
                {"embeddingDimension", s.embedding_dimension()},
                {"frobenius", s.frobenius()},
                {"genus", s.genus()}};
}

Json to_json(const RelativeIdeal& e) {
    return Json{{"min", e.min()},
                {"stableFrom", e.stable_from()},
                {"members", e.window_members()}};
}

Json to_json(const ClassificationReport& r) {
    return Json{{"gorenstein", r.gorenstein},
                {"almostGorenstein", r.almost_gorenstein},
                {"minimalMultiplicity", r.minimal_multiplicity},
                {"arf", r.arf},
                {"embeddingDimension", r.embedding_dimension},
                {"multiplicity", r.multiplicity},
                {"frobenius", r.frobenius},
                {"genus", r.genus},
                {"witnesses",
                 Json{{"gorenstein", optional_to_json(r.gorenstein_witness)},
                      {"almostGorenstein", optional_to_json(r.almost_gorenstein_witness)},
                      {"minimalMultiplicity",
                       optional_to_json(r.minimal_multiplicity_witness)},
                      {"arf", optional_to_json(r.arf_witness)}}}};
}

Json to_json(const IdealRecord& r) {
    return Json{{"ideal", to_json(r.ideal)},
                {"reflexive", r.reflexive},
                {"integrallyClosed", r.integrally_closed},
                {"stable", r.stable},
                {"principal", r.principal},
                {"bIdeal", r.b_ideal}};
}

Json to_json(const IdealCensus& census) {
    Json ideals = Json::array();
    for (const IdealRecord& r : census.ideals) ideals.push_back(to_json(r));
    return Json{{"semigroup", to_json(*census.semigroup)}, {"ideals", std::move(ideals)}};
}

Json to_json(const Counterexample& cx) {
    return Json{{"semigroup", cx.semigroup},
                {"ideals", cx.ideals},
                {"expected", cx.expected},
                {"actual", cx.actual}};
}

Json to_json(const VerificationReport& r) {
    return Json{{"theoremId", r.theorem_id},
                {"statement", r.statement},
                {"universe", r.universe},
                {"instancesChecked", r.instances_checked},
                {"passed", r.passed},
                {"counterexample",
                 r.counterexample ? to_json(*r.counterexample) : Json(nullptr)}};
}

Json to_json(const std::vector<VerificationReport>& reports) {
    Json out = Json::array();
    for (const VerificationReport& r : reports) out.push_back(to_json(r));
    return out;
}

NumericalSemigroup semigroup_from_json(const Json& j) {
    return reschema([&] {
        const auto gens = j.at("generators").get<std::vector<std::int64_t>>();
        return NumericalSemigroup::from_generators(gens);
    });
}

RelativeIdeal ideal_from_json(const Json& j, RelativeIdeal::SemigroupPtr semigroup) {
    return reschema([&] {
        const auto members = j.at("members").get<std::vector<std::int64_t>>();
        const auto tail = j.at("stableFrom").get<std::int64_t>();
        RelativeIdeal e = RelativeIdeal::from_members(std::move(semigroup), members, tail);
        if (e.min() != j.at("min").get<std::int64_t>())
            throw std::invalid_argument("ideal minimum does not match its member list");
        return e;
    });
}

IdealCensus census_from_json(const Json& j) {
    return reschema([&] {
        IdealCensus census;
        census.semigroup =
            std::make_shared<const NumericalSemigroup>(semigroup_from_json(j.at("semigroup")));
        for (const Json& rec : j.at("ideals")) {
            census.ideals.push_back(
                IdealRecord{ideal_from_json(rec.at("ideal"), census.semigroup),
                            rec.at("reflexive").get<bool>(),
                            rec.at("integrallyClosed").get<bool>(),
                            rec.at("stable").get<bool>(),
                            rec.at("principal").get<bool>(),
                            rec.at("bIdeal").get<bool>()});
        }
        return census;
    });
}

}  // namespace sgideal
