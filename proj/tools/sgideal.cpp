// Command-line front end: analyze one semigroup ring, run exact ideal
// arithmetic, dump ideal censuses, or sweep the verification suite.
// Exit codes: 0 success, 1 verification counterexample, 2 malformed input
// or resource limit.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sgideal/census.hpp"
#include "sgideal/classify.hpp"
#include "sgideal/relative_ideal.hpp"
#include "sgideal/semigroup.hpp"
#include "sgideal/serialize.hpp"
#include "sgideal/verify.hpp"

namespace {

using sgideal::IdealCensus;
using sgideal::IdealRecord;
using sgideal::Json;
using sgideal::NumericalSemigroup;
using sgideal::RelativeIdeal;
using sgideal::VerificationReport;

using SemigroupPtr = RelativeIdeal::SemigroupPtr;

SemigroupPtr parse_semigroup(const std::string& text) {
    return std::make_shared<const NumericalSemigroup>(
        NumericalSemigroup::from_generators(sgideal::parse_generator_list(text)));
}

RelativeIdeal parse_ideal(const SemigroupPtr& s, const std::string& text) {
    const std::vector<std::int64_t> gens = sgideal::parse_generator_list(text);
    return RelativeIdeal::from_generators(s, gens);
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string flag_list(const IdealRecord& r) {
    std::string out;
    auto add = [&](bool on, const char* name) {
        if (!on) return;
        if (!out.empty()) out += ' ';
        out += name;
    };
    add(r.reflexive, "reflexive");
    add(r.integrally_closed, "integrally-closed");
    add(r.stable, "stable");
    add(r.principal, "principal");
    add(r.b_ideal, "b-ideal");
    return out;
}

// ---------------------------------------------------------------------------
// analyze

int run_analyze(const std::string& sg_text, const std::string& format) {
    SemigroupPtr s = parse_semigroup(sg_text);
    const sgideal::ClassificationReport cls = sgideal::classify(s);
    const RelativeIdeal k = sgideal::canonical_ideal(s);
    const RelativeIdeal c = sgideal::conductor_ideal(s);
    const RelativeIdeal b = sgideal::blowup_ideal(s);
    const NumericalSemigroup bs = sgideal::blowup_semigroup(*s);

    if (format == "json") {
        Json out{{"semigroup", sgideal::to_json(*s)},
                 {"gorenstein", cls.gorenstein},
                 {"almostGorenstein", cls.almost_gorenstein},
                 {"minimalMultiplicity", cls.minimal_multiplicity},
                 {"arf", cls.arf},
                 {"witnesses", sgideal::to_json(cls)["witnesses"]},
                 {"K", sgideal::to_json(k)},
                 {"C", sgideal::to_json(c)},
                 {"BIdeal", sgideal::to_json(b)},
                 {"B", bs.to_string()}};
        std::cout << out.dump(2) << '\n';
        return 0;
    }

    auto flag_line = [](const char* name, bool value, const std::optional<std::int64_t>& w) {
        std::cout << name << ": " << yes_no(value);
        if (w) std::cout << " (witness " << *w << ")";
        std::cout << '\n';
    };
    std::cout << "semigroup: " << s->to_string() << '\n'
              << "multiplicity: " << s->multiplicity() << '\n'
              << "embedding dimension: " << s->embedding_dimension() << '\n'
              << "frobenius: " << s->frobenius() << '\n'
              << "genus: " << s->genus() << '\n';
    flag_line("gorenstein", cls.gorenstein, cls.gorenstein_witness);
    flag_line("almost gorenstein", cls.almost_gorenstein, cls.almost_gorenstein_witness);
    flag_line("minimal multiplicity", cls.minimal_multiplicity,
              cls.minimal_multiplicity_witness);
    flag_line("arf", cls.arf, cls.arf_witness);
    std::cout << "K = " << k << '\n'
              << "C = " << c << '\n'
              << "B ideal = " << b << '\n'
              << "B = " << bs.to_string() << '\n';
    return 0;
}

// ---------------------------------------------------------------------------
// ideal

const std::vector<std::string>& op_names() {
    static const std::vector<std::string> names = {
        "sum",       "colon",          "dual",
        "reflexive-closure",           "h-closure",
        "integral-closure",            "end-ring",
        "blowup",    "is-reflexive",   "is-h-reflexive",
        "is-integrally-closed",        "is-stable",
        "is-principal",                "is-ideal-over",
        "normalize-canonical",         "normalize-reflexive",
    };
    return names;
}

void print_ideal(const RelativeIdeal& e, const std::string& format) {
    if (format == "json")
        std::cout << sgideal::to_json(e).dump(2) << '\n';
    else
        std::cout << e << '\n';
}

void print_bool(bool value, const std::string& format) {
    if (format == "json")
        std::cout << Json{{"result", value}}.dump(2) << '\n';
    else
        std::cout << yes_no(value) << '\n';
}

void print_certificate(const sgideal::NormalizationCertificate& cert,
                       const std::string& format) {
    if (format == "json") {
        std::cout << Json{{"z", cert.z}, {"w", cert.w}, {"result", sgideal::to_json(cert.result)}}
                         .dump(2)
                  << '\n';
    } else {
        std::cout << "z: " << cert.z << '\n'
                  << "w: " << cert.w << '\n'
                  << "result: " << cert.result << '\n';
    }
}

int run_ideal(const std::string& sg_text, const std::vector<std::string>& ideal_texts,
              const std::string& op, const std::string& format) {
    if (std::find(op_names().begin(), op_names().end(), op) == op_names().end()) {
        std::cerr << "error: unknown operation \"" << op << "\"; valid names:";
        for (const std::string& n : op_names()) std::cerr << ' ' << n;
        std::cerr << '\n';
        return 2;
    }

    SemigroupPtr s = parse_semigroup(sg_text);
    const bool binary = op == "sum" || op == "colon" || op == "h-closure" ||
                        op == "is-h-reflexive" || op == "is-ideal-over";
    const std::size_t needed = op == "blowup" ? 0 : binary ? 2 : 1;
    if (ideal_texts.size() < needed) {
        std::cerr << "error: operation " << op << " needs " << needed
                  << " --ideal argument(s), got " << ideal_texts.size() << '\n';
        return 2;
    }

    std::vector<RelativeIdeal> ideals;
    for (std::size_t i = 0; i < needed; ++i) ideals.push_back(parse_ideal(s, ideal_texts[i]));
    // Binary ops: the first --ideal is the primary operand, the second the
    // auxiliary (divisor of a colon, relative ring H of a closure).
    if (op == "sum") {
        print_ideal(sgideal::sum(ideals[0], ideals[1]), format);
    } else if (op == "colon") {
        print_ideal(sgideal::colon(ideals[0], ideals[1]), format);
    } else if (op == "dual") {
        print_ideal(sgideal::dual(ideals[0]), format);
    } else if (op == "reflexive-closure") {
        print_ideal(sgideal::reflexive_closure(ideals[0]), format);
    } else if (op == "h-closure") {
        print_ideal(sgideal::h_closure(ideals[1], ideals[0]), format);
    } else if (op == "integral-closure") {
        print_ideal(sgideal::integral_closure(ideals[0]), format);
    } else if (op == "end-ring") {
        print_ideal(sgideal::end_ring(ideals[0]), format);
    } else if (op == "blowup") {
        print_ideal(sgideal::blowup_ideal(s), format);
    } else if (op == "is-reflexive") {
        print_bool(sgideal::is_reflexive(ideals[0]), format);
    } else if (op == "is-h-reflexive") {
        print_bool(sgideal::is_h_reflexive(ideals[1], ideals[0]), format);
    } else if (op == "is-integrally-closed") {
        print_bool(sgideal::is_integrally_closed(ideals[0]), format);
    } else if (op == "is-stable") {
        print_bool(sgideal::is_stable(ideals[0]), format);
    } else if (op == "is-principal") {
        print_bool(sgideal::is_principal(ideals[0]), format);
    } else if (op == "is-ideal-over") {
        print_bool(sgideal::is_ideal_over(ideals[1], ideals[0]), format);
    } else if (op == "normalize-canonical") {
        print_certificate(sgideal::normalize_to_canonical_window(ideals[0]), format);
    } else {  // normalize-reflexive
        print_certificate(sgideal::normalize_reflexive(ideals[0]), format);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// census

Json census_summary(const IdealCensus& census) {
    std::int64_t reflexive = 0, closed = 0, stable = 0, principal = 0, b_ideal = 0;
    for (const IdealRecord& r : census.ideals) {
        reflexive += r.reflexive;
        closed += r.integrally_closed;
        stable += r.stable;
        principal += r.principal;
        b_ideal += r.b_ideal;
    }
    return Json{{"semigroup", sgideal::to_json(*census.semigroup)},
                {"censusSize", static_cast<std::int64_t>(census.ideals.size())},
                {"counts",
                 Json{{"reflexive", reflexive},
                      {"integrallyClosed", closed},
                      {"stable", stable},
                      {"principal", principal},
                      {"bIdeal", b_ideal}}}};
}

int run_census(const std::string& sg_text, std::int64_t genus_max, const std::string& format) {
    if (sg_text.empty() == (genus_max < 0)) {
        std::cerr << "error: census needs either a semigroup argument or --genus-max\n";
        return 2;
    }

    if (!sg_text.empty()) {
        SemigroupPtr s = parse_semigroup(sg_text);
        IdealCensus census = sgideal::ideals_between(s);
        if (format == "json") {
            std::cout << sgideal::to_json(census).dump(2) << '\n';
        } else {
            std::cout << "semigroup: " << s->to_string() << '\n'
                      << "ideals: " << census.ideals.size() << '\n';
            for (const IdealRecord& r : census.ideals)
                std::cout << r.ideal << "  [" << flag_list(r) << "]\n";
        }
        return 0;
    }

    // Streaming sweep: one record per semigroup in enumeration order.
    sgideal::SemigroupUniverse u = sgideal::semigroups_up_to_genus(genus_max);
    for (const SemigroupPtr& s : u.semigroups) {
        IdealCensus census = sgideal::ideals_between(s);
        if (format == "json") {
            std::cout << census_summary(census).dump() << '\n';
        } else {
            Json j = census_summary(census);
            std::cout << s->to_string() << "  genus=" << s->genus()
                      << " frobenius=" << s->frobenius() << " ideals=" << census.ideals.size()
                      << " reflexive=" << j["counts"]["reflexive"].get<std::int64_t>()
                      << " integrally-closed="
                      << j["counts"]["integrallyClosed"].get<std::int64_t>()
                      << " stable=" << j["counts"]["stable"].get<std::int64_t>()
                      << " principal=" << j["counts"]["principal"].get<std::int64_t>()
                      << " b-ideal=" << j["counts"]["bIdeal"].get<std::int64_t>() << '\n';
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify

int run_verify(std::int64_t genus_max, const std::string& theorem, int translates,
               std::uint64_t seed, const std::string& format) {
    sgideal::CheckOptions options;
    options.genus_max = genus_max;
    options.translates = translates;
    options.seed = seed;

    std::vector<VerificationReport> reports;
    if (theorem.empty()) {
        reports = sgideal::run_all_checks(options);
    } else {
        reports.push_back(sgideal::run_check(theorem, options));
    }

    bool all_passed = true;
    for (const VerificationReport& r : reports) all_passed = all_passed && r.passed;

    if (format == "json") {
        std::cout << sgideal::to_json(reports).dump(2) << '\n';
    } else {
        int passed = 0;
        for (const VerificationReport& r : reports) {
            std::cout << r.theorem_id << ' ' << (r.passed ? "PASS" : "FAIL")
                      << " instances=" << r.instances_checked << "  " << r.statement << '\n';
            if (r.counterexample) {
                const sgideal::Counterexample& cx = *r.counterexample;
                std::cout << "  semigroup: " << cx.semigroup << '\n';
                for (const std::string& ideal : cx.ideals) std::cout << "  " << ideal << '\n';
                std::cout << "  expected: " << cx.expected << '\n'
                          << "  actual: " << cx.actual << '\n';
            }
            passed += r.passed ? 1 : 0;
        }
        std::cout << passed << '/' << reports.size() << " checks passed\n";
    }
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact fractional-ideal arithmetic and theorem verification for "
                 "numerical semigroup rings K[[t^S]]"};
    app.require_subcommand(1);

    std::string format = "text";
    const auto format_check = CLI::IsMember({"text", "json"});

    auto* analyze = app.add_subcommand("analyze", "Classify one semigroup ring");
    std::string analyze_sg;
    analyze->add_option("semigroup", analyze_sg, "generator list, e.g. \"3,7,8\"")->required();
    analyze->add_option("--format", format, "output format")->check(format_check);

    auto* ideal = app.add_subcommand("ideal", "Apply one ideal operation");
    std::string ideal_sg;
    std::vector<std::string> ideal_texts;
    std::string op;
    ideal->add_option("semigroup", ideal_sg, "ambient semigroup generators")->required();
    ideal->add_option("--ideal", ideal_texts,
                      "ideal generator list; repeat for binary operations "
                      "(first = primary, second = auxiliary)");
    ideal->add_option("--op", op, "operation name")->required();
    ideal->add_option("--format", format, "output format")->check(format_check);

    auto* census = app.add_subcommand("census", "List ideals between C and S");
    std::string census_sg;
    std::int64_t census_genus = -1;
    census->add_option("semigroup", census_sg, "semigroup generators (single census)");
    census->add_option("--genus-max", census_genus,
                       "stream per-semigroup summaries up to this genus instead");
    census->add_option("--format", format, "output format")->check(format_check);

    auto* verify = app.add_subcommand("verify", "Run the theorem checks");
    std::int64_t verify_genus = 12;
    std::string theorem;
    int translates = 3;
    std::uint64_t seed = 20260823;
    verify->add_option("--genus-max", verify_genus, "exhaustive universe bound");
    verify->add_option("--theorem", theorem, "run a single check, e.g. T5");
    verify->add_option("--translates", translates, "seeded translates per ideal");
    verify->add_option("--seed", seed, "translate sampling seed");
    verify->add_option("--format", format, "output format")->check(format_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(analyze)) return run_analyze(analyze_sg, format);
        if (app.got_subcommand(ideal)) return run_ideal(ideal_sg, ideal_texts, op, format);
        if (app.got_subcommand(census)) return run_census(census_sg, census_genus, format);
        return run_verify(verify_genus, theorem, translates, seed, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
