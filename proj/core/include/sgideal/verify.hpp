#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgideal/census.hpp"

namespace sgideal {

/// Knobs for a verification run. Identical options must produce
/// byte-identical reports, including across thread counts.
struct CheckOptions {
    std::int64_t genus_max = 12;
    /// Seeded random translates applied per ideal where a statement
    /// quantifies over fractional ideals.
    int translates = 3;
    std::uint64_t seed = 20260823;
    /// Worker threads for the semigroup sweep; 0 picks the hardware count.
    unsigned threads = 1;
};

struct TheoremInfo {
    std::string id;
    std::string statement;
};

/// The sixteen checked statements, T1 through T16, in report order.
const std::vector<TheoremInfo>& theorem_catalog();

struct Counterexample {
    std::string semigroup;              // minimal generator list
    std::vector<std::string> ideals;    // ideals involved, rendered
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    std::string theorem_id;
    std::string statement;
    std::string universe;
    std::int64_t instances_checked = 0;
    bool passed = true;
    std::optional<Counterexample> counterexample;
};

/// Check groups. Each sweeps the universe plus a fixed list of pinned
/// boundary instances and returns one report per covered theorem id.
/// T1: Gorenstein iff every fractional ideal is reflexive (checked on one
/// representative per translation class).
std::vector<VerificationReport> check_bass(const SemigroupUniverse& u,
                                           const CheckOptions& options = {});
/// T2: min(K - E) shifts any E into [C, K]. T3: reflexive ideals further
/// shift into [C, S] with w = 0.
std::vector<VerificationReport> check_window_normalization(const SemigroupUniverse& u,
                                                           const CheckOptions& options = {});
/// T4: K-K = S, K-N = C, K-C = N, S-C = N.
std::vector<VerificationReport> check_colon_equalities(const SemigroupUniverse& u,
                                                       const CheckOptions& options = {});
/// T5: divisorial closure sits under integral closure. T6: R:I = J:I for
/// integrally closed J containing I. T7: the two extra consequences for
/// non-principal reflexive I.
std::vector<VerificationReport> check_sandwich_and_absorption(const SemigroupUniverse& u,
                                                              const CheckOptions& options = {});
/// T8: almost Gorenstein iff (non-principal E reflexive iff K in E-E).
/// T9: K in E-E always forces reflexivity.
std::vector<VerificationReport> check_ag_endomorphism(const SemigroupUniverse& u,
                                                      const CheckOptions& options = {});
/// T10: R:(R:I) = J:(J:I) for integrally closed J containing I.
std::vector<VerificationReport> check_h_reflexivity(const SemigroupUniverse& u,
                                                    const CheckOptions& options = {});
/// T11: almost Gorenstein iff (non-principal E reflexive iff E is a
/// B-ideal).
std::vector<VerificationReport> check_ag_blowup(const SemigroupUniverse& u,
                                                const CheckOptions& options = {});
/// T12: minimal multiplicity iff m B-reflexive iff (non-principal E
/// reflexive iff E is a B-reflexive B-ideal). T13: m(m:m^2) is a B-ideal,
/// equal to B exactly when m is stable.
std::vector<VerificationReport> check_minmult(const SemigroupUniverse& u,
                                              const CheckOptions& options = {});
/// T14: Arf iff reflexive census ideals are integrally closed iff every
/// reflexive class normalizes to an integrally closed ideal in [C, S].
/// T15: distinct ideals in [C, S] are never translates of each other.
std::vector<VerificationReport> check_arf(const SemigroupUniverse& u,
                                          const CheckOptions& options = {});
/// T16: transitivity of H-reflexivity; E-E reflexive for integrally closed
/// E; non-principal reflexive E absorbs the blow-up into E-E.
std::vector<VerificationReport> check_misc_remarks(const SemigroupUniverse& u,
                                                   const CheckOptions& options = {});

/// Runs the one check with the given id over a fresh universe of genus up
/// to options.genus_max. Throws std::invalid_argument on an unknown id.
VerificationReport run_check(const std::string& theorem_id, const CheckOptions& options = {});

/// All sixteen checks in catalog order over a shared universe.
std::vector<VerificationReport> run_all_checks(const CheckOptions& options = {});

}  // namespace sgideal
