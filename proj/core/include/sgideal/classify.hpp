#pragma once

#include <cstdint>
#include <optional>

#include "sgideal/relative_ideal.hpp"
#include "sgideal/semigroup.hpp"

namespace sgideal {

/// Ring-class flags of K[[t^S]] with a concrete witness for every negative
/// answer. Invariants: arf implies minimal_multiplicity; gorenstein implies
/// almost_gorenstein; minimal_multiplicity holds iff the embedding dimension
/// equals the multiplicity.
struct ClassificationReport {
    bool gorenstein = false;
    bool almost_gorenstein = false;
    bool minimal_multiplicity = false;
    bool arf = false;
    std::int64_t embedding_dimension = 0;
    std::int64_t multiplicity = 0;
    std::int64_t frobenius = 0;
    std::int64_t genus = 0;
    /// Member of K(S) outside S when not Gorenstein.
    std::optional<std::int64_t> gorenstein_witness;
    /// Member of K + m outside m when not almost Gorenstein.
    std::optional<std::int64_t> almost_gorenstein_witness;
    /// Member of m outside min(m) + (m - m) when m is not stable.
    std::optional<std::int64_t> minimal_multiplicity_witness;
    /// v in S with (v + N) intersect S not stable when not Arf.
    std::optional<std::int64_t> arf_witness;
};

/// K(S) = S, i.e. the canonical module is free.
bool is_gorenstein(const RelativeIdeal::SemigroupPtr& s);

/// K + m contained in m for the normalized canonical ideal.
bool is_almost_gorenstein(const RelativeIdeal::SemigroupPtr& s);

/// The maximal ideal is stable; equivalent to embedding dimension =
/// multiplicity.
bool has_minimal_multiplicity(const RelativeIdeal::SemigroupPtr& s);

/// Every integrally closed ideal (v + N) intersect S, v in S, is stable.
/// Only v in [0, F+1] matter; beyond that the ideals are translated tails.
bool is_arf(const RelativeIdeal::SemigroupPtr& s);

ClassificationReport classify(const RelativeIdeal::SemigroupPtr& s);

/// The integrally closed integral ideal with minimum v: (v + N) intersect S.
/// Requires v in S.
RelativeIdeal closed_ideal_at(RelativeIdeal::SemigroupPtr s, std::int64_t v);

}  // namespace sgideal
