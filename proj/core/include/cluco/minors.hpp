#pragma once

#include "cluco/partition.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cluco {

/// Branch-set certificate for a complete-graph minor: pairwise-disjoint
/// connected vertex sets of the host with an edge between every pair.
struct MinorEmbedding {
    std::vector<VertexSet> branch_sets;
};

enum class MinorStatus {
    found,
    refuted,          // exhaustively ruled out
    budget_exceeded,  // search stopped early; says nothing either way
};

struct MinorSearchResult {
    MinorStatus status = MinorStatus::refuted;
    std::optional<MinorEmbedding> embedding;
    std::uint64_t nodes = 0;  // search nodes spent
};

inline constexpr std::uint64_t kDefaultMinorBudget = 20'000'000;

/// Exhaustive K_t-minor search.  Degree-2 chains are suppressed first
/// (sound for t ≥ 4); the remaining search assigns vertices in
/// degree-descending order with connectivity and pairwise-adjacency
/// pruning.  The budget is a search-node count, so outcomes are
/// machine-independent.
MinorSearchResult find_clique_minor(const Graph& g, int t,
                                    std::uint64_t budget = kDefaultMinorBudget);

struct EmbeddingVerdict {
    bool ok = true;
    std::string detail;

    explicit operator bool() const { return ok; }
};

/// Checks disjointness, per-set connectivity and pairwise adjacency;
/// failure names the offending set or pair.
EmbeddingVerdict verify_embedding(const Graph& g, const MinorEmbedding& emb, int t);

/// Re-examination of a Case IV witness: is the minor really
/// (t+1)-connected of the promised order, and does it contain a
/// K_t-minor at this scale?
struct WitnessAudit {
    bool connectivity_ok = false;
    bool order_ok = false;
    MinorSearchResult minor_search;
    EmbeddingVerdict embedding_check;

    bool verified_connectivity() const { return connectivity_ok && order_ok; }
};

WitnessAudit audit_witness(const CaseIVWitness& witness, int t,
                           std::uint64_t budget = kDefaultMinorBudget);

} // namespace cluco
