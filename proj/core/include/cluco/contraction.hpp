#pragma once

#include "cluco/connectivity.hpp"

#include <vector>

namespace cluco {

/// Ordered edge set, each edge incident to the (merged image of the)
/// designated vertex set z at the time of its contraction, whose
/// contraction — followed by deletion of the z-remnant that ends up with
/// no outside neighbours — yields a k-connected graph.  The deletion set
/// is reported separately from the contracted edges.
struct ContractionPlan {
    Graph host;
    VertexSet z;
    int k = 0;
    std::vector<Edge> edges;  // identities as of each contraction step
    VertexSet deletions;      // z-vertices removed in the terminal step
    VertexMergeMap merge;     // host vertices -> post-contraction identities
    Graph result;             // verified k-connected
};

/// All w in N(v)-z for which every (k-1)-separation of g/vw is
/// (z-{v})-bad, ascending.  No hypothesis checking; the hypothesis-free
/// view of the search that find_contractible_edge performs.
std::vector<VertexId> contractible_neighbors(const Graph& g, const VertexSet& z,
                                             VertexId v, int k);

/// Smallest w in N(v)-z such that every (k-1)-separation of g/vw is
/// (z-{v})-bad.  Hypotheses (checked eagerly, reported with a witness):
/// v ∈ z, N(v)-z nonempty, every (k-1)-separation of g is z-bad, and
/// every vertex of N(v)-z satisfies 2·deg ≥ 3k + 2|z| - 4.
Edge find_contractible_edge(const Graph& g, const VertexSet& z, VertexId v, int k);

/// Contract at most |z| edges (plus the terminal deletion) to reach a
/// k-connected graph.  Hypotheses: every (k-1)-separation of g is z-bad,
/// and every vertex of ∪{N(v)-z : v ∈ z} satisfies 2·deg ≥ 3k + 2|z| - 4.
/// The returned plan's result is verified k-connected.
ContractionPlan contract_to_k_connected(const Graph& g, const VertexSet& z, int k);

/// The single-vertex specialisation: g k-connected, every neighbour of v
/// with 2·deg ≥ 3k - 2 ⇒ some edge vw keeps g/vw k-connected.
Edge mader_edge(const Graph& g, VertexId v, int k);

} // namespace cluco
