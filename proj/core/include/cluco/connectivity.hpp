#pragma once

#include "cluco/graph.hpp"

#include <optional>

namespace cluco {

/// Ordered cover pair (a, b) of a host graph's vertex set with no edge
/// between the fragments a-b and b-a.  The separator is a∩b.
struct Separation {
    VertexSet a;
    VertexSet b;

    VertexSet separator() const { return a & b; }
    VertexSet fragment_a() const { return a - b; }
    VertexSet fragment_b() const { return b - a; }
    int order() const { return separator().count(); }
};

/// Classification of a separation against a vertex set Z: bad when one
/// fragment lies entirely inside Z, good otherwise.
struct GoodnessVerdict {
    Separation separation;
    VertexSet good_for;
    bool good;
};

/// Throws InvalidSeparation unless sep satisfies the separation axioms
/// for g: a ∪ b = V(g), both fragments nonempty, no fragment-to-fragment
/// edge.
void require_valid_separation(const Graph& g, const Separation& sep);

GoodnessVerdict classify_separation(const Graph& g, const Separation& sep,
                                    const VertexSet& z);

/// Minimum-cardinality S ⊆ V-{x,y} disconnecting the nonadjacent pair
/// x, y.  Deterministic under the fixed ascending augmenting order.
VertexSet min_vertex_cut(const Graph& g, VertexId x, VertexId y);

/// True iff at least k internally disjoint x-y paths exist (x, y
/// nonadjacent).  Stops augmenting as soon as k paths are found.
bool pair_connectivity_at_least(const Graph& g, VertexId x, VertexId y, int k);

/// |V| ≥ k+1 and every nonadjacent pair has min cut ≥ k; complete graphs
/// on n vertices are (n-1)-connected.
bool is_k_connected(const Graph& g, int k);

/// First Z-good separation of order ≤ t in the fixed scan order, if any:
/// pairs x < y over V-Z are scanned lexicographically; a hit (x, y) with
/// min cut S of size ≤ t yields a = comp(x in g-S) ∪ S, b = V - comp(x).
std::optional<Separation> find_good_separation(const Graph& g, const VertexSet& z,
                                               int t);

} // namespace cluco
