#pragma once

#include "cluco/errors.hpp"
#include "cluco/vertex_set.hpp"

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

namespace cluco {

/// Unordered pair of distinct vertex identities, stored with u < v.
struct Edge {
    VertexId u;
    VertexId v;

    Edge(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {
        assert(a != b);
    }

    bool operator==(const Edge&) const = default;
    bool operator<(const Edge& o) const {
        return u != o.u ? u < o.u : v < o.v;
    }
};

/// Records which identity survives each vertex of an original graph after
/// one or more contractions.  Total on the original vertex set; survivors
/// map to themselves.
class VertexMergeMap {
public:
    VertexMergeMap() = default;

    static VertexMergeMap identity_on(const VertexSet& domain) {
        VertexMergeMap m;
        m.domain_ = domain;
        m.img_.assign(domain.capacity(), -1);
        domain.for_each([&](VertexId v) { m.img_[v] = v; });
        return m;
    }

    const VertexSet& domain() const { return domain_; }

    VertexId operator()(VertexId v) const {
        if (v < 0 || v >= static_cast<int>(img_.size()) || img_[v] < 0)
            throw UnknownVertex("vertex " + std::to_string(v) +
                                " is outside the merge map's domain");
        return img_[v];
    }

    /// Redirect everything currently mapping to `loser` onto `survivor`.
    void record_merge(VertexId loser, VertexId survivor) {
        for (auto& x : img_)
            if (x == loser) x = survivor;
    }

    /// Identities still present after the recorded merges.
    VertexSet image() const {
        VertexSet s(domain_.capacity());
        for (VertexId x : img_)
            if (x >= 0) s.set(x);
        return s;
    }

private:
    VertexSet domain_;
    std::vector<VertexId> img_;
};

/// Immutable simple undirected graph over stable vertex identities.
/// Identities live in [0, capacity); contraction and induced subgraphs
/// shrink the vertex set without renumbering, so identities survive
/// multi-step transformations.
class Graph {
public:
    Graph() = default;

    /// Vertices 0..n-1, no edges.
    static Graph with_vertices(int n);

    static Graph from_edge_list(int num_vertices, std::span<const Edge> edges);
    static Graph from_edge_list(int num_vertices, std::initializer_list<Edge> edges);

    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);

    int capacity() const { return static_cast<int>(adj_.size()); }
    int num_vertices() const { return verts_.count(); }
    int num_edges() const { return edge_count_; }

    bool has_vertex(VertexId v) const {
        return v >= 0 && v < capacity() && verts_.test(v);
    }

    void require_vertex(VertexId v) const {
        if (!has_vertex(v))
            throw UnknownVertex("vertex " + std::to_string(v) + " is not in the graph");
    }

    bool has_edge(VertexId a, VertexId b) const {
        return has_vertex(a) && has_vertex(b) && a != b && adj_[a].test(b);
    }
    bool has_edge(Edge e) const { return has_edge(e.u, e.v); }

    const VertexSet& vertices() const { return verts_; }

    const VertexSet& neighbors(VertexId v) const {
        require_vertex(v);
        return adj_[v];
    }

    int degree(VertexId v) const {
        require_vertex(v);
        return adj_[v].count();
    }

    /// All edges, ascending by (u, v).
    std::vector<Edge> edge_list() const;

    /// Copy with one vertex (and its incident edges) removed.
    Graph remove_vertex(VertexId v) const;

    bool operator==(const Graph& o) const {
        return verts_ == o.verts_ && adj_ == o.adj_;
    }

private:
    friend Graph induced_subgraph(const Graph&, const VertexSet&);
    friend std::pair<Graph, VertexMergeMap> contract_edge(const Graph&, Edge);

    void add_edge_unchecked(VertexId a, VertexId b) {
        if (!adj_[a].test(b)) {
            adj_[a].set(b);
            adj_[b].set(a);
            ++edge_count_;
        }
    }

    VertexSet verts_;
    std::vector<VertexSet> adj_;
    int edge_count_ = 0;
};

/// Contract edge e; the lexicographically smaller endpoint identity
/// survives.  Parallel edges collapse, the loop disappears.
std::pair<Graph, VertexMergeMap> contract_edge(const Graph& g, Edge e);

/// Subgraph induced by x (which must be a subset of V(g)).
Graph induced_subgraph(const Graph& g, const VertexSet& x);

/// Maximal connected vertex sets, ordered by smallest contained identity.
std::vector<VertexSet> connected_components(const Graph& g);

/// Vertices reachable from v without entering `forbidden` (v itself must
/// not be forbidden).
VertexSet component_of(const Graph& g, VertexId v, const VertexSet& forbidden);

} // namespace cluco
