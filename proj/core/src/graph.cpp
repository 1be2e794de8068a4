#include "cluco/graph.hpp"

namespace cluco {

Graph Graph::with_vertices(int n) {
    assert(n >= 0);
    Graph g;
    g.verts_ = VertexSet::full(n);
    g.adj_.assign(n, VertexSet(n));
    return g;
}

Graph Graph::from_edge_list(int num_vertices, std::span<const Edge> edges) {
    Graph g = with_vertices(num_vertices);
    for (Edge e : edges) {
        g.require_vertex(e.u);
        g.require_vertex(e.v);
        g.add_edge_unchecked(e.u, e.v);
    }
    return g;
}

Graph Graph::from_edge_list(int num_vertices, std::initializer_list<Edge> edges) {
    return from_edge_list(num_vertices, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::complete(int n) {
    Graph g = with_vertices(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) g.add_edge_unchecked(a, b);
    return g;
}

Graph Graph::cycle(int n) {
    assert(n >= 3);
    Graph g = with_vertices(n);
    for (int a = 0; a < n; ++a) g.add_edge_unchecked(a, (a + 1) % n);
    return g;
}

Graph Graph::path(int n) {
    Graph g = with_vertices(n);
    for (int a = 0; a + 1 < n; ++a) g.add_edge_unchecked(a, a + 1);
    return g;
}

std::vector<Edge> Graph::edge_list() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    verts_.for_each([&](VertexId u) {
        adj_[u].for_each([&](VertexId v) {
            if (u < v) out.emplace_back(u, v);
        });
    });
    return out;
}

Graph Graph::remove_vertex(VertexId v) const {
    require_vertex(v);
    VertexSet keep = verts_;
    keep.reset(v);
    return induced_subgraph(*this, keep);
}

std::pair<Graph, VertexMergeMap> contract_edge(const Graph& g, Edge e) {
    if (!g.has_edge(e))
        throw NotAnEdge("(" + std::to_string(e.u) + "," + std::to_string(e.v) +
                        ") is not an edge");
    const VertexId survivor = e.u; // lexicographically smaller endpoint
    const VertexId loser = e.v;

    Graph h;
    h.verts_ = g.verts_;
    h.verts_.reset(loser);
    h.adj_.assign(g.capacity(), VertexSet(g.capacity()));
    int edges = 0;
    h.verts_.for_each([&](VertexId u) {
        VertexSet row = g.adj_[u];
        if (u == survivor) {
            row |= g.adj_[loser];
            row.reset(survivor);
            row.reset(loser);
        } else if (row.test(loser)) {
            row.reset(loser);
            row.set(survivor);
        }
        h.adj_[u] = row;
        edges += row.count();
    });
    h.edge_count_ = edges / 2;

    VertexMergeMap m = VertexMergeMap::identity_on(g.vertices());
    m.record_merge(loser, survivor);
    return {std::move(h), std::move(m)};
}

Graph induced_subgraph(const Graph& g, const VertexSet& x) {
    if (!x.is_subset_of(g.vertices()))
        throw UnknownVertex("induced subgraph over identities not all present");
    Graph h;
    h.verts_ = x;
    h.adj_.assign(g.capacity(), VertexSet(g.capacity()));
    int edges = 0;
    x.for_each([&](VertexId v) {
        h.adj_[v] = g.neighbors(v) & x;
        edges += h.adj_[v].count();
    });
    h.edge_count_ = edges / 2;
    return h;
}

VertexSet component_of(const Graph& g, VertexId v, const VertexSet& forbidden) {
    g.require_vertex(v);
    assert(!forbidden.test(v));
    VertexSet comp(g.capacity());
    comp.set(v);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
        VertexSet next(g.capacity());
        frontier.for_each([&](VertexId u) { next |= g.neighbors(u); });
        next -= comp;
        next -= forbidden;
        next &= g.vertices();
        comp |= next;
        frontier = next;
    }
    return comp;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    VertexSet seen(g.capacity());
    const VertexSet none(g.capacity());
    g.vertices().for_each([&](VertexId v) {
        if (seen.test(v)) return;
        VertexSet comp = component_of(g, v, none);
        seen |= comp;
        comps.push_back(std::move(comp));
    });
    return comps;
}

} // namespace cluco
