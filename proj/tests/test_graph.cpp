#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cluco/graph.hpp"
#include "generators.hpp"

using namespace cluco;

TEST_CASE("contracting a triangle edge collapses the parallel pair") {
    const Graph g = Graph::complete(3);
    auto [h, merge] = contract_edge(g, Edge(0, 1));
    CHECK(h.num_vertices() == 2);
    CHECK(h.num_edges() == 1);
    CHECK(h.has_vertex(0));      // smaller endpoint survives
    CHECK_FALSE(h.has_vertex(1));
    CHECK(h.has_edge(0, 2));
    CHECK(merge(1) == 0);
    CHECK(merge(0) == 0);
    CHECK(merge(2) == 2);
}

TEST_CASE("contracting the first edge of a path leaves a single edge") {
    const Graph g = Graph::path(3);
    auto [h, merge] = contract_edge(g, Edge(0, 1));
    CHECK(h.num_vertices() == 2);
    CHECK(h.has_edge(0, 2));
    CHECK(merge(1) == 0);
}

TEST_CASE("a common neighbour of the contracted pair loses exactly one degree") {
    // 0-1 contracted; 2 adjacent to both; 3 adjacent to 1 only.
    const Graph g = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}});
    auto [h, merge] = contract_edge(g, Edge(0, 1));
    CHECK(h.degree(2) == g.degree(2) - 1);
    CHECK(h.degree(3) == g.degree(3));
}

TEST_CASE("contraction rejects non-edges") {
    const Graph g = Graph::path(3);
    CHECK_THROWS_AS(contract_edge(g, Edge(0, 2)), NotAnEdge);
}

TEST_CASE("induced subgraph of a clique is a clique") {
    const Graph g = Graph::complete(4);
    const Graph h = induced_subgraph(g, VertexSet::of(4, {0, 2, 3}));
    CHECK(h.num_vertices() == 3);
    CHECK(h.num_edges() == 3);
}

TEST_CASE("induced subgraph over the empty set is the empty graph") {
    const Graph g = Graph::complete(4);
    const Graph h = induced_subgraph(g, VertexSet(4));
    CHECK(h.num_vertices() == 0);
    CHECK(h.num_edges() == 0);
}

TEST_CASE("outer rim of the Petersen graph induces a 5-cycle") {
    const Graph g = gen::petersen();
    const Graph rim = induced_subgraph(g, VertexSet::of(10, {0, 1, 2, 3, 4}));
    CHECK(rim.num_vertices() == 5);
    CHECK(rim.num_edges() == 5);
    rim.vertices().for_each([&](VertexId v) { CHECK(rim.degree(v) == 2); });
}

TEST_CASE("induced subgraph rejects foreign identities") {
    const Graph g = Graph::path(3).remove_vertex(1);
    CHECK_THROWS_AS(induced_subgraph(g, VertexSet::of(3, {0, 1})), UnknownVertex);
}

TEST_CASE("connected components of small fixtures") {
    CHECK(connected_components(Graph::with_vertices(0)).empty());

    const Graph two_edges = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
    const auto comps = connected_components(two_edges);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet::of(4, {0, 1}));
    CHECK(comps[1] == VertexSet::of(4, {2, 3}));

    CHECK(connected_components(Graph::cycle(6)).size() == 1);
}

TEST_CASE("degree and neighbour queries") {
    const Graph k5 = Graph::complete(5);
    k5.vertices().for_each([&](VertexId v) { CHECK(k5.degree(v) == 4); });

    const Graph lonely = Graph::with_vertices(1);
    CHECK(lonely.degree(0) == 0);
    CHECK_THROWS_AS(lonely.degree(1), UnknownVertex);
}

TEST_CASE("contraction properties on random graphs") {
    gen::Rng rng(20260810);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = gen::gnp(9, 0.45, rng);
        const auto edges = g.edge_list();
        if (edges.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
        const Edge e = edges[pick(rng)];
        auto [h, merge] = contract_edge(g, e);

        CHECK(h.num_vertices() == g.num_vertices() - 1);
        CHECK(h.num_edges() <= g.num_edges());
        h.vertices().for_each([&](VertexId x) {
            CHECK(h.neighbors(x).is_subset_of(h.vertices()));
            if (x == e.u) return;
            const bool common = g.has_edge(x, e.u) && g.has_edge(x, e.v);
            CHECK(h.degree(x) == g.degree(x) - (common ? 1 : 0));
        });
        // The merged vertex keeps the union of both neighbourhoods.
        VertexSet expected = g.neighbors(e.u) | g.neighbors(e.v);
        expected.reset(e.u);
        expected.reset(e.v);
        CHECK(h.neighbors(e.u) == expected);
        CHECK(merge.image() == h.vertices());
    }
}

TEST_CASE("induced subgraphs are monotone in the vertex set") {
    gen::Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = gen::gnp(10, 0.4, rng);
        VertexSet y(10), x(10);
        g.vertices().for_each([&](VertexId v) {
            if (rng() % 2) {
                y.set(v);
                if (rng() % 2) x.set(v);
            }
        });
        const Graph gy = induced_subgraph(g, y);
        const Graph gx = induced_subgraph(g, x);
        for (const Edge& e : gx.edge_list()) CHECK(gy.has_edge(e));
    }
}

TEST_CASE("components partition the vertex set with no cross edges") {
    gen::Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = gen::gnp(11, 0.15, rng);
        VertexSet seen(g.capacity());
        for (const VertexSet& comp : connected_components(g)) {
            CHECK_FALSE(comp.empty());
            CHECK_FALSE(seen.intersects(comp));
            seen |= comp;
            comp.for_each([&](VertexId v) {
                CHECK(g.neighbors(v).is_subset_of(comp));
            });
        }
        CHECK(seen == g.vertices());
    }
}
