#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cluco/constructions.hpp"
#include "cluco/contraction.hpp"

using namespace cluco;

TEST_CASE("the smallest instance has 9 vertices and attachment degree 6") {
    const WatkinsInstance inst = watkins_graph(5, 4);
    CHECK(inst.p == 2);
    CHECK(inst.graph.num_vertices() == 9);
    CHECK(inst.apex == 8);
    for (VertexId w : inst.attachments) CHECK(inst.graph.degree(w) == 6);
    CHECK(inst.graph.degree(inst.apex) == 4);
}

TEST_CASE("k=7 n=5 has 16 vertices and attachment degree 9") {
    const WatkinsInstance inst = watkins_graph(7, 5);
    CHECK(inst.p == 3);
    CHECK(inst.graph.num_vertices() == 16);
    for (VertexId w : inst.attachments) CHECK(inst.graph.degree(w) == 9);
}

TEST_CASE("parameter validation names the violated constraint") {
    CHECK_THROWS_WITH_AS(watkins_graph(5, 3), "n must be at least 4", InvalidParams);
    CHECK_THROWS_WITH_AS(watkins_graph(6, 4), "k must be odd", InvalidParams);
    CHECK_THROWS_WITH_AS(watkins_graph(3, 4), "k must be at least 5", InvalidParams);
    CHECK_THROWS_WITH_AS(watkins_graph(5, 5), "n must be at most k-1", InvalidParams);
}

TEST_CASE("edge count matches the closed form for every valid instance") {
    for (int k : {5, 7, 9}) {
        for (int n = 4; n <= k - 1; ++n) {
            const WatkinsInstance inst = watkins_graph(k, n);
            const int p = inst.p;
            CHECK(inst.graph.num_edges() == n * (p * (p - 1) / 2 + p * p) + n);
        }
    }
}

TEST_CASE("the tightness report passes on the smallest instance") {
    const auto report = verify_tightness(watkins_graph(5, 4));
    CHECK(report.vertex_count_ok);
    CHECK(report.edge_count_ok);
    CHECK(report.attachment_degrees_ok);
    CHECK(report.pair_connectivity_ok);
    CHECK(report.no_good_separation_ok);
    REQUIRE(report.contraction_checks.size() == 4);
    for (const auto& check : report.contraction_checks) {
        CHECK(check.not_k_connected);
        CHECK(check.stated_cut_works);
        CHECK(check.fragment_count >= 2);
    }
    CHECK(report.all_ok());
}

TEST_CASE("the tightness report passes across the k=7 row") {
    for (int n = 4; n <= 6; ++n) CHECK(verify_tightness(watkins_graph(7, n)).all_ok());
}

TEST_CASE("deleting one ring edge breaks the pair-connectivity check") {
    WatkinsInstance inst = watkins_graph(5, 4);
    // Remove an edge between copy 0 and copy 1.
    const Edge victim(1, 2); // second vertex of copy 0, first of copy 1
    REQUIRE(inst.graph.has_edge(victim));
    std::vector<Edge> kept;
    for (const Edge& e : inst.graph.edge_list())
        if (!(e == victim)) kept.push_back(e);
    inst.graph = Graph::from_edge_list(9, kept);
    const auto report = verify_tightness(inst);
    CHECK_FALSE(report.pair_connectivity_ok);
    CHECK_FALSE(report.all_ok());
}

TEST_CASE("no candidate edge at the apex survives the contraction test") {
    for (int k : {5, 7}) {
        const WatkinsInstance inst = watkins_graph(k, 4);
        const VertexSet z = VertexSet::of(inst.graph.capacity(), {inst.apex});
        CHECK(contractible_neighbors(inst.graph, z, inst.apex, k).empty());
        // The eager hypothesis check already reports the attachment degree gap.
        CHECK_THROWS_AS(find_contractible_edge(inst.graph, z, inst.apex, k),
                        PreconditionViolated);
    }
}
