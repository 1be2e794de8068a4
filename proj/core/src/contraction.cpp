#include "cluco/contraction.hpp"

#include <string>

namespace cluco {

namespace {

std::string vertex_list(const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](VertexId v) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    });
    return out + "}";
}

// 2·deg ≥ 3k + 2|z| - 4, the doubled integer form of deg ≥ 3k/2 + |z| - 2.
bool meets_degree_bound(const Graph& g, VertexId w, int k, int zsize) {
    return 2 * g.degree(w) >= 3 * k + 2 * zsize - 4;
}

void check_hypotheses(const Graph& g, const VertexSet& z, int k) {
    if (auto sep = find_good_separation(g, z, k - 1))
        throw PreconditionViolated(
            "a z-good (k-1)-separation exists: separator " +
            vertex_list(sep->separator()) + ", fragments " +
            vertex_list(sep->fragment_a()) + " / " + vertex_list(sep->fragment_b()));
    const int zsize = z.count();
    z.for_each([&](VertexId v) {
        (g.neighbors(v) - z).for_each([&](VertexId w) {
            if (!meets_degree_bound(g, w, k, zsize))
                throw PreconditionViolated(
                    "vertex " + std::to_string(w) + " in N(" + std::to_string(v) +
                    ")-z has degree " + std::to_string(g.degree(w)) +
                    ", below the bound 2·deg ≥ " + std::to_string(3 * k + 2 * zsize - 4));
        });
    });
}

} // namespace

std::vector<VertexId> contractible_neighbors(const Graph& g, const VertexSet& z,
                                             VertexId v, int k) {
    std::vector<VertexId> out;
    VertexSet z_after = z;
    z_after.reset(v);
    (g.neighbors(v) - z).for_each([&](VertexId w) {
        const Graph h = contract_edge(g, Edge(v, w)).first;
        if (!find_good_separation(h, z_after, k - 1)) out.push_back(w);
    });
    return out;
}

Edge find_contractible_edge(const Graph& g, const VertexSet& z, VertexId v, int k) {
    g.require_vertex(v);
    if (!z.test(v))
        throw PreconditionViolated("vertex " + std::to_string(v) + " is not in z");
    const VertexSet cand = g.neighbors(v) - z;
    if (cand.empty())
        throw PreconditionViolated("N(" + std::to_string(v) + ")-z is empty");
    check_hypotheses(g, z, k);

    VertexSet z_after = z;
    z_after.reset(v);
    VertexId found = -1;
    cand.for_each([&](VertexId w) {
        if (found >= 0) return;
        const Graph h = contract_edge(g, Edge(v, w)).first;
        if (!find_good_separation(h, z_after, k - 1)) found = w;
    });
    if (found < 0)
        throw NoEdgeFound("no neighbour of " + std::to_string(v) +
                          " admits a contraction leaving every (k-1)-separation (z-{v})-bad");
    return Edge(v, found);
}

ContractionPlan contract_to_k_connected(const Graph& g, const VertexSet& z, int k) {
    assert(z.is_subset_of(g.vertices()));
    check_hypotheses(g, z, k);

    ContractionPlan plan;
    plan.host = g;
    plan.z = z;
    plan.k = k;
    plan.merge = VertexMergeMap::identity_on(g.vertices());
    plan.deletions = VertexSet(g.capacity());

    Graph cur = g;
    VertexSet curz = z;
    while (true) {
        VertexId pick = -1;
        curz.for_each([&](VertexId v) {
            if (pick < 0 && !(cur.neighbors(v) - curz).empty()) pick = v;
        });
        if (pick < 0) break;

        const Edge e = find_contractible_edge(cur, curz, pick, k);
        auto [next, step] = contract_edge(cur, e);
        plan.edges.push_back(e);
        plan.merge.record_merge(e.v, e.u);
        curz.reset(pick);
        cur = std::move(next);

        // Degree bookkeeping from the inductive step: a contraction drops a
        // vertex's degree only when it was a common neighbour of both
        // endpoints, and then by exactly one, so the recursive hypothesis
        // must still hold.  Never trusted, always re-checked.
        const int zsize = curz.count();
        curz.for_each([&](VertexId v) {
            (cur.neighbors(v) - curz).for_each([&](VertexId w) {
                if (!meets_degree_bound(cur, w, k, zsize))
                    throw Error("internal: degree bookkeeping broke after contracting (" +
                                std::to_string(e.u) + "," + std::to_string(e.v) + ")");
            });
        });
    }

    plan.deletions = curz;
    plan.result = induced_subgraph(cur, cur.vertices() - curz);
    if (!is_k_connected(plan.result, k))
        throw ResultNotConnectedEnough(
            "plan result has " + std::to_string(plan.result.num_vertices()) +
            " vertices and is not " + std::to_string(k) + "-connected");
    return plan;
}

Edge mader_edge(const Graph& g, VertexId v, int k) {
    g.require_vertex(v);
    if (!is_k_connected(g, k))
        throw PreconditionViolated("graph is not " + std::to_string(k) + "-connected");
    g.neighbors(v).for_each([&](VertexId w) {
        if (2 * g.degree(w) < 3 * k - 2)
            throw PreconditionViolated(
                "neighbour " + std::to_string(w) + " has degree " +
                std::to_string(g.degree(w)) + ", below the bound 2·deg ≥ " +
                std::to_string(3 * k - 2));
    });
    const Edge e = find_contractible_edge(g, VertexSet::of(g.capacity(), {v}), v, k);
    if (!is_k_connected(contract_edge(g, e).first, k))
        throw ResultNotConnectedEnough(
            "contracting (" + std::to_string(e.u) + "," + std::to_string(e.v) +
            ") does not leave a " + std::to_string(k) + "-connected graph");
    return e;
}

} // namespace cluco
