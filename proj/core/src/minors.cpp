#include "cluco/minors.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>

namespace cluco {

namespace {

bool is_planar(const Graph& g) {
    using BoostGraph =
        boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BoostGraph bg(g.capacity());
    for (const Edge& e : g.edge_list()) boost::add_edge(e.u, e.v, bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

VertexSet reach_within(const Graph& g, VertexId start, const VertexSet& allowed) {
    VertexSet comp(g.capacity());
    comp.set(start);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
        VertexSet next(g.capacity());
        frontier.for_each([&](VertexId u) { next |= g.neighbors(u); });
        next &= allowed;
        next -= comp;
        comp |= next;
        frontier = next;
    }
    return comp;
}

bool is_connected_set(const Graph& g, const VertexSet& s) {
    if (s.empty()) return false;
    return s.is_subset_of(reach_within(g, s.first(), s));
}

std::vector<VertexSet> singleton_sets(int capacity, std::initializer_list<VertexId> vs) {
    std::vector<VertexSet> out;
    for (VertexId v : vs) out.push_back(VertexSet::of(capacity, {v}));
    return out;
}

// Any cycle, as an ordered vertex sequence, or empty when g is a forest.
std::vector<VertexId> find_cycle(const Graph& g) {
    const int cap = g.capacity();
    std::vector<VertexId> parent(cap, -1);
    std::vector<char> state(cap, 0); // 0 unseen, 1 active, 2 done
    std::vector<VertexId> cycle;
    g.vertices().for_each([&](VertexId root) {
        if (!cycle.empty() || state[root]) return;
        std::vector<std::pair<VertexId, VertexId>> stack{{root, -1}};
        while (!stack.empty() && cycle.empty()) {
            auto [v, from] = stack.back();
            stack.pop_back();
            if (state[v]) continue;
            state[v] = 1;
            parent[v] = from;
            g.neighbors(v).for_each([&](VertexId w) {
                if (!cycle.empty() || w == from) return;
                if (state[w]) {
                    // Back edge v-w: walk v up to w.
                    std::vector<VertexId> path;
                    for (VertexId x = v; x != w && x >= 0; x = parent[x])
                        path.push_back(x);
                    path.push_back(w);
                    if (path.size() >= 3) cycle = path;
                } else {
                    stack.emplace_back(w, v);
                }
            });
        }
    });
    return cycle;
}

// Small-t cases have direct certificates: a vertex, an edge, a cycle
// split into three arcs.
std::optional<MinorSearchResult> small_t_case(const Graph& g, int t) {
    MinorSearchResult res;
    if (t == 1) {
        if (g.num_vertices() == 0) return res;
        res.status = MinorStatus::found;
        res.embedding = MinorEmbedding{singleton_sets(g.capacity(), {g.vertices().first()})};
        return res;
    }
    if (t == 2) {
        if (g.num_edges() == 0) return res;
        const Edge e = g.edge_list().front();
        res.status = MinorStatus::found;
        res.embedding = MinorEmbedding{singleton_sets(g.capacity(), {e.u, e.v})};
        return res;
    }
    if (t == 3) {
        const auto cycle = find_cycle(g);
        if (cycle.empty()) return res;
        MinorEmbedding emb;
        emb.branch_sets.assign(3, VertexSet(g.capacity()));
        emb.branch_sets[0].set(cycle[0]);
        emb.branch_sets[1].set(cycle[1]);
        for (std::size_t i = 2; i < cycle.size(); ++i) emb.branch_sets[2].set(cycle[i]);
        res.status = MinorStatus::found;
        res.embedding = std::move(emb);
        return res;
    }
    return std::nullopt;
}

// Iteratively removes isolated vertices and contracts degree-1 and
// degree-2 vertices into a neighbour.  Sound for targets of minimum
// degree ≥ 3, i.e. K_t with t ≥ 4.  blobs[s] collects the original
// vertices merged into the surviving identity s.
struct Reduced {
    Graph graph;
    std::vector<VertexSet> blobs;
};

Reduced suppress_low_degree(const Graph& g) {
    Reduced red{g, {}};
    red.blobs.reserve(g.capacity());
    for (int v = 0; v < g.capacity(); ++v)
        red.blobs.push_back(VertexSet::of(g.capacity(), {}));
    g.vertices().for_each([&](VertexId v) { red.blobs[v].set(v); });

    bool changed = true;
    while (changed) {
        changed = false;
        VertexId target = -1;
        red.graph.vertices().for_each([&](VertexId v) {
            if (target < 0 && red.graph.degree(v) <= 2) target = v;
        });
        if (target < 0) break;
        changed = true;
        if (red.graph.degree(target) == 0) {
            red.graph = red.graph.remove_vertex(target);
            continue;
        }
        const VertexId nb = red.graph.neighbors(target).first();
        const Edge e(target, nb);
        red.graph = contract_edge(red.graph, e).first;
        red.blobs[e.u] |= red.blobs[e.v];
    }
    return red;
}

struct BranchSetSearch {
    const Graph& g;
    int t;
    std::uint64_t budget;

    std::vector<VertexId> order;          // degree-descending, id ascending
    std::vector<VertexSet> suffix;        // suffix[p] = {order[p..]}
    std::vector<VertexSet> sets;
    std::vector<std::uint32_t> touching;  // touching[i] bit j: edge between sets i, j
    int used = 0;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::optional<std::vector<VertexSet>> solution;

    BranchSetSearch(const Graph& graph, int target, std::uint64_t node_budget)
        : g(graph), t(target), budget(node_budget) {
        order = g.vertices().to_vector();
        std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
            return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
        });
        suffix.assign(order.size() + 1, VertexSet(g.capacity()));
        for (int p = static_cast<int>(order.size()) - 1; p >= 0; --p) {
            suffix[p] = suffix[p + 1];
            suffix[p].set(order[p]);
        }
        sets.assign(t, VertexSet(g.capacity()));
        touching.assign(t, 0);
    }

    VertexSet set_frontier(int i) const {
        VertexSet nb(g.capacity());
        sets[i].for_each([&](VertexId v) { nb |= g.neighbors(v); });
        nb -= sets[i];
        return nb;
    }

    bool complete() const {
        if (used < t) return false;
        for (int i = 0; i < t; ++i) {
            std::uint32_t want = (std::uint32_t{1} << t) - 1;
            want &= ~(std::uint32_t{1} << i);
            if ((touching[i] & want) != want) return false;
            if (!is_connected_set(g, sets[i])) return false;
        }
        return true;
    }

    bool feasible(int pos) const {
        const VertexSet& future = suffix[pos];
        if (t - used > future.count()) return false;
        for (int i = 0; i < used; ++i) {
            const VertexSet frontier = set_frontier(i);
            const bool can_extend = frontier.intersects(future);
            std::uint32_t want = (std::uint32_t{1} << used) - 1;
            want &= ~(std::uint32_t{1} << i);
            const bool missing_adjacency = (touching[i] & want) != want || used < t;
            if (missing_adjacency && !can_extend) return false;
            // Every current piece of set i must be joinable through
            // future vertices.
            const VertexSet reach = reach_within(g, sets[i].first(), sets[i] | future);
            if (!sets[i].is_subset_of(reach)) return false;
            // Pairwise: sets i and j must be linkable through future
            // vertices when not already touching.
            for (int j = i + 1; j < used; ++j) {
                if (touching[i] & (std::uint32_t{1} << j)) continue;
                const VertexSet span =
                    reach_within(g, sets[i].first(), sets[i] | sets[j] | future);
                if (!span.intersects(sets[j])) return false;
            }
        }
        return true;
    }

    void assign(VertexId u, int i) {
        sets[i].set(u);
        for (int j = 0; j < used; ++j) {
            if (j != i && g.neighbors(u).intersects(sets[j])) {
                touching[i] |= std::uint32_t{1} << j;
                touching[j] |= std::uint32_t{1} << i;
            }
        }
    }

    void run(int pos) {
        if (solution || out_of_budget) return;
        if (++nodes > budget) {
            out_of_budget = true;
            return;
        }
        if (complete()) {
            solution = sets;
            return;
        }
        if (pos >= static_cast<int>(order.size())) return;
        if (!feasible(pos)) return;

        const VertexId u = order[pos];
        const int tried_sets = std::min(used + 1, t);
        for (int i = 0; i < tried_sets && !solution && !out_of_budget; ++i) {
            const auto saved_touching = touching;
            const int saved_used = used;
            if (i == used) ++used;
            assign(u, i);
            run(pos + 1);
            sets[i].reset(u);
            touching = saved_touching;
            used = saved_used;
        }
        if (!solution && !out_of_budget) run(pos + 1); // u stays unused
    }
};

} // namespace

MinorSearchResult find_clique_minor(const Graph& g, int t, std::uint64_t budget) {
    if (t < 1) throw InvalidParams("t must be at least 1");
    if (auto direct = small_t_case(g, t)) return *direct;

    MinorSearchResult res;
    const Reduced red = suppress_low_degree(g);
    if (red.graph.num_vertices() < t || red.graph.num_edges() < t * (t - 1) / 2)
        return res; // refuted

    // Degree-2 suppression preserves planarity, and a planar graph has no
    // 5-clique minor, hence none of any larger clique either.
    if (t >= 5 && is_planar(red.graph)) return res;

    BranchSetSearch search(red.graph, t, budget);
    search.run(0);
    res.nodes = search.nodes;
    if (search.solution) {
        MinorEmbedding emb;
        for (const VertexSet& s : *search.solution) {
            VertexSet expanded(g.capacity());
            s.for_each([&](VertexId v) { expanded |= red.blobs[v]; });
            emb.branch_sets.push_back(std::move(expanded));
        }
        std::sort(emb.branch_sets.begin(), emb.branch_sets.end(),
                  [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
        res.status = MinorStatus::found;
        res.embedding = std::move(emb);
    } else if (search.out_of_budget) {
        res.status = MinorStatus::budget_exceeded;
    } else {
        res.status = MinorStatus::refuted;
    }
    return res;
}

EmbeddingVerdict verify_embedding(const Graph& g, const MinorEmbedding& emb, int t) {
    EmbeddingVerdict verdict;
    auto fail = [&](std::string why) {
        verdict.ok = false;
        verdict.detail = std::move(why);
        return verdict;
    };
    if (static_cast<int>(emb.branch_sets.size()) != t)
        return fail("expected " + std::to_string(t) + " branch sets, got " +
                    std::to_string(emb.branch_sets.size()));
    for (std::size_t i = 0; i < emb.branch_sets.size(); ++i) {
        const VertexSet& s = emb.branch_sets[i];
        if (s.capacity() != g.capacity() || !s.is_subset_of(g.vertices()))
            return fail("branch set " + std::to_string(i) + " leaves the host graph");
        if (s.empty()) return fail("branch set " + std::to_string(i) + " is empty");
        if (!is_connected_set(g, s))
            return fail("branch set " + std::to_string(i) + " is not connected");
        for (std::size_t j = i + 1; j < emb.branch_sets.size(); ++j) {
            if (s.intersects(emb.branch_sets[j]))
                return fail("branch sets " + std::to_string(i) + " and " +
                            std::to_string(j) + " overlap");
            bool touching = false;
            s.for_each([&](VertexId v) {
                touching = touching || g.neighbors(v).intersects(emb.branch_sets[j]);
            });
            if (!touching)
                return fail("no edge joins branch sets " + std::to_string(i) + " and " +
                            std::to_string(j));
        }
    }
    return verdict;
}

WitnessAudit audit_witness(const CaseIVWitness& witness, int t, std::uint64_t budget) {
    WitnessAudit audit;
    audit.connectivity_ok = is_k_connected(witness.minor, t + 1);
    audit.order_ok = witness.minor_order >= witness.subgraph.num_vertices() -
                                                witness.z.count() &&
                     witness.minor.num_vertices() == witness.minor_order;
    audit.minor_search = find_clique_minor(witness.minor, t, budget);
    if (audit.minor_search.embedding)
        audit.embedding_check =
            verify_embedding(witness.minor, *audit.minor_search.embedding, t);
    return audit;
}

} // namespace cluco
