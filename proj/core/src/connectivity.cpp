#include "cluco/connectivity.hpp"

#include <limits>
#include <queue>

namespace cluco {

namespace {

// Unit-vertex-capacity max flow on the split network: node 2v = entry
// side of v, 2v+1 = exit side.  Edges of g become infinite-capacity arcs
// exit(u)->entry(v) both ways; each vertex other than the terminals gets
// a capacity-1 arc entry(v)->exit(v).  Arc order is ascending in vertex
// identity, so augmenting paths are reproducible.
struct FlowNetwork {
    struct Arc {
        int to;
        int cap;
        int rev; // index of the reverse arc in adj[to]
    };

    explicit FlowNetwork(int nodes) : adj(nodes) {}

    void add_arc(int from, int to, int cap) {
        adj[from].push_back({to, cap, static_cast<int>(adj[to].size())});
        adj[to].push_back({from, 0, static_cast<int>(adj[from].size()) - 1});
    }

    // One BFS augmentation of value 1; returns false when the sink is
    // unreachable in the residual network.
    bool augment(int source, int sink) {
        std::vector<std::pair<int, int>> pred(adj.size(), {-1, -1});
        std::queue<int> q;
        pred[source] = {source, -1};
        q.push(source);
        while (!q.empty() && pred[sink].first < 0) {
            int u = q.front();
            q.pop();
            for (int i = 0; i < static_cast<int>(adj[u].size()); ++i) {
                const Arc& a = adj[u][i];
                if (a.cap > 0 && pred[a.to].first < 0) {
                    pred[a.to] = {u, i};
                    q.push(a.to);
                }
            }
        }
        if (pred[sink].first < 0) return false;
        for (int v = sink; v != source;) {
            auto [u, i] = pred[v];
            adj[u][i].cap -= 1;
            adj[v][adj[u][i].rev].cap += 1;
            v = u;
        }
        return true;
    }

    std::vector<char> residual_reachable(int source) const {
        std::vector<char> seen(adj.size(), 0);
        std::queue<int> q;
        seen[source] = 1;
        q.push(source);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (const Arc& a : adj[u])
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = 1;
                    q.push(a.to);
                }
        }
        return seen;
    }

    std::vector<std::vector<Arc>> adj;
};

constexpr int kInf = std::numeric_limits<int>::max() / 2;

FlowNetwork build_split_network(const Graph& g, VertexId x, VertexId y) {
    FlowNetwork net(2 * g.capacity());
    g.vertices().for_each([&](VertexId v) {
        net.add_arc(2 * v, 2 * v + 1, (v == x || v == y) ? kInf : 1);
    });
    for (Edge e : g.edge_list()) {
        net.add_arc(2 * e.u + 1, 2 * e.v, kInf);
        net.add_arc(2 * e.v + 1, 2 * e.u, kInf);
    }
    return net;
}

void require_cut_query(const Graph& g, VertexId x, VertexId y) {
    g.require_vertex(x);
    g.require_vertex(y);
    if (x == y) throw InvalidParams("cut query needs two distinct vertices");
    if (g.has_edge(x, y))
        throw AdjacentPair("no vertex cut separates the adjacent pair (" +
                           std::to_string(x) + "," + std::to_string(y) + ")");
}

// Runs at most `limit` unit augmentations; returns the flow value reached.
int flow_up_to(FlowNetwork& net, VertexId x, VertexId y, int limit) {
    int flow = 0;
    while (flow < limit && net.augment(2 * x + 1, 2 * y)) ++flow;
    return flow;
}

} // namespace

void require_valid_separation(const Graph& g, const Separation& sep) {
    if (sep.a.capacity() != g.capacity() || sep.b.capacity() != g.capacity())
        throw InvalidSeparation("separation sets sized for a different graph");
    if (!(sep.a | sep.b).is_subset_of(g.vertices()) ||
        !g.vertices().is_subset_of(sep.a | sep.b))
        throw InvalidSeparation("a ∪ b must equal the vertex set");
    const VertexSet fa = sep.fragment_a();
    const VertexSet fb = sep.fragment_b();
    if (fa.empty() || fb.empty())
        throw InvalidSeparation("both fragments must be nonempty");
    bool cross = false;
    fa.for_each([&](VertexId u) { cross = cross || g.neighbors(u).intersects(fb); });
    if (cross) throw InvalidSeparation("an edge joins the two fragments");
}

GoodnessVerdict classify_separation(const Graph& g, const Separation& sep,
                                    const VertexSet& z) {
    require_valid_separation(g, sep);
    const bool bad = sep.fragment_a().is_subset_of(z) || sep.fragment_b().is_subset_of(z);
    return {sep, z, !bad};
}

VertexSet min_vertex_cut(const Graph& g, VertexId x, VertexId y) {
    require_cut_query(g, x, y);
    FlowNetwork net = build_split_network(g, x, y);
    flow_up_to(net, x, y, g.num_vertices());
    // Cut vertices: entry side reachable in the residual, exit side not.
    const std::vector<char> seen = net.residual_reachable(2 * x + 1);
    VertexSet cut(g.capacity());
    g.vertices().for_each([&](VertexId v) {
        if (seen[2 * v] && !seen[2 * v + 1]) cut.set(v);
    });
    return cut;
}

bool pair_connectivity_at_least(const Graph& g, VertexId x, VertexId y, int k) {
    require_cut_query(g, x, y);
    if (k <= 0) return true;
    FlowNetwork net = build_split_network(g, x, y);
    return flow_up_to(net, x, y, k) >= k;
}

bool is_k_connected(const Graph& g, int k) {
    assert(k >= 0);
    if (g.num_vertices() < k + 1) return false;
    bool ok = true;
    g.vertices().for_each([&](VertexId x) {
        if (!ok) return;
        g.vertices().for_each([&](VertexId y) {
            if (!ok || y <= x || g.has_edge(x, y)) return;
            if (!pair_connectivity_at_least(g, x, y, k)) ok = false;
        });
    });
    return ok;
}

std::optional<Separation> find_good_separation(const Graph& g, const VertexSet& z,
                                               int t) {
    assert(z.is_subset_of(g.vertices()));
    const VertexSet outside = g.vertices() - z;
    std::optional<Separation> hit;
    outside.for_each([&](VertexId x) {
        if (hit) return;
        outside.for_each([&](VertexId y) {
            if (hit || y <= x || g.has_edge(x, y)) return;
            if (pair_connectivity_at_least(g, x, y, t + 1)) return;
            const VertexSet cut = min_vertex_cut(g, x, y);
            assert(cut.count() <= t);
            const VertexSet comp = component_of(g, x, cut);
            Separation sep{comp | cut, g.vertices() - comp};
            assert(classify_separation(g, sep, z).good);
            hit = std::move(sep);
        });
    });
    return hit;
}

} // namespace cluco
