#include "generators.hpp"

#include "cluco/connectivity.hpp"

#include <array>

namespace cluco::gen {

Graph gnp(int n, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(rng)) edges.emplace_back(a, b);
    return Graph::from_edge_list(n, edges);
}

Graph random_connected(int n, double p, Rng& rng) {
    for (;;) {
        Graph g = gnp(n, p, rng);
        if (connected_components(g).size() == 1) return g;
    }
}

Graph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);         // outer cycle
        edges.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
        edges.emplace_back(i, 5 + i);               // spokes
    }
    return Graph::from_edge_list(10, edges);
}

Graph planar_triangulation(int n, Rng& rng) {
    assert(n >= 3);
    std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
    std::vector<std::array<int, 3>> faces{{0, 1, 2}};
    for (int v = 3; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
        const std::size_t idx = pick(rng);
        const auto face = faces[idx];
        for (int corner : face) edges.emplace_back(v, corner);
        faces[idx] = {face[0], face[1], v}; // split the face in place
        faces.push_back({face[1], face[2], v});
        faces.push_back({face[0], face[2], v});
    }
    return Graph::from_edge_list(n, edges);
}

Graph delete_edges(const Graph& g, double q, Rng& rng) {
    std::bernoulli_distribution drop(q);
    std::vector<Edge> kept;
    for (const Edge& e : g.edge_list())
        if (!drop(rng)) kept.push_back(e);
    return Graph::from_edge_list(g.capacity(), kept);
}

Graph planar_sample(int max_vertices, Rng& rng) {
    std::uniform_int_distribution<int> size(4, max_vertices);
    std::uniform_real_distribution<double> rate(0.0, 0.4);
    return delete_edges(planar_triangulation(size(rng), rng), rate(rng), rng);
}

std::vector<HopeInstance> hope_instances(int k, int zsize, int count,
                                         std::uint32_t seed, int max_attempts) {
    Rng rng(seed);
    std::vector<HopeInstance> out;
    std::uniform_int_distribution<int> size(std::max(k + 3, 7), 14 - zsize);
    std::uniform_real_distribution<double> density(0.45, 0.8);

    for (int attempt = 0; attempt < max_attempts &&
                          static_cast<int>(out.size()) < count;
         ++attempt) {
        const int core = size(rng);
        Graph g = gnp(core + zsize, density(rng), rng);

        // The z-vertices are the top identities; give each a random-sized
        // neighbourhood inside the core so the setting is not always the
        // already-k-connected one.
        std::vector<Edge> extra = g.edge_list();
        std::vector<Edge> kept;
        for (const Edge& e : extra)
            if (e.v < core) kept.push_back(e);
        for (int zi = 0; zi < zsize; ++zi) {
            const int zv = core + zi;
            std::uniform_int_distribution<int> deg(std::max(2, k - 1), core - 1);
            int want = deg(rng);
            std::vector<int> perm(core);
            for (int i = 0; i < core; ++i) perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            for (int i = 0; i < want; ++i) kept.emplace_back(zv, perm[i]);
        }
        g = Graph::from_edge_list(core + zsize, kept);

        VertexSet z(g.capacity());
        for (int zi = 0; zi < zsize; ++zi) z.set(core + zi);

        // Hypothesis filter.
        if (find_good_separation(g, z, k - 1)) continue;
        bool degrees_ok = true;
        z.for_each([&](VertexId v) {
            (g.neighbors(v) - z).for_each([&](VertexId w) {
                if (2 * g.degree(w) < 3 * k + 2 * zsize - 4) degrees_ok = false;
            });
        });
        if (!degrees_ok) continue;
        if (zsize == 0 && g.num_vertices() < k + 1) continue;
        out.push_back({std::move(g), std::move(z), k});
    }
    return out;
}

} // namespace cluco::gen
