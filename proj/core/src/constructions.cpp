#include "cluco/constructions.hpp"

namespace cluco {

VertexSet WatkinsInstance::block(int i) const {
    const int base = ((i % n) + n) % n * p;
    VertexSet s(graph.capacity());
    for (int j = 0; j < p; ++j) s.set(base + j);
    return s;
}

WatkinsInstance watkins_graph(int k, int n) {
    if (k < 5) throw InvalidParams("k must be at least 5");
    if (k % 2 == 0) throw InvalidParams("k must be odd");
    if (n < 4) throw InvalidParams("n must be at least 4");
    if (n > k - 1) throw InvalidParams("n must be at most k-1");

    WatkinsInstance inst;
    inst.k = k;
    inst.n = n;
    inst.p = (k - 1) / 2;
    const int p = inst.p;
    const int total = n * p + 1;
    inst.apex = n * p;

    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        const int base = i * p;
        const int next = ((i + 1) % n) * p;
        for (int a = 0; a < p; ++a) {
            for (int b = a + 1; b < p; ++b) edges.emplace_back(base + a, base + b);
            for (int b = 0; b < p; ++b) edges.emplace_back(base + a, next + b);
        }
        inst.attachments.push_back(base);
        edges.emplace_back(inst.apex, base);
    }
    inst.graph = Graph::from_edge_list(total, edges);
    return inst;
}

bool TightnessReport::all_ok() const {
    if (!vertex_count_ok || !edge_count_ok || !attachment_degrees_ok ||
        !pair_connectivity_ok || !no_good_separation_ok)
        return false;
    for (const auto& check : contraction_checks)
        if (!check.not_k_connected || !check.stated_cut_works) return false;
    return !contraction_checks.empty();
}

TightnessReport verify_tightness(const WatkinsInstance& inst) {
    const Graph& g = inst.graph;
    const int k = inst.k, n = inst.n, p = inst.p;
    TightnessReport report;

    report.vertex_count_ok = g.num_vertices() == n * p + 1;
    report.edge_count_ok = g.num_edges() == n * (p * (p - 1) / 2 + p * p) + n;

    report.attachment_degrees_ok = g.degree(inst.apex) == n;
    for (VertexId w : inst.attachments)
        report.attachment_degrees_ok =
            report.attachment_degrees_ok && 2 * g.degree(w) == 3 * (k - 1);

    // Every pair off the apex is k-connected.
    report.pair_connectivity_ok = true;
    const VertexSet others = g.vertices() - VertexSet::of(g.capacity(), {inst.apex});
    others.for_each([&](VertexId x) {
        others.for_each([&](VertexId y) {
            if (y <= x || g.has_edge(x, y) || !report.pair_connectivity_ok) return;
            if (!pair_connectivity_at_least(g, x, y, k))
                report.pair_connectivity_ok = false;
        });
    });

    // The apex neighbourhood is the only small separator, operationally:
    // no {apex}-good (k-1)-separation exists.
    report.no_good_separation_ok =
        !find_good_separation(g, VertexSet::of(g.capacity(), {inst.apex}), k - 1);

    for (int i = 0; i < n; ++i) {
        TightnessReport::ContractionCheck check;
        check.attachment = inst.attachments[i];
        const Graph h = contract_edge(g, Edge(inst.apex, check.attachment)).first;
        check.not_k_connected = !is_k_connected(h, k);

        const VertexSet stated = inst.block(i) | inst.block(i + 2);
        if (stated.count() == 2 * p && stated.is_subset_of(h.vertices())) {
            const auto fragments = connected_components(
                induced_subgraph(h, h.vertices() - stated));
            check.fragment_count = static_cast<int>(fragments.size());
            for (const auto& f : fragments)
                check.fragment_sizes.push_back(f.count());
            check.stated_cut_works = fragments.size() >= 2;
        }
        report.contraction_checks.push_back(std::move(check));
    }
    return report;
}

} // namespace cluco
