#include "cluco/partition.hpp"

#include <algorithm>

namespace cluco {

namespace {

// Smallest colour in `menu` avoiding every colour in `taken` (sorted).
std::optional<Color> smallest_avoiding(const std::vector<Color>& menu,
                                       const std::vector<Color>& taken) {
    for (Color c : menu)
        if (!std::binary_search(taken.begin(), taken.end(), c)) return c;
    return std::nullopt;
}

ColoringOutcome color_rec(const Graph& g, const CapacityParams& params,
                          const VertexSet& z, const ListAssignment& lists) {
    const int t = params.t;
    const int bound = params.component_bound();

    // Case I: small enough to take the bound wholesale.  Precoloured
    // vertices keep their singletons; everything else avoids them.
    if (g.num_vertices() <= bound) {
        std::vector<Color> zcolors;
        z.for_each([&](VertexId v) { zcolors.push_back(lists.at(v)[0]); });
        std::sort(zcolors.begin(), zcolors.end());
        ClusteredColoring out;
        out.component_bound = bound;
        g.vertices().for_each([&](VertexId v) {
            if (z.test(v)) {
                out.assignment[v] = lists.at(v)[0];
                return;
            }
            auto c = smallest_avoiding(lists.at(v), zcolors);
            if (!c)
                throw Error("internal: |L(w)| > |z| must hold in the small case");
            out.assignment[v] = *c;
        });
        return out;
    }

    // Case II: a low-degree vertex outside z gets coloured last, apart
    // from all its neighbours, so it forms its own component.
    VertexId low = -1;
    (g.vertices() - z).for_each([&](VertexId x) {
        if (low < 0 && 2 * g.degree(x) < 7 * t - 3) low = x;
    });
    if (low >= 0) {
        ColoringOutcome rec = color_rec(g.remove_vertex(low), params, z, lists);
        if (auto* witness = std::get_if<CaseIVWitness>(&rec)) return std::move(*witness);
        auto coloring = std::get<ClusteredColoring>(std::move(rec));
        std::vector<Color> taken;
        g.neighbors(low).for_each([&](VertexId y) {
            taken.push_back(coloring.assignment.at(y));
        });
        std::sort(taken.begin(), taken.end());
        auto c = smallest_avoiding(lists.at(low), taken);
        if (!c) throw Error("internal: |L(x)| > deg(x) must hold in the low-degree case");
        coloring.assignment[low] = *c;
        return coloring;
    }

    // Case III: colour the b-side first, then the a-side with the
    // overlap a∩(b∪z) precoloured by the first pass.
    if (auto sep = find_good_separation(g, z, t)) {
        const Case3Split split = case3_split(g, *sep, z, t);
        const VertexSet bz = split.oriented.b | z;

        ColoringOutcome first = color_rec(induced_subgraph(g, bz), params, z, lists);
        if (auto* witness = std::get_if<CaseIVWitness>(&first)) return std::move(*witness);
        const auto& f1 = std::get<ClusteredColoring>(first);

        const VertexSet overlap = split.oriented.a & bz;
        ListAssignment transferred = lists;
        transferred.precolored = overlap;
        overlap.for_each([&](VertexId w) {
            transferred.lists[w] = {f1.assignment.at(w)};
        });

        ColoringOutcome second =
            color_rec(induced_subgraph(g, split.oriented.a), params, overlap, transferred);
        if (auto* witness = std::get_if<CaseIVWitness>(&second)) return std::move(*witness);
        auto merged = std::get<ClusteredColoring>(std::move(second));
        for (const auto& [v, c] : f1.assignment) merged.assignment.emplace(v, c);
        return merged;
    }

    // Case IV: every t-separation is z-bad and all degrees off z are at
    // least (7t-3)/2, so the contraction recursion applies with k = t+1.
    ContractionPlan plan = contract_to_k_connected(g, z, t + 1);
    CaseIVWitness witness;
    witness.subgraph = g;
    witness.z = z;
    witness.minor = plan.result;
    witness.minor_order = plan.result.num_vertices();
    witness.plan = std::move(plan);
    if (witness.minor_order < g.num_vertices() - z.count())
        throw Error("internal: witness minor lost more than |z| vertices");
    return witness;
}

} // namespace

ListAssignment ListAssignment::uniform(const Graph& g, int palette) {
    ListAssignment out;
    out.precolored = VertexSet(g.capacity());
    std::vector<Color> menu(palette);
    for (int c = 0; c < palette; ++c) menu[c] = c + 1;
    g.vertices().for_each([&](VertexId v) { out.lists[v] = menu; });
    return out;
}

const std::vector<Color>& ListAssignment::at(VertexId v) const {
    auto it = lists.find(v);
    if (it == lists.end())
        throw InvalidLists("vertex " + std::to_string(v) + " has no colour list");
    return it->second;
}

void validate_lists(const Graph& g, const CapacityParams& params, const VertexSet& z,
                    const ListAssignment& lists) {
    if (params.t < 1) throw InvalidParams("t must be at least 1");
    if (params.capacity < 1) throw InvalidParams("capacity must be positive");
    if (!(z == lists.precolored))
        throw InvalidLists("precoloured set disagrees with z");
    if (!z.is_subset_of(g.vertices()))
        throw InvalidLists("precoloured vertex " +
                           std::to_string((z - g.vertices()).first()) +
                           " is not in the graph");
    if (z.count() > 2 * params.t - 1)
        throw InvalidLists("|z| = " + std::to_string(z.count()) +
                           " exceeds 2t-1 = " + std::to_string(2 * params.t - 1));
    g.vertices().for_each([&](VertexId v) {
        const auto& menu = lists.at(v);
        if (menu.empty())
            throw InvalidLists("vertex " + std::to_string(v) + " has an empty list");
        if (!std::is_sorted(menu.begin(), menu.end()) ||
            std::adjacent_find(menu.begin(), menu.end()) != menu.end())
            throw InvalidLists("vertex " + std::to_string(v) +
                               " has an unsorted or duplicated list");
        if (z.test(v)) {
            if (menu.size() != 1)
                throw InvalidLists("precoloured vertex " + std::to_string(v) +
                                   " must have a singleton list");
        } else if (2 * static_cast<int>(menu.size()) < 7 * params.t - 3) {
            throw InvalidLists("vertex " + std::to_string(v) + " has " +
                               std::to_string(menu.size()) +
                               " colours, below the bound 2·|L| ≥ " +
                               std::to_string(7 * params.t - 3));
        }
    });
}

ColoringVerdict verify_coloring(const Graph& g, const ClusteredColoring& coloring,
                                const ListAssignment& lists, const VertexSet& z,
                                int bound) {
    ColoringVerdict verdict;
    // Totality and C1.
    VertexId failed = -1;
    g.vertices().for_each([&](VertexId v) {
        if (failed >= 0) return;
        if (!coloring.assignment.count(v)) {
            verdict.status = ColoringVerdict::Status::missing_vertex;
            verdict.detail = "vertex " + std::to_string(v) + " is uncoloured";
            verdict.vertex = failed = v;
        }
    });
    if (!verdict) return verdict;
    g.vertices().for_each([&](VertexId v) {
        if (failed >= 0) return;
        const auto& menu = lists.at(v);
        const Color c = coloring.assignment.at(v);
        if (std::find(menu.begin(), menu.end(), c) == menu.end()) {
            verdict.status = ColoringVerdict::Status::color_outside_list;
            verdict.detail = "vertex " + std::to_string(v) + " wears colour " +
                             std::to_string(c) + " outside its list";
            verdict.vertex = failed = v;
        }
    });
    if (!verdict) return verdict;

    // C2: bounded monochromatic components per colour class.
    std::map<Color, VertexSet> classes;
    for (const auto& [v, c] : coloring.assignment) {
        auto [it, fresh] = classes.try_emplace(c, VertexSet(g.capacity()));
        it->second.set(v);
    }
    for (const auto& [c, members] : classes) {
        for (const VertexSet& comp : connected_components(induced_subgraph(g, members))) {
            if (comp.count() > bound) {
                verdict.status = ColoringVerdict::Status::component_too_big;
                verdict.detail = "colour " + std::to_string(c) + " spans a component of " +
                                 std::to_string(comp.count()) + " > " +
                                 std::to_string(bound) + " vertices";
                verdict.component = comp.to_vector();
                return verdict;
            }
        }
    }

    // C3: precoloured vertices clash with none of their outside neighbours.
    bool done = false;
    z.for_each([&](VertexId v) {
        if (done) return;
        (g.neighbors(v) - z).for_each([&](VertexId w) {
            if (done) return;
            if (coloring.assignment.at(v) == coloring.assignment.at(w)) {
                verdict.status = ColoringVerdict::Status::precolored_conflict;
                verdict.detail = "precoloured vertex " + std::to_string(v) +
                                 " shares its colour with neighbour " + std::to_string(w);
                verdict.edge = Edge(v, w);
                done = true;
            }
        });
    });
    return verdict;
}

Case3Split case3_split(const Graph& g, const Separation& sep, const VertexSet& z,
                       int t) {
    const auto verdict = classify_separation(g, sep, z);
    if (!verdict.good)
        throw InvalidSeparation("separation is z-bad, not z-good");
    if (sep.order() > t)
        throw InvalidSeparation("separator has " + std::to_string(sep.order()) +
                                " > t vertices");
    if (z.count() > 2 * t - 1)
        throw InvalidSeparation("|z| exceeds 2t-1");

    Case3Split split;
    split.oriented = sep;
    if ((z - sep.b).count() > (z - sep.a).count())
        std::swap(split.oriented.a, split.oriented.b);
    split.p = z - split.oriented.b;
    split.q = z & split.oriented.a & split.oriented.b;
    split.r = z - split.oriented.a;
    split.x = split.oriented.separator() - z;

    const int p = split.p.count(), q = split.q.count(), r = split.r.count(),
              x = split.x.count();
    if (p + r + 2 * q + 2 * x > 4 * t - 1)
        throw Error("internal: |p|+|r|+2|q|+2|x| must stay below 4t");
    if (p + q + x > 2 * t - 1)
        throw Error("internal: the oriented split must satisfy |p|+|q|+|x| ≤ 2t-1");
    return split;
}

ColoringOutcome clustered_color(const Graph& g, const CapacityParams& params,
                                const VertexSet& z, const ListAssignment& lists) {
    validate_lists(g, params, z, lists);
    ColoringOutcome out = color_rec(g, params, z, lists);
    if (const auto* coloring = std::get_if<ClusteredColoring>(&out)) {
        const auto verdict = verify_coloring(g, *coloring, lists, z,
                                             params.component_bound());
        if (!verdict)
            throw Error("internal: returned colouring failed verification: " +
                        verdict.detail);
    }
    return out;
}

ColoringOutcome theorem_main(const Graph& g, int t, int capacity) {
    if (t < 1) throw InvalidParams("t must be at least 1");
    const CapacityParams params{t, capacity};
    return clustered_color(g, params, VertexSet(g.capacity()),
                           ListAssignment::uniform(g, palette_size(t)));
}

} // namespace cluco
