#include "oracles.hpp"

#include <bit>
#include <cassert>

namespace cluco::oracle {

MaskGraph make_mask_graph(const Graph& g) {
    assert(g.capacity() <= 32);
    MaskGraph m;
    m.capacity = g.capacity();
    m.adj.assign(g.capacity(), 0);
    g.vertices().for_each([&](VertexId v) {
        m.verts |= std::uint32_t{1} << v;
        g.neighbors(v).for_each([&](VertexId w) { m.adj[v] |= std::uint32_t{1} << w; });
    });
    return m;
}

std::uint32_t mask_reach(const MaskGraph& g, int v, std::uint32_t within) {
    std::uint32_t reach = std::uint32_t{1} << v;
    std::uint32_t frontier = reach;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1)
            next |= g.adj[std::countr_zero(f)];
        next &= within;
        next &= ~reach;
        reach |= next;
        frontier = next;
    }
    return reach;
}

bool mask_connected(const MaskGraph& g, std::uint32_t within) {
    if (within == 0) return true;
    return mask_reach(g, std::countr_zero(within), within) == within;
}

std::vector<SepRec> all_separations(const MaskGraph& g) {
    std::vector<SepRec> out;
    const std::uint32_t verts = g.verts;
    // a runs over all submasks of the vertex set; b over supersets of the
    // complement: b = (verts \ a) | s with s ⊆ a, so a ∪ b = verts.
    for (std::uint32_t a = verts;; a = (a - 1) & verts) {
        const std::uint32_t rest = verts & ~a;
        for (std::uint32_t s = a;; s = (s - 1) & a) {
            const std::uint32_t b = rest | s;
            const std::uint32_t frag_a = a & ~b;
            const std::uint32_t frag_b = b & ~a;
            if (frag_a && frag_b) {
                bool cross = false;
                for (std::uint32_t f = frag_a; f && !cross; f &= f - 1)
                    cross = (g.adj[std::countr_zero(f)] & frag_b) != 0;
                if (!cross) out.push_back({a, b, std::popcount(a & b)});
            }
            if (s == 0) break;
        }
        if (a == 0) break;
    }
    return out;
}

bool exists_good_separation_brute(const std::vector<SepRec>& seps, std::uint32_t z,
                                  int t) {
    for (const SepRec& s : seps) {
        if (s.separator_size > t) continue;
        const std::uint32_t frag_a = s.a & ~s.b;
        const std::uint32_t frag_b = s.b & ~s.a;
        if ((frag_a & ~z) && (frag_b & ~z)) return true;
    }
    return false;
}

std::uint32_t min_vertex_cut_brute(const MaskGraph& g, int x, int y) {
    const std::uint32_t candidates =
        g.verts & ~(std::uint32_t{1} << x) & ~(std::uint32_t{1} << y);
    std::uint32_t best = candidates;
    int best_size = std::popcount(candidates) + 1;
    for (std::uint32_t s = candidates;; s = (s - 1) & candidates) {
        if (std::popcount(s) < best_size) {
            const std::uint32_t within = g.verts & ~s;
            if (!(mask_reach(g, x, within) & (std::uint32_t{1} << y))) {
                best = s;
                best_size = std::popcount(s);
            }
        }
        if (s == 0) break;
    }
    return best;
}

bool is_k_connected_brute(const MaskGraph& g, int k) {
    if (std::popcount(g.verts) < k + 1) return false;
    if (k <= 0) return true;
    for (std::uint32_t s = g.verts;; s = (s - 1) & g.verts) {
        if (std::popcount(s) <= k - 1) {
            const std::uint32_t rest = g.verts & ~s;
            if (rest && !mask_connected(g, rest)) return false;
        }
        if (s == 0) break;
    }
    return true;
}

namespace {

void collect_paths(const MaskGraph& g, int cur, int y, std::uint32_t visited,
                   std::uint32_t interior, std::vector<std::uint32_t>& paths) {
    for (std::uint32_t next = g.adj[cur] & g.verts & ~visited; next; next &= next - 1) {
        const int w = std::countr_zero(next);
        if (w == y) {
            paths.push_back(interior);
            continue;
        }
        collect_paths(g, w, y, visited | (std::uint32_t{1} << w),
                      interior | (std::uint32_t{1} << w), paths);
    }
}

int best_packing(const std::vector<std::uint32_t>& paths, std::size_t from,
                 std::uint32_t used, int depth) {
    int best = depth;
    for (std::size_t i = from; i < paths.size(); ++i)
        if (!(paths[i] & used))
            best = std::max(best,
                            best_packing(paths, i + 1, used | paths[i], depth + 1));
    return best;
}

} // namespace

int max_disjoint_paths_brute(const MaskGraph& g, int x, int y) {
    std::vector<std::uint32_t> paths;
    collect_paths(g, x, y, std::uint32_t{1} << x, 0, paths);
    return best_packing(paths, 0, 0, 0);
}

} // namespace cluco::oracle
