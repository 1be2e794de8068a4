#pragma once

#include "cluco/connectivity.hpp"

#include <vector>

namespace cluco {

/// The circular clique-product construction with an apex: n copies of
/// K_p arranged in a ring with consecutive copies fully joined, plus an
/// apex vertex adjacent to the first vertex of each copy.  Witnesses
/// that the contraction degree bound cannot be lowered.
struct WatkinsInstance {
    int k = 0;                          // odd, ≥ 5
    int n = 0;                          // ring length, in [4, k-1]
    int p = 0;                          // (k-1)/2, clique size
    Graph graph;
    VertexId apex = -1;
    std::vector<VertexId> attachments;  // w_i, first vertex of each copy

    /// All identities of copy i (a contiguous block).
    VertexSet block(int i) const;
};

/// Deterministic layout: copy i occupies identities [i·p, (i+1)·p), w_i
/// is i·p, the apex is n·p.
WatkinsInstance watkins_graph(int k, int n);

/// Independent re-checks of every claim the construction rests on.
struct TightnessReport {
    bool vertex_count_ok = false;
    bool edge_count_ok = false;
    bool attachment_degrees_ok = false;   // deg(w_i) = 3(k-1)/2, apex degree n
    bool pair_connectivity_ok = false;    // min cut ≥ k off the apex
    bool no_good_separation_ok = false;   // no {apex}-good (k-1)-separation

    struct ContractionCheck {
        VertexId attachment = -1;
        bool not_k_connected = false;     // the contracted graph drops below k
        bool stated_cut_works = false;    // block(i) ∪ block(i+2) is a 2p-cut
        int fragment_count = 0;
        std::vector<int> fragment_sizes;
    };
    std::vector<ContractionCheck> contraction_checks;

    bool all_ok() const;
};

TightnessReport verify_tightness(const WatkinsInstance& inst);

} // namespace cluco
