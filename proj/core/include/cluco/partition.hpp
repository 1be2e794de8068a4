#pragma once

#include "cluco/contraction.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace cluco {

using Color = int;

/// Clique-minor parameter t plus the user-supplied capacity standing in
/// for the nonconstructive size threshold; the certified monochromatic
/// component bound is capacity + 2t - 1.
struct CapacityParams {
    int t = 1;
    int capacity = 1;

    int component_bound() const { return capacity + 2 * t - 1; }
};

/// Number of colours the top-level entry point draws from: ⌈(7t-3)/2⌉.
inline int palette_size(int t) { return (7 * t - 2) / 2; }

/// Per-vertex colour menus; precoloured vertices carry singleton lists.
struct ListAssignment {
    std::map<VertexId, std::vector<Color>> lists;
    VertexSet precolored;

    /// Every vertex gets {1..palette}, nothing precoloured.
    static ListAssignment uniform(const Graph& g, int palette);

    const std::vector<Color>& at(VertexId v) const;
};

/// Throws InvalidLists naming the offending vertex unless: lists are
/// total on V(g) and nonempty, z = lists.precolored ⊆ V(g) with singleton
/// lists, |z| ≤ 2t-1, and 2·|L(w)| ≥ 7t-3 off z.
void validate_lists(const Graph& g, const CapacityParams& params, const VertexSet& z,
                    const ListAssignment& lists);

struct ClusteredColoring {
    std::map<VertexId, Color> assignment;
    int component_bound = 0;
};

/// Terminal outcome of the recursion when no case applies: the current
/// subgraph admits a contraction plan to a (t+1)-connected minor of
/// order at least |V(subgraph)| - |z|.
struct CaseIVWitness {
    Graph subgraph;
    VertexSet z;
    ContractionPlan plan;
    Graph minor;
    int minor_order = 0;
};

using ColoringOutcome = std::variant<ClusteredColoring, CaseIVWitness>;

/// Outcome of re-checking conditions C1-C3 against a colouring; carries
/// a witness for the first violated condition.
struct ColoringVerdict {
    enum class Status {
        ok,
        missing_vertex,        // colouring not total on V
        color_outside_list,    // C1
        component_too_big,     // C2
        precolored_conflict,   // C3
    };
    Status status = Status::ok;
    std::string detail;
    VertexId vertex = -1;               // missing_vertex / color_outside_list
    std::vector<VertexId> component;    // component_too_big
    std::optional<Edge> edge;           // precolored_conflict

    explicit operator bool() const { return status == Status::ok; }
};

ColoringVerdict verify_coloring(const Graph& g, const ClusteredColoring& coloring,
                                const ListAssignment& lists, const VertexSet& z,
                                int bound);

/// The oriented split a Z-good t-separation induces on the precoloured
/// set: p = z-b, q = z∩a∩b, r = z-a, x = (a∩b)-z, with a and b swapped
/// when needed so that |p|+|q|+|x| ≤ 2t-1.
struct Case3Split {
    VertexSet p, q, r, x;
    Separation oriented;
};

Case3Split case3_split(const Graph& g, const Separation& sep, const VertexSet& z,
                       int t);

/// The clustered-colouring recursion.  Returns either a colouring
/// satisfying C1-C3 with component bound capacity + 2t - 1 (re-checked
/// post hoc before returning) or a Case IV witness.
ColoringOutcome clustered_color(const Graph& g, const CapacityParams& params,
                                const VertexSet& z, const ListAssignment& lists);

/// Entry point with z = ∅ and uniform lists {1..⌈(7t-3)/2⌉}.
ColoringOutcome theorem_main(const Graph& g, int t, int capacity);

} // namespace cluco
