#pragma once

#include "cluco/graph.hpp"

#include <iosfwd>
#include <string>

namespace cluco {

/// Bidirectional table between internal identities and the 1-indexed
/// names a graph file uses.  Survives contraction: a merged vertex keeps
/// the surviving identity's external name.
class NameTable {
public:
    NameTable() = default;

    /// Identity mapping for internal ids 0..n-1 onto names 1..n.
    static NameTable dense(int n);

    int external(VertexId internal) const;
    VertexId internal(int external_name) const; // -1 when unknown
    int size() const { return static_cast<int>(to_external_.size()); }

private:
    std::vector<int> to_external_;
};

struct ParsedGraph {
    Graph graph;
    NameTable names;
};

/// Parses the text graph format:
///   c <comment>
///   p <num_vertices> <num_edges>
///   e <u> <v>          (1-indexed, one per edge)
/// Declared counts must match the body; loops and duplicate edges are
/// rejected.  Errors carry 1-based line numbers.
ParsedGraph parse_graph(std::istream& in);
ParsedGraph parse_graph_string(const std::string& text);
ParsedGraph load_graph_file(const std::string& path);

/// Canonical serialization: `p n m`, then edges ascending, single
/// spaces, LF line endings.  Vertices are renamed 1..n in ascending
/// identity order when no table is supplied.
std::string serialize_graph(const Graph& g);
std::string serialize_graph(const Graph& g, const NameTable& names);

/// FNV-1a 64-bit digest of the canonical serialization, as fixed-width hex.
std::string graph_digest(const Graph& g);

} // namespace cluco
