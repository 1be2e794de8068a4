#include "cluco/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace cluco {

NameTable NameTable::dense(int n) {
    NameTable t;
    t.to_external_.resize(n);
    for (int i = 0; i < n; ++i) t.to_external_[i] = i + 1;
    return t;
}

int NameTable::external(VertexId internal) const {
    if (internal < 0 || internal >= static_cast<int>(to_external_.size()))
        throw UnknownVertex("identity " + std::to_string(internal) +
                            " has no external name");
    return to_external_[internal];
}

VertexId NameTable::internal(int external_name) const {
    for (int i = 0; i < static_cast<int>(to_external_.size()); ++i)
        if (to_external_[i] == external_name) return i;
    return -1;
}

ParsedGraph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    int declared_vertices = -1, declared_edges = -1, seen_edges = 0;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        if (tag == "c") continue;
        if (tag == "p") {
            if (declared_vertices >= 0)
                throw ParseError(lineno, "duplicate problem line");
            std::string extra;
            if (!(fields >> declared_vertices >> declared_edges) ||
                (fields >> extra))
                throw ParseError(lineno, "problem line must read `p <vertices> <edges>`");
            if (declared_vertices < 0 || declared_edges < 0)
                throw ParseError(lineno, "counts must be nonnegative");
            continue;
        }
        if (tag == "e") {
            if (declared_vertices < 0)
                throw ParseError(lineno, "edge before the problem line");
            int u = 0, v = 0;
            std::string extra;
            if (!(fields >> u >> v) || (fields >> extra))
                throw ParseError(lineno, "edge line must read `e <u> <v>`");
            if (u < 1 || u > declared_vertices || v < 1 || v > declared_vertices)
                throw ParseError(lineno, "vertex name out of range 1.." +
                                             std::to_string(declared_vertices));
            if (u == v) throw ParseError(lineno, "loop edges are not allowed");
            const Edge e(u - 1, v - 1);
            for (const Edge& prev : edges)
                if (prev == e) throw ParseError(lineno, "duplicate edge");
            edges.push_back(e);
            ++seen_edges;
            continue;
        }
        throw ParseError(lineno, "unrecognised line tag `" + tag + "`");
    }
    if (declared_vertices < 0) throw ParseError(lineno, "missing problem line");
    if (seen_edges != declared_edges)
        throw ParseError(lineno, "declared " + std::to_string(declared_edges) +
                                     " edges but found " + std::to_string(seen_edges));
    return {Graph::from_edge_list(declared_vertices, edges),
            NameTable::dense(declared_vertices)};
}

ParsedGraph parse_graph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

ParsedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file: " + path);
    return parse_graph(in);
}

std::string serialize_graph(const Graph& g) {
    // Rename ascending identities to 1..n.
    std::map<VertexId, int> name;
    int next = 1;
    g.vertices().for_each([&](VertexId v) { name[v] = next++; });
    std::ostringstream out;
    out << "p " << g.num_vertices() << " " << g.num_edges() << "\n";
    for (const Edge& e : g.edge_list()) {
        int a = name[e.u], b = name[e.v];
        if (a > b) std::swap(a, b);
        out << "e " << a << " " << b << "\n";
    }
    return out.str();
}

std::string serialize_graph(const Graph& g, const NameTable& names) {
    std::vector<std::pair<int, int>> renamed;
    for (const Edge& e : g.edge_list()) {
        int a = names.external(e.u), b = names.external(e.v);
        if (a > b) std::swap(a, b);
        renamed.emplace_back(a, b);
    }
    std::sort(renamed.begin(), renamed.end());
    std::ostringstream out;
    out << "p " << g.num_vertices() << " " << g.num_edges() << "\n";
    for (auto [a, b] : renamed) out << "e " << a << " " << b << "\n";
    return out.str();
}

std::string graph_digest(const Graph& g) {
    const std::string text = serialize_graph(g);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

} // namespace cluco
