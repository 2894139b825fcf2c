#pragma once

#include "hfree/bitset.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hfree {

// Construction provenance of a vertex. Ids stay dense integers; where a
// vertex came from in a layered construction lives here.
enum class LabelKind { Base, Tower, BridgeSide, CliqueOrigin };

struct StructuredLabel {
    LabelKind kind = LabelKind::Base;
    int tower = 0; // 1-based tower index, 0 when absent
    int level = 0;
    int position = 0;

    std::string str() const;
    static StructuredLabel parse(const std::string& s);

    friend bool operator==(const StructuredLabel&, const StructuredLabel&) = default;
};

struct Edge {
    int u = 0;
    int v = 0; // u < v always

    friend bool operator==(const Edge&, const Edge&) = default;
    friend bool operator<(const Edge& a, const Edge& b)
    {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

using VertexSet = Bitset;

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what)
        , line(line)
    {
    }
    int line;
};

// Immutable simple undirected graph on vertices 0..n-1 with bit-matrix
// adjacency. All "mutations" return fresh graphs, so values can be shared
// freely across threads. Practical cap around 10^4 vertices (the adjacency
// matrix is n^2 bits); the exhaustive subset sweeps elsewhere cap at n <= 30.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return m_; }

    bool has_edge(int u, int v) const
    {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[u].test(v);
    }

    int degree(int v) const
    {
        check_vertex(v);
        return adj_[v].count();
    }

    const Bitset& neighbors(int v) const
    {
        check_vertex(v);
        return adj_[v];
    }

    // lexicographically sorted
    std::vector<Edge> edges() const;

    const std::optional<std::vector<StructuredLabel>>& labels() const { return labels_; }
    Graph with_labels(std::vector<StructuredLabel> labels) const;

    Graph induced(const VertexSet& s) const;
    Graph with_edge(int u, int v) const;
    Graph without_edges(const std::vector<Edge>& del) const;

    VertexSet full_set() const { return Bitset::full(n_); }

private:
    void check_vertex(int v) const
    {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range [0,"
                + std::to_string(n_) + ")");
    }

    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<Bitset> adj_;
    std::optional<std::vector<StructuredLabel>> labels_;
};

Graph complete_graph(int m);
Graph complete_multipartite(const std::vector<int>& sizes);
Graph cycle_graph(int n);
Graph path_graph(int n);

// Edge-list text format: first line is the vertex count, then one "u v" per
// line with 0 <= u < v < n, '#' comments allowed, LF endings, edges written
// in lexicographic order.
Graph read_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

// Label sidecar: one "vertex_id<TAB>label" line per vertex.
std::string write_labels(const Graph& g);
std::vector<StructuredLabel> read_labels(const std::string& text, int n);

} // namespace hfree
