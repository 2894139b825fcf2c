#include "hfree/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace hfree {

std::string StructuredLabel::str() const
{
    switch (kind) {
    case LabelKind::Base:
        return "B" + std::to_string(position);
    case LabelKind::Tower:
        return "T" + std::to_string(tower) + "." + std::to_string(level) + "."
            + std::to_string(position);
    case LabelKind::BridgeSide:
        return "W" + std::to_string(position) + "." + std::to_string(tower);
    case LabelKind::CliqueOrigin:
        return "K" + std::to_string(tower);
    }
    return "?";
}

StructuredLabel StructuredLabel::parse(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("empty label");
    StructuredLabel l;
    auto num = [](const std::string& part) {
        int v = 0;
        auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc() || p != part.data() + part.size())
            throw std::invalid_argument("bad label field '" + part + "'");
        return v;
    };
    char head = s[0];
    std::string rest = s.substr(1);
    if (head == 'B') {
        l.kind = LabelKind::Base;
        l.position = num(rest);
        return l;
    }
    if (head == 'K') {
        l.kind = LabelKind::CliqueOrigin;
        l.tower = num(rest);
        return l;
    }
    auto d1 = rest.find('.');
    if (head == 'W') {
        if (d1 == std::string::npos)
            throw std::invalid_argument("bad label '" + s + "'");
        l.kind = LabelKind::BridgeSide;
        l.position = num(rest.substr(0, d1));
        l.tower = num(rest.substr(d1 + 1));
        return l;
    }
    if (head == 'T') {
        auto d2 = rest.find('.', d1 == std::string::npos ? 0 : d1 + 1);
        if (d1 == std::string::npos || d2 == std::string::npos)
            throw std::invalid_argument("bad label '" + s + "'");
        l.kind = LabelKind::Tower;
        l.tower = num(rest.substr(0, d1));
        l.level = num(rest.substr(d1 + 1, d2 - d1 - 1));
        l.position = num(rest.substr(d2 + 1));
        return l;
    }
    throw std::invalid_argument("bad label '" + s + "'");
}

Graph::Graph(int n, const std::vector<Edge>& edges)
    : n_(n)
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    adj_.assign(n_, Bitset(n_));
    for (const Edge& e : edges) {
        check_vertex(e.u);
        check_vertex(e.v);
        if (e.u == e.v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        if (!adj_[e.u].test(e.v)) {
            adj_[e.u].set(e.v);
            adj_[e.v].set(e.u);
            ++m_;
        }
    }
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (v > u)
                out.push_back({u, v});
        });
    return out;
}

Graph Graph::with_labels(std::vector<StructuredLabel> labels) const
{
    if (static_cast<int>(labels.size()) != n_)
        throw std::invalid_argument("label count does not match vertex count");
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
}

Graph Graph::induced(const VertexSet& s) const
{
    if (s.universe() != n_)
        throw std::invalid_argument("vertex set universe does not match graph");
    std::vector<int> keep = s.to_vector();
    std::vector<int> newid(n_, -1);
    for (std::size_t i = 0; i < keep.size(); ++i)
        newid[keep[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (int u : keep)
        adj_[u].for_each([&](int v) {
            if (v > u && s.test(v))
                es.push_back({newid[u], newid[v]});
        });
    Graph g(static_cast<int>(keep.size()), es);
    if (labels_) {
        std::vector<StructuredLabel> ls;
        ls.reserve(keep.size());
        for (int u : keep)
            ls.push_back((*labels_)[u]);
        g.labels_ = std::move(ls);
    }
    return g;
}

Graph Graph::with_edge(int u, int v) const
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("self-loop");
    Graph g = *this;
    if (!g.adj_[u].test(v)) {
        g.adj_[u].set(v);
        g.adj_[v].set(u);
        ++g.m_;
    }
    return g;
}

Graph Graph::without_edges(const std::vector<Edge>& del) const
{
    Graph g = *this;
    for (const Edge& e : del) {
        check_vertex(e.u);
        check_vertex(e.v);
        if (g.adj_[e.u].test(e.v)) {
            g.adj_[e.u].reset(e.v);
            g.adj_[e.v].reset(e.u);
            --g.m_;
        }
    }
    return g;
}

Graph complete_graph(int m)
{
    if (m < 1)
        throw std::invalid_argument("complete_graph: need m >= 1");
    std::vector<Edge> es;
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v)
            es.push_back({u, v});
    return Graph(m, es);
}

Graph complete_multipartite(const std::vector<int>& sizes)
{
    if (sizes.empty())
        throw std::invalid_argument("complete_multipartite: need at least one part");
    int n = 0;
    std::vector<int> part;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 1)
            throw std::invalid_argument("complete_multipartite: part sizes must be positive");
        for (int j = 0; j < sizes[i]; ++j)
            part.push_back(static_cast<int>(i));
        n += sizes[i];
    }
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part[u] != part[v])
                es.push_back({u, v});
    return Graph(n, es);
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw std::invalid_argument("cycle_graph: need n >= 3");
    std::vector<Edge> es;
    for (int u = 0; u + 1 < n; ++u)
        es.push_back({u, u + 1});
    es.push_back({0, n - 1});
    return Graph(n, es);
}

Graph path_graph(int n)
{
    if (n < 1)
        throw std::invalid_argument("path_graph: need n >= 1");
    std::vector<Edge> es;
    for (int u = 0; u + 1 < n; ++u)
        es.push_back({u, u + 1});
    return Graph(n, es);
}

namespace {

    bool parse_int(const std::string& tok, long long& out)
    {
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
        return ec == std::errc() && p == tok.data() + tok.size();
    }

} // namespace

Graph read_edge_list(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long long n = -1;
    std::vector<Edge> es;
    std::vector<Bitset> have;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#')
            continue;
        std::istringstream ls(line);
        if (n < 0) {
            std::string tok;
            ls >> tok;
            std::string extra;
            if (!parse_int(tok, n) || n < 0 || (ls >> extra))
                throw ParseError(lineno, "expected vertex count");
            have.assign(n, Bitset(static_cast<int>(n)));
            continue;
        }
        std::string a, b, extra;
        ls >> a >> b;
        long long u, v;
        if (!(parse_int(a, u) && parse_int(b, v)) || (ls >> extra))
            throw ParseError(lineno, "expected 'u v'");
        if (u == v)
            throw ParseError(lineno, "self-loop '" + line + "'");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(lineno, "vertex id out of range [0," + std::to_string(n) + ")");
        if (u > v)
            throw ParseError(lineno, "edges must be written with u < v");
        if (have[u].test(static_cast<int>(v)))
            throw ParseError(lineno, "duplicate edge " + a + " " + b);
        have[u].set(static_cast<int>(v));
        es.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    if (n < 0)
        throw ParseError(lineno, "missing vertex count line");
    return Graph(static_cast<int>(n), es);
}

std::string write_edge_list(const Graph& g)
{
    std::string out = std::to_string(g.vertex_count()) + "\n";
    for (const Edge& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

std::string write_labels(const Graph& g)
{
    if (!g.labels())
        throw std::invalid_argument("graph carries no labels");
    std::string out;
    const auto& ls = *g.labels();
    for (int v = 0; v < g.vertex_count(); ++v)
        out += std::to_string(v) + "\t" + ls[v].str() + "\n";
    return out;
}

std::vector<StructuredLabel> read_labels(const std::string& text, int n)
{
    std::vector<StructuredLabel> out(n);
    std::vector<bool> got(n, false);
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#')
            continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw ParseError(lineno, "expected 'vertex<TAB>label'");
        long long v;
        if (!parse_int(line.substr(0, tab), v) || v < 0 || v >= n)
            throw ParseError(lineno, "bad vertex id");
        if (got[v])
            throw ParseError(lineno, "duplicate label for vertex " + std::to_string(v));
        got[v] = true;
        try {
            out[v] = StructuredLabel::parse(line.substr(tab + 1));
        } catch (const std::invalid_argument& e) {
            throw ParseError(lineno, e.what());
        }
    }
    for (int v = 0; v < n; ++v)
        if (!got[v])
            throw ParseError(lineno, "missing label for vertex " + std::to_string(v));
    return out;
}

} // namespace hfree
