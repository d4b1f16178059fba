#include "edgeideal/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace edgeideal {

std::string to_string(Family kind) {
    return kind == Family::Path ? "path" : "cycle";
}

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (int i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
    return out;
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n, edges, default_labels(n)) {}

Graph::Graph(int n, std::span<const Edge> edges, std::vector<std::string> labels)
    : adjacency_(n, 0), labels_(std::move(labels)) {
    if (n < 0 || n > kMaxVertices)
        fail(ErrorCode::LimitExceeded, "graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
    if (static_cast<int>(labels_.size()) != n)
        fail(ErrorCode::InvalidArgument, "label count does not match vertex count");
    {
        auto sorted = labels_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            fail(ErrorCode::InvalidArgument, "vertex labels must be distinct");
    }
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(ErrorCode::InvalidArgument,
                 "edge (" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ") out of range 1.." + std::to_string(n));
        if (u == v) fail(ErrorCode::InvalidArgument, "loop at vertex " + std::to_string(u + 1));
        adjacency_[u] |= Mask{1} << v;
        adjacency_[v] |= Mask{1} << u;
    }
}

int Graph::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

VertexSet Graph::closed_neighborhood(int v) const {
    if (v < 0 || v >= order()) fail(ErrorCode::InvalidArgument, "unknown vertex " + std::to_string(v + 1));
    return VertexSet(adjacency_[v] | (Mask{1} << v));
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u)
        for (int v = u + 1; v < order(); ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

int Graph::edge_count() const {
    int twice = 0;
    for (Mask a : adjacency_) twice += std::popcount(a);
    return twice / 2;
}

bool Graph::has_isolated_vertex() const {
    return std::any_of(adjacency_.begin(), adjacency_.end(), [](Mask a) { return a == 0; });
}

Graph build_graph(int n, std::span<const Edge> one_based_edges) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "graph needs at least one vertex");
    std::vector<Edge> edges;
    edges.reserve(one_based_edges.size());
    for (auto [u, v] : one_based_edges) edges.emplace_back(u - 1, v - 1);
    return Graph(n, edges);
}

Graph family(Family kind, int n) {
    if (kind == Family::Path && n < 1) fail(ErrorCode::InvalidArgument, "path needs n >= 1");
    if (kind == Family::Cycle && n < 3) fail(ErrorCode::InvalidArgument, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    if (kind == Family::Cycle) edges.emplace_back(n - 1, 0);
    return Graph(n, edges);
}

Graph induced_subgraph(const Graph& g, VertexSet w) {
    if (!w.subset_of(g.vertices())) fail(ErrorCode::InvalidArgument, "induced_subgraph: set is not inside the vertex set");
    const auto members = w.members();
    std::vector<std::string> labels;
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < members.size(); ++a) {
        labels.push_back(g.label(members[a]));
        for (std::size_t b = a + 1; b < members.size(); ++b)
            if (g.adjacent(members[a], members[b])) edges.emplace_back(int(a), int(b));
    }
    return Graph(int(members.size()), edges, std::move(labels));
}

Graph suspend(const Graph& g, VertexSet cover) {
    if (!cover.subset_of(g.vertices())) fail(ErrorCode::InvalidArgument, "suspend: set is not inside the vertex set");
    const int n = g.order();
    if (n + 1 > kMaxVertices) fail(ErrorCode::LimitExceeded, "suspension would exceed the vertex limit");
    auto edges = g.edges();
    for (int c : cover.members()) edges.emplace_back(c, n);
    auto labels = g.labels();
    labels.push_back("z");
    return Graph(n + 1, edges, std::move(labels));
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const int n1 = g1.order();
    auto edges = g1.edges();
    for (auto [u, v] : g2.edges()) edges.emplace_back(u + n1, v + n1);
    return Graph(n1 + g2.order(), edges);
}

bool is_independent(const Graph& g, VertexSet x) {
    for (int v : x.members())
        if (!(g.neighborhood(v) & x).empty()) return false;
    return true;
}

bool is_maximal_independent(const Graph& g, VertexSet x) {
    if (!is_independent(g, x)) return false;
    for (int u : (g.vertices() - x).members())
        if ((g.neighborhood(u) & x).empty()) return false;
    return true;
}

bool is_vertex_cover(const Graph& g, VertexSet c) {
    for (auto [u, v] : g.edges())
        if (!c.contains(u) && !c.contains(v)) return false;
    return true;
}

bool is_minimal_vertex_cover(const Graph& g, VertexSet c) {
    return c.subset_of(g.vertices()) && is_maximal_independent(g, g.vertices() - c);
}

namespace {

void check_enumeration_size(const Graph& g, int max_n) {
    const int cap = std::min(max_n, kMaxVertices);
    if (g.order() > cap)
        fail(ErrorCode::LimitExceeded,
             "enumeration over " + std::to_string(g.order()) + " vertices exceeds limit " + std::to_string(cap));
}

// Walks all subsets of the vertex set in increasing mask order.
template <typename Fn>
void for_each_subset(const Graph& g, Fn&& fn) {
    const std::uint64_t total = std::uint64_t{1} << g.order();
    for (std::uint64_t m = 0; m < total; ++m) fn(VertexSet(static_cast<Mask>(m)));
}

}  // namespace

std::vector<VertexSet> maximal_independent_sets(const Graph& g, int max_n) {
    check_enumeration_size(g, max_n);
    std::vector<VertexSet> out;
    for_each_subset(g, [&](VertexSet x) {
        if (is_maximal_independent(g, x)) out.push_back(x);
    });
    return out;
}

std::vector<VertexSet> minimal_vertex_covers(const Graph& g, int max_n) {
    std::vector<VertexSet> out;
    for (VertexSet x : maximal_independent_sets(g, max_n)) out.push_back(g.vertices() - x);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> vertex_covers(const Graph& g, int max_n) {
    check_enumeration_size(g, max_n);
    std::vector<VertexSet> out;
    for_each_subset(g, [&](VertexSet c) {
        if (is_vertex_cover(g, c)) out.push_back(c);
    });
    return out;
}

int independence_number(const Graph& g) {
    int best = 0;
    for (VertexSet x : maximal_independent_sets(g)) best = std::max(best, x.size());
    return best;
}

int min_vertex_cover_size(const Graph& g) {
    int best = g.order();
    for (VertexSet c : minimal_vertex_covers(g)) best = std::min(best, c.size());
    return best;
}

int big_height(const Graph& g) {
    int best = 0;
    for (VertexSet c : minimal_vertex_covers(g)) best = std::max(best, c.size());
    return best;
}

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int n = -1;
    int line_no = 0;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<long long> values;
        std::string token;
        while (fields >> token) {
            std::size_t used = 0;
            long long value = 0;
            try {
                value = std::stoll(token, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != token.size())
                fail(ErrorCode::InvalidArgument, "line " + std::to_string(line_no) + ": '" + token + "' is not an integer");
            values.push_back(value);
        }
        if (values.empty()) continue;
        if (n < 0) {
            if (values.size() != 1)
                fail(ErrorCode::InvalidArgument, "line " + std::to_string(line_no) + ": expected the vertex count");
            if (values[0] < 1 || values[0] > kMaxVertices)
                fail(ErrorCode::InvalidArgument, "vertex count " + std::to_string(values[0]) + " outside 1.." +
                                                     std::to_string(kMaxVertices));
            n = static_cast<int>(values[0]);
            continue;
        }
        if (values.size() != 2)
            fail(ErrorCode::InvalidArgument, "line " + std::to_string(line_no) + ": expected 'u v'");
        const auto u = values[0], v = values[1];
        if (u < 1 || u > n || v < 1 || v > n)
            fail(ErrorCode::InvalidArgument, "line " + std::to_string(line_no) + ": vertex out of range 1.." + std::to_string(n));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) fail(ErrorCode::InvalidArgument, "edge list is empty");
    return build_graph(n, edges);
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

Graph read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::Io, "cannot open '" + path + "'");
    return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

std::string format_set(const Graph& g, VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : s.members()) {
        if (!first) out += ',';
        out += v < g.order() ? g.label(v) : "?" + std::to_string(v + 1);
        first = false;
    }
    return out + "}";
}

}  // namespace edgeideal
