#ifndef EDGEIDEAL_GRAPH_HPP
#define EDGEIDEAL_GRAPH_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edgeideal/common.hpp"

namespace edgeideal {

using Edge = std::pair<int, int>;

enum class Family { Path, Cycle };

std::string to_string(Family kind);

/// Finite simple graph on at most kMaxVertices labelled vertices.
/// Vertices are addressed by 0-based index; labels default to "x1".."xn".
/// Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Edges are 0-based index pairs; duplicates are collapsed.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::span<const Edge> edges, std::vector<std::string> labels);

    int order() const { return static_cast<int>(adjacency_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(v); }
    int index_of(const std::string& label) const;  // -1 if absent

    bool adjacent(int u, int v) const { return (adjacency_[u] >> v) & 1u; }
    VertexSet neighborhood(int v) const { return VertexSet(adjacency_[v]); }
    VertexSet closed_neighborhood(int v) const;
    int degree(int v) const { return std::popcount(adjacency_[v]); }

    VertexSet vertices() const { return VertexSet::full(order()); }
    std::vector<Edge> edges() const;  // (u, v) with u < v, sorted
    int edge_count() const;
    bool has_isolated_vertex() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<Mask> adjacency_;
    std::vector<std::string> labels_;
};

std::vector<std::string> default_labels(int n);

/// 1-based construction used by the text formats and the C API.
Graph build_graph(int n, std::span<const Edge> one_based_edges);

Graph family(Family kind, int n);
inline Graph path_graph(int n) { return family(Family::Path, n); }
inline Graph cycle_graph(int n) { return family(Family::Cycle, n); }

Graph induced_subgraph(const Graph& g, VertexSet w);

/// Adjoins a vertex "z" (always the last index) adjacent exactly to `cover`.
Graph suspend(const Graph& g, VertexSet cover);
inline Graph full_suspension(const Graph& g) { return suspend(g, g.vertices()); }

/// Vertices of g2 follow those of g1; labels are reset to x1..xn.
Graph disjoint_union(const Graph& g1, const Graph& g2);

bool is_independent(const Graph& g, VertexSet x);
bool is_maximal_independent(const Graph& g, VertexSet x);
bool is_vertex_cover(const Graph& g, VertexSet c);
bool is_minimal_vertex_cover(const Graph& g, VertexSet c);

/// Brute force over all subsets; sorted by mask value.
std::vector<VertexSet> maximal_independent_sets(const Graph& g, int max_n = kMaxVertices);
std::vector<VertexSet> minimal_vertex_covers(const Graph& g, int max_n = kMaxVertices);
std::vector<VertexSet> vertex_covers(const Graph& g, int max_n = kMaxVertices);

int independence_number(const Graph& g);
int min_vertex_cover_size(const Graph& g);
int big_height(const Graph& g);

/// Edge-list text: first line n, then "u v" per line (1-based), '#' comments.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph read_edge_list(const std::string& path);
std::string to_edge_list(const Graph& g);

/// Member labels in index order, e.g. "{x1,x4}".
std::string format_set(const Graph& g, VertexSet s);

}  // namespace edgeideal

#endif
