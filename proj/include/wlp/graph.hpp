#ifndef WLP_GRAPH_HPP
#define WLP_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace wlp {

class IntMatrix;

/// Undirected simple graph on vertices 1..n. Edges are stored as (min,max)
/// pairs in lexicographic order; no loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(int u, int v) const;
    int degree(int v) const;

    /// Neighbors of v in ascending order.
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_; // 1-based; adj_[0] unused
};

struct Component {
    std::vector<int> vertices;
    int edge_count = 0;
    bool bipartite = false;
    /// connected and |E| = |V| - 1
    bool is_tree = false;
};

struct ComponentSummary {
    std::vector<Component> components;
    int bipartite_count = 0; // b_G
};

/// Connected components with per-component bipartiteness via 2-coloring.
/// Isolated vertices form bipartite (tree) components.
ComponentSummary components(const Graph& g);

struct BipartiteCheck {
    bool bipartite = false;
    /// For bipartite graphs: color (0/1) per vertex, index 1..n; entry -1 unused.
    std::vector<int> coloring;
    /// For nonbipartite graphs: a closed walk of odd length, as a vertex list
    /// whose consecutive entries (and last-to-first) are edges.
    std::vector<int> odd_closed_walk;
};

BipartiteCheck is_bipartite(const Graph& g);

/// True iff every vertex has even degree.
bool is_eulerian(const Graph& g);

/// |V| x |E| 0/1 incidence matrix; rows follow vertex order 1..n, columns
/// follow the lexicographic edge order.
IntMatrix incidence_matrix(const Graph& g);

/// Exact clique number via branch-and-bound with a greedy-coloring bound.
/// Throws std::invalid_argument when vertex_count exceeds max_vertices.
int clique_number(const Graph& g, int max_vertices = 64);

} // namespace wlp

#endif
