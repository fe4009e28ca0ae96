#include "wlp/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

#include "wlp/int_matrix.hpp"

namespace wlp {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : n_(vertex_count) {
    if (n_ < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("Graph: loop edge");
        if (u > v) std::swap(u, v);
        if (u < 1 || v > n_) throw std::invalid_argument("Graph: edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adj_.assign(static_cast<std::size_t>(n_) + 1, {});
    for (auto [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

int Graph::degree(int v) const {
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

namespace {

// BFS 2-coloring of the component containing root. Returns false on an odd
// cycle; in that case clash_u/clash_v hold the offending same-color edge.
bool two_color_component(const Graph& g, int root, std::vector<int>& color,
                         std::vector<int>& parent, std::vector<int>& comp_vertices,
                         int& clash_u, int& clash_v) {
    std::deque<int> queue{root};
    color[static_cast<std::size_t>(root)] = 0;
    parent[static_cast<std::size_t>(root)] = 0;
    comp_vertices.push_back(root);
    bool ok = true;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : g.neighbors(u)) {
            auto sv = static_cast<std::size_t>(v);
            if (color[sv] < 0) {
                color[sv] = 1 - color[static_cast<std::size_t>(u)];
                parent[sv] = u;
                comp_vertices.push_back(v);
                queue.push_back(v);
            } else if (ok && color[sv] == color[static_cast<std::size_t>(u)]) {
                ok = false;
                clash_u = u;
                clash_v = v;
            }
        }
    }
    return ok;
}

} // namespace

ComponentSummary components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n) + 1, -1);
    std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
    ComponentSummary summary;
    for (int root = 1; root <= n; ++root) {
        if (color[static_cast<std::size_t>(root)] >= 0) continue;
        Component comp;
        int cu = 0, cv = 0;
        comp.bipartite = two_color_component(g, root, color, parent, comp.vertices, cu, cv);
        std::sort(comp.vertices.begin(), comp.vertices.end());
        long degree_sum = 0;
        for (int v : comp.vertices) degree_sum += g.degree(v);
        comp.edge_count = static_cast<int>(degree_sum / 2);
        comp.is_tree = comp.edge_count == static_cast<int>(comp.vertices.size()) - 1;
        if (comp.bipartite) ++summary.bipartite_count;
        summary.components.push_back(std::move(comp));
    }
    return summary;
}

BipartiteCheck is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n) + 1, -1);
    std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
    BipartiteCheck result;
    for (int root = 1; root <= n; ++root) {
        if (color[static_cast<std::size_t>(root)] >= 0) continue;
        std::vector<int> verts;
        int cu = 0, cv = 0;
        if (!two_color_component(g, root, color, parent, verts, cu, cv)) {
            // Closed odd walk: cu -> root, root -> cv along BFS parents, then
            // the clashing edge cv-cu. Same colors mean equal depth parity, so
            // the total length is odd. The root is shared by both chains and
            // enters once.
            std::vector<int> up;
            for (int x = cu; x != 0; x = parent[static_cast<std::size_t>(x)]) up.push_back(x);
            std::vector<int> down;
            for (int x = cv; x != 0; x = parent[static_cast<std::size_t>(x)]) down.push_back(x);
            std::reverse(down.begin(), down.end());
            result.odd_closed_walk = std::move(up);
            result.odd_closed_walk.insert(result.odd_closed_walk.end(),
                                          down.begin() + 1, down.end());
            result.bipartite = false;
            result.coloring.clear();
            return result;
        }
    }
    result.bipartite = true;
    result.coloring = std::move(color);
    return result;
}

bool is_eulerian(const Graph& g) {
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (g.degree(v) % 2 != 0) return false;
    return true;
}

IntMatrix incidence_matrix(const Graph& g) {
    IntMatrix m(g.vertex_count(), g.edge_count());
    for (int j = 0; j < g.edge_count(); ++j) {
        auto [u, v] = g.edges()[static_cast<std::size_t>(j)];
        m.at(u - 1, j) = 1;
        m.at(v - 1, j) = 1;
    }
    return m;
}

namespace {

// Bitset branch-and-bound maximum clique (Tomita-style greedy coloring bound)
// for graphs with at most 64 vertices.
class CliqueSolver {
public:
    explicit CliqueSolver(const Graph& g) : n_(g.vertex_count()) {
        adj_.assign(static_cast<std::size_t>(n_), 0);
        for (auto [u, v] : g.edges()) {
            adj_[static_cast<std::size_t>(u - 1)] |= uint64_t{1} << (v - 1);
            adj_[static_cast<std::size_t>(v - 1)] |= uint64_t{1} << (u - 1);
        }
    }

    int solve() {
        if (n_ == 0) return 0;
        best_ = 1;
        uint64_t all = (n_ == 64) ? ~uint64_t{0} : ((uint64_t{1} << n_) - 1);
        expand(all, 0);
        return best_;
    }

private:
    void expand(uint64_t candidates, int size) {
        if (candidates == 0) {
            best_ = std::max(best_, size);
            return;
        }
        // Greedy coloring: vertices sharing a color class are pairwise
        // nonadjacent, so clique size within `candidates` <= #colors.
        std::vector<int> order;
        std::vector<int> bound;
        uint64_t uncolored = candidates;
        int colors = 0;
        while (uncolored) {
            ++colors;
            uint64_t cls = uncolored;
            while (cls) {
                int v = std::countr_zero(cls);
                order.push_back(v);
                bound.push_back(size + colors);
                uncolored &= ~(uint64_t{1} << v);
                cls &= ~(uint64_t{1} << v);
                cls &= ~adj_[static_cast<std::size_t>(v)];
            }
        }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (bound[static_cast<std::size_t>(i)] <= best_) return;
            int v = order[static_cast<std::size_t>(i)];
            uint64_t next = candidates & adj_[static_cast<std::size_t>(v)];
            if (size + 1 > best_) best_ = size + 1;
            expand(next, size + 1);
            candidates &= ~(uint64_t{1} << v);
        }
    }

    int n_;
    std::vector<uint64_t> adj_;
    int best_ = 0;
};

} // namespace

int clique_number(const Graph& g, int max_vertices) {
    if (g.vertex_count() == 0) return 0;
    if (g.vertex_count() > std::min(max_vertices, 64))
        throw std::invalid_argument("clique_number: graph exceeds exact-search bound");
    return CliqueSolver(g).solve();
}

} // namespace wlp
