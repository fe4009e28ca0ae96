#include "wlp/random_complex.hpp"

#include <algorithm>

namespace wlp {

Graph random_graph(int m, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= m; ++u)
        for (int v = u + 1; v <= m; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(m, std::move(edges));
}

SimplicialComplex RandomComplexSource::next() {
    return (counter_++ % 2 == 0) ? next_flag_complex() : next_facet_closure();
}

SimplicialComplex RandomComplexSource::next_flag_complex() {
    static constexpr double kDensities[] = {0.3, 0.5, 0.7};
    std::uniform_int_distribution<int> vertex_dist(4, max_vertices_);
    const int m = vertex_dist(rng_);
    const double p = kDensities[counter_ % 3];
    Graph g = random_graph(m, p, rng_);
    if (g.edge_count() == 0) // edgeless graphs make the full simplex; retry denser
        g = random_graph(m, 0.5, rng_);
    return independence_complex(g);
}

SimplicialComplex RandomComplexSource::next_facet_closure() {
    std::uniform_int_distribution<int> vertex_dist(3, max_vertices_);
    const int m = vertex_dist(rng_);
    std::uniform_int_distribution<int> count_dist(1, std::max(2, m));
    std::uniform_int_distribution<int> size_dist(1, std::min(4, m));
    std::uniform_int_distribution<int> label_dist(1, m);
    const int facet_count = count_dist(rng_);
    std::vector<std::vector<int>> facets;
    for (int k = 0; k < facet_count; ++k) {
        const int size = size_dist(rng_);
        std::vector<int> verts;
        while (static_cast<int>(verts.size()) < size) {
            int v = label_dist(rng_);
            if (std::find(verts.begin(), verts.end(), v) == verts.end()) verts.push_back(v);
        }
        facets.push_back(std::move(verts));
    }
    return SimplicialComplex::from_facets(m, facets);
}

} // namespace wlp
