#ifndef WLP_RANDOM_COMPLEX_HPP
#define WLP_RANDOM_COMPLEX_HPP

#include <cstdint>
#include <random>

#include "wlp/graph.hpp"
#include "wlp/simplicial_complex.hpp"

namespace wlp {

/// Erdos-Renyi graph G(m, p) with a seeded generator.
Graph random_graph(int m, double p, std::mt19937_64& rng);

/// Seeded stream of small test complexes, alternating between independence
/// complexes of random graphs and downward closures of random facet sets.
class RandomComplexSource {
public:
    RandomComplexSource(int max_vertices, std::uint64_t seed)
        : max_vertices_(max_vertices), rng_(seed) {}

    /// Alternates between the two kinds.
    SimplicialComplex next();

    SimplicialComplex next_flag_complex();
    SimplicialComplex next_facet_closure();

private:
    int max_vertices_;
    std::mt19937_64 rng_;
    std::uint64_t counter_ = 0;
};

} // namespace wlp

#endif
