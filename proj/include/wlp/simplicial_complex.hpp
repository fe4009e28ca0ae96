#ifndef WLP_SIMPLICIAL_COMPLEX_HPP
#define WLP_SIMPLICIAL_COMPLEX_HPP

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "wlp/face.hpp"
#include "wlp/graph.hpp"

namespace wlp {

/// f-vector (f_{-1}, f_0, ..., f_dim); f_{-1} = 1 for the empty face.
struct FVector {
    std::vector<long> entries;

    long operator[](int dim) const {
        // indexed by face dimension, so entries[dim + 1]
        int idx = dim + 1;
        if (idx < 0 || idx >= static_cast<int>(entries.size())) return 0;
        return entries[static_cast<std::size_t>(idx)];
    }

    bool operator==(const FVector&) const = default;
    std::string to_string() const;
};

struct PseudomanifoldStatus {
    enum class Kind { NotPseudomanifold, WithBoundary, WithoutBoundary };
    Kind kind = Kind::NotPseudomanifold;
    /// Ridges lying in exactly one facet (nonempty iff WithBoundary).
    std::vector<Face> boundary_ridges;
    /// Human-readable reason when NotPseudomanifold.
    std::string reason;

    bool is_pseudomanifold() const { return kind != Kind::NotPseudomanifold; }
};

/// Abstract simplicial complex on vertices 1..n, stored as the antichain of
/// its facets. Face enumeration per dimension is memoized on demand; the
/// object is immutable after construction and safe to share across threads.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Complex generated by the given faces. Dominated faces are absorbed.
    /// Throws std::invalid_argument on an empty generator list, an empty
    /// generator, n < 1, or a label outside 1..n.
    static SimplicialComplex from_facets(int n, const std::vector<std::vector<int>>& generators);

    SimplicialComplex(const SimplicialComplex& other);
    SimplicialComplex& operator=(const SimplicialComplex& other);
    SimplicialComplex(SimplicialComplex&&) = default;
    SimplicialComplex& operator=(SimplicialComplex&&) = default;

    int vertex_count() const { return n_; }
    /// Facets in lexicographic order.
    const std::vector<Face>& facets() const { return facets_; }
    int facet_count() const { return static_cast<int>(facets_.size()); }

    /// max facet dimension; -1 for the void complex (no facets).
    int dim() const { return dim_; }
    bool is_pure() const;

    bool contains(const Face& f) const;

    /// All k-faces in lexicographic order. k = -1 yields the empty face;
    /// k outside [-1, dim] yields an empty set.
    const std::vector<Face>& faces_of_dim(int k) const;

    FVector f_vector() const;

    /// Subcomplex of faces of dimension <= d.
    SimplicialComplex skeleton(int d) const;

    /// Graph on vertices 1..n with an edge per 1-face. Vertices in no facet
    /// appear as isolated graph vertices.
    Graph one_skeleton_graph() const;

    /// Vertices that actually occur as 0-faces, ascending.
    std::vector<int> zero_face_vertices() const;

    /// (dim-1)-faces of a pure complex. Throws std::invalid_argument if not pure.
    const std::vector<Face>& ridges() const;

    /// Facet-adjacency graph: vertex i+1 is facets()[i]; edges join facets
    /// sharing a ridge. Requires purity.
    Graph dual_graph() const;

    PseudomanifoldStatus pseudomanifold_status() const;

    /// Order complex of the poset of nonempty faces: one new vertex per face
    /// (labels follow the lexicographic face order), facets = maximal chains.
    SimplicialComplex barycentric_subdivision() const;

    bool operator==(const SimplicialComplex& other) const {
        return n_ == other.n_ && facets_ == other.facets_;
    }

    std::string to_string() const;

private:
    SimplicialComplex(int n, std::vector<Face> facet_antichain);

    int n_ = 0;
    int dim_ = -1;
    std::vector<Face> facets_;

    mutable std::mutex cache_mutex_;
    mutable std::map<int, std::vector<Face>> face_cache_;
};

/// Faces = independent sets of g; returned via its facet antichain
/// (the maximal independent sets).
SimplicialComplex independence_complex(const Graph& g);

} // namespace wlp

#endif
