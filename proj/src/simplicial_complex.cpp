#include "wlp/simplicial_complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wlp {

std::string FVector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) os << ", ";
        os << entries[i];
    }
    os << ')';
    return os.str();
}

namespace {

// Keep only inclusion-maximal faces, sorted lexicographically.
std::vector<Face> antichain(std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Face> maximal;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < faces.size() && !dominated; ++j)
            if (i != j && faces[j].size() > faces[i].size() && faces[j].contains_face(faces[i]))
                dominated = true;
        if (!dominated) maximal.push_back(faces[i]);
    }
    return maximal;
}

} // namespace

SimplicialComplex::SimplicialComplex(int n, std::vector<Face> facet_antichain)
    : n_(n), facets_(std::move(facet_antichain)) {
    for (const Face& f : facets_) dim_ = std::max(dim_, f.dimension());
}

SimplicialComplex::SimplicialComplex(const SimplicialComplex& other)
    : n_(other.n_), dim_(other.dim_), facets_(other.facets_) {
    std::lock_guard<std::mutex> lock(other.cache_mutex_);
    face_cache_ = other.face_cache_;
}

SimplicialComplex& SimplicialComplex::operator=(const SimplicialComplex& other) {
    if (this == &other) return *this;
    std::map<int, std::vector<Face>> cache_copy;
    {
        std::lock_guard<std::mutex> lock(other.cache_mutex_);
        cache_copy = other.face_cache_;
    }
    std::lock_guard<std::mutex> lock(cache_mutex_);
    n_ = other.n_;
    dim_ = other.dim_;
    facets_ = other.facets_;
    face_cache_ = std::move(cache_copy);
    return *this;
}

SimplicialComplex SimplicialComplex::from_facets(int n,
                                                 const std::vector<std::vector<int>>& generators) {
    if (n < 1) throw std::invalid_argument("from_facets: vertex count must be >= 1");
    if (generators.empty()) throw std::invalid_argument("from_facets: empty facet list");
    std::vector<Face> faces;
    faces.reserve(generators.size());
    for (const auto& g : generators) {
        if (g.empty()) throw std::invalid_argument("from_facets: empty facet");
        Face f = Face::from_unsorted(g);
        if (f.max_vertex() > n)
            throw std::invalid_argument("from_facets: vertex label " +
                                        std::to_string(f.max_vertex()) + " exceeds n=" +
                                        std::to_string(n));
        faces.push_back(std::move(f));
    }
    return SimplicialComplex(n, antichain(std::move(faces)));
}

bool SimplicialComplex::is_pure() const {
    for (const Face& f : facets_)
        if (f.dimension() != dim_) return false;
    return true;
}

bool SimplicialComplex::contains(const Face& f) const {
    if (f.empty()) return true;
    for (const Face& facet : facets_)
        if (facet.contains_face(f)) return true;
    return false;
}

const std::vector<Face>& SimplicialComplex::faces_of_dim(int k) const {
    static const std::vector<Face> kEmpty;
    if (k < -1 || k > dim_) return kEmpty;

    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = face_cache_.find(k);
    if (it != face_cache_.end()) return it->second;

    std::vector<Face> result;
    if (k == -1) {
        result.push_back(Face{});
    } else {
        std::set<Face> seen;
        const std::size_t want = static_cast<std::size_t>(k) + 1;
        std::vector<int> idx(want);
        for (const Face& facet : facets_) {
            if (facet.size() < want) continue;
            // enumerate all (k+1)-subsets of the facet
            for (std::size_t i = 0; i < want; ++i) idx[i] = static_cast<int>(i);
            for (;;) {
                std::vector<int> verts(want);
                for (std::size_t i = 0; i < want; ++i)
                    verts[i] = facet[static_cast<std::size_t>(idx[i])];
                seen.insert(Face(std::move(verts)));
                int pos = static_cast<int>(want) - 1;
                while (pos >= 0 &&
                       idx[static_cast<std::size_t>(pos)] ==
                           static_cast<int>(facet.size() - want) + pos)
                    --pos;
                if (pos < 0) break;
                ++idx[static_cast<std::size_t>(pos)];
                for (std::size_t i = static_cast<std::size_t>(pos) + 1; i < want; ++i)
                    idx[i] = idx[i - 1] + 1;
            }
        }
        result.assign(seen.begin(), seen.end());
    }
    auto [pos, inserted] = face_cache_.emplace(k, std::move(result));
    (void)inserted;
    return pos->second;
}

FVector SimplicialComplex::f_vector() const {
    FVector f;
    f.entries.reserve(static_cast<std::size_t>(dim_) + 2);
    for (int k = -1; k <= dim_; ++k)
        f.entries.push_back(static_cast<long>(faces_of_dim(k).size()));
    return f;
}

SimplicialComplex SimplicialComplex::skeleton(int d) const {
    if (d < 0) throw std::invalid_argument("skeleton: dimension must be >= 0");
    if (d >= dim_) return *this;
    std::vector<Face> gens = faces_of_dim(d);
    for (const Face& f : facets_)
        if (f.dimension() < d) gens.push_back(f);
    return SimplicialComplex(n_, antichain(std::move(gens)));
}

Graph SimplicialComplex::one_skeleton_graph() const {
    std::vector<std::pair<int, int>> edges;
    for (const Face& e : faces_of_dim(1)) edges.emplace_back(e[0], e[1]);
    return Graph(n_, std::move(edges));
}

std::vector<int> SimplicialComplex::zero_face_vertices() const {
    std::vector<int> verts;
    for (const Face& v : faces_of_dim(0)) verts.push_back(v[0]);
    return verts;
}

const std::vector<Face>& SimplicialComplex::ridges() const {
    if (!is_pure()) throw std::invalid_argument("ridges: complex is not pure");
    return faces_of_dim(dim_ - 1);
}

Graph SimplicialComplex::dual_graph() const {
    if (!is_pure()) throw std::invalid_argument("dual_graph: complex is not pure");
    const int m = facet_count();
    std::vector<std::pair<int, int>> edges;
    for (const Face& ridge : ridges()) {
        std::vector<int> owners;
        for (int i = 0; i < m; ++i)
            if (facets_[static_cast<std::size_t>(i)].contains_face(ridge)) owners.push_back(i);
        for (std::size_t a = 0; a < owners.size(); ++a)
            for (std::size_t b = a + 1; b < owners.size(); ++b)
                edges.emplace_back(owners[a] + 1, owners[b] + 1);
    }
    return Graph(m, std::move(edges));
}

PseudomanifoldStatus SimplicialComplex::pseudomanifold_status() const {
    PseudomanifoldStatus status;
    if (facets_.empty()) {
        status.reason = "no facets";
        return status;
    }
    if (!is_pure()) {
        status.reason = "not pure";
        return status;
    }
    std::vector<Face> boundary;
    for (const Face& ridge : faces_of_dim(dim_ - 1)) {
        int owners = 0;
        for (const Face& facet : facets_)
            if (facet.contains_face(ridge)) ++owners;
        if (owners > 2) {
            status.reason = "ridge " + ridge.to_string() + " lies in " +
                            std::to_string(owners) + " facets";
            return status;
        }
        if (owners == 1) boundary.push_back(ridge);
    }
    // facet chain-connectivity == connectivity of the dual graph
    if (facet_count() > 1) {
        ComponentSummary summary = components(dual_graph());
        if (summary.components.size() > 1) {
            status.reason = "dual graph is disconnected";
            return status;
        }
    }
    if (boundary.empty()) {
        status.kind = PseudomanifoldStatus::Kind::WithoutBoundary;
    } else {
        status.kind = PseudomanifoldStatus::Kind::WithBoundary;
        status.boundary_ridges = std::move(boundary);
    }
    return status;
}

SimplicialComplex SimplicialComplex::barycentric_subdivision() const {
    // label nonempty faces in lexicographic order
    std::vector<Face> all_faces;
    for (int k = 0; k <= dim_; ++k) {
        const auto& fs = faces_of_dim(k);
        all_faces.insert(all_faces.end(), fs.begin(), fs.end());
    }
    std::sort(all_faces.begin(), all_faces.end());
    std::map<Face, int> label;
    for (std::size_t i = 0; i < all_faces.size(); ++i)
        label.emplace(all_faces[i], static_cast<int>(i) + 1);

    // maximal chains = saturated flags inside each facet, one per permutation
    std::vector<std::vector<int>> chains;
    for (const Face& facet : facets_) {
        std::vector<int> perm = facet.vertices();
        std::sort(perm.begin(), perm.end());
        do {
            std::vector<int> chain;
            std::vector<int> prefix;
            for (int v : perm) {
                prefix.push_back(v);
                std::vector<int> sorted = prefix;
                std::sort(sorted.begin(), sorted.end());
                chain.push_back(label.at(Face(std::move(sorted))));
            }
            chains.push_back(std::move(chain));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return from_facets(static_cast<int>(all_faces.size()), chains);
}

std::string SimplicialComplex::to_string() const {
    std::ostringstream os;
    os << "n=" << n_ << " <";
    for (std::size_t i = 0; i < facets_.size(); ++i) {
        if (i) os << ", ";
        os << facets_[i].to_string();
    }
    os << '>';
    return os.str();
}

SimplicialComplex independence_complex(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("independence_complex: empty graph");

    // Bron-Kerbosch (with pivoting) on the complement graph: maximal
    // independent sets of g are maximal cliques of the complement.
    std::vector<std::vector<char>> comp(static_cast<std::size_t>(n) + 1,
                                        std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v)
            comp[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
                (u != v && !g.has_edge(u, v)) ? 1 : 0;

    std::vector<std::vector<int>> maximal_sets;
    std::vector<int> current;
    auto bron_kerbosch = [&](auto&& self, std::vector<int> candidates,
                             std::vector<int> excluded) -> void {
        if (candidates.empty() && excluded.empty()) {
            maximal_sets.push_back(current);
            return;
        }
        // pivot: candidate or excluded vertex with most candidate neighbors
        int pivot = -1, best = -1;
        for (const auto& pool : {candidates, excluded})
            for (int u : pool) {
                int cnt = 0;
                for (int v : candidates)
                    if (comp[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) ++cnt;
                if (cnt > best) { best = cnt; pivot = u; }
            }
        std::vector<int> branch;
        for (int v : candidates)
            if (!comp[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(v)])
                branch.push_back(v);
        for (int v : branch) {
            std::vector<int> next_cand, next_excl;
            for (int u : candidates)
                if (comp[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)])
                    next_cand.push_back(u);
            for (int u : excluded)
                if (comp[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)])
                    next_excl.push_back(u);
            current.push_back(v);
            self(self, std::move(next_cand), std::move(next_excl));
            current.pop_back();
            candidates.erase(std::find(candidates.begin(), candidates.end(), v));
            excluded.push_back(v);
        }
    };
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) all[static_cast<std::size_t>(v - 1)] = v;
    bron_kerbosch(bron_kerbosch, std::move(all), {});

    return SimplicialComplex::from_facets(n, maximal_sets);
}

} // namespace wlp
