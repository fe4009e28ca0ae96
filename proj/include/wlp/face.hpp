#ifndef WLP_FACE_HPP
#define WLP_FACE_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace wlp {

/// A face of a simplicial complex: a strictly increasing sequence of
/// positive vertex labels. The empty sequence is the empty face (dimension -1).
class Face {
public:
    Face() = default;

    explicit Face(std::vector<int> vertices) : verts_(std::move(vertices)) {
        validate();
    }

    Face(std::initializer_list<int> vertices) : verts_(vertices) { validate(); }

    /// Builds a face from an unsorted label list; sorts and rejects duplicates.
    static Face from_unsorted(std::vector<int> labels);

    int dimension() const { return static_cast<int>(verts_.size()) - 1; }
    std::size_t size() const { return verts_.size(); }
    bool empty() const { return verts_.empty(); }

    const std::vector<int>& vertices() const { return verts_; }
    int operator[](std::size_t i) const { return verts_[i]; }

    bool contains(int v) const;

    /// True iff every vertex of `other` is a vertex of this face.
    bool contains_face(const Face& other) const;

    /// The face with vertex v added (v must not already be present).
    Face with_vertex(int v) const;

    /// The face with vertex v removed (v must be present).
    Face without_vertex(int v) const;

    /// Set difference this \ other, as a vertex list.
    std::vector<int> difference(const Face& other) const;

    int max_vertex() const { return verts_.empty() ? 0 : verts_.back(); }

    std::string to_string() const;

    auto operator<=>(const Face&) const = default;

private:
    void validate() const {
        for (std::size_t i = 0; i + 1 < verts_.size(); ++i)
            if (verts_[i] >= verts_[i + 1])
                throw std::invalid_argument("Face: vertex labels must be strictly increasing");
        if (!verts_.empty() && verts_.front() < 1)
            throw std::invalid_argument("Face: vertex labels must be positive");
    }

    std::vector<int> verts_;
};

} // namespace wlp

#endif
