#include "wlp/face.hpp"

#include <algorithm>
#include <sstream>

namespace wlp {

Face Face::from_unsorted(std::vector<int> labels) {
    std::sort(labels.begin(), labels.end());
    auto dup = std::adjacent_find(labels.begin(), labels.end());
    if (dup != labels.end())
        throw std::invalid_argument("Face: duplicate vertex label " + std::to_string(*dup));
    return Face(std::move(labels));
}

bool Face::contains(int v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Face::contains_face(const Face& other) const {
    return std::includes(verts_.begin(), verts_.end(),
                         other.verts_.begin(), other.verts_.end());
}

Face Face::with_vertex(int v) const {
    std::vector<int> out;
    out.reserve(verts_.size() + 1);
    auto pos = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (pos != verts_.end() && *pos == v)
        throw std::invalid_argument("Face::with_vertex: vertex already present");
    out.insert(out.end(), verts_.begin(), pos);
    out.push_back(v);
    out.insert(out.end(), pos, verts_.end());
    return Face(std::move(out));
}

Face Face::without_vertex(int v) const {
    std::vector<int> out;
    out.reserve(verts_.size() - 1);
    bool found = false;
    for (int u : verts_) {
        if (u == v) { found = true; continue; }
        out.push_back(u);
    }
    if (!found) throw std::invalid_argument("Face::without_vertex: vertex not present");
    return Face(std::move(out));
}

std::vector<int> Face::difference(const Face& other) const {
    std::vector<int> out;
    std::set_difference(verts_.begin(), verts_.end(),
                        other.verts_.begin(), other.verts_.end(),
                        std::back_inserter(out));
    return out;
}

std::string Face::to_string() const {
    if (verts_.empty()) return "{}";
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (i) os << ' ';
        os << verts_[i];
    }
    os << '}';
    return os.str();
}

} // namespace wlp
