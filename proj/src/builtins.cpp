#include "wlp/builtins.hpp"

#include <stdexcept>

namespace wlp {

SimplicialComplex cycle_complex(int m) {
    if (m < 3) throw std::invalid_argument("cycle(m): m must be >= 3");
    std::vector<std::vector<int>> facets;
    for (int i = 1; i < m; ++i) facets.push_back({i, i + 1});
    facets.push_back({1, m});
    return SimplicialComplex::from_facets(m, facets);
}

SimplicialComplex path_independence_complex(int m) {
    if (m < 1) throw std::invalid_argument("path_independence(m): m must be >= 1");
    std::vector<std::pair<int, int>> path_edges;
    for (int i = 1; i < m; ++i) path_edges.emplace_back(i, i + 1);
    return independence_complex(Graph(m, std::move(path_edges)));
}

SimplicialComplex octahedron() {
    // poles 1 and 6 over the equator square 2-3-4-5
    return SimplicialComplex::from_facets(6, {{1, 2, 3},
                                              {1, 3, 4},
                                              {1, 4, 5},
                                              {1, 2, 5},
                                              {6, 2, 3},
                                              {6, 3, 4},
                                              {6, 4, 5},
                                              {6, 2, 5}});
}

SimplicialComplex tetrahedron_boundary() {
    return SimplicialComplex::from_facets(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
}

SimplicialComplex torus_7() {
    // cyclic triangulation: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7
    std::vector<std::vector<int>> facets;
    auto v = [](int k) { return (k - 1) % 7 + 1; };
    for (int i = 1; i <= 7; ++i) {
        facets.push_back({v(i), v(i + 1), v(i + 3)});
        facets.push_back({v(i), v(i + 2), v(i + 3)});
    }
    return SimplicialComplex::from_facets(7, facets);
}

SimplicialComplex example_2_1() {
    return SimplicialComplex::from_facets(5, {{1, 2, 3}, {1, 3, 4}, {4, 5}});
}

namespace {

// parses "name(arg)" into name and arg
bool split_arity(const std::string& s, std::string& name, int& arg) {
    auto open = s.find('(');
    if (open == std::string::npos) return false;
    if (s.back() != ')') throw std::invalid_argument("builtin: malformed name '" + s + "'");
    name = s.substr(0, open);
    std::string inner = s.substr(open + 1, s.size() - open - 2);
    try {
        std::size_t used = 0;
        arg = std::stoi(inner, &used);
        if (used != inner.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("builtin: bad arity in '" + s + "'");
    }
    return true;
}

} // namespace

SimplicialComplex builtin(const std::string& name) {
    std::string base;
    int arg = 0;
    if (split_arity(name, base, arg)) {
        if (base == "cycle") return cycle_complex(arg);
        if (base == "path_independence") return path_independence_complex(arg);
        throw std::invalid_argument("builtin: unknown name '" + name + "'");
    }
    if (name == "octahedron") return octahedron();
    if (name == "tetrahedron_boundary") return tetrahedron_boundary();
    if (name == "torus_7") return torus_7();
    if (name == "example_2_1") return example_2_1();
    throw std::invalid_argument("builtin: unknown name '" + name + "'");
}

std::string builtin_names() {
    return "cycle(m), path_independence(m), octahedron, tetrahedron_boundary, torus_7, example_2_1";
}

} // namespace wlp
