#include "wlp/facet_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace wlp {

SimplicialComplex parse_facets(std::istream& in) {
    std::string line;
    int line_number = 0;
    int declared_n = -1;
    bool saw_header_candidate = false;
    std::vector<std::vector<int>> facets;
    int max_label = 0;

    while (std::getline(in, line)) {
        ++line_number;
        std::string trimmed = line;
        auto first = trimmed.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (trimmed[first] == '#') continue;

        std::istringstream fields(trimmed);
        if (!saw_header_candidate) {
            saw_header_candidate = true;
            std::string head;
            fields >> head;
            if (head == "n") {
                if (!(fields >> declared_n) || declared_n < 1)
                    throw FacetParseError(line_number, "bad vertex count in 'n' header");
                std::string rest;
                if (fields >> rest)
                    throw FacetParseError(line_number, "trailing tokens after 'n' header");
                continue;
            }
            fields.clear();
            fields.seekg(0);
        }

        std::vector<int> facet;
        long value = 0;
        while (fields >> value) {
            if (value < 1)
                throw FacetParseError(line_number, "vertex labels must be positive");
            facet.push_back(static_cast<int>(value));
            max_label = std::max(max_label, static_cast<int>(value));
        }
        if (!fields.eof())
            throw FacetParseError(line_number, "unexpected token (labels must be integers)");
        if (facet.empty()) throw FacetParseError(line_number, "empty facet");
        facets.push_back(std::move(facet));
    }

    if (facets.empty()) throw FacetParseError(line_number, "no facets in input");
    const int n = declared_n > 0 ? declared_n : max_label;
    if (declared_n > 0 && max_label > declared_n)
        throw FacetParseError(line_number,
                              "label " + std::to_string(max_label) + " exceeds declared n");
    try {
        return SimplicialComplex::from_facets(n, facets);
    } catch (const std::invalid_argument& e) {
        throw FacetParseError(line_number, e.what());
    }
}

SimplicialComplex load_facet_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open facet file: " + path);
    return parse_facets(in);
}

std::string serialize_facets(const SimplicialComplex& complex) {
    std::ostringstream os;
    os << "n " << complex.vertex_count() << '\n';
    for (const Face& f : complex.facets()) {
        const auto& vs = f.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i) os << ' ';
            os << vs[i];
        }
        os << '\n';
    }
    return os.str();
}

} // namespace wlp
