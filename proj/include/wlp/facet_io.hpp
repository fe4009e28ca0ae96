#ifndef WLP_FACET_IO_HPP
#define WLP_FACET_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "wlp/simplicial_complex.hpp"

namespace wlp {

struct FacetParseError : std::runtime_error {
    FacetParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_number(line) {}
    int line_number;
};

/*
 * Facet file format: optional first line "n <count>"; every following
 * nonempty line that does not start with '#' lists one facet as
 * whitespace-separated positive integers. Without the header, n is the
 * largest label seen.
 */
SimplicialComplex parse_facets(std::istream& in);
SimplicialComplex load_facet_file(const std::string& path);

std::string serialize_facets(const SimplicialComplex& complex);

} // namespace wlp

#endif
