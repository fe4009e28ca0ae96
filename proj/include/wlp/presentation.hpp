#ifndef WLP_PRESENTATION_HPP
#define WLP_PRESENTATION_HPP

#include <compare>
#include <string>
#include <vector>

namespace wlp {

/// Variable of the presentation ring k[x_1..x_n, y_1..y_n]; order x's first.
struct PresVar {
    enum class Kind { X, Y } kind = Kind::X;
    int index = 1; // 1-based

    int code(int n) const { return (kind == Kind::X ? 0 : n) + index; }
    std::string name() const {
        return (kind == Kind::X ? "x" : "y") + std::to_string(index);
    }
};

/// A degree-2 monomial with integer coefficient: coeff * a * b (a <= b).
struct PresTerm {
    long coeff = 1;
    PresVar a, b;
};

struct PresGenerator {
    std::vector<PresTerm> terms;
    std::string to_string() const;
};

/// Degree-2 generator list of an ideal in k[x_1..x_n, y_1..y_n].
struct Presentation {
    int n = 0;
    std::vector<PresGenerator> generators;

    /// One generator per line, ready for an external computer-algebra system.
    std::string to_text() const;

    /// Generators normalized for comparison: terms sorted by monomial,
    /// leading coefficient +1, rendered as strings and sorted.
    std::vector<std::string> normalized_generators() const;
};

PresGenerator normalize_generator(PresGenerator g, int n);

/*
 * Quadric presentation of the idealization of the even-cycle algebra on
 * n = 2a vertices: the squares of the x's, the non-edge quadrics of the
 * n-cycle, every y product, and the mixed x.y relations read off the dual
 * pairing. The y variables follow the cycle edges ordered by
 * (max endpoint, min endpoint); with that indexing the mixed relations are
 * the monomials x_j*y_m for j outside edge m and one binomial per vertex
 * tying its two incident edges together.
 */
Presentation even_cycle_presentation(int a);

} // namespace wlp

#endif
