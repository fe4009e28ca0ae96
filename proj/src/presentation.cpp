#include "wlp/presentation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace wlp {

namespace {

void order_vars(PresTerm& t, int n) {
    if (t.a.code(n) > t.b.code(n)) std::swap(t.a, t.b);
}

std::pair<int, int> monomial_key(const PresTerm& t, int n) {
    return {t.a.code(n), t.b.code(n)};
}

std::string term_monomial(const PresTerm& t) {
    if (t.a.kind == t.b.kind && t.a.index == t.b.index) return t.a.name() + "^2";
    return t.a.name() + "*" + t.b.name();
}

} // namespace

std::string PresGenerator::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const PresTerm& t : terms) {
        if (t.coeff == 0) continue;
        long c = t.coeff;
        if (first) {
            if (c < 0) { os << '-'; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (c != 1) os << c << '*';
        os << term_monomial(t);
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

PresGenerator normalize_generator(PresGenerator g, int n) {
    for (PresTerm& t : g.terms) order_vars(t, n);
    std::sort(g.terms.begin(), g.terms.end(), [n](const PresTerm& s, const PresTerm& t) {
        return monomial_key(s, n) < monomial_key(t, n);
    });
    // combine duplicate monomials, drop zeros
    std::vector<PresTerm> combined;
    for (const PresTerm& t : g.terms) {
        if (!combined.empty() && monomial_key(combined.back(), n) == monomial_key(t, n))
            combined.back().coeff += t.coeff;
        else
            combined.push_back(t);
    }
    std::erase_if(combined, [](const PresTerm& t) { return t.coeff == 0; });
    if (!combined.empty() && combined.front().coeff < 0)
        for (PresTerm& t : combined) t.coeff = -t.coeff;
    g.terms = std::move(combined);
    return g;
}

std::string Presentation::to_text() const {
    std::ostringstream os;
    for (const PresGenerator& g : generators) os << g.to_string() << '\n';
    return os.str();
}

std::vector<std::string> Presentation::normalized_generators() const {
    std::vector<std::string> out;
    out.reserve(generators.size());
    for (const PresGenerator& g : generators)
        out.push_back(normalize_generator(g, n).to_string());
    std::sort(out.begin(), out.end());
    return out;
}

Presentation even_cycle_presentation(int a) {
    if (a < 2) throw std::invalid_argument("even_cycle_presentation: a must be >= 2");
    const int n = 2 * a;
    Presentation pres;
    pres.n = n;

    auto xv = [](int i) { return PresVar{PresVar::Kind::X, i}; };
    auto yv = [](int m) { return PresVar{PresVar::Kind::Y, m}; };
    auto monomial = [](PresVar u, PresVar w, long c = 1) {
        return PresGenerator{{PresTerm{c, u, w}}};
    };

    // cycle edges ordered by (max endpoint, min endpoint); this matches the
    // ordering of the canonical-module generators in the dual pairing
    std::vector<std::pair<int, int>> edges; // (min, max)
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(1, n);
    std::sort(edges.begin(), edges.end(), [](auto& e, auto& f) {
        return std::pair(e.second, e.first) < std::pair(f.second, f.first);
    });
    auto is_edge = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        return (v == u + 1) || (u == 1 && v == n);
    };

    // squares of the x variables
    for (int i = 1; i <= n; ++i) pres.generators.push_back(monomial(xv(i), xv(i)));
    // non-edge quadrics of the cycle
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (!is_edge(u, v)) pres.generators.push_back(monomial(xv(u), xv(v)));
    // all products of the y variables
    for (int j = 1; j <= n; ++j)
        for (int k = j; k <= n; ++k) pres.generators.push_back(monomial(yv(j), yv(k)));

    // mixed relations: x_j y_m dies when j is outside edge m
    for (int m = 1; m <= n; ++m) {
        auto [u, v] = edges[static_cast<std::size_t>(m - 1)];
        for (int j = 1; j <= n; ++j)
            if (j != u && j != v) pres.generators.push_back(monomial(xv(j), yv(m)));
    }
    // one binomial per vertex: both incident edges map onto the same dual
    // basis vector of degree 1
    for (int w = 1; w <= n; ++w) {
        std::vector<std::pair<int, int>> incident; // (edge index, other endpoint)
        for (int m = 1; m <= n; ++m) {
            auto [u, v] = edges[static_cast<std::size_t>(m - 1)];
            if (u == w) incident.emplace_back(m, v);
            else if (v == w) incident.emplace_back(m, u);
        }
        // a cycle vertex has exactly two incident edges
        auto [m1, j1] = incident[0];
        auto [m2, j2] = incident[1];
        PresGenerator g{{PresTerm{1, xv(j1), yv(m1)}, PresTerm{-1, xv(j2), yv(m2)}}};
        pres.generators.push_back(normalize_generator(std::move(g), n));
    }
    return pres;
}

} // namespace wlp
