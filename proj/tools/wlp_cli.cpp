#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "wlp/algebra_model.hpp"
#include "wlp/builtins.hpp"
#include "wlp/facet_io.hpp"
#include "wlp/idealization.hpp"
#include "wlp/presentation.hpp"
#include "wlp/random_complex.hpp"
#include "wlp/rank.hpp"
#include "wlp/simplicial_complex.hpp"
#include "wlp/wlp_check.hpp"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct InputSpec {
    std::string file;
    std::string builtin_name;
};

wlp::SimplicialComplex resolve_input(const InputSpec& input) {
    if (!input.builtin_name.empty()) return wlp::builtin(input.builtin_name);
    if (!input.file.empty()) return wlp::load_facet_file(input.file);
    throw std::invalid_argument("no input: pass a facet file or --builtin NAME");
}

void add_input_options(CLI::App* cmd, InputSpec& input) {
    cmd->add_option("file", input.file, "facet file (optional 'n <count>' header; one facet per line)");
    cmd->add_option("--builtin", input.builtin_name,
                    "builtin complex: " + wlp::builtin_names());
}

std::string pseudomanifold_text(const wlp::PseudomanifoldStatus& status) {
    using Kind = wlp::PseudomanifoldStatus::Kind;
    switch (status.kind) {
        case Kind::WithoutBoundary: return "pseudomanifold without boundary";
        case Kind::WithBoundary:
            return "pseudomanifold with boundary (" +
                   std::to_string(status.boundary_ridges.size()) + " boundary ridges)";
        case Kind::NotPseudomanifold: return "not a pseudomanifold (" + status.reason + ")";
    }
    return "?";
}

int cmd_info(const InputSpec& input) {
    wlp::SimplicialComplex complex = resolve_input(input);
    wlp::AlgebraModel algebra{complex};

    std::cout << "complex: n=" << complex.vertex_count() << ", " << complex.facet_count()
              << " facet(s)\n";
    std::cout << "dim: " << complex.dim() << ", pure: " << (complex.is_pure() ? "yes" : "no")
              << "\n";
    std::cout << "f-vector: " << complex.f_vector().to_string() << "\n";
    std::cout << "hilbert series: " << algebra.hilbert_series_string() << "\n";
    wlp::SocleInfo socle = algebra.socle();
    std::cout << "socle degree: " << socle.degree << ", level: " << (socle.level ? "yes" : "no")
              << "\n";
    std::cout << "status: " << pseudomanifold_text(complex.pseudomanifold_status()) << "\n";

    wlp::Graph skeleton = complex.one_skeleton_graph();
    wlp::ComponentSummary comps = wlp::components(skeleton);
    std::cout << "1-skeleton: " << skeleton.vertex_count() << " vertices, "
              << skeleton.edge_count() << " edges, " << comps.components.size()
              << " component(s), " << comps.bipartite_count << " bipartite\n";
    if (complex.is_pure()) {
        wlp::Graph dual = complex.dual_graph();
        wlp::BipartiteCheck bip = wlp::is_bipartite(dual);
        std::cout << "dual graph: " << dual.vertex_count() << " vertices, " << dual.edge_count()
                  << " edges, " << (bip.bipartite ? "bipartite" : "not bipartite") << "\n";
    }
    return kExitHolds;
}

void print_degree_line(const wlp::DegreeCheck& check) {
    std::cout << "degree " << check.degree << ": " << check.dim_from << " -> " << check.dim_to
              << ", " << wlp::to_string(check.verdict) << " [" << wlp::to_string(check.method);
    if (check.rank) std::cout << ", rank " << *check.rank;
    std::cout << "]\n";
}

wlp::DegreeCheck criterion_check_for_degree(const wlp::SimplicialComplex& complex,
                                            const wlp::AlgebraModel& algebra, int degree) {
    if (degree == 1) {
        wlp::CriterionDeg1Result res = wlp::criterion_degree1(complex);
        wlp::DegreeCheck check;
        check.degree = 1;
        check.dim_from = algebra.dim(1);
        check.dim_to = algebra.dim(2);
        check.verdict = res.verdict;
        check.method = wlp::Method::CriterionDeg1;
        check.certificate = res.certificate;
        return check;
    }
    if (degree == complex.dim() && complex.pseudomanifold_status().is_pseudomanifold()) {
        wlp::CriterionTopResult res = wlp::criterion_top_degree(complex);
        wlp::DegreeCheck check;
        check.degree = degree;
        check.dim_from = algebra.dim(degree);
        check.dim_to = algebra.dim(degree + 1);
        check.verdict = res.verdict;
        check.method = wlp::Method::CriterionPseudomanifold;
        check.certificate = res.certificate;
        return check;
    }
    throw std::invalid_argument("no combinatorial criterion applies at degree " +
                                std::to_string(degree) +
                                " (criteria cover degree 1, and the top degree of pseudomanifolds)");
}

int cmd_check(const InputSpec& input, std::optional<int> degree, bool all,
              const std::string& method, bool as_json, bool verbose) {
    wlp::SimplicialComplex complex = resolve_input(input);
    wlp::AlgebraModel algebra{complex};
    const int top = algebra.socle_degree();

    if (!all && !degree) all = true;
    if (degree && (*degree < 0 || *degree > top))
        throw std::invalid_argument("degree out of range 0.." + std::to_string(top));

    wlp::WlpReport report;
    bool disagreement = false;

    if (method == "rank" || method == "both") {
        if (all) {
            report = wlp::wlp_full(algebra);
        } else {
            report.f_vector = complex.f_vector();
            wlp::SocleInfo socle = algebra.socle();
            report.socle_degree = socle.degree;
            report.level = socle.level;
            report.degrees.push_back(wlp::wlp_in_degree_by_rank(algebra, *degree));
            report.wlp = holds(report.degrees.front().verdict);
        }
    }

    std::vector<wlp::DegreeCheck> criterion_checks;
    const bool dim2_psd =
        complex.dim() == 2 && complex.pseudomanifold_status().is_pseudomanifold();
    if (method == "criterion" || method == "both") {
        if (all && dim2_psd) {
            // combinatorics decide every degree of a 2-dim pseudomanifold
            criterion_checks = wlp::check_dim2_pseudomanifold(complex).degrees;
        } else {
            std::vector<int> degrees_wanted;
            if (all) {
                if (complex.dim() >= 1) degrees_wanted.push_back(1);
                if (complex.dim() >= 2 && complex.pseudomanifold_status().is_pseudomanifold())
                    degrees_wanted.push_back(complex.dim());
                if (method == "criterion" && degrees_wanted.empty())
                    throw std::invalid_argument(
                        "no combinatorial criterion applies to this complex");
            } else {
                degrees_wanted.push_back(*degree);
            }
            for (int i : degrees_wanted)
                criterion_checks.push_back(criterion_check_for_degree(complex, algebra, i));
        }
    }

    if (method == "criterion") {
        report.f_vector = complex.f_vector();
        wlp::SocleInfo socle = algebra.socle();
        report.socle_degree = socle.degree;
        report.level = socle.level;
        report.degrees = criterion_checks;
        report.wlp = std::all_of(report.degrees.begin(), report.degrees.end(),
                                 [](const wlp::DegreeCheck& d) { return holds(d.verdict); });
    } else if (method == "both") {
        for (const wlp::DegreeCheck& crit : criterion_checks) {
            for (const wlp::DegreeCheck& ranked : report.degrees) {
                if (ranked.degree != crit.degree) continue;
                // propagated degrees carry method Trivial but stay comparable
                if (holds(ranked.verdict) != holds(crit.verdict)) {
                    disagreement = true;
                    std::cerr << "internal error: rank and criterion disagree at degree "
                              << crit.degree << " (" << wlp::to_string(ranked.verdict) << " vs "
                              << wlp::to_string(crit.verdict) << ")\n";
                }
            }
        }
    }

    if (as_json) {
        std::cout << report.to_json(complex).dump(2) << "\n";
    } else {
        std::cout << "f-vector: " << report.f_vector.to_string() << "\n";
        for (const wlp::DegreeCheck& check : report.degrees) print_degree_line(check);
        std::cout << "wlp: " << (report.wlp ? "holds" : "fails") << "\n";
        if (verbose && method != "criterion") {
            wlp::LinearForm ones = wlp::LinearForm::all_ones(algebra.variable_count());
            for (const wlp::DegreeCheck& check : report.degrees) {
                if (check.method != wlp::Method::Rank) continue;
                std::cout << "[mu_" << check.degree << "] =\n"
                          << algebra.multiplication_matrix(check.degree, ones).to_string();
            }
        }
    }

    if (disagreement) return kExitInternal;
    return report.wlp ? kExitHolds : kExitFails;
}

int cmd_idealize(const InputSpec& input, int trials, std::uint64_t seed, bool with_presentation) {
    wlp::SimplicialComplex complex = resolve_input(input);
    if (!complex.is_pure())
        throw std::invalid_argument("idealize: the base algebra must be level (pure complex)");
    if (with_presentation) {
        // the explicit quadric presentation is available for even cycles only
        const int n = complex.vertex_count();
        if (complex.dim() != 1 || n % 2 != 0 || complex != wlp::cycle_complex(n))
            throw std::invalid_argument(
                "idealize --presentation: input must be the even cycle cycle(2a)");
    }
    wlp::IdealizedAlgebra alg{wlp::AlgebraModel{complex}};

    std::cout << "base: n=" << complex.vertex_count() << ", socle degree "
              << alg.base_socle_degree() << ", level\n";
    std::cout << "idealization hilbert function: (";
    std::vector<long> h = alg.hilbert_function();
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << h[i];
    }
    std::cout << ")\n";
    std::cout << "seed: " << seed << ", trials: " << trials << "\n";

    bool all_hold = true;
    for (int i = 0; i <= alg.base_socle_degree(); ++i) {
        wlp::TildeDegreeResult res = wlp::wlp_tilde_degree(alg, i, trials, seed);
        all_hold = all_hold && res.holds;
        std::cout << "degree " << i << ": " << res.dim_from << " -> " << res.dim_to << ", "
                  << (res.holds ? "holds" : "fails") << " (max rank " << res.max_rank << ", "
                  << (res.confidence == wlp::TildeDegreeResult::Confidence::DeterministicByTheorem
                          ? "deterministic-by-theorem"
                          : "probabilistic")
                  << ")\n";
    }

    if (with_presentation) {
        const int n = complex.vertex_count();
        wlp::Presentation pres = wlp::even_cycle_presentation(n / 2);
        std::cout << "presentation ideal (" << pres.generators.size() << " generators) in k[x1.."
                  << "x" << n << ", y1..y" << n << "]:\n";
        std::cout << pres.to_text();
    }
    return all_hold ? kExitHolds : kExitFails;
}

int cmd_generate(int count, int max_vertices, std::uint64_t seed, const std::string& kind) {
    wlp::RandomComplexSource source(max_vertices, seed);
    std::cout << "# generated: seed=" << seed << " max-vertices=" << max_vertices << " kind="
              << kind << "\n";
    for (int k = 0; k < count; ++k) {
        wlp::SimplicialComplex complex = kind == "flag"      ? source.next_flag_complex()
                                         : kind == "closure" ? source.next_facet_closure()
                                                             : source.next();
        if (count > 1) std::cout << "# complex " << (k + 1) << "\n";
        std::cout << wlp::serialize_facets(complex);
    }
    return kExitHolds;
}

int cmd_validate(int count, int max_vertices, std::uint64_t seed) {
    wlp::RandomComplexSource source(max_vertices, seed);
    int degree_checks = 0;
    int socle_checks = 0;
    std::vector<std::string> failures;
    for (int k = 0; k < count; ++k) {
        wlp::SimplicialComplex complex = source.next();
        wlp::AgreementReport agreement = wlp::cross_validate(complex);
        degree_checks += agreement.degrees_checked;
        for (const std::string& d : agreement.disagreements)
            failures.push_back(agreement.complex_summary + ": " + d);
        if (complex.vertex_count() <= 64) {
            wlp::SocleBoundCheck socle = wlp::socle_clique_bound_check(complex);
            ++socle_checks;
            if (!socle.ok())
                failures.push_back(agreement.complex_summary + ": socle/clique bound violated");
        }
    }
    std::cout << "validate: seed=" << seed << " complexes=" << count
              << " degree-checks=" << degree_checks << " socle-checks=" << socle_checks
              << " disagreements=" << failures.size() << "\n";
    for (const std::string& f : failures) std::cout << "DISAGREEMENT " << f << "\n";
    return failures.empty() ? kExitHolds : kExitInternal;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weak Lefschetz Property analysis of Artinian quotients attached to "
                 "simplicial complexes"};
    app.require_subcommand(1);

    InputSpec info_input;
    CLI::App* info = app.add_subcommand("info", "summarize a complex and its algebra");
    add_input_options(info, info_input);

    InputSpec check_input;
    std::optional<int> check_degree;
    bool check_all = false;
    std::string check_method = "rank";
    bool check_json = false;
    bool check_verbose = false;
    CLI::App* check = app.add_subcommand("check", "decide WLP per degree");
    add_input_options(check, check_input);
    check->add_option("--degree", check_degree, "single degree to check");
    check->add_flag("--all", check_all, "check every degree (default)");
    check->add_option("--method", check_method, "rank | criterion | both")
        ->check(CLI::IsMember({"rank", "criterion", "both"}));
    check->add_flag("--json", check_json, "emit the JSON report");
    check->add_flag("--verbose", check_verbose, "also dump multiplication matrices");

    InputSpec idealize_input;
    int idealize_trials = 3;
    std::uint64_t idealize_seed = 12345;
    bool idealize_presentation = false;
    CLI::App* idealize =
        app.add_subcommand("idealize", "analyze the Gorenstein idealization of a level algebra");
    add_input_options(idealize, idealize_input);
    idealize->add_option("--trials", idealize_trials, "random linear forms per degree");
    idealize->add_option("--seed", idealize_seed, "random seed (logged)");
    idealize->add_flag("--presentation", idealize_presentation,
                       "print the quadric presentation (even cycles)");

    int generate_count = 1;
    int generate_max_vertices = 9;
    std::uint64_t generate_seed = 0;
    std::string generate_kind = "mixed";
    CLI::App* generate = app.add_subcommand("generate", "emit random complexes as facet files");
    generate->add_option("--count", generate_count, "number of complexes");
    generate->add_option("--max-vertices", generate_max_vertices, "vertex bound");
    generate->add_option("--seed", generate_seed, "random seed (logged)");
    generate->add_option("--kind", generate_kind, "flag | closure | mixed")
        ->check(CLI::IsMember({"flag", "closure", "mixed"}));

    int validate_count = 200;
    int validate_max_vertices = 9;
    std::uint64_t validate_seed = 7;
    CLI::App* validate =
        app.add_subcommand("validate", "cross-validate rank verdicts against the criteria");
    validate->add_option("--count", validate_count, "number of random complexes");
    validate->add_option("--max-vertices", validate_max_vertices, "vertex bound");
    validate->add_option("--seed", validate_seed, "random seed (logged)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (info->parsed()) return cmd_info(info_input);
        if (check->parsed())
            return cmd_check(check_input, check_degree, check_all, check_method, check_json,
                             check_verbose);
        if (idealize->parsed())
            return cmd_idealize(idealize_input, idealize_trials, idealize_seed,
                                idealize_presentation);
        if (generate->parsed())
            return cmd_generate(generate_count, generate_max_vertices, generate_seed,
                                generate_kind);
        if (validate->parsed())
            return cmd_validate(validate_count, validate_max_vertices, validate_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
