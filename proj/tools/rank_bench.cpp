// Benchmark: serial vs OpenMP elimination kernels on random dense matrices
// and on the multiplication matrices of subdivided surfaces. Results of the
// two kernels are asserted equal on every case.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wlp/algebra_model.hpp"
#include "wlp/builtins.hpp"
#include "wlp/int_matrix.hpp"
#include "wlp/rank.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn) {
    auto t0 = clock_type::now();
    fn();
    auto t1 = clock_type::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

wlp::IntMatrix random_matrix(int rows, int cols, int magnitude, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(-magnitude, magnitude);
    wlp::IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
    return m;
}

void run_case(const std::string& name, const wlp::IntMatrix& m, std::uint64_t prime) {
    int serial_mod = 0, parallel_mod = 0;
    int serial_bareiss = 0, parallel_bareiss = 0;
    double t_serial_mod = time_ms([&] { serial_mod = wlp::rank_mod_p_serial(m, prime); });
    double t_parallel_mod = time_ms([&] { parallel_mod = wlp::rank_mod_p(m, prime); });
    double t_serial_bareiss = time_ms([&] { serial_bareiss = wlp::bareiss_rank_serial(m); });
    double t_parallel_bareiss = time_ms([&] { parallel_bareiss = wlp::bareiss_rank(m); });
    if (serial_mod != parallel_mod || serial_bareiss != parallel_bareiss) {
        std::cerr << "MISMATCH in " << name << ": serial/parallel kernels disagree\n";
        std::exit(1);
    }
    if (serial_bareiss < serial_mod) {
        std::cerr << "MISMATCH in " << name << ": modular rank exceeds exact rank\n";
        std::exit(1);
    }
    std::printf("%-28s %4dx%-4d rank=%-4d mod-p %8.2f / %8.2f ms   bareiss %9.2f / %9.2f ms\n",
                name.c_str(), m.rows(), m.cols(), serial_bareiss, t_serial_mod, t_parallel_mod,
                t_serial_bareiss, t_parallel_bareiss);
}

} // namespace

int main(int argc, char** argv) {
    const bool quick = argc > 1 && std::string(argv[1]) == "--quick";
#ifdef _OPENMP
    std::printf("openmp threads: %d (serial / parallel columns)\n", omp_get_max_threads());
#else
    std::printf("built without openmp; both columns run serial code\n");
#endif

    std::mt19937_64 rng(2024);
    std::mt19937_64 prime_rng(99);
    const std::uint64_t prime = wlp::random_prime_62(prime_rng);

    std::vector<std::pair<int, int>> sizes =
        quick ? std::vector<std::pair<int, int>>{{24, 24}, {48, 64}}
              : std::vector<std::pair<int, int>>{{24, 24}, {64, 64}, {96, 128}, {160, 160}};
    for (auto [r, c] : sizes)
        run_case("random +-1", random_matrix(r, c, 1, rng), prime);
    if (!quick)
        run_case("random 20-bit", random_matrix(48, 48, 1 << 20, rng), prime);

    // degree-2 multiplication matrices of subdivided closed surfaces: the
    // shape of input the rank engine sees in production
    std::vector<std::pair<std::string, wlp::SimplicialComplex>> complexes;
    complexes.emplace_back("bary(octahedron)", wlp::octahedron().barycentric_subdivision());
    if (!quick)
        complexes.emplace_back("bary^2(tetrahedron)",
                               wlp::tetrahedron_boundary().barycentric_subdivision()
                                   .barycentric_subdivision());
    for (const auto& [name, complex] : complexes) {
        wlp::AlgebraModel a{complex};
        wlp::IntMatrix m =
            a.multiplication_matrix(2, wlp::LinearForm::all_ones(a.variable_count()));
        run_case("mu_2 " + name, m, prime);
    }
    return 0;
}
