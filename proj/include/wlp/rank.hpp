#ifndef WLP_RANK_HPP
#define WLP_RANK_HPP

#include <cstdint>
#include <random>

#include "wlp/int_matrix.hpp"

namespace wlp {

/*
 * Exact rank of integer matrices over the rationals.
 *
 * Strategy: eliminate modulo a random 62-bit prime first. Rank mod p never
 * exceeds the rational rank, so a full modular rank certifies the exact
 * answer. Anything less falls back to fraction-free (Bareiss) elimination
 * over arbitrary-precision integers, where every division is checked to be
 * exact.
 *
 * Both eliminations come in two flavors: an OpenMP kernel that updates the
 * trailing rows in parallel (bit-identical to the serial result, since pivot
 * selection stays serial and row updates are independent), and a plain serial
 * reference used by the tests and the benchmark.
 */

struct RankResult {
    int rank = 0;
    enum class Method { Exact, ModularCertified } method = Method::Exact;

    const char* method_name() const {
        return method == Method::Exact ? "exact" : "modular-certified";
    }
};

/// Exact rank over the rationals (modular prefilter + Bareiss fallback).
RankResult rank(const IntMatrix& m);

/// Rank of m reduced mod p (p must be prime). Always <= rank over Q.
int rank_mod_p(const IntMatrix& m, std::uint64_t p);
int rank_mod_p_serial(const IntMatrix& m, std::uint64_t p);

/// Exact rank by fraction-free elimination over the integers.
int bareiss_rank(const IntMatrix& m);
int bareiss_rank_serial(const IntMatrix& m);

bool is_prime_u64(std::uint64_t n);
std::uint64_t random_prime_62(std::mt19937_64& rng);

} // namespace wlp

#endif
