#include "wlp/rank.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wlp {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod(u64 base, u64 exp, u64 p) {
    u64 acc = 1 % p;
    while (exp) {
        if (exp & 1) acc = mulmod(acc, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return acc;
}

u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

// Reduce an mpz entry into [0, p).
u64 reduce_mod(const mpz_class& x, u64 p) {
    mpz_class r;
    mpz_class pm(static_cast<unsigned long>(p));
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), pm.get_mpz_t());
    return mpz_get_ui(r.get_mpz_t());
}

std::vector<u64> reduce_matrix(const IntMatrix& m, u64 p) {
    std::vector<u64> a(static_cast<std::size_t>(m.rows()) * static_cast<std::size_t>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            a[static_cast<std::size_t>(i) * m.cols() + j] = reduce_mod(m.at(i, j), p);
    return a;
}

template <bool Parallel>
int rank_mod_p_impl(const IntMatrix& m, u64 p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("rank_mod_p: p is not prime");
    const int rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    std::vector<u64> a = reduce_matrix(m, p);
    auto at = [&](int i, int j) -> u64& {
        return a[static_cast<std::size_t>(i) * cols + j];
    };

    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (at(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = c; j < cols; ++j) std::swap(at(piv, j), at(r, j));
        const u64 inv = powmod(at(r, c), p - 2, p);
        if constexpr (Parallel) {
#pragma omp parallel for schedule(static)
            for (int i = r + 1; i < rows; ++i) {
                const u64 f = mulmod(at(i, c), inv, p);
                if (f == 0) continue;
                for (int j = c; j < cols; ++j)
                    at(i, j) = submod(at(i, j), mulmod(f, at(r, j), p), p);
            }
        } else {
            for (int i = r + 1; i < rows; ++i) {
                const u64 f = mulmod(at(i, c), inv, p);
                if (f == 0) continue;
                for (int j = c; j < cols; ++j)
                    at(i, j) = submod(at(i, j), mulmod(f, at(r, j), p), p);
            }
        }
        ++r;
    }
    return r;
}

// q = num / den, throwing if the division is not exact. Bareiss guarantees
// exactness (Sylvester identity); a nonzero remainder means a broken matrix
// update, so it is a hard error rather than a rounding concern.
void checked_exact_div(mpz_class& q, const mpz_class& num, const mpz_class& den,
                       mpz_class& rem) {
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem != 0) throw std::logic_error("bareiss: non-exact division");
}

template <bool Parallel>
int bareiss_rank_impl(const IntMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    std::vector<mpz_class> a(m.entries());
    auto at = [&](int i, int j) -> mpz_class& {
        return a[static_cast<std::size_t>(i) * cols + j];
    };

    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // Pivot on the smallest nonzero magnitude to limit entry growth.
        int piv = -1;
        for (int i = r; i < rows; ++i) {
            if (at(i, c) == 0) continue;
            if (piv < 0 || mpz_cmpabs(at(i, c).get_mpz_t(), at(piv, c).get_mpz_t()) < 0)
                piv = i;
        }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = c; j < cols; ++j) mpz_swap(at(piv, j).get_mpz_t(), at(r, j).get_mpz_t());

        const mpz_class& pivot = at(r, c);
        if constexpr (Parallel) {
            std::atomic<bool> bad{false};
#pragma omp parallel
            {
                mpz_class num, rem;
#pragma omp for schedule(static)
                for (int i = r + 1; i < rows; ++i) {
                    if (bad.load(std::memory_order_relaxed)) continue;
                    for (int j = c + 1; j < cols; ++j) {
                        num = at(i, j) * pivot - at(i, c) * at(r, j);
                        mpz_tdiv_qr(at(i, j).get_mpz_t(), rem.get_mpz_t(),
                                    num.get_mpz_t(), prev.get_mpz_t());
                        if (rem != 0) {
                            bad.store(true, std::memory_order_relaxed);
                            break;
                        }
                    }
                    at(i, c) = 0;
                }
            }
            if (bad.load()) throw std::logic_error("bareiss: non-exact division");
        } else {
            mpz_class num, rem;
            for (int i = r + 1; i < rows; ++i) {
                for (int j = c + 1; j < cols; ++j) {
                    num = at(i, j) * pivot - at(i, c) * at(r, j);
                    checked_exact_div(at(i, j), num, prev, rem);
                }
                at(i, c) = 0;
            }
        }
        prev = pivot;
        ++r;
    }
    return r;
}

} // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Deterministic Miller-Rabin base set for 64-bit inputs.
    for (u64 base : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(base % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

u64 random_prime_62(std::mt19937_64& rng) {
    for (;;) {
        u64 candidate = (rng() | (u64{1} << 61) | 1) & ((u64{1} << 62) - 1);
        if (is_prime_u64(candidate)) return candidate;
    }
}

int rank_mod_p(const IntMatrix& m, u64 p) { return rank_mod_p_impl<true>(m, p); }
int rank_mod_p_serial(const IntMatrix& m, u64 p) { return rank_mod_p_impl<false>(m, p); }
int bareiss_rank(const IntMatrix& m) { return bareiss_rank_impl<true>(m); }
int bareiss_rank_serial(const IntMatrix& m) { return bareiss_rank_impl<false>(m); }

RankResult rank(const IntMatrix& m) {
    const int bound = std::min(m.rows(), m.cols());
    if (bound == 0) return {0, RankResult::Method::Exact};

    static std::atomic<u64> sequence{0};
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ sequence.fetch_add(1));
    const u64 p = random_prime_62(rng);

    const int modular = rank_mod_p(m, p);
    if (modular == bound) return {modular, RankResult::Method::ModularCertified};
    return {bareiss_rank(m), RankResult::Method::Exact};
}

} // namespace wlp
