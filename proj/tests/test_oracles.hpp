#ifndef SUNDET_TEST_ORACLES_HPP
#define SUNDET_TEST_ORACLES_HPP

// Brute-force reference implementations used as independent oracles by the
// test suites. Everything here is deliberately naive, self-contained, and
// kept apart from the library code paths it checks. Moduli are assumed
// small enough that u64 products cannot overflow (tests stay below 2^16).

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "sundet/fp_linalg.hpp"
#include "sundet/int_matrix.hpp"

namespace oracles {

inline std::uint64_t canon(std::int64_t a, std::uint64_t m)
{
    std::int64_t r = a % static_cast<std::int64_t>(m);
    if (r < 0)
        r += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(r);
}

// base^exp mod m by literal repeated multiplication.
inline std::uint64_t slow_pow_mod(std::int64_t base, std::uint64_t exp, std::uint64_t m)
{
    const std::uint64_t b = canon(base, m);
    std::uint64_t acc = 1 % m;
    for (std::uint64_t i = 0; i < exp; ++i)
        acc = acc * b % m;
    return acc;
}

// inverse of a mod p by exhaustive search; 0 when none exists.
inline std::uint64_t exhaustive_inverse(std::uint64_t a, std::uint64_t p)
{
    for (std::uint64_t b = 1; b < p; ++b)
        if (a * b % p == 1)
            return b;
    return 0;
}

// Legendre symbol for prime p by enumerating the squares.
inline int legendre_by_squares(std::int64_t a, std::uint64_t p)
{
    const std::uint64_t r = canon(a, p);
    if (r == 0)
        return 0;
    for (std::uint64_t x = 1; x < p; ++x)
        if (x * x % p == r)
            return 1;
    return -1;
}

// Jacobi symbol for odd n >= 3 by factoring n and multiplying Legendre symbols.
inline int jacobi_by_factoring(std::int64_t a, std::uint64_t n)
{
    int result = 1;
    std::uint64_t rest = n;
    for (std::uint64_t p = 3; rest > 1; p += 2)
        while (rest % p == 0) {
            rest /= p;
            result *= legendre_by_squares(a, p);
        }
    return result;
}

// Determinant by recursive cofactor expansion along the first row.
inline mpz_class det_cofactor(const sundet::IntMatrix& a)
{
    const std::size_t n = a.rows();
    if (n == 1)
        return a(0, 0);
    mpz_class det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a(0, j) == 0)
            continue;
        sundet::IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c) {
                if (c == j)
                    continue;
                minor(r - 1, cc++) = a(r, c);
            }
        mpz_class term = a(0, j) * det_cofactor(minor);
        if (j % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

// Rank by full reduced row echelon form (normalized pivots, elimination
// above and below, count the nonzero rows); structured differently from
// the library elimination.
inline std::size_t rank_by_rref(sundet::FpMatrix m)
{
    const std::uint64_t p = m.modulus();
    std::size_t lead = 0;
    for (std::size_t r = 0; r < m.rows() && lead < m.cols(); ++r) {
        std::size_t i = r;
        while (m(i, lead) == 0) {
            ++i;
            if (i == m.rows()) {
                i = r;
                ++lead;
                if (lead == m.cols())
                    goto done;
            }
        }
        for (std::size_t j = 0; j < m.cols(); ++j)
            std::swap(m(i, j), m(r, j));
        {
            const std::uint64_t inv = exhaustive_inverse(m(r, lead), p);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(r, j) = m(r, j) * inv % p;
        }
        for (std::size_t k = 0; k < m.rows(); ++k) {
            if (k == r || m(k, lead) == 0)
                continue;
            const std::uint64_t f = m(k, lead);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(k, j) = (m(k, j) + (p - f * m(r, j) % p)) % p;
        }
        ++lead;
    }
done:
    std::size_t rank = 0;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(r, j) != 0) {
                ++rank;
                break;
            }
    return rank;
}

inline sundet::IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t n,
                                           std::int64_t lo, std::int64_t hi)
{
    std::uniform_int_distribution<std::int64_t> dist(lo, hi);
    sundet::IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = dist(rng);
    return m;
}

inline sundet::FpMatrix random_fp_matrix(std::mt19937_64& rng, std::size_t rows,
                                         std::size_t cols, std::uint64_t p)
{
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    sundet::FpMatrix m(rows, cols, p);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = dist(rng);
    return m;
}

} // namespace oracles

#endif // SUNDET_TEST_ORACLES_HPP
