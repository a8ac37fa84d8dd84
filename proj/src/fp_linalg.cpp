#include "sundet/fp_linalg.hpp"

#include <stdexcept>

#include "sundet/modmath.hpp"

namespace sundet {

namespace {

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return a >= b ? a - b : a + (p - b);
}

} // namespace

FpMatrix reduce_mod(const IntMatrix& a, std::uint64_t p)
{
    if (p < 2)
        throw std::domain_error("reduce_mod: modulus must be >= 2");
    FpMatrix m(a.rows(), a.cols(), p);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = mpz_fdiv_ui(a(i, j).get_mpz_t(), p);
    return m;
}

std::size_t rank_fp(const FpMatrix& a)
{
    FpMatrix m = a;
    const std::uint64_t p = m.modulus();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m(pivot, col) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rank)
            for (std::size_t j = col; j < cols; ++j)
                std::swap(m(pivot, j), m(rank, j));
        std::uint64_t inv = mod_inverse(static_cast<std::int64_t>(m(rank, col)), p);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m(i, col) == 0)
                continue;
            std::uint64_t f = mul_mod(m(i, col), inv, p);
            for (std::size_t j = col; j < cols; ++j)
                m(i, j) = sub_mod(m(i, j), mul_mod(f, m(rank, j), p), p);
        }
        ++rank;
    }
    return rank;
}

FpMatrix matmul_fp(const FpMatrix& a, const FpMatrix& b)
{
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("matmul_fp: modulus mismatch");
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul_fp: inner dimensions disagree");
    const std::uint64_t p = a.modulus();
    FpMatrix c(a.rows(), b.cols(), p);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const std::uint64_t aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) = (c(i, j) + mul_mod(aik, b(k, j), p)) % p;
        }
    return c;
}

FpMatrix transpose(const FpMatrix& a)
{
    FpMatrix t(a.cols(), a.rows(), a.modulus());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            t(j, i) = a(i, j);
    return t;
}

std::uint64_t det_fp(FpMatrix m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("det_fp: matrix must be square");
    const std::uint64_t p = m.modulus();
    const std::size_t n = m.rows();
    std::uint64_t det = 1 % p;
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m(pivot, k) == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != k) {
            negate = !negate;
            for (std::size_t j = k; j < n; ++j)
                std::swap(m(pivot, j), m(k, j));
        }
        det = mul_mod(det, m(k, k), p);
        std::uint64_t inv = mod_inverse(static_cast<std::int64_t>(m(k, k)), p);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k) == 0)
                continue;
            std::uint64_t f = mul_mod(m(i, k), inv, p);
            for (std::size_t j = k; j < n; ++j)
                m(i, j) = sub_mod(m(i, j), mul_mod(f, m(k, j), p), p);
        }
    }
    return negate && det != 0 ? p - det : det;
}

FpMatrix vandermonde_fp(std::uint64_t p)
{
    if (!is_prime_u64(p))
        throw std::domain_error("vandermonde_fp: p must be prime");
    FpMatrix v(p, p, p);
    for (std::uint64_t i = 0; i < p; ++i) {
        std::uint64_t power = 1; // i^0, covering 0^0 = 1
        for (std::uint64_t r = 0; r < p; ++r) {
            v(i, r) = power;
            power = mul_mod(power, i, p);
        }
    }
    return v;
}

} // namespace sundet
