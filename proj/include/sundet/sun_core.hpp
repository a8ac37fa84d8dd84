#ifndef SUNDET_SUN_CORE_HPP
#define SUNDET_SUN_CORE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "sundet/int_matrix.hpp"

namespace sundet {

struct SunParams {
    std::int64_t n; // > 3
    std::int64_t c;
    std::int64_t d;

    friend bool operator==(const SunParams&, const SunParams&) = default;
};

// Trial-division primality for the sweep-scale integers handled here.
bool is_prime(std::int64_t n);

// The n x n matrix with entry (i, j) = (i^2 + c i j + d j^2)^(n-2).
IntMatrix build_sun_matrix(const SunParams& params);

// Its determinant, exact; computed by fraction-free elimination and
// cross-checked against the CRT determinant (internal_error on mismatch).
mpz_class compute_Dn(const SunParams& params);

// V_n = prod of (s - r) over 0 <= r < s <= n-1 = prod of k^(n-k), evaluated
// by both formulas which must agree.
mpz_class vn_product(std::int64_t n);

// V_n mod m by modular evaluation of the k^(n-k) product; usable at n far
// beyond where the literal product is sensible.
std::uint64_t vn_product_mod(std::int64_t n, std::uint64_t m);

// nu_p(V_n) = sum over k < n of (n-k) * nu_p(k).
std::int64_t vn_valuation(std::int64_t n, std::int64_t p);

// Verifies n | V_n through per-prime-power valuations. n must be composite
// and > 3. Always true.
bool check_composite_case(std::int64_t n);

// Checks that V(x) * V(y) divides det[(x_i^2 + c x_i y_j + d y_j^2)^(n-2)]
// in the integers. Nodes must be pairwise distinct within x and within y
// (repeats are rejected, not treated as vacuously true).
bool specialization_divisibility(std::int64_t n, std::int64_t c, std::int64_t d,
                                 const std::vector<std::int64_t>& x,
                                 const std::vector<std::int64_t>& y);

struct DecompositionCheck {
    std::size_t rank_m;     // rank of the Sun matrix mod p
    bool factorization_ok;  // V * C * V^t reproduced M exactly
};

// Builds M = Sun matrix mod p, V the node power matrix and C the reduced
// coefficient matrix, and verifies M = V * C * V^t (internal_error if not).
DecompositionCheck prime_decomposition_check(std::int64_t p, std::int64_t c, std::int64_t d);

enum class NClass { composite, prime };

struct VerificationRecord {
    SunParams params;
    NClass n_class;
    std::optional<int> symbol_d; // -1/0/+1 for prime n, nullopt for composite
    bool hypothesis_met;
    mpz_class d_mod_n2;          // in [0, n^2)
    bool theorem_holds;          // d_mod_n2 == 0
    std::optional<std::size_t> rank; // filled by decompose sweeps
    std::int64_t ms;             // wall time spent on this cell

    friend bool operator==(const VerificationRecord&, const VerificationRecord&) = default;
};

// Classifies n, evaluates the hypothesis (composite n: always met; prime n:
// Legendre(d, n) = -1), and reduces the exact determinant mod n^2.
VerificationRecord verify_theorem(const SunParams& params);

} // namespace sundet

#endif // SUNDET_SUN_CORE_HPP
