#ifndef SUNDET_QUADFORM_FP_HPP
#define SUNDET_QUADFORM_FP_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sundet/fp_linalg.hpp"

namespace sundet {

// Univariate polynomial over F_p; coeffs[i] is the coefficient of T^i.
// An empty coefficient vector is the zero polynomial.
struct FpPoly {
    std::uint64_t p;
    std::vector<std::uint64_t> coeffs;
};

FpPoly poly_mul(const FpPoly& f, const FpPoly& g);
FpPoly poly_pow_mod_p(const FpPoly& f, std::uint64_t e);
std::uint64_t poly_eval(const FpPoly& f, std::uint64_t t);

// Expansion (T^2 + cT + d)^(p-2) = sum alpha[a] T^a over F_p, together with
// the critical index m = (p-3)/2. alpha has length exactly 2p-3 and
// alpha[2p-4] = 1.
struct AlphaCoeffs {
    std::uint64_t p;
    std::uint64_t c, d; // canonical residues
    std::vector<std::uint64_t> alpha;
    std::size_t m;
};

// Requires p > 3 prime (std::domain_error otherwise).
AlphaCoeffs alpha_coeffs(std::int64_t c, std::int64_t d, std::uint64_t p);

// alpha_m + alpha_{m+p-1} mod p. Vanishes whenever d is a quadratic
// non-residue mod p; no claim is made for the other symbol values.
std::uint64_t critical_cancellation(std::int64_t c, std::int64_t d, std::uint64_t p);

// Checks f(d/t) = d * t^-2 * f(t) in F_p for f(T) = T^2 + cT + d.
// Requires d, t nonzero mod p; holds identically.
bool involution_identity_check(std::int64_t c, std::int64_t d, std::uint64_t p, std::int64_t t);

// S = sum over t in F_p^x of f(t)^(p-2) * t^-m, by direct summation.
// Satisfies S = -(alpha_m + alpha_{m+p-1}) unconditionally, and S = 0
// when d is a non-residue. Requires d nonzero mod p.
std::uint64_t weighted_power_sum(std::int64_t c, std::int64_t d, std::uint64_t p);

// The exponent in {0} u {1..p-1} with z^e = z^ebar for every z in F_p:
// 0 for e = 0, else the representative of e mod (p-1) in {1..p-1}.
std::uint64_t exponent_reduce(std::uint64_t e, std::uint64_t p);

// Coefficient matrix C of the unique polynomial R(X, Y) of degree <= p-1
// in each variable that agrees with (X^2+cXY+dY^2)^(p-2) as a function on
// F_p^2; entry (r, s) multiplies X^r Y^s. Built directly from the alpha
// coefficients via the exponent reduction.
FpMatrix reduced_coeff_matrix(std::int64_t c, std::int64_t d, std::uint64_t p);

// The same matrix recovered independently: tabulate the function on all of
// F_p^2, Lagrange-interpolate in X for each fixed Y, then interpolate the
// resulting coefficient functions in Y.
FpMatrix interpolate_representative(std::int64_t c, std::int64_t d, std::uint64_t p);

// rank of C over F_p; requires the non-residue hypothesis on d and throws
// hypothesis_error when it fails (the rank bound is only claimed there).
std::size_t rank_bound_C(std::int64_t c, std::int64_t d, std::uint64_t p);

// Coefficients (length p) of the unique polynomial of degree < p through
// the points (0, values[0]), ..., (p-1, values[p-1]).
std::vector<std::uint64_t> lagrange_interpolate(const std::vector<std::uint64_t>& values,
                                                std::uint64_t p);

} // namespace sundet

#endif // SUNDET_QUADFORM_FP_HPP
