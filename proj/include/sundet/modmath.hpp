#ifndef SUNDET_MODMATH_HPP
#define SUNDET_MODMATH_HPP

#include <cstdint>

namespace sundet {

// Canonical residue of a in [0, m). m >= 1.
std::uint64_t mod_canonical(std::int64_t a, std::uint64_t m);

// (a * b) mod m without overflow; a, b in [0, m), m < 2^64.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

// base^exp mod m, with the convention 0^0 = 1. Throws std::domain_error if m < 2.
std::uint64_t mod_pow(std::int64_t base, std::uint64_t exp, std::uint64_t m);

// Multiplicative inverse of a mod m. Throws std::domain_error when
// gcd(a, m) != 1 (in particular when a is 0 mod m).
std::uint64_t mod_inverse(std::int64_t a, std::uint64_t m);

// Jacobi symbol (a/n) for odd n >= 3; coincides with the Legendre symbol
// when n is prime. Throws std::domain_error for even n or n < 3.
int jacobi_symbol(std::int64_t a, std::uint64_t n);

// d^((p-1)/2) mod p mapped onto {-1, 0, +1}. p must be an odd prime;
// a residue outside {0, 1, p-1} gets rejected with std::domain_error.
int euler_criterion(std::int64_t d, std::uint64_t p);

// Sum of t^k over t in F_p^x, k may be negative (powers taken in the
// multiplicative group). Equals p-1 when (p-1) | k and 0 otherwise.
std::uint64_t power_sum(std::int64_t k, std::uint64_t p);

// Deterministic primality test for 64-bit integers (trial division for
// small n, fixed-witness Miller-Rabin above; the witness set is exact
// for every n < 2^64).
bool is_prime_u64(std::uint64_t n);

} // namespace sundet

#endif // SUNDET_MODMATH_HPP
