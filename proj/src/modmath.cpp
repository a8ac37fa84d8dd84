#include "sundet/modmath.hpp"

#include <stdexcept>

namespace sundet {

std::uint64_t mod_canonical(std::int64_t a, std::uint64_t m)
{
    if (m == 0)
        throw std::domain_error("mod_canonical: zero modulus");
    if (a >= 0)
        return static_cast<std::uint64_t>(a) % m;
    // -a does not overflow for a = INT64_MIN when done in unsigned arithmetic
    std::uint64_t r = (0 - static_cast<std::uint64_t>(a)) % m;
    return r == 0 ? 0 : m - r;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t mod_pow(std::int64_t base, std::uint64_t exp, std::uint64_t m)
{
    if (m < 2)
        throw std::domain_error("mod_pow: modulus must be >= 2");
    std::uint64_t b = mod_canonical(base, m);
    std::uint64_t result = 1 % m; // exp == 0 gives 1, also for b == 0
    while (exp > 0) {
        if (exp & 1)
            result = mul_mod(result, b, m);
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    return result;
}

std::uint64_t mod_inverse(std::int64_t a, std::uint64_t m)
{
    if (m < 2)
        throw std::domain_error("mod_inverse: modulus must be >= 2");
    std::uint64_t a0 = mod_canonical(a, m);
    if (a0 == 0)
        throw std::domain_error("mod_inverse: element is 0 mod m");
    // extended Euclid; coefficients stay below m in absolute value
    __int128 old_r = a0, r = m;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        __int128 q = old_r / r;
        __int128 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1)
        throw std::domain_error("mod_inverse: element not invertible");
    if (old_s < 0)
        old_s += m;
    return static_cast<std::uint64_t>(old_s);
}

int jacobi_symbol(std::int64_t a, std::uint64_t n)
{
    if (n < 3 || n % 2 == 0)
        throw std::domain_error("jacobi_symbol: n must be odd and >= 3");
    std::uint64_t x = mod_canonical(a, n);
    int result = 1;
    while (x != 0) {
        while (x % 2 == 0) {
            x /= 2;
            std::uint64_t r = n % 8;
            if (r == 3 || r == 5)
                result = -result;
        }
        std::uint64_t t = x;
        x = n;
        n = t;
        if (x % 4 == 3 && n % 4 == 3)
            result = -result;
        x %= n;
    }
    return n == 1 ? result : 0;
}

int euler_criterion(std::int64_t d, std::uint64_t p)
{
    if (p < 3 || p % 2 == 0)
        throw std::domain_error("euler_criterion: p must be an odd prime");
    std::uint64_t r = mod_pow(d, (p - 1) / 2, p);
    if (r == 0)
        return 0;
    if (r == 1)
        return 1;
    if (r == p - 1)
        return -1;
    throw std::domain_error("euler_criterion: modulus is not prime");
}

std::uint64_t power_sum(std::int64_t k, std::uint64_t p)
{
    if (p < 3 || p % 2 == 0)
        throw std::domain_error("power_sum: p must be an odd prime");
    // t^k = t^e for every t in F_p^x, where e = k mod (p-1)
    std::uint64_t e = mod_canonical(k, p - 1);
    std::uint64_t sum = 0;
    for (std::uint64_t t = 1; t < p; ++t)
        sum = (sum + mod_pow(static_cast<std::int64_t>(t), e, p)) % p;
    return sum;
}

namespace {

bool miller_rabin_composite(std::uint64_t n, std::uint64_t witness,
                            std::uint64_t d, int s)
{
    std::uint64_t x = mod_pow(static_cast<std::int64_t>(witness % n), d, n);
    if (x == 1 || x == n - 1)
        return false;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1)
            return false;
    }
    return true;
}

} // namespace

bool is_prime_u64(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q)
            return true;
        if (n % q == 0)
            return false;
    }
    if (n < 41 * 41)
        return true; // no prime factor <= 37 and below 41^2
    std::uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    // this witness set decides primality exactly for all n < 2^64
    for (std::uint64_t w : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (miller_rabin_composite(n, w, d, s))
            return false;
    return true;
}

} // namespace sundet
