#include "sundet/quadform_fp.hpp"

#include <stdexcept>

#include "sundet/errors.hpp"
#include "sundet/modmath.hpp"

namespace sundet {

namespace {

void require_odd_prime_gt3(std::uint64_t p, const char* who)
{
    if (p <= 3 || !is_prime_u64(p))
        throw std::domain_error(std::string(who) + ": p must be a prime > 3");
}

FpPoly trimmed(FpPoly f)
{
    while (!f.coeffs.empty() && f.coeffs.back() == 0)
        f.coeffs.pop_back();
    return f;
}

std::uint64_t quadform_value(std::uint64_t x, std::uint64_t y,
                             std::uint64_t c, std::uint64_t d, std::uint64_t p)
{
    // x^2 + c x y + d y^2 mod p
    std::uint64_t v = mul_mod(x, x, p);
    v = (v + mul_mod(c, mul_mod(x, y, p), p)) % p;
    v = (v + mul_mod(d, mul_mod(y, y, p), p)) % p;
    return v;
}

} // namespace

FpPoly poly_mul(const FpPoly& f, const FpPoly& g)
{
    if (f.p != g.p)
        throw std::invalid_argument("poly_mul: modulus mismatch");
    const std::uint64_t p = f.p;
    if (f.coeffs.empty() || g.coeffs.empty())
        return {p, {}};
    FpPoly h{p, std::vector<std::uint64_t>(f.coeffs.size() + g.coeffs.size() - 1, 0)};
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        if (f.coeffs[i] == 0)
            continue;
        for (std::size_t j = 0; j < g.coeffs.size(); ++j)
            h.coeffs[i + j] = (h.coeffs[i + j] + mul_mod(f.coeffs[i], g.coeffs[j], p)) % p;
    }
    return trimmed(std::move(h));
}

FpPoly poly_pow_mod_p(const FpPoly& f, std::uint64_t e)
{
    FpPoly result{f.p, {1 % f.p}};
    FpPoly base = trimmed(f);
    while (e > 0) {
        if (e & 1)
            result = poly_mul(result, base);
        e >>= 1;
        if (e > 0)
            base = poly_mul(base, base);
    }
    return result;
}

std::uint64_t poly_eval(const FpPoly& f, std::uint64_t t)
{
    const std::uint64_t p = f.p;
    std::uint64_t v = 0;
    for (std::size_t i = f.coeffs.size(); i-- > 0;)
        v = (mul_mod(v, t % p, p) + f.coeffs[i]) % p;
    return v;
}

AlphaCoeffs alpha_coeffs(std::int64_t c, std::int64_t d, std::uint64_t p)
{
    require_odd_prime_gt3(p, "alpha_coeffs");
    const std::uint64_t cr = mod_canonical(c, p);
    const std::uint64_t dr = mod_canonical(d, p);
    FpPoly f{p, {dr, cr, 1}};
    FpPoly g = poly_pow_mod_p(f, p - 2);
    // f is monic of degree 2, so g is monic of degree 2p-4
    std::vector<std::uint64_t> alpha(2 * p - 3, 0);
    for (std::size_t i = 0; i < g.coeffs.size(); ++i)
        alpha[i] = g.coeffs[i];
    return {p, cr, dr, std::move(alpha), static_cast<std::size_t>((p - 3) / 2)};
}

std::uint64_t critical_cancellation(std::int64_t c, std::int64_t d, std::uint64_t p)
{
    AlphaCoeffs a = alpha_coeffs(c, d, p);
    return (a.alpha[a.m] + a.alpha[a.m + p - 1]) % p;
}

bool involution_identity_check(std::int64_t c, std::int64_t d, std::uint64_t p, std::int64_t t)
{
    require_odd_prime_gt3(p, "involution_identity_check");
    const std::uint64_t cr = mod_canonical(c, p);
    const std::uint64_t dr = mod_canonical(d, p);
    const std::uint64_t tr = mod_canonical(t, p);
    if (dr == 0)
        throw std::domain_error("involution_identity_check: d must be nonzero mod p");
    if (tr == 0)
        throw std::domain_error("involution_identity_check: t must be nonzero mod p");
    FpPoly f{p, {dr, cr, 1}};
    const std::uint64_t s = mul_mod(dr, mod_inverse(static_cast<std::int64_t>(tr), p), p);
    const std::uint64_t lhs = poly_eval(f, s);
    const std::uint64_t t_inv_sq =
        mod_pow(static_cast<std::int64_t>(mod_inverse(static_cast<std::int64_t>(tr), p)), 2, p);
    const std::uint64_t rhs = mul_mod(dr, mul_mod(t_inv_sq, poly_eval(f, tr), p), p);
    return lhs == rhs;
}

std::uint64_t weighted_power_sum(std::int64_t c, std::int64_t d, std::uint64_t p)
{
    require_odd_prime_gt3(p, "weighted_power_sum");
    const std::uint64_t cr = mod_canonical(c, p);
    const std::uint64_t dr = mod_canonical(d, p);
    if (dr == 0)
        throw std::domain_error("weighted_power_sum: d must be nonzero mod p");
    FpPoly f{p, {dr, cr, 1}};
    const std::uint64_t m = (p - 3) / 2;
    std::uint64_t sum = 0;
    for (std::uint64_t t = 1; t < p; ++t) {
        const std::uint64_t ft = poly_eval(f, t);
        const std::uint64_t fp2 = mod_pow(static_cast<std::int64_t>(ft), p - 2, p);
        const std::uint64_t t_neg_m =
            mod_pow(static_cast<std::int64_t>(mod_inverse(static_cast<std::int64_t>(t), p)), m, p);
        sum = (sum + mul_mod(fp2, t_neg_m, p)) % p;
    }
    return sum;
}

std::uint64_t exponent_reduce(std::uint64_t e, std::uint64_t p)
{
    if (p < 3)
        throw std::domain_error("exponent_reduce: p must be an odd prime");
    if (e == 0)
        return 0;
    return 1 + (e - 1) % (p - 1);
}

FpMatrix reduced_coeff_matrix(std::int64_t c, std::int64_t d, std::uint64_t p)
{
    require_odd_prime_gt3(p, "reduced_coeff_matrix");
    AlphaCoeffs a = alpha_coeffs(c, d, p);
    FpMatrix m(p, p, p);
    // homogeneous term a=0 lands at Y^(p-3); middle terms a=r and a=r+p-1
    // collapse onto X^r Y^(p-3-r); three boundary terms keep their exponents;
    // the monic top term a=2p-4 reduces to X^(p-3). The six index groups are
    // pairwise disjoint for p > 3.
    m(0, p - 3) = a.alpha[0];
    for (std::uint64_t r = 1; r + 4 <= p; ++r)
        m(r, p - 3 - r) = (a.alpha[r] + a.alpha[r + p - 1]) % p;
    m(p - 3, 0) = 1;
    m(p - 3, p - 1) = a.alpha[p - 3];
    m(p - 2, p - 2) = a.alpha[p - 2];
    m(p - 1, p - 3) = a.alpha[p - 1];
    return m;
}

std::vector<std::uint64_t> lagrange_interpolate(const std::vector<std::uint64_t>& values,
                                                std::uint64_t p)
{
    if (values.size() != p)
        throw std::invalid_argument("lagrange_interpolate: need one value per node 0..p-1");
    // master polynomial prod_k (X - k), degree p, built incrementally
    std::vector<std::uint64_t> master(p + 1, 0);
    master[0] = 1;
    for (std::uint64_t k = 0; k < p; ++k) {
        const std::uint64_t neg_k = k == 0 ? 0 : p - k;
        for (std::size_t j = k + 1; j-- > 0;) {
            std::uint64_t v = mul_mod(master[j], neg_k, p);
            if (j > 0)
                v = (v + master[j - 1]) % p;
            master[j] = v;
        }
        master[k + 1] = 1; // monic after multiplying by (X - k)
    }

    std::vector<std::uint64_t> result(p, 0);
    std::vector<std::uint64_t> quotient(p, 0);
    for (std::uint64_t k = 0; k < p; ++k) {
        if (values[k] == 0)
            continue;
        // synthetic division of master by (X - k)
        std::uint64_t carry = master[p]; // = 1
        for (std::size_t j = p; j-- > 0;) {
            quotient[j] = carry;
            carry = (master[j] + mul_mod(k, carry, p)) % p;
        }
        // carry is master(k) = 0; weight is quotient(k) = prod_{j != k} (k - j)
        std::uint64_t w = 0;
        for (std::size_t j = p; j-- > 0;)
            w = (mul_mod(w, k, p) + quotient[j]) % p;
        const std::uint64_t coef =
            mul_mod(values[k], mod_inverse(static_cast<std::int64_t>(w), p), p);
        for (std::size_t j = 0; j < p; ++j)
            result[j] = (result[j] + mul_mod(coef, quotient[j], p)) % p;
    }
    return result;
}

FpMatrix interpolate_representative(std::int64_t c, std::int64_t d, std::uint64_t p)
{
    require_odd_prime_gt3(p, "interpolate_representative");
    const std::uint64_t cr = mod_canonical(c, p);
    const std::uint64_t dr = mod_canonical(d, p);
    // coeff_in_x[r][y] = coefficient of X^r of the interpolant at fixed y
    std::vector<std::vector<std::uint64_t>> coeff_in_x(p, std::vector<std::uint64_t>(p, 0));
    std::vector<std::uint64_t> column(p);
    for (std::uint64_t y = 0; y < p; ++y) {
        for (std::uint64_t x = 0; x < p; ++x)
            column[x] = mod_pow(static_cast<std::int64_t>(quadform_value(x, y, cr, dr, p)),
                                p - 2, p);
        std::vector<std::uint64_t> g = lagrange_interpolate(column, p);
        for (std::uint64_t r = 0; r < p; ++r)
            coeff_in_x[r][y] = g[r];
    }
    FpMatrix m(p, p, p);
    for (std::uint64_t r = 0; r < p; ++r) {
        std::vector<std::uint64_t> row = lagrange_interpolate(coeff_in_x[r], p);
        for (std::uint64_t s = 0; s < p; ++s)
            m(r, s) = row[s];
    }
    return m;
}

std::size_t rank_bound_C(std::int64_t c, std::int64_t d, std::uint64_t p)
{
    require_odd_prime_gt3(p, "rank_bound_C");
    if (jacobi_symbol(d, p) != -1)
        throw hypothesis_error("rank_bound_C: d must be a quadratic non-residue mod p");
    return rank_fp(reduced_coeff_matrix(c, d, p));
}

} // namespace sundet
