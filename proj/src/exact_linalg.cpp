#include "sundet/exact_linalg.hpp"

#include <cstdlib>
#include <mutex>
#include <stdexcept>

#include "sundet/fp_linalg.hpp"
#include "sundet/modmath.hpp"

namespace sundet {

namespace {

void require_square(const IntMatrix& a, const char* who)
{
    if (!a.is_square() || a.rows() == 0)
        throw std::invalid_argument(std::string(who) + ": matrix must be square and nonempty");
}

// Descending sequence of primes just below 2^63, grown on demand.
// The sequence is a pure function of the index, so concurrent callers
// always observe the same primes.
std::uint64_t crt_prime(std::size_t index)
{
    static std::mutex mtx;
    static std::vector<std::uint64_t> pool;
    static std::uint64_t candidate = (std::uint64_t{1} << 63) - 1; // odd

    std::lock_guard<std::mutex> lock(mtx);
    while (pool.size() <= index) {
        while (!is_prime_u64(candidate))
            candidate -= 2;
        pool.push_back(candidate);
        candidate -= 2;
    }
    return pool[index];
}

// B with |det A| <= B: product over rows of ceil(sqrt(sum of squares)).
// Returns 0 exactly when some row is zero (det is then 0 too).
mpz_class hadamard_bound(const IntMatrix& a)
{
    const std::size_t n = a.rows();
    mpz_class bound = 1, row_norm_sq, sq, root, rem;
    for (std::size_t i = 0; i < n; ++i) {
        row_norm_sq = 0;
        for (std::size_t j = 0; j < n; ++j) {
            sq = a(i, j) * a(i, j);
            row_norm_sq += sq;
        }
        if (row_norm_sq == 0)
            return 0;
        mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), row_norm_sq.get_mpz_t());
        if (rem != 0)
            root += 1;
        bound *= root;
    }
    return bound;
}

} // namespace

mpz_class det_bareiss(const IntMatrix& a)
{
    require_square(a, "det_bareiss");
    const std::size_t n = a.rows();
    IntMatrix m = a;
    mpz_class prev = 1, t1, t2;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m(pivot, k) == 0)
                ++pivot;
            if (pivot == n)
                return 0;
            negate = !negate;
            for (std::size_t j = k; j < n; ++j)
                mpz_swap(m(pivot, j).get_mpz_t(), m(k, j).get_mpz_t());
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                t1 = m(i, j) * m(k, k);
                t2 = m(i, k) * m(k, j);
                t1 -= t2;
                mpz_divexact(m(i, j).get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return negate ? mpz_class(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

mpz_class det_crt(const IntMatrix& a)
{
    require_square(a, "det_crt");
    mpz_class bound = hadamard_bound(a);
    if (bound == 0)
        return 0;
    mpz_class target = 2 * bound + 1;

    mpz_class x = 0;       // running residue, in [0, product)
    mpz_class product = 1; // product of primes consumed so far
    std::size_t index = 0;
    while (product <= target) {
        const std::uint64_t p = crt_prime(index++);
        const std::uint64_t r = det_fp(reduce_mod(a, p));
        if (product == 1) {
            x = r;
            product = p;
            continue;
        }
        const std::uint64_t x_mod_p = mpz_fdiv_ui(x.get_mpz_t(), p);
        const std::uint64_t diff = r >= x_mod_p ? r - x_mod_p : r + (p - x_mod_p);
        const std::uint64_t prod_mod_p = mpz_fdiv_ui(product.get_mpz_t(), p);
        const std::uint64_t step =
            mul_mod(diff, mod_inverse(static_cast<std::int64_t>(prod_mod_p), p), p);
        x += product * mpz_class(step);
        product *= mpz_class(p);
    }
    // symmetric representative in (-product/2, product/2]
    if (2 * x > product)
        x -= product;
    return x;
}

SnfResult smith_normal_form(const IntMatrix& a)
{
    require_square(a, "smith_normal_form");
    const std::size_t n = a.rows();
    IntMatrix d = a;
    IntMatrix u = IntMatrix::identity(n);
    IntMatrix v = IntMatrix::identity(n);
    mpz_class q, t;

    auto row_submul = [&](IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& f) {
        for (std::size_t j = 0; j < n; ++j) {
            t = f * m(src, j);
            m(dst, j) -= t;
        }
    };
    auto col_submul = [&](IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& f) {
        for (std::size_t i = 0; i < n; ++i) {
            t = f * m(i, src);
            m(i, dst) -= t;
        }
    };
    auto row_add = [&](IntMatrix& m, std::size_t dst, std::size_t src) {
        for (std::size_t j = 0; j < n; ++j)
            m(dst, j) += m(src, j);
    };
    auto is_lone = [&](std::size_t i) {
        for (std::size_t r = i + 1; r < n; ++r)
            if (d(r, i) != 0)
                return false;
        for (std::size_t c = i + 1; c < n; ++c)
            if (d(i, c) != 0)
                return false;
        return true;
    };

    for (std::size_t i = 0; i < n; ++i) {
        for (;;) {
            if (!is_lone(i)) {
                // move the smallest nonzero |entry| of the trailing block to (i, i)
                std::size_t br = i, bc = i;
                bool found = false;
                for (std::size_t r = i; r < n; ++r)
                    for (std::size_t c = i; c < n; ++c) {
                        if (d(r, c) == 0)
                            continue;
                        if (!found || mpz_cmpabs(d(r, c).get_mpz_t(), d(br, bc).get_mpz_t()) < 0) {
                            br = r;
                            bc = c;
                            found = true;
                        }
                    }
                if (br != i)
                    for (std::size_t j = 0; j < n; ++j) {
                        mpz_swap(d(br, j).get_mpz_t(), d(i, j).get_mpz_t());
                        mpz_swap(u(br, j).get_mpz_t(), u(i, j).get_mpz_t());
                    }
                if (bc != i)
                    for (std::size_t r = 0; r < n; ++r) {
                        mpz_swap(d(r, bc).get_mpz_t(), d(r, i).get_mpz_t());
                        mpz_swap(v(r, bc).get_mpz_t(), v(r, i).get_mpz_t());
                    }
                for (std::size_t r = i + 1; r < n; ++r)
                    if (d(r, i) != 0) {
                        q = d(r, i) / d(i, i); // truncated: remainder shrinks below |pivot|
                        row_submul(d, r, i, q);
                        row_submul(u, r, i, q);
                    }
                for (std::size_t c = i + 1; c < n; ++c)
                    if (d(i, c) != 0) {
                        q = d(i, c) / d(i, i);
                        col_submul(d, c, i, q);
                        col_submul(v, c, i, q);
                    }
                continue;
            }
            // pivot is isolated; it must also divide the whole trailing
            // block, else pull an offending row up and keep reducing
            bool divides_all = true;
            if (d(i, i) != 0)
                for (std::size_t r = i + 1; r < n && divides_all; ++r)
                    for (std::size_t c = i + 1; c < n; ++c)
                        if (d(r, c) % d(i, i) != 0) {
                            row_add(d, i, r);
                            row_add(u, i, r);
                            divides_all = false;
                            break;
                        }
            if (divides_all)
                break;
        }
        if (d(i, i) < 0) {
            for (std::size_t j = 0; j < n; ++j) {
                d(i, j) = -d(i, j);
                u(i, j) = -u(i, j);
            }
        }
    }

    SnfResult result{std::move(u), std::move(v), {}};
    result.s.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        result.s.push_back(d(i, i));
    return result;
}

RankDefectReport rank_defect_divisibility_check(const IntMatrix& a, std::uint64_t p)
{
    require_square(a, "rank_defect_divisibility_check");
    if (!is_prime_u64(p))
        throw std::domain_error("rank_defect_divisibility_check: p must be prime");
    const std::size_t n = a.rows();
    const std::size_t rank = rank_fp(reduce_mod(a, p));
    const std::size_t defect = n - rank;
    mpz_class det = det_bareiss(a);
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), p, defect);
    const bool holds = mpz_divisible_p(det.get_mpz_t(), pw.get_mpz_t()) != 0;
    return {rank, defect, holds};
}

} // namespace sundet
