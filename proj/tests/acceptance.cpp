// Acceptance suite: the toolkit's exit criteria, one line per criterion.
// Every check is exact; there are no tolerances anywhere.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sundet/exact_linalg.hpp"
#include "sundet/fp_linalg.hpp"
#include "sundet/modmath.hpp"
#include "sundet/quadform_fp.hpp"
#include "sundet/reporting.hpp"
#include "sundet/sun_core.hpp"
#include "test_oracles.hpp"

using namespace sundet;

namespace {

int failures = 0;

void report(int number, const std::string& label, bool pass, double seconds)
{
    std::printf("[%s] criterion %2d: %s (%.1fs)\n", pass ? "PASS" : "FAIL", number,
                label.c_str(), seconds);
    std::fflush(stdout);
    if (!pass)
        ++failures;
}

template <typename Fn>
void criterion(int number, const std::string& label, Fn&& fn)
{
    const auto start = std::chrono::steady_clock::now();
    bool pass = false;
    try {
        pass = fn();
    } catch (const std::exception& e) {
        std::printf("       exception: %s\n", e.what());
        pass = false;
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(number, label, pass, seconds);
}

// 1. composite sweep: D_n(c,d) = 0 mod n^2 with no condition on c, d
bool composite_sweep()
{
    const std::int64_t ns[] = {4, 6, 8, 9, 10, 12, 14, 15, 16, 18, 20, 21, 22, 24, 25, 26};
    for (std::int64_t n : ns) {
        const mpz_class n2 = mpz_class(n) * n;
        for (std::int64_t c = -2; c <= 2; ++c)
            for (std::int64_t d = -2; d <= 2; ++d) {
                const mpz_class dn = compute_Dn({n, c, d});
                if (dn % n2 != 0) {
                    std::printf("       violated at n=%lld c=%lld d=%lld\n",
                                static_cast<long long>(n), static_cast<long long>(c),
                                static_cast<long long>(d));
                    return false;
                }
            }
    }
    return true;
}

// 2. prime sweep: D_p(c,d) = 0 mod p^2 whenever (d/p) = -1
bool prime_sweep()
{
    for (std::int64_t p : {5, 7, 11, 13, 17, 19, 23}) {
        const mpz_class p2 = mpz_class(p) * p;
        for (std::int64_t d = 1; d < p; ++d) {
            if (jacobi_symbol(d, static_cast<std::uint64_t>(p)) != -1)
                continue;
            for (std::int64_t c = 0; c < p; ++c) {
                const mpz_class dn = compute_Dn({p, c, d});
                if (dn % p2 != 0) {
                    std::printf("       violated at p=%lld c=%lld d=%lld\n",
                                static_cast<long long>(p), static_cast<long long>(c),
                                static_cast<long long>(d));
                    return false;
                }
            }
        }
    }
    return true;
}

// 3. critical cancellation on the grid of criterion 2
bool critical_cancellation_sweep()
{
    for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull})
        for (std::int64_t d = 1; d < static_cast<std::int64_t>(p); ++d) {
            if (jacobi_symbol(d, p) != -1)
                continue;
            for (std::int64_t c = 0; c < static_cast<std::int64_t>(p); ++c)
                if (critical_cancellation(c, d, p) != 0)
                    return false;
        }
    return true;
}

// 4. S = -(alpha_m + alpha_{m+p-1}) for every d != 0, no symbol hypothesis
bool weighted_sum_identity()
{
    for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull})
        for (std::int64_t c = 0; c < static_cast<std::int64_t>(p); ++c)
            for (std::int64_t d = 1; d < static_cast<std::int64_t>(p); ++d) {
                const std::uint64_t s = weighted_power_sum(c, d, p);
                const std::uint64_t cancel = critical_cancellation(c, d, p);
                if ((s + cancel) % p != 0)
                    return false;
            }
    return true;
}

// 5. M = V C V^t and rank transfer through the invertible V
bool factorization_sweep()
{
    for (std::int64_t p : {5, 7, 11})
        for (std::int64_t c = 0; c < p; ++c)
            for (std::int64_t d = 1; d < p; ++d) {
                const DecompositionCheck dc = prime_decomposition_check(p, c, d);
                if (!dc.factorization_ok)
                    return false;
                const std::size_t rank_c =
                    rank_fp(reduced_coeff_matrix(c, d, static_cast<std::uint64_t>(p)));
                if (dc.rank_m != rank_c)
                    return false;
            }
    return true;
}

// 6. interpolation recovers exactly the directly-built coefficient matrix
bool representative_uniqueness()
{
    for (std::uint64_t p : {5ull, 7ull})
        for (std::int64_t c = 0; c < static_cast<std::int64_t>(p); ++c)
            for (std::int64_t d = 0; d < static_cast<std::int64_t>(p); ++d)
                if (!(interpolate_representative(c, d, p) == reduced_coeff_matrix(c, d, p)))
                    return false;
    std::mt19937_64 rng(4242);
    for (std::uint64_t p : {11ull, 13ull}) {
        std::uniform_int_distribution<std::int64_t> res(0, static_cast<std::int64_t>(p) - 1);
        for (int trial = 0; trial < 50; ++trial) {
            const std::int64_t c = res(rng), d = res(rng);
            if (!(interpolate_representative(c, d, p) == reduced_coeff_matrix(c, d, p)))
                return false;
        }
    }
    return true;
}

// 7. the two determinant algorithms agree (Sun matrices are cross-checked
// inside compute_Dn throughout criteria 1 and 2)
bool determinant_oracles()
{
    std::mt19937_64 rng(1717);
    std::uniform_int_distribution<std::size_t> size(1, 8);
    for (int trial = 0; trial < 200; ++trial) {
        const IntMatrix a = oracles::random_int_matrix(rng, size(rng), -1000, 1000);
        if (det_bareiss(a) != det_crt(a))
            return false;
    }
    return true;
}

// 8. rank lemma: rank mod p counts invariant factors prime to p, and the
// defect lifts to a p-power divisor of the determinant
bool smith_lemma()
{
    std::mt19937_64 rng(2828);
    std::uniform_int_distribution<std::size_t> size(1, 6);
    for (int trial = 0; trial < 100; ++trial) {
        const IntMatrix a = oracles::random_int_matrix(rng, size(rng), -20, 20);
        const SnfResult snf = smith_normal_form(a);
        for (std::uint64_t p : {2ull, 3ull, 5ull}) {
            std::size_t nonzero = 0;
            for (const auto& s : snf.s)
                if (mpz_fdiv_ui(s.get_mpz_t(), p) != 0)
                    ++nonzero;
            if (rank_fp(reduce_mod(a, p)) != nonzero)
                return false;
            const RankDefectReport r = rank_defect_divisibility_check(a, p);
            if (!r.holds || r.rank != nonzero)
                return false;
        }
    }
    return true;
}

// 9. composite audit: n | V_n and the valuation lower bound for p | n
bool composite_audit()
{
    for (std::int64_t n = 4; n <= 500; ++n) {
        if (is_prime(n))
            continue;
        if (!check_composite_case(n))
            return false;
        if (vn_product_mod(n, static_cast<std::uint64_t>(n)) != 0)
            return false;
        for (std::int64_t p = 2; p <= n; ++p) {
            if (!is_prime(p) || n % p != 0)
                continue;
            if (vn_valuation(n, p) < n - p)
                return false;
        }
    }
    return true;
}

// 10. V(x) V(y) divides the specialized polynomial determinant
bool specialization_sweep()
{
    std::mt19937_64 rng(3939);
    std::uniform_int_distribution<std::int64_t> node(-5, 8);
    std::uniform_int_distribution<std::int64_t> cd(-3, 3);
    for (int done = 0; done < 20; ++done) {
        const std::int64_t n = 4 + (done % 2);
        std::vector<std::int64_t> x, y;
        while (static_cast<std::int64_t>(x.size()) < n) {
            const std::int64_t v = node(rng);
            if (std::find(x.begin(), x.end(), v) == x.end())
                x.push_back(v);
        }
        while (static_cast<std::int64_t>(y.size()) < n) {
            const std::int64_t v = node(rng);
            if (std::find(y.begin(), y.end(), v) == y.end())
                y.push_back(v);
        }
        if (!specialization_divisibility(n, cd(rng), cd(rng), x, y))
            return false;
    }
    return true;
}

// 11. identical bytes from jobs=1 and jobs=8 runs of the same sweep
bool determinism()
{
    namespace fs = std::filesystem;
    bool pass = true;
    for (OutputFormat fmt : {OutputFormat::json_lines, OutputFormat::csv}) {
        SweepConfig config;
        config.n_range = {4, 8};
        config.c_range = {-1, 1};
        config.d_range = {-1, 1};
        config.format = fmt;

        const std::string path1 = "acceptance_determinism_1.out";
        const std::string path8 = "acceptance_determinism_8.out";
        config.jobs = 1;
        config.output_path = path1;
        if (run_sweep(config) != 0)
            pass = false;
        config.jobs = 8;
        config.output_path = path8;
        if (run_sweep(config) != 0)
            pass = false;

        std::ifstream f1(path1, std::ios::binary), f8(path8, std::ios::binary);
        std::stringstream b1, b8;
        b1 << f1.rdbuf();
        b8 << f8.rdbuf();
        if (b1.str().empty() || b1.str() != b8.str())
            pass = false;
        fs::remove(path1);
        fs::remove(path8);
    }
    return pass;
}

} // namespace

int main()
{
    criterion(1, "composite sweep: D_n = 0 (mod n^2), n in {4..26} composite, c,d in [-2,2]",
              composite_sweep);
    criterion(2, "prime sweep: D_p = 0 (mod p^2) for non-residue d, p in {5..23}", prime_sweep);
    criterion(3, "critical cancellation alpha_m + alpha_{m+p-1} = 0 on the prime grid",
              critical_cancellation_sweep);
    criterion(4, "unconditional identity S = -(alpha_m + alpha_{m+p-1}), p in {5,7,11,13}",
              weighted_sum_identity);
    criterion(5, "factorization M = V C V^t and exact rank transfer, p in {5,7,11}",
              factorization_sweep);
    criterion(6, "representative uniqueness: interpolation equals direct construction",
              representative_uniqueness);
    criterion(7, "determinant oracle agreement on 200 random matrices", determinant_oracles);
    criterion(8, "rank lemma on 100 random matrices, p in {2,3,5}", smith_lemma);
    criterion(9, "composite audit: n | V_n and valuation bounds, n <= 500", composite_audit);
    criterion(10, "specialization divisibility on 20 random node sets", specialization_sweep);
    criterion(11, "byte-identical sweep output across jobs=1 and jobs=8", determinism);

    if (failures == 0)
        std::printf("acceptance: all 11 criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
