#ifndef SUNDET_EXACT_LINALG_HPP
#define SUNDET_EXACT_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sundet/int_matrix.hpp"

namespace sundet {

// Exact determinant via fraction-free elimination (every division exact).
mpz_class det_bareiss(const IntMatrix& a);

// Exact determinant via determinants modulo word-size primes, recombined by
// CRT with a symmetric lift once the prime product exceeds twice the
// Hadamard bound. Algorithmically independent of det_bareiss.
mpz_class det_crt(const IntMatrix& a);

struct SnfResult {
    IntMatrix u;               // unimodular, det = +-1
    IntMatrix v;               // unimodular, det = +-1
    std::vector<mpz_class> s;  // nonnegative invariant factors, s[i] | s[i+1]
};

// U * A * V = diag(s). A must be square.
SnfResult smith_normal_form(const IntMatrix& a);

struct RankDefectReport {
    std::size_t rank;    // rank of A mod p
    std::size_t defect;  // N - rank
    bool holds;          // p^defect divides det A
};

// Computes the rank of A mod p and whether p^(N-rank) divides det A.
// holds is true on every input; anything else disproves the rank lemma.
RankDefectReport rank_defect_divisibility_check(const IntMatrix& a, std::uint64_t p);

} // namespace sundet

#endif // SUNDET_EXACT_LINALG_HPP
