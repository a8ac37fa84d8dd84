#ifndef SUNDET_FP_LINALG_HPP
#define SUNDET_FP_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sundet/int_matrix.hpp"

namespace sundet {

// Dense row-major matrix over F_p. Entries are canonical residues in [0, p);
// every operation in this module keeps them that way.
class FpMatrix {
public:
    FpMatrix(std::size_t rows, std::size_t cols, std::uint64_t p)
        : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {}

    static FpMatrix identity(std::size_t n, std::uint64_t p)
    {
        FpMatrix m(n, n, p);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1 % p;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint64_t modulus() const { return p_; }

    std::uint64_t& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    std::uint64_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend bool operator==(const FpMatrix& x, const FpMatrix& y)
    {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.p_ == y.p_ && x.a_ == y.a_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::uint64_t p_;
    std::vector<std::uint64_t> a_;
};

// Entrywise canonical residue of an integer matrix.
FpMatrix reduce_mod(const IntMatrix& a, std::uint64_t p);

// Row rank by exact Gaussian elimination; pivot is the first nonzero
// entry of the column (no magnitude heuristics exist over a field).
std::size_t rank_fp(const FpMatrix& a);

// Exact product; throws std::invalid_argument on dimension or modulus mismatch.
FpMatrix matmul_fp(const FpMatrix& a, const FpMatrix& b);

FpMatrix transpose(const FpMatrix& a);

// Determinant over F_p (p prime). Eliminates a working copy.
std::uint64_t det_fp(FpMatrix a);

// The p x p node matrix with entry (i, r) = i^r mod p, using 0^0 = 1.
FpMatrix vandermonde_fp(std::uint64_t p);

} // namespace sundet

#endif // SUNDET_FP_LINALG_HPP
