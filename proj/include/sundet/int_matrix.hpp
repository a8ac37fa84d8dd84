#ifndef SUNDET_INT_MATRIX_HPP
#define SUNDET_INT_MATRIX_HPP

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace sundet {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMatrix identity(std::size_t n)
    {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    mpz_class& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const mpz_class& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend bool operator==(const IntMatrix& x, const IntMatrix& y)
    {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<mpz_class> a_;
};

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

} // namespace sundet

#endif // SUNDET_INT_MATRIX_HPP
