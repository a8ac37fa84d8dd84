#include "sundet/int_matrix.hpp"

#include <stdexcept>

namespace sundet {

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: inner dimensions disagree");
    IntMatrix c(a.rows(), b.cols());
    mpz_class t;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const mpz_class& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                t = aik * b(k, j);
                c(i, j) += t;
            }
        }
    return c;
}

} // namespace sundet
