#include "nushuffle/exact_matrix.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nushuffle {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool ExactMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

mpz_class ExactMatrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
    mpz_class t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

mpz_class ExactMatrix::trace_of_square() const {
    if (!is_square())
        throw std::invalid_argument("trace_of_square of non-square matrix");
    mpz_class t = 0;
    mpz_class prod;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            prod = (*this)(i, j) * (*this)(j, i);
            t += prod;
        }
    return t;
}

std::vector<mpz_class> ExactMatrix::row_sums() const {
    std::vector<mpz_class> sums(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) sums[i] += (*this)(i, j);
    return sums;
}

ExactMatrix ExactMatrix::multiply(const ExactMatrix& other) const {
    if (cols_ != other.rows_)
        throw std::invalid_argument("matrix product dimension mismatch");
    ExactMatrix out(rows_, other.cols_);
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t l = 0; l < cols_; ++l) {
            const mpz_class& a = (*this)(i, l);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                mpz_addmul(out(i, j).get_mpz_t(), a.get_mpz_t(),
                           other(l, j).get_mpz_t());
            }
        }
    }
    return out;
}

ExactMatrix shift(const ExactMatrix& m, const mpz_class& v) {
    if (!m.is_square()) throw std::invalid_argument("shift of non-square matrix");
    ExactMatrix out = m;
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, i) -= v;
    return out;
}

}  // namespace nushuffle
