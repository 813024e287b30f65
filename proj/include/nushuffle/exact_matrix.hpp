#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace nushuffle {

/// Dense matrix with arbitrary-precision integer entries, row-major.
/// No floating point anywhere: elimination, traces and products are
/// exact.
class ExactMatrix {
  public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols);   // zero-filled
    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& operator()(std::size_t i, std::size_t j) {
        return data_[i * cols_ + j];
    }
    const mpz_class& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    mpz_class trace() const;
    /// trace(M*M) without forming the product.
    mpz_class trace_of_square() const;
    std::vector<mpz_class> row_sums() const;

    ExactMatrix multiply(const ExactMatrix& other) const;

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> data_;
};

/// m - v*I. Throws on non-square input.
ExactMatrix shift(const ExactMatrix& m, const mpz_class& v);

}  // namespace nushuffle
