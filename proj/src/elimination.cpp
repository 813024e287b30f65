#include "nushuffle/elimination.hpp"

#include <cassert>
#include <cstddef>

namespace nushuffle {

namespace {

#ifndef NDEBUG
bool divides_exactly(const mpz_class& numer, const mpz_class& denom) {
    return mpz_divisible_p(numer.get_mpz_t(), denom.get_mpz_t()) != 0;
}
#endif

// Classic one-step Bareiss update on rows (r, rows) x cols (c, cols):
//   M(i,j) <- (M(i,j) * pivot - M(i,c) * M(r,j)) / prev_pivot
// The division is exact: after k steps every entry is a (k+1)-minor of
// the row-permuted input (Sylvester's identity).
void bareiss_update_row(ExactMatrix& m, std::size_t i, std::size_t r,
                        std::size_t c, const mpz_class& pivot,
                        const mpz_class& prev, mpz_class& tmp) {
    for (std::size_t j = c + 1; j < m.cols(); ++j) {
        mpz_mul(tmp.get_mpz_t(), m(i, j).get_mpz_t(), pivot.get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), m(i, c).get_mpz_t(), m(r, j).get_mpz_t());
        assert(divides_exactly(tmp, prev));
        mpz_divexact(m(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
    }
    m(i, c) = 0;
}

// Cross-multiplication step followed by removal of the row's content.
// Each reduced row is the primitive part of the row pure Bareiss would
// produce (the cross products are a positive rational multiple of the
// Bareiss minors, and taking the primitive part forgets the factor), so
// entries never grow past the Bareiss ones and every division is exact.
void primitive_update_row(ExactMatrix& m, std::size_t i, std::size_t r,
                          std::size_t c, const mpz_class& pivot,
                          mpz_class& tmp, mpz_class& content) {
    content = 0;
    for (std::size_t j = c + 1; j < m.cols(); ++j) {
        mpz_mul(tmp.get_mpz_t(), m(i, j).get_mpz_t(), pivot.get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), m(i, c).get_mpz_t(), m(r, j).get_mpz_t());
        mpz_swap(m(i, j).get_mpz_t(), tmp.get_mpz_t());
        if (content != 1)
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), m(i, j).get_mpz_t());
    }
    m(i, c) = 0;
    if (content > 1) {
        for (std::size_t j = c + 1; j < m.cols(); ++j) {
            assert(divides_exactly(m(i, j), content));
            mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(),
                         content.get_mpz_t());
        }
    }
}

void swap_rows(ExactMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j)
        mpz_swap(m(a, j).get_mpz_t(), m(b, j).get_mpz_t());
}

void remove_row_content(ExactMatrix& m, std::size_t i, mpz_class& content) {
    content = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), m(i, j).get_mpz_t());
        if (content == 1) return;
    }
    if (content > 1)
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(),
                         content.get_mpz_t());
}

}  // namespace

std::size_t rank_serial(const ExactMatrix& input) {
    ExactMatrix m = input;
    const std::size_t rows = m.rows(), cols = m.cols();
    mpz_class prev = 1;
    mpz_class tmp;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot_row = r;
        while (pivot_row < rows && m(pivot_row, c) == 0) ++pivot_row;
        if (pivot_row == rows) continue;
        swap_rows(m, r, pivot_row);
        const mpz_class pivot = m(r, c);
        for (std::size_t i = r + 1; i < rows; ++i)
            bareiss_update_row(m, i, r, c, pivot, prev, tmp);
        prev = pivot;
        ++r;
    }
    return r;
}

std::size_t rank(const ExactMatrix& input) {
    ExactMatrix m = input;
    const std::size_t rows = m.rows(), cols = m.cols();
    {
        mpz_class content;
        for (std::size_t i = 0; i < rows; ++i) remove_row_content(m, i, content);
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Smallest nonzero pivot keeps the cross products small.
        std::size_t pivot_row = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (m(i, c) == 0) continue;
            if (pivot_row == rows ||
                mpz_cmpabs(m(i, c).get_mpz_t(), m(pivot_row, c).get_mpz_t()) < 0)
                pivot_row = i;
        }
        if (pivot_row == rows) continue;
        swap_rows(m, r, pivot_row);
        const mpz_class pivot = m(r, c);
#pragma omp parallel
        {
            mpz_class tmp, content;
#pragma omp for schedule(dynamic, 4)
            for (std::size_t i = r + 1; i < rows; ++i)
                primitive_update_row(m, i, r, c, pivot, tmp, content);
        }
        ++r;
    }
    return r;
}

std::size_t nullity(const ExactMatrix& m) { return m.cols() - rank(m); }

std::size_t nullity_serial(const ExactMatrix& m) {
    return m.cols() - rank_serial(m);
}

}  // namespace nushuffle
