#pragma once

#include <cstddef>

#include "nushuffle/exact_matrix.hpp"

namespace nushuffle {

/// Exact rank over the integers by fraction-free elimination. Every
/// division performed is exact (asserted at each step in debug builds);
/// no tolerances anywhere.
///
/// rank() is the OpenMP kernel: cross-multiplication steps with the
/// content (gcd) of each updated row removed, which keeps every row at
/// the primitive part of the corresponding Bareiss row, plus
/// smallest-pivot selection. rank_serial() is the reference: textbook
/// one-step Bareiss, dividing by the previous pivot.
std::size_t rank(const ExactMatrix& m);
std::size_t rank_serial(const ExactMatrix& m);

/// cols - rank.
std::size_t nullity(const ExactMatrix& m);
std::size_t nullity_serial(const ExactMatrix& m);

}  // namespace nushuffle
