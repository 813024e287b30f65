#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "nushuffle/operators.hpp"
#include "nushuffle/spectrum.hpp"

namespace nushuffle {

struct EigenvalueCheck {
    std::int64_t value = 0;
    std::uint64_t predicted_multiplicity = 0;
    std::uint64_t computed_nullity = 0;
    bool pass = false;
};

/// Result of checking a predicted spectrum against the explicit
/// operator matrix, all in exact arithmetic:
///   (a) per eigenvalue v, nullity(M - v*I) equals the predicted
///       multiplicity;
///   (b) multiplicities sum to the matrix dimension;
///   (c) sum of v * mult equals trace(M);
///   (d) sum of v^2 * mult equals trace(M^2).
/// M is symmetric over the integers, hence diagonalizable, so (a)+(b)
/// certify the complete spectrum; the symmetry itself is checked too.
struct VerificationReport {
    int n = 0;
    int k = 0;
    std::optional<Partition> content;

    std::vector<EigenvalueCheck> eigenvalue_checks;

    std::uint64_t dimension = 0;
    std::uint64_t multiplicity_total = 0;
    bool dimension_pass = false;

    mpz_class predicted_trace;
    mpz_class matrix_trace;
    bool trace_pass = false;

    mpz_class predicted_trace_sq;
    mpz_class matrix_trace_sq;
    bool trace_sq_pass = false;

    bool symmetric = false;

    bool pass() const;
};

/// Runs checks (a)-(d) plus the symmetry check. Throws when the table's
/// n/k/content or dimension do not match the matrix.
VerificationReport verify_spectrum(const OperatorMatrix& m,
                                   const EigenvalueTable& predicted);

}  // namespace nushuffle
