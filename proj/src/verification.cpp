#include "nushuffle/verification.hpp"

#include "nushuffle/elimination.hpp"

#include <stdexcept>

namespace nushuffle {

bool VerificationReport::pass() const {
    if (!dimension_pass || !trace_pass || !trace_sq_pass || !symmetric)
        return false;
    for (const auto& check : eigenvalue_checks)
        if (!check.pass) return false;
    return true;
}

VerificationReport verify_spectrum(const OperatorMatrix& m,
                                   const EigenvalueTable& predicted) {
    if (m.n != predicted.n || m.k != predicted.k || m.content != predicted.content)
        throw std::invalid_argument("verify_spectrum: table does not match operator");
    if (!m.entries.is_square())
        throw std::invalid_argument("verify_spectrum: operator matrix must be square");

    VerificationReport report;
    report.n = m.n;
    report.k = m.k;
    report.content = m.content;
    report.dimension = m.entries.rows();

    report.symmetric = m.entries.is_symmetric();

    mpz_class trace_pred = 0, trace_sq_pred = 0;
    std::uint64_t total = 0;
    for (const auto& [value, mult] : predicted.entries) {
        EigenvalueCheck check;
        check.value = value;
        check.predicted_multiplicity = mult;
        check.computed_nullity = nullity(shift(m.entries, mpz_class(value)));
        check.pass = check.computed_nullity == mult;
        report.eigenvalue_checks.push_back(check);

        total += mult;
        mpz_class v(value);
        trace_pred += v * static_cast<unsigned long>(mult);
        trace_sq_pred += v * v * static_cast<unsigned long>(mult);
    }

    report.multiplicity_total = total;
    report.dimension_pass = total == report.dimension;

    report.predicted_trace = trace_pred;
    report.matrix_trace = m.entries.trace();
    report.trace_pass = trace_pred == report.matrix_trace;

    report.predicted_trace_sq = trace_sq_pred;
    report.matrix_trace_sq = m.entries.trace_of_square();
    report.trace_sq_pass = trace_sq_pred == report.matrix_trace_sq;

    return report;
}

}  // namespace nushuffle
