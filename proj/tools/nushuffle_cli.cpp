// Command-line front end: spectra, operator matrices, tableau
// classification, and end-to-end spectrum verification.
//
// Exit codes: 0 success, 1 validation error, 2 verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nushuffle/io.hpp"
#include "nushuffle/operators.hpp"
#include "nushuffle/spectrum.hpp"
#include "nushuffle/verification.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitVerification = 2;

// Largest basis the matrix-building commands accept without --force;
// the S_7 basis (5040 states) is the intended ceiling.
constexpr std::uint64_t kBasisGuard = 5040;

// 64-bit integer arithmetic in the eigenvalue recursion and counting
// helpers is exact up to this size.
constexpr int kMaxN = 12;

struct Options {
    int n = 0;
    int k = 0;
    std::string content_text;
    std::string format = "table";
    bool normalized = false;
    bool force = false;
    std::string out_path;
};

std::optional<nushuffle::Partition> parse_content(const Options& opt) {
    if (opt.content_text.empty()) return std::nullopt;
    nushuffle::Partition content = nushuffle::Partition::parse(opt.content_text);
    if (content.size() != opt.n)
        throw std::invalid_argument("--content must be a partition of n");
    return content;
}

void validate_nk(const Options& opt, bool need_k = true) {
    if (opt.n < 0 || opt.n > kMaxN)
        throw std::invalid_argument("--n must be between 0 and " + std::to_string(kMaxN));
    if (need_k && (opt.k < 0 || opt.k > opt.n))
        throw std::invalid_argument("--k must be between 0 and n");
}

std::uint64_t basis_size(int n, const std::optional<nushuffle::Partition>& content) {
    return content ? nushuffle::multinomial(*content) : nushuffle::factorial(n);
}

int emit(const Options& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream out(opt.out_path);
    if (!out) {
        std::cerr << "error: cannot open output file '" << opt.out_path << "'\n";
        return kExitValidation;
    }
    out << text;
    return kExitOk;
}

int run_spectrum(const Options& opt) {
    validate_nk(opt);
    if (opt.n < 1) throw std::invalid_argument("--n must be >= 1");
    auto content = parse_content(opt);
    nushuffle::EigenvalueTable table =
        content ? nushuffle::spectrum_words(*content, opt.k)
                : nushuffle::spectrum_sn(opt.n, opt.k);
    if (opt.format == "json")
        return emit(opt, nushuffle::spectrum_to_json(table).dump(2) + "\n");
    if (opt.format == "csv")
        return emit(opt, nushuffle::spectrum_to_csv(table, opt.normalized));
    return emit(opt, nushuffle::spectrum_to_table(table, opt.normalized));
}

int run_matrix(const Options& opt) {
    validate_nk(opt);
    if (opt.n < 1) throw std::invalid_argument("--n must be >= 1");
    auto content = parse_content(opt);
    const std::uint64_t dim = basis_size(opt.n, content);
    if (dim > kBasisGuard && !opt.force) {
        std::cerr << "error: basis has " << dim << " states (> " << kBasisGuard
                  << "); pass --force to build it anyway\n";
        return kExitValidation;
    }
    nushuffle::OperatorMatrix m = content
                                      ? nushuffle::nu_matrix_words(*content, opt.k)
                                      : nushuffle::nu_matrix_sn(opt.n, opt.k);
    if (opt.format == "json")
        return emit(opt, nushuffle::matrix_to_json(m, opt.normalized).dump(2) + "\n");
    if (opt.format == "csv")
        return emit(opt, nushuffle::matrix_to_csv(m, opt.normalized));
    return emit(opt, nushuffle::matrix_to_table(m, opt.normalized));
}

int run_tableaux(const Options& opt) {
    validate_nk(opt, false);
    if (opt.format == "json")
        return emit(opt, nushuffle::tableaux_to_json(opt.n).dump(2) + "\n");
    if (opt.format == "csv")
        return emit(opt, nushuffle::tableaux_to_csv(opt.n));
    return emit(opt, nushuffle::tableaux_to_table(opt.n));
}

int run_verify(const Options& opt) {
    validate_nk(opt);
    if (opt.n < 1) throw std::invalid_argument("--n must be >= 1");
    auto content = parse_content(opt);
    const std::uint64_t dim = basis_size(opt.n, content);
    if (dim > kBasisGuard && !opt.force) {
        std::cerr << "error: basis has " << dim << " states (> " << kBasisGuard
                  << "); pass --force to verify it anyway\n";
        return kExitValidation;
    }
    nushuffle::OperatorMatrix m = content
                                      ? nushuffle::nu_matrix_words(*content, opt.k)
                                      : nushuffle::nu_matrix_sn(opt.n, opt.k);
    nushuffle::EigenvalueTable table =
        content ? nushuffle::spectrum_words(*content, opt.k)
                : nushuffle::spectrum_sn(opt.n, opt.k);
    nushuffle::VerificationReport report = nushuffle::verify_spectrum(m, table);
    int status = opt.format == "json"
                     ? emit(opt, nushuffle::report_to_json(report).dump(2) + "\n")
                     : emit(opt, nushuffle::report_to_table(report));
    if (status != kExitOk) return status;
    return report.pass() ? kExitOk : kExitVerification;
}

void add_common(CLI::App* cmd, Options& opt, bool with_k, bool with_content,
                bool with_force) {
    cmd->add_option("--n", opt.n, "sequence length")->required();
    if (with_k)
        cmd->add_option("--k", opt.k, "operator index (number of moved objects)")
            ->required();
    if (with_content)
        cmd->add_option("--content", opt.content_text,
                        "letter multiplicities, e.g. 2,2 (distinct objects if absent)");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    cmd->add_flag("--normalized", opt.normalized,
                  "also emit exact transition-matrix rationals p/q");
    if (with_force)
        cmd->add_flag("--force", opt.force, "override the basis size guard");
    cmd->add_option("--out", opt.out_path, "write output to a file");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spectra of the symmetrized shuffling operators nu_k"};
    app.require_subcommand(1);

    Options opt;
    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "eigenvalues with multiplicities, by the tableau recursion");
    add_common(spectrum, opt, true, true, false);
    CLI::App* matrix =
        app.add_subcommand("matrix", "explicit integer operator matrix");
    add_common(matrix, opt, true, true, true);
    CLI::App* tableaux = app.add_subcommand(
        "tableaux", "standard tableaux with type, slide chain and eigenvalues");
    add_common(tableaux, opt, false, false, false);
    CLI::App* verify = app.add_subcommand(
        "verify", "check the predicted spectrum against the explicit matrix");
    add_common(verify, opt, true, true, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (spectrum->parsed()) return run_spectrum(opt);
        if (matrix->parsed()) return run_matrix(opt);
        if (tableaux->parsed()) return run_tableaux(opt);
        if (verify->parsed()) return run_verify(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitValidation;
}
