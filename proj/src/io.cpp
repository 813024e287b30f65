#include "nushuffle/io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace nushuffle {

namespace {

nlohmann::ordered_json json_int(const mpz_class& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

std::string content_suffix(const std::optional<Partition>& content) {
    if (!content) return "";
    return " content=" + content->to_string();
}

mpq_class normalized_value(std::int64_t value, int n, int k) {
    mpq_class q(mpz_class(value), mpz_class(nu_scale(n, k)));
    q.canonicalize();
    return q;
}

// Left-pads every column to its widest cell.
std::string render_columns(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream out;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << "  ";
            out << std::setw(static_cast<int>(width[c])) << row[c];
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace

std::string rational_string(const mpq_class& q) { return q.get_str(); }

nlohmann::ordered_json spectrum_to_json(const EigenvalueTable& table) {
    nlohmann::ordered_json j;
    j["n"] = table.n;
    j["k"] = table.k;
    j["content"] = table.content ? nlohmann::ordered_json(table.content->to_string())
                                 : nlohmann::ordered_json(nullptr);
    auto eigenvalues = nlohmann::ordered_json::array();
    for (const auto& [value, mult] : table.entries) {
        nlohmann::ordered_json e;
        e["value"] = value;
        e["multiplicity"] = mult;
        e["normalized"] = rational_string(normalized_value(value, table.n, table.k));
        eigenvalues.push_back(e);
    }
    j["eigenvalues"] = std::move(eigenvalues);
    return j;
}

EigenvalueTable spectrum_from_json(const nlohmann::json& j) {
    EigenvalueTable table;
    table.n = j.at("n").get<int>();
    table.k = j.at("k").get<int>();
    if (!j.at("content").is_null())
        table.content = Partition::parse(j.at("content").get<std::string>());
    for (const auto& e : j.at("eigenvalues"))
        table.entries[e.at("value").get<std::int64_t>()] =
            e.at("multiplicity").get<std::uint64_t>();
    return table;
}

std::string spectrum_to_table(const EigenvalueTable& table, bool normalized) {
    std::ostringstream out;
    out << "spectrum n=" << table.n << " k=" << table.k
        << content_suffix(table.content) << " scale=" << nu_scale(table.n, table.k)
        << '\n';
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"value", "multiplicity"});
    if (normalized) rows.back().push_back("normalized");
    for (const auto& [value, mult] : table.entries) {
        rows.push_back({std::to_string(value), std::to_string(mult)});
        if (normalized)
            rows.back().push_back(
                rational_string(normalized_value(value, table.n, table.k)));
    }
    rows.push_back({"total", std::to_string(table.total_multiplicity())});
    out << render_columns(rows);
    return out.str();
}

std::string spectrum_to_csv(const EigenvalueTable& table, bool normalized) {
    std::ostringstream out;
    out << "value,multiplicity";
    if (normalized) out << ",normalized";
    out << '\n';
    for (const auto& [value, mult] : table.entries) {
        out << value << ',' << mult;
        if (normalized)
            out << ',' << rational_string(normalized_value(value, table.n, table.k));
        out << '\n';
    }
    return out.str();
}

namespace {

std::string entry_string(const OperatorMatrix& m, std::size_t i, std::size_t j,
                         bool normalized) {
    if (!normalized) return m.entries(i, j).get_str();
    mpq_class q(m.entries(i, j), mpz_class(nu_scale(m.n, m.k)));
    q.canonicalize();
    return rational_string(q);
}

}  // namespace

nlohmann::ordered_json matrix_to_json(const OperatorMatrix& m, bool normalized) {
    nlohmann::ordered_json j;
    j["n"] = m.n;
    j["k"] = m.k;
    j["content"] = m.content ? nlohmann::ordered_json(m.content->to_string())
                             : nlohmann::ordered_json(nullptr);
    j["scale"] = nu_scale(m.n, m.k);
    j["basis"] = m.basis;
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.entries.rows(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t j2 = 0; j2 < m.entries.cols(); ++j2) {
            if (normalized)
                row.push_back(entry_string(m, i, j2, true));
            else
                row.push_back(json_int(m.entries(i, j2)));
        }
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

std::string matrix_to_csv(const OperatorMatrix& m, bool normalized) {
    std::ostringstream out;
    out << "basis";
    for (const auto& label : m.basis) out << ',' << label;
    out << '\n';
    for (std::size_t i = 0; i < m.entries.rows(); ++i) {
        out << m.basis[i];
        for (std::size_t j = 0; j < m.entries.cols(); ++j)
            out << ',' << entry_string(m, i, j, normalized);
        out << '\n';
    }
    return out.str();
}

std::string matrix_to_table(const OperatorMatrix& m, bool normalized) {
    std::ostringstream out;
    out << "nu matrix n=" << m.n << " k=" << m.k << content_suffix(m.content)
        << " dim=" << m.entries.rows() << " scale=" << nu_scale(m.n, m.k) << '\n';
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{""};
    header.insert(header.end(), m.basis.begin(), m.basis.end());
    rows.push_back(std::move(header));
    for (std::size_t i = 0; i < m.entries.rows(); ++i) {
        std::vector<std::string> row{m.basis[i]};
        for (std::size_t j = 0; j < m.entries.cols(); ++j)
            row.push_back(entry_string(m, i, j, normalized));
        rows.push_back(std::move(row));
    }
    out << render_columns(rows);
    return out.str();
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["n"] = report.n;
    j["k"] = report.k;
    j["content"] = report.content
                       ? nlohmann::ordered_json(report.content->to_string())
                       : nlohmann::ordered_json(nullptr);
    j["dimension"] = report.dimension;
    j["symmetric"] = report.symmetric;
    auto eigenvalues = nlohmann::ordered_json::array();
    for (const auto& check : report.eigenvalue_checks) {
        nlohmann::ordered_json e;
        e["value"] = check.value;
        e["predicted_multiplicity"] = check.predicted_multiplicity;
        e["computed_nullity"] = check.computed_nullity;
        e["pass"] = check.pass;
        eigenvalues.push_back(e);
    }
    j["eigenvalues"] = std::move(eigenvalues);
    nlohmann::ordered_json checks;
    checks["multiplicity_sum"] = {{"predicted", report.multiplicity_total},
                                  {"dimension", report.dimension},
                                  {"pass", report.dimension_pass}};
    checks["trace"] = {{"predicted", json_int(report.predicted_trace)},
                       {"matrix", json_int(report.matrix_trace)},
                       {"pass", report.trace_pass}};
    checks["trace_of_square"] = {{"predicted", json_int(report.predicted_trace_sq)},
                                 {"matrix", json_int(report.matrix_trace_sq)},
                                 {"pass", report.trace_sq_pass}};
    j["checks"] = std::move(checks);
    j["pass"] = report.pass();
    return j;
}

std::string report_to_table(const VerificationReport& report) {
    std::ostringstream out;
    auto verdict = [](bool ok) { return ok ? "pass" : "FAIL"; };
    out << "verify n=" << report.n << " k=" << report.k
        << content_suffix(report.content) << " dim=" << report.dimension << '\n';
    out << "symmetric: " << verdict(report.symmetric) << '\n';
    for (const auto& check : report.eigenvalue_checks) {
        out << "eigenvalue " << check.value << ": predicted multiplicity "
            << check.predicted_multiplicity << ", computed nullity "
            << check.computed_nullity << ": " << verdict(check.pass) << '\n';
    }
    out << "multiplicity sum " << report.multiplicity_total << " vs dimension "
        << report.dimension << ": " << verdict(report.dimension_pass) << '\n';
    out << "trace " << report.predicted_trace.get_str() << " vs "
        << report.matrix_trace.get_str() << ": " << verdict(report.trace_pass)
        << '\n';
    out << "trace of square " << report.predicted_trace_sq.get_str() << " vs "
        << report.matrix_trace_sq.get_str() << ": "
        << verdict(report.trace_sq_pass) << '\n';
    out << "result: " << (report.pass() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

namespace {

std::vector<TableauEigenRecord> all_records(int n) {
    std::vector<TableauEigenRecord> records;
    if (n == 0) return records;
    for (const Partition& lambda : partitions_of(n))
        for (const StandardTableau& t : generate_syt(lambda))
            records.push_back(eigen_record(t));
    return records;
}

std::string chain_cells(const StandardTableau& t) {
    std::string s;
    for (const DeltaStep& step : delta_chain(t).steps)
        s += "(" + std::to_string(step.removed.row) + "," +
             std::to_string(step.removed.col) + ")";
    return s;
}

}  // namespace

nlohmann::ordered_json tableaux_to_json(int n) {
    nlohmann::ordered_json j;
    j["n"] = n;
    auto list = nlohmann::ordered_json::array();
    for (const auto& rec : all_records(n)) {
        nlohmann::ordered_json row;
        row["tableau"] = rec.tableau.to_string();
        row["shape"] = rec.shape.to_string();
        row["type"] = rec.type;
        row["desarrangement"] = rec.type == 0;
        auto chain = nlohmann::ordered_json::array();
        for (const DeltaStep& step : delta_chain(rec.tableau).steps)
            chain.push_back({{"row", step.removed.row},
                             {"col", step.removed.col},
                             {"diag", step.diag}});
        row["chain"] = std::move(chain);
        row["values"] = rec.value_by_k;
        list.push_back(std::move(row));
    }
    j["tableaux"] = std::move(list);
    return j;
}

std::string tableaux_to_table(int n) {
    std::ostringstream out;
    out << "standard tableaux n=" << n << '\n';
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"tableau", "shape", "type", "desar", "chain"};
    for (int k = 0; k <= n; ++k) header.push_back("v_" + std::to_string(k));
    rows.push_back(std::move(header));
    for (const auto& rec : all_records(n)) {
        std::vector<std::string> row{rec.tableau.to_string(), rec.shape.to_string(),
                                     std::to_string(rec.type),
                                     rec.type == 0 ? "yes" : "no",
                                     chain_cells(rec.tableau)};
        for (std::int64_t v : rec.value_by_k) row.push_back(std::to_string(v));
        rows.push_back(std::move(row));
    }
    out << render_columns(rows);
    return out.str();
}

std::string tableaux_to_csv(int n) {
    std::ostringstream out;
    out << "tableau,shape,type,desarrangement,chain";
    for (int k = 0; k <= n; ++k) out << ",v_" << k;
    out << '\n';
    for (const auto& rec : all_records(n)) {
        out << '"' << rec.tableau.to_string() << "\",\"" << rec.shape.to_string()
            << "\"," << rec.type << ',' << (rec.type == 0 ? "yes" : "no") << ",\""
            << chain_cells(rec.tableau) << '"';
        for (std::int64_t v : rec.value_by_k) out << ',' << v;
        out << '\n';
    }
    return out.str();
}

}  // namespace nushuffle
