#include "nushuffle/tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nushuffle {

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    int n = 0;
    for (const auto& row : rows_) n += static_cast<int>(row.size());
    n_ = n;

    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const auto& row = rows_[i];
        if (row.empty())
            throw std::invalid_argument("tableau has an empty middle row");
        if (i > 0 && row.size() > rows_[i - 1].size())
            throw std::invalid_argument("tableau row lengths must weakly decrease");
        for (std::size_t j = 0; j < row.size(); ++j) {
            int v = row[j];
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("tableau entries must be exactly 1..n");
            seen[static_cast<std::size_t>(v)] = true;
            if (j > 0 && row[j - 1] >= v)
                throw std::invalid_argument("tableau rows must strictly increase");
            if (i > 0 && rows_[i - 1][j] >= v)
                throw std::invalid_argument("tableau columns must strictly increase");
        }
    }
}

Partition StandardTableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

Cell StandardTableau::position_of(int value) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < rows_[i].size(); ++j)
            if (rows_[i][j] == value)
                return Cell{static_cast<int>(i) + 1, static_cast<int>(j) + 1};
    throw std::invalid_argument("entry not present in tableau");
}

std::string StandardTableau::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) out += '/';
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(rows_[i][j]);
        }
    }
    return out;
}

StandardTableau StandardTableau::parse(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::stringstream ss(text);
    std::string row_text;
    while (std::getline(ss, row_text, '/')) {
        std::vector<int> row;
        std::stringstream rs(row_text);
        int v;
        while (rs >> v) row.push_back(v);
        rows.push_back(std::move(row));
    }
    return StandardTableau(std::move(rows));
}

std::vector<StandardTableau> generate_syt(const Partition& lambda) {
    std::vector<StandardTableau> out;
    const int n = lambda.size();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda.rows()));
    for (int i = 0; i < lambda.rows(); ++i)
        rows[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(lambda.part(i)), 0);
    std::vector<int> filled(static_cast<std::size_t>(lambda.rows()), 0);

    auto rec = [&](auto&& self, int value) -> void {
        if (value > n) {
            out.emplace_back(rows);
            return;
        }
        for (int i = 0; i < lambda.rows(); ++i) {
            auto iu = static_cast<std::size_t>(i);
            if (filled[iu] >= lambda.part(i)) continue;
            if (i > 0 && filled[iu - 1] <= filled[iu]) continue;
            rows[iu][static_cast<std::size_t>(filled[iu])] = value;
            ++filled[iu];
            self(self, value + 1);
            --filled[iu];
        }
    };
    rec(rec, 1);
    return out;
}

std::set<int> ascents(const StandardTableau& t) {
    if (t.empty()) throw std::invalid_argument("ascents of the empty tableau");
    const int n = t.size();
    std::vector<int> row_of(static_cast<std::size_t>(n) + 1, 0);
    const auto& rows = t.rows();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int v : rows[i]) row_of[static_cast<std::size_t>(v)] = static_cast<int>(i);

    std::set<int> result;
    for (int i = 1; i < n; ++i)
        if (row_of[static_cast<std::size_t>(i) + 1] <= row_of[static_cast<std::size_t>(i)])
            result.insert(i);
    result.insert(n);
    return result;
}

bool is_desarrangement(const StandardTableau& t) {
    if (t.empty()) return true;
    return *ascents(t).begin() % 2 == 0;
}

std::pair<StandardTableau, Cell> delta(const StandardTableau& t) {
    if (t.empty()) throw std::invalid_argument("delta of the empty tableau");
    auto rows = t.rows();
    // Entry 1 sits at the top-left corner; that is where the hole starts.
    std::size_t r = 0, c = 0;
    for (;;) {
        bool below = r + 1 < rows.size() && c < rows[r + 1].size();
        bool right = c + 1 < rows[r].size();
        if (!below && !right) break;
        if (below && (!right || rows[r + 1][c] < rows[r][c + 1])) {
            rows[r][c] = rows[r + 1][c];
            ++r;
        } else {
            rows[r][c] = rows[r][c + 1];
            ++c;
        }
    }
    // The hole is an outer corner: last cell of its row, and its row is
    // the lowest one reaching that column.
    rows[r].pop_back();
    if (rows[r].empty()) rows.pop_back();
    for (auto& row : rows)
        for (auto& v : row) --v;
    return {StandardTableau(std::move(rows)),
            Cell{static_cast<int>(r) + 1, static_cast<int>(c) + 1}};
}

int tableau_type(const StandardTableau& t) {
    StandardTableau cur = t;
    int j = 0;
    while (!is_desarrangement(cur)) {
        cur = delta(cur).first;
        ++j;
    }
    return j;
}

DeltaChain delta_chain(const StandardTableau& t) {
    DeltaChain chain;
    StandardTableau cur = t;
    bool terminal_found = is_desarrangement(cur);
    if (terminal_found) chain.terminal = cur;
    while (!cur.empty()) {
        auto [next, cell] = delta(cur);
        chain.steps.push_back(DeltaStep{cur, cell, cell_diag(cell)});
        cur = std::move(next);
        if (!terminal_found && is_desarrangement(cur)) {
            terminal_found = true;
            chain.terminal = cur;
            chain.type = static_cast<int>(chain.steps.size());
        }
    }
    return chain;
}

}  // namespace nushuffle
