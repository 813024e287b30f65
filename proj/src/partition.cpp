#include "nushuffle/partition.hpp"

#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nushuffle {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& inner) const {
    if (inner.rows() > rows()) return false;
    for (int i = 0; i < inner.rows(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        int value = std::stoi(item, &pos);
        if (pos != item.size())
            throw std::invalid_argument("bad partition part: '" + item + "'");
        parts.push_back(value);
    }
    return Partition(std::move(parts));
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
        throw std::invalid_argument("inner partition not contained in outer");
}

std::vector<Cell> SkewShape::cells() const {
    std::vector<Cell> out;
    for (int i = 0; i < outer_.rows(); ++i)
        for (int j = inner_.part(i); j < outer_.part(i); ++j)
            out.push_back(Cell{i + 1, j + 1});
    return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions_rec(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> prefix;
    partitions_rec(n, n, prefix, out);
    return out;
}

bool dominates(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("dominance needs partitions of equal size");
    // Prefix sums compared up to the shorter length; complete for equal n.
    int upto = std::min(lambda.rows(), mu.rows());
    long long sl = 0, sm = 0;
    for (int i = 0; i < upto; ++i) {
        sl += lambda.part(i);
        sm += mu.part(i);
        if (sl < sm) return false;
    }
    return true;
}

int diag_index(const SkewShape& shape) {
    int sum = 0;
    for (const Cell& c : shape.cells()) sum += cell_diag(c);
    return sum;
}

bool is_horizontal_strip(const SkewShape& shape) {
    // Row i+1 may not reach past the inner boundary of row i.
    const Partition& outer = shape.outer();
    const Partition& inner = shape.inner();
    for (int i = 0; i + 1 < outer.rows(); ++i)
        if (outer.part(i + 1) > inner.part(i)) return false;
    return true;
}

std::uint64_t factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative number");
    assert(n <= 20);  // 64-bit exactness bound
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t b = 1;
    for (int i = 1; i <= k; ++i) {
        b = b * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return b;
}

std::uint64_t multinomial(const Partition& mu) {
    std::uint64_t m = factorial(mu.size());
    for (int p : mu.parts()) m /= factorial(p);
    return m;
}

std::uint64_t count_syt(const Partition& lambda) {
    const int n = lambda.size();
    // Column heights for leg lengths.
    std::vector<int> col_height(lambda.part(0), 0);
    for (int i = 0; i < lambda.rows(); ++i)
        for (int j = 0; j < lambda.part(i); ++j) col_height[j] = i + 1;

    std::uint64_t numer = factorial(n);
    for (int i = 0; i < lambda.rows(); ++i) {
        for (int j = 0; j < lambda.part(i); ++j) {
            int arm = lambda.part(i) - j - 1;
            int leg = col_height[j] - i - 1;
            numer /= static_cast<std::uint64_t>(arm + leg + 1);
        }
    }
    return numer;
}

namespace {

// Count ways to finish a semistandard filling: `shape` still to fill with
// letters 1..level, where letter `level` occupies a horizontal strip.
std::uint64_t kostka_rec(const Partition& shape, const Partition& mu, int level) {
    if (level == 0) return shape.empty() ? 1 : 0;
    const int strip = mu.part(level - 1);
    if (shape.size() < strip) return 0;

    // Enumerate sub-partitions nu with shape/nu a horizontal strip of the
    // right size, top row first.
    std::uint64_t total = 0;
    std::vector<int> nu_parts(static_cast<std::size_t>(shape.rows()), 0);
    auto rec = [&](auto&& self, int row, int removed) -> void {
        if (row == shape.rows()) {
            if (removed != strip) return;
            std::vector<int> trimmed;
            for (int p : nu_parts)
                if (p > 0) trimmed.push_back(p);
            total += kostka_rec(Partition(std::move(trimmed)), mu, level - 1);
            return;
        }
        // nu_row ranges over [max(next outer row, 0), shape_row], and the
        // strip condition pins nu_row >= shape.part(row + 1).
        int low = shape.part(row + 1);
        int high = shape.part(row);
        if (row > 0) high = std::min(high, nu_parts[static_cast<std::size_t>(row - 1)]);
        for (int v = high; v >= low; --v) {
            int take = shape.part(row) - v;
            if (removed + take > strip) continue;
            nu_parts[static_cast<std::size_t>(row)] = v;
            self(self, row + 1, removed + take);
        }
        nu_parts[static_cast<std::size_t>(row)] = 0;
    };
    rec(rec, 0, 0);
    return total;
}

}  // namespace

std::uint64_t kostka(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("kostka needs partitions of equal size");
    return kostka_rec(lambda, mu, mu.rows());
}

}  // namespace nushuffle
