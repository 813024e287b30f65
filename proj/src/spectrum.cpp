#include "nushuffle/spectrum.hpp"

#include <cassert>
#include <stdexcept>

namespace nushuffle {

std::uint64_t EigenvalueTable::total_multiplicity() const {
    std::uint64_t total = 0;
    for (const auto& [value, mult] : entries) total += mult;
    return total;
}

std::int64_t nu_scale(int n, int k) {
    std::uint64_t b = binomial(n, k);
    return static_cast<std::int64_t>(b * b * factorial(k));
}

TableauEigenRecord eigen_record(const StandardTableau& t) {
    const int n = t.size();
    DeltaChain chain = delta_chain(t);

    // Desarrangement flag of every chain node, the start at index 0 and
    // the empty tableau at index n.
    std::vector<bool> desar(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i)
        desar[static_cast<std::size_t>(i)] =
            is_desarrangement(chain.steps[static_cast<std::size_t>(i)].before);
    desar[static_cast<std::size_t>(n)] = true;

    // type of node i = distance to the nearest desarrangement at or below.
    std::vector<int> type(static_cast<std::size_t>(n) + 1, 0);
    int nearest = n;
    for (int i = n; i >= 0; --i) {
        if (desar[static_cast<std::size_t>(i)]) nearest = i;
        type[static_cast<std::size_t>(i)] = nearest - i;
    }

    // Walk the chain bottom-up carrying v_j for every j at once; a node of
    // size m needs v_j and v_{j-1} of its child.
    std::vector<std::int64_t> values(static_cast<std::size_t>(n) + 1, 0);
    values[0] = 1;  // v_0 = 1: removing zero objects is the identity
    for (int i = n - 1; i >= 0; --i) {
        const int m = n - i;  // size of node i
        const std::int64_t d = chain.steps[static_cast<std::size_t>(i)].diag;
        for (int j = m; j >= 1; --j) {
            auto ju = static_cast<std::size_t>(j);
            if (type[static_cast<std::size_t>(i)] >= j)
                values[ju] = values[ju] + (m + 1 - j + d) * values[ju - 1];
            else
                values[ju] = 0;
        }
    }

    TableauEigenRecord rec;
    rec.tableau = t;
    rec.shape = t.shape();
    rec.type = type[0];
    rec.value_by_k = std::move(values);
    return rec;
}

std::int64_t eigenvalue(const StandardTableau& t, int k) {
    if (k < 0) throw std::invalid_argument("eigenvalue: k must be >= 0");
    if (t.empty()) return k == 0 ? 1 : 0;
    if (k > t.size())
        throw std::invalid_argument("eigenvalue: cannot remove more than n objects");
    return eigen_record(t).value_by_k[static_cast<std::size_t>(k)];
}

std::int64_t rtr_eigenvalue(const StandardTableau& t) {
    if (is_desarrangement(t)) return 0;
    auto [next, cell] = delta(t);
    return rtr_eigenvalue(next) + t.size() + cell_diag(cell);
}

std::int64_t eig_strip(const SkewShape& shape) {
    if (!is_horizontal_strip(shape))
        throw std::invalid_argument("eig_strip needs a horizontal strip");
    auto tri = [](int m) {
        return static_cast<std::int64_t>(binomial(m + 1, 2));
    };
    return tri(shape.outer().size()) - tri(shape.inner().size()) +
           diag_index(shape);
}

EigenvalueTable spectrum_sn(int n, int k) {
    if (n < 1) throw std::invalid_argument("spectrum_sn: n must be >= 1");
    if (k < 0 || k > n) throw std::invalid_argument("spectrum_sn: k out of range");
    EigenvalueTable table;
    table.n = n;
    table.k = k;
    for (const Partition& lambda : partitions_of(n)) {
        const std::uint64_t weight = count_syt(lambda);
        for (const StandardTableau& t : generate_syt(lambda)) {
            TableauEigenRecord rec = eigen_record(t);
            table.entries[rec.value_by_k[static_cast<std::size_t>(k)]] += weight;
        }
    }
    return table;
}

EigenvalueTable spectrum_words(const Partition& content, int k) {
    const int n = content.size();
    if (n < 1) throw std::invalid_argument("spectrum_words: content must be nonempty");
    if (k < 0 || k > n) throw std::invalid_argument("spectrum_words: k out of range");

    EigenvalueTable table;
    table.n = n;
    table.k = k;
    table.content = content;

    const std::uint64_t dim = multinomial(content);
    std::uint64_t accounted = 0;
    for (const Partition& lambda : partitions_of(n)) {
        if (!dominates(lambda, content)) continue;
        const std::uint64_t weight = kostka(lambda, content);
        if (weight == 0) continue;
        for (const StandardTableau& t : generate_syt(lambda)) {
            TableauEigenRecord rec = eigen_record(t);
            if (rec.type < k) continue;
            table.entries[rec.value_by_k[static_cast<std::size_t>(k)]] += weight;
            accounted += weight;
        }
    }
    assert(accounted <= dim);
    if (accounted < dim) table.entries[0] += dim - accounted;
    return table;
}

std::uint64_t kernel_dimension(int n, int k,
                               const std::optional<Partition>& content) {
    if (n < 1) throw std::invalid_argument("kernel_dimension: n must be >= 1");
    if (k < 0 || k > n) throw std::invalid_argument("kernel_dimension: k out of range");
    if (content && content->size() != n)
        throw std::invalid_argument("kernel_dimension: content must be a partition of n");

    std::uint64_t dim = 0;
    for (const Partition& lambda : partitions_of(n)) {
        std::uint64_t weight;
        if (content) {
            if (!dominates(lambda, *content)) continue;
            weight = kostka(lambda, *content);
            if (weight == 0) continue;
        } else {
            weight = count_syt(lambda);
        }
        for (const StandardTableau& t : generate_syt(lambda))
            if (tableau_type(t) < k) dim += weight;
    }
    return dim;
}

}  // namespace nushuffle
