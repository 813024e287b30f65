#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "nushuffle/partition.hpp"
#include "nushuffle/tableau.hpp"

using namespace nushuffle;

namespace {

// Independent enumeration oracle: all compositions of n, filtered down to
// the weakly decreasing ones.
void compositions_rec(int remaining, std::vector<int>& prefix,
                      std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (int p = 1; p <= remaining; ++p) {
        prefix.push_back(p);
        compositions_rec(remaining - p, prefix, out);
        prefix.pop_back();
    }
}

std::set<std::vector<int>> partitions_oracle(int n) {
    std::vector<std::vector<int>> compositions;
    std::vector<int> prefix;
    compositions_rec(n, prefix, compositions);
    std::set<std::vector<int>> out;
    for (const auto& c : compositions)
        if (std::is_sorted(c.rbegin(), c.rend())) out.insert(c);
    if (n == 0) out.insert({});
    return out;
}

// Column-marking oracle for horizontal strips.
bool horizontal_strip_oracle(const SkewShape& shape) {
    std::set<int> used_columns;
    for (const Cell& c : shape.cells())
        if (!used_columns.insert(c.col).second) return false;
    return true;
}

// Direct semistandard-filling oracle: place a letter in every cell,
// row-major, respecting counts, weak rows and strict columns.
std::uint64_t ssyt_oracle(const Partition& lambda, const Partition& mu) {
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(lambda.rows()));
    for (int i = 0; i < lambda.rows(); ++i)
        grid[static_cast<std::size_t>(i)].assign(
            static_cast<std::size_t>(lambda.part(i)), 0);
    std::vector<int> remaining;
    for (int i = 0; i < mu.rows(); ++i) remaining.push_back(mu.part(i));

    std::uint64_t count = 0;
    auto rec = [&](auto&& self, int row, int col) -> void {
        if (row == lambda.rows()) {
            ++count;
            return;
        }
        int next_row = row, next_col = col + 1;
        if (next_col >= lambda.part(row)) {
            next_row = row + 1;
            next_col = 0;
        }
        for (int letter = 1; letter <= mu.rows(); ++letter) {
            auto lu = static_cast<std::size_t>(letter - 1);
            if (remaining[lu] == 0) continue;
            if (col > 0 &&
                grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - 1)] >
                    letter)
                continue;
            if (row > 0 && lambda.part(row - 1) > col &&
                grid[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)] >=
                    letter)
                continue;
            grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = letter;
            --remaining[lu];
            self(self, next_row, next_col);
            ++remaining[lu];
        }
    };
    rec(rec, 0, 0);
    return count;
}

// All partitions contained in lambda.
std::vector<Partition> subpartitions(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> parts(static_cast<std::size_t>(lambda.rows()), 0);
    auto rec = [&](auto&& self, int row) -> void {
        if (row == lambda.rows()) {
            std::vector<int> trimmed;
            for (int p : parts)
                if (p > 0) trimmed.push_back(p);
            out.emplace_back(std::move(trimmed));
            return;
        }
        int high = lambda.part(row);
        if (row > 0) high = std::min(high, parts[static_cast<std::size_t>(row - 1)]);
        for (int v = high; v >= 0; --v) {
            parts[static_cast<std::size_t>(row)] = v;
            self(self, row + 1);
        }
        parts[static_cast<std::size_t>(row)] = 0;
    };
    rec(rec, 0);
    return out;
}

}  // namespace

TEST_CASE("partitions_of base cases") {
    CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
    CHECK(partitions_of(1) == std::vector<Partition>{Partition({1})});
    std::vector<Partition> expected{Partition({4}), Partition({3, 1}),
                                    Partition({2, 2}), Partition({2, 1, 1}),
                                    Partition({1, 1, 1, 1})};
    CHECK(partitions_of(4) == expected);
}

TEST_CASE("partitions_of matches the composition oracle and is ordered") {
    for (int n = 0; n <= 8; ++n) {
        auto listed = partitions_of(n);
        std::set<std::vector<int>> got;
        for (const auto& p : listed) got.insert(p.parts());
        CHECK(got == partitions_oracle(n));
        CHECK(got.size() == listed.size());  // no duplicates
        for (std::size_t i = 1; i < listed.size(); ++i)
            CHECK(listed[i - 1].parts() > listed[i].parts());  // decreasing lex
    }
}

TEST_CASE("partition validation and text form") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
    CHECK(Partition::parse("3,1").parts() == std::vector<int>{3, 1});
    CHECK(Partition::parse("").empty());
    CHECK(Partition({3, 1}).to_string() == "3,1");
    CHECK(Partition::parse(Partition({4, 2, 1}).to_string()) == Partition({4, 2, 1}));
    CHECK_THROWS_AS(Partition::parse("2,x"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("1,3"), std::invalid_argument);
}

TEST_CASE("dominance examples") {
    CHECK(dominates(Partition({4}), Partition({2, 2})));
    CHECK(dominates(Partition({3, 1}), Partition({2, 2})));
    CHECK_FALSE(dominates(Partition({2, 1, 1}), Partition({2, 2})));
    CHECK(dominates(Partition({2, 2}), Partition({2, 2})));
    CHECK_THROWS_AS(dominates(Partition({2}), Partition({1})), std::invalid_argument);
}

TEST_CASE("dominance is a partial order") {
    for (int n = 1; n <= 8; ++n) {
        auto all = partitions_of(n);
        for (const auto& a : all) {
            CHECK(dominates(a, a));
            for (const auto& b : all) {
                if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
                for (const auto& c : all)
                    if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
            }
        }
    }
}

TEST_CASE("diagonal index examples") {
    CHECK(diag_index(SkewShape(Partition({5, 4, 4, 1}), Partition{})) == 7);
    CHECK(diag_index(SkewShape(Partition({6, 4}), Partition{})) == 17);
    CHECK(diag_index(SkewShape(Partition({3, 2}), Partition({3, 2}))) == 0);
}

TEST_CASE("diagonal index is additive over nesting") {
    for (int n = 0; n <= 8; ++n)
        for (const auto& lambda : partitions_of(n))
            for (const auto& mu : subpartitions(lambda)) {
                int whole = diag_index(SkewShape(lambda, Partition{}));
                int inner = diag_index(SkewShape(mu, Partition{}));
                CHECK(diag_index(SkewShape(lambda, mu)) == whole - inner);
            }
}

TEST_CASE("skew shape validation") {
    CHECK_THROWS_AS(SkewShape(Partition({2, 1}), Partition({3})),
                    std::invalid_argument);
    CHECK_THROWS_AS(SkewShape(Partition({2, 1}), Partition({1, 1, 1})),
                    std::invalid_argument);
    CHECK(SkewShape(Partition({2, 2}), Partition({1})).size() == 3);
}

TEST_CASE("horizontal strips") {
    CHECK(is_horizontal_strip(SkewShape(Partition({4, 2, 2, 1}), Partition({3, 2, 1}))));
    CHECK_FALSE(is_horizontal_strip(SkewShape(Partition({2, 2}), Partition({1}))));
    CHECK(is_horizontal_strip(SkewShape(Partition({3, 1}), Partition({3, 1}))));
    for (int n = 0; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n))
            for (const auto& mu : subpartitions(lambda)) {
                SkewShape shape(lambda, mu);
                CHECK(is_horizontal_strip(shape) == horizontal_strip_oracle(shape));
            }
}

TEST_CASE("count_syt examples") {
    CHECK(count_syt(Partition({6})) == 1);
    CHECK(count_syt(Partition({2, 1})) == 2);
    CHECK(count_syt(Partition({3, 1})) == 3);
    CHECK(count_syt(Partition{}) == 1);
}

TEST_CASE("count_syt agrees with enumeration and the n! identity") {
    for (int n = 0; n <= 8; ++n) {
        std::uint64_t sum_sq = 0;
        for (const auto& lambda : partitions_of(n)) {
            std::uint64_t f = count_syt(lambda);
            CHECK(f == generate_syt(lambda).size());
            sum_sq += f * f;
        }
        CHECK(sum_sq == factorial(n));
    }
}

TEST_CASE("kostka examples") {
    CHECK(kostka(Partition({3, 1}), Partition({2, 2})) == 1);
    CHECK(kostka(Partition({2, 1, 1}), Partition({2, 2})) == 0);
    for (int n = 1; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n)) CHECK(kostka(lambda, lambda) == 1);
    CHECK_THROWS_AS(kostka(Partition({2}), Partition({1})), std::invalid_argument);
}

TEST_CASE("kostka matches the direct filling oracle") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n))
            for (const auto& mu : partitions_of(n))
                CHECK(kostka(lambda, mu) == ssyt_oracle(lambda, mu));
}

TEST_CASE("kostka vanishes without dominance") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& lambda : partitions_of(n))
            for (const auto& mu : partitions_of(n))
                if (!dominates(lambda, mu)) CHECK(kostka(lambda, mu) == 0);
}

TEST_CASE("permutation-module dimensions") {
    // sum over lambda of kostka(lambda, mu) * f^lambda = multinomial(mu)
    for (int n = 1; n <= 7; ++n)
        for (const auto& mu : partitions_of(n)) {
            std::uint64_t dim = 0;
            for (const auto& lambda : partitions_of(n))
                dim += kostka(lambda, mu) * count_syt(lambda);
            CHECK(dim == multinomial(mu));
        }
}

TEST_CASE("counting helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(10, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(multinomial(Partition({2, 2})) == 6);
    CHECK(multinomial(Partition({1, 1, 1})) == 6);
    CHECK(multinomial(Partition({5})) == 1);
}
