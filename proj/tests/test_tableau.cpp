#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "nushuffle/partition.hpp"
#include "nushuffle/tableau.hpp"

using namespace nushuffle;

namespace {

StandardTableau tab(const std::string& text) { return StandardTableau::parse(text); }

std::vector<StandardTableau> all_syt(int n) {
    std::vector<StandardTableau> out;
    for (const auto& lambda : partitions_of(n))
        for (const auto& t : generate_syt(lambda)) out.push_back(t);
    return out;
}

std::uint64_t desarrangement_count(const Partition& mu) {
    std::uint64_t d = 0;
    for (const auto& t : generate_syt(mu))
        if (is_desarrangement(t)) ++d;
    return d;
}

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

TEST_CASE("tableau validation") {
    CHECK(StandardTableau{}.empty());
    CHECK(tab("1 2 5/3 4 7/6").size() == 7);
    CHECK_THROWS_AS(tab("1 1/2 2"), std::invalid_argument);   // repeats
    CHECK_THROWS_AS(tab("2 1"), std::invalid_argument);       // row not increasing
    CHECK_THROWS_AS(tab("1 3/2 2"), std::invalid_argument);   // repeat elsewhere
    CHECK_THROWS_AS(tab("2 3/1"), std::invalid_argument);     // column violation
    CHECK_THROWS_AS(tab("1/2 3"), std::invalid_argument);     // rows grow longer
    CHECK_THROWS_AS(tab("1 2 4"), std::invalid_argument);     // entries not 1..n
}

TEST_CASE("tableau text round trip") {
    for (const auto& text : {"1", "1 2 5/3 4 7/6", "1 3/2 4", "1/2/3"})
        CHECK(tab(text).to_string() == text);
}

TEST_CASE("generate_syt small shapes") {
    auto column = generate_syt(Partition({1, 1}));
    REQUIRE(column.size() == 1);
    CHECK(column[0] == tab("1/2"));

    auto hook = generate_syt(Partition({2, 1}));
    REQUIRE(hook.size() == 2);
    CHECK(hook[0] == tab("1 2/3"));
    CHECK(hook[1] == tab("1 3/2"));

    auto empty = generate_syt(Partition{});
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].empty());

    // Deterministic order for (3,1): row choices in lexicographic order.
    auto threes = generate_syt(Partition({3, 1}));
    REQUIRE(threes.size() == 3);
    CHECK(threes[0] == tab("1 2 3/4"));
    CHECK(threes[1] == tab("1 2 4/3"));
    CHECK(threes[2] == tab("1 3 4/2"));
}

TEST_CASE("generate_syt yields valid distinct tableaux of the right shape") {
    for (int n = 0; n <= 8; ++n)
        for (const auto& lambda : partitions_of(n)) {
            auto list = generate_syt(lambda);
            std::set<std::string> seen;
            for (const auto& t : list) {
                CHECK(t.shape() == lambda);
                CHECK(seen.insert(t.to_string()).second);
            }
        }
}

TEST_CASE("ascents") {
    CHECK(ascents(tab("1 2 3 9/4 6/5 8/7")) == std::set<int>{1, 2, 5, 7, 8, 9});
    CHECK(ascents(tab("1 2 3 4")) == std::set<int>{1, 2, 3, 4});
    CHECK(ascents(tab("1/2/3/4")) == std::set<int>{4});
    CHECK_THROWS_AS(ascents(StandardTableau{}), std::invalid_argument);
    for (const auto& t : all_syt(7)) CHECK_FALSE(ascents(t).empty());
}

TEST_CASE("desarrangement classification of sizes 2 and 3") {
    CHECK_FALSE(is_desarrangement(tab("1 2")));
    CHECK(is_desarrangement(tab("1/2")));
    CHECK_FALSE(is_desarrangement(tab("1 2 3")));
    CHECK_FALSE(is_desarrangement(tab("1 2/3")));
    CHECK(is_desarrangement(tab("1 3/2")));
    CHECK_FALSE(is_desarrangement(tab("1/2/3")));
    CHECK(is_desarrangement(StandardTableau{}));
    CHECK_FALSE(is_desarrangement(tab("1")));
}

TEST_CASE("delta slide examples") {
    auto [shrunk, cell] = delta(tab("1 2 5/3 4 7/6"));
    CHECK(shrunk == tab("1 3 4/2 6/5"));
    CHECK(cell == Cell{2, 3});

    auto [single, corner] = delta(tab("1"));
    CHECK(single.empty());
    CHECK(corner == Cell{1, 1});

    auto [column, top] = delta(tab("1 2/3/4"));
    CHECK(column == tab("1/2/3"));
    CHECK(top == Cell{1, 2});

    CHECK_THROWS_AS(delta(StandardTableau{}), std::invalid_argument);
}

TEST_CASE("delta shrinks by exactly the vacated cell") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& t : all_syt(n)) {
            auto [shrunk, cell] = delta(t);
            CHECK(shrunk.size() == n - 1);
            SkewShape diff(t.shape(), shrunk.shape());
            auto cells = diff.cells();
            REQUIRE(cells.size() == 1);
            CHECK(cells[0] == cell);
        }
}

TEST_CASE("type table for size 4") {
    std::vector<std::pair<std::string, int>> expected{
        {"1 2 3 4", 4}, {"1 2 3/4", 2}, {"1 2 4/3", 1}, {"1 3 4/2", 0},
        {"1 2/3 4", 1}, {"1 3/2 4", 0}, {"1 2/3/4", 2}, {"1 3/2/4", 0},
        {"1 4/2/3", 1}, {"1/2/3/4", 0}};
    for (const auto& [text, type] : expected) CHECK(tableau_type(tab(text)) == type);
    CHECK(tableau_type(StandardTableau{}) == 0);
}

TEST_CASE("type of the size-9 example") {
    StandardTableau t = tab("1 2 3 9/4 6/5 8/7");
    CHECK(tableau_type(t) == 3);
    StandardTableau cur = t;
    for (int i = 0; i < 3; ++i) cur = delta(cur).first;
    CHECK(cur == tab("1 3 6/2 5/4"));
    // The three vacated cells form the expected strip.
    DeltaChain chain = delta_chain(t);
    CHECK(chain.type == 3);
    CHECK(chain.terminal == cur);
    CHECK(chain.steps[0].removed == Cell{1, 4});
    CHECK(chain.steps[1].removed == Cell{3, 2});
    CHECK(chain.steps[2].removed == Cell{4, 1});
}

TEST_CASE("delta chain of a two-cell row") {
    DeltaChain chain = delta_chain(tab("1 2"));
    REQUIRE(chain.steps.size() == 2);
    CHECK(chain.steps[0].removed == Cell{1, 2});
    CHECK(chain.steps[0].diag == 1);
    CHECK(chain.steps[1].removed == Cell{1, 1});
    CHECK(chain.steps[1].diag == 0);
    CHECK(chain.type == 2);
    CHECK(chain.terminal.empty());

    DeltaChain trivial = delta_chain(StandardTableau{});
    CHECK(trivial.steps.empty());
    CHECK(trivial.type == 0);
}

TEST_CASE("chain structure: sizes, terminal, and the strip property") {
    for (int n = 0; n <= 8; ++n)
        for (const auto& t : all_syt(n)) {
            DeltaChain chain = delta_chain(t);
            CHECK(chain.steps.size() == static_cast<std::size_t>(n));
            for (std::size_t j = 0; j < chain.steps.size(); ++j)
                CHECK(chain.steps[j].before.size() == n - static_cast<int>(j));
            CHECK(is_desarrangement(chain.terminal));
            for (int j = 0; j < chain.type; ++j)
                CHECK_FALSE(is_desarrangement(chain.steps[static_cast<std::size_t>(j)].before));
            CHECK(chain.type == tableau_type(t));

            // First type(t) removed cells form a horizontal strip of that size.
            SkewShape strip(t.shape(), chain.terminal.shape());
            CHECK(strip.size() == chain.type);
            CHECK(is_horizontal_strip(strip));
            std::set<int> columns;
            for (int j = 0; j < chain.type; ++j)
                CHECK(columns.insert(chain.steps[static_cast<std::size_t>(j)].removed.col)
                          .second);
        }
}

TEST_CASE("strip decomposition dimension identity") {
    // sum over horizontal strips lambda/mu of f^lambda * d^mu equals n!,
    // where d^mu counts desarrangement tableaux of shape mu.
    for (int n = 1; n <= 7; ++n) {
        std::uint64_t total = 0;
        for (const auto& lambda : partitions_of(n))
            for (const auto& mu : subpartitions(lambda)) {
                SkewShape shape(lambda, mu);
                if (!is_horizontal_strip(shape)) continue;
                total += count_syt(lambda) * desarrangement_count(mu);
            }
        CHECK(total == factorial(n));
    }
}
