#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include "squiral/grid.hpp"
#include "squiral/render.hpp"

using namespace squiral;

namespace {

BinaryGrid grid_from_rows(const std::vector<std::string>& rows) {
    BinaryGrid g(static_cast<long>(rows.size()), static_cast<long>(rows[0].size()));
    for (long r = 1; r <= g.rows(); ++r) {
        for (long c = 1; c <= g.cols(); ++c) {
            if (rows[r - 1][c - 1] == '1') {
                g.set(r, c, Cell::one);
            }
        }
    }
    return g;
}

BinaryGrid random_grid(std::mt19937& rng, long rows, long cols) {
    BinaryGrid g(rows, cols);
    std::bernoulli_distribution coin(0.5);
    for (long r = 1; r <= rows; ++r) {
        for (long c = 1; c <= cols; ++c) {
            if (coin(rng)) {
                g.set(r, c, Cell::one);
            }
        }
    }
    return g;
}

BinaryGrid subgrid(const BinaryGrid& g, long r, long c, long h, long w) {
    BinaryGrid out(h, w);
    for (long i = 0; i < h; ++i) {
        for (long j = 0; j < w; ++j) {
            out.set(i + 1, j + 1, g.get(r + i, c + j));
        }
    }
    return out;
}

// T_2 written out cell by cell, independent of the inflation path it checks.
const std::vector<std::string> kT2Rows = {
    "010101010",
    "111000111",
    "010101010",
    "101101101",
    "000000000",
    "101101101",
    "010101010",
    "111000111",
    "010101010",
};

} // namespace

TEST_CASE("cell complement is an involution") {
    REQUIRE(complement(Cell::zero) == Cell::one);
    REQUIRE(complement(Cell::one) == Cell::zero);
    REQUIRE(complement(complement(Cell::zero)) == Cell::zero);
    REQUIRE(complement(complement(Cell::one)) == Cell::one);
}

TEST_CASE("substitution rule images") {
    const SubstitutionRule rule = squiral_rule();
    REQUIRE(rule.image0 == grid_from_rows({"101", "000", "101"}));
    REQUIRE(rule.image1 == grid_from_rows({"010", "111", "010"}));

    const BinaryGrid x = cellwise_xor(rule.image0, rule.image1);
    REQUIRE(x == grid_from_rows({"111", "111", "111"}));
}

TEST_CASE("inflating a single cell gives the rule image") {
    const SubstitutionRule rule = squiral_rule();
    BinaryGrid zero(1, 1);
    REQUIRE(inflate(zero, rule) == rule.image0);

    BinaryGrid one(1, 1);
    one.set(1, 1, Cell::one);
    REQUIRE(inflate(one, rule) == rule.image1);
}

TEST_CASE("supertiles") {
    REQUIRE(supertile(0) == BinaryGrid(1, 1));
    REQUIRE(supertile(1) == grid_from_rows({"101", "000", "101"}));
    REQUIRE(supertile(2) == grid_from_rows(kT2Rows));

    const BinaryGrid t3 = supertile(3);
    REQUIRE(t3.rows() == 27);
    REQUIRE(t3.cols() == 27);
}

TEST_CASE("supertile dimensions are 3^n and levels chain by inflation") {
    const SubstitutionRule rule = squiral_rule();
    long side = 1;
    BinaryGrid t = supertile(0);
    for (unsigned n = 1; n <= 5; ++n) {
        side *= 3;
        const BinaryGrid next = supertile(n);
        REQUIRE(next.rows() == side);
        REQUIRE(next.cols() == side);
        REQUIRE(next == inflate(t, rule, side));
        t = next;
    }
}

TEST_CASE("block identities of the recursion") {
    long side = 1;
    for (unsigned n = 0; n <= 4; ++n) {
        const BinaryGrid tn = supertile(n);
        const BinaryGrid tn1 = supertile(n + 1);
        // center block is T_n
        REQUIRE(subgrid(tn1, side + 1, side + 1, side, side) == tn);
        // corner block is the complemented supertile
        REQUIRE(subgrid(tn1, 1, 1, side, side) == complement(tn));
        side *= 3;
    }
}

TEST_CASE("complement identities") {
    BinaryGrid zero(1, 1);
    BinaryGrid one(1, 1);
    one.set(1, 1, Cell::one);
    REQUIRE(complement(zero) == one);

    const SubstitutionRule rule = squiral_rule();
    REQUIRE(complement(supertile(1)) == rule.image1);

    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 20; ++trial) {
        const long rows = 1 + static_cast<long>(rng() % 70);
        const long cols = 1 + static_cast<long>(rng() % 70);
        const BinaryGrid g = random_grid(rng, rows, cols);
        REQUIRE(complement(complement(g)) == g);
        REQUIRE(inflate(complement(g), rule, 3 * std::max(rows, cols)) ==
                complement(inflate(g, rule, 3 * std::max(rows, cols))));
    }
}

TEST_CASE("grid argument and budget errors") {
    REQUIRE_THROWS_AS(BinaryGrid(0, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(BinaryGrid(3, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(supertile(10), resource_limit_error); // default budget is 9
    REQUIRE_THROWS_AS(supertile(3, 2), resource_limit_error);

    const SubstitutionRule rule = squiral_rule();
    REQUIRE_THROWS_AS(inflate(supertile(2), rule, 9), resource_limit_error);

    const BinaryGrid g(2, 2);
    REQUIRE_THROWS_AS(g.get(0, 1), std::out_of_range);
    REQUIRE_THROWS_AS(g.get(1, 3), std::out_of_range);
}

TEST_CASE("text rendering") {
    REQUIRE(to_text(supertile(1)) == "101\n000\n101\n");
    REQUIRE(to_text(supertile(0)) == "0\n");
}
