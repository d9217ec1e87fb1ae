#include <catch2/catch_amalgamated.hpp>

#include <cstdint>

#include "squiral/sequences.hpp"

using namespace squiral;

TEST_CASE("ilog3 examples") {
    REQUIRE(ilog3(1) == 0);
    REQUIRE(ilog3(2) == 0);
    REQUIRE(ilog3(3) == 1);
    REQUIRE(ilog3(242) == 4);
    REQUIRE(ilog3(243) == 5);
    REQUIRE(ilog3(244) == 5);
    REQUIRE_THROWS_AS(ilog3(0), std::invalid_argument);
}

TEST_CASE("ilog3 across all power boundaries of uint64") {
    std::uint64_t p = 1;
    for (unsigned k = 0; k < 40; ++k) {
        REQUIRE(ilog3(p) == k);
        if (p > 1) {
            REQUIRE(ilog3(p - 1) == k - 1);
        }
        REQUIRE(ilog3(p + 1) == (p == 1 ? 0u : k));
        if (p > UINT64_MAX / 3) {
            break;
        }
        p *= 3;
    }
}

TEST_CASE("closed form parameters") {
    const ClosedFormParams p4 = closed_form_params(4);
    REQUIRE(p4.alpha == 0);
    REQUIRE(p4.beta == 0);

    const ClosedFormParams p5 = closed_form_params(5);
    REQUIRE(p5.alpha == 1);
    REQUIRE(p5.beta == 0);

    // double-precision log would floor this to 4; exact arithmetic must give 5
    const ClosedFormParams p245 = closed_form_params(245);
    REQUIRE(p245.alpha == 5);
    REQUIRE(p245.beta == 4);

    REQUIRE_THROWS_AS(closed_form_params(3), std::domain_error);
}

TEST_CASE("closed form parameter inequalities") {
    for (std::uint64_t n = 4; n <= 4000; ++n) {
        const ClosedFormParams p = closed_form_params(n);
        const std::uint64_t x = n - 2;
        std::uint64_t pa = 1;
        for (unsigned i = 0; i < p.alpha; ++i) {
            pa *= 3;
        }
        std::uint64_t pb = 1;
        for (unsigned i = 0; i < p.beta; ++i) {
            pb *= 3;
        }
        REQUIRE(pa <= x);
        REQUIRE(x < 3 * pa);
        REQUIRE(2 * pb <= x);
        REQUIRE(x < 6 * pb);
        REQUIRE((p.beta == p.alpha || p.beta + 1 == p.alpha));
    }
}

TEST_CASE("closed form reproduces the initial table") {
    const std::int64_t expect[11] = {0, 2, 14, 70, 126, 270, 438, 630, 790, 958, 1134};
    for (std::uint64_t n = 1; n <= 10; ++n) {
        REQUIRE(closed_form_A(n) == expect[n]);
    }
    REQUIRE_THROWS_AS(closed_form_A(0), std::domain_error);
}

TEST_CASE("recursion system reproduces the initial table") {
    RecursionSystem sys;
    for (std::uint64_t n = 1; n <= 10; ++n) {
        const ComplexityTriple t = sys.triple(n);
        REQUIRE(t.A == kInitialA[n]);
        REQUIRE(t.B == kInitialB[n]);
        REQUIRE(t.C == kInitialC[n]);
    }
    REQUIRE_THROWS_AS(sys.triple(0), std::domain_error);
}

TEST_CASE("first indices beyond the table") {
    // A_11 = 4*A_4 + 2*B_4 + 2*C_4 + A_5 = 504 + 384 + 384 + 270
    const ComplexityTriple t11 = recursion_triple(11);
    REQUIRE(t11.A == 1542);
    REQUIRE(t11.B == t11.C);

    REQUIRE(simplified_recursion_A(13) == 2430); // 13 = 3*5-2, so 9*A_5
    REQUIRE(simplified_recursion_A(4) == 126);
    REQUIRE(closed_form_A(11) == 1542);
}

TEST_CASE("three computation paths agree on a dense prefix") {
    RecursionSystem rec;
    SimplifiedSystem simp;
    const auto tbl = rec.table(3000);
    for (std::uint64_t n = 1; n <= 3000; ++n) {
        REQUIRE(tbl[n - 1].A == closed_form_A(n));
        REQUIRE(tbl[n - 1].A == simp.a(n));
        REQUIRE(tbl[n - 1].B == tbl[n - 1].C);
    }
}

TEST_CASE("tripling identity A_{3n-2} = 9 A_n on all paths") {
    RecursionSystem rec;
    SimplifiedSystem simp;
    for (std::uint64_t n = 2; n <= 500; ++n) {
        REQUIRE(rec.triple(3 * n - 2).A == 9 * rec.triple(n).A);
        REQUIRE(simp.a(3 * n - 2) == 9 * simp.a(n));
        REQUIRE(closed_form_A(3 * n - 2) == 9 * closed_form_A(n));
    }
}

TEST_CASE("derived fractional system holds after clearing denominators") {
    // The intermediate system with thirds is not a computation path, but its
    // integer multiples must hold:
    //   3 A_{9n-7} = 19 A_{3n-2} + 3 A_{3n-1} +  9 A_{3n} - 4 A_{3n+1}
    //   3 A_{9n-4} =    A_{3n-2} + 12 A_{3n-1} + 18 A_{3n} - 4 A_{3n+1}
    //   3 A_{9n-1} =   -A_{3n-2} + 21 A_{3n}  +  7 A_{3n+1}
    RecursionSystem rec;
    const auto tbl = rec.table(4600);
    const auto a = [&](std::uint64_t n) { return tbl[n - 1].A; };
    for (std::uint64_t n = 2; n <= 500; ++n) {
        REQUIRE(3 * a(9 * n - 7) ==
                19 * a(3 * n - 2) + 3 * a(3 * n - 1) + 9 * a(3 * n) - 4 * a(3 * n + 1));
        REQUIRE(3 * a(9 * n - 4) ==
                a(3 * n - 2) + 12 * a(3 * n - 1) + 18 * a(3 * n) - 4 * a(3 * n + 1));
        REQUIRE(3 * a(9 * n - 1) == -a(3 * n - 2) + 21 * a(3 * n) + 7 * a(3 * n + 1));
    }
}

TEST_CASE("sequence table export") {
    const auto one = sequence_table(1);
    REQUIRE(one.size() == 1);
    REQUIRE(one[0] == ComplexityTriple{1, 2, 4, 4});

    const auto ten = sequence_table(10);
    REQUIRE(ten.size() == 10);
    for (std::uint64_t n = 1; n <= 10; ++n) {
        REQUIRE(ten[n - 1] == ComplexityTriple{n, kInitialA[n], kInitialB[n], kInitialC[n]});
    }

    REQUIRE(sequence_table(137).size() == 137);
}

TEST_CASE("memo cap keeps results correct") {
    RecursionSystem capped(4);
    RecursionSystem uncapped;
    for (std::uint64_t n : {11ull, 100ull, 1234ull, 99999ull}) {
        REQUIRE(capped.triple(n) == uncapped.triple(n));
    }
}

TEST_CASE("large indices stay exact in 128-bit arithmetic") {
    // at n = 10^9 the closed form is far outside 64-bit range
    const int128 v = closed_form_A(1000000000ull);
    REQUIRE(v > 0);
    REQUIRE(v == recursion_triple(1000000000ull).A);
    REQUIRE(v == simplified_recursion_A(1000000000ull));
    REQUIRE_FALSE(fits_int64(v));

    REQUIRE_THROWS_AS(closed_form_A(kMaxSequenceIndex + 1), std::overflow_error);
    REQUIRE_THROWS_AS(recursion_triple(kMaxSequenceIndex + 1), std::overflow_error);
}

TEST_CASE("int128 decimal formatting") {
    REQUIRE(to_string(int128{0}) == "0");
    REQUIRE(to_string(int128{-1}) == "-1");
    REQUIRE(to_string(int128{1234567890}) == "1234567890");
    int128 big = 1;
    for (int i = 0; i < 12; ++i) {
        big *= 1000;
    }
    REQUIRE(to_string(big) == "1" + std::string(36, '0'));
    REQUIRE(to_string(-big) == "-1" + std::string(36, '0'));
}
