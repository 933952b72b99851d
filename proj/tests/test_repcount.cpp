#include <doctest.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "gnarsil/errors.hpp"
#include "gnarsil/repcount.hpp"

using namespace gnarsil;

TEST_CASE("closed-form counts for small block sizes") {
    rep_count_result r1 = formula_count(1);
    CHECK(r1.raw == 6);
    CHECK(r1.multiplicity == 2);
    CHECK(r1.unique == 3);
    CHECK_FALSE(r1.provisional);

    rep_count_result r2 = formula_count(2);
    CHECK(r2.raw == 720);
    CHECK(r2.multiplicity == 8);
    CHECK(r2.unique == 90);
    CHECK_FALSE(r2.provisional);

    rep_count_result r3 = formula_count(3);
    CHECK(r3.raw == 1451520);
    CHECK(r3.multiplicity == 48);
    CHECK(r3.unique == 30240);
    CHECK_FALSE(r3.provisional);

    rep_count_result r4 = formula_count(4);
    CHECK(r4.multiplicity == 384);
    CHECK_FALSE(r4.provisional);
    CHECK(r4.raw % r4.multiplicity == 0);
    CHECK(r4.unique == r4.raw / r4.multiplicity);
}

TEST_CASE("multiplicity beyond measured sizes is conjectural") {
    multiplicity_result m5 = gauge_block_multiplicity(5);
    CHECK(m5.value == 3840);
    CHECK(m5.provisional);

    rep_count_result r5 = formula_count(5);
    CHECK(r5.provisional);
    CHECK(r5.multiplicity == 3840);
    CHECK(r5.raw % r5.multiplicity == 0);
    CHECK(r5.unique == r5.raw / r5.multiplicity);

    /* Measured multiplicities follow 2^r r! where we can check them. */
    CHECK(gauge_block_multiplicity(1).value == 2);
    CHECK(gauge_block_multiplicity(2).value == 8);
    CHECK(gauge_block_multiplicity(3).value == 48);
    CHECK(gauge_block_multiplicity(4).value == 384);
    CHECK_FALSE(gauge_block_multiplicity(4).provisional);
}

TEST_CASE("oversized counts are refused, not mangled") {
    CHECK_THROWS_AS(formula_count(6), resource_error);
    CHECK_THROWS_AS(brute_force_count(3), resource_error);
    CHECK_THROWS_AS(pair_table(9), resource_error);
    CHECK_THROWS_AS(formula_count(0), std::invalid_argument);
    CHECK_THROWS_AS(gauge_block_multiplicity(0), std::invalid_argument);
}

TEST_CASE("brute force agrees with the closed form") {
    for (std::size_t r = 1; r <= 2; ++r) {
        rep_count_result brute = brute_force_count(r);
        rep_count_result closed = formula_count(r);
        CHECK(brute.raw == closed.raw);
        CHECK(brute.multiplicity == closed.multiplicity);
        CHECK(brute.unique == closed.unique);
        CHECK_FALSE(brute.provisional);
    }
}

TEST_CASE("stepwise candidate counts along the first branch") {
    CHECK(brute_force_stepwise(2) == std::vector<std::size_t>{15, 8, 3, 2});
    CHECK(brute_force_stepwise(1) == std::vector<std::size_t>{3, 2});
}

TEST_CASE("pair table structure") {
    bit_matrix t = pair_table(2);
    REQUIRE(t.row_count() == 16);
    REQUIRE(t.cols == 16);
    for (std::size_t i = 0; i < 16; ++i) {
        CHECK_FALSE(t.row(i).get(i));               // nothing anti-commutes
        CHECK_FALSE(t.row(0).get(i));               //   with itself or with
        for (std::size_t j = 0; j < 16; ++j)        //   the identity
            CHECK(t.row(i).get(j) == t.row(j).get(i));
    }
}

TEST_CASE("pair table matches the published two-pair matrix") {
    /* Published rows index the Pauli by bits (a1 a2 b1 b2); the library
       packs [a | b] with a in the low half. */
    std::vector<std::string> pub = {
        "0000000000000000", "0000111100001111", "0000000011111111",
        "0000111111110000", "0101010101010101", "0101101001011010",
        "0101010110101010", "0101101010100101", "0011001100110011",
        "0011110000111100", "0011001111001100", "0011110011000011",
        "0110011001100110", "0110100101101001", "0110011010011001",
        "0110100110010110",
    };
    auto vec = [](std::size_t i) {
        std::size_t a = ((i >> 3) & 1) * 2 + ((i >> 2) & 1);
        std::size_t b = ((i >> 1) & 1) * 2 + (i & 1);
        return a + (b << 2);
    };
    bit_matrix t = pair_table(2);
    for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = 0; j < 16; ++j)
            CHECK(t.row(vec(i)).get(vec(j)) == (pub[i][j] == '1'));
}

TEST_CASE("pair table is invariant under symplectic relabeling") {
    bit_matrix t = pair_table(2);
    auto sym = [&](std::size_t u, std::size_t v) { return t.row(u).get(v); };

    /* Draw a random binary symplectic 4x4 map by rejection: images of the
       four basis vectors must reproduce the basis pairing. */
    std::mt19937 rng(99);
    std::vector<std::size_t> img(4);
    while (true) {
        for (auto& m : img)
            m = rng() & 15u;
        bool ok = true;
        for (std::size_t i = 0; i < 4 && ok; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                bool want = (i + 2 == j) || (j + 2 == i);
                if (sym(img[i], img[j]) != want) {
                    ok = false;
                    break;
                }
            }
        if (ok)
            break;
    }
    auto apply = [&](std::size_t u) {
        std::size_t out = 0;
        for (std::size_t i = 0; i < 4; ++i)
            if ((u >> i) & 1u)
                out ^= img[i];
        return out;
    };
    /* Symplectic maps are automatically invertible; spot-check anyway. */
    std::vector<bool> seen(16, false);
    for (std::size_t u = 0; u < 16; ++u)
        seen[apply(u)] = true;
    for (bool s : seen)
        CHECK(s);
    for (std::size_t u = 0; u < 16; ++u)
        for (std::size_t v = 0; v < 16; ++v)
            CHECK(sym(apply(u), apply(v)) == sym(u, v));
}
