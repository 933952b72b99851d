#include <doctest.h>

#include <sstream>
#include <string>

#include "gnarsil/errors.hpp"
#include "gnarsil/gf2.hpp"
#include "gnarsil/ring.hpp"

using namespace gnarsil;

TEST_CASE("ring arithmetic rotates and cancels") {
    /* L = 3: x * x^2 = x^3 = 1. */
    CHECK(ring_mul(0b010, 0b100, 3) == 0b001);
    /* (1 + x)^2 = 1 + x^2 over GF(2). */
    CHECK(ring_mul(0b011, 0b011, 3) == 0b101);
    CHECK(ring_mul(0b011, 0, 3) == 0);
    /* Conjugation inverts the shift: x -> x^{L-1}. */
    CHECK(ring_conj(0b010, 3) == 0b100);
    CHECK(ring_conj(0b001, 3) == 0b001);
    CHECK(ring_conj(0b110, 5) == 0b11000);
}

TEST_CASE("lift of a shift matrix is the cyclic permutation") {
    ring_matrix m(1, 1, 3);
    m.at(0, 0) = 0b010;   // x
    bit_matrix want = bit_matrix::from_strings({"010", "001", "100"});
    CHECK(lift(m) == want);

    /* Conjugate-transpose lifts to the binary transpose. */
    CHECK(lift(conjugate_transpose(m)) == transpose(lift(m)));

    ring_matrix id = ring_matrix::identity(2, 4);
    CHECK(lift(id) == bit_matrix::identity(8));
}

TEST_CASE("ring matrix product and kronecker lift correctly") {
    ring_matrix a(1, 2, 3), b(2, 1, 3);
    a.at(0, 0) = 0b010;       // x
    a.at(0, 1) = 0b011;       // 1 + x
    b.at(0, 0) = 0b100;       // x^2
    b.at(1, 0) = 0b001;       // 1
    ring_matrix p = ring_mat_mul(a, b);
    /* x . x^2 + (1+x) . 1 = 1 + 1 + x = x. */
    CHECK(p.at(0, 0) == 0b010);
    CHECK(lift(p) == mat_mul(lift(a), lift(b)));

    ring_matrix k = ring_kron(a, b);
    CHECK(k.rows == 2);
    CHECK(k.cols == 2);
    CHECK(k.at(0, 0) == ring_mul(a.at(0, 0), b.at(0, 0), 3));
    CHECK(lift(k).row_count() == 6);
}

TEST_CASE("entry grammar accepts monomial sums") {
    CHECK(parse_ring_entry("0", 5, "t") == 0);
    CHECK(parse_ring_entry("1", 5, "t") == 0b00001);
    CHECK(parse_ring_entry("x", 5, "t") == 0b00010);
    CHECK(parse_ring_entry("x^3", 5, "t") == 0b01000);
    CHECK(parse_ring_entry("1+x+x^4", 5, "t") == 0b10011);
    /* Exponents reduce modulo L; repeated monomials cancel. */
    CHECK(parse_ring_entry("x^5", 5, "t") == 0b00001);
    CHECK(parse_ring_entry("x+x", 5, "t") == 0);
    CHECK(format_ring_entry(0b01011) == "1+x+x^3");
    CHECK(format_ring_entry(0) == "0");
    CHECK(format_ring_entry(0b00010) == "x");
}

TEST_CASE("entry grammar rejects malformed tokens") {
    CHECK_THROWS_AS(parse_ring_entry("x^", 5, "t"), parse_error);
    CHECK_THROWS_AS(parse_ring_entry("1+", 5, "t"), parse_error);
    CHECK_THROWS_AS(parse_ring_entry("", 5, "t"), parse_error);
    CHECK_THROWS_AS(parse_ring_entry("y", 5, "t"), parse_error);
    CHECK_THROWS_AS(parse_ring_entry("x^x", 5, "t"), parse_error);
    CHECK_THROWS_AS(parse_ring_entry("2", 5, "t"), parse_error);
    /* Absurd exponents are refused rather than reduced. */
    CHECK_THROWS_AS(parse_ring_entry("x^99999999", 5, "t"), parse_error);
}

TEST_CASE("ring matrix text round trips") {
    ring_matrix m(2, 2, 7);
    m.at(0, 0) = 0b0000001;
    m.at(0, 1) = 0b0001010;
    m.at(1, 0) = 0;
    m.at(1, 1) = 0b1000001;
    std::ostringstream out;
    write_ring_matrix_text(out, m);
    std::istringstream in(out.str());
    ring_matrix back = read_ring_matrix_text(in, "buffer");
    CHECK(back.rows == m.rows);
    CHECK(back.cols == m.cols);
    CHECK(back.modulus == m.modulus);
    CHECK(back.entries == m.entries);
}

TEST_CASE("ring matrix header is validated") {
    std::istringstream zero_l("1 1 0\n1\n");
    CHECK_THROWS_AS(read_ring_matrix_text(zero_l, "buffer"), parse_error);
    std::istringstream big_l("1 1 64\n1\n");
    CHECK_THROWS_AS(read_ring_matrix_text(big_l, "buffer"), parse_error);
    std::istringstream missing("1 2 3\n1\n");
    CHECK_THROWS_AS(read_ring_matrix_text(missing, "buffer"), parse_error);
    std::istringstream ok("1 1 63\n1\n");
    CHECK(read_ring_matrix_text(ok, "buffer").modulus == 63);
}

TEST_CASE("quasi-cyclic exponent format") {
    std::istringstream in("2 2 4\n0 -1\n3 1\n");
    ring_matrix m = read_qc_exponents(in, "buffer");
    CHECK(m.at(0, 0) == 0b0001);
    CHECK(m.at(0, 1) == 0);
    CHECK(m.at(1, 0) == 0b1000);
    CHECK(m.at(1, 1) == 0b0010);

    std::istringstream bad("1 1 4\n4\n");
    CHECK_THROWS_AS(read_qc_exponents(bad, "buffer"), parse_error);
    std::istringstream worse("1 1 4\n-2\n");
    CHECK_THROWS_AS(read_qc_exponents(worse, "buffer"), parse_error);
}
