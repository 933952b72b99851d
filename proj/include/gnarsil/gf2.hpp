#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gnarsil {

/* Dense bit vector over GF(2), packed into 64-bit words.
   Bit i corresponds to column (or qubit) i; word 0 holds bits 0..63.
   Bits past size() in the last word are kept at zero. */
class bit_vector {
public:
    bit_vector() = default;
    explicit bit_vector(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i, bool value) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    bit_vector& operator^=(const bit_vector& other);
    friend bit_vector operator^(bit_vector a, const bit_vector& b) {
        a ^= b;
        return a;
    }

    bool operator==(const bit_vector& other) const = default;

    bool any() const;
    std::size_t popcount() const;

    /* GF(2) inner product: parity of the bitwise AND. */
    int dot(const bit_vector& other) const;

    /* Index of the lowest set bit, or size() when the vector is zero. */
    std::size_t lowest_set() const;

    /* Copy of bits [start, start+len) as a fresh vector. */
    bit_vector slice(std::size_t start, std::size_t len) const;

    /* XORs other into this vector with its bit 0 landing at `offset`.
       The shifted range must fit inside this vector. */
    void xor_shifted(const bit_vector& other, std::size_t offset);

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

/* Rectangular bit matrix: a list of equal-length rows. */
struct bit_matrix {
    std::size_t cols = 0;
    std::vector<bit_vector> rows;

    bit_matrix() = default;
    explicit bit_matrix(std::size_t ncols) : cols(ncols) {}
    bit_matrix(std::size_t ncols, std::vector<bit_vector> r)
        : cols(ncols), rows(std::move(r)) {}

    std::size_t row_count() const { return rows.size(); }
    const bit_vector& row(std::size_t i) const { return rows[i]; }
    bit_vector& row(std::size_t i) { return rows[i]; }
    void add_row(bit_vector v);

    bool operator==(const bit_matrix& other) const = default;

    /* Rows given as strings of '0'/'1'; column 0 is the leftmost character. */
    static bit_matrix from_strings(const std::vector<std::string>& rows);
    static bit_matrix identity(std::size_t n);
};

/* String form of a row: character j is column j. */
std::string to_string(const bit_vector& v);
bit_vector vector_from_string(const std::string& s);

struct rref_result {
    bit_matrix reduced;      // independent rows only, fully reduced
    std::vector<std::size_t> pivots; // ascending pivot columns, one per row
};

/* Reduced row echelon form with lowest-index pivot columns. */
rref_result rref(const bit_matrix& m);

std::size_t rank(const bit_matrix& m);

/* Right-kernel basis, one vector per free column in ascending column order.
   Each basis vector has a 1 at its free column plus the matching pivot bits. */
bit_matrix kernel(const bit_matrix& m);

/* Canonical solution (free variables zero) of sys.row(i) . x = rhs[i],
   or nullopt when the system is inconsistent. */
std::optional<bit_vector> solve(const bit_matrix& sys,
                                const std::vector<std::uint8_t>& rhs);

/* Kronecker product: row (i,j) maps to a.row(i) x b.row(j); the block of
   columns [p*b.cols, (p+1)*b.cols) carries b's row when a.row(i)[p] = 1. */
bit_matrix kron(const bit_matrix& a, const bit_matrix& b);

bit_matrix transpose(const bit_matrix& m);

/* Matrix product over GF(2). */
bit_matrix mat_mul(const bit_matrix& a, const bit_matrix& b);

bool in_row_space(const bit_matrix& m, const bit_vector& v);

/* Incremental row-space membership and rank. Rows are kept mutually
   reduced so membership tests are a single ascending-pivot pass. */
class row_space {
public:
    explicit row_space(std::size_t ncols) : ncols_(ncols) {}
    row_space(std::size_t ncols, const bit_matrix& base);
    row_space(std::size_t ncols, const std::vector<bit_vector>& base);

    bit_vector reduce(bit_vector v) const;
    bool contains(const bit_vector& v) const { return !reduce(v).any(); }

    /* Adds v when independent of the current span; returns whether rank grew. */
    bool add(bit_vector v);

    std::size_t rank() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }

private:
    std::size_t ncols_;
    std::vector<bit_vector> rows_;
    std::map<std::size_t, std::size_t> pivot_row_;
};

/* Lexicographic support enumeration.  first_combination gives {0..w-1};
   next_combination advances in place and returns false past the end. */
std::vector<std::size_t> first_combination(std::size_t w);
bool next_combination(std::vector<std::size_t>& c, std::size_t n);

/* Binomial coefficient, saturating at the maximum representable value. */
std::uint64_t binomial(std::size_t n, std::size_t k);

/* The combination of the given lexicographic rank (0-based). */
std::vector<std::size_t> combination_from_rank(std::size_t n, std::size_t w,
                                               std::uint64_t rank);

/* All C(n,w) weight-w vectors in lexicographic support order. */
std::vector<bit_vector> enumerate_weight_w(std::size_t n, std::size_t w);

/* Text format shared by every CLI command that accepts a binary matrix:
   first line "<rows> <cols>", then one line of '0'/'1' per row. */
bit_matrix read_matrix_text(std::istream& in, const std::string& source_name);
void write_matrix_text(std::ostream& out, const bit_matrix& m);
bit_matrix load_matrix_file(const std::string& path);

} // namespace gnarsil
