#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gnarsil/gf2.hpp"

namespace gnarsil {

/* Element of GF(2)[x]/(x^L - 1) as a coefficient bitmask: bit j = x^j.
   The circulant size L is carried by the enclosing matrix; L <= 63 so a
   polynomial always fits one machine word. */
using ring_poly = std::uint64_t;

/* Cyclic convolution: product of two polynomials modulo x^L - 1. */
ring_poly ring_mul(ring_poly a, ring_poly b, std::size_t modulus);

/* Conjugation x^j -> x^{(L-j) mod L} (inversion of the shift). */
ring_poly ring_conj(ring_poly a, std::size_t modulus);

/* Dense matrix over the circulant ring, row-major. */
struct ring_matrix {
    std::size_t rows = 0, cols = 0;
    std::size_t modulus = 0;           // the circulant size L
    std::vector<ring_poly> entries;    // rows * cols, row-major

    ring_matrix() = default;
    ring_matrix(std::size_t r, std::size_t c, std::size_t l)
        : rows(r), cols(c), modulus(l), entries(r * c, 0) {}

    ring_poly& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    ring_poly at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    static ring_matrix identity(std::size_t c, std::size_t modulus);
};

bool is_zero(const ring_matrix& m);

/* Entrywise conjugation; plain transpose; conjugate transpose (both). */
ring_matrix conjugate_entries(const ring_matrix& m);
ring_matrix ring_transpose(const ring_matrix& m);
ring_matrix conjugate_transpose(const ring_matrix& m);

ring_matrix ring_mat_mul(const ring_matrix& a, const ring_matrix& b);
ring_matrix ring_kron(const ring_matrix& a, const ring_matrix& b);

/* Circulant lift: x^j becomes the L x L cyclic-shift-by-j matrix, so ring
   row i expands to binary rows i*L .. i*L+L-1, and a monomial x^j in
   column q puts a 1 at binary column q*L + (s+j) mod L of shift row s.
   This is a ring homomorphism, and lift(M . conjugate_transpose(N)) equals
   lift(M) . transpose(lift(N)) over GF(2). */
bit_matrix lift(const ring_matrix& m);

/* Entry grammar: "0" is the zero element, "1" is x^0, "x" is x^1, "x^j" a
   monomial (exponent reduced mod L), sums joined by "+" with no spaces.
   Repeated monomials cancel over GF(2). */
ring_poly parse_ring_entry(const std::string& token, std::size_t modulus,
                           const std::string& context);
std::string format_ring_entry(ring_poly p);

/* Text format: header "<rows> <cols> <L>", then rows*cols entries in the
   grammar above, whitespace-separated, row-major. */
ring_matrix read_ring_matrix_text(std::istream& in, const std::string& source_name);
void write_ring_matrix_text(std::ostream& out, const ring_matrix& m);

/* Quasi-cyclic exponent format: same header, then row-major integer
   entries, -1 for the zero element and j for the monomial x^j. */
ring_matrix read_qc_exponents(std::istream& in, const std::string& source_name);

ring_matrix load_ring_matrix_file(const std::string& path, bool qc_exponents);

} // namespace gnarsil
