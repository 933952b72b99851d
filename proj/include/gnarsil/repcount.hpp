#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gnarsil/gf2.hpp"

namespace gnarsil {

/* Counting the distinct generator blocks available to r gauge qubits:
   ordered tuples (v1, w1, ..., vr, wr) of nonzero vectors in an abstract
   2r-dimensional symplectic space where each (vi, wi) anticommutes and
   every other pair commutes, collapsed by the row permutations that
   preserve that pairing pattern. */

struct rep_count_result {
    std::size_t r = 0;
    std::uint64_t raw = 0;           // ordered-tuple count
    std::uint64_t multiplicity = 0;  // pattern-preserving row permutations
    std::uint64_t unique = 0;        // raw / multiplicity
    bool provisional = false;        // multiplicity conjectured, not measured
};

struct multiplicity_result {
    std::uint64_t value = 0;
    bool provisional = false;
};

/* Number of permutations of the 2r block rows that preserve the
   anticommuting-pair pattern, measured by enumerating all (2r)!
   permutations for r <= 4. Larger r returns the conjectured closed
   form 2^r * r! with the provisional flag set. */
multiplicity_result gauge_block_multiplicity(std::size_t r);

/* Closed-form ordered-tuple count divided by the multiplicity:
   raw = prod_{l=0}^{r-1} (2^{2r-2l} - 1) * prod_{m in 1,3,...,2r-1} 2^{2r-m}.
   Throws resource_error when the product overflows 64-bit arithmetic. */
rep_count_result formula_count(std::size_t r);

/* Exhaustive enumeration over all ordered tuples of distinct nonzero
   vectors satisfying the pairing pattern, de-duplicated by the measured
   signature multiplicity. Only r <= 2 is tractable; larger r throws
   resource_error. */
rep_count_result brute_force_count(std::size_t r);

/* Candidate-filter sizes along the lexicographically first branch of the
   brute-force enumeration: 2^{2r}-1 first choices, 2^{2r-1} partners,
   2^{2r-2}-1 third choices, and so on (15, 8, 3, 2 for r = 2). */
std::vector<std::size_t> brute_force_stepwise(std::size_t r);

/* 2^{2r} x 2^{2r} table of pairwise symplectic products over the whole
   abstract space, indexed by the integer encoding that keeps the X half
   in the low r bits. Symmetric with a zero diagonal and an all-zero
   row and column at index 0. */
bit_matrix pair_table(std::size_t r);

} // namespace gnarsil
