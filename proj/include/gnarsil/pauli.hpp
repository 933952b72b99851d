#pragma once

#include <cstddef>
#include <string>

#include "gnarsil/gf2.hpp"

namespace gnarsil {

/* An n-qubit Pauli operator is stored as a length-2n bit vector [a|b]:
   bit q       = X acting on qubit q   (a half),
   bit n + q   = Z acting on qubit q   (b half),
   both set    = Y on qubit q.
   Phases are dropped throughout; products are entrywise XOR. */

inline std::size_t qubit_count(const bit_vector& p) { return p.size() / 2; }

bit_vector x_half(const bit_vector& p);
bit_vector z_half(const bit_vector& p);

/* [a|b] -> [b|a]; turns the symplectic product into a plain inner product. */
bit_vector swap_halves(const bit_vector& p);

/* Builds [a|b] from two length-n halves. */
bit_vector make_pauli(const bit_vector& a, const bit_vector& b);

/* Embeds a length-n vector as a pure-X ([a|0]) or pure-Z ([0|b]) operator. */
bit_vector pure_x(const bit_vector& a);
bit_vector pure_z(const bit_vector& b);

bool is_x_type(const bit_vector& p);
bool is_z_type(const bit_vector& p);

/* a_u . b_v XOR b_u . a_v; zero exactly when the operators commute.
   Throws when lengths differ or are odd. */
int symplectic_product(const bit_vector& u, const bit_vector& v);

bool commutes(const bit_vector& u, const bit_vector& v);

/* Number of qubits touched by a non-identity factor. */
std::size_t pauli_weight(const bit_vector& p);

/* Grammar: "I" alone, or ([XYZ]<digits>)+, 1-based qubit indices up to n,
   no separators, case-sensitive.  Repeated factors on one qubit multiply
   (XOR) together.  Errors carry the 1-based position. */
bit_vector parse_pauli(const std::string& s, std::size_t n);

/* Factors in ascending qubit order, Y where X and Z overlap; "I" if empty. */
std::string print_pauli(const bit_vector& p);

} // namespace gnarsil
