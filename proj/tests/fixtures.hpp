#pragma once

/* Shared fixtures for the test suite: a nine-qubit concatenated-repetition
   code (X checks spanning two rows of three, Z checks on adjacent pairs),
   the rotated 3x3 surface code with explicit logical representatives, and
   small helpers for turning rows into readable Pauli strings. */

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "gnarsil/gf2.hpp"
#include "gnarsil/pauli.hpp"
#include "gnarsil/split.hpp"
#include "gnarsil/tableau.hpp"

namespace fixtures {

inline gnarsil::bit_vector support_vector(std::size_t n,
                                          std::initializer_list<std::size_t> bits) {
    gnarsil::bit_vector v(n);
    for (std::size_t b : bits)
        v.set(b, true);
    return v;
}

inline gnarsil::css_code shor_code() {
    gnarsil::css_code code;
    code.n = 9;
    code.h_x = gnarsil::bit_matrix::from_strings({
        "111111000",
        "000111111",
    });
    code.h_z = gnarsil::bit_matrix::from_strings({
        "110000000",
        "011000000",
        "000110000",
        "000011000",
        "000000110",
        "000000011",
    });
    return code;
}

inline gnarsil::tableau shor_tableau() {
    return gnarsil::build_css_tableau(shor_code());
}

/* Combines the Z checks pairwise so rows 3 and 4 become the weight-6
   products Z1Z2Z4Z5Z7Z8 and Z2Z3Z5Z6Z8Z9, leaving rows 5..8 redundant
   against them - the starting point for the gauge-splitting runs. */
inline gnarsil::tableau shor_preprocessed() {
    gnarsil::tableau t = shor_tableau();
    t = gnarsil::multiply_stabilizer_rows(t, 3, {5, 7});
    t = gnarsil::multiply_stabilizer_rows(t, 4, {6, 8});
    return t;
}

inline gnarsil::css_code surface_code() {
    gnarsil::css_code code;
    code.n = 9;
    code.h_x = gnarsil::bit_matrix(9);
    code.h_x.add_row(support_vector(9, {0, 1, 3, 4}));
    code.h_x.add_row(support_vector(9, {4, 5, 7, 8}));
    code.h_x.add_row(support_vector(9, {1, 2}));
    code.h_x.add_row(support_vector(9, {6, 7}));
    code.h_z = gnarsil::bit_matrix(9);
    code.h_z.add_row(support_vector(9, {1, 2, 4, 5}));
    code.h_z.add_row(support_vector(9, {3, 4, 6, 7}));
    code.h_z.add_row(support_vector(9, {0, 3}));
    code.h_z.add_row(support_vector(9, {5, 8}));
    return code;
}

inline gnarsil::bit_matrix surface_lx() {
    gnarsil::bit_matrix m(9);
    m.add_row(support_vector(9, {1, 4, 7}));
    return m;
}

inline gnarsil::bit_matrix surface_lz() {
    gnarsil::bit_matrix m(9);
    m.add_row(support_vector(9, {3, 4, 5}));
    return m;
}

inline gnarsil::tableau surface_tableau() {
    return gnarsil::build_css_tableau(surface_code(), surface_lx(), surface_lz());
}

inline std::string row_pauli(const gnarsil::tableau& t, std::size_t i) {
    return gnarsil::print_pauli(t.rows.row(i));
}

inline std::vector<std::string> pauli_strings(const std::vector<gnarsil::bit_vector>& rows) {
    std::vector<std::string> out;
    out.reserve(rows.size());
    for (const auto& r : rows)
        out.push_back(gnarsil::print_pauli(r));
    return out;
}

inline std::vector<std::string> pauli_strings(const gnarsil::bit_matrix& m) {
    return pauli_strings(m.rows);
}

inline std::vector<std::size_t> sorted_pauli_weights(const gnarsil::bit_matrix& m) {
    std::vector<std::size_t> out;
    out.reserve(m.row_count());
    for (const auto& r : m.rows)
        out.push_back(gnarsil::pauli_weight(r));
    std::sort(out.begin(), out.end());
    return out;
}

/* Generators of the gauge group of a split tableau: the kept stabilizer
   rows plus, for every promoted row, its symplectic partner. */
inline gnarsil::bit_matrix gauge_group_rows(const gnarsil::tableau& t) {
    gnarsil::bit_matrix m(2 * t.n);
    for (std::size_t i = t.s_begin(); i < t.s_end(); ++i)
        m.add_row(t.rows.row(i));
    for (std::size_t i : t.gauge_rows)
        m.add_row(t.rows.row(i + t.n));
    return m;
}

/* Every element of the span of `gens`, ordered by ascending combination
   mask over the greedy independent basis (bit 0 = first basis row). */
inline std::vector<gnarsil::bit_vector> span_elements(
    const std::vector<gnarsil::bit_vector>& gens, std::size_t nbits) {
    std::vector<gnarsil::bit_vector> basis;
    gnarsil::row_space rs(nbits);
    for (const auto& g : gens)
        if (rs.add(g))
            basis.push_back(g);
    std::vector<gnarsil::bit_vector> out;
    out.reserve(std::size_t{1} << basis.size());
    for (std::size_t mask = 0; mask < (std::size_t{1} << basis.size()); ++mask) {
        gnarsil::bit_vector v(nbits);
        for (std::size_t i = 0; i < basis.size(); ++i)
            if ((mask >> i) & 1u)
                v ^= basis[i];
        out.push_back(v);
    }
    return out;
}

/* First pair of weight-a gauge-group elements whose product has weight b
   and lies in the span of `center`, as printed strings (g1, g2, product);
   empty when no such pair exists.  Pairs are scanned lexicographically
   over the weight-a elements in span order. */
inline std::vector<std::string> weight_pair_in_span(
    const std::vector<gnarsil::bit_vector>& gens,
    const gnarsil::bit_matrix& center, std::size_t n, std::size_t a,
    std::size_t b) {
    gnarsil::row_space crs(2 * n, center);
    std::vector<gnarsil::bit_vector> wa;
    for (const auto& v : span_elements(gens, 2 * n))
        if (gnarsil::pauli_weight(v) == a)
            wa.push_back(v);
    for (std::size_t i = 0; i < wa.size(); ++i)
        for (std::size_t j = i + 1; j < wa.size(); ++j) {
            gnarsil::bit_vector p = wa[i] ^ wa[j];
            if (gnarsil::pauli_weight(p) == b && crs.contains(p))
                return {gnarsil::print_pauli(wa[i]), gnarsil::print_pauli(wa[j]),
                        gnarsil::print_pauli(p)};
        }
    return {};
}

/* Generating set of the split gauge group: kept stabilizer rows in row
   order, then the selected X gauges, then the Z gauges. */
inline std::vector<gnarsil::bit_vector> split_generators(
    const gnarsil::tableau& seed, const std::vector<std::size_t>& replaced,
    const gnarsil::split_result& sp) {
    std::vector<gnarsil::bit_vector> gens;
    for (std::size_t i = seed.s_begin(); i < seed.s_end(); ++i)
        if (std::find(replaced.begin(), replaced.end(), i) == replaced.end())
            gens.push_back(seed.rows.row(i));
    for (const auto& g : sp.gx)
        gens.push_back(g);
    for (const auto& g : sp.gz)
        gens.push_back(g);
    return gens;
}

} // namespace fixtures
