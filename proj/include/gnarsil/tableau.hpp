#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gnarsil/gf2.hpp"

namespace gnarsil {

/* A CSS code given by its X and Z parity checks over n qubits.
   Rows are raw length-n vectors; they may be dependent (dependent rows are
   discarded during tableau construction) but must satisfy H_X H_Z^T = 0. */
struct css_code {
    std::size_t n = 0;
    bit_matrix h_x;
    bit_matrix h_z;
};

/* Subsystem-code parameters: n physical qubits, k logical qubits, r gauge
   qubits, s independent stabilizers, with k + r + s = n.  d is filled in
   only when a distance computation has been run. */
struct code_params {
    std::size_t n = 0, k = 0, r = 0, s = 0;
    std::optional<std::size_t> d;

    bool operator==(const code_params& other) const {
        return n == other.n && k == other.k && r == other.r && s == other.s;
    }
};

/* 2n x 2n binary symplectic tableau U = [L_X; S; L_Z; S'] with row regions
     L_X = rows 0..k-1          X-type logical representatives
     S   = rows k..n-1          stabilizer generators (X checks then Z checks)
     L_Z = rows n..n+k-1        Z-type logical representatives
     S'  = rows n+k..2n-1       destabilizers
   Row i anti-commutes exactly with row i+n (U Omega U^T = Omega mod 2).
   gauge_rows lists the S-region indices whose rows (together with their
   partners at index+n) have been promoted to gauge generators. */
struct tableau {
    std::size_t n = 0, k = 0;
    bit_matrix rows;
    std::vector<std::size_t> gauge_rows;

    std::size_t lx_begin() const { return 0; }
    std::size_t lx_end() const { return k; }
    std::size_t s_begin() const { return k; }
    std::size_t s_end() const { return n; }
    std::size_t lz_begin() const { return n; }
    std::size_t lz_end() const { return n + k; }
    std::size_t sp_begin() const { return n + k; }
    std::size_t sp_end() const { return 2 * n; }
};

/* Builds the full symplectic tableau from CSS checks.
   Logical X rows are drawn from the kernel of H_Z (reduced greedily modulo
   the X stabilizers) and logical Z rows from the kernel of H_X; the Z side
   is then re-combined so that L_X[i] anti-commutes exactly with L_Z[i].
   Destabilizers are completed one stabilizer at a time in ascending row
   order via canonical (free-variables-zero) linear solves.
   The overload with explicit candidates draws logical representatives from
   the supplied raw length-n rows instead of the kernels; any valid choice
   produces a symplectic tableau.
   Throws validation_error when checks do not commute (the offending row
   pair is named) or when the checks leave no room for logicals. */
tableau build_css_tableau(const css_code& code);
tableau build_css_tableau(const css_code& code, const bit_matrix& lx_candidates,
                          const bit_matrix& lz_candidates);

/* True iff U Omega U^T = Omega holds exactly: row i and row i+n
   anti-commute while every other row pair commutes. */
bool verify_symplectic(const tableau& t);

/* Offending (i, j) pair when the symplectic relation fails, else nullopt. */
std::optional<std::pair<std::size_t, std::size_t>>
verify_symplectic_where(const tableau& t);

/* The same binary relation applied to a tableau whose gauge_rows have been
   replaced: valid subsystem tableaux keep U' Omega U'^T = Omega. */
bool verify_subsystem(const tableau& t);

/* Basis of the center {v in rowspace(G) : v commutes with every row of G}.
   Rows are length 2n; the returned rows are independent. */
bit_matrix center_of(const bit_matrix& generators, std::size_t n);

/* g = rank(G), s = rank(center), r = (g - s)/2, k = n - s - r.
   Throws std::invalid_argument when g - s is odd (malformed input: the
   non-central part of a group always pairs up). */
code_params compute_group_params(const bit_matrix& generators, std::size_t n);

/* Returns a copy of t with row(target) ^= XOR of row(s) for each source
   appearing an odd number of times, destabilizers adjusted so the
   symplectic relation still holds.  target and sources must lie in the S
   region; a net self-combination (which would zero the row) is rejected
   with std::invalid_argument. */
tableau multiply_stabilizer_rows(const tableau& t, std::size_t target,
                                 const std::vector<std::size_t>& sources);

} // namespace gnarsil
