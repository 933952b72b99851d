#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gnarsil/gf2.hpp"
#include "gnarsil/ring.hpp"
#include "gnarsil/tableau.hpp"

namespace gnarsil {

/* Classical linear code: parity checks H and a generator G with G H^T = 0
   and rank(G) = cols - rank(H). */
struct classical_code {
    bit_matrix h;
    bit_matrix g;
};

/* G = kernel basis of H. */
classical_code generator_from_parity(const bit_matrix& h);

/* The six-template subsystem-code description over n qubits.  All rows are
   raw length-n vectors (X-side and Z-side kept separate); matrices may be
   rank-redundant — ranks are recomputed, never trusted.  For ring builds,
   `convention` records which orthogonality convention the inputs satisfied:
   "conjugate" when A . conj_transpose(G_A) = 0 drives the templates, or
   "plain" when only A . transpose(G_A) = 0 holds and the Z-side templates
   take entrywise-conjugated inputs. */
struct subsystem_code_spec {
    std::size_t n = 0;
    bit_matrix gauge_x, gauge_z;
    bit_matrix logical_x, logical_z;
    bit_matrix stab_x, stab_z;
    std::string convention;
};

/* Subsystem hypergraph product over n = cols(H)^2 qubits:
     gauge   X = H (x) I        Z = I (x) H
     logical X = I (x) G        Z = G (x) I
     stab    X = H (x) G        Z = G (x) H
   Verifies every required cross commutation before returning. */
subsystem_code_spec shp(const classical_code& c);

/* The same six templates with ring entries, then lifted by the circulant.
   Tries the conjugate convention first, then the plain one; whichever
   passes the full pairwise orthogonality screen (seven vanishing products
   plus nonvanishing gauge and logical pairings) is used, and the lifted
   binary matrices are re-verified.  Throws ring_orthogonality_error when
   neither convention fits, naming the first offending product. */
subsystem_code_spec slp(const ring_matrix& a, const ring_matrix& g_a);

/* Lifted product: H_X = [B (x) I | I (x) conj_transpose(B)] and
   H_Z = [I (x) B | conj_transpose(B) (x) I] over the ring, lifted to a
   CSS code on (rows^2 + cols^2) * L qubits. */
css_code lp(const ring_matrix& b);

/* Gauge rows of the spec embedded as Pauli rows of length 2n: the X-side
   matrix as [a|0] rows, then the Z side as [0|b] rows. */
bit_matrix gauge_generators(const subsystem_code_spec& spec);
bit_matrix stabilizer_candidates(const subsystem_code_spec& spec);
bit_matrix logical_candidates(const subsystem_code_spec& spec);

/* n, k, r, s of the gauge group the spec generates. */
code_params spec_params(const subsystem_code_spec& spec);

/* Fixed study matrices by name; binary ones use circulant size 1.
   Unknown names are rejected with parse_error. */
ring_matrix catalog_matrix(const std::string& name);
const std::vector<std::string>& catalog_names();

} // namespace gnarsil
