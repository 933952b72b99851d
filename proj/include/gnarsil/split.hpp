#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gnarsil/gf2.hpp"
#include "gnarsil/tableau.hpp"

namespace gnarsil {

/* Configuration for the two stabilizer-splitting algorithms. */
struct split_config {
    /* 0-based U row indices (S region) whose rows get replaced by gauges. */
    std::vector<std::size_t> replace_rows;
    /* Starting candidate Pauli weight; escalates by one while the pool is
       unusable and fails once the weight reaches n. */
    std::size_t weight = 2;
    /* Combination size: how many gauges are XOR-ed into each target. */
    std::size_t gauges_per_stab = 2;
    /* Cap on the candidate pool ("max. gauge candidates to consider"). */
    std::size_t max_pool = 64;
    /* Hard ceiling on any single enumeration (support scan or combination
       scan); exceeding it raises resource_error instead of running. */
    std::uint64_t combination_budget = 20000000;
    /* Worker threads for the per-target combination scan.  Results are
       bit-identical to the single-threaded run by construction. */
    unsigned threads = 1;
};

/* One row of the split report: the combination chosen for one target
   stabilizer and the operator left over after XOR-ing it in. */
struct target_report {
    std::size_t target_row = 0;          // 0-based U row index
    std::vector<std::size_t> combo;      // ascending indices into the pool
    bit_vector residual;                 // length 2n: target XOR chosen gauges
    std::size_t residual_weight = 0;     // Pauli weight of the residual
};

/* Output of either algorithm.  The generator-style algorithm fills
   split_tableau (gauge_rows listing the replaced S rows) and leaves
   z_reports empty; the operator-style algorithm fills both report lists
   and no tableau.  gx/gz hold the gauges actually selected, and pool/zpool
   the full candidate pools the selection scanned. */
struct split_result {
    std::optional<tableau> split_tableau;
    std::size_t w = 0;                   // final X candidate weight used
    std::size_t wz = 0;                  // final Z candidate weight used
    std::vector<bit_vector> pool;
    std::vector<bit_vector> zpool;
    std::vector<bit_vector> gx;
    std::vector<bit_vector> gz;
    std::vector<target_report> x_reports;
    std::vector<target_report> z_reports;
};

/* Rows 0..n+k-1 of U with the rows slated for replacement removed.  The
   candidates must commute with exactly these rows; leaving the replaced
   rows in would force candidates into the stabilizer span. */
bit_matrix commutant_matrix(const tableau& t,
                            const std::vector<std::size_t>& replace_rows);

/* Scans every C(|pool|, group_size) combination against the target row,
   returning the minimum-residual-weight choice; ties break to the lowest
   combination index.  target_row in the result is left at 0 for the caller
   to fill.  Returns nullopt when there is no combination to scan.  Throws
   resource_error when the scan exceeds `combination_budget`. */
std::optional<target_report>
choose_for_target(const bit_vector& target, const std::vector<bit_vector>& pool,
                  std::size_t group_size, std::uint64_t combination_budget,
                  unsigned threads);

/* Algorithm 1, gauge generators: replaces the configured stabilizer rows
   (and their destabilizer partners) with freshly searched symplectic gauge
   pairs, recomputes the remaining destabilizers, and returns the new
   tableau.  |gx| = |gz| = |replace_rows| and gz[j] anti-commutes with
   gx[i] exactly when i = j.  Throws split_fail when escalation reaches
   weight n on either side. */
split_result split_with_generators(const tableau& t, const split_config& cfg);

/* Algorithm 2, gauge operators: reports, for every kept stabilizer, the
   minimum-residual combination of weight-w candidate operators.  Gauges
   may repeat and need not be independent; gx lists gauges_per_stab picks
   per X target in target order (gz likewise for Z targets). */
split_result split_with_operators(const tableau& t, const split_config& cfg);

} // namespace gnarsil
