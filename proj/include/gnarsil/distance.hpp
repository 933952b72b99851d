#pragma once

#include <cstddef>
#include <optional>

#include "gnarsil/gf2.hpp"

namespace gnarsil {

/* dressed: minimum weight of a Pauli commuting with every stabilizer but
            lying outside the gauge span (logical, possibly times gauge).
   bare:    minimum weight of a Pauli commuting with every gauge generator
            but lying outside the gauge span. */
enum class distance_mode { bare, dressed };

struct distance_query {
    std::size_t n = 0;
    bit_matrix stabilizers;        // rows of length 2n
    bit_matrix gauges;             // rows of length 2n; for a plain
                                   // stabilizer code pass the stabilizers
    std::size_t weight_limit = 0;
    distance_mode mode = distance_mode::dressed;
    /* Without force, scans with n > 150 or weight_limit > 4 are refused:
       the 3^w C(n,w) candidate count grows past desk scale. */
    bool force = false;
    /* Scan only the all-X and all-Z type assignments per support.  For CSS
       group data this finds the same minimum as the full scan. */
    bool pure_only = false;
    unsigned threads = 1;
};

struct distance_result {
    /* Smallest weight found, or nullopt when nothing turned up at or below
       the weight limit (report as "> weight_limit"). */
    std::optional<std::size_t> found_weight;
    bit_vector witness;            // a minimum-weight hit, when found
};

/* Bounded brute force in ascending weight, within a weight in ascending
   lexicographic support order, within a support in X<Y<Z type order; the
   first hit is returned.  Multi-threaded runs partition the support range
   and reduce to the same first hit the serial scan finds. */
distance_result min_weight_logical(const distance_query& q);

} // namespace gnarsil
