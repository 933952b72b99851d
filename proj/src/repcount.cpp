#include "gnarsil/repcount.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "gnarsil/errors.hpp"

namespace gnarsil {

namespace {

/* Symplectic product of integer-encoded vectors: low r bits are the
   X half, high r bits the Z half. */
int int_sym(std::uint64_t u, std::uint64_t v, std::size_t r) {
    std::uint64_t mask = (std::uint64_t{1} << r) - 1;
    std::uint64_t cross = ((u & mask) & (v >> r)) ^ ((u >> r) & (v & mask));
    return static_cast<int>(std::popcount(cross) & 1u);
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, std::size_t r) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        throw resource_error("representation count for r = " +
                             std::to_string(r) +
                             " overflows 64-bit arithmetic");
    return a * b;
}

void require_positive(std::size_t r) {
    if (r == 0)
        throw std::invalid_argument("gauge-qubit count r must be at least 1");
}

/* Pairing pattern of a canonical 2r-row block: row j anticommutes with
   row r + j and commutes with everything else. */
std::vector<std::vector<std::uint8_t>> pair_pattern(std::size_t r) {
    std::vector<std::vector<std::uint8_t>> pat(
        2 * r, std::vector<std::uint8_t>(2 * r, 0));
    for (std::size_t j = 0; j < r; ++j) {
        pat[j][r + j] = 1;
        pat[r + j][j] = 1;
    }
    return pat;
}

} // namespace

multiplicity_result gauge_block_multiplicity(std::size_t r) {
    require_positive(r);
    if (r > 4) {
        /* (2r)! is out of reach; fall back on the conjectured closed
           form 2^r * r! and say so. */
        std::uint64_t value = std::uint64_t{1} << r;
        for (std::size_t m = 2; m <= r; ++m)
            value = checked_mul(value, m, r);
        return {value, true};
    }
    std::vector<std::vector<std::uint8_t>> pat = pair_pattern(r);
    std::vector<std::size_t> perm(2 * r);
    for (std::size_t i = 0; i < perm.size(); ++i)
        perm[i] = i;
    std::uint64_t count = 0;
    do {
        bool keeps = true;
        for (std::size_t a = 0; keeps && a < 2 * r; ++a)
            for (std::size_t b = a + 1; b < 2 * r; ++b)
                if (pat[perm[a]][perm[b]] != pat[a][b]) {
                    keeps = false;
                    break;
                }
        if (keeps)
            ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {count, false};
}

rep_count_result formula_count(std::size_t r) {
    require_positive(r);
    std::uint64_t raw = 1;
    for (std::size_t l = 0; l < r; ++l)
        raw = checked_mul(raw, (std::uint64_t{1} << (2 * r - 2 * l)) - 1, r);
    for (std::size_t m = 1; m < 2 * r; m += 2)
        raw = checked_mul(raw, std::uint64_t{1} << (2 * r - m), r);
    multiplicity_result mult = gauge_block_multiplicity(r);
    rep_count_result result;
    result.r = r;
    result.raw = raw;
    result.multiplicity = mult.value;
    result.unique = raw / mult.value;
    result.provisional = mult.provisional;
    return result;
}

rep_count_result brute_force_count(std::size_t r) {
    require_positive(r);
    if (r > 2)
        throw resource_error(
            "brute-force representation count for r = " + std::to_string(r) +
            " is intractable (tuples over 2^" + std::to_string(2 * r) +
            " vectors); only r <= 2 is supported");

    std::uint64_t nvec = (std::uint64_t{1} << (2 * r)) - 1;
    std::vector<std::uint64_t> vecs;
    for (std::uint64_t v = 1; v <= nvec; ++v)
        vecs.push_back(v);

    /* Depth-first walk over ordered tuples: even depths pick a fresh
       vector commuting with everything so far, odd depths pick the
       partner that anticommutes with the vector just placed and
       commutes with the rest. Each completed tuple is keyed by its
       unordered set of unordered pairs for de-duplication. */
    std::uint64_t total = 0;
    std::map<std::vector<std::uint64_t>, std::uint64_t> signatures;
    std::vector<std::uint64_t> chosen;
    auto walk = [&](auto&& self, std::size_t depth) -> void {
        if (depth == 2 * r) {
            ++total;
            std::vector<std::uint64_t> key;
            for (std::size_t p = 0; p < r; ++p) {
                std::uint64_t lo = std::min(chosen[2 * p], chosen[2 * p + 1]);
                std::uint64_t hi = std::max(chosen[2 * p], chosen[2 * p + 1]);
                key.push_back((lo << (2 * r)) | hi);
            }
            std::sort(key.begin(), key.end());
            ++signatures[key];
            return;
        }
        for (std::uint64_t v : vecs) {
            if (std::find(chosen.begin(), chosen.end(), v) != chosen.end())
                continue;
            bool fits = true;
            for (std::size_t m = 0; m < depth; ++m) {
                int want = (depth % 2 == 1 && m + 1 == depth) ? 1 : 0;
                if (int_sym(chosen[m], v, r) != want) {
                    fits = false;
                    break;
                }
            }
            if (!fits)
                continue;
            chosen.push_back(v);
            self(self, depth + 1);
            chosen.pop_back();
        }
    };
    walk(walk, 0);

    std::uint64_t unique = signatures.size();
    if (unique == 0 || total % unique != 0)
        throw validation_error("brute-force tuple count " +
                               std::to_string(total) +
                               " does not divide evenly into " +
                               std::to_string(unique) + " signatures");
    std::uint64_t mult = total / unique;
    for (const auto& entry : signatures)
        if (entry.second != mult)
            throw validation_error(
                "representation signatures have uneven multiplicities");

    rep_count_result result;
    result.r = r;
    result.raw = total;
    result.multiplicity = mult;
    result.unique = unique;
    result.provisional = false;
    return result;
}

std::vector<std::size_t> brute_force_stepwise(std::size_t r) {
    require_positive(r);
    if (r > 2)
        throw resource_error(
            "stepwise filter counts require the brute-force enumeration; "
            "only r <= 2 is supported");
    std::uint64_t nvec = (std::uint64_t{1} << (2 * r)) - 1;
    std::vector<std::uint64_t> vecs;
    for (std::uint64_t v = 1; v <= nvec; ++v)
        vecs.push_back(v);
    std::vector<std::size_t> counts;
    std::vector<std::uint64_t> chosen;
    for (std::size_t depth = 0; depth < 2 * r; ++depth) {
        std::vector<std::uint64_t> pool;
        for (std::uint64_t v : vecs) {
            bool fits = true;
            for (std::size_t m = 0; m < depth; ++m) {
                int want = (depth % 2 == 1 && m + 1 == depth) ? 1 : 0;
                if (int_sym(chosen[m], v, r) != want) {
                    fits = false;
                    break;
                }
            }
            if (fits)
                pool.push_back(v);
        }
        counts.push_back(pool.size());
        if (pool.empty())
            break;
        chosen.push_back(pool.front());
    }
    return counts;
}

bit_matrix pair_table(std::size_t r) {
    require_positive(r);
    if (r > 8)
        throw resource_error("pair table for r = " + std::to_string(r) +
                             " would hold 2^" + std::to_string(4 * r) +
                             " entries; only r <= 8 is supported");
    std::size_t dim = std::size_t{1} << (2 * r);
    bit_matrix table(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        bit_vector row(dim);
        for (std::size_t j = 0; j < dim; ++j)
            if (int_sym(i, j, r))
                row.set(j, true);
        table.add_row(row);
    }
    return table;
}

} // namespace gnarsil
