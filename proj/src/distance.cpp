#include "gnarsil/distance.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "gnarsil/errors.hpp"
#include "gnarsil/pauli.hpp"

namespace gnarsil {

namespace {

struct weight_scan_hit {
    bool found = false;
    std::uint64_t support_rank = 0;
    std::uint64_t type_rank = 0;
    bit_vector witness;
};

/* Per-qubit anti-commutation signatures against the constraint rows:
   a pure X factor on qubit q anti-commutes with row r when the row has a
   Z entry there, a pure Z factor when it has an X entry, and a Y factor
   with the XOR of both. */
struct signatures {
    std::vector<bit_vector> x, z;

    signatures(const bit_matrix& constraints, std::size_t n) {
        std::size_t nc = constraints.row_count();
        x.assign(n, bit_vector(nc));
        z.assign(n, bit_vector(nc));
        for (std::size_t q = 0; q < n; ++q) {
            for (std::size_t r = 0; r < nc; ++r) {
                if (constraints.row(r).get(n + q))
                    x[q].set(r, true);
                if (constraints.row(r).get(q))
                    z[q].set(r, true);
            }
        }
    }
};

/* Scans supports [start, start+count) of weight w.  For each support the
   3^w type assignments run in product order (last qubit fastest), or just
   the all-X / all-Z pair when pure_only is set.  Stops at the first hit in
   range; abandons the range early once another worker has reported a hit
   at a lower support rank. */
weight_scan_hit scan_weight_range(const distance_query& q,
                                  const signatures& sig, const row_space& grs,
                                  std::size_t w, std::uint64_t start,
                                  std::uint64_t count,
                                  std::atomic<std::uint64_t>& best_rank) {
    weight_scan_hit hit;
    if (count == 0)
        return hit;
    std::size_t n = q.n;
    std::size_t nc = q.stabilizers.row_count();
    if (q.mode == distance_mode::bare)
        nc = q.gauges.row_count();
    const bit_vector zero_acc(nc);
    bit_vector acc(nc);
    std::vector<std::size_t> supp = combination_from_rank(n, w, start);
    std::vector<int> types(w, 0);
    for (std::uint64_t i = 0; i < count; ++i) {
        std::uint64_t rank = start + i;
        if (rank > best_rank.load(std::memory_order_relaxed))
            break;
        std::fill(types.begin(), types.end(), 0);
        std::uint64_t trank = 0;
        bool more_types = true;
        while (more_types) {
            bool pure = true;
            for (int t : types)
                if (t != types[0])
                    pure = false;
            if (!q.pure_only || (pure && types[0] != 1)) {
                acc = zero_acc;
                for (std::size_t j = 0; j < w; ++j) {
                    std::size_t qq = supp[j];
                    if (types[j] != 2)
                        acc ^= sig.x[qq];
                    if (types[j] != 0)
                        acc ^= sig.z[qq];
                }
                if (!acc.any()) {
                    bit_vector v(2 * n);
                    for (std::size_t j = 0; j < w; ++j) {
                        if (types[j] != 2)
                            v.set(supp[j], true);
                        if (types[j] != 0)
                            v.set(n + supp[j], true);
                    }
                    if (!grs.contains(v)) {
                        hit.found = true;
                        hit.support_rank = rank;
                        hit.type_rank = trank;
                        hit.witness = std::move(v);
                        std::uint64_t prev = best_rank.load();
                        while (prev > rank &&
                               !best_rank.compare_exchange_weak(prev, rank)) {
                        }
                        return hit;
                    }
                }
            }
            /* product order: advance the last position first */
            more_types = false;
            for (std::size_t j = w; j > 0; --j) {
                if (types[j - 1] < 2) {
                    ++types[j - 1];
                    std::fill(types.begin() + static_cast<std::ptrdiff_t>(j),
                              types.end(), 0);
                    more_types = true;
                    break;
                }
            }
            ++trank;
        }
        if (i + 1 < count)
            next_combination(supp, n);
    }
    return hit;
}

} // namespace

distance_result min_weight_logical(const distance_query& q) {
    std::size_t n = q.n;
    if ((n > 150 || q.weight_limit > 4) && !q.force)
        throw resource_error(
            "distance scan refused: n = " + std::to_string(n) +
            " (cap 150), weight limit = " + std::to_string(q.weight_limit) +
            " (cap 4); the 3^w C(n,w) candidate count is past desk scale "
            "without force");

    const bit_matrix& constraints =
        q.mode == distance_mode::dressed ? q.stabilizers : q.gauges;
    signatures sig(constraints, n);
    row_space grs(2 * n, q.gauges);

    distance_result out;
    for (std::size_t w = 1; w <= q.weight_limit && w <= n; ++w) {
        std::uint64_t total = binomial(n, w);
        std::atomic<std::uint64_t> best_rank{
            std::numeric_limits<std::uint64_t>::max()};
        weight_scan_hit best;
        if (q.threads <= 1 || total < 1024) {
            best = scan_weight_range(q, sig, grs, w, 0, total, best_rank);
        } else {
            std::uint64_t nt = std::min<std::uint64_t>(q.threads, total);
            std::vector<weight_scan_hit> hits(nt);
            std::vector<std::thread> workers;
            workers.reserve(nt);
            std::uint64_t chunk = total / nt, rem = total % nt, start = 0;
            for (std::uint64_t ti = 0; ti < nt; ++ti) {
                std::uint64_t cnt = chunk + (ti < rem ? 1 : 0);
                workers.emplace_back([&, ti, start, cnt] {
                    hits[ti] = scan_weight_range(q, sig, grs, w, start, cnt,
                                                 best_rank);
                });
                start += cnt;
            }
            for (auto& th : workers)
                th.join();
            /* Reduction: lowest (support rank, type rank) wins, matching
               the serial scan's first hit. */
            for (auto& h : hits) {
                if (!h.found)
                    continue;
                if (!best.found || h.support_rank < best.support_rank ||
                    (h.support_rank == best.support_rank &&
                     h.type_rank < best.type_rank))
                    best = std::move(h);
            }
        }
        if (best.found) {
            out.found_weight = w;
            out.witness = best.witness;
            return out;
        }
    }
    return out;
}

} // namespace gnarsil
