#include "gnarsil/split.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

#include "gnarsil/errors.hpp"
#include "gnarsil/pauli.hpp"

namespace gnarsil {

namespace {

bool vec_contains(const std::vector<bit_vector>& list, const bit_vector& v) {
    return std::find(list.begin(), list.end(), v) != list.end();
}

bool idx_contains(const std::vector<std::size_t>& list, std::size_t v) {
    return std::find(list.begin(), list.end(), v) != list.end();
}

void check_replace_rows(const tableau& t,
                        const std::vector<std::size_t>& replace_rows) {
    for (std::size_t i : replace_rows)
        if (i < t.k || i >= t.n)
            throw validation_error("replace row " + std::to_string(i) +
                                   " is outside the stabilizer region [" +
                                   std::to_string(t.k) + ", " +
                                   std::to_string(t.n) + ")");
    std::vector<std::size_t> sorted = replace_rows;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw validation_error("replace rows contain a duplicate");
}

enum class pool_mode { generators, operators };

/* Enumerates weight-w single-type candidates in lexicographic support
   order.  Commutation against the constraint rows is tested through
   per-qubit signature vectors: a pure X (resp. Z) factor on qubit q
   anti-commutes with constraint row r exactly when that row has a Z
   (resp. X) entry on q, so a candidate commutes with everything iff the
   XOR of its support signatures is zero.
     generators: keep candidates independent of the constraint span and of
                 the pool collected so far; Z candidates must anti-commute
                 with exactly one chosen X gauge.
     operators:  keep candidates that are not congruent to a nonzero
                 logical modulo the stabilizers; Z candidates must
                 anti-commute with at least one chosen X gauge. */
std::vector<bit_vector> find_candidates(const tableau& t, const bit_matrix& v,
                                        std::size_t w, bool ztype, pool_mode mode,
                                        row_space* existing_rs,
                                        const row_space* vrs,
                                        std::size_t max_pool,
                                        const std::vector<bit_vector>* gx_chosen,
                                        const row_space* stab_span,
                                        const row_space* coset_span,
                                        std::uint64_t budget) {
    std::size_t n = t.n;
    std::vector<bit_vector> out;
    if (w > n)
        return out;
    std::uint64_t supports = binomial(n, w);
    if (supports > budget)
        throw resource_error("candidate support scan C(" + std::to_string(n) +
                             ", " + std::to_string(w) + ") = " +
                             std::to_string(supports) +
                             " exceeds the combination budget " +
                             std::to_string(budget));

    std::size_t nv = v.row_count();
    std::vector<bit_vector> sig(n, bit_vector(nv));
    for (std::size_t q = 0; q < n; ++q)
        for (std::size_t r = 0; r < nv; ++r)
            if (v.row(r).get(ztype ? q : n + q))
                sig[q].set(r, true);

    std::size_t ng = gx_chosen ? gx_chosen->size() : 0;
    std::vector<bit_vector> gsig;
    if (ztype && gx_chosen) {
        gsig.assign(n, bit_vector(ng));
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t j = 0; j < ng; ++j)
                if ((*gx_chosen)[j].get(q))
                    gsig[q].set(j, true);
    }

    const bit_vector zero_sig(nv), zero_gsig(ng);
    bit_vector acc(nv), ganti(ng);
    std::vector<std::size_t> supp = first_combination(w);
    bool more = true;
    while (more) {
        acc = zero_sig;
        for (std::size_t q : supp)
            acc ^= sig[q];
        if (!acc.any()) {
            bool keep = true;
            if (ztype && gx_chosen) {
                ganti = zero_gsig;
                for (std::size_t q : supp)
                    ganti ^= gsig[q];
                std::size_t nanti = ganti.popcount();
                if (mode == pool_mode::generators && nanti != 1)
                    keep = false;
                if (mode == pool_mode::operators && nanti < 1)
                    keep = false;
            }
            if (keep) {
                bit_vector half(n);
                for (std::size_t q : supp)
                    half.set(q, true);
                bit_vector cand = ztype ? pure_z(half) : pure_x(half);
                if (mode == pool_mode::generators) {
                    if (vrs->contains(cand) || existing_rs->contains(cand)) {
                        keep = false;
                    } else {
                        existing_rs->add(cand);
                    }
                } else {
                    if (coset_span->contains(cand) && !stab_span->contains(cand))
                        keep = false;
                }
                if (keep) {
                    out.push_back(std::move(cand));
                    if (out.size() >= max_pool)
                        break;
                }
            }
        }
        more = next_combination(supp, n);
    }
    return out;
}

struct scan_best {
    bool found = false;
    std::size_t weight = 0;
    std::uint64_t index = 0;
};

/* Scans `count` combinations starting at lexicographic rank `start`,
   tracking the minimum residual weight with the lowest rank.  A weight-0
   hit ends the range early: nothing later in the range can beat it. */
scan_best scan_combinations(const bit_vector& target,
                            const std::vector<bit_vector>& pool,
                            std::size_t group_size, std::uint64_t start,
                            std::uint64_t count) {
    scan_best best;
    if (count == 0)
        return best;
    std::vector<std::size_t> combo =
        combination_from_rank(pool.size(), group_size, start);
    bit_vector resid(target.size());
    for (std::uint64_t i = 0; i < count; ++i) {
        resid = target;
        for (std::size_t c : combo)
            resid ^= pool[c];
        std::size_t wres = pauli_weight(resid);
        if (!best.found || wres < best.weight) {
            best.found = true;
            best.weight = wres;
            best.index = start + i;
            if (wres == 0)
                break;
        }
        if (i + 1 < count)
            next_combination(combo, pool.size());
    }
    return best;
}

/* Picks |gx| Z gauges pairing bijectively with gx: per-target minimum
   residuals first, then greedy fill by partner coverage, output ordered by
   partner index.  nullopt when no full assignment or independence fails. */
std::optional<std::vector<bit_vector>>
try_assign_z(const std::vector<bit_vector>& zpool,
             const std::vector<bit_vector>& gx,
             const std::vector<std::size_t>& z_targets, const tableau& t,
             const split_config& cfg, const row_space& vrs) {
    std::size_t r = gx.size();
    if (zpool.empty())
        return std::nullopt;
    std::vector<std::size_t> partner(zpool.size(), 0);
    for (std::size_t i = 0; i < zpool.size(); ++i) {
        std::size_t cnt = 0, pj = 0;
        for (std::size_t j = 0; j < r; ++j) {
            if (symplectic_product(zpool[i], gx[j])) {
                ++cnt;
                pj = j;
            }
        }
        if (cnt != 1)
            throw std::logic_error(
                "generator-mode Z candidate lacks a unique X partner");
        partner[i] = pj;
    }
    std::vector<std::size_t> chosen;
    for (std::size_t tgt : z_targets) {
        std::size_t gs = std::min(cfg.gauges_per_stab, zpool.size());
        auto got = choose_for_target(t.rows.row(tgt), zpool, gs,
                                     cfg.combination_budget, cfg.threads);
        if (!got)
            continue;
        for (std::size_t c : got->combo) {
            if (!idx_contains(chosen, c))
                chosen.push_back(c);
            if (chosen.size() >= r)
                break;
        }
        if (chosen.size() >= r)
            break;
    }
    std::vector<std::optional<std::size_t>> cover(r);
    std::size_t covered = 0;
    for (std::size_t c : chosen) {
        std::size_t p = partner[c];
        if (!cover[p]) {
            cover[p] = c;
            ++covered;
        }
    }
    for (std::size_t i = 0; i < zpool.size() && covered < r; ++i) {
        std::size_t p = partner[i];
        if (!cover[p]) {
            cover[p] = i;
            ++covered;
        }
    }
    if (covered < r)
        return std::nullopt;
    std::vector<bit_vector> gz;
    gz.reserve(r);
    for (std::size_t j = 0; j < r; ++j)
        gz.push_back(zpool[*cover[j]]);
    row_space rs(2 * t.n);
    for (const auto& v : gz) {
        if (vrs.contains(v))
            return std::nullopt;
        if (!rs.add(v))
            return std::nullopt;
    }
    return gz;
}

/* A pool is usable once it is non-empty and offers at least one
   combination of the configured size. */
bool pool_usable(const std::vector<bit_vector>& pool, std::size_t group_size) {
    return !pool.empty() && binomial(pool.size(), group_size) > 0;
}

void collect_targets(const tableau& t,
                     const std::vector<std::size_t>& replace_rows,
                     std::vector<std::size_t>& s_rows,
                     std::vector<std::size_t>& x_targets,
                     std::vector<std::size_t>& z_targets) {
    for (std::size_t i = t.k; i < t.n; ++i) {
        if (idx_contains(replace_rows, i))
            continue;
        s_rows.push_back(i);
        if (is_x_type(t.rows.row(i)))
            x_targets.push_back(i);
        if (is_z_type(t.rows.row(i)))
            z_targets.push_back(i);
    }
}

} // namespace

bit_matrix commutant_matrix(const tableau& t,
                            const std::vector<std::size_t>& replace_rows) {
    bit_matrix v(2 * t.n);
    for (std::size_t i = 0; i < t.n + t.k; ++i)
        if (!idx_contains(replace_rows, i))
            v.add_row(t.rows.row(i));
    return v;
}

std::optional<target_report>
choose_for_target(const bit_vector& target, const std::vector<bit_vector>& pool,
                  std::size_t group_size, std::uint64_t combination_budget,
                  unsigned threads) {
    std::uint64_t total = binomial(pool.size(), group_size);
    if (total == 0)
        return std::nullopt;
    if (total > combination_budget)
        throw resource_error("combination scan C(" + std::to_string(pool.size()) +
                             ", " + std::to_string(group_size) + ") = " +
                             std::to_string(total) +
                             " exceeds the combination budget " +
                             std::to_string(combination_budget));

    scan_best best;
    if (threads <= 1 || total < 2048) {
        best = scan_combinations(target, pool, group_size, 0, total);
    } else {
        std::uint64_t nt = std::min<std::uint64_t>(threads, total);
        std::vector<scan_best> results(nt);
        std::vector<std::thread> workers;
        workers.reserve(nt);
        std::uint64_t chunk = total / nt, rem = total % nt, start = 0;
        for (std::uint64_t ti = 0; ti < nt; ++ti) {
            std::uint64_t cnt = chunk + (ti < rem ? 1 : 0);
            workers.emplace_back([&, ti, start, cnt] {
                results[ti] =
                    scan_combinations(target, pool, group_size, start, cnt);
            });
            start += cnt;
        }
        for (auto& th : workers)
            th.join();
        /* Reduction: minimum weight, ties to the lowest combination index,
           so the threaded scan equals the serial one bit for bit. */
        for (const auto& rbest : results) {
            if (!rbest.found)
                continue;
            if (!best.found || rbest.weight < best.weight ||
                (rbest.weight == best.weight && rbest.index < best.index))
                best = rbest;
        }
    }
    target_report rep;
    rep.combo = combination_from_rank(pool.size(), group_size, best.index);
    rep.residual = target;
    for (std::size_t c : rep.combo)
        rep.residual ^= pool[c];
    rep.residual_weight = pauli_weight(rep.residual);
    return rep;
}

split_result split_with_generators(const tableau& t, const split_config& cfg) {
    std::size_t n = t.n, k = t.k;
    check_replace_rows(t, cfg.replace_rows);
    std::size_t r = cfg.replace_rows.size();

    split_result res;
    if (r == 0) {
        /* Nothing to replace: the seed already is the answer. */
        res.split_tableau = t;
        return res;
    }

    bit_matrix v = commutant_matrix(t, cfg.replace_rows);
    row_space vrs(2 * n, v);
    std::vector<std::size_t> s_rows, x_targets, z_targets;
    collect_targets(t, cfg.replace_rows, s_rows, x_targets, z_targets);

    /* X phase: escalate the candidate weight until the pool is usable. */
    std::size_t w = cfg.weight;
    std::vector<bit_vector> pool;
    while (true) {
        row_space ers(2 * n);
        pool = find_candidates(t, v, w, false, pool_mode::generators, &ers,
                               &vrs, cfg.max_pool, nullptr, nullptr, nullptr,
                               cfg.combination_budget);
        if (pool_usable(pool, cfg.gauges_per_stab))
            break;
        ++w;
        if (w >= n)
            throw split_fail("no usable X gauge pool at any weight below " +
                             std::to_string(n));
    }
    res.w = w;
    res.pool = pool;

    std::vector<bit_vector> gx;
    for (std::size_t tgt : x_targets) {
        auto rep = choose_for_target(t.rows.row(tgt), pool, cfg.gauges_per_stab,
                                     cfg.combination_budget, cfg.threads);
        rep->target_row = tgt;
        res.x_reports.push_back(*rep);
        for (std::size_t c : rep->combo) {
            if (!vec_contains(gx, pool[c]))
                gx.push_back(pool[c]);
            if (gx.size() >= r)
                break;
        }
        if (gx.size() >= r)
            break;
    }
    if (gx.size() < r) {
        for (const auto& p : pool) {
            if (!vec_contains(gx, p))
                gx.push_back(p);
            if (gx.size() == r)
                break;
        }
    }
    if (gx.size() < r)
        throw split_fail("pool holds fewer than " + std::to_string(r) +
                         " independent X gauges");
    res.gx = gx;

    /* Z phase: the pool must additionally admit a bijective pairing. */
    std::size_t wz = cfg.weight;
    std::vector<bit_vector> zpool;
    std::optional<std::vector<bit_vector>> gz;
    while (true) {
        row_space ers(2 * n);
        zpool = find_candidates(t, v, wz, true, pool_mode::generators, &ers,
                                &vrs, cfg.max_pool, &gx, nullptr, nullptr,
                                cfg.combination_budget);
        gz = try_assign_z(zpool, gx, z_targets, t, cfg, vrs);
        if (gz)
            break;
        ++wz;
        if (wz >= n)
            throw split_fail("no pairable Z gauge pool at any weight below " +
                             std::to_string(n));
    }
    res.wz = wz;
    res.zpool = zpool;
    res.gz = *gz;

    /* Replace the rows and their destabilizer partners, then recompute the
       destabilizers of the kept stabilizers one by one. */
    tableau t2 = t;
    for (std::size_t j = 0; j < r; ++j) {
        t2.rows.row(cfg.replace_rows[j]) = gx[j];
        t2.rows.row(cfg.replace_rows[j] + n) = (*gz)[j];
    }
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n + k; ++i)
        keep.push_back(i);
    for (std::size_t i : cfg.replace_rows)
        keep.push_back(i + n);
    bit_matrix sys(2 * n);
    for (std::size_t i : keep)
        sys.add_row(swap_halves(t2.rows.row(i)));
    for (std::size_t tgt : s_rows) {
        std::vector<std::uint8_t> rhs(sys.row_count(), 0);
        std::size_t pos = static_cast<std::size_t>(
            std::find(keep.begin(), keep.end(), tgt) - keep.begin());
        rhs[pos] = 1;
        auto d = solve(sys, rhs);
        if (!d)
            throw split_fail("destabilizer recompute failed for row " +
                             std::to_string(tgt));
        t2.rows.row(tgt + n) = *d;
        sys.add_row(swap_halves(*d));
        keep.push_back(tgt + n);
    }
    t2.gauge_rows = cfg.replace_rows;
    if (auto where = verify_symplectic_where(t2))
        throw validation_error("split tableau lost the symplectic relation at rows " +
                               std::to_string(where->first) + ", " +
                               std::to_string(where->second));
    res.split_tableau = std::move(t2);
    return res;
}

split_result split_with_operators(const tableau& t, const split_config& cfg) {
    std::size_t n = t.n, k = t.k;
    check_replace_rows(t, cfg.replace_rows);

    bit_matrix v = commutant_matrix(t, cfg.replace_rows);
    std::vector<std::size_t> s_rows, x_targets, z_targets;
    collect_targets(t, cfg.replace_rows, s_rows, x_targets, z_targets);

    std::vector<bit_vector> stabs, lx_with_stabs, lz_with_stabs;
    for (std::size_t i = k; i < n; ++i)
        stabs.push_back(t.rows.row(i));
    lx_with_stabs = stabs;
    for (std::size_t i = 0; i < k; ++i)
        lx_with_stabs.push_back(t.rows.row(i));
    lz_with_stabs = stabs;
    for (std::size_t i = n; i < n + k; ++i)
        lz_with_stabs.push_back(t.rows.row(i));
    row_space sx_span(2 * n, stabs);
    row_space lxs_span(2 * n, lx_with_stabs);
    row_space lzs_span(2 * n, lz_with_stabs);

    split_result res;

    std::size_t w = cfg.weight;
    while (true) {
        res.pool = find_candidates(t, v, w, false, pool_mode::operators,
                                   nullptr, nullptr, cfg.max_pool, nullptr,
                                   &sx_span, &lxs_span, cfg.combination_budget);
        if (pool_usable(res.pool, cfg.gauges_per_stab))
            break;
        ++w;
        if (w >= n)
            throw split_fail("no usable X gauge pool at any weight below " +
                             std::to_string(n));
    }
    res.w = w;
    for (std::size_t tgt : x_targets) {
        auto rep = choose_for_target(t.rows.row(tgt), res.pool,
                                     cfg.gauges_per_stab,
                                     cfg.combination_budget, cfg.threads);
        rep->target_row = tgt;
        res.x_reports.push_back(*rep);
        for (std::size_t c : rep->combo)
            res.gx.push_back(res.pool[c]);
    }

    std::size_t wz = cfg.weight;
    while (true) {
        res.zpool = find_candidates(t, v, wz, true, pool_mode::operators,
                                    nullptr, nullptr, cfg.max_pool, &res.gx,
                                    &sx_span, &lzs_span,
                                    cfg.combination_budget);
        if (pool_usable(res.zpool, cfg.gauges_per_stab))
            break;
        ++wz;
        if (wz >= n)
            throw split_fail("no usable Z gauge pool at any weight below " +
                             std::to_string(n));
    }
    res.wz = wz;
    for (std::size_t tgt : z_targets) {
        auto rep = choose_for_target(t.rows.row(tgt), res.zpool,
                                     cfg.gauges_per_stab,
                                     cfg.combination_budget, cfg.threads);
        rep->target_row = tgt;
        res.z_reports.push_back(*rep);
        for (std::size_t c : rep->combo)
            res.gz.push_back(res.zpool[c]);
    }
    return res;
}

} // namespace gnarsil
