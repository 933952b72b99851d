#include "gnarsil/tableau.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "gnarsil/errors.hpp"
#include "gnarsil/pauli.hpp"

namespace gnarsil {

namespace {

/* Keeps rows (in input order) that grow the rank beyond `base`. */
std::vector<bit_vector> greedy_independent(const bit_matrix& rows,
                                           std::size_t ncols,
                                           const std::vector<bit_vector>& base) {
    row_space rs(ncols, base);
    std::vector<bit_vector> kept;
    for (const auto& r : rows.rows)
        if (rs.add(r))
            kept.push_back(r);
    return kept;
}

/* Inverse of a small dense k x k binary matrix via Gauss-Jordan. */
std::vector<std::vector<std::uint8_t>>
invert_bitmatrix(const std::vector<std::vector<std::uint8_t>>& m) {
    std::size_t k = m.size();
    std::vector<std::vector<std::uint8_t>> a(k, std::vector<std::uint8_t>(2 * k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            a[i][j] = m[i][j];
        a[i][k + i] = 1;
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t sel = k;
        for (std::size_t i = r; i < k; ++i) {
            if (a[i][c]) {
                sel = i;
                break;
            }
        }
        if (sel == k)
            throw validation_error("logical pairing matrix is singular");
        std::swap(a[r], a[sel]);
        for (std::size_t i = 0; i < k; ++i) {
            if (i != r && a[i][c]) {
                for (std::size_t j = 0; j < 2 * k; ++j)
                    a[i][j] ^= a[r][j];
            }
        }
        ++r;
    }
    std::vector<std::vector<std::uint8_t>> inv(k, std::vector<std::uint8_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            inv[i][j] = a[i][k + j];
    return inv;
}

/* Picks k logical representatives from `cand`, each independent of the
   span of `seed` and of the representatives already taken. */
std::vector<bit_vector> pick_logicals(const bit_matrix& cand,
                                      const std::vector<bit_vector>& seed,
                                      std::size_t ncols, std::size_t k,
                                      const char* side) {
    row_space rs(ncols, seed);
    std::vector<bit_vector> out;
    for (const auto& c : cand.rows) {
        if (out.size() == k)
            break;
        if (rs.add(c))
            out.push_back(c);
    }
    if (out.size() != k)
        throw validation_error(std::string("not enough independent ") + side +
                               " logical candidates: needed " + std::to_string(k) +
                               ", found " + std::to_string(out.size()));
    return out;
}

tableau build_impl(const css_code& code, const bit_matrix* lx_cand,
                   const bit_matrix* lz_cand) {
    std::size_t n = code.n;
    if (n == 0)
        throw validation_error("code has no qubits");
    if (code.h_x.cols != n || code.h_z.cols != n)
        throw validation_error("check matrix width does not match qubit count");
    if (lx_cand && lx_cand->cols != n)
        throw validation_error("X logical candidate width does not match qubit count");
    if (lz_cand && lz_cand->cols != n)
        throw validation_error("Z logical candidate width does not match qubit count");

    for (std::size_t i = 0; i < code.h_x.row_count(); ++i) {
        for (std::size_t j = 0; j < code.h_z.row_count(); ++j) {
            if (code.h_x.row(i).dot(code.h_z.row(j)))
                throw validation_error("X check " + std::to_string(i + 1) +
                                       " and Z check " + std::to_string(j + 1) +
                                       " do not commute");
        }
    }

    std::vector<bit_vector> hx = greedy_independent(code.h_x, n, {});
    std::vector<bit_vector> hz = greedy_independent(code.h_z, n, {});
    std::size_t s = hx.size() + hz.size();
    if (s > n)
        throw validation_error("independent checks exceed the qubit count");
    std::size_t k = n - s;

    bit_matrix lx_default, lz_default;
    if (!lx_cand) {
        lx_default = kernel(code.h_z);
        lx_cand = &lx_default;
    }
    if (!lz_cand) {
        lz_default = kernel(code.h_x);
        lz_cand = &lz_default;
    }
    std::vector<bit_vector> lx = pick_logicals(*lx_cand, hx, n, k, "X");
    std::vector<bit_vector> lz = pick_logicals(*lz_cand, hz, n, k, "Z");

    /* Re-combine the Z logicals so lx_i . lz_j = delta_ij:
       with M[i][j] = lx_i . lz_j, replace LZ by (M^{-1})^T LZ. */
    if (k > 0) {
        std::vector<std::vector<std::uint8_t>> m(k, std::vector<std::uint8_t>(k, 0));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                m[i][j] = static_cast<std::uint8_t>(lx[i].dot(lz[j]));
        auto minv = invert_bitmatrix(m);
        std::vector<bit_vector> lz2;
        lz2.reserve(k);
        for (std::size_t j = 0; j < k; ++j) {
            bit_vector v(n);
            for (std::size_t t = 0; t < k; ++t)
                if (minv[t][j])
                    v ^= lz[t];
            lz2.push_back(std::move(v));
        }
        lz = std::move(lz2);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (lx[i].dot(lz[j]) != (i == j ? 1 : 0))
                    throw validation_error("logical pairing fix failed");
    }

    bit_matrix rows(2 * n);
    for (const auto& v : lx)
        rows.add_row(pure_x(v));
    for (const auto& v : hx)
        rows.add_row(pure_x(v));
    for (const auto& v : hz)
        rows.add_row(pure_z(v));
    for (const auto& v : lz)
        rows.add_row(pure_z(v));

    /* Destabilizers: for stabilizer j, solve for a row that anti-commutes
       with exactly that stabilizer among everything found so far. */
    bit_matrix sys(2 * n);
    for (const auto& r : rows.rows)
        sys.add_row(swap_halves(r));
    for (std::size_t j = 0; j < s; ++j) {
        std::vector<std::uint8_t> rhs(sys.row_count(), 0);
        rhs[k + j] = 1;
        auto d = solve(sys, rhs);
        if (!d)
            throw validation_error("destabilizer solve failed");
        sys.add_row(swap_halves(*d));
        rows.add_row(std::move(*d));
    }

    tableau t{n, k, std::move(rows), {}};
    if (auto where = verify_symplectic_where(t))
        throw validation_error("tableau not symplectic at rows " +
                               std::to_string(where->first) + ", " +
                               std::to_string(where->second));
    return t;
}

} // namespace

tableau build_css_tableau(const css_code& code) {
    return build_impl(code, nullptr, nullptr);
}

tableau build_css_tableau(const css_code& code, const bit_matrix& lx_candidates,
                          const bit_matrix& lz_candidates) {
    return build_impl(code, &lx_candidates, &lz_candidates);
}

std::optional<std::pair<std::size_t, std::size_t>>
verify_symplectic_where(const tableau& t) {
    std::size_t n = t.n;
    for (std::size_t i = 0; i < 2 * n; ++i) {
        for (std::size_t j = 0; j < 2 * n; ++j) {
            int want = (j == i + n || i == j + n) ? 1 : 0;
            if (symplectic_product(t.rows.row(i), t.rows.row(j)) != want)
                return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

bool verify_symplectic(const tableau& t) {
    return !verify_symplectic_where(t).has_value();
}

bool verify_subsystem(const tableau& t) {
    /* Replacing gauge rows must preserve the full pairing relation. */
    return verify_symplectic(t);
}

bit_matrix center_of(const bit_matrix& generators, std::size_t n) {
    bit_matrix r = rref(generators).reduced;
    bit_matrix out(2 * n);
    if (r.row_count() == 0)
        return out;
    /* W[i][j] = sym(basis_i, gen_j); central combinations are the left
       kernel of W, i.e. the kernel of W^T. */
    std::size_t nb = r.row_count();
    bit_matrix wt(nb);
    for (std::size_t j = 0; j < generators.row_count(); ++j) {
        bit_vector col(nb);
        for (std::size_t i = 0; i < nb; ++i)
            if (symplectic_product(r.row(i), generators.row(j)))
                col.set(i, true);
        wt.add_row(std::move(col));
    }
    bit_matrix ker = kernel(wt);
    for (const auto& c : ker.rows) {
        bit_vector v(2 * n);
        for (std::size_t i = 0; i < nb; ++i)
            if (c.get(i))
                v ^= r.row(i);
        out.add_row(std::move(v));
    }
    return out;
}

code_params compute_group_params(const bit_matrix& generators, std::size_t n) {
    std::size_t g = rank(generators);
    std::size_t s = center_of(generators, n).row_count();
    if ((g - s) % 2 != 0)
        throw std::invalid_argument(
            "non-central generators do not pair up (rank - center rank is odd)");
    std::size_t r = (g - s) / 2;
    if (s + r > n)
        throw std::invalid_argument("group parameters exceed the qubit count");
    code_params p;
    p.n = n;
    p.k = n - s - r;
    p.r = r;
    p.s = s;
    return p;
}

tableau multiply_stabilizer_rows(const tableau& t, std::size_t target,
                                 const std::vector<std::size_t>& sources) {
    std::size_t n = t.n, k = t.k;
    auto in_s_region = [&](std::size_t i) { return i >= k && i < n; };
    if (!in_s_region(target))
        throw std::invalid_argument("target row " + std::to_string(target) +
                                    " is outside the stabilizer region");
    std::set<std::size_t> net;
    for (std::size_t srow : sources) {
        if (!in_s_region(srow))
            throw std::invalid_argument("source row " + std::to_string(srow) +
                                        " is outside the stabilizer region");
        auto it = net.find(srow);
        if (it != net.end())
            net.erase(it);
        else
            net.insert(srow);
    }
    if (net.count(target))
        throw std::invalid_argument("row combined into itself");
    tableau out = t;
    for (std::size_t srow : net) {
        out.rows.row(target) ^= out.rows.row(srow);
        out.rows.row(srow + n) ^= out.rows.row(target + n);
    }
    return out;
}

} // namespace gnarsil
