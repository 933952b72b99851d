#include "gnarsil/constructions.hpp"

#include <initializer_list>
#include <optional>
#include <utility>

#include "gnarsil/errors.hpp"
#include "gnarsil/pauli.hpp"

namespace gnarsil {

namespace {

bool all_zero(const bit_matrix& m) {
    for (const auto& r : m.rows)
        if (r.any())
            return false;
    return true;
}

/* First (row, col) with a nonzero binary dot between the two raw matrices,
   i.e. an X-side row that anti-commutes with a Z-side row. */
std::optional<std::pair<std::size_t, std::size_t>>
first_nonorthogonal(const bit_matrix& xs, const bit_matrix& zs) {
    for (std::size_t i = 0; i < xs.row_count(); ++i)
        for (std::size_t j = 0; j < zs.row_count(); ++j)
            if (xs.row(i).dot(zs.row(j)))
                return std::make_pair(i, j);
    return std::nullopt;
}

struct spec_pair {
    const char* name;
    const bit_matrix* xs;
    const bit_matrix* zs;
};

/* The seven products that must vanish for the six templates to commute
   where required: stabilizers with everything, gauges and logicals with
   the opposite side's stabilizers, and gauges with opposite logicals. */
std::vector<spec_pair> vanishing_pairs(const subsystem_code_spec& s) {
    return {
        {"SX.SZ", &s.stab_x, &s.stab_z},   {"SX.GZ", &s.stab_x, &s.gauge_z},
        {"SX.LZ", &s.stab_x, &s.logical_z}, {"GX.SZ", &s.gauge_x, &s.stab_z},
        {"LX.SZ", &s.logical_x, &s.stab_z}, {"LX.GZ", &s.logical_x, &s.gauge_z},
        {"GX.LZ", &s.gauge_x, &s.logical_z},
    };
}

void verify_spec_binary(const subsystem_code_spec& s, const char* builder) {
    for (const auto& p : vanishing_pairs(s)) {
        if (auto where = first_nonorthogonal(*p.xs, *p.zs))
            throw ring_orthogonality_error(
                std::string(builder) + ": lifted product " + p.name +
                " is nonzero at row " + std::to_string(where->first + 1) +
                ", column " + std::to_string(where->second + 1));
    }
}

struct ring_parts {
    ring_matrix gx, gz, lx, lz, sx, sz;
};

ring_parts slp_parts(const ring_matrix& a, const ring_matrix& g_a,
                     bool conjugate_z_side) {
    ring_matrix eye = ring_matrix::identity(a.cols, a.modulus);
    ring_matrix az = a, gz = g_a;
    if (conjugate_z_side) {
        az = conjugate_entries(a);
        gz = conjugate_entries(g_a);
    }
    ring_parts p;
    p.gx = ring_kron(a, eye);
    p.gz = ring_kron(eye, az);
    p.lx = ring_kron(eye, g_a);
    p.lz = ring_kron(gz, eye);
    p.sx = ring_kron(a, g_a);
    p.sz = ring_kron(gz, az);
    return p;
}

/* Ring-level screen for one convention: the seven cross products must
   vanish and the gauge / logical pairings must not.  Returns nullopt on
   success, else a description of the first failure. */
std::optional<std::string> screen_parts(const ring_parts& p) {
    struct named {
        const char* name;
        const ring_matrix* a;
        const ring_matrix* b;
    };
    const named zero_pairs[] = {
        {"SX.SZ", &p.sx, &p.sz}, {"SX.GZ", &p.sx, &p.gz},
        {"SX.LZ", &p.sx, &p.lz}, {"GX.SZ", &p.gx, &p.sz},
        {"LX.SZ", &p.lx, &p.sz}, {"LX.GZ", &p.lx, &p.gz},
        {"GX.LZ", &p.gx, &p.lz},
    };
    for (const auto& pr : zero_pairs) {
        ring_matrix prod = ring_mat_mul(*pr.a, conjugate_transpose(*pr.b));
        for (std::size_t i = 0; i < prod.rows; ++i)
            for (std::size_t j = 0; j < prod.cols; ++j)
                if (prod.at(i, j))
                    return std::string(pr.name) + " nonzero at ring entry (" +
                           std::to_string(i + 1) + ", " +
                           std::to_string(j + 1) + ")";
    }
    if (is_zero(ring_mat_mul(p.gx, conjugate_transpose(p.gz))))
        return std::string("GX.GZ vanishes (no gauge pairing left)");
    if (is_zero(ring_mat_mul(p.lx, conjugate_transpose(p.lz))))
        return std::string("LX.LZ vanishes (no logical pairing left)");
    return std::nullopt;
}

bit_matrix embed_pure(const bit_matrix& xs, const bit_matrix& zs,
                      std::size_t n) {
    bit_matrix out(2 * n);
    for (const auto& r : xs.rows)
        out.add_row(pure_x(r));
    for (const auto& r : zs.rows)
        out.add_row(pure_z(r));
    return out;
}

ring_matrix from_bit_strings(const std::vector<std::string>& rows) {
    bit_matrix b = bit_matrix::from_strings(rows);
    ring_matrix m(b.row_count(), b.cols, 1);
    for (std::size_t i = 0; i < b.row_count(); ++i)
        for (std::size_t j = 0; j < b.cols; ++j)
            if (b.row(i).get(j))
                m.at(i, j) = 1;
    return m;
}

ring_poly poly_of(std::initializer_list<unsigned> exponents) {
    ring_poly p = 0;
    for (unsigned j : exponents)
        p ^= ring_poly{1} << j;
    return p;
}

ring_matrix from_polys(std::size_t modulus,
                       const std::vector<std::vector<ring_poly>>& rows) {
    ring_matrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), modulus);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(i, j) = rows[i][j];
    return m;
}

} // namespace

classical_code generator_from_parity(const bit_matrix& h) {
    return {h, kernel(h)};
}

subsystem_code_spec shp(const classical_code& c) {
    std::size_t m = c.h.cols;
    if (c.g.cols != m)
        throw validation_error("generator and parity matrices have different widths");
    bit_matrix cross = mat_mul(c.g, transpose(c.h));
    if (!all_zero(cross))
        throw validation_error("generator rows do not annihilate the parity checks");

    bit_matrix eye = bit_matrix::identity(m);
    subsystem_code_spec s;
    s.n = m * m;
    s.gauge_x = kron(c.h, eye);
    s.gauge_z = kron(eye, c.h);
    s.logical_x = kron(eye, c.g);
    s.logical_z = kron(c.g, eye);
    s.stab_x = kron(c.h, c.g);
    s.stab_z = kron(c.g, c.h);
    s.convention = "plain";
    verify_spec_binary(s, "shp");
    return s;
}

subsystem_code_spec slp(const ring_matrix& a, const ring_matrix& g_a) {
    if (a.modulus != g_a.modulus)
        throw validation_error("slp inputs use different circulant sizes");
    if (a.cols != g_a.cols)
        throw validation_error("slp inputs have different column counts");

    ring_parts parts = slp_parts(a, g_a, false);
    std::string convention = "conjugate";
    auto fail_conj = screen_parts(parts);
    std::optional<std::string> fail_plain;
    if (fail_conj) {
        parts = slp_parts(a, g_a, true);
        convention = "plain";
        fail_plain = screen_parts(parts);
        if (fail_plain)
            throw ring_orthogonality_error(
                "slp inputs fit neither orthogonality convention: "
                "conjugate failed with " + *fail_conj +
                "; plain failed with " + *fail_plain);
    }

    subsystem_code_spec s;
    s.n = a.cols * a.cols * a.modulus;
    s.gauge_x = lift(parts.gx);
    s.gauge_z = lift(parts.gz);
    s.logical_x = lift(parts.lx);
    s.logical_z = lift(parts.lz);
    s.stab_x = lift(parts.sx);
    s.stab_z = lift(parts.sz);
    s.convention = convention;
    verify_spec_binary(s, "slp");
    return s;
}

css_code lp(const ring_matrix& b) {
    std::size_t a_rows = b.rows, b_cols = b.cols, l = b.modulus;
    ring_matrix bd = conjugate_transpose(b);
    ring_matrix ia = ring_matrix::identity(a_rows, l);
    ring_matrix ib = ring_matrix::identity(b_cols, l);

    ring_matrix left_x = ring_kron(b, ib), right_x = ring_kron(ia, bd);
    ring_matrix left_z = ring_kron(ib, b), right_z = ring_kron(bd, ia);
    ring_matrix hx(left_x.rows, left_x.cols + right_x.cols, l);
    ring_matrix hz(left_z.rows, left_z.cols + right_z.cols, l);
    for (std::size_t i = 0; i < hx.rows; ++i) {
        for (std::size_t j = 0; j < left_x.cols; ++j)
            hx.at(i, j) = left_x.at(i, j);
        for (std::size_t j = 0; j < right_x.cols; ++j)
            hx.at(i, left_x.cols + j) = right_x.at(i, j);
    }
    for (std::size_t i = 0; i < hz.rows; ++i) {
        for (std::size_t j = 0; j < left_z.cols; ++j)
            hz.at(i, j) = left_z.at(i, j);
        for (std::size_t j = 0; j < right_z.cols; ++j)
            hz.at(i, left_z.cols + j) = right_z.at(i, j);
    }

    ring_matrix prod = ring_mat_mul(hx, conjugate_transpose(hz));
    if (!is_zero(prod))
        throw ring_orthogonality_error(
            "lp construction broke orthogonality: HX.HZ^+ is nonzero");

    css_code code;
    code.h_x = lift(hx);
    code.h_z = lift(hz);
    code.n = code.h_x.cols;
    if (auto where = first_nonorthogonal(code.h_x, code.h_z))
        throw ring_orthogonality_error(
            "lp lift broke orthogonality at row " +
            std::to_string(where->first + 1) + ", column " +
            std::to_string(where->second + 1));
    return code;
}

bit_matrix gauge_generators(const subsystem_code_spec& spec) {
    return embed_pure(spec.gauge_x, spec.gauge_z, spec.n);
}

bit_matrix stabilizer_candidates(const subsystem_code_spec& spec) {
    return embed_pure(spec.stab_x, spec.stab_z, spec.n);
}

bit_matrix logical_candidates(const subsystem_code_spec& spec) {
    return embed_pure(spec.logical_x, spec.logical_z, spec.n);
}

code_params spec_params(const subsystem_code_spec& spec) {
    return compute_group_params(gauge_generators(spec), spec.n);
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {
        "H10_5", "H_hamming", "A_2x3", "GA_1x3", "B_L2",
        "GB_L2", "A_27",      "GA_27", "B_31",   "GB_31",
    };
    return names;
}

ring_matrix catalog_matrix(const std::string& name) {
    if (name == "H10_5")
        return from_bit_strings({"1111000000", "1000111000", "0100100110",
                                 "0010010101", "0001001011"});
    if (name == "H_hamming")
        return from_bit_strings({"1110100", "1101010", "1011001"});
    if (name == "A_2x3")
        return from_bit_strings({"011", "110"});
    if (name == "GA_1x3")
        return from_bit_strings({"111"});
    if (name == "B_L2")
        return from_polys(2, {{1, 2, 2}, {2, 2, 1}});
    if (name == "GB_L2")
        return from_polys(2, {{3, 3, 0}, {3, 0, 3}, {2, 0, 1}});
    if (name == "A_27")
        return from_polys(3, {{poly_of({0, 1, 2}), poly_of({0, 1}), poly_of({1})}});
    if (name == "GA_27")
        return from_polys(3, {{poly_of({2}), poly_of({1}), poly_of({0})},
                              {poly_of({1}), poly_of({2}), poly_of({1})},
                              {poly_of({0}), 0, poly_of({0, 1, 2})}});
    if (name == "B_31")
        return from_polys(
            31, {{poly_of({1}), poly_of({2}), poly_of({4}), poly_of({8}),
                  poly_of({16})},
                 {poly_of({5}), poly_of({10}), poly_of({20}), poly_of({9}),
                  poly_of({18})},
                 {poly_of({25}), poly_of({19}), poly_of({7}), poly_of({14}),
                  poly_of({28})}});
    if (name == "GB_31") {
        ring_poly u11 = poly_of({28, 25, 18, 16, 5, 1});
        ring_poly u12 = poly_of({23, 22, 20, 17, 7, 4});
        ring_poly u13 = poly_of({29, 25, 21, 12, 5, 1});
        ring_poly u14 = poly_of({28, 18, 16, 14, 9, 8});
        ring_poly u21 = poly_of({27, 24, 19, 11, 10, 2});
        ring_poly u22 = poly_of({30, 28, 26, 18, 16, 6});
        ring_poly u23 = poly_of({20, 14, 9, 8, 7, 4});
        ring_poly u25 = u14;
        ring_poly f = (ring_poly{1} << 31) - 1;   // 1 + x + ... + x^30
        return from_polys(31, {{u11, u12, u13, u14, 0},
                               {u21, u22, u23, 0, u25},
                               {f, f, 0, 0, 0},
                               {f, 0, f, 0, 0},
                               {f, 0, 0, f, 0},
                               {f, 0, 0, 0, f}});
    }
    std::string known;
    for (const auto& nm : catalog_names())
        known += (known.empty() ? "" : ", ") + nm;
    throw parse_error("unknown catalog name \"" + name + "\" (known: " + known +
                      ")");
}

} // namespace gnarsil
