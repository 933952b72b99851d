#include "gnarsil/io.hpp"

#include <fstream>
#include <sstream>

#include "gnarsil/errors.hpp"
#include "gnarsil/pauli.hpp"

namespace gnarsil {

std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (std::size_t i = 0; i < 16; ++i)
        out[15 - i] = hex[(h >> (4 * i)) & 0xf];
    return out;
}

std::string digest_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw parse_error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return fnv1a_digest(buf.str());
}

json tableau_to_json(const tableau& t) {
    json j;
    j["n"] = t.n;
    j["k"] = t.k;
    j["regions"] = {{"logical_x", {t.lx_begin(), t.lx_end()}},
                    {"stabilizer", {t.s_begin(), t.s_end()}},
                    {"logical_z", {t.lz_begin(), t.lz_end()}},
                    {"destabilizer", {t.sp_begin(), t.sp_end()}}};
    json rows = json::array();
    for (const bit_vector& row : t.rows.rows)
        rows.push_back(to_string(row));
    j["rows"] = rows;
    j["gauge_rows"] = t.gauge_rows;
    return j;
}

tableau tableau_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("k") ||
        !j.contains("rows") || !j.contains("gauge_rows"))
        throw parse_error(
            "tableau JSON must be an object with n, k, rows, gauge_rows");
    if (!j["n"].is_number_unsigned() || !j["k"].is_number_unsigned())
        throw parse_error("tableau JSON: n and k must be non-negative integers");
    tableau t;
    t.n = j["n"].get<std::size_t>();
    t.k = j["k"].get<std::size_t>();
    if (t.n == 0 || t.k > t.n)
        throw parse_error("tableau JSON: need 0 < k <= n");
    if (!j["rows"].is_array() || j["rows"].size() != 2 * t.n)
        throw parse_error("tableau JSON: rows must hold exactly 2n strings");
    t.rows = bit_matrix(2 * t.n);
    for (const auto& entry : j["rows"]) {
        if (!entry.is_string())
            throw parse_error("tableau JSON: rows must hold 0/1 strings");
        std::string s = entry.get<std::string>();
        if (s.size() != 2 * t.n)
            throw parse_error("tableau JSON: row length " +
                              std::to_string(s.size()) + " differs from 2n = " +
                              std::to_string(2 * t.n));
        for (char c : s)
            if (c != '0' && c != '1')
                throw parse_error("tableau JSON: rows must contain only 0/1");
        t.rows.add_row(vector_from_string(s));
    }
    if (!j["gauge_rows"].is_array())
        throw parse_error("tableau JSON: gauge_rows must be an array");
    for (const auto& entry : j["gauge_rows"]) {
        if (!entry.is_number_unsigned())
            throw parse_error("tableau JSON: gauge_rows must be row indices");
        std::size_t idx = entry.get<std::size_t>();
        if (idx < t.s_begin() || idx >= t.s_end())
            throw parse_error("tableau JSON: gauge row " + std::to_string(idx) +
                              " lies outside the stabilizer region");
        t.gauge_rows.push_back(idx);
    }
    if (!verify_symplectic(t))
        throw validation_error("tableau JSON rows fail the symplectic check");
    return t;
}

void write_tableau_file(const std::string& path, const tableau& t) {
    std::ofstream out(path);
    if (!out)
        throw parse_error("cannot write file: " + path);
    out << tableau_to_json(t).dump(2) << '\n';
}

tableau load_tableau_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot read file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error("invalid JSON in " + path + ": " + e.what());
    }
    return tableau_from_json(j);
}

json params_to_json(const code_params& p) {
    json j;
    j["n"] = p.n;
    j["k"] = p.k;
    j["r"] = p.r;
    j["s"] = p.s;
    if (p.d)
        j["d"] = *p.d;
    else
        j["d"] = nullptr;
    return j;
}

namespace {

json reports_to_json(const std::vector<target_report>& reports,
                     const std::vector<bit_vector>& pool) {
    json out = json::array();
    for (const target_report& rep : reports) {
        json entry;
        entry["target_row"] = rep.target_row + 1;
        json indices = json::array();
        json paulis = json::array();
        for (std::size_t idx : rep.combo) {
            indices.push_back(idx + 1);
            paulis.push_back(print_pauli(pool[idx]));
        }
        entry["gauge_indices"] = indices;
        entry["gauge_paulis"] = paulis;
        entry["residual_pauli"] = print_pauli(rep.residual);
        entry["residual_weight"] = rep.residual_weight;
        out.push_back(entry);
    }
    return out;
}

json pauli_list(const std::vector<bit_vector>& rows) {
    json out = json::array();
    for (const bit_vector& row : rows)
        out.push_back(print_pauli(row));
    return out;
}

} // namespace

json split_to_json(const split_result& r) {
    json j;
    j["w"] = r.w;
    j["wz"] = r.wz;
    j["x_pool"] = pauli_list(r.pool);
    j["z_pool"] = pauli_list(r.zpool);
    j["gauge_x"] = pauli_list(r.gx);
    j["gauge_z"] = pauli_list(r.gz);
    j["x"] = reports_to_json(r.x_reports, r.pool);
    j["z"] = reports_to_json(r.z_reports, r.zpool);
    return j;
}

json make_run_report(const std::string& command_echo,
                     const json& input_digests, const json& payload,
                     double elapsed_ms, const std::string& version) {
    json j;
    j["schema"] = 1;
    j["command"] = command_echo;
    j["inputs"] = input_digests;
    for (const auto& item : payload.items())
        j[item.key()] = item.value();
    j["elapsed_ms"] = elapsed_ms;
    j["version"] = version;
    return j;
}

} // namespace gnarsil
