/* Command-line front end: builds tableaux from CSS checks, runs the two
   stabilizer-splitting searches, constructs product-code families, scans
   bounded minimum distances, and counts gauge-block representations.

   Exit codes:
     0  success
     1  validation or verification failure
     2  malformed input (files, flags, scripts)
     3  gauge search exhausted every candidate weight
     4  scan size beyond the configured resource budget
     5  ring construction inputs satisfy neither orthogonality convention */

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gnarsil/constructions.hpp"
#include "gnarsil/distance.hpp"
#include "gnarsil/errors.hpp"
#include "gnarsil/gf2.hpp"
#include "gnarsil/io.hpp"
#include "gnarsil/pauli.hpp"
#include "gnarsil/repcount.hpp"
#include "gnarsil/ring.hpp"
#include "gnarsil/split.hpp"
#include "gnarsil/tableau.hpp"
#include "gnarsil/version.hpp"

namespace {

using gnarsil::bit_matrix;
using gnarsil::bit_vector;
using gnarsil::json;
using gnarsil::tableau;

std::string join_args(int argc, char** argv) {
    std::string out;
    for (int i = 0; i < argc; ++i) {
        if (i > 0)
            out += ' ';
        out += argv[i];
    }
    return out;
}

double elapsed_ms_since(std::chrono::steady_clock::time_point start) {
    std::chrono::duration<double, std::milli> d =
        std::chrono::steady_clock::now() - start;
    return d.count();
}

std::size_t parse_index_1based(const std::string& token,
                               const std::string& context) {
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(token, &pos);
    } catch (const std::exception&) {
        throw gnarsil::parse_error(context + ": expected a positive integer, got \"" +
                                   token + "\"");
    }
    if (pos != token.size() || value == 0)
        throw gnarsil::parse_error(context + ": row indices are 1-based positive integers, got \"" +
                                   token + "\"");
    return static_cast<std::size_t>(value - 1);
}

/* "6,7,8,9" (1-based) -> {5,6,7,8}. */
std::vector<std::size_t> parse_row_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_index_1based(item, "--rows"));
    if (out.empty())
        throw gnarsil::parse_error("--rows: the row list is empty");
    return out;
}

/* Applies "target <- s1 s2 ..." directives (1-based rows, # comments). */
tableau apply_preprocess(tableau t, const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw gnarsil::parse_error("cannot read preprocess script: " + path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string context = path + ":" + std::to_string(lineno);
        std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string token;
        while (ls >> token)
            tokens.push_back(token);
        if (tokens.empty())
            continue;
        if (tokens.size() < 3 || tokens[1] != "<-")
            throw gnarsil::parse_error(context +
                                       ": expected \"target <- s1 s2 ...\"");
        std::size_t target = parse_index_1based(tokens[0], context);
        std::vector<std::size_t> sources;
        for (std::size_t i = 2; i < tokens.size(); ++i)
            sources.push_back(parse_index_1based(tokens[i], context));
        try {
            t = gnarsil::multiply_stabilizer_rows(t, target, sources);
        } catch (const std::invalid_argument& e) {
            throw gnarsil::parse_error(context + ": " + e.what());
        }
    }
    return t;
}

void emit_report(const json& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report.dump(2) << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw gnarsil::parse_error("cannot write file: " + out_path);
    out << report.dump(2) << '\n';
}

/* Stabilizer generators + the Z partners of promoted gauge rows: the full
   gauge group of a (possibly split) tableau. */
bit_matrix gauge_group_rows(const tableau& t) {
    bit_matrix g(2 * t.n);
    for (std::size_t i = t.s_begin(); i < t.s_end(); ++i)
        g.add_row(t.rows.row(i));
    for (std::size_t idx : t.gauge_rows)
        g.add_row(t.rows.row(idx + t.n));
    return g;
}

/* S-region rows that were not promoted to gauges: the center generators. */
bit_matrix center_rows(const tableau& t) {
    bit_matrix s(2 * t.n);
    for (std::size_t i = t.s_begin(); i < t.s_end(); ++i) {
        bool promoted = false;
        for (std::size_t idx : t.gauge_rows)
            if (idx == i)
                promoted = true;
        if (!promoted)
            s.add_row(t.rows.row(i));
    }
    return s;
}

void print_gauge_list(std::ostream& err, const char* label,
                      const std::vector<bit_vector>& gauges, std::size_t w) {
    err << label << " (weight " << w << ", " << gauges.size() << " chosen)\n";
    for (std::size_t i = 0; i < gauges.size(); ++i)
        err << "  " << (i + 1) << ": " << gnarsil::print_pauli(gauges[i]) << '\n';
}

void print_report_table(std::ostream& err, const char* label,
                        const std::vector<gnarsil::target_report>& reports,
                        const std::vector<bit_vector>& pool) {
    if (reports.empty())
        return;
    err << label << '\n';
    for (const gnarsil::target_report& rep : reports) {
        err << "  row " << (rep.target_row + 1) << ": gauges";
        for (std::size_t idx : rep.combo)
            err << ' ' << (idx + 1) << " (" << gnarsil::print_pauli(pool[idx])
                << ")";
        err << " -> residual " << gnarsil::print_pauli(rep.residual)
            << " weight " << rep.residual_weight << '\n';
    }
}

int cmd_build(const std::string& hx_path, const std::string& hz_path,
              const std::string& lx_path, const std::string& lz_path,
              const std::string& out_path) {
    bit_matrix hx = gnarsil::load_matrix_file(hx_path);
    bit_matrix hz = gnarsil::load_matrix_file(hz_path);
    gnarsil::css_code code{hx.cols, hx, hz};
    tableau t;
    if (lx_path.empty()) {
        t = gnarsil::build_css_tableau(code);
    } else {
        bit_matrix lx = gnarsil::load_matrix_file(lx_path);
        bit_matrix lz = gnarsil::load_matrix_file(lz_path);
        t = gnarsil::build_css_tableau(code, lx, lz);
    }
    if (out_path.empty())
        std::cout << gnarsil::tableau_to_json(t).dump(2) << '\n';
    else
        gnarsil::write_tableau_file(out_path, t);
    std::cerr << "[[" << t.n << "," << t.k << ",?]]\n";
    return 0;
}

int cmd_split(const std::string& echo, const std::string& tab_path, int alg,
              const std::string& rows_text, const gnarsil::split_config& base,
              const std::string& pre_path, const std::string& out_tab,
              const std::string& report_path) {
    auto start = std::chrono::steady_clock::now();
    tableau t = gnarsil::load_tableau_file(tab_path);
    if (!pre_path.empty())
        t = apply_preprocess(t, pre_path);
    gnarsil::split_config cfg = base;
    cfg.replace_rows = parse_row_list(rows_text);
    gnarsil::split_result res = (alg == 1)
                                    ? gnarsil::split_with_generators(t, cfg)
                                    : gnarsil::split_with_operators(t, cfg);
    json payload;
    payload["algorithm"] = alg;
    if (res.split_tableau) {
        gnarsil::code_params params = gnarsil::compute_group_params(
            gauge_group_rows(*res.split_tableau), t.n);
        payload["params"] = gnarsil::params_to_json(params);
        if (!out_tab.empty())
            gnarsil::write_tableau_file(out_tab, *res.split_tableau);
    }
    payload["split"] = gnarsil::split_to_json(res);
    json inputs;
    inputs[tab_path] = gnarsil::digest_file(tab_path);
    if (!pre_path.empty())
        inputs[pre_path] = gnarsil::digest_file(pre_path);
    json report = gnarsil::make_run_report(echo, inputs, payload,
                                           elapsed_ms_since(start),
                                           gnarsil::version_string);
    emit_report(report, report_path);
    print_gauge_list(std::cerr, "X gauges", res.gx, res.w);
    print_gauge_list(std::cerr, "Z gauges", res.gz, res.wz);
    print_report_table(std::cerr, "X decompositions:", res.x_reports, res.pool);
    print_report_table(std::cerr, "Z decompositions:", res.z_reports, res.zpool);
    return 0;
}

void write_spec_files(const gnarsil::subsystem_code_spec& spec,
                      const std::string& prefix, json& files) {
    struct item {
        const char* suffix;
        const bit_matrix* m;
    };
    const item items[] = {{"gauge_x", &spec.gauge_x},   {"gauge_z", &spec.gauge_z},
                          {"stab_x", &spec.stab_x},     {"stab_z", &spec.stab_z},
                          {"logical_x", &spec.logical_x},
                          {"logical_z", &spec.logical_z}};
    for (const item& it : items) {
        std::string path = prefix + "_" + it.suffix + ".txt";
        std::ofstream out(path);
        if (!out)
            throw gnarsil::parse_error("cannot write file: " + path);
        gnarsil::write_matrix_text(out, *it.m);
        files[it.suffix] = path;
    }
}

int cmd_construct(const std::string& echo, const std::string& family,
                  const std::vector<std::string>& catalog,
                  const std::vector<std::string>& in_files, bool qc,
                  const std::string& prefix, const std::string& report_path) {
    auto start = std::chrono::steady_clock::now();
    std::size_t want = (family == "slp") ? 2 : 1;
    if (catalog.empty() == in_files.empty())
        throw gnarsil::parse_error(
            "construct needs exactly one of --catalog or --in");
    if ((catalog.empty() ? in_files.size() : catalog.size()) != want)
        throw gnarsil::parse_error("construct " + family + " takes " +
                                   std::to_string(want) +
                                   " input matrix/matrices");

    auto ring_input = [&](std::size_t i) -> gnarsil::ring_matrix {
        if (!catalog.empty())
            return gnarsil::catalog_matrix(catalog[i]);
        return gnarsil::load_ring_matrix_file(in_files[i], qc);
    };

    json inputs;
    for (const std::string& path : in_files)
        inputs[path] = gnarsil::digest_file(path);
    for (const std::string& name : catalog)
        inputs["catalog:" + name] = name;

    json payload;
    json files = json::object();
    if (family == "shp") {
        /* binary template: catalog names carry circulant size 1, file
           inputs use the plain 0/1 matrix text format */
        bit_matrix h = catalog.empty()
                           ? gnarsil::load_matrix_file(in_files[0])
                           : gnarsil::lift(gnarsil::catalog_matrix(catalog[0]));
        gnarsil::subsystem_code_spec spec =
            gnarsil::shp(gnarsil::generator_from_parity(h));
        payload["params"] = gnarsil::params_to_json(gnarsil::spec_params(spec));
        payload["convention"] = spec.convention;
        if (!prefix.empty())
            write_spec_files(spec, prefix, files);
    } else if (family == "slp") {
        gnarsil::subsystem_code_spec spec = gnarsil::slp(ring_input(0), ring_input(1));
        payload["params"] = gnarsil::params_to_json(gnarsil::spec_params(spec));
        payload["convention"] = spec.convention;
        if (!prefix.empty())
            write_spec_files(spec, prefix, files);
    } else if (family == "lp") {
        gnarsil::css_code code = gnarsil::lp(ring_input(0));
        gnarsil::code_params params;
        params.n = code.n;
        params.s = gnarsil::rank(code.h_x) + gnarsil::rank(code.h_z);
        params.k = code.n - params.s;
        params.r = 0;
        payload["params"] = gnarsil::params_to_json(params);
        if (!prefix.empty()) {
            const struct {
                const char* suffix;
                const bit_matrix* m;
            } items[] = {{"hx", &code.h_x}, {"hz", &code.h_z}};
            for (const auto& it : items) {
                std::string path = prefix + "_" + it.suffix + ".txt";
                std::ofstream out(path);
                if (!out)
                    throw gnarsil::parse_error("cannot write file: " + path);
                gnarsil::write_matrix_text(out, *it.m);
                files[it.suffix] = path;
            }
        }
    } else {
        throw gnarsil::parse_error("unknown construction family: " + family +
                                   " (expected shp, slp, or lp)");
    }
    if (!prefix.empty())
        payload["files"] = files;
    json report = gnarsil::make_run_report(echo, inputs, payload,
                                           elapsed_ms_since(start),
                                           gnarsil::version_string);
    emit_report(report, report_path);
    const json& p = payload["params"];
    std::cerr << "[[" << p["n"] << "," << p["k"] << "]] r=" << p["r"]
              << " s=" << p["s"] << '\n';
    return 0;
}

int cmd_distance(const std::string& echo, const std::string& tab_path,
                 std::size_t weight_limit, const std::string& mode, bool force,
                 bool pure_only, unsigned threads,
                 const std::string& report_path) {
    auto start = std::chrono::steady_clock::now();
    tableau t = gnarsil::load_tableau_file(tab_path);
    gnarsil::distance_query q;
    q.n = t.n;
    q.stabilizers = center_rows(t);
    q.gauges = gauge_group_rows(t);
    q.weight_limit = weight_limit;
    q.mode = (mode == "bare") ? gnarsil::distance_mode::bare
                              : gnarsil::distance_mode::dressed;
    q.force = force;
    q.pure_only = pure_only;
    q.threads = threads;
    gnarsil::distance_result res = gnarsil::min_weight_logical(q);
    json payload;
    payload["mode"] = mode;
    payload["weight_limit"] = weight_limit;
    if (res.found_weight) {
        payload["found_weight"] = *res.found_weight;
        payload["witness"] = gnarsil::print_pauli(res.witness);
        std::cerr << "minimum " << mode << " logical weight within limit: "
                  << *res.found_weight << " (witness "
                  << gnarsil::print_pauli(res.witness) << ")\n";
    } else {
        payload["found_weight"] = nullptr;
        payload["witness"] = nullptr;
        std::cerr << "no " << mode << " logical of weight <= " << weight_limit
                  << " exists\n";
    }
    json inputs;
    inputs[tab_path] = gnarsil::digest_file(tab_path);
    json report = gnarsil::make_run_report(echo, inputs, payload,
                                           elapsed_ms_since(start),
                                           gnarsil::version_string);
    emit_report(report, report_path);
    return 0;
}

int cmd_params(const std::string& echo, const std::string& tab_path,
               const std::string& report_path) {
    auto start = std::chrono::steady_clock::now();
    tableau t = gnarsil::load_tableau_file(tab_path);
    gnarsil::code_params params =
        gnarsil::compute_group_params(gauge_group_rows(t), t.n);
    json payload;
    payload["params"] = gnarsil::params_to_json(params);
    json inputs;
    inputs[tab_path] = gnarsil::digest_file(tab_path);
    json report = gnarsil::make_run_report(echo, inputs, payload,
                                           elapsed_ms_since(start),
                                           gnarsil::version_string);
    emit_report(report, report_path);
    std::cerr << "[[" << params.n << "," << params.k << "]] r=" << params.r
              << " s=" << params.s << '\n';
    return 0;
}

int cmd_count_reps(std::size_t r, bool brute, bool table) {
    gnarsil::rep_count_result res =
        brute ? gnarsil::brute_force_count(r) : gnarsil::formula_count(r);
    std::cout << res.raw << " / " << res.multiplicity << " = " << res.unique
              << '\n';
    if (res.provisional)
        std::cerr << "note: multiplicity uses the conjectured closed form "
                     "2^r * r! (measured only for r <= 4)\n";
    if (table) {
        if (r > 2)
            throw gnarsil::resource_error(
                "pair-table printing is limited to r <= 2");
        bit_matrix tbl = gnarsil::pair_table(r);
        for (const bit_vector& row : tbl.rows)
            std::cout << gnarsil::to_string(row) << '\n';
    }
    return 0;
}

int cmd_verify(const std::string& tab_path) {
    tableau t = gnarsil::load_tableau_file(tab_path);
    if (!gnarsil::verify_subsystem(t)) {
        std::cerr << "verification failed: symplectic relation violated\n";
        return 1;
    }
    std::cout << "ok: symplectic relation holds (n=" << t.n << ", k=" << t.k
              << ", gauge rows: " << t.gauge_rows.size() << ")\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"stabilizer splitting toolkit: symplectic tableaux, gauge "
                 "searches, product-code constructions, bounded distances"};
    app.set_version_flag("--version",
                         std::string("gnarsil ") + gnarsil::version_string);
    app.require_subcommand(1);

    /* build */
    std::string b_hx, b_hz, b_lx, b_lz, b_out;
    CLI::App* build = app.add_subcommand(
        "build", "build a symplectic tableau from CSS parity checks");
    build->add_option("hx", b_hx, "X parity-check matrix file")->required();
    build->add_option("hz", b_hz, "Z parity-check matrix file")->required();
    CLI::Option* blx = build->add_option(
        "--lx", b_lx, "explicit X logical candidate matrix file");
    CLI::Option* blz = build->add_option(
        "--lz", b_lz, "explicit Z logical candidate matrix file");
    blx->needs(blz);
    blz->needs(blx);
    build->add_option("-o,--out", b_out,
                      "tableau JSON output path (default: stdout)");

    /* split */
    std::string s_tab, s_rows, s_pre, s_out_tab, s_report;
    int s_alg = 1;
    gnarsil::split_config s_cfg;
    CLI::App* split = app.add_subcommand(
        "split", "replace stabilizer rows by lower-weight gauge pairs");
    split->add_option("tableau", s_tab, "tableau JSON file")->required();
    split->add_option("--alg", s_alg, "1 = gauge generators, 2 = gauge operators")
        ->check(CLI::IsMember({1, 2}))
        ->required();
    split->add_option("--rows", s_rows,
                      "comma-separated 1-based stabilizer rows to replace")
        ->required();
    split->add_option("--w", s_cfg.weight, "starting candidate Pauli weight");
    split->add_option("--gauges-per-stab", s_cfg.gauges_per_stab,
                      "gauges XOR-ed into each target");
    split->add_option("--max-size", s_cfg.max_pool, "candidate pool cap");
    split->add_option("--budget", s_cfg.combination_budget,
                      "largest enumeration allowed before giving up");
    split->add_option("--threads", s_cfg.threads,
                      "worker threads for combination scans");
    split->add_option("--seed-preprocess", s_pre,
                      "script of \"target <- s1 s2 ...\" row products");
    split->add_option("--out-tableau", s_out_tab,
                      "write the split tableau JSON here (algorithm 1)");
    split->add_option("-o,--report", s_report,
                      "run-report JSON path (default: stdout)");

    /* construct */
    std::string c_family, c_prefix, c_report;
    std::vector<std::string> c_catalog, c_in;
    bool c_qc = false;
    CLI::App* construct = app.add_subcommand(
        "construct", "build SHP / SLP / LP codes from classical inputs");
    construct->add_option("family", c_family, "shp, slp, or lp")
        ->check(CLI::IsMember({"shp", "slp", "lp"}))
        ->required();
    construct->add_option("--catalog", c_catalog,
                          "named study matrices (see README)")
        ->expected(1, 2);
    construct->add_option("--in", c_in, "input matrix file(s)")->expected(1, 2);
    construct->add_flag("--qc", c_qc,
                        "inputs are circulant exponent tables, not polynomial "
                        "matrices");
    construct->add_option("--out-prefix", c_prefix,
                          "write component matrices as <prefix>_*.txt");
    construct->add_option("-o,--report", c_report,
                          "run-report JSON path (default: stdout)");

    /* distance */
    std::string d_tab, d_mode = "dressed", d_report;
    std::size_t d_limit = 0;
    bool d_force = false, d_pure = false;
    unsigned d_threads = 1;
    CLI::App* distance = app.add_subcommand(
        "distance", "bounded brute-force minimum logical weight");
    distance->add_option("tableau", d_tab, "tableau JSON file")->required();
    distance->add_option("--weight-limit", d_limit, "largest weight to scan")
        ->required();
    distance->add_option("--mode", d_mode, "dressed or bare")
        ->check(CLI::IsMember({"dressed", "bare"}));
    distance->add_flag("--force", d_force,
                       "scan even past the desk-scale guard rails");
    distance->add_flag("--pure-only", d_pure,
                       "scan only all-X and all-Z type assignments");
    distance->add_option("--threads", d_threads, "worker threads");
    distance->add_option("-o,--report", d_report,
                         "run-report JSON path (default: stdout)");

    /* params */
    std::string p_tab, p_report;
    CLI::App* params =
        app.add_subcommand("params", "n, k, r, s of a tableau's gauge group");
    params->add_option("tableau", p_tab, "tableau JSON file")->required();
    params->add_option("-o,--report", p_report,
                       "run-report JSON path (default: stdout)");

    /* count-reps */
    std::size_t r_count = 0;
    bool r_brute = false, r_table = false;
    CLI::App* reps = app.add_subcommand(
        "count-reps", "count gauge-block representations for r gauge qubits");
    reps->add_option("--r", r_count, "gauge-qubit count")->required();
    reps->add_flag("--brute", r_brute,
                   "exhaustive enumeration instead of the closed form (r <= 2)");
    reps->add_flag("--table", r_table,
                   "also print the symplectic pair table (r <= 2)");

    /* verify */
    std::string v_tab;
    CLI::App* verify = app.add_subcommand(
        "verify", "check the symplectic relation of a tableau file");
    verify->add_option("tableau", v_tab, "tableau JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const std::string echo = join_args(argc, argv);
    try {
        if (build->parsed())
            return cmd_build(b_hx, b_hz, b_lx, b_lz, b_out);
        if (split->parsed())
            return cmd_split(echo, s_tab, s_alg, s_rows, s_cfg, s_pre,
                             s_out_tab, s_report);
        if (construct->parsed())
            return cmd_construct(echo, c_family, c_catalog, c_in, c_qc,
                                 c_prefix, c_report);
        if (distance->parsed())
            return cmd_distance(echo, d_tab, d_limit, d_mode, d_force, d_pure,
                                d_threads, d_report);
        if (params->parsed())
            return cmd_params(echo, p_tab, p_report);
        if (reps->parsed())
            return cmd_count_reps(r_count, r_brute, r_table);
        if (verify->parsed())
            return cmd_verify(v_tab);
    } catch (const gnarsil::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const gnarsil::split_fail& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const gnarsil::resource_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const gnarsil::ring_orthogonality_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const gnarsil::validation_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
