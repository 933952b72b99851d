#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "gnarsil/split.hpp"
#include "gnarsil/tableau.hpp"

namespace gnarsil {

/* JSON serialization for tableaux and split reports, plus the versioned
   run report the command-line tool emits. Row and region indices inside
   tableau JSON are 0-based (they index the rows array directly); report
   indices are 1-based to match the human-readable tables. */

using json = nlohmann::ordered_json;

/* 64-bit FNV-1a digest of a byte string, as 16 lowercase hex digits. */
std::string fnv1a_digest(const std::string& bytes);

/* FNV-1a digest of a file's contents; throws parse_error when the file
   cannot be read. */
std::string digest_file(const std::string& path);

json tableau_to_json(const tableau& t);

/* Rebuilds a tableau from its JSON form. Structural problems (missing
   fields, malformed rows) throw parse_error; a tableau that fails the
   symplectic check throws validation_error. */
tableau tableau_from_json(const json& j);

void write_tableau_file(const std::string& path, const tableau& t);
tableau load_tableau_file(const std::string& path);

json params_to_json(const code_params& p);

/* Split outcome with per-target entries {target_row, gauge_indices,
   gauge_paulis, residual_pauli, residual_weight}; rows and pool indices
   are 1-based. */
json split_to_json(const split_result& r);

/* Top-level run report: {"schema": 1, "command", "inputs", payload
   fields, "elapsed_ms", "version"}. Everything except elapsed_ms is
   reproduced bit-identically by re-running the echoed command. */
json make_run_report(const std::string& command_echo,
                     const json& input_digests, const json& payload,
                     double elapsed_ms, const std::string& version);

} // namespace gnarsil
