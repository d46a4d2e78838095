#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "multigrad/betti.hpp"
#include "multigrad/taylor.hpp"

namespace multigrad {

// Input or syntax problem; line/column are 1-based (0 when not applicable).
struct ParseError : std::runtime_error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int line_ = 0, int column_ = 0)
        : std::runtime_error(line_ > 0 ? msg + " (line " + std::to_string(line_) + ", column " +
                                             std::to_string(column_) + ")"
                                       : msg),
          line(line_), column(column_) {}
};

// "gf:<prime>" or "rationals".
FieldSpec parse_field(const std::string& text);

struct ModuleInput {
    std::vector<std::string> var_names;
    ModulePresentation module;
};

// Accepts {"vars":[...],"ideal":[...]} or {"vars":[...],"summands":[{"shift":
// [...],"ideal":[...]},...]}. Monomials are *-separated var^k factors, k >= 1,
// ^1 optional. Generators are minimalized, shifts translated into N^n.
ModuleInput parse_module(const std::string& text);
ModuleInput parse_module_file(const std::string& path);

// Canonical writer; parse(write(m)) == write-fixed-point.
std::string write_module(const ModuleInput& m);
nlohmann::json module_to_json(const ModuleInput& m);

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& var_names);
nlohmann::json multidegree_to_json(const Multidegree& a);
nlohmann::json varset_to_json(const VarSet& s, const std::vector<std::string>& var_names);

// Macaulay-style Z-graded layout (rows j, columns i, totals row) followed by
// the multigraded entries and the strand summary.
std::string render_betti_text(const BettiTable& table, const StrandReport& sr);

nlohmann::json betti_report_json(const ModuleInput& in, const BettiTable& table,
                                 const StrandReport& sr);
nlohmann::json witness_report_json(const ModuleInput& in, KoszulPolyseq& inst,
                                   const WitnessCertificate& cert, const ValidationReport& val);
nlohmann::json betti_bounds_json(const BettiBoundsReport& rep);
nlohmann::json strand_bounds_json(const StrandBoundsReport& rep);
nlohmann::json tor_bounds_json(const TorBoundsReport& rep);

// dump with sorted keys, two-space indent, trailing newline
std::string canonical_json_text(const nlohmann::json& j);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace multigrad
