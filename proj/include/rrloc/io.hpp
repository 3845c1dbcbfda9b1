#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rrloc/verify.hpp"

namespace rrloc {

/// Parses an instance document. Numbers are integers or "p/q" strings; floats are rejected.
/// Errors are InputError with the JSON path of the offending field.
ProblemInstance parse_instance(std::string_view text);
/// Reads a file ("-" is standard input) and parses it.
ProblemInstance load_instance(const std::string& path);
std::string instance_to_json(const ProblemInstance& p, int indent = 2);

std::string report_to_json(const Report& r, int indent = 2);
/// Inverse of report_to_json; exact values round-trip.
Report report_from_json(std::string_view text);

std::string character_to_json(const CharacterPolynomial& c, int indent = 2);
std::string residues_to_json(const std::vector<ComponentResidues>& table, int indent = 2);

/// Exact rendering; with decimal, appends "(~0.5)" style approximations.
std::string format_value(const ExactScalar& x, bool decimal = false);
std::string render_report(const Report& r, bool decimal = false);
std::string render_residue_table(const std::vector<ComponentResidues>& table, bool decimal = false);

}  // namespace rrloc
