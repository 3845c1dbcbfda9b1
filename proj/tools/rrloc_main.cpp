#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "rrloc/errors.hpp"
#include "rrloc/io.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;
constexpr int kComputationError = 3;

struct InputOptions {
  std::string file;
  std::string catalog_name;
  std::optional<int> k;
  std::optional<int> degree_bound;
  bool json = false;
  bool decimal = false;
};

void add_input_options(CLI::App* cmd, InputOptions& o, bool with_format = true) {
  cmd->add_option("file", o.file, "instance document (JSON); '-' reads standard input");
  cmd->add_option("--catalog", o.catalog_name, "built-in instance instead of a file");
  cmd->add_option("--k", o.k, "tensor power: the k of a catalog entry, or L^k for a file");
  if (with_format) {
    cmd->add_flag("--json", o.json, "machine-readable output");
    cmd->add_flag("--decimal", o.decimal, "append approximate decimal values");
  }
}

std::pair<rrloc::ProblemInstance, std::string> load(const InputOptions& o) {
  if (!o.catalog_name.empty() && !o.file.empty()) throw rrloc::InputError("give either FILE or --catalog, not both");
  if (!o.catalog_name.empty()) {
    std::string label = o.catalog_name;
    if (o.k) label += " (k=" + std::to_string(*o.k) + ")";
    return {rrloc::catalog(o.catalog_name, o.k), label};
  }
  if (o.file.empty()) throw rrloc::InputError("no input: give FILE or --catalog NAME");
  auto p = rrloc::load_instance(o.file);
  if (o.k) {
    if (*o.k < 1) throw rrloc::InputError("--k must be at least 1 for a file input");
    p = rrloc::tensor_power(p, *o.k);
  }
  return {std::move(p), o.file + (o.k ? " (k=" + std::to_string(*o.k) + ")" : "")};
}

int cmd_verify(const InputOptions& o) {
  auto [p, label] = load(o);
  rrloc::VerifyOptions options{label, o.degree_bound, true};
  const rrloc::Report r = rrloc::verify_quantization(p, options);
  std::cout << (o.json ? rrloc::report_to_json(r) + "\n" : rrloc::render_report(r, o.decimal));
  if (r.has_input_errors()) return kInputError;
  if (r.has_computation_errors()) return kComputationError;
  return r.verdict == rrloc::Verdict::Fail ? kFail : kOk;
}

int cmd_character(const InputOptions& o) {
  auto [p, label] = load(o);
  const auto c = rrloc::character_polynomial(p, o.degree_bound);
  if (o.json) {
    std::cout << rrloc::character_to_json(c) << "\n";
  } else {
    std::cout << c.to_string() << "\n";
  }
  return kOk;
}

int cmd_residues(const InputOptions& o) {
  auto [p, label] = load(o);
  const auto findings = rrloc::validate(p);
  for (const auto& f : findings) {
    if (f.severity == rrloc::Severity::Error) throw rrloc::InputError(f.code + ": " + f.message);
  }
  const auto table = rrloc::residue_table(p);
  if (o.json) {
    std::cout << rrloc::residues_to_json(table) << "\n";
  } else {
    std::cout << label << "\n" << rrloc::render_residue_table(table, o.decimal);
  }
  return kOk;
}

int cmd_catalog(const std::string& dump, std::optional<int> k) {
  if (dump.empty()) {
    for (const auto& e : rrloc::catalog_entries()) {
      std::cout << e.name << "  (default k=" << e.default_k << ")  " << e.description << "\n";
    }
    return kOk;
  }
  std::cout << rrloc::instance_to_json(rrloc::catalog(dump, k)) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact localization check of quantization commuting with reduction for rank-one group actions"};
  app.require_subcommand(1);

  InputOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "compute both sides and the oracle and report a verdict");
  add_input_options(verify, verify_opts);
  verify->add_option("--degree-bound", verify_opts.degree_bound, "oracle truncation (at least the automatic bound)");

  InputOptions character_opts;
  auto* character = app.add_subcommand("character", "print the character as a Laurent polynomial in t");
  add_input_options(character, character_opts);
  character->add_option("--degree-bound", character_opts.degree_bound, "truncation (at least the automatic bound)");

  InputOptions residue_opts;
  auto* residues = app.add_subcommand("residues", "per-component residue table");
  add_input_options(residues, residue_opts);

  std::string dump;
  std::optional<int> catalog_k;
  auto* cat = app.add_subcommand("catalog", "list built-in instances or dump one as JSON");
  cat->add_option("--dump", dump, "entry to print as an instance document");
  cat->add_option("--k", catalog_k, "power for --dump");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*verify) return cmd_verify(verify_opts);
    if (*character) return cmd_character(character_opts);
    if (*residues) return cmd_residues(residue_opts);
    if (*cat) return cmd_catalog(dump, catalog_k);
  } catch (const rrloc::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return kComputationError;
  }
  return kInputError;
}
