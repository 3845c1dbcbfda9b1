#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rrloc/oracle.hpp"
#include "rrloc/reduction.hpp"

namespace rrloc {

enum class Verdict { Pass, Fail, NotAsserted };
std::string to_string(Verdict v);
Verdict parse_verdict(std::string_view text);

/// A stage that threw. kind is "input" or "computation".
struct StageError {
  std::string stage;
  std::string kind;
  std::string message;

  friend bool operator==(const StageError&, const StageError&) = default;
};

struct ComponentResidues {
  std::string component;
  long moment = 0;
  std::vector<PoleResidue> poles;
  ExactScalar sum;  // zero by the residue theorem

  friend bool operator==(const ComponentResidues&, const ComponentResidues&) = default;
};

struct Report {
  std::string source;
  GroupKind group = GroupKind::U1;
  int conductor = 0;
  int complex_dimension = 0;
  std::vector<std::string> components;

  std::vector<Finding> findings;
  std::optional<Rational> lefschetz;
  std::optional<ReducedRR> reduction;
  std::optional<std::int64_t> oracle;
  std::optional<CharacterPolynomial> character;
  std::vector<ComponentResidues> residues;

  Verdict verdict = Verdict::Fail;
  std::string reason;
  std::vector<StageError> errors;
  std::map<std::string, std::int64_t> timings_us;

  [[nodiscard]] bool has_input_errors() const;
  [[nodiscard]] bool has_computation_errors() const;

  friend bool operator==(const Report&, const Report&) = default;
};

struct VerifyOptions {
  std::string source;
  std::optional<int> degree_bound;
  bool residues = true;
};

/// Runs validation, both sides, the oracle and the per-pole table. Never throws for bad
/// instances: failures are recorded in errors and the verdict is FAIL. When the hypotheses do
/// not hold (WARN findings) the verdict is NOT-ASSERTED.
Report verify_quantization(const ProblemInstance& p, const VerifyOptions& options = {});

/// The per-pole table alone.
std::vector<ComponentResidues> residue_table(const ProblemInstance& p);

}  // namespace rrloc
