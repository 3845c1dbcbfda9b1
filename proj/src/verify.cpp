#include "rrloc/verify.hpp"

#include <chrono>
#include <functional>

#include "rrloc/errors.hpp"

namespace rrloc {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::NotAsserted: return "NOT-ASSERTED";
  }
  return "FAIL";
}

Verdict parse_verdict(std::string_view text) {
  if (text == "PASS") return Verdict::Pass;
  if (text == "FAIL") return Verdict::Fail;
  if (text == "NOT-ASSERTED") return Verdict::NotAsserted;
  throw InputError("unknown verdict '" + std::string(text) + "'");
}

bool Report::has_input_errors() const {
  if (has_errors(findings)) return true;
  for (const auto& e : errors) {
    if (e.kind == "input") return true;
  }
  return false;
}

bool Report::has_computation_errors() const {
  for (const auto& e : errors) {
    if (e.kind == "computation") return true;
  }
  return false;
}

std::vector<ComponentResidues> residue_table(const ProblemInstance& p) {
  std::vector<ComponentResidues> out;
  for (const auto& f : p.components) {
    ComponentResidues row{f.name, f.moment, component_residues(p, f), ExactScalar()};
    for (const auto& r : row.poles) row.sum += r.value;
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

void run_stage(Report& report, const std::string& stage, const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  try {
    body();
  } catch (const InputError& e) {
    report.errors.push_back({stage, "input", e.what()});
  } catch (const std::exception& e) {
    report.errors.push_back({stage, "computation", e.what()});
  }
  const auto stop = std::chrono::steady_clock::now();
  report.timings_us[stage] = std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
}

std::string warning_codes(const std::vector<Finding>& findings) {
  std::string out;
  for (const auto& f : findings) {
    if (f.severity != Severity::Warn) continue;
    if (out.find(f.code) != std::string::npos) continue;
    if (!out.empty()) out += ", ";
    out += f.code;
  }
  return out;
}

}  // namespace

Report verify_quantization(const ProblemInstance& p, const VerifyOptions& options) {
  Report r;
  r.source = options.source;
  r.group = p.group;
  for (const auto& f : p.components) r.components.push_back(f.name);
  r.findings = validate(p);
  r.conductor = p.conductor();
  r.complex_dimension = p.complex_dimension();

  if (has_errors(r.findings)) {
    r.verdict = Verdict::Fail;
    r.reason = "instance has validation errors";
    return r;
  }

  run_stage(r, "lefschetz", [&] { r.lefschetz = rr_invariant(p); });
  run_stage(r, "reduction", [&] { r.reduction = rr_reduced(p); });
  run_stage(r, "oracle", [&] {
    r.character = character_polynomial(p, options.degree_bound);
    r.oracle = invariant_multiplicity(*r.character, p.group);
  });
  if (options.residues) run_stage(r, "residues", [&] { r.residues = residue_table(p); });

  if (!r.errors.empty()) {
    r.verdict = Verdict::Fail;
    r.reason = "stage '" + r.errors.front().stage + "' failed: " + r.errors.front().message;
    return r;
  }

  const Rational oracle_value(static_cast<long>(*r.oracle));
  const bool sides_agree = *r.lefschetz == r.reduction->total;
  const bool oracle_agrees = *r.lefschetz == oracle_value;
  std::string mismatch;
  if (!sides_agree) {
    mismatch = "lefschetz side " + r.lefschetz->to_string() + " differs from reduction side " +
               r.reduction->total.to_string();
  }
  if (!oracle_agrees) {
    if (!mismatch.empty()) mismatch += "; ";
    mismatch += "lefschetz side " + r.lefschetz->to_string() + " differs from oracle " + oracle_value.to_string();
  }

  if (!hypotheses_hold(r.findings)) {
    r.verdict = Verdict::NotAsserted;
    r.reason = "hypotheses for the quantization identity do not hold (" + warning_codes(r.findings) +
               "); equality is not asserted";
    if (!mismatch.empty()) r.reason += "; " + mismatch;
    return r;
  }
  if (mismatch.empty()) {
    r.verdict = Verdict::Pass;
    r.reason = "lefschetz side, reduction side and oracle agree";
  } else {
    r.verdict = Verdict::Fail;
    r.reason = mismatch;
  }
  return r;
}

}  // namespace rrloc
