// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rrloc/oracle.hpp"
#include "rrloc/reduction.hpp"
#include "rrloc/verify.hpp"

using namespace rrloc;

namespace {

constexpr double kCalibrationSeconds = 1.0;
constexpr double kIdentitySuiteSeconds = 30.0;
constexpr int kMaxPower = 4;  // catalog powers swept by the per-component checks

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::pair<std::string, ProblemInstance>> catalog_sweep() {
  std::vector<std::pair<std::string, ProblemInstance>> out;
  for (const auto& e : catalog_entries()) {
    for (int k = std::max(1, e.min_k); k <= kMaxPower; ++k) {
      out.emplace_back(e.name + " k=" + std::to_string(k), catalog(e.name, k));
    }
  }
  return out;
}

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

Outcome calibration() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto p = catalog("cp1-k", 2);
  const auto c = character_polynomial(p);
  const Rational lefschetz = rr_invariant(p);
  const Rational reduced = rr_reduced(p).total;
  const double t = seconds_since(start);
  if (c != CharacterPolynomial{{{-1, 1}, {0, 1}, {1, 1}}}) fail(o, "character is " + c.to_string());
  if (lefschetz != Rational(1)) fail(o, "lefschetz side " + lefschetz.to_string());
  if (reduced != Rational(1)) fail(o, "reduction side " + reduced.to_string());
  if (t >= kCalibrationSeconds) fail(o, "took " + std::to_string(t) + " s");
  if (o.pass) o.detail = "character " + c.to_string() + ", both sides 1, " + std::to_string(t) + " s";
  return o;
}

Outcome quantization_identity() {
  Outcome o;
  std::vector<std::pair<std::string, ProblemInstance>> cases;
  for (int k = 1; k <= 6; ++k) cases.emplace_back("cp1-k k=" + std::to_string(k), catalog("cp1-k", k));
  for (int k = 1; k <= 4; ++k) cases.emplace_back("cp2-k k=" + std::to_string(k), catalog("cp2-k", k));
  cases.emplace_back("cp1xcp1", catalog("cp1xcp1"));
  cases.emplace_back("so3-coadjoint k=2", catalog("so3-coadjoint", 2));
  cases.emplace_back("so3-coadjoint k=3", catalog("so3-coadjoint", 3));
  cases.emplace_back("cp1-double", catalog("cp1-double"));
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [name, p] : cases) {
    const Report r = verify_quantization(p, {name, std::nullopt, false});
    if (r.verdict != Verdict::Pass) fail(o, name + ": " + to_string(r.verdict) + " " + r.reason);
  }
  const double t = seconds_since(start);
  if (t >= kIdentitySuiteSeconds) fail(o, "suite took " + std::to_string(t) + " s");
  if (o.pass) o.detail = std::to_string(cases.size()) + " instances agree exactly, " + std::to_string(t) + " s";
  return o;
}

Outcome window_vanishing() {
  Outcome o;
  int checked = 0;
  const auto weyl = WeylFactor::of(GroupKind::U1);
  for (const auto& [name, p] : catalog_sweep()) {
    for (const auto& f : p.components) {
      for (long r = -2; r <= 2; ++r) {
        const long m = f.moment + r;
        if (m <= -f.n_plus() || m >= f.n_minus()) continue;
        ++checked;
        if (!residue_of_h(f, Chart::zero(), weyl, r).is_zero() || !residue_of_h(f, Chart::infinity(), weyl, r).is_zero()) {
          fail(o, name + " " + f.name + " r=" + std::to_string(r));
        }
      }
    }
  }
  if (checked == 0) fail(o, "no (component, r) pair inside a window");
  if (o.pass) o.detail = std::to_string(checked) + " (component, r) pairs, all residues 0";
  return o;
}

Outcome residue_theorem() {
  Outcome o;
  int checked = 0;
  for (const auto& [name, p] : catalog_sweep()) {
    for (const auto& row : residue_table(p)) {
      ++checked;
      if (!row.sum.is_zero()) fail(o, name + " " + row.component + " sums to " + row.sum.to_string());
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " components, every residue sum exactly 0";
  return o;
}

Outcome character_finiteness() {
  Outcome o;
  int checked = 0;
  for (const auto& [name, p] : catalog_sweep()) {
    const int bound = automatic_degree_bound(p);
    const auto c1 = character_polynomial(p, bound);
    const auto c2 = character_polynomial(p, 2 * bound);
    if (c1 != c2) fail(o, name + ": doubling the truncation changed the character");
    for (const auto& [m, v] : character_from_chart(p, Chart::infinity(), 2 * bound)) {
      if (std::labs(m) > bound) fail(o, name + ": residue-path expansion has t^" + std::to_string(m));
    }
    ++checked;
  }
  if (o.pass) o.detail = std::to_string(checked) + " instances stable under doubling, no tail";
  return o;
}

Outcome quasi_free() {
  Outcome o;
  int checked = 0;
  int outside_hypotheses = 0;
  for (const auto& [name, p] : catalog_sweep()) {
    bool all_unit = true;
    for (const auto& f : p.components) {
      for (int b : f.weights) all_unit = all_unit && (b == 1 || b == -1);
    }
    if (!all_unit) continue;
    if (!hypotheses_hold(validate(p))) {
      ++outside_hypotheses;
      continue;
    }
    ++checked;
    if (!kawasaki_corrections(p).empty()) fail(o, name + ": corrections present");
    if (rr_reduced_main(p) != rr_invariant(p)) fail(o, name + ": main term differs from lefschetz side");
  }
  if (checked == 0) fail(o, "no quasi-free instance in the catalog");
  if (o.pass) {
    o.detail = std::to_string(checked) + " quasi-free instances, no corrections, main term exact (" +
               std::to_string(outside_hypotheses) + " outside the hypotheses skipped)";
  }
  return o;
}

Outcome correction_necessity() {
  Outcome o;
  const auto p = catalog("cp1-double");
  const Rational lefschetz = rr_invariant(p);
  const ReducedRR r = rr_reduced(p);
  if (r.main_term == lefschetz) fail(o, "main term alone already equals the lefschetz side");
  Rational minus_one;
  bool found = false;
  for (const auto& c : r.corrections) {
    if (c.order == 2) {
      minus_one = c.value;
      found = true;
    }
  }
  if (!found) fail(o, "no correction at -1");
  if (r.main_term + minus_one != lefschetz) fail(o, "main + correction at -1 differs from the lefschetz side");
  if (o.pass) {
    o.detail = "main " + r.main_term.to_string() + " + correction " + minus_one.to_string() + " = " + lefschetz.to_string();
  }
  return o;
}

Outcome galois_rationality() {
  Outcome o;
  int orbits = 0;
  for (const auto& e : catalog_entries()) {
    for (int k = std::max(1, e.min_k); k <= 6; ++k) {
      for (const auto& c : kawasaki_corrections(catalog(e.name, k))) {
        ExactScalar sum;
        for (const auto& r : c.roots) sum += r.value;
        try {
          if (sum.rational_part() != c.value) fail(o, e.name + ": orbit sum disagrees with the stored value");
        } catch (const std::exception& ex) {
          fail(o, e.name + ": " + ex.what());
        }
        ++orbits;
      }
    }
  }
  if (orbits == 0) fail(o, "no correction orbit found");
  if (o.pass) o.detail = std::to_string(orbits) + " orbit sums rational";
  return o;
}

// Degree of the interpolating polynomial through (1, v[0]), (2, v[1]), ...: the order of the
// first vanishing finite difference, or -1 for all zeros.
int interpolation_degree(std::vector<Rational> v) {
  int degree = -1;
  for (int order = 0; !v.empty(); ++order) {
    bool zero = true;
    for (const auto& x : v) zero = zero && x.is_zero();
    if (zero) return degree;
    degree = order;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) v[i] = v[i + 1] - v[i];
    v.pop_back();
  }
  return 1 << 20;
}

Outcome polynomiality() {
  Outcome o;
  std::ostringstream detail;
  for (const auto& [name, base] : std::vector<std::pair<std::string, ProblemInstance>>{
           {"cp1-k", catalog("cp1-k", 2)}, {"cp2-k", catalog("cp2-k", 1)}}) {
    std::vector<Rational> totals;
    for (int k = 1; k <= 6; ++k) totals.push_back(rr_reduced(tensor_power(base, k)).total);
    const int allowed = base.complex_dimension() - 1;
    const int degree = interpolation_degree(totals);
    if (degree > allowed) fail(o, name + ": degree " + std::to_string(degree) + " exceeds " + std::to_string(allowed));
    detail << name << " degree " << degree << " (<= " << allowed << ") ";
  }
  if (o.pass) o.detail = detail.str();
  return o;
}

Outcome negative_control() {
  Outcome o;
  const Report r = verify_quantization(catalog("su2-exceptional"), {"su2-exceptional", std::nullopt, false});
  if (r.verdict != Verdict::NotAsserted) fail(o, "verdict " + to_string(r.verdict));
  if (o.pass) {
    o.detail = "NOT-ASSERTED; lefschetz " + (r.lefschetz ? r.lefschetz->to_string() : "?") + ", reduction " +
               (r.reduction ? r.reduction->total.to_string() : "?");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"calibration", calibration},
      {"quantization identity", quantization_identity},
      {"window vanishing", window_vanishing},
      {"global residue theorem", residue_theorem},
      {"character finiteness", character_finiteness},
      {"quasi-free specialization", quasi_free},
      {"correction necessity", correction_necessity},
      {"Galois rationality", galois_rationality},
      {"tensor-power polynomiality", polynomiality},
      {"negative control", negative_control},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::cout << "criterion " << (i + 1) << " (" << criteria[i].first << "): " << (o.pass ? "PASS" : "FAIL") << "  "
              << o.detail << "\n";
  }
  return failures == 0 ? 0 : 1;
}
