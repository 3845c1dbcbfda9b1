#include "rrloc/reduction.hpp"

#include <map>
#include <algorithm>
#include <numeric>
#include <set>

#include "rrloc/errors.hpp"

namespace rrloc {

namespace {

void require_valid(const ProblemInstance& p) {
  for (const auto& f : validate(p)) {
    if (f.severity == Severity::Error) {
      throw InputError("invalid instance: " + f.code + (f.component.empty() ? "" : " at " + f.component) + ": " +
                       f.message);
    }
  }
}

}  // namespace

Rational rr_reduced_main(const ProblemInstance& p) {
  require_valid(p);
  const WeylFactor weyl = WeylFactor::of(p.group);
  const Chart one = Chart::root(p.conductor(), 0);
  ExactScalar sum;
  for (const auto& f : p.components) {
    if (f.moment > 0) sum += residue_of_h(f, one, weyl);
  }
  return sum.rational_part();
}

std::vector<OrbitCorrection> kawasaki_corrections(const ProblemInstance& p) {
  require_valid(p);
  const WeylFactor weyl = WeylFactor::of(p.group);
  const int n = p.conductor();
  std::set<int> exponents;
  for (const auto& f : p.components) {
    for (int k : wall_set(f, n)) {
      if (k != 0) exponents.insert(k);
    }
  }
  std::map<int, OrbitCorrection> orbits;
  for (int k : exponents) {
    const Chart pole = Chart::root(n, k);
    ExactScalar value;
    for (const auto& f : p.components) {
      if (f.moment <= 0) continue;
      const auto walls = wall_set(f, n);
      if (std::find(walls.begin(), walls.end(), k) == walls.end()) continue;
      value += residue_of_h(f, pole, weyl);
    }
    auto& orbit = orbits[pole.order()];
    orbit.order = pole.order();
    orbit.roots.push_back({pole, value});
  }
  std::vector<OrbitCorrection> out;
  for (auto& [order, orbit] : orbits) {
    ExactScalar sum;
    for (const auto& r : orbit.roots) sum += r.value;
    orbit.value = sum.rational_part();
    out.push_back(std::move(orbit));
  }
  return out;
}

ReducedRR rr_reduced(const ProblemInstance& p) {
  ReducedRR r;
  r.main_term = rr_reduced_main(p);
  r.corrections = kawasaki_corrections(p);
  r.total = r.main_term;
  for (const auto& c : r.corrections) r.total += c.value;
  return r;
}

}  // namespace rrloc
