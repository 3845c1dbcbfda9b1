#include "rrloc/lefschetz.hpp"

#include <algorithm>
#include <sstream>

#include "rrloc/errors.hpp"

namespace rrloc {

WeylFactor WeylFactor::of(GroupKind group) {
  WeylFactor w{group, {}};
  switch (group) {
    case GroupKind::U1:
      w.terms = {{0, Rational(1)}};
      break;
    case GroupKind::SO3:
      w.terms = {{-1, Rational(-1, 2)}, {0, Rational(1)}, {1, Rational(-1, 2)}};
      break;
    case GroupKind::SU2:
      w.terms = {{-2, Rational(-1, 2)}, {0, Rational(1)}, {2, Rational(-1, 2)}};
      break;
  }
  return w;
}

ExactScalar WeylFactor::evaluate(const ExactScalar& t) const {
  ExactScalar sum;
  const ExactScalar inv = t.inverse();
  for (const auto& [m, c] : terms) {
    ExactScalar power(1);
    for (long i = 0; i < (m < 0 ? -m : m); ++i) power *= (m < 0 ? inv : t);
    sum += power * ExactScalar(c);
  }
  return sum;
}

std::string IsolatedChi::to_string() const {
  std::ostringstream os;
  os << "t^" << numerator_exponent << " / (";
  for (std::size_t j = 0; j < denominator_exponents.size(); ++j) {
    if (j) os << " * ";
    os << "(1 - t^" << -denominator_exponents[j] << ")";
  }
  if (denominator_exponents.empty()) os << "1";
  os << ")";
  return os.str();
}

IsolatedChi chi_isolated(const FixedComponent& f) {
  if (!f.ring || !f.is_isolated()) {
    throw InputError("component '" + f.name + "' is not an isolated fixed point");
  }
  return IsolatedChi{f.moment, f.weights};
}

RingSeries integrand_series(const FixedComponent& f, const Chart& chart, const WeylFactor& weyl, long shift,
                            int precision) {
  std::map<long, Rational> poly;
  for (const auto& [m, c] : weyl.terms) poly[m + f.moment + shift] += c;

  int poly_valuation = 0;
  if (chart.kind() == Chart::Kind::Zero) poly_valuation = static_cast<int>(poly.begin()->first);
  if (chart.kind() == Chart::Kind::Infinity) poly_valuation = static_cast<int>(-poly.rbegin()->first);

  std::vector<int> valuations;
  int total = poly_valuation;
  for (std::size_t j = 0; j < f.weights.size(); ++j) {
    valuations.push_back(lefschetz_factor_valuation(f.weights[j], f.normal_chern[j], chart));
    total += valuations.back();
  }

  RingSeries acc = laurent_polynomial_in_chart(poly, chart, f.ring, precision - (total - poly_valuation));
  acc *= exp_class(f.omega) * f.todd;
  for (std::size_t j = 0; j < f.weights.size(); ++j) {
    const int own = precision - (total - valuations[j]);
    acc = series_product(acc, expand_lefschetz_factor(f.weights[j], f.normal_chern[j], chart, own));
  }
  return acc;
}

ExactScalar residue_of_h(const FixedComponent& f, const Chart& pole, const WeylFactor& weyl, long shift) {
  const RingSeries s = integrand_series(f, pole, weyl, shift, residue_precision(pole));
  return integrate(residue(s));
}

Rational rr_invariant(const ProblemInstance& p) {
  const auto findings = validate(p);
  if (has_errors(findings)) {
    for (const auto& f : findings) {
      if (f.severity == Severity::Error) {
        throw InputError("invalid instance: " + f.code + (f.component.empty() ? "" : " at " + f.component) +
                         ": " + f.message);
      }
    }
  }
  const WeylFactor weyl = WeylFactor::of(p.group);
  ExactScalar sum;
  for (const auto& f : p.components) sum -= residue_of_h(f, Chart::infinity(), weyl);
  const Rational value = sum.rational_part();
  if (!value.is_integer()) {
    throw NonIntegerResult("lefschetz side evaluates to the non-integer " + value.to_string() +
                           "; the fixed-point data is inconsistent");
  }
  return value;
}

std::vector<PoleResidue> component_residues(const ProblemInstance& p, const FixedComponent& f) {
  const WeylFactor weyl = WeylFactor::of(p.group);
  const int n = p.conductor();
  std::vector<PoleResidue> out;
  out.push_back({Chart::zero(), residue_of_h(f, Chart::zero(), weyl)});
  for (int k : wall_set(f, n)) {
    const Chart c = Chart::root(n, k);
    out.push_back({c, residue_of_h(f, c, weyl)});
  }
  out.push_back({Chart::infinity(), residue_of_h(f, Chart::infinity(), weyl)});
  return out;
}

std::map<long, Rational> character_from_chart(const ProblemInstance& p, const Chart& chart, int precision) {
  if (chart.kind() == Chart::Kind::Root) throw ComputationError("character expansion needs the 0 or inf chart");
  const WeylFactor unit = WeylFactor::of(GroupKind::U1);
  std::map<long, ExactScalar> sum;
  for (const auto& f : p.components) {
    const RingSeries s = integrand_series(f, chart, unit, 0, precision);
    for (int e = s.valuation(); e < precision; ++e) {
      const long t_exponent = chart.kind() == Chart::Kind::Infinity ? -e : e;
      sum[t_exponent] += integrate(s.coefficient(e));
    }
  }
  std::map<long, Rational> out;
  for (const auto& [m, v] : sum) {
    if (!v.is_zero()) out[m] = v.rational_part();
  }
  return out;
}

}  // namespace rrloc
