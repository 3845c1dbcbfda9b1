#pragma once

#include <map>
#include <string>
#include <vector>

#include "rrloc/fixedpoint.hpp"
#include "rrloc/laurent.hpp"

namespace rrloc {

/// Weyl density as a Laurent polynomial in t: 1 for U1, (2 - t - 1/t)/2 for SO3 and
/// (2 - t^2 - t^-2)/2 for SU2.
struct WeylFactor {
  GroupKind group = GroupKind::U1;
  std::map<long, Rational> terms;

  static WeylFactor of(GroupKind group);
  [[nodiscard]] ExactScalar evaluate(const ExactScalar& t) const;
};

/// t^numerator_exponent / prod_j (1 - t^-beta_j) for an isolated fixed point.
struct IsolatedChi {
  long numerator_exponent = 0;
  std::vector<int> denominator_exponents;

  [[nodiscard]] std::string to_string() const;
};

/// Throws InputError when f is not an isolated point.
IsolatedChi chi_isolated(const FixedComponent& f);

/// Series of t^shift * weyl(t) * chi_F(t) in the chart, exact below `precision`; coefficients
/// are classes on F (not yet integrated).
RingSeries integrand_series(const FixedComponent& f, const Chart& chart, const WeylFactor& weyl, long shift,
                            int precision);

/// Residue of t^shift * weyl * h_F at the chart's base point, integrated over F.
ExactScalar residue_of_h(const FixedComponent& f, const Chart& pole, const WeylFactor& weyl, long shift = 0);

/// -sum_F res_inf(weyl * h_F). Throws InputError on ERROR findings and NonIntegerResult when
/// the sum is not an integer.
Rational rr_invariant(const ProblemInstance& p);

struct PoleResidue {
  Chart pole;
  ExactScalar value;

  friend bool operator==(const PoleResidue&, const PoleResidue&) = default;
};

/// Residues of weyl * h_F at 0, infinity and every point of the wall set; these sum to zero.
std::vector<PoleResidue> component_residues(const ProblemInstance& p, const FixedComponent& f);

/// Coefficients of sum_F chi_F(t) read off the Zero or Infinity chart: every t-exponent whose
/// chart exponent is below `precision`, keyed by the t-exponent. Zero entries are dropped.
std::map<long, Rational> character_from_chart(const ProblemInstance& p, const Chart& chart, int precision);

}  // namespace rrloc
