#pragma once

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "rrloc/cohomology.hpp"

namespace rrloc {

/// Local coordinate on the Riemann sphere in which a series is expanded:
///   Zero:     t = z
///   Infinity: t = 1/w
///   Root:     t = zeta_N^k * e^u   (so dt/t = du)
class Chart {
 public:
  enum class Kind { Zero, Infinity, Root };

  static Chart zero() { return Chart(Kind::Zero, 1, 0); }
  static Chart infinity() { return Chart(Kind::Infinity, 1, 0); }
  static Chart root(int conductor, long exponent);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] int conductor() const { return conductor_; }
  [[nodiscard]] int exponent() const { return exponent_; }
  /// Multiplicative order of the root (1 for t = 1); 0 for the Zero/Infinity charts.
  [[nodiscard]] int order() const;
  /// The root zeta_N^k; only for Root charts.
  [[nodiscard]] ExactScalar point() const;
  /// zeta^m for a Root chart, with a rational result when possible.
  [[nodiscard]] ExactScalar point_power(long m) const;
  /// "0", "inf", "1", "-1", "zeta_12^5", ...
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Chart& a, const Chart& b);

 private:
  Chart(Kind kind, int conductor, int exponent)
      : kind_(kind), conductor_(conductor), exponent_(exponent) {}

  Kind kind_;
  int conductor_;
  int exponent_;
};

/// Truncated Laurent series sum_{e >= valuation} a_e v^e in the chart coordinate v with
/// CohomologyClass coefficients. Coefficients are exact for e < precision; precision equal to
/// kExact marks a finite (exact) Laurent polynomial.
class RingSeries {
 public:
  static constexpr int kExact = std::numeric_limits<int>::max();

  RingSeries(Chart chart, PresentationPtr ring, int valuation, std::vector<CohomologyClass> coefficients,
             int precision);

  /// Exact series c * v^exponent.
  static RingSeries monomial(Chart chart, const CohomologyClass& c, int exponent = 0);
  /// Exact zero series.
  static RingSeries zero(Chart chart, PresentationPtr ring);

  [[nodiscard]] const Chart& chart() const { return chart_; }
  [[nodiscard]] const PresentationPtr& ring() const { return ring_; }
  [[nodiscard]] int valuation() const { return valuation_; }
  [[nodiscard]] int precision() const { return precision_; }
  [[nodiscard]] bool is_exact() const { return precision_ == kExact; }
  /// Last stored exponent (valuation - 1 when nothing is stored).
  [[nodiscard]] int top() const { return valuation_ + static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of v^e; throws InsufficientTruncation when e >= precision.
  [[nodiscard]] CohomologyClass coefficient(int e) const;

  /// Drops leading zero coefficients so that valuation() is the true order.
  [[nodiscard]] RingSeries normalized() const;
  /// Forgets every coefficient at or beyond the given exponent.
  [[nodiscard]] RingSeries truncated(int precision) const;
  /// 1/s up to the given precision; the leading coefficient must have a nonzero scalar part.
  [[nodiscard]] RingSeries reciprocal(int max_precision) const;

  RingSeries& operator+=(const RingSeries& rhs);
  RingSeries& operator*=(const ExactScalar& s);
  RingSeries& operator*=(const CohomologyClass& c);

  friend RingSeries operator+(RingSeries a, const RingSeries& b) { return a += b; }
  friend RingSeries operator*(RingSeries a, const ExactScalar& s) { return a *= s; }
  friend RingSeries operator*(RingSeries a, const CohomologyClass& c) { return a *= c; }

 private:
  void require_compatible(const RingSeries& other) const;

  Chart chart_;
  PresentationPtr ring_;
  int valuation_;
  std::vector<CohomologyClass> coeffs_;
  int precision_;

  friend RingSeries series_product(const RingSeries& a, const RingSeries& b);
};

/// Cauchy product; precision is the weakest one implied by the inputs. Throws
/// ComputationError on chart mismatch and PresentationMismatch on ring mismatch.
RingSeries series_product(const RingSeries& a, const RingSeries& b);

inline RingSeries operator*(const RingSeries& a, const RingSeries& b) { return series_product(a, b); }

/// Series of 1/(1 - t^{-beta} e^{-c}) in the chart, exact for exponents below `precision`.
/// At t = zeta with zeta^beta = 1 it has a pole: (beta u + c)^{-1} Td(beta u + c).
RingSeries expand_lefschetz_factor(int beta, const CohomologyClass& c, const Chart& chart, int precision);

/// Lower bound for the valuation of expand_lefschetz_factor(beta, c, chart, ...).
int lefschetz_factor_valuation(int beta, const CohomologyClass& c, const Chart& chart);

/// The Laurent polynomial sum_m terms[m] t^m expanded in the chart (exact except at roots).
RingSeries laurent_polynomial_in_chart(const std::map<long, Rational>& terms, const Chart& chart,
                                       const PresentationPtr& ring, int precision);

/// Residue of the form f dt/t where f is the series: [u^-1] at roots, [z^0] at 0, -[w^0] at
/// infinity. Throws InsufficientTruncation when the needed coefficient was truncated away.
CohomologyClass residue(const RingSeries& s);

/// Absolute precision a series must reach for residue() to be defined in this chart.
int residue_precision(const Chart& chart);

/// Largest k with c^k != 0 (0 for c == 0).
int nilpotency_index(const CohomologyClass& c);

}  // namespace rrloc
