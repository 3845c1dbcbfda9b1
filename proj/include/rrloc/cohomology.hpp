#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rrloc/cyclotomic.hpp"

namespace rrloc {

/// Exponent vector of a monomial, one entry per generator.
using Exponents = std::vector<int>;

struct Generator {
  std::string name;
  int order = 1;  // x^order = 0

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Free truncated ring Q[x_1..x_r]/(x_g^{m_g}) with every generator in degree 2, together with
/// an integration functional on the top-degree monomials (pushforward to a point).
class RingPresentation {
 public:
  /// Validates the data; throws InputError when an integral is not in top degree or an
  /// exponent exceeds its nilpotency order.
  RingPresentation(std::vector<Generator> generators, int top_degree,
                   std::map<Exponents, Rational> integrals);

  /// Cohomology of a point: no generators, top degree 0, integral of 1 equal to 1.
  static std::shared_ptr<const RingPresentation> point();

  /// Q[x]/x^2 with the integral of x equal to 1 (the projective line).
  static std::shared_ptr<const RingPresentation> projective_line(std::string name = "x");

  [[nodiscard]] const std::vector<Generator>& generators() const { return generators_; }
  [[nodiscard]] int top_degree() const { return top_degree_; }
  [[nodiscard]] const std::map<Exponents, Rational>& integrals() const { return integrals_; }
  [[nodiscard]] bool is_point() const { return generators_.empty(); }

  /// Number of basis monomials.
  [[nodiscard]] std::size_t dimension() const { return basis_.size(); }
  [[nodiscard]] const Exponents& monomial(std::size_t index) const { return basis_[index]; }
  /// Basis index of an exponent vector, or npos when some exponent reaches its order.
  [[nodiscard]] std::size_t index_of(const Exponents& e) const;
  /// Index of the product of two basis monomials, or npos when it vanishes.
  [[nodiscard]] std::size_t product_index(std::size_t a, std::size_t b) const {
    return product_table_[a * basis_.size() + b];
  }
  /// Total polynomial degree (half the cohomological degree) of a basis monomial.
  [[nodiscard]] int monomial_degree(std::size_t index) const { return degrees_[index]; }
  /// Upper bound on k with a^k != 0 for a class without constant term.
  [[nodiscard]] int nilpotency_bound() const { return max_degree_; }

  /// Parses "1", "x", "x^2*y" against this presentation's generator names.
  [[nodiscard]] Exponents parse_monomial(std::string_view text) const;
  [[nodiscard]] std::string format_monomial(const Exponents& e) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  friend bool operator==(const RingPresentation& a, const RingPresentation& b) {
    return a.generators_ == b.generators_ && a.top_degree_ == b.top_degree_ &&
           a.integrals_ == b.integrals_;
  }

 private:
  std::vector<Generator> generators_;
  int top_degree_;
  std::map<Exponents, Rational> integrals_;
  std::vector<Exponents> basis_;
  std::vector<int> degrees_;
  std::vector<std::size_t> product_table_;
  int max_degree_ = 0;
};

using PresentationPtr = std::shared_ptr<const RingPresentation>;

/// Element of a RingPresentation with ExactScalar coefficients, stored densely on the
/// monomial basis.
class CohomologyClass {
 public:
  CohomologyClass() = default;
  /// Zero class.
  explicit CohomologyClass(PresentationPtr ring);
  CohomologyClass(PresentationPtr ring, const ExactScalar& constant);

  static CohomologyClass monomial(PresentationPtr ring, const Exponents& e,
                                  const ExactScalar& coefficient = ExactScalar(1));
  /// Builds a class from a monomial-string map such as {"x": "7/3", "1": "1"}.
  static CohomologyClass from_terms(PresentationPtr ring,
                                    const std::map<std::string, Rational>& terms);

  [[nodiscard]] const PresentationPtr& ring() const { return ring_; }
  [[nodiscard]] const std::vector<ExactScalar>& coefficients() const { return coeffs_; }
  [[nodiscard]] const ExactScalar& coefficient(std::size_t index) const { return coeffs_[index]; }
  [[nodiscard]] ExactScalar coefficient(const Exponents& e) const;
  void set_coefficient(const Exponents& e, const ExactScalar& value);

  [[nodiscard]] const ExactScalar& constant_term() const { return coeffs_[0]; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_nilpotent() const { return constant_term().is_zero(); }

  /// Monomial map with non-zero coefficients, rational ones only; throws NotRational otherwise.
  [[nodiscard]] std::map<std::string, Rational> rational_terms() const;
  [[nodiscard]] std::string to_string() const;

  CohomologyClass operator-() const;
  CohomologyClass& operator+=(const CohomologyClass& rhs);
  CohomologyClass& operator-=(const CohomologyClass& rhs);
  CohomologyClass& operator*=(const CohomologyClass& rhs);
  CohomologyClass& operator*=(const ExactScalar& s);

  friend CohomologyClass operator+(CohomologyClass a, const CohomologyClass& b) { return a += b; }
  friend CohomologyClass operator-(CohomologyClass a, const CohomologyClass& b) { return a -= b; }
  friend CohomologyClass operator*(CohomologyClass a, const CohomologyClass& b) { return a *= b; }
  friend CohomologyClass operator*(CohomologyClass a, const ExactScalar& s) { return a *= s; }
  friend CohomologyClass operator*(const ExactScalar& s, CohomologyClass a) { return a *= s; }

  friend bool operator==(const CohomologyClass& a, const CohomologyClass& b);

 private:
  void require_same_ring(const CohomologyClass& other) const;

  PresentationPtr ring_;
  std::vector<ExactScalar> coeffs_;
};

/// Cup product; throws PresentationMismatch when the rings differ.
CohomologyClass ring_mul(const CohomologyClass& a, const CohomologyClass& b);

/// sum_n c_n a^n for a nilpotent class a; terms past the nilpotency bound are skipped.
CohomologyClass evaluate_power_series(const std::vector<Rational>& series, const CohomologyClass& a);

/// exp(a) for nilpotent a; throws InputError for a nonzero constant term.
CohomologyClass exp_class(const CohomologyClass& a);

/// Coefficients b_n of y/(1 - e^{-y}) = sum b_n y^n for n < count. Exact power-series division.
std::vector<Rational> todd_coefficients(std::size_t count);

/// a/(1 - e^{-a}) using at most order+1 Bernoulli terms, truncated by nilpotency.
CohomologyClass todd_series(const CohomologyClass& a, int order);

/// (1 - e^{-a})/a, the multiplicative inverse of todd_series(a).
CohomologyClass todd_inverse_factor(const CohomologyClass& a, int order);

/// Evaluation against the fundamental class: top-degree coefficients times the integrals.
ExactScalar integrate(const CohomologyClass& a);

}  // namespace rrloc

namespace rrloc {

/// Inverse of a class whose constant term is nonzero: a0^{-1} sum_k (-n/a0)^k.
CohomologyClass invert_class(const CohomologyClass& a);

}  // namespace rrloc
