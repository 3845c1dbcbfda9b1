#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "rrloc/fixedpoint.hpp"

namespace rrloc {

/// Finite Laurent polynomial sum_m c_m t^m with integer coefficients.
struct CharacterPolynomial {
  std::map<long, std::int64_t> coefficients;  // zero coefficients are never stored

  [[nodiscard]] std::int64_t operator[](long m) const;
  /// "t^-1 + 1 + t", "2*t^3 - t^-2", "0".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const CharacterPolynomial&, const CharacterPolynomial&) = default;
};

/// max_F(|mu_F| + sum_j |beta_j| * (1 + top_degree/2)) + 1.
int automatic_degree_bound(const ProblemInstance& p);

/// Expands every chi_F at t = infinity up to twice the degree bound with its own dense rational
/// ring arithmetic and sums. Throws StabilizationFailure when a coefficient beyond the bound is
/// nonzero, NonIntegerResult for a non-integer coefficient, and InputError when degree_bound is
/// below the automatic bound.
CharacterPolynomial character_polynomial(const ProblemInstance& p, std::optional<int> degree_bound = std::nullopt);

/// Multiplicity of the trivial representation: c_0 for U1, c_0 - c_1 for SO3, c_0 - c_2 for SU2.
/// Throws SymmetryViolation when an SU2/SO3 character is not symmetric under t -> 1/t.
std::int64_t invariant_multiplicity(const CharacterPolynomial& c, GroupKind group);

}  // namespace rrloc
