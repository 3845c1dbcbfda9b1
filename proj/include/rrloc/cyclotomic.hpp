#pragma once

#include <complex>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "rrloc/rational.hpp"

namespace rrloc {

/// Dense integer polynomial, coefficient i multiplies z^i.
using IntPoly = std::vector<mpz_class>;

/// Dense rational polynomial, coefficient i multiplies z^i.
using RatPoly = std::vector<Rational>;

/// The N-th cyclotomic polynomial, by exact division of z^N - 1 by Phi_d for proper d | N.
IntPoly cyclotomic_polynomial(int n);

/// Euler's totient.
int euler_phi(int n);

int lcm_int(int a, int b);

/// Q(zeta_N) = Q[z]/Phi_N(z) with its reduction tables. Instances are immutable and shared.
class CyclotomicField {
 public:
  /// Shared instance for conductor n (thread-safe, built once per conductor).
  static std::shared_ptr<const CyclotomicField> get(int n);

  explicit CyclotomicField(int n);

  [[nodiscard]] int conductor() const { return conductor_; }
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] const IntPoly& modulus() const { return modulus_; }

  /// Reduces an arbitrary-length polynomial modulo Phi_N into a vector of length degree().
  [[nodiscard]] RatPoly reduce(const RatPoly& poly) const;
  /// z^k mod Phi_N for any integer k.
  [[nodiscard]] RatPoly power_of_generator(long k) const;

 private:
  int conductor_;
  int degree_;
  IntPoly modulus_;
  // power_table_[k] = z^k mod Phi_N for 0 <= k < N.
  std::vector<RatPoly> power_table_;
};

/// Exact element of Q(zeta_N). Conductor 1 is Q itself. Mixed-conductor arithmetic embeds
/// both operands into Q(zeta_lcm).
class Cyclotomic {
 public:
  Cyclotomic();  // zero in Q
  Cyclotomic(const Rational& value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(int value) : Cyclotomic(Rational(value)) {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(std::shared_ptr<const CyclotomicField> field, RatPoly coefficients);

  /// Builds an element of Q(zeta_n) from coefficients in the power basis 1, z, .., z^(phi-1).
  static Cyclotomic from_coefficients(int n, RatPoly coefficients);

  [[nodiscard]] int conductor() const { return field_->conductor(); }
  [[nodiscard]] const RatPoly& coefficients() const { return coefficients_; }
  [[nodiscard]] const CyclotomicField& field() const { return *field_; }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_rational() const;
  /// Rational value; throws NotRational for elements outside Q.
  [[nodiscard]] Rational rational_part() const;

  /// Canonical image in Q(zeta_m) for a multiple m of the conductor.
  [[nodiscard]] Cyclotomic embed(int m) const;

  /// Galois automorphism zeta -> zeta^a, gcd(a, N) = 1.
  [[nodiscard]] Cyclotomic galois(int a) const;

  /// Multiplicative inverse via the extended Euclidean algorithm against Phi_N.
  [[nodiscard]] Cyclotomic inverse() const;

  /// Complex value under zeta_N = exp(2 pi i / N). For display only.
  [[nodiscard]] std::complex<double> to_complex() const;

  /// Polynomial in "z" such as "1/2 - z^2"; rational elements print as plain rationals.
  [[nodiscard]] std::string to_string() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs) { return *this *= rhs.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  std::shared_ptr<const CyclotomicField> field_;
  RatPoly coefficients_;
};

/// zeta_N^k in Q(zeta_N).
Cyclotomic root_of_unity(int n, long k);

/// Same as x.inverse(); throws DivisionByZero on zero.
inline Cyclotomic invert(const Cyclotomic& x) { return x.inverse(); }

inline Rational rational_part(const Cyclotomic& x) { return x.rational_part(); }

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

/// Coefficient domain used by cohomology classes and residues.
using ExactScalar = Cyclotomic;

}  // namespace rrloc
