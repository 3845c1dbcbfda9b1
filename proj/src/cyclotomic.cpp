#include "rrloc/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

#include "rrloc/errors.hpp"

namespace rrloc {

namespace {

void trim(RatPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Exact quotient of integer polynomials; the divisor must be monic.
IntPoly divide_exact_monic(IntPoly dividend, const IntPoly& divisor) {
  const std::size_t dd = divisor.size() - 1;
  if (dividend.size() < divisor.size()) return {0};
  IntPoly quotient(dividend.size() - dd, 0);
  for (std::size_t i = dividend.size(); i-- > dd;) {
    const mpz_class c = dividend[i];
    if (c == 0) continue;
    quotient[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) dividend[i - dd + j] -= c * divisor[j];
  }
  return quotient;
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

RatPoly poly_sub(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

// Division with remainder over Q; b must be nonzero and trimmed.
std::pair<RatPoly, RatPoly> poly_divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  RatPoly q(a.size() - b.size() + 1);
  const Rational& lead = b.back();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    if (a[i].is_zero()) continue;
    const Rational c = a[i] / lead;
    q[i - (b.size() - 1)] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[i - (b.size() - 1) + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

std::mutex& field_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

int lcm_int(int a, int b) { return std::lcm(a, b); }

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw InputError("cyclotomic polynomial needs a positive index");
  IntPoly poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_exact_monic(poly, cyclotomic_polynomial(d));
  }
  return poly;
}

CyclotomicField::CyclotomicField(int n) : conductor_(n) {
  if (n < 1) throw InputError("conductor must be positive");
  modulus_ = cyclotomic_polynomial(n);
  degree_ = static_cast<int>(modulus_.size()) - 1;
  power_table_.reserve(static_cast<std::size_t>(n));
  RatPoly current(static_cast<std::size_t>(degree_));
  current[0] = 1;
  for (int k = 0; k < n; ++k) {
    power_table_.push_back(current);
    // multiply by z, then reduce the overflowing z^degree term using the monic modulus
    RatPoly next(static_cast<std::size_t>(degree_));
    const Rational top = current.back();
    for (int i = degree_ - 1; i > 0; --i) next[i] = current[i - 1];
    for (int i = 0; i < degree_; ++i) next[i] -= top * Rational(mpz_class(modulus_[i]));
    current = std::move(next);
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(int n) {
  static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(field_mutex());
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto field = std::make_shared<const CyclotomicField>(n);
  cache.emplace(n, field);
  return field;
}

RatPoly CyclotomicField::power_of_generator(long k) const {
  long r = k % conductor_;
  if (r < 0) r += conductor_;
  return power_table_[static_cast<std::size_t>(r)];
}

RatPoly CyclotomicField::reduce(const RatPoly& poly) const {
  RatPoly out(static_cast<std::size_t>(degree_));
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (poly[i].is_zero()) continue;
    if (static_cast<int>(i) < degree_) {
      out[i] += poly[i];
      continue;
    }
    const RatPoly& zi = power_of_generator(static_cast<long>(i));
    for (int j = 0; j < degree_; ++j) {
      if (!zi[j].is_zero()) out[j] += poly[i] * zi[j];
    }
  }
  return out;
}

Cyclotomic::Cyclotomic() : Cyclotomic(Rational(0)) {}

namespace {

const std::shared_ptr<const CyclotomicField>& rational_field() {
  static const std::shared_ptr<const CyclotomicField> q = CyclotomicField::get(1);
  return q;
}

}  // namespace

Cyclotomic::Cyclotomic(const Rational& value) : field_(rational_field()), coefficients_{value} {}

Cyclotomic::Cyclotomic(std::shared_ptr<const CyclotomicField> field, RatPoly coefficients)
    : field_(std::move(field)), coefficients_(field_->reduce(coefficients)) {}

Cyclotomic Cyclotomic::from_coefficients(int n, RatPoly coefficients) {
  return Cyclotomic(CyclotomicField::get(n), std::move(coefficients));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coefficients_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coefficients_.size(); ++i) {
    if (!coefficients_[i].is_zero()) return false;
  }
  return true;
}

Rational Cyclotomic::rational_part() const {
  if (!is_rational()) {
    throw NotRational("value " + to_string() + " in Q(zeta_" + std::to_string(conductor()) +
                      ") is not rational");
  }
  return coefficients_[0];
}

Cyclotomic Cyclotomic::embed(int m) const {
  const int n = conductor();
  if (m == n) return *this;
  if (m % n != 0) {
    throw ComputationError("cannot embed Q(zeta_" + std::to_string(n) + ") into Q(zeta_" +
                           std::to_string(m) + ")");
  }
  auto target = CyclotomicField::get(m);
  const int step = m / n;
  RatPoly out(static_cast<std::size_t>(target->degree()));
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i].is_zero()) continue;
    const RatPoly& zi = target->power_of_generator(static_cast<long>(i) * step);
    for (int j = 0; j < target->degree(); ++j) {
      if (!zi[j].is_zero()) out[j] += coefficients_[i] * zi[j];
    }
  }
  Cyclotomic result;
  result.field_ = std::move(target);
  result.coefficients_ = std::move(out);
  return result;
}

Cyclotomic Cyclotomic::galois(int a) const {
  const int n = conductor();
  if (std::gcd(a, n) != 1) throw ComputationError("Galois exponent must be coprime to the conductor");
  RatPoly out(coefficients_.size());
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i].is_zero()) continue;
    const RatPoly& zi = field_->power_of_generator(static_cast<long>(i) * a);
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (!zi[j].is_zero()) out[j] += coefficients_[i] * zi[j];
    }
  }
  Cyclotomic result;
  result.field_ = field_;
  result.coefficients_ = std::move(out);
  return result;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(conductor()) + ")");
  if (conductor() <= 2 || field_->degree() == 1) {
    RatPoly c{Rational(1) / coefficients_[0]};
    return Cyclotomic(field_, c);
  }
  // Extended Euclid: maintain s_i with s_i * x == r_i (mod Phi_N).
  RatPoly modulus;
  for (const auto& c : field_->modulus()) modulus.emplace_back(mpz_class(c));
  RatPoly r0 = modulus;
  RatPoly r1 = coefficients_;
  trim(r1);
  RatPoly s0;
  RatPoly s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, r] = poly_divmod(r0, r1);
    RatPoly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // Phi_N is irreducible, so the last nonzero remainder is a nonzero constant.
  const Rational c = r1.at(0);
  for (auto& v : s1) v /= c;
  return Cyclotomic(field_, s1);
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> acc = 0.0;
  const double angle = 2.0 * std::numbers::pi / conductor();
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    acc += coefficients_[i].to_double() * std::polar(1.0, angle * static_cast<double>(i));
  }
  return acc;
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return coefficients_[0].to_string();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    Rational c = coefficients_[i];
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (c.sign() < 0) c = -c;
    if (i == 0) {
      os << c;
    } else {
      if (c != Rational(1)) os << c << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coefficients_) c = -c;
  return out;
}

namespace {

// Brings a and b into a common field, returning the conductor used.
void unify(Cyclotomic& a, Cyclotomic& b) {
  if (a.conductor() == b.conductor()) return;
  const int m = std::lcm(a.conductor(), b.conductor());
  a = a.embed(m);
  b = b.embed(m);
}

}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (rhs.conductor() == 1) {
    coefficients_[0] += rhs.coefficients_[0];
    return *this;
  }
  Cyclotomic b = rhs;
  unify(*this, b);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] += b.coefficients_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  if (rhs.conductor() == 1) {
    const Rational& s = rhs.coefficients_[0];
    for (auto& c : coefficients_) c *= s;
    return *this;
  }
  if (conductor() == 1) {
    const Rational s = coefficients_[0];
    *this = rhs;
    for (auto& c : coefficients_) c *= s;
    return *this;
  }
  Cyclotomic b = rhs;
  unify(*this, b);
  coefficients_ = field_->reduce(poly_mul(coefficients_, b.coefficients_));
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() == b.conductor()) return a.coefficients_ == b.coefficients_;
  Cyclotomic x = a;
  Cyclotomic y = b;
  unify(x, y);
  return x.coefficients_ == y.coefficients_;
}

Cyclotomic root_of_unity(int n, long k) {
  auto field = CyclotomicField::get(n);
  return Cyclotomic(field, field->power_of_generator(k));
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) {
  os << x.to_string();
  if (!x.is_rational()) os << " [N=" << x.conductor() << "]";
  return os;
}

}  // namespace rrloc
