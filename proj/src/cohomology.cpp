#include "rrloc/cohomology.hpp"

#include <cctype>
#include <mutex>
#include <numeric>
#include <sstream>

#include "rrloc/errors.hpp"

namespace rrloc {

RingPresentation::RingPresentation(std::vector<Generator> generators, int top_degree,
                                   std::map<Exponents, Rational> integrals)
    : generators_(std::move(generators)), top_degree_(top_degree), integrals_(std::move(integrals)) {
  if (top_degree_ < 0 || top_degree_ % 2 != 0) {
    throw InputError("top_degree must be a non-negative even integer");
  }
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].order < 1) {
      throw InputError("generator '" + generators_[i].name + "' needs nilpotency order >= 1");
    }
    if (generators_[i].name.empty()) throw InputError("generator with empty name");
    for (std::size_t j = 0; j < i; ++j) {
      if (generators_[i].name == generators_[j].name) {
        throw InputError("duplicate generator name '" + generators_[i].name + "'");
      }
    }
  }
  if (generators_.empty() && top_degree_ != 0) {
    throw InputError("a ring without generators must have top_degree 0");
  }

  // Mixed-radix enumeration of the monomial basis; index 0 is the unit.
  std::size_t count = 1;
  for (const auto& g : generators_) count *= static_cast<std::size_t>(g.order);
  basis_.reserve(count);
  degrees_.reserve(count);
  Exponents e(generators_.size(), 0);
  for (std::size_t n = 0; n < count; ++n) {
    basis_.push_back(e);
    degrees_.push_back(std::accumulate(e.begin(), e.end(), 0));
    max_degree_ = std::max(max_degree_, degrees_.back());
    for (std::size_t g = 0; g < e.size(); ++g) {
      if (++e[g] < generators_[g].order) break;
      e[g] = 0;
    }
  }
  product_table_.assign(count * count, npos);
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      Exponents sum = basis_[a];
      for (std::size_t g = 0; g < sum.size(); ++g) sum[g] += basis_[b][g];
      product_table_[a * count + b] = index_of(sum);
    }
  }

  if (generators_.empty() && integrals_.empty()) integrals_[{}] = Rational(1);
  for (const auto& [exps, value] : integrals_) {
    if (exps.size() != generators_.size()) {
      throw InputError("integral entry has wrong number of exponents");
    }
    if (index_of(exps) == npos) {
      throw InputError("integral entry " + format_monomial(exps) + " vanishes in the ring");
    }
    if (2 * std::accumulate(exps.begin(), exps.end(), 0) != top_degree_) {
      throw InputError("integral entry " + format_monomial(exps) + " is not in top degree " +
                       std::to_string(top_degree_));
    }
  }
}

std::shared_ptr<const RingPresentation> RingPresentation::point() {
  static const auto ring = std::make_shared<const RingPresentation>(
      std::vector<Generator>{}, 0, std::map<Exponents, Rational>{{Exponents{}, Rational(1)}});
  return ring;
}

std::shared_ptr<const RingPresentation> RingPresentation::projective_line(std::string name) {
  return std::make_shared<const RingPresentation>(
      std::vector<Generator>{{std::move(name), 2}}, 2,
      std::map<Exponents, Rational>{{Exponents{1}, Rational(1)}});
}

std::size_t RingPresentation::index_of(const Exponents& e) const {
  if (e.size() != generators_.size()) return npos;
  std::size_t index = 0;
  std::size_t stride = 1;
  for (std::size_t g = 0; g < e.size(); ++g) {
    if (e[g] < 0 || e[g] >= generators_[g].order) return npos;
    index += stride * static_cast<std::size_t>(e[g]);
    stride *= static_cast<std::size_t>(generators_[g].order);
  }
  return index;
}

Exponents RingPresentation::parse_monomial(std::string_view text) const {
  Exponents e(generators_.size(), 0);
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw InputError("empty monomial");
  if (s == "1") return e;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t star = s.find('*', pos);
    const std::string factor = s.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
    const std::size_t caret = factor.find('^');
    const std::string name = factor.substr(0, caret);
    int power = 1;
    if (caret != std::string::npos) {
      const std::string p = factor.substr(caret + 1);
      if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos) {
        throw InputError("bad exponent in monomial '" + std::string(text) + "'");
      }
      power = std::stoi(p);
    }
    std::size_t g = 0;
    while (g < generators_.size() && generators_[g].name != name) ++g;
    if (g == generators_.size()) {
      throw InputError("unknown generator '" + name + "' in monomial '" + std::string(text) + "'");
    }
    e[g] += power;
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return e;
}

std::string RingPresentation::format_monomial(const Exponents& e) const {
  std::string out;
  for (std::size_t g = 0; g < e.size() && g < generators_.size(); ++g) {
    if (e[g] == 0) continue;
    if (!out.empty()) out += "*";
    out += generators_[g].name;
    if (e[g] > 1) out += "^" + std::to_string(e[g]);
  }
  return out.empty() ? "1" : out;
}

CohomologyClass::CohomologyClass(PresentationPtr ring)
    : ring_(std::move(ring)), coeffs_(ring_->dimension()) {}

CohomologyClass::CohomologyClass(PresentationPtr ring, const ExactScalar& constant)
    : CohomologyClass(std::move(ring)) {
  coeffs_[0] = constant;
}

CohomologyClass CohomologyClass::monomial(PresentationPtr ring, const Exponents& e,
                                          const ExactScalar& coefficient) {
  CohomologyClass out(std::move(ring));
  out.set_coefficient(e, coefficient);
  return out;
}

CohomologyClass CohomologyClass::from_terms(PresentationPtr ring,
                                            const std::map<std::string, Rational>& terms) {
  CohomologyClass out(ring);
  for (const auto& [mono, value] : terms) {
    const Exponents e = ring->parse_monomial(mono);
    const std::size_t idx = ring->index_of(e);
    if (idx == RingPresentation::npos) {
      throw InputError("monomial '" + mono + "' exceeds a nilpotency order");
    }
    out.coeffs_[idx] += ExactScalar(value);
  }
  return out;
}

ExactScalar CohomologyClass::coefficient(const Exponents& e) const {
  const std::size_t idx = ring_->index_of(e);
  return idx == RingPresentation::npos ? ExactScalar() : coeffs_[idx];
}

void CohomologyClass::set_coefficient(const Exponents& e, const ExactScalar& value) {
  const std::size_t idx = ring_->index_of(e);
  if (idx == RingPresentation::npos) {
    throw InputError("monomial " + ring_->format_monomial(e) + " is not in the ring basis");
  }
  coeffs_[idx] = value;
}

bool CohomologyClass::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::map<std::string, Rational> CohomologyClass::rational_terms() const {
  std::map<std::string, Rational> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) out[ring_->format_monomial(ring_->monomial(i))] = coeffs_[i].rational_part();
  }
  return out;
}

std::string CohomologyClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << coeffs_[i].to_string() << ")";
    if (i != 0) os << "*" << ring_->format_monomial(ring_->monomial(i));
    first = false;
  }
  return first ? "0" : os.str();
}

void CohomologyClass::require_same_ring(const CohomologyClass& other) const {
  if (ring_ == other.ring_) return;
  if (!ring_ || !other.ring_ || !(*ring_ == *other.ring_)) {
    throw PresentationMismatch("cohomology classes live in different ring presentations");
  }
}

CohomologyClass CohomologyClass::operator-() const {
  CohomologyClass out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CohomologyClass& CohomologyClass::operator+=(const CohomologyClass& rhs) {
  require_same_ring(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CohomologyClass& CohomologyClass::operator-=(const CohomologyClass& rhs) {
  require_same_ring(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CohomologyClass& CohomologyClass::operator*=(const CohomologyClass& rhs) {
  require_same_ring(rhs);
  const std::size_t n = coeffs_.size();
  std::vector<ExactScalar> out(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (coeffs_[a].is_zero()) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (rhs.coeffs_[b].is_zero()) continue;
      const std::size_t c = ring_->product_index(a, b);
      if (c != RingPresentation::npos) out[c] += coeffs_[a] * rhs.coeffs_[b];
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

CohomologyClass& CohomologyClass::operator*=(const ExactScalar& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

bool operator==(const CohomologyClass& a, const CohomologyClass& b) {
  if (a.ring_ != b.ring_ && !(a.ring_ && b.ring_ && *a.ring_ == *b.ring_)) return false;
  return a.coeffs_ == b.coeffs_;
}

CohomologyClass ring_mul(const CohomologyClass& a, const CohomologyClass& b) { return a * b; }

CohomologyClass evaluate_power_series(const std::vector<Rational>& series, const CohomologyClass& a) {
  if (!a.is_nilpotent()) throw InputError("power series argument must have zero constant term");
  CohomologyClass result(a.ring());
  CohomologyClass power(a.ring(), ExactScalar(1));
  const int bound = a.ring()->nilpotency_bound();
  for (std::size_t n = 0; n < series.size() && static_cast<int>(n) <= bound; ++n) {
    if (!series[n].is_zero()) result += power * ExactScalar(series[n]);
    power *= a;
    if (power.is_zero()) break;
  }
  return result;
}

CohomologyClass exp_class(const CohomologyClass& a) {
  if (!a.is_nilpotent()) throw InputError("exp_class needs a nilpotent class");
  std::vector<Rational> series;
  for (int n = 0; n <= a.ring()->nilpotency_bound(); ++n) {
    series.push_back(Rational(1) / factorial(static_cast<unsigned>(n)));
  }
  return evaluate_power_series(series, a);
}

std::vector<Rational> todd_coefficients(std::size_t count) {
  // (1 - e^{-y})/y = sum_n (-1)^n y^n/(n+1)!; its reciprocal by long division.
  static std::mutex mutex;
  static std::vector<Rational> cache;
  std::lock_guard<std::mutex> lock(mutex);
  if (cache.size() < count) {
    std::vector<Rational> g(count);
    for (std::size_t n = 0; n < count; ++n) {
      g[n] = Rational(n % 2 == 0 ? 1 : -1) / factorial(static_cast<unsigned>(n + 1));
    }
    std::vector<Rational> b(count);
    for (std::size_t n = 0; n < count; ++n) {
      Rational acc = n == 0 ? Rational(1) : Rational(0);
      for (std::size_t k = 1; k <= n; ++k) acc -= g[k] * b[n - k];
      b[n] = acc;  // g[0] == 1
    }
    cache = std::move(b);
  }
  return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(count)};
}

CohomologyClass todd_series(const CohomologyClass& a, int order) {
  if (!a.is_nilpotent()) throw InputError("todd_series needs a nilpotent class");
  const int terms = std::min(order, a.ring()->nilpotency_bound()) + 1;
  return evaluate_power_series(todd_coefficients(static_cast<std::size_t>(std::max(terms, 1))), a);
}

CohomologyClass todd_inverse_factor(const CohomologyClass& a, int order) {
  if (!a.is_nilpotent()) throw InputError("todd_inverse_factor needs a nilpotent class");
  const int terms = std::min(order, a.ring()->nilpotency_bound()) + 1;
  std::vector<Rational> g;
  for (int n = 0; n < std::max(terms, 1); ++n) {
    g.push_back(Rational(n % 2 == 0 ? 1 : -1) / factorial(static_cast<unsigned>(n + 1)));
  }
  return evaluate_power_series(g, a);
}

ExactScalar integrate(const CohomologyClass& a) {
  ExactScalar total;
  for (const auto& [exps, value] : a.ring()->integrals()) {
    const ExactScalar& c = a.coefficient(a.ring()->index_of(exps));
    if (!c.is_zero()) total += c * ExactScalar(value);
  }
  return total;
}

}  // namespace rrloc

namespace rrloc {

CohomologyClass invert_class(const CohomologyClass& a) {
  const ExactScalar a0 = a.constant_term();
  if (a0.is_zero()) throw DivisionByZero("class with zero constant term is not invertible");
  const ExactScalar inv0 = a0.inverse();
  CohomologyClass n = a - CohomologyClass(a.ring(), a0);
  n *= -inv0;
  CohomologyClass result(a.ring());
  CohomologyClass power(a.ring(), ExactScalar(1));
  for (int k = 0; k <= a.ring()->nilpotency_bound(); ++k) {
    result += power;
    power *= n;
    if (power.is_zero()) break;
  }
  return result * inv0;
}

}  // namespace rrloc
