#include "rrloc/oracle.hpp"

#include <cstdlib>
#include <sstream>

#include "rrloc/errors.hpp"

namespace rrloc {

namespace {

// Rational algebra Q[x_1..x_r]/(x_g^{m_g}) on a flat mixed-radix index. Kept apart from the
// cohomology module so that the oracle shares nothing with the residue path but Rational.
class DenseAlgebra {
 public:
  explicit DenseAlgebra(const RingPresentation& ring) {
    for (const auto& g : ring.generators()) orders_.push_back(g.order);
    size_ = 1;
    for (int o : orders_) {
      strides_.push_back(size_);
      size_ *= static_cast<std::size_t>(o);
    }
    for (const auto& [e, value] : ring.integrals()) integrals_.emplace_back(flat(e), value);
    if (orders_.empty() && integrals_.empty()) integrals_.emplace_back(0, Rational(1));
  }

  using Element = std::vector<Rational>;

  [[nodiscard]] Element zero() const { return Element(size_); }
  [[nodiscard]] Element one() const {
    Element e = zero();
    e[0] = Rational(1);
    return e;
  }

  [[nodiscard]] Element from_class(const CohomologyClass& c) const {
    Element out = zero();
    const auto& ring = *c.ring();
    for (std::size_t i = 0; i < ring.dimension(); ++i) {
      const auto& v = c.coefficient(i);
      if (!v.is_zero()) out[flat(ring.monomial(i))] = v.rational_part();
    }
    return out;
  }

  [[nodiscard]] Element mul(const Element& a, const Element& b) const {
    Element out = zero();
    for (std::size_t i = 0; i < size_; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < size_; ++j) {
        if (b[j].is_zero()) continue;
        const std::size_t k = combine(i, j);
        if (k != kNone) out[k] += a[i] * b[j];
      }
    }
    return out;
  }

  [[nodiscard]] Element exp(const Element& a) const {
    if (!a[0].is_zero()) throw InputError("exponent class must be nilpotent");
    Element sum = one();
    Element term = one();
    for (int n = 1;; ++n) {
      term = mul(term, a);
      bool zero_term = true;
      for (auto& v : term) {
        v /= Rational(n);
        if (!v.is_zero()) zero_term = false;
      }
      if (zero_term) break;
      for (std::size_t i = 0; i < size_; ++i) sum[i] += term[i];
    }
    return sum;
  }

  [[nodiscard]] Rational integrate(const Element& a) const {
    Rational out(0);
    for (const auto& [index, value] : integrals_) out += a[index] * value;
    return out;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  [[nodiscard]] std::size_t flat(const Exponents& e) const {
    std::size_t idx = 0;
    for (std::size_t g = 0; g < orders_.size(); ++g) idx += strides_[g] * static_cast<std::size_t>(e[g]);
    return idx;
  }

  [[nodiscard]] std::size_t combine(std::size_t a, std::size_t b) const {
    std::size_t idx = 0;
    for (std::size_t g = 0; g < orders_.size(); ++g) {
      const std::size_t o = static_cast<std::size_t>(orders_[g]);
      const std::size_t d = (a / strides_[g]) % o + (b / strides_[g]) % o;
      if (d >= o) return kNone;
      idx += strides_[g] * d;
    }
    return idx;
  }

  std::vector<int> orders_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
  std::vector<std::pair<std::size_t, Rational>> integrals_;
};

// Truncated power series in w with algebra coefficients, exponents [low, high].
struct WSeries {
  long low;
  std::vector<DenseAlgebra::Element> coeffs;
};

WSeries multiply(const DenseAlgebra& alg, const WSeries& a, const WSeries& b, long high) {
  WSeries out{a.low + b.low, {}};
  const long count = high - out.low + 1;
  if (count <= 0) return out;
  out.coeffs.assign(static_cast<std::size_t>(count), alg.zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      const long e = a.low + static_cast<long>(i) + b.low + static_cast<long>(j);
      if (e > high) break;
      auto prod = alg.mul(a.coeffs[i], b.coeffs[j]);
      auto& slot = out.coeffs[static_cast<std::size_t>(e - out.low)];
      for (std::size_t k = 0; k < prod.size(); ++k) slot[k] += prod[k];
    }
  }
  return out;
}

// 1/(1 - t^-beta e^-c) with t = 1/w, coefficients up to w^high.
WSeries factor_at_infinity(const DenseAlgebra& alg, int beta, const DenseAlgebra::Element& c, long high) {
  DenseAlgebra::Element base = c;
  long step = beta;
  long first = 0;
  Rational sign(1);
  if (beta > 0) {
    for (auto& v : base) v = -v;
  } else {
    step = -beta;
    first = 1;
    sign = Rational(-1);
  }
  const auto ratio = alg.exp(base);
  WSeries out{first * step, {}};
  DenseAlgebra::Element power = alg.one();
  for (long n = 0; n < first; ++n) power = alg.mul(power, ratio);
  for (long e = out.low; e <= high; ++e) {
    if ((e - out.low) % step == 0) {
      auto term = power;
      for (auto& v : term) v *= sign;
      out.coeffs.push_back(std::move(term));
      power = alg.mul(power, ratio);
    } else {
      out.coeffs.push_back(alg.zero());
    }
  }
  return out;
}

}  // namespace

std::int64_t CharacterPolynomial::operator[](long m) const {
  auto it = coefficients.find(m);
  return it == coefficients.end() ? 0 : it->second;
}

std::string CharacterPolynomial::to_string() const {
  if (coefficients.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : coefficients) {
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "t";
    if (m != 1) os << "^" << m;
  }
  return os.str();
}

int automatic_degree_bound(const ProblemInstance& p) {
  long bound = 0;
  for (const auto& f : p.components) {
    const long top = f.ring ? f.ring->top_degree() / 2 : 0;
    long b = std::labs(f.moment);
    for (int w : f.weights) b += std::labs(w) * (1 + top);
    bound = std::max(bound, b);
  }
  return static_cast<int>(bound + 1);
}

CharacterPolynomial character_polynomial(const ProblemInstance& p, std::optional<int> degree_bound) {
  const int automatic = automatic_degree_bound(p);
  const int bound = degree_bound.value_or(automatic);
  if (bound < automatic) {
    throw InputError("degree bound " + std::to_string(bound) + " is below the automatic bound " +
                     std::to_string(automatic));
  }
  const long high = 2L * bound;
  std::map<long, Rational> sum;
  for (const auto& f : p.components) {
    if (!f.ring) throw InputError("component '" + f.name + "' has no cohomology ring");
    const DenseAlgebra alg(*f.ring);
    // t^mu = w^-mu
    WSeries acc{-f.moment, {alg.mul(alg.exp(alg.from_class(f.omega)), alg.from_class(f.todd))}};
    for (std::size_t j = 0; j < f.weights.size(); ++j) {
      if (f.weights[j] == 0) throw InputError("component '" + f.name + "' has a zero weight");
      acc = multiply(alg, acc, factor_at_infinity(alg, f.weights[j], alg.from_class(f.normal_chern[j]), high + std::labs(f.moment)), high);
    }
    for (std::size_t i = 0; i < acc.coeffs.size(); ++i) {
      const long e = acc.low + static_cast<long>(i);
      if (e > high) break;
      sum[-e] += alg.integrate(acc.coeffs[i]);
    }
  }
  CharacterPolynomial out;
  for (const auto& [m, c] : sum) {
    if (c.is_zero()) continue;
    if (-m > bound) {
      throw StabilizationFailure("character expansion does not terminate: coefficient " + c.to_string() +
                                 " at t^" + std::to_string(m) + " lies beyond the degree bound " +
                                 std::to_string(bound) + "; the fixed-point data cannot come from a compact manifold");
    }
    if (!c.is_integer()) {
      throw NonIntegerResult("character coefficient " + c.to_string() + " at t^" + std::to_string(m) +
                             " is not an integer");
    }
    out.coefficients[m] = c.to_int64();
  }
  return out;
}

std::int64_t invariant_multiplicity(const CharacterPolynomial& c, GroupKind group) {
  if (group != GroupKind::U1) {
    for (const auto& [m, v] : c.coefficients) {
      if (c[-m] != v) {
        throw SymmetryViolation("character is not Weyl symmetric: c_" + std::to_string(m) + " = " +
                                std::to_string(v) + " but c_" + std::to_string(-m) + " = " +
                                std::to_string(c[-m]));
      }
    }
  }
  switch (group) {
    case GroupKind::U1: return c[0];
    case GroupKind::SO3: return c[0] - c[1];
    case GroupKind::SU2: return c[0] - c[2];
  }
  return c[0];
}

}  // namespace rrloc
