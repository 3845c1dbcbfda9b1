#include "rrloc/laurent.hpp"

#include <algorithm>
#include <numeric>

#include "rrloc/errors.hpp"

namespace rrloc {

namespace {

ExactScalar simplify(const ExactScalar& x) {
  return x.conductor() != 1 && x.is_rational() ? ExactScalar(x.rational_part()) : x;
}

long clamp_precision(long value) {
  return std::min<long>(value, RingSeries::kExact);
}

// (beta)^m / m! style helper: x^n/n! for n < count.
std::vector<Rational> exp_coefficients(const Rational& x, int count) {
  std::vector<Rational> out;
  Rational term(1);
  for (int n = 0; n < count; ++n) {
    out.push_back(term);
    term = term * x / Rational(n + 1);
  }
  return out;
}

Rational binomial(int n, int k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

}  // namespace

Chart Chart::root(int conductor, long exponent) {
  if (conductor < 1) throw ComputationError("root chart needs a positive conductor");
  long k = exponent % conductor;
  if (k < 0) k += conductor;
  return Chart(Kind::Root, conductor, static_cast<int>(k));
}

int Chart::order() const {
  if (kind_ != Kind::Root) return 0;
  return conductor_ / std::gcd(conductor_, exponent_ == 0 ? conductor_ : exponent_);
}

ExactScalar Chart::point() const { return point_power(1); }

ExactScalar Chart::point_power(long m) const {
  if (kind_ != Kind::Root) throw ComputationError("chart at 0 or infinity has no root of unity");
  return simplify(root_of_unity(conductor_, static_cast<long>(exponent_) * m));
}

std::string Chart::to_string() const {
  switch (kind_) {
    case Kind::Zero: return "0";
    case Kind::Infinity: return "inf";
    case Kind::Root: break;
  }
  if (exponent_ == 0) return "1";
  const int g = std::gcd(conductor_, exponent_);
  const int n = conductor_ / g;
  const int k = exponent_ / g;
  if (n == 2) return "-1";
  return "zeta_" + std::to_string(n) + (k == 1 ? "" : "^" + std::to_string(k));
}

bool operator==(const Chart& a, const Chart& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ != Chart::Kind::Root) return true;
  return static_cast<long>(a.exponent_) * b.conductor_ == static_cast<long>(b.exponent_) * a.conductor_;
}

RingSeries::RingSeries(Chart chart, PresentationPtr ring, int valuation,
                       std::vector<CohomologyClass> coefficients, int precision)
    : chart_(chart), ring_(std::move(ring)), valuation_(valuation), coeffs_(std::move(coefficients)),
      precision_(precision) {
  if (precision_ != kExact && top() >= precision_) {
    coeffs_.resize(static_cast<std::size_t>(std::max(0, precision_ - valuation_)));
  }
}

RingSeries RingSeries::monomial(Chart chart, const CohomologyClass& c, int exponent) {
  return RingSeries(chart, c.ring(), exponent, {c}, kExact);
}

RingSeries RingSeries::zero(Chart chart, PresentationPtr ring) {
  return RingSeries(chart, std::move(ring), 0, {}, kExact);
}

CohomologyClass RingSeries::coefficient(int e) const {
  if (e >= precision_) {
    throw InsufficientTruncation("coefficient of exponent " + std::to_string(e) +
                                 " is beyond the series precision " + std::to_string(precision_) +
                                 " (chart " + chart_.to_string() + ")");
  }
  if (e < valuation_ || e > top()) return CohomologyClass(ring_);
  return coeffs_[static_cast<std::size_t>(e - valuation_)];
}

RingSeries RingSeries::normalized() const {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  std::vector<CohomologyClass> rest(coeffs_.begin() + static_cast<std::ptrdiff_t>(lead), coeffs_.end());
  while (!rest.empty() && rest.back().is_zero() && is_exact()) rest.pop_back();
  const int v = rest.empty() && !is_exact() ? precision_ : valuation_ + static_cast<int>(lead);
  return RingSeries(chart_, ring_, rest.empty() && is_exact() ? 0 : v, std::move(rest), precision_);
}

RingSeries RingSeries::truncated(int precision) const {
  RingSeries out = *this;
  out.precision_ = std::min(precision_, precision);
  if (out.top() >= out.precision_) {
    out.coeffs_.resize(static_cast<std::size_t>(std::max(0, out.precision_ - out.valuation_)));
  }
  return out;
}

RingSeries RingSeries::reciprocal(int max_precision) const {
  const RingSeries a = normalized();
  if (a.coeffs_.empty()) throw DivisionByZero("reciprocal of a series with no known nonzero term");
  const CohomologyClass& lead = a.coeffs_.front();
  if (lead.constant_term().is_zero()) {
    throw DivisionByZero("leading coefficient of the series is nilpotent; not invertible");
  }
  const int v = a.valuation_;
  const long natural = a.is_exact() ? kExact : static_cast<long>(a.precision_) - 2L * v;
  const int prec = static_cast<int>(std::min<long>(natural, max_precision));
  const int terms = std::max(0, prec + v);
  const CohomologyClass inv_lead = invert_class(lead);
  std::vector<CohomologyClass> b;
  b.reserve(static_cast<std::size_t>(terms));
  for (int m = 0; m < terms; ++m) {
    if (m == 0) {
      b.push_back(inv_lead);
      continue;
    }
    CohomologyClass acc(ring_);
    for (int j = 1; j <= m && j < static_cast<int>(a.coeffs_.size()); ++j) {
      if (a.coeffs_[static_cast<std::size_t>(j)].is_zero()) continue;
      acc += a.coeffs_[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(m - j)];
    }
    b.push_back(-(inv_lead * acc));
  }
  return RingSeries(chart_, ring_, -v, std::move(b), prec);
}

void RingSeries::require_compatible(const RingSeries& other) const {
  if (!(chart_ == other.chart_)) {
    throw ComputationError("series in charts " + chart_.to_string() + " and " + other.chart_.to_string() +
                           " cannot be combined");
  }
  if (ring_ != other.ring_ && !(*ring_ == *other.ring_)) {
    throw PresentationMismatch("series over different ring presentations");
  }
}

RingSeries& RingSeries::operator+=(const RingSeries& rhs) {
  require_compatible(rhs);
  const int prec = std::min(precision_, rhs.precision_);
  int val = std::min(valuation_, rhs.valuation_);
  if (coeffs_.empty()) val = rhs.valuation_;
  if (rhs.coeffs_.empty()) val = coeffs_.empty() ? std::min(valuation_, rhs.valuation_) : valuation_;
  int last = std::max(top(), rhs.top());
  if (prec != kExact) last = std::min(last, prec - 1);
  std::vector<CohomologyClass> out;
  for (int e = val; e <= last; ++e) {
    CohomologyClass c(ring_);
    if (e >= valuation_ && e <= top()) c += coeffs_[static_cast<std::size_t>(e - valuation_)];
    if (e >= rhs.valuation_ && e <= rhs.top()) c += rhs.coeffs_[static_cast<std::size_t>(e - rhs.valuation_)];
    out.push_back(std::move(c));
  }
  valuation_ = val;
  coeffs_ = std::move(out);
  precision_ = prec;
  return *this;
}

RingSeries& RingSeries::operator*=(const ExactScalar& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

RingSeries& RingSeries::operator*=(const CohomologyClass& k) {
  for (auto& c : coeffs_) c *= k;
  return *this;
}

RingSeries series_product(const RingSeries& a, const RingSeries& b) {
  a.require_compatible(b);
  const int val = a.valuation_ + b.valuation_;
  long prec = RingSeries::kExact;
  if (!a.is_exact()) prec = std::min<long>(prec, static_cast<long>(a.precision_) + b.valuation_);
  if (!b.is_exact()) prec = std::min<long>(prec, static_cast<long>(b.precision_) + a.valuation_);
  prec = clamp_precision(prec);
  long last = static_cast<long>(a.top()) + b.top();
  if (prec != RingSeries::kExact) last = std::min(last, prec - 1);
  std::vector<CohomologyClass> out;
  for (long e = val; e <= last; ++e) {
    CohomologyClass c(a.ring_);
    for (int i = a.valuation_; i <= a.top(); ++i) {
      const long j = e - i;
      if (j < b.valuation_ || j > b.top()) continue;
      const auto& x = a.coeffs_[static_cast<std::size_t>(i - a.valuation_)];
      const auto& y = b.coeffs_[static_cast<std::size_t>(j - b.valuation_)];
      if (x.is_zero() || y.is_zero()) continue;
      c += x * y;
    }
    out.push_back(std::move(c));
  }
  return RingSeries(a.chart_, a.ring_, val, std::move(out), static_cast<int>(prec));
}

int nilpotency_index(const CohomologyClass& c) {
  if (c.is_zero()) return 0;
  if (!c.is_nilpotent()) throw ComputationError("nilpotency index of a non-nilpotent class");
  int k = 0;
  CohomologyClass power = c;
  while (!power.is_zero()) {
    ++k;
    power *= c;
  }
  return k;
}

namespace {

bool is_singular(int beta, const Chart& chart) {
  return (static_cast<long>(chart.exponent()) * beta) % chart.conductor() == 0;
}

// sum over n of sign * v^{n*step} * base^n, starting at n = first, up to the precision.
RingSeries geometric(const Chart& chart, const CohomologyClass& base, int step, int first, int sign,
                     int precision) {
  const auto& ring = base.ring();
  const int valuation = first * step;
  std::vector<CohomologyClass> coeffs;
  CohomologyClass power(ring, ExactScalar(1));
  for (int n = 0; n < first; ++n) power *= base;
  for (int e = valuation; e < precision; ++e) {
    if ((e - valuation) % step == 0) {
      coeffs.push_back(power * ExactScalar(sign));
      power *= base;
    } else {
      coeffs.emplace_back(ring);
    }
  }
  return RingSeries(chart, ring, valuation, std::move(coeffs), std::max(precision, valuation));
}

}  // namespace

int lefschetz_factor_valuation(int beta, const CohomologyClass& c, const Chart& chart) {
  if (beta == 0) throw InputError("zero weight in a Lefschetz factor");
  switch (chart.kind()) {
    case Chart::Kind::Infinity: return beta > 0 ? 0 : -beta;
    case Chart::Kind::Zero: return beta < 0 ? 0 : beta;
    case Chart::Kind::Root: return is_singular(beta, chart) ? -(nilpotency_index(c) + 1) : 0;
  }
  return 0;
}

RingSeries expand_lefschetz_factor(int beta, const CohomologyClass& c, const Chart& chart, int precision) {
  if (beta == 0) throw InputError("zero weight in a Lefschetz factor");
  if (!c.is_nilpotent()) throw InputError("normal Chern class must be nilpotent");
  const auto& ring = c.ring();
  const CohomologyClass e_minus = exp_class(-c);
  const CohomologyClass e_plus = exp_class(c);

  if (chart.kind() != Chart::Kind::Root) {
    // Chart variable v with t^{-beta} = v^{s*beta}, s = +1 at infinity and -1 at zero.
    const int exponent = chart.kind() == Chart::Kind::Infinity ? beta : -beta;
    if (exponent > 0) return geometric(chart, e_minus, exponent, 0, 1, precision);
    // 1/(1 - v^{-m} e^{-c}) = -v^m e^c / (1 - v^m e^c)
    return geometric(chart, e_plus, -exponent, 1, -1, precision);
  }

  if (!is_singular(beta, chart)) {
    // D(u) = 1 - zeta^{-beta} e^{-c} e^{-beta u}, invertible at u = 0.
    const ExactScalar z = chart.point_power(-beta);
    const auto ex = exp_coefficients(Rational(-beta), std::max(precision, 1));
    std::vector<CohomologyClass> d;
    for (int n = 0; n < std::max(precision, 1); ++n) {
      CohomologyClass term = e_minus * (z * ExactScalar(ex[static_cast<std::size_t>(n)]));
      CohomologyClass coeff = -term;
      if (n == 0) coeff += CohomologyClass(ring, ExactScalar(1));
      d.push_back(std::move(coeff));
    }
    return RingSeries(chart, ring, 0, std::move(d), std::max(precision, 1)).reciprocal(precision);
  }

  // zeta^beta = 1: 1/(1 - e^{-(beta u + c)}) = (beta u + c)^{-1} Td(beta u + c).
  const int k = nilpotency_index(c);
  std::vector<CohomologyClass> inv_linear;  // exponents -(k+1) .. -1
  {
    std::vector<CohomologyClass> c_powers{CohomologyClass(ring, ExactScalar(1))};
    for (int j = 1; j <= k; ++j) c_powers.push_back(c_powers.back() * c);
    for (int e = -(k + 1); e <= -1; ++e) {
      const int j = -e - 1;  // term (-c)^j beta^{-j-1} u^{-j-1}
      Rational scale = Rational(1);
      for (int i = 0; i <= j; ++i) scale /= Rational(beta);
      if (j % 2 == 1) scale = -scale;
      inv_linear.push_back(c_powers[static_cast<std::size_t>(j)] * ExactScalar(scale));
    }
  }
  const RingSeries linear_inverse(chart, ring, -(k + 1), std::move(inv_linear), RingSeries::kExact);

  // Td(beta u + c) = sum_m u^m beta^m sum_j b_{m+j} C(m+j, j) c^j
  const int td_precision = std::max(precision + k + 1, 0);
  const auto b = todd_coefficients(static_cast<std::size_t>(td_precision + k + 1));
  std::vector<CohomologyClass> td;
  CohomologyClass cj_base(ring, ExactScalar(1));
  std::vector<CohomologyClass> c_powers{cj_base};
  for (int j = 1; j <= k; ++j) c_powers.push_back(c_powers.back() * c);
  Rational beta_power(1);
  for (int m = 0; m < td_precision; ++m) {
    CohomologyClass coeff(ring);
    for (int j = 0; j <= k; ++j) {
      const Rational s = b[static_cast<std::size_t>(m + j)] * binomial(m + j, j);
      if (!s.is_zero()) coeff += c_powers[static_cast<std::size_t>(j)] * ExactScalar(s * beta_power);
    }
    td.push_back(std::move(coeff));
    beta_power *= Rational(beta);
  }
  const RingSeries todd(chart, ring, 0, std::move(td), td_precision);
  return series_product(linear_inverse, todd).truncated(precision);
}

RingSeries laurent_polynomial_in_chart(const std::map<long, Rational>& terms, const Chart& chart,
                                       const PresentationPtr& ring, int precision) {
  RingSeries out = RingSeries::zero(chart, ring);
  if (chart.kind() != Chart::Kind::Root) {
    for (const auto& [m, c] : terms) {
      const long e = chart.kind() == Chart::Kind::Infinity ? -m : m;
      out += RingSeries::monomial(chart, CohomologyClass(ring, ExactScalar(c)), static_cast<int>(e));
    }
    return out;
  }
  // t^m = zeta^m e^{m u}
  const int count = std::max(precision, 0);
  std::vector<CohomologyClass> coeffs(static_cast<std::size_t>(count), CohomologyClass(ring));
  for (const auto& [m, c] : terms) {
    const ExactScalar z = chart.point_power(m) * ExactScalar(c);
    const auto ex = exp_coefficients(Rational(m), count);
    for (int n = 0; n < count; ++n) {
      coeffs[static_cast<std::size_t>(n)] += CohomologyClass(ring, z * ExactScalar(ex[static_cast<std::size_t>(n)]));
    }
  }
  return RingSeries(chart, ring, 0, std::move(coeffs), count);
}

int residue_precision(const Chart& chart) { return chart.kind() == Chart::Kind::Root ? 0 : 1; }

CohomologyClass residue(const RingSeries& s) {
  switch (s.chart().kind()) {
    case Chart::Kind::Root: return s.coefficient(-1);
    case Chart::Kind::Zero: return s.coefficient(0);
    case Chart::Kind::Infinity: return -s.coefficient(0);
  }
  return s.coefficient(0);
}

}  // namespace rrloc
