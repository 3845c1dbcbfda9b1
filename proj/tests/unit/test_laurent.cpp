#include <gtest/gtest.h>

#include "rrloc/errors.hpp"
#include "rrloc/laurent.hpp"

using namespace rrloc;

namespace {

PresentationPtr pt() { return RingPresentation::point(); }

CohomologyClass scalar(const Rational& r) { return CohomologyClass(pt(), ExactScalar(r)); }

RingSeries exact(const Chart& c, int valuation, std::vector<Rational> coeffs) {
  std::vector<CohomologyClass> cs;
  for (const auto& r : coeffs) cs.push_back(scalar(r));
  return RingSeries(c, pt(), valuation, cs, RingSeries::kExact);
}

ExactScalar coeff(const RingSeries& s, int e) { return s.coefficient(e).constant_term(); }

}  // namespace

TEST(Chart, Labels) {
  EXPECT_EQ(Chart::zero().to_string(), "0");
  EXPECT_EQ(Chart::infinity().to_string(), "inf");
  EXPECT_EQ(Chart::root(4, 0).to_string(), "1");
  EXPECT_EQ(Chart::root(4, 2).to_string(), "-1");
  EXPECT_EQ(Chart::root(12, 4).to_string(), "zeta_3");
  EXPECT_EQ(Chart::root(12, 5).to_string(), "zeta_12^5");
  EXPECT_EQ(Chart::root(4, 2), Chart::root(2, 1));
  EXPECT_EQ(Chart::root(12, 8).order(), 3);
  EXPECT_EQ(Chart::root(4, -1), Chart::root(4, 3));
}

TEST(Lefschetz, GeometricAtInfinity) {
  const auto s = expand_lefschetz_factor(1, CohomologyClass(pt()), Chart::infinity(), 5);
  EXPECT_EQ(s.valuation(), 0);
  for (int e = 0; e < 5; ++e) EXPECT_EQ(coeff(s, e), ExactScalar(1));
  EXPECT_THROW((void)s.coefficient(5), InsufficientTruncation);
}

TEST(Lefschetz, NegativeWeightAtInfinity) {
  // 1/(1 - w^-2) = -w^2 - w^4 - ...
  const auto s = expand_lefschetz_factor(-2, CohomologyClass(pt()), Chart::infinity(), 7);
  EXPECT_EQ(coeff(s, 0), ExactScalar(0));
  EXPECT_EQ(coeff(s, 1), ExactScalar(0));
  EXPECT_EQ(coeff(s, 2), ExactScalar(-1));
  EXPECT_EQ(coeff(s, 3), ExactScalar(0));
  EXPECT_EQ(coeff(s, 6), ExactScalar(-1));
}

TEST(Lefschetz, PoleAtOne) {
  // 1/(1 - e^-u) = u^-1 (1 + u/2 + u^2/12 + ...)
  const auto s = expand_lefschetz_factor(1, CohomologyClass(pt()), Chart::root(4, 0), 3);
  EXPECT_EQ(s.valuation(), -1);
  EXPECT_EQ(coeff(s, -1), ExactScalar(1));
  EXPECT_EQ(coeff(s, 0), ExactScalar(Rational(1, 2)));
  EXPECT_EQ(coeff(s, 1), ExactScalar(Rational(1, 12)));
  EXPECT_EQ(coeff(s, 2), ExactScalar(0));
}

TEST(Lefschetz, PoleAtMinusOne) {
  // beta = 2 at t = -e^u: 1/(1 - e^-2u) = (2u)^-1 (1 + u + u^2/3 + ...)
  const auto s = expand_lefschetz_factor(2, CohomologyClass(pt()), Chart::root(4, 2), 2);
  EXPECT_EQ(coeff(s, -1), ExactScalar(Rational(1, 2)));
  EXPECT_EQ(coeff(s, 0), ExactScalar(Rational(1, 2)));
  EXPECT_EQ(coeff(s, 1), ExactScalar(Rational(1, 6)));
}

TEST(Lefschetz, RegularAtRoot) {
  // beta = 1 at t = -1: leading coefficient 1/(1 - (-1)^-1) = 1/2
  const auto s = expand_lefschetz_factor(1, CohomologyClass(pt()), Chart::root(4, 2), 2);
  EXPECT_EQ(s.valuation(), 0);
  EXPECT_EQ(coeff(s, 0), ExactScalar(Rational(1, 2)));
  // at t = i: 1/(1 - i^-1) = 1/(1 + i) = (1 - i)/2
  const auto r = expand_lefschetz_factor(1, CohomologyClass(pt()), Chart::root(4, 1), 1);
  EXPECT_EQ(coeff(r, 0), (ExactScalar(1) - root_of_unity(4, 1)) * ExactScalar(Rational(1, 2)));
}

TEST(Lefschetz, ZeroWeightRejected) {
  EXPECT_THROW(expand_lefschetz_factor(0, CohomologyClass(pt()), Chart::infinity(), 3), InputError);
}

TEST(Residue, SpecExamples) {
  EXPECT_EQ(residue(exact(Chart::root(4, 0), -1, {1, 3, 1})).constant_term(), ExactScalar(1));
  EXPECT_EQ(residue(exact(Chart::root(4, 0), 0, {5, 1})).constant_term(), ExactScalar(0));
  // f = t^-1 + 1 + t at infinity: f(1/w) = w + 1 + 1/w, residue -1
  const auto f = laurent_polynomial_in_chart({{-1, Rational(1)}, {0, Rational(1)}, {1, Rational(1)}},
                                             Chart::infinity(), pt(), 1);
  EXPECT_EQ(residue(f).constant_term(), ExactScalar(-1));
}

TEST(Residue, TruncatedAway) {
  const RingSeries s(Chart::root(4, 0), pt(), -3, {scalar(1)}, -2);
  EXPECT_THROW((void)residue(s), InsufficientTruncation);
}

TEST(SeriesProduct, SpecExamples) {
  const Chart c = Chart::root(4, 0);
  const auto p1 = exact(c, -1, {1}) * exact(c, 1, {1});
  EXPECT_EQ(coeff(p1, 0), ExactScalar(1));
  const Chart w = Chart::infinity();
  const auto p2 = RingSeries(w, pt(), 0, {scalar(1), scalar(1), scalar(0)}, 3) * exact(w, 0, {1, -1});
  EXPECT_EQ(coeff(p2, 0), ExactScalar(1));
  EXPECT_EQ(coeff(p2, 1), ExactScalar(0));
  EXPECT_EQ(coeff(p2, 2), ExactScalar(-1));
  const auto half = exact(c, -1, {1, Rational(1, 2)});
  const auto sq = half * half;
  EXPECT_EQ(sq.valuation(), -2);
  EXPECT_EQ(coeff(sq, -2), ExactScalar(1));
  EXPECT_EQ(coeff(sq, -1), ExactScalar(1));
  EXPECT_EQ(coeff(sq, 0), ExactScalar(Rational(1, 4)));
}

TEST(SeriesProduct, ChartMismatch) {
  EXPECT_THROW(exact(Chart::zero(), 0, {1}) * exact(Chart::infinity(), 0, {1}), ComputationError);
}

TEST(SeriesProduct, PrecisionIsWeakest) {
  const Chart c = Chart::zero();
  const RingSeries a(c, pt(), 2, {scalar(1)}, 5);
  const RingSeries b(c, pt(), -1, {scalar(1), scalar(1)}, 4);
  EXPECT_EQ((a * b).precision(), std::min(2 + 4, -1 + 5));
}

TEST(Reciprocal, GeometricSeries) {
  const auto s = exact(Chart::zero(), 0, {1, -1}).reciprocal(6);
  for (int e = 0; e < 6; ++e) EXPECT_EQ(coeff(s, e), ExactScalar(1));
  EXPECT_THROW((void)exact(Chart::zero(), 0, {0}).reciprocal(3), DivisionByZero);
}

namespace {

// 1 - t^-beta e^-c written in the chart.
RingSeries denominator(int beta, const CohomologyClass& c, const Chart& chart, int precision) {
  const auto& ring = c.ring();
  RingSeries one = RingSeries::monomial(chart, CohomologyClass(ring, ExactScalar(1)));
  RingSeries t = laurent_polynomial_in_chart({{-beta, Rational(-1)}}, chart, ring, precision);
  return one + t * exp_class(-c);
}

}  // namespace

class FactorInverse : public ::testing::TestWithParam<std::tuple<int, int>> {};

TEST_P(FactorInverse, TimesDenominatorIsOne) {
  const auto [beta, chart_index] = GetParam();
  const auto ring = RingPresentation::projective_line("x");
  const CohomologyClass c = CohomologyClass::monomial(ring, {1}) * ExactScalar(3);
  const std::vector<Chart> charts = {Chart::zero(), Chart::infinity(), Chart::root(12, 0), Chart::root(12, 6),
                                     Chart::root(12, 4), Chart::root(12, 3), Chart::root(12, 1)};
  const Chart chart = charts[static_cast<std::size_t>(chart_index)];
  const int precision = 6;
  const auto f = expand_lefschetz_factor(beta, c, chart, precision);
  const auto d = denominator(beta, c, chart, precision + 4);
  const auto prod = f * d;
  for (int e = std::min(prod.valuation(), 0); e < prod.precision(); ++e) {
    const CohomologyClass expected = e == 0 ? CohomologyClass(ring, ExactScalar(1)) : CohomologyClass(ring);
    EXPECT_EQ(prod.coefficient(e), expected) << "beta " << beta << " chart " << chart.to_string() << " e " << e;
  }
  EXPECT_GE(prod.precision(), 1);
}

INSTANTIATE_TEST_SUITE_P(AllCharts, FactorInverse,
                         ::testing::Combine(::testing::Values(-3, -2, -1, 1, 2, 3, 4), ::testing::Range(0, 7)));

TEST(Truncation, MonotoneRefinement) {
  const auto ring = RingPresentation::projective_line("x");
  const CohomologyClass c = CohomologyClass::monomial(ring, {1});
  for (const Chart& chart : {Chart::infinity(), Chart::root(4, 0), Chart::root(4, 2), Chart::root(4, 1)}) {
    for (int beta : {-2, 1, 2}) {
      const auto lo = expand_lefschetz_factor(beta, c, chart, 3);
      const auto hi = expand_lefschetz_factor(beta, c, chart, 8);
      for (int e = std::min(lo.valuation(), 0) - 2; e < lo.precision(); ++e) {
        EXPECT_EQ(lo.coefficient(e), hi.coefficient(e)) << chart.to_string() << " " << beta << " " << e;
      }
    }
  }
}

TEST(Nilpotency, Index) {
  auto r = std::make_shared<const RingPresentation>(std::vector<Generator>{{"x", 4}}, 6,
                                                    std::map<Exponents, Rational>{{{3}, Rational(1)}});
  EXPECT_EQ(nilpotency_index(CohomologyClass::monomial(r, {1})), 3);
  EXPECT_EQ(nilpotency_index(CohomologyClass::monomial(r, {2})), 1);
  EXPECT_EQ(nilpotency_index(CohomologyClass(r)), 0);
}
