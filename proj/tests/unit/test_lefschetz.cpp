#include <gtest/gtest.h>

#include "rrloc/errors.hpp"
#include "rrloc/lefschetz.hpp"
#include "rrloc/oracle.hpp"
#include "rrloc/reduction.hpp"

using namespace rrloc;

namespace {

std::vector<ProblemInstance> all_catalog_instances() {
  std::vector<ProblemInstance> out;
  for (const auto& e : catalog_entries()) {
    for (int k = std::max(1, e.min_k); k <= 4; ++k) out.push_back(catalog(e.name, k));
  }
  return out;
}

}  // namespace

// Sign conventions are pinned here: everything else follows from this identity.
TEST(Calibration, ProjectiveLineDegreeTwo) {
  const auto p = catalog("cp1-k", 2);
  const std::map<long, Rational> expected{{-1, Rational(1)}, {0, Rational(1)}, {1, Rational(1)}};
  EXPECT_EQ(character_from_chart(p, Chart::infinity(), 8), expected);
  EXPECT_EQ(character_from_chart(p, Chart::zero(), 8), expected);
  EXPECT_EQ(rr_invariant(p), Rational(1));
  EXPECT_EQ(rr_reduced(p).total, Rational(1));
}

TEST(Weyl, Factors) {
  EXPECT_EQ(WeylFactor::of(GroupKind::U1).terms, (std::map<long, Rational>{{0, Rational(1)}}));
  const auto so3 = WeylFactor::of(GroupKind::SO3);
  EXPECT_EQ(so3.evaluate(ExactScalar(-1)), ExactScalar(2));
  EXPECT_EQ(so3.evaluate(ExactScalar(1)), ExactScalar(0));
  const auto su2 = WeylFactor::of(GroupKind::SU2);
  EXPECT_EQ(su2.evaluate(root_of_unity(4, 1)), ExactScalar(2));
  // |1 - t|^2 / 2 on the unit circle
  for (int k = 0; k < 12; ++k) {
    const ExactScalar t = root_of_unity(12, k);
    const ExactScalar expected = (ExactScalar(1) - t) * (ExactScalar(1) - t.inverse()) * ExactScalar(Rational(1, 2));
    EXPECT_EQ(so3.evaluate(t), expected);
  }
}

TEST(ChiIsolated, Symbolic) {
  const auto c = chi_isolated(FixedComponent::isolated("p", 3, {1, 2}));
  EXPECT_EQ(c.numerator_exponent, 3);
  EXPECT_EQ(c.denominator_exponents, (std::vector<int>{1, 2}));
  EXPECT_EQ(c.to_string(), "t^3 / ((1 - t^-1) * (1 - t^-2))");
  EXPECT_EQ(chi_isolated(FixedComponent::isolated("q", -1, {-1})).to_string(), "t^-1 / ((1 - t^1))");
  EXPECT_THROW(chi_isolated(catalog("cp1xcp1").components[0]), InputError);
}

TEST(Residues, ProjectiveLinePerComponent) {
  // Values cross-checked against an independent symbolic computation.
  const auto p = catalog("cp1-k", 2);
  const auto weyl = WeylFactor::of(GroupKind::U1);
  const auto& south = p.component("p0");  // moment -1
  const auto& north = p.component("p1");  // moment +1
  EXPECT_EQ(residue_of_h(south, Chart::zero(), weyl), ExactScalar(1));
  EXPECT_EQ(residue_of_h(south, Chart::root(4, 0), weyl), ExactScalar(-1));
  EXPECT_EQ(residue_of_h(south, Chart::infinity(), weyl), ExactScalar(0));
  EXPECT_EQ(residue_of_h(north, Chart::zero(), weyl), ExactScalar(0));
  EXPECT_EQ(residue_of_h(north, Chart::root(4, 0), weyl), ExactScalar(1));
  EXPECT_EQ(residue_of_h(north, Chart::infinity(), weyl), ExactScalar(-1));
}

TEST(Residues, ProjectivePlanePerComponent) {
  const auto p = catalog("cp2-k", 1);
  const auto weyl = WeylFactor::of(GroupKind::U1);
  EXPECT_EQ(residue_of_h(p.component("p0"), Chart::root(4, 0), weyl), ExactScalar(Rational(-7, 4)));
  EXPECT_EQ(residue_of_h(p.component("p0"), Chart::root(4, 2), weyl), ExactScalar(Rational(-1, 4)));
  EXPECT_EQ(residue_of_h(p.component("p0"), Chart::zero(), weyl), ExactScalar(2));
  EXPECT_EQ(residue_of_h(p.component("p1"), Chart::infinity(), weyl), ExactScalar(1));
  EXPECT_EQ(residue_of_h(p.component("p2"), Chart::root(4, 0), weyl), ExactScalar(Rational(11, 4)));
  EXPECT_EQ(residue_of_h(p.component("p2"), Chart::root(4, 2), weyl), ExactScalar(Rational(1, 4)));
  EXPECT_EQ(residue_of_h(p.component("p2"), Chart::infinity(), weyl), ExactScalar(-3));
}

TEST(Residues, CyclotomicValuesAtCubeRoots) {
  // weights +-3: residue of h at zeta_3 for the point with moment 2 is -1/6 - i sqrt(3)/6
  const auto p = catalog("cp1-triple", 1);
  const auto weyl = WeylFactor::of(GroupKind::U1);
  const ExactScalar v = residue_of_h(p.component("p1"), Chart::root(12, 4), weyl);
  EXPECT_EQ(v, root_of_unity(6, 1) * ExactScalar(Rational(-1, 3)));
  const ExactScalar w = residue_of_h(p.component("p1"), Chart::root(12, 8), weyl);
  EXPECT_EQ(w, v.galois(5));
  EXPECT_FALSE(v.is_rational());
  EXPECT_EQ((v + w).rational_part(), Rational(-1, 3));
}

TEST(Residues, WindowVanishing) {
  for (const auto& p : all_catalog_instances()) {
    const auto weyl = WeylFactor::of(GroupKind::U1);
    for (const auto& f : p.components) {
      for (long r = -2; r <= 2; ++r) {
        const long m = f.moment + r;
        if (m > -f.n_plus() && m < f.n_minus()) {
          EXPECT_TRUE(residue_of_h(f, Chart::zero(), weyl, r).is_zero()) << f.name << " r=" << r;
          EXPECT_TRUE(residue_of_h(f, Chart::infinity(), weyl, r).is_zero()) << f.name << " r=" << r;
        }
      }
    }
  }
}

TEST(Residues, GlobalResidueTheoremPerComponent) {
  for (const auto& p : all_catalog_instances()) {
    for (const auto& f : p.components) {
      ExactScalar sum;
      for (const auto& r : component_residues(p, f)) sum += r.value;
      EXPECT_TRUE(sum.is_zero()) << f.name;
    }
  }
}

TEST(Residues, HalfWindowGivesRegularPoint) {
  // mu > -n_+ forces res_0 = 0; mu < n_- forces res_inf = 0.
  const auto weyl = WeylFactor::of(GroupKind::U1);
  const auto f = FixedComponent::isolated("p", 1, {1});
  EXPECT_TRUE(residue_of_h(f, Chart::zero(), weyl).is_zero());
  EXPECT_EQ(residue_of_h(f, Chart::zero(), weyl) + residue_of_h(f, Chart::root(4, 0), weyl) +
                residue_of_h(f, Chart::infinity(), weyl),
            ExactScalar(0));
}

TEST(Character, TwoChartsAgree) {
  for (const auto& p : all_catalog_instances()) {
    const int bound = automatic_degree_bound(p);
    EXPECT_EQ(character_from_chart(p, Chart::infinity(), 2 * bound), character_from_chart(p, Chart::zero(), 2 * bound));
  }
}

TEST(Character, LaurentPolynomialTail) {
  for (const auto& p : all_catalog_instances()) {
    const int bound = automatic_degree_bound(p);
    for (const auto& [m, c] : character_from_chart(p, Chart::infinity(), 3 * bound)) {
      EXPECT_LE(std::labs(m), bound) << "coefficient " << c << " at t^" << m;
    }
  }
}

TEST(RrInvariant, MatchesOracleOnTensorPowers) {
  for (const auto& e : catalog_entries()) {
    const auto base = catalog(e.name, 1);
    for (int k = 1; k <= 4; ++k) {
      const auto p = tensor_power(base, k);
      const auto c = character_polynomial(p);
      EXPECT_EQ(rr_invariant(p), Rational(static_cast<long>(invariant_multiplicity(c, p.group)))) << e.name << " k=" << k;
    }
  }
}

TEST(RrInvariant, SpecExamples) {
  EXPECT_EQ(rr_invariant(catalog("cp1-k", 2)), Rational(1));
  EXPECT_EQ(rr_invariant(catalog("so3-coadjoint", 2)), Rational(0));
  EXPECT_EQ(rr_invariant(catalog("cp1-double", 1)), Rational(0));
}

TEST(RrInvariant, RejectsInvalidInstances) {
  EXPECT_THROW(rr_invariant(catalog("cp1-k", 0)), InputError);
}

TEST(RrInvariant, NonIntegerSignalsInconsistentData) {
  auto p = catalog("cp1xcp1", 1);
  for (auto& f : p.components) f.omega *= ExactScalar(Rational(1, 2));
  EXPECT_THROW(rr_invariant(p), NonIntegerResult);
}
