#pragma once

#include <vector>

#include "rrloc/lefschetz.hpp"

namespace rrloc {

struct RootResidue {
  Chart pole;
  ExactScalar value;  // sum over F in F_+ of res_pole(weyl * h_F)

  friend bool operator==(const RootResidue&, const RootResidue&) = default;
};

/// Contribution of the primitive roots of unity of one order (a Galois orbit).
struct OrbitCorrection {
  int order = 0;
  Rational value;                 // orbit sum, rational
  std::vector<RootResidue> roots;  // individual terms, cyclotomic

  friend bool operator==(const OrbitCorrection&, const OrbitCorrection&) = default;
};

struct ReducedRR {
  Rational main_term;
  std::vector<OrbitCorrection> corrections;  // ascending order
  Rational total;

  friend bool operator==(const ReducedRR&, const ReducedRR&) = default;
};

/// sum over F with mu_F > 0 of res_1(weyl * h_F).
Rational rr_reduced_main(const ProblemInstance& p);

/// Residues at roots of unity other than 1 in the union of the wall sets, summed over F_+ and
/// grouped into Galois orbits. Empty for quasi-free actions. Throws NotRational when an orbit sum
/// is not rational.
std::vector<OrbitCorrection> kawasaki_corrections(const ProblemInstance& p);

/// main term plus corrections.
ReducedRR rr_reduced(const ProblemInstance& p);

}  // namespace rrloc
