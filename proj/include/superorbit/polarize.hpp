#pragma once

#include <string>
#include <vector>

#include "superorbit/coadjoint.hpp"
#include "superorbit/matrix.hpp"
#include "superorbit/superalg.hpp"

namespace superorbit {

/// Ascending complete flag 0 = i_0 ⊂ i_1 ⊂ ... ⊂ i_d = n0 of ideals of the
/// even part with one-dimensional steps, passing through `target`. Each step
/// adds a vector that is central modulo the previous step; among candidates
/// the one whose leading coordinate has the highest index is taken.
std::vector<Subspace> ideal_flag_through(const LieSuperalgebra& algebra, const Subspace& target);

struct Polarization {
  Subspace m0;
  std::vector<Subspace> flag;
  std::vector<Subspace> radicals;
};

/// Sum of the radicals of λ([·,·]) on the steps of the flag through [n1,n1].
Polarization vergne_polarization(const LieSuperalgebra& algebra, const Functional& lambda);

struct PolarizingSystem {
  Subspace m0;
  Subspace k_lambda;   // m0 ∩ ker λ
  Subspace r_lambda;   // radical of the odd form
  Subspace j;          // k_lambda ⊕ r_lambda
  LieSuperalgebra clifford;
  QMatrix phi;         // dim c x dim L; meaningful on m = m0 ⊕ n1
  Functional lambda;
  Functional mu;       // on the even part of c
};

/// Throws LambdaNotNonnegative when the odd form is not semidefinite.
PolarizingSystem build_polarizing_system(const LieSuperalgebra& algebra, const Functional& lambda);

/// dim c, except that the zero quotient (λ vanishing on m0) counts as 1.
std::size_t kappa(const LieSuperalgebra& algebra, const Functional& lambda);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;
  bool ok() const;
  std::vector<std::string> violations() const;
};

/// Checks a candidate system against the definition, the consistency
/// identity, the ideal property of j and Φ([n1,[n1,n1]]) = 0. Never throws
/// for well-sized input; violations are listed in the report.
VerificationReport verify_polarizing_system(const LieSuperalgebra& algebra, const PolarizingSystem& system);

}  // namespace superorbit
