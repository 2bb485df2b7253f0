#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superorbit/coadjoint.hpp"
#include "superorbit/extring.hpp"
#include "superorbit/matrix.hpp"
#include "superorbit/superalg.hpp"

namespace superorbit {

/// PᵀGP = diag(d) with every d_i > 0; throws NotPositiveDefinite otherwise.
Congruence diagonalize_form(const QMatrix& gram);

/// 2^⌈l/2⌉.
std::size_t spinor_dim(std::size_t l);

/// Γ_1..Γ_l with Γ_iΓ_j + Γ_jΓ_i = 2δ_ij I, all odd for the grading in which
/// the first half of the basis is even (the chirality eigenspaces).
std::vector<GMatrix> gamma_matrices(std::size_t l);

struct CliffordModule {
  std::size_t l = 0;
  std::vector<int> parity;          // 0 even, 1 odd, one entry per basis vector
  QMatrix gram;                     // form on the input odd basis (central coordinate)
  Rational a;                       // value of μ on the central generator
  Congruence congruence;            // PᵀGP = diag(d)
  std::vector<Rational> q;          // q_j = d_j a / 2, so that rho_j^2 = q_j I
  std::vector<GMatrix> gammas;
  std::vector<ExtMatrix> rho;       // images of the diagonal basis, rho_j = sqrt(q_j) Γ_j
  std::vector<ExtMatrix> images;    // images of the input odd basis

  std::size_t dim() const { return parity.size(); }
  bool trivial() const { return gammas.empty(); }
};

/// Module for a Gram matrix (positive definite) and central value a ≥ 0.
/// `congruence`, when given, must diagonalise the gram with positive entries.
CliffordModule clifford_module_from_gram(const QMatrix& gram, const Rational& a,
                                         const std::optional<Congruence>& congruence = std::nullopt);

/// Irreducible graded module of a Clifford-type algebra with functional μ on
/// its even part. Throws NotCliffordType or NegativeCentralValue.
CliffordModule clifford_module(const LieSuperalgebra& c, const Functional& mu);

CliffordModule parity_change(const CliffordModule& m);

/// Exact relation checks; an empty list means all pass.
std::vector<std::string> verify_module(const CliffordModule& m);

struct Equivalence {
  bool equivalent = false;
  std::optional<ExtMatrix> intertwiner;  // even T with T R1_i = R2_i T
  std::string reason;
};

/// Decides whether an even invertible intertwiner exists. Throws
/// DimensionMismatch when sizes or generator counts differ.
Equivalence module_equivalent(const CliffordModule& m1, const CliffordModule& m2);

}  // namespace superorbit
