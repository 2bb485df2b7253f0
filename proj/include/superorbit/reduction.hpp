#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superorbit/matrix.hpp"
#include "superorbit/superalg.hpp"

namespace superorbit {

/// Odd elements X with [X,X] in a graded ideal.
struct IsotropicSearch {
  Subspace span;                  // span of all solutions found (inside the odd block)
  std::vector<Element> witnesses; // rational solutions; may be fewer than dim(span)
  bool certified = false;         // span provably equals the span of all real solutions
};

/// Solves [X,X] ∈ modulo over the odd part. Exact in three regimes: the
/// residual subspace has dimension ≤ 2, all residual forms are diagonal, or
/// repeated semidefinite combinations collapse the problem into one of those.
/// Otherwise the coordinate-plane search result is returned uncertified.
IsotropicSearch isotropic_generators(const LieSuperalgebra& algebra, const Subspace& modulo);

struct ReducedForm {
  LieSuperalgebra original;
  Subspace a_radical;
  Quotient quotient;
  std::vector<Subspace> chain;   // strictly ascending stages, last equals a_radical
  bool certified_complete = false;
};

ReducedForm a_radical(const LieSuperalgebra& algebra);

enum class ReducedStatus { Reduced, NotReduced, Unknown };
const char* to_string(ReducedStatus status);

struct ReducedVerdict {
  ReducedStatus status = ReducedStatus::Unknown;
  std::optional<Element> witness;  // nonzero odd X with [X,X] = 0, when rational
};

ReducedVerdict is_reduced(const LieSuperalgebra& algebra);

struct CliffordRecognition {
  bool is_clifford = false;
  std::optional<Element> z_generator;  // ±e_0, chosen so that the gram is positive
  QMatrix gram;                        // Z-coordinate of [V_a, V_b]
  Congruence congruence;
  FormVerdict verdict = FormVerdict::Zero;
  std::optional<Element> witness;      // odd vector showing a failure of definiteness
  std::string reason;
};

CliffordRecognition recognize_clifford(const LieSuperalgebra& algebra);

struct KirillovSplit {
  Element x;
  Element y;
  Element z;
  std::vector<Element> w_basis;
  Subspace n_prime;
};

struct SplitOutcome {
  bool clifford = false;
  CliffordRecognition recognition;  // filled when clifford
  KirillovSplit split;              // filled otherwise
};

/// Requires a certified reduced algebra of dimension > 1 with one-dimensional
/// centre; throws PreconditionFailed otherwise.
SplitOutcome kirillov_split(const LieSuperalgebra& algebra);

}  // namespace superorbit
