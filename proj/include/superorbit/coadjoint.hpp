#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superorbit/matrix.hpp"
#include "superorbit/superalg.hpp"

namespace superorbit {

/// A linear functional on the even part, one coordinate per even basis vector.
using Functional = std::vector<Rational>;

/// λ applied to the even component of w.
Rational evaluate(const Functional& lambda, const Element& w);
void require_functional(const LieSuperalgebra& algebra, const Functional& lambda);

struct SymFormReport {
  QMatrix gram;  // dim_odd x dim_odd, entries λ([V_a, V_b])
  FormVerdict verdict = FormVerdict::Zero;
  Congruence congruence;
  std::optional<Element> witness;  // odd v with λ([v,v]) < 0 when indefinite
};

SymFormReport b_form(const LieSuperalgebra& algebra, const Functional& lambda);
bool in_n0_plus(const LieSuperalgebra& algebra, const Functional& lambda);
Subspace radical_odd(const LieSuperalgebra& algebra, const Functional& lambda);

/// Radical of (x, y) ↦ λ([x, y]) on a subspace of the even part.
Subspace omega_radical(const LieSuperalgebra& algebra, const Functional& lambda, const Subspace& on);

/// Ad*(exp tX)λ = λ ∘ exp(-t ad X) on the even part.
Functional coadjoint_flow(const LieSuperalgebra& algebra, const Functional& lambda, const Element& x,
                          const Rational& t);

/// Basis Z_1..Z_n of the even part whose partial spans are ideals with
/// [n0, g_j] ⊆ g_{j-1}; the reversed coordinate basis when it qualifies.
std::vector<Element> malcev_basis(const LieSuperalgebra& algebra);

struct OrbitRepresentative {
  Functional canonical;
  std::vector<std::pair<Element, Rational>> log;  // flows applied in order
  std::vector<std::size_t> jumps;                 // 1-based jump indices in the Malcev basis
  bool exact = true;
};

/// Unique point of the orbit vanishing on the Malcev vectors at the jump
/// indices, reached by one flow per jump.
OrbitRepresentative canonical_orbit_rep(const LieSuperalgebra& algebra, const Functional& lambda);

/// Re-applies the recorded flows to lambda.
Functional replay(const LieSuperalgebra& algebra, const Functional& lambda,
                  const std::vector<std::pair<Element, Rational>>& log);

enum class OrbitVerdict { Equal, Distinct, Inconclusive };
const char* to_string(OrbitVerdict verdict);

struct OrbitComparison {
  OrbitVerdict verdict = OrbitVerdict::Inconclusive;
  std::string reason;
};

OrbitComparison orbit_equal(const LieSuperalgebra& algebra, const Functional& a, const Functional& b);

/// Parses "i:v,j:w" into a functional of the given length.
Functional parse_functional(const std::string& text, std::size_t dim_even);
std::string to_string(const Functional& lambda, const LieSuperalgebra& algebra);

}  // namespace superorbit
