#pragma once

#include <string>
#include <vector>

#include "superorbit/cliffmod.hpp"
#include "superorbit/coadjoint.hpp"
#include "superorbit/polarize.hpp"
#include "superorbit/superalg.hpp"
#include "superorbit/weyl.hpp"

namespace superorbit {

/// Basis {Z, X_1..X_m, Y_1..Y_m, V_1..V_n}; [X_i,Y_i] = Z, [V_j,V_j] = c_j Z.
struct HCSpec {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<int> signs;  // c_j ∈ {+1, -1}
};

/// "hc_<m>_<n>_<p|m per sign>", e.g. hc_1_2_pm.
std::string hc_name(const HCSpec& spec);
LieSuperalgebra heisenberg_clifford(const HCSpec& spec);
/// Reads m, n and the signs off an algebra that is literally in the normal
/// form above; throws PreconditionFailed otherwise.
HCSpec infer_hc_spec(const LieSuperalgebra& algebra);
/// Every spec with m ≤ max_m, n ≤ max_n and all sign patterns, except m = n = 0.
std::vector<HCSpec> hc_family(std::size_t max_m, std::size_t max_n);

enum class OddFormKind { Definite, Indefinite, ZeroOddPart };
enum class SvnConclusion { NoRepresentation, UniqueUpToParityAndEquivalence, CharactersOnly };
const char* to_string(OddFormKind kind);
const char* to_string(SvnConclusion conclusion);

struct SvnReport {
  OddFormKind form_verdict = OddFormKind::ZeroOddPart;
  bool agrees = false;
  SvnConclusion conclusion = SvnConclusion::CharactersOnly;
  std::size_t count = 0;  // representations up to equivalence, when they exist
  std::string summary;
};

SvnReport svn_classify(const HCSpec& spec, const Rational& b);

/// Images of the basis as operators on polynomials in t_1..t_m tensored with
/// the Clifford module: X_i ↦ ∂_i, Y_i ↦ i b t_i, Z ↦ i b, V_j ↦ R_j.
struct SchrodingerModel {
  HCSpec spec;
  Rational b;
  LieSuperalgebra algebra;
  CliffordModule module;
  std::vector<WeylMatrix> images;
};

SchrodingerModel schrodinger_model(const HCSpec& spec, const Rational& b);

/// Linear extension of the generator images.
WeylMatrix model_image(const SchrodingerModel& model, const Element& x);

/// Exhaustive relation check over all basis pairs: commutators for
/// even-even and even-odd pairs equal the image of the bracket; odd-odd
/// anticommutators equal -i times it; odd images are self-adjoint.
VerificationReport verify_model(const SchrodingerModel& model);

struct InducedData {
  PolarizingSystem system;
  CliffordModule module;
  std::size_t fiber_dim = 0;
  std::size_t transverse_dim = 0;
  std::size_t kappa = 0;
};

InducedData induced_rep_data(const LieSuperalgebra& algebra, const Functional& lambda);

}  // namespace superorbit
