#include "superorbit/models.hpp"

#include "superorbit/error.hpp"

namespace superorbit {

std::string hc_name(const HCSpec& spec) {
  std::string out = "hc_" + std::to_string(spec.m) + "_" + std::to_string(spec.n);
  if (!spec.signs.empty()) out += "_";
  for (int s : spec.signs) out += s > 0 ? "p" : "m";
  return out;
}

namespace {

void check_spec(const HCSpec& spec) {
  if (spec.m == 0 && spec.n == 0) throw Error(ErrorKind::PreconditionFailed, "m and n cannot both be zero");
  if (spec.signs.size() != spec.n) {
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(spec.n) + " signs");
  }
  for (int s : spec.signs)
    if (s != 1 && s != -1) throw Error(ErrorKind::PreconditionFailed, "signs must be +1 or -1");
}

}  // namespace

LieSuperalgebra heisenberg_clifford(const HCSpec& spec) {
  check_spec(spec);
  std::vector<std::string> names{"Z"};
  for (std::size_t i = 1; i <= spec.m; ++i) names.push_back("X" + std::to_string(i));
  for (std::size_t i = 1; i <= spec.m; ++i) names.push_back("Y" + std::to_string(i));
  for (std::size_t j = 1; j <= spec.n; ++j) names.push_back("V" + std::to_string(j));
  std::vector<BracketEntry> table;
  for (std::size_t i = 0; i < spec.m; ++i) table.push_back({1 + i, 1 + spec.m + i, {{0, Rational(1)}}});
  for (std::size_t j = 0; j < spec.n; ++j) {
    const std::size_t v = 1 + 2 * spec.m + j;
    table.push_back({v, v, {{0, Rational(spec.signs[j])}}});
  }
  return LieSuperalgebra::build(1 + 2 * spec.m, spec.n, names, table);
}

HCSpec infer_hc_spec(const LieSuperalgebra& algebra) {
  const std::size_t de = algebra.dim_even();
  if (de % 2 == 0) {
    throw Error(ErrorKind::PreconditionFailed, "even part has even dimension; not Heisenberg-Clifford");
  }
  HCSpec spec;
  spec.m = (de - 1) / 2;
  spec.n = algebra.dim_odd();
  for (std::size_t j = 0; j < spec.n; ++j) {
    const Rational& c = algebra.structure(de + j, de + j)[0];
    if (c != 1 && c != -1) {
      throw Error(ErrorKind::PreconditionFailed, "odd generator " + std::to_string(j) + " has [V,V] != ±Z");
    }
    spec.signs.push_back(c == 1 ? 1 : -1);
  }
  const LieSuperalgebra expected = heisenberg_clifford(spec);
  for (std::size_t i = 0; i < algebra.dim(); ++i)
    for (std::size_t k = 0; k < algebra.dim(); ++k)
      if (algebra.structure(i, k) != expected.structure(i, k)) {
        throw Error(ErrorKind::PreconditionFailed,
                    "bracket of basis elements " + std::to_string(i) + ", " + std::to_string(k) +
                        " is not in Heisenberg-Clifford normal form");
      }
  return spec;
}

std::vector<HCSpec> hc_family(std::size_t max_m, std::size_t max_n) {
  std::vector<HCSpec> out;
  for (std::size_t m = 0; m <= max_m; ++m)
    for (std::size_t n = 0; n <= max_n; ++n) {
      if (m == 0 && n == 0) continue;
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        HCSpec s{m, n, {}};
        for (std::size_t j = 0; j < n; ++j) s.signs.push_back((mask >> (n - 1 - j)) & 1 ? -1 : 1);
        out.push_back(std::move(s));
      }
    }
  return out;
}

const char* to_string(OddFormKind kind) {
  switch (kind) {
    case OddFormKind::Definite: return "Definite";
    case OddFormKind::Indefinite: return "Indefinite";
    case OddFormKind::ZeroOddPart: return "ZeroOddPart";
  }
  return "?";
}

const char* to_string(SvnConclusion conclusion) {
  switch (conclusion) {
    case SvnConclusion::NoRepresentation: return "NoRepresentation";
    case SvnConclusion::UniqueUpToParityAndEquivalence: return "UniqueUpToParityAndEquivalence";
    case SvnConclusion::CharactersOnly: return "CharactersOnly";
  }
  return "?";
}

SvnReport svn_classify(const HCSpec& spec, const Rational& b) {
  check_spec(spec);
  SvnReport r;
  bool pos = false;
  bool neg = false;
  for (int s : spec.signs) (s > 0 ? pos : neg) = true;
  r.form_verdict = spec.n == 0 ? OddFormKind::ZeroOddPart
                   : (pos && neg) ? OddFormKind::Indefinite
                                  : OddFormKind::Definite;
  if (sgn(b) == 0) {
    r.conclusion = SvnConclusion::CharactersOnly;
    r.summary = "central character trivial: only one-dimensional representations from unitary characters";
    return r;
  }
  if (r.form_verdict == OddFormKind::Indefinite) {
    r.conclusion = SvnConclusion::NoRepresentation;
    r.summary = "no irreducible unitary representation (indefinite form)";
    return r;
  }
  r.agrees = spec.n == 0 || sgn(b) * spec.signs.front() > 0;
  if (!r.agrees) {
    r.conclusion = SvnConclusion::NoRepresentation;
    r.summary = "no irreducible unitary representation (central character does not agree with the form)";
    return r;
  }
  r.conclusion = SvnConclusion::UniqueUpToParityAndEquivalence;
  r.count = (spec.n > 0 && spec.n % 2 == 0) ? 2 : 1;
  r.summary = "unique up to unitary equivalence and parity change; " + std::to_string(r.count) +
              (r.count == 1 ? " equivalence class" : " inequivalent representations");
  return r;
}

SchrodingerModel schrodinger_model(const HCSpec& spec, const Rational& b) {
  const SvnReport report = svn_classify(spec, b);
  if (report.conclusion != SvnConclusion::UniqueUpToParityAndEquivalence) {
    throw Error(ErrorKind::NotAdmissible, report.summary);
  }
  SchrodingerModel model;
  model.spec = spec;
  model.b = b;
  model.algebra = heisenberg_clifford(spec);
  const std::size_t m = spec.m;
  const std::size_t n = model.algebra.dim();

  std::vector<Element> zv{model.algebra.basis_vector(0)};
  for (std::size_t j = 0; j < spec.n; ++j) zv.push_back(model.algebra.basis_vector(1 + 2 * m + j));
  const Restriction odd_clifford = restrict_to(model.algebra, Subspace::span(n, zv));
  model.module = clifford_module(odd_clifford.algebra, Functional{b});

  const std::size_t dim = model.module.dim();
  const ExtMatrix id = ExtMatrix::identity(dim);
  const ExtMatrix ib = ExtScalar(Gauss(Rational(0), b)) * id;
  model.images.assign(n, WeylMatrix(m));
  model.images[0] = WeylMatrix::constant(m, ib);
  for (std::size_t i = 0; i < m; ++i) {
    model.images[1 + i] = WeylMatrix::d(m, i, id);
    model.images[1 + m + i] = WeylMatrix::t(m, i, ib);
  }
  for (std::size_t j = 0; j < spec.n; ++j) {
    model.images[1 + 2 * m + j] = WeylMatrix::constant(m, model.module.images[j]);
  }
  return model;
}

WeylMatrix model_image(const SchrodingerModel& model, const Element& x) {
  if (x.size() != model.images.size()) throw Error(ErrorKind::DimensionMismatch, "element size");
  WeylMatrix out(model.spec.m);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (is_zero(x[k])) continue;
    for (const auto& [mono, c] : model.images[k].terms()) out.add_term(mono, scale_coeff(x[k], c));
  }
  return out;
}

VerificationReport verify_model(const SchrodingerModel& model) {
  VerificationReport report;
  const LieSuperalgebra& l = model.algebra;
  const std::size_t n = l.dim();
  if (model.images.size() != n) {
    report.checks.push_back({"shapes", false, "one image per basis element expected"});
    return report;
  }
  const std::size_t dim = model.module.dim();
  const WeylMatrix minus_i =
      WeylMatrix::constant(model.spec.m, ExtScalar(Gauss(Rational(0), Rational(-1))) * ExtMatrix::identity(dim));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const bool odd_i = l.parity(i) == Parity::Odd;
      const bool odd_j = l.parity(j) == Parity::Odd;
      const WeylMatrix& pi = model.images[i];
      const WeylMatrix& pj = model.images[j];
      const WeylMatrix bracket_image = model_image(model, l.structure(i, j));
      Check c;
      WeylMatrix lhs;
      WeylMatrix rhs;
      if (odd_i && odd_j) {
        c.name = "{" + l.names()[i] + ", " + l.names()[j] + "} = -i pi([" + l.names()[i] + ", " + l.names()[j] + "])";
        lhs = weyl_anticommutator(pi, pj);
        rhs = minus_i * bracket_image;
      } else {
        c.name = "[" + l.names()[i] + ", " + l.names()[j] + "] = pi([" + l.names()[i] + ", " + l.names()[j] + "])";
        // even element first so the bracket orientation matches
        lhs = odd_i ? WeylMatrix(weyl_commutator(pj, pi)) : weyl_commutator(pi, pj);
        rhs = odd_i ? model_image(model, l.structure(j, i)) : bracket_image;
      }
      const WeylMatrix residual = lhs - rhs;
      c.passed = residual.is_zero();
      if (!c.passed) c.detail = "residual " + to_string(residual);
      report.checks.push_back(std::move(c));
    }
  for (std::size_t i = l.dim_even(); i < n; ++i) {
    Check c{"pi(" + l.names()[i] + ") is self-adjoint", true, ""};
    for (const auto& [mono, coeff] : model.images[i].terms()) {
      bool constant = true;
      for (unsigned e : mono.t) constant = constant && e == 0;
      for (unsigned e : mono.d) constant = constant && e == 0;
      if (!constant || !(adjoint(coeff) == coeff)) {
        c.passed = false;
        c.detail = "image is not a self-adjoint constant matrix";
      }
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

InducedData induced_rep_data(const LieSuperalgebra& algebra, const Functional& lambda) {
  InducedData out;
  out.system = build_polarizing_system(algebra, lambda);
  out.module = clifford_module(out.system.clifford, out.system.mu);
  out.fiber_dim = out.module.dim();
  out.transverse_dim = algebra.dim_even() - out.system.m0.dim();
  out.kappa = out.system.clifford.dim() == 0 ? 1 : out.system.clifford.dim();
  return out;
}

}  // namespace superorbit
