#include "superorbit/coadjoint.hpp"

#include <sstream>

#include "superorbit/error.hpp"
#include "superorbit/polarize.hpp"

namespace superorbit {

Rational evaluate(const Functional& lambda, const Element& w) {
  Rational s;
  for (std::size_t i = 0; i < lambda.size() && i < w.size(); ++i) s += lambda[i] * w[i];
  return s;
}

void require_functional(const LieSuperalgebra& algebra, const Functional& lambda) {
  if (lambda.size() != algebra.dim_even()) {
    throw Error(ErrorKind::DimensionMismatch, "functional has " + std::to_string(lambda.size()) +
                                                  " coordinates, even part has dimension " +
                                                  std::to_string(algebra.dim_even()));
  }
}

SymFormReport b_form(const LieSuperalgebra& algebra, const Functional& lambda) {
  require_functional(algebra, lambda);
  const std::size_t de = algebra.dim_even();
  const std::size_t r = algebra.dim_odd();
  SymFormReport out;
  out.gram = QMatrix(r, r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) out.gram(a, b) = evaluate(lambda, algebra.structure(de + a, de + b));
  out.congruence = congruence_diagonalize(out.gram);
  out.verdict = verdict_from_diagonal(out.congruence.diag);
  if (out.verdict == FormVerdict::Indefinite) {
    for (std::size_t a = 0; a < r; ++a) {
      if (sgn(out.congruence.diag[a]) < 0) {
        Element v(algebra.dim());
        for (std::size_t b = 0; b < r; ++b) v[de + b] = out.congruence.basis(b, a);
        out.witness = v;
        break;
      }
    }
  }
  return out;
}

bool in_n0_plus(const LieSuperalgebra& algebra, const Functional& lambda) {
  const FormVerdict v = b_form(algebra, lambda).verdict;
  return v == FormVerdict::Zero || v == FormVerdict::PositiveSemidefinite ||
         v == FormVerdict::PositiveDefinite;
}

Subspace radical_odd(const LieSuperalgebra& algebra, const Functional& lambda) {
  const SymFormReport form = b_form(algebra, lambda);
  const std::size_t de = algebra.dim_even();
  std::vector<Element> out;
  for (const auto& k : kernel(form.gram).to_rows()) {
    Element v(algebra.dim());
    for (std::size_t b = 0; b < k.size(); ++b) v[de + b] = k[b];
    out.push_back(std::move(v));
  }
  return Subspace::span(algebra.dim(), out);
}

Subspace omega_radical(const LieSuperalgebra& algebra, const Functional& lambda, const Subspace& on) {
  require_functional(algebra, lambda);
  if (!even_part(algebra).contains(on)) {
    throw Error(ErrorKind::PreconditionFailed, "omega_radical expects a subspace of the even part");
  }
  const auto basis = on.vectors();
  const std::size_t k = basis.size();
  QMatrix omega(k, k);
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q) omega(p, q) = evaluate(lambda, algebra.bracket(basis[p], basis[q]));
  std::vector<Element> out;
  for (const auto& c : kernel(omega).to_rows()) {
    Element v(algebra.dim());
    for (std::size_t p = 0; p < k; ++p)
      if (!is_zero(c[p])) v = add(v, scale(c[p], basis[p]));
    out.push_back(std::move(v));
  }
  return Subspace::span(algebra.dim(), out);
}

Functional coadjoint_flow(const LieSuperalgebra& algebra, const Functional& lambda, const Element& x,
                          const Rational& t) {
  require_functional(algebra, lambda);
  if (x.size() != algebra.dim()) throw Error(ErrorKind::DimensionMismatch, "flow direction size");
  if (!is_zero(odd_projection(algebra, x))) {
    throw Error(ErrorKind::PreconditionFailed, "flow direction must be even");
  }
  require_nilpotent(algebra);
  const std::size_t de = algebra.dim_even();
  // a(k, i) = coefficient of e_k in [x, e_i], restricted to the even part
  QMatrix a(de, de);
  for (std::size_t i = 0; i < de; ++i) {
    const Element b = algebra.bracket(x, algebra.basis_vector(i));
    for (std::size_t k = 0; k < de; ++k) a(k, i) = b[k];
  }
  QMatrix e = QMatrix::identity(de);
  QMatrix term = QMatrix::identity(de);
  for (std::size_t k = 1; k <= de; ++k) {
    term = (-t / Rational(static_cast<long>(k))) * (term * a);
    if (term.is_zero()) break;
    e += term;
  }
  Functional out(de);
  for (std::size_t j = 0; j < de; ++j)
    for (std::size_t i = 0; i < de; ++i) out[j] += lambda[i] * e(i, j);
  return out;
}

std::vector<Element> malcev_basis(const LieSuperalgebra& algebra) {
  const std::size_t de = algebra.dim_even();
  bool reversed_ok = true;
  for (std::size_t k = 0; k < de && reversed_ok; ++k)
    for (std::size_t i = 0; i < de && reversed_ok; ++i) {
      const Element& c = algebra.structure(i, k);
      for (std::size_t m = 0; m <= k; ++m)
        if (!is_zero(c[m])) reversed_ok = false;
    }
  std::vector<Element> out;
  if (reversed_ok) {
    for (std::size_t k = de; k-- > 0;) out.push_back(algebra.basis_vector(k));
    return out;
  }
  const auto flag = ideal_flag_through(algebra, Subspace(algebra.dim()));
  for (std::size_t j = 1; j < flag.size(); ++j) {
    // the new direction: a flag basis vector not in the previous step
    for (const auto& v : flag[j].vectors())
      if (!flag[j - 1].contains(v)) {
        out.push_back(v);
        break;
      }
  }
  return out;
}

namespace {

/// {X ∈ n0 : λ([X, Z_i]) = 0 for i < j}
Subspace annihilating_stage(const LieSuperalgebra& algebra, const Functional& lambda,
                            const std::vector<Element>& malcev, std::size_t j) {
  const std::size_t de = algebra.dim_even();
  QMatrix rows(j, de);
  for (std::size_t i = 0; i < j; ++i)
    for (std::size_t k = 0; k < de; ++k)
      rows(i, k) = evaluate(lambda, algebra.bracket(algebra.basis_vector(k), malcev[i]));
  std::vector<Element> out;
  for (const auto& c : kernel(rows).to_rows()) {
    Element v(algebra.dim());
    for (std::size_t k = 0; k < de; ++k) v[k] = c[k];
    out.push_back(std::move(v));
  }
  return Subspace::span(algebra.dim(), out);
}

}  // namespace

OrbitRepresentative canonical_orbit_rep(const LieSuperalgebra& algebra, const Functional& lambda) {
  require_functional(algebra, lambda);
  require_nilpotent(algebra);
  const auto malcev = malcev_basis(algebra);
  OrbitRepresentative out;
  Functional current = lambda;
  Subspace previous = annihilating_stage(algebra, current, malcev, 0);
  for (std::size_t j = 1; j <= malcev.size(); ++j) {
    const Subspace stage = annihilating_stage(algebra, current, malcev, j);
    if (stage.dim() == previous.dim()) {
      previous = stage;
      continue;
    }
    out.jumps.push_back(j);
    const Element& zj = malcev[j - 1];
    for (const auto& x : previous.vectors()) {
      const Rational slope = evaluate(current, algebra.bracket(x, zj));
      if (is_zero(slope)) continue;
      // λ(Z_j) moves affinely along x; earlier Malcev coordinates stay fixed
      const Rational t = evaluate(current, zj) / slope;
      if (!is_zero(t)) {
        current = coadjoint_flow(algebra, current, x, t);
        out.log.emplace_back(x, t);
      }
      break;
    }
    previous = annihilating_stage(algebra, current, malcev, j);
  }
  for (auto j : out.jumps) {
    if (!is_zero(evaluate(current, malcev[j - 1]))) {
      throw Error(ErrorKind::VerificationFailed, "normalisation left a jump coordinate nonzero");
    }
  }
  out.canonical = std::move(current);
  return out;
}

Functional replay(const LieSuperalgebra& algebra, const Functional& lambda,
                  const std::vector<std::pair<Element, Rational>>& log) {
  Functional current = lambda;
  for (const auto& [x, t] : log) current = coadjoint_flow(algebra, current, x, t);
  return current;
}

const char* to_string(OrbitVerdict verdict) {
  switch (verdict) {
    case OrbitVerdict::Equal: return "Equal";
    case OrbitVerdict::Distinct: return "Distinct";
    case OrbitVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

OrbitComparison orbit_equal(const LieSuperalgebra& algebra, const Functional& a, const Functional& b) {
  require_functional(algebra, a);
  require_functional(algebra, b);
  if (a == b) return {OrbitVerdict::Equal, "identical functionals"};

  const Subspace n0 = even_part(algebra);
  const Restriction even = restrict_to(algebra, n0);
  for (const auto& c : center(even.algebra).vectors()) {
    const Element w = even.inclusion.apply(c);
    if (evaluate(a, w) != evaluate(b, w)) {
      return {OrbitVerdict::Distinct, "values on the centre of the even part differ at " + to_string(w)};
    }
  }
  const std::size_t rank_a = n0.dim() - omega_radical(algebra, a, n0).dim();
  const std::size_t rank_b = n0.dim() - omega_radical(algebra, b, n0).dim();
  if (rank_a != rank_b) return {OrbitVerdict::Distinct, "ranks of the even skew form differ"};
  const FormVerdict va = b_form(algebra, a).verdict;
  const FormVerdict vb = b_form(algebra, b).verdict;
  if (va != vb) return {OrbitVerdict::Distinct, "odd form verdicts differ"};
  const bool plus = va == FormVerdict::Zero || va == FormVerdict::PositiveSemidefinite ||
                    va == FormVerdict::PositiveDefinite;
  if (plus && kappa(algebra, a) != kappa(algebra, b)) return {OrbitVerdict::Distinct, "kappa differs"};

  const OrbitRepresentative ra = canonical_orbit_rep(algebra, a);
  const OrbitRepresentative rb = canonical_orbit_rep(algebra, b);
  if (ra.jumps != rb.jumps) return {OrbitVerdict::Distinct, "jump indices differ"};
  if (ra.canonical == rb.canonical) return {OrbitVerdict::Equal, "canonical representatives agree"};
  if (ra.exact && rb.exact) return {OrbitVerdict::Distinct, "canonical representatives differ"};
  return {OrbitVerdict::Inconclusive, "inexact normalisation"};
}

Functional parse_functional(const std::string& text, std::size_t dim_even) {
  Functional out(dim_even);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorKind::ParseError, "functional entry '" + item + "' is not of the form index:value");
    }
    std::size_t index = 0;
    try {
      std::size_t used = 0;
      const std::string idx = item.substr(0, colon);
      index = std::stoul(idx, &used);
      if (idx.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(idx);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, "bad index in functional entry '" + item + "'");
    }
    if (index >= dim_even) {
      throw Error(ErrorKind::DimensionMismatch, "functional index " + std::to_string(index) +
                                                    " out of range for even dimension " +
                                                    std::to_string(dim_even));
    }
    out[index] += parse_rational(item.substr(colon + 1));
  }
  return out;
}

std::string to_string(const Functional& lambda, const LieSuperalgebra& algebra) {
  std::string out;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (is_zero(lambda[i])) continue;
    if (!out.empty()) out += " + ";
    out += to_string(lambda[i]) + "*" + algebra.names()[i] + "*";
  }
  return out.empty() ? "0" : out;
}

}  // namespace superorbit
