#include "superorbit/cliffmod.hpp"

#include <bit>

#include "superorbit/error.hpp"
#include "superorbit/reduction.hpp"

namespace superorbit {

Congruence diagonalize_form(const QMatrix& gram) {
  Congruence c = congruence_diagonalize(gram);
  for (std::size_t i = 0; i < c.diag.size(); ++i) {
    if (sgn(c.diag[i]) <= 0) {
      throw Error(ErrorKind::NotPositiveDefinite,
                  "pivot " + std::to_string(i) + " of the congruence diagonal is " + to_string(c.diag[i]));
    }
  }
  return c;
}

std::size_t spinor_dim(std::size_t l) { return std::size_t{1} << ((l + 1) / 2); }

std::vector<GMatrix> gamma_matrices(std::size_t l) {
  if (l == 0) return {};
  const std::size_t k = (l + 1) / 2;
  const std::size_t dim = std::size_t{1} << k;
  // chirality eigenspaces: even popcount first, each block in increasing order
  std::vector<std::size_t> pos(dim);
  std::size_t next = 0;
  for (int want : {0, 1})
    for (std::size_t b = 0; b < dim; ++b)
      if (std::popcount(b) % 2 == want) pos[b] = next++;

  std::vector<GMatrix> out(2 * k, GMatrix(dim, dim));
  for (std::size_t b = 0; b < dim; ++b)
    for (std::size_t p = 0; p < k; ++p) {
      const int phase = std::popcount(b & ((std::size_t{1} << p) - 1)) % 2 ? -1 : 1;
      const std::size_t flipped = b ^ (std::size_t{1} << p);
      out[2 * p](pos[flipped], pos[b]) = Gauss(phase);
      const bool one = (b >> p) & 1;
      out[2 * p + 1](pos[flipped], pos[b]) = Gauss(Rational(0), Rational(one ? -phase : phase));
    }
  out.resize(l);
  return out;
}

namespace {

CliffordModule trivial_module(const QMatrix& gram, const Rational& a) {
  CliffordModule m;
  m.l = gram.rows();
  m.parity = {0};
  m.gram = gram;
  m.a = a;
  m.congruence = congruence_diagonalize(gram);
  m.q.assign(m.l, Rational(0));
  m.rho.assign(m.l, ExtMatrix(1, 1));
  m.images.assign(m.l, ExtMatrix(1, 1));
  return m;
}

ExtMatrix ext_identity(std::size_t n) { return ExtMatrix::identity(n); }

ExtMatrix anticommutator(const ExtMatrix& x, const ExtMatrix& y) { return x * y + y * x; }

}  // namespace

CliffordModule clifford_module_from_gram(const QMatrix& gram, const Rational& a,
                                         const std::optional<Congruence>& congruence) {
  if (gram.rows() != gram.cols()) throw Error(ErrorKind::DimensionMismatch, "gram matrix must be square");
  const std::size_t l = gram.rows();
  // with no odd generators the central value is just a character and may have either sign
  if (l == 0) return trivial_module(gram, a);
  if (sgn(a) < 0) {
    throw Error(ErrorKind::NegativeCentralValue, "central value " + to_string(a) + " is negative");
  }
  if (sgn(a) == 0) return trivial_module(gram, a);

  CliffordModule m;
  m.l = l;
  m.gram = gram;
  m.a = a;
  if (congruence) {
    const Congruence& c = *congruence;
    if (c.basis.rows() != l || c.basis.cols() != l || c.diag.size() != l) {
      throw Error(ErrorKind::DimensionMismatch, "congruence does not match the gram matrix");
    }
    QMatrix d(l, l);
    for (std::size_t i = 0; i < l; ++i) {
      if (sgn(c.diag[i]) <= 0) throw Error(ErrorKind::NotPositiveDefinite, "nonpositive diagonal entry");
      d(i, i) = c.diag[i];
    }
    if (!(c.basis.transpose() * gram * c.basis == d)) {
      throw Error(ErrorKind::PreconditionFailed, "supplied congruence does not diagonalise the gram");
    }
    m.congruence = c;
  } else {
    m.congruence = diagonalize_form(gram);
  }
  const auto p_inv = inverse(m.congruence.basis);
  if (!p_inv) throw Error(ErrorKind::PreconditionFailed, "congruence basis is singular");

  m.gammas = gamma_matrices(l);
  const std::size_t dim = spinor_dim(l);
  m.parity.assign(dim, 0);
  for (std::size_t k = dim / 2; k < dim; ++k) m.parity[k] = 1;
  for (std::size_t j = 0; j < l; ++j) {
    m.q.push_back(m.congruence.diag[j] * a / 2);
    m.rho.push_back(ExtScalar::sqrt(m.q.back()) * to_ext(m.gammas[j]));
  }
  for (std::size_t i = 0; i < l; ++i) {
    ExtMatrix r(dim, dim);
    for (std::size_t j = 0; j < l; ++j)
      if (!is_zero((*p_inv)(j, i))) r += ExtScalar((*p_inv)(j, i)) * m.rho[j];
    m.images.push_back(std::move(r));
  }

  const auto problems = verify_module(m);
  if (!problems.empty()) throw Error(ErrorKind::VerificationFailed, "clifford module: " + problems.front());
  return m;
}

CliffordModule clifford_module(const LieSuperalgebra& c, const Functional& mu) {
  require_functional(c, mu);
  const CliffordRecognition rec = recognize_clifford(c);
  if (!rec.is_clifford) throw Error(ErrorKind::NotCliffordType, rec.reason);
  if (c.dim() == 0) return trivial_module(QMatrix(0, 0), Rational(0));
  const Rational a = evaluate(mu, *rec.z_generator);
  if (sgn(a) < 0 && rec.gram.rows() > 0) {
    throw Error(ErrorKind::NegativeCentralValue,
                "mu takes the value " + to_string(a) + " on the central generator " + to_string(*rec.z_generator));
  }
  return clifford_module_from_gram(rec.gram, a, rec.gram.rows() ? std::optional(rec.congruence) : std::nullopt);
}

CliffordModule parity_change(const CliffordModule& m) {
  CliffordModule out = m;
  for (auto& p : out.parity) p = 1 - p;
  return out;
}

std::vector<std::string> verify_module(const CliffordModule& m) {
  std::vector<std::string> out;
  const std::size_t dim = m.dim();
  if (m.images.size() != m.l || m.rho.size() != m.l) {
    out.push_back("expected " + std::to_string(m.l) + " generator images");
    return out;
  }
  for (std::size_t i = 0; i < m.l; ++i) {
    const ExtMatrix& r = m.images[i];
    if (r.rows() != dim || r.cols() != dim) {
      out.push_back("image " + std::to_string(i) + " has the wrong shape");
      return out;
    }
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b)
        if (m.parity[a] == m.parity[b] && !is_zero(r(a, b))) {
          out.push_back("image " + std::to_string(i) + " is not odd");
          a = dim;
          break;
        }
    if (!(adjoint(r) == r)) out.push_back("image " + std::to_string(i) + " is not self-adjoint");
    for (std::size_t k = i; k < m.l; ++k) {
      const ExtMatrix lhs = anticommutator(r, m.images[k]);
      const ExtMatrix rhs = ExtScalar(m.gram(i, k) * m.a) * ext_identity(dim);
      if (!(lhs == rhs)) {
        out.push_back("R" + std::to_string(i) + "R" + std::to_string(k) + " + R" + std::to_string(k) + "R" +
                      std::to_string(i) + " = " + to_string(lhs) + ", expected " + to_string(m.gram(i, k) * m.a) +
                      " I");
      }
    }
  }
  for (std::size_t j = 0; j < m.l; ++j) {
    if (!(m.rho[j] * m.rho[j] == ExtScalar(m.q[j]) * ext_identity(dim))) {
      out.push_back("rho" + std::to_string(j) + " squared differs from q I");
    }
  }
  if (!m.trivial()) {
    if (dim != spinor_dim(m.l)) out.push_back("module dimension is not 2^ceil(l/2)");
    // The products Γ_I over all subsets I must be linearly independent.
    GMatrix products(std::size_t{1} << m.l, dim * dim);
    for (std::size_t mask = 0; mask < (std::size_t{1} << m.l); ++mask) {
      GMatrix prod = GMatrix::identity(dim);
      for (std::size_t j = 0; j < m.l; ++j)
        if (mask & (std::size_t{1} << j)) prod = prod * m.gammas[j];
      for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) products(mask, a * dim + b) = prod(a, b);
    }
    if (rank(products) != (std::size_t{1} << m.l)) out.push_back("generated algebra is smaller than 2^l");
  }
  return out;
}

namespace {

/// Σ_I L_I X R_I for X = E_ab, where L_I and R_I are precomputed products.
ExtMatrix average_unit(const std::vector<ExtMatrix>& left, const std::vector<ExtMatrix>& right, std::size_t a,
                       std::size_t b) {
  const std::size_t rows = left.front().rows();
  const std::size_t cols = right.front().cols();
  ExtMatrix out(rows, cols);
  for (std::size_t s = 0; s < left.size(); ++s)
    for (std::size_t r = 0; r < rows; ++r) {
      if (is_zero(left[s](r, a))) continue;
      for (std::size_t c = 0; c < cols; ++c)
        if (!is_zero(right[s](b, c))) out(r, c) += left[s](r, a) * right[s](b, c);
    }
  return out;
}

/// Products over all subsets, in increasing index order: f(I) = Π_{j∈I} g_j,
/// with `left_to_right` deciding whether new factors go right or left.
std::vector<ExtMatrix> subset_products(const std::vector<ExtMatrix>& g, bool left_to_right, std::size_t dim) {
  std::vector<ExtMatrix> out(std::size_t{1} << g.size());
  out[0] = ExtMatrix::identity(dim);
  for (std::size_t mask = 1; mask < out.size(); ++mask) {
    const std::size_t top = std::bit_width(mask) - 1;
    const ExtMatrix& rest = out[mask ^ (std::size_t{1} << top)];
    out[mask] = left_to_right ? rest * g[top] : g[top] * rest;
  }
  return out;
}

}  // namespace

Equivalence module_equivalent(const CliffordModule& m1, const CliffordModule& m2) {
  if (m1.dim() != m2.dim() || m1.l != m2.l) {
    throw Error(ErrorKind::DimensionMismatch, "modules differ in dimension or number of generators");
  }
  const std::size_t dim = m1.dim();
  const std::size_t l = m1.l;
  Equivalence out;
  // An intertwiner preserves all anticommutators, so their data must agree.
  if (!(Rational(m1.a) * m1.gram == Rational(m2.a) * m2.gram)) {
    out.reason = "anticommutator data differ";
    return out;
  }

  if (m1.trivial() || m2.trivial()) {
    // All images vanish: any even invertible map intertwines.
    ExtMatrix t(dim, dim);
    std::vector<bool> used(dim, false);
    for (std::size_t c = 0; c < dim; ++c) {
      for (std::size_t r = 0; r < dim; ++r)
        if (!used[r] && m2.parity[r] == m1.parity[c]) {
          used[r] = true;
          t(r, c) = 1;
          break;
        }
    }
    for (bool u : used)
      if (!u) {
        out.reason = "graded dimensions differ";
        return out;
      }
    out.equivalent = true;
    out.intertwiner = t;
    out.reason = "trivial modules with matching grading";
    return out;
  }

  // A_j: module 1 evaluated on module 2's diagonal basis; these satisfy the
  // same relations as rho2_j, so the averaged T = Σ_I rho2_I X A_I^{-1} is an
  // intertwiner for every X.
  std::vector<ExtMatrix> a_gen;
  std::vector<ExtMatrix> a_inv;
  for (std::size_t j = 0; j < l; ++j) {
    ExtMatrix aj(dim, dim);
    for (std::size_t i = 0; i < l; ++i) {
      const Rational& pij = m2.congruence.basis(i, j);
      if (!is_zero(pij)) aj += ExtScalar(pij) * m1.images[i];
    }
    a_inv.push_back(ExtScalar(Rational(1) / m2.q[j]) * aj);
    a_gen.push_back(std::move(aj));
  }
  std::vector<ExtMatrix> rho2_inv;
  for (std::size_t j = 0; j < l; ++j) rho2_inv.push_back(ExtScalar(Rational(1) / m2.q[j]) * m2.rho[j]);

  const auto left = subset_products(m2.rho, true, dim);
  const auto right = subset_products(a_inv, false, dim);
  const auto back_left = subset_products(a_gen, true, dim);
  const auto back_right = subset_products(rho2_inv, false, dim);

  for (std::size_t b = 0; b < dim; ++b)
    for (std::size_t a = 0; a < dim; ++a) {
      if (m2.parity[a] != m1.parity[b]) continue;
      ExtMatrix t = average_unit(left, right, a, b);
      if (t.is_zero()) continue;
      for (std::size_t i = 0; i < l; ++i)
        if (!(t * m1.images[i] == m2.images[i] * t)) {
          throw Error(ErrorKind::VerificationFailed, "averaged map fails to intertwine");
        }
      // Certify invertibility: T S = c I with c ≠ 0 for a reverse average S.
      for (std::size_t bb = 0; bb < dim; ++bb)
        for (std::size_t aa = 0; aa < dim; ++aa) {
          if (m1.parity[aa] != m2.parity[bb]) continue;
          const ExtMatrix s = average_unit(back_left, back_right, aa, bb);
          if (s.is_zero()) continue;
          const ExtMatrix ts = t * s;
          const ExtScalar c = ts(0, 0);
          if (is_zero(c) || !(ts == c * ExtMatrix::identity(dim))) {
            throw Error(ErrorKind::VerificationFailed, "intertwiner is not invertible");
          }
          out.equivalent = true;
          out.intertwiner = std::move(t);
          out.reason = "even intertwiner found";
          return out;
        }
      throw Error(ErrorKind::VerificationFailed, "no reverse intertwiner found");
    }
  out.reason = "no even intertwiner exists";
  return out;
}

}  // namespace superorbit
