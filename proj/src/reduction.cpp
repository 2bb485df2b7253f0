#include "superorbit/reduction.hpp"

#include <algorithm>

#include "superorbit/error.hpp"

namespace superorbit {

namespace {

using Poly = std::vector<Rational>;  // low degree first

void trim(Poly& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn;
  mpz_class rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

QMatrix restrict_form(const QMatrix& g, const std::vector<Element>& basis) {
  const std::size_t k = basis.size();
  QMatrix out(k, k);
  for (std::size_t p = 0; p < k; ++p) {
    const Element gp = g.apply(basis[p]);
    for (std::size_t q = 0; q < k; ++q) out(q, p) = dot(basis[q], gp);
  }
  return out;
}

bool is_diagonal(const QMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && !is_zero(m(i, j))) return false;
  return true;
}

Element combine(const std::vector<Element>& basis, const Element& coeffs, std::size_t size) {
  Element out(size);
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!is_zero(coeffs[k])) out = add(out, scale(coeffs[k], basis[k]));
  return out;
}

/// Solutions of the quadratic system on a 2-plane, in plane coordinates.
struct PlaneSolutions {
  std::vector<Element> rational_directions;
  bool whole_plane = false;
};

PlaneSolutions solve_plane(const std::vector<QMatrix>& forms) {
  PlaneSolutions out;
  bool all_a_zero = true;
  std::vector<Poly> polys;
  for (const auto& h : forms) {
    all_a_zero = all_a_zero && is_zero(h(0, 0));
    // (u, 1) is a solution iff a u^2 + 2 b u + c = 0
    polys.push_back({h(1, 1), 2 * h(0, 1), h(0, 0)});
  }
  if (all_a_zero) out.rational_directions.push_back({Rational(1), Rational(0)});

  Poly g;
  for (const auto& p : polys) g = poly_gcd(g, p);
  trim(g);
  if (g.size() == 2) {
    out.rational_directions.push_back({-g[0] / g[1], Rational(1)});
  } else if (g.size() == 3) {
    const Rational disc = g[1] * g[1] - 4 * g[2] * g[0];
    if (sgn(disc) > 0) {
      if (auto root = rational_sqrt(disc)) {
        Rational u1 = (-g[1] + *root) / (2 * g[2]);
        Rational u2 = (-g[1] - *root) / (2 * g[2]);
        if (u1 < u2) std::swap(u1, u2);  // larger root first: u^2 - 1 gives (1,1) before (-1,1)
        out.rational_directions.push_back({u1, Rational(1)});
        out.rational_directions.push_back({u2, Rational(1)});
      } else {
        out.whole_plane = true;  // two irrational conjugate real roots
      }
    } else if (is_zero(disc)) {
      out.rational_directions.push_back({-g[1] / (2 * g[2]), Rational(1)});
    }
  }
  if (rank(QMatrix::from_rows(out.rational_directions, 2)) == 2) out.whole_plane = true;
  return out;
}

/// Support of the cone {u ≥ 0 : H u = 0}, where H stacks the diagonals of the
/// forms. Each extreme ray has a support S on which the column kernel is a
/// line spanned by a strictly one-signed vector.
std::vector<bool> diagonal_support(const std::vector<QMatrix>& forms, std::size_t k,
                                   std::vector<Element>& rays) {
  std::vector<bool> support(k, false);
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<std::size_t> cols;
    for (std::size_t a = 0; a < k; ++a)
      if (mask & (1u << a)) cols.push_back(a);
    QMatrix h(forms.size(), cols.size());
    for (std::size_t f = 0; f < forms.size(); ++f)
      for (std::size_t c = 0; c < cols.size(); ++c) h(f, c) = forms[f](cols[c], cols[c]);
    const QMatrix ker = kernel(h);
    if (ker.rows() != 1) continue;
    const Element u = ker.row(0);
    const int s = sgn(u[0]);
    bool one_signed = s != 0;
    for (const auto& x : u) one_signed = one_signed && sgn(x) == s;
    if (!one_signed) continue;
    Element full(k);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      support[cols[c]] = true;
      full[cols[c]] = s * u[c];
    }
    rays.push_back(std::move(full));
  }
  return support;
}

/// Coefficient vectors tried when looking for a semidefinite combination.
std::vector<Element> combination_candidates(std::size_t count) {
  std::vector<Element> out;
  for (std::size_t k = 0; k < count; ++k)
    for (int s : {1, -1}) {
      Element c(count);
      c[k] = s;
      out.push_back(std::move(c));
    }
  for (std::size_t k = 0; k < count; ++k)
    for (std::size_t l = k + 1; l < count; ++l)
      for (int s : {1, -1})
        for (int t : {1, -1}) {
          Element c(count);
          c[k] = s;
          c[l] = t;
          out.push_back(std::move(c));
        }
  return out;
}

}  // namespace

IsotropicSearch isotropic_generators(const LieSuperalgebra& algebra, const Subspace& modulo) {
  const std::size_t n = algebra.dim();
  const std::size_t de = algebra.dim_even();
  const std::size_t r = algebra.dim_odd();
  if (modulo.ambient() != n) throw Error(ErrorKind::DimensionMismatch, "modulo subspace size");

  // Linear functionals on the even part cutting out modulo ∩ even.
  const Subspace m_even = modulo.intersect(even_part(algebra));
  QMatrix even_rows(m_even.dim(), de);
  for (std::size_t a = 0; a < m_even.dim(); ++a)
    for (std::size_t c = 0; c < de; ++c) even_rows(a, c) = m_even.echelon()(a, c);
  const QMatrix covectors = kernel(even_rows);

  std::vector<QMatrix> forms;
  for (std::size_t f = 0; f < covectors.rows(); ++f) {
    QMatrix g(r, r);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) {
        const Element& c = algebra.structure(de + a, de + b);
        for (std::size_t k = 0; k < de; ++k) g(a, b) += covectors(f, k) * c[k];
      }
    if (!g.is_zero()) forms.push_back(std::move(g));
  }

  // The solution set is invariant under translation by modulo ∩ odd, so the
  // search runs on the complementary coordinates.
  const Subspace m_odd = modulo.intersect(odd_part(algebra));
  std::vector<bool> pivot(r, false);
  for (auto p : m_odd.pivots()) pivot[p - de] = true;
  std::vector<Element> w;
  for (std::size_t a = 0; a < r; ++a) {
    if (pivot[a]) continue;
    Element e(r);
    e[a] = 1;
    w.push_back(std::move(e));
  }

  std::vector<Element> found;      // spanning solutions, odd coordinates
  std::vector<Element> witnesses;  // genuine rational solutions, odd coordinates
  bool certified = true;

  while (true) {
    std::vector<QMatrix> restricted;
    for (const auto& g : forms) {
      QMatrix h = restrict_form(g, w);
      if (!h.is_zero()) restricted.push_back(std::move(h));
    }
    const std::size_t k = w.size();
    if (restricted.empty()) {
      found = w;
      witnesses = w;
      break;
    }
    if (k <= 2) {
      if (k == 2) {
        const PlaneSolutions sol = solve_plane(restricted);
        for (const auto& d : sol.rational_directions) witnesses.push_back(combine(w, d, r));
        found = sol.whole_plane ? w : witnesses;
      }
      break;
    }
    if (std::all_of(restricted.begin(), restricted.end(), is_diagonal)) {
      std::vector<Element> rays;
      const auto support = diagonal_support(restricted, k, rays);
      for (std::size_t a = 0; a < k; ++a)
        if (support[a]) found.push_back(w[a]);
      for (const auto& u : rays) {
        Rational c;
        for (const auto& x : u)
          if (!is_zero(x)) {
            c = x;
            break;
          }
        Element y(k);
        bool rational = true;
        for (std::size_t a = 0; a < k && rational; ++a) {
          auto root = rational_sqrt(c * u[a]);
          rational = root.has_value();
          if (rational) y[a] = *root;
        }
        if (rational) witnesses.push_back(combine(w, y, r));
      }
      break;
    }

    bool shrunk = false;
    for (const auto& coeffs : combination_candidates(restricted.size())) {
      QMatrix q(k, k);
      for (std::size_t f = 0; f < restricted.size(); ++f)
        if (!is_zero(coeffs[f])) q += coeffs[f] * restricted[f];
      if (q.is_zero()) continue;
      const FormVerdict v = verdict_from_diagonal(congruence_diagonalize(q).diag);
      if (v != FormVerdict::PositiveDefinite && v != FormVerdict::PositiveSemidefinite) continue;
      // Every solution x has x^T q x = 0, hence q x = 0 for semidefinite q.
      std::vector<Element> next;
      for (const auto& c : kernel(q).to_rows()) next.push_back(combine(w, c, r));
      w = std::move(next);
      shrunk = true;
      break;
    }
    if (shrunk) continue;

    // Outside the certified regimes: sound but possibly incomplete.
    certified = false;
    QMatrix stacked(restricted.size() * k, k);
    for (std::size_t f = 0; f < restricted.size(); ++f)
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) stacked(f * k + a, b) = restricted[f](a, b);
    for (const auto& c : kernel(stacked).to_rows()) {
      witnesses.push_back(combine(w, c, r));
      found.push_back(witnesses.back());
    }
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t q = p + 1; q < k; ++q) {
        const std::vector<Element> plane{w[p], w[q]};
        std::vector<QMatrix> pf;
        for (const auto& g : forms) pf.push_back(restrict_form(g, plane));
        const PlaneSolutions sol = solve_plane(pf);
        for (const auto& d : sol.rational_directions) {
          witnesses.push_back(combine(plane, d, r));
          found.push_back(witnesses.back());
        }
        if (sol.whole_plane) {
          found.push_back(w[p]);
          found.push_back(w[q]);
        }
      }
    break;
  }

  auto embed = [&](const Element& v) {
    Element e(n);
    for (std::size_t a = 0; a < r; ++a) e[de + a] = v[a];
    return e;
  };
  IsotropicSearch out;
  std::vector<Element> spanning = m_odd.vectors();
  for (const auto& v : found) spanning.push_back(embed(v));
  out.span = Subspace::span(n, spanning);
  for (const auto& v : witnesses)
    if (!is_zero(v)) out.witnesses.push_back(embed(v));
  out.certified = certified;
  return out;
}

ReducedForm a_radical(const LieSuperalgebra& algebra) {
  ReducedForm out;
  out.original = algebra;
  out.certified_complete = true;
  Subspace current(algebra.dim());
  // Strict ascent raises the dimension, so dim + 1 rounds always suffice.
  for (std::size_t round = 0; round <= algebra.dim(); ++round) {
    const IsotropicSearch search = isotropic_generators(algebra, current);
    out.certified_complete = out.certified_complete && search.certified;
    std::vector<Element> gens = current.vectors();
    for (const auto& v : search.span.vectors()) gens.push_back(v);
    Subspace next = ideal_closure(algebra, gens);
    if (next == current) break;
    current = std::move(next);
    out.chain.push_back(current);
  }
  out.a_radical = current;
  out.quotient = quotient(algebra, current);
  return out;
}

const char* to_string(ReducedStatus status) {
  switch (status) {
    case ReducedStatus::Reduced: return "Reduced";
    case ReducedStatus::NotReduced: return "NotReduced";
    case ReducedStatus::Unknown: return "Unknown";
  }
  return "?";
}

ReducedVerdict is_reduced(const LieSuperalgebra& algebra) {
  const IsotropicSearch search = isotropic_generators(algebra, Subspace(algebra.dim()));
  ReducedVerdict out;
  if (!search.span.is_zero()) {
    out.status = ReducedStatus::NotReduced;
    if (!search.witnesses.empty()) out.witness = search.witnesses.front();
  } else {
    out.status = search.certified ? ReducedStatus::Reduced : ReducedStatus::Unknown;
  }
  return out;
}

CliffordRecognition recognize_clifford(const LieSuperalgebra& algebra) {
  CliffordRecognition out;
  const std::size_t de = algebra.dim_even();
  const std::size_t r = algebra.dim_odd();
  if (algebra.dim() == 0) {
    out.is_clifford = true;
    out.reason = "zero algebra";
    return out;
  }
  if (de != 1) {
    out.reason = "even part has dimension " + std::to_string(de);
    return out;
  }
  out.gram = QMatrix(r, r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) out.gram(a, b) = algebra.structure(1 + a, 1 + b)[0];
  if (r == 0) {
    out.is_clifford = true;
    out.z_generator = algebra.basis_vector(0);
    out.congruence = congruence_diagonalize(out.gram);
    out.reason = "one-dimensional even algebra";
    return out;
  }
  if (!(center(algebra) == even_part(algebra))) {
    out.reason = "centre differs from the even part";
    return out;
  }
  Congruence cong = congruence_diagonalize(out.gram);
  const bool all_negative =
      std::all_of(cong.diag.begin(), cong.diag.end(), [](const Rational& x) { return sgn(x) < 0; });
  Element z = algebra.basis_vector(0);
  if (all_negative) {
    // Use -e_0 as the central generator so that the form becomes positive.
    z = scale(Rational(-1), z);
    out.gram = -out.gram;
    cong = congruence_diagonalize(out.gram);
  }
  out.congruence = cong;
  out.verdict = verdict_from_diagonal(cong.diag);
  if (out.verdict == FormVerdict::PositiveDefinite) {
    out.is_clifford = true;
    out.z_generator = z;
    out.reason = "odd form definite";
    return out;
  }
  for (std::size_t a = 0; a < r; ++a) {
    if (sgn(cong.diag[a]) <= 0) {
      Element v(algebra.dim());
      for (std::size_t b = 0; b < r; ++b) v[1 + b] = cong.basis(b, a);
      out.witness = v;
      break;
    }
  }
  out.reason = std::string("odd form is ") + to_string(out.verdict);
  return out;
}

SplitOutcome kirillov_split(const LieSuperalgebra& algebra) {
  if (algebra.dim() <= 1) throw Error(ErrorKind::PreconditionFailed, "dimension must exceed 1");
  const ReducedVerdict reduced = is_reduced(algebra);
  if (reduced.status != ReducedStatus::Reduced) {
    throw Error(ErrorKind::PreconditionFailed,
                std::string("algebra is not certified reduced (") + to_string(reduced.status) + ")");
  }
  const Subspace z_space = center(algebra);
  if (z_space.dim() != 1) {
    throw Error(ErrorKind::PreconditionFailed,
                "centre has dimension " + std::to_string(z_space.dim()) + ", expected 1");
  }
  const Element z = z_space.vector(0);

  // Z^1: preimage of the centre of L / Z(L).
  const Quotient q = quotient(algebra, z_space);
  std::vector<Element> lifted = z_space.vectors();
  for (const auto& c : center(q.algebra).vectors()) lifted.push_back(q.section.apply(c));
  const Subspace z1_even = Subspace::span(algebra.dim(), lifted).intersect(even_part(algebra));

  std::optional<Element> y;
  // the last echelon row outside the centre, i.e. the one with the highest pivot
  for (std::size_t a = z1_even.dim(); a-- > 0;) {
    if (!z_space.contains(z1_even.vector(a))) {
      y = z1_even.vector(a);
      break;
    }
  }

  SplitOutcome out;
  if (!y) {
    out.clifford = true;
    out.recognition = recognize_clifford(algebra);
    if (!out.recognition.is_clifford) {
      throw Error(ErrorKind::VerificationFailed,
                  "no split direction, yet the algebra is not of Clifford type: " + out.recognition.reason);
    }
    return out;
  }

  KirillovSplit& s = out.split;
  s.y = *y;
  s.z = z;
  const std::size_t pivot = z_space.pivots()[0];
  for (std::size_t i = 0; i < algebra.dim_even(); ++i) {
    const Element b = algebra.bracket(algebra.basis_vector(i), s.y);
    if (is_zero(b)) continue;
    // b is a multiple of z because y lies in Z^1
    s.x = scale(1 / b[pivot], algebra.basis_vector(i));
    break;
  }
  if (s.x.empty()) throw Error(ErrorKind::VerificationFailed, "no X with [X,Y] = Z");
  s.n_prime = centralizer(algebra, s.y);

  Subspace acc = Subspace::span(algebra.dim(), {s.y, s.z});
  for (const Subspace& block :
       {s.n_prime.intersect(even_part(algebra)), s.n_prime.intersect(odd_part(algebra))}) {
    for (const auto& v : block.vectors()) {
      if (acc.contains(v)) continue;
      s.w_basis.push_back(v);
      acc = acc.sum(Subspace::span(algebra.dim(), {v}));
    }
  }

  auto fail = [](const std::string& what) { throw Error(ErrorKind::VerificationFailed, what); };
  if (algebra.bracket(s.x, s.y) != s.z) fail("[X,Y] != Z");
  for (std::size_t i = 0; i < algebra.dim(); ++i)
    if (!is_zero(algebra.bracket(s.z, algebra.basis_vector(i)))) fail("Z is not central");
  for (const auto& v : s.n_prime.vectors())
    if (!is_zero(algebra.bracket(s.y, v))) fail("Y does not centralise n'");
  if (s.n_prime.dim() + 1 != algebra.dim()) fail("n' does not have codimension one");
  if (!is_subalgebra(algebra, s.n_prime)) fail("n' is not a subalgebra");
  if (!(acc == s.n_prime)) fail("span{Y, Z} + w differs from n'");
  if (s.n_prime.contains(s.x)) fail("X lies in n'");
  return out;
}

}  // namespace superorbit
