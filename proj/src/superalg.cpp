#include "superorbit/superalg.hpp"

#include <sstream>

#include "superorbit/error.hpp"

namespace superorbit {

namespace {

std::vector<std::string> default_names(std::size_t n, std::vector<std::string> names) {
  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  }
  if (names.size() != n) {
    throw Error(ErrorKind::DimensionMismatch,
                "expected " + std::to_string(n) + " basis names, got " + std::to_string(names.size()));
  }
  return names;
}

void require_size(const LieSuperalgebra& l, const Element& v) {
  if (v.size() != l.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "element has " + std::to_string(v.size()) +
                                                  " coordinates, algebra has dimension " +
                                                  std::to_string(l.dim()));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Elements

bool is_zero(const Element& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

Element add(const Element& a, const Element& b) {
  Element out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Element sub(const Element& a, const Element& b) {
  Element out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

Element scale(const Rational& s, const Element& a) {
  Element out = a;
  for (auto& x : out) x *= s;
  return out;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Element even_projection(const LieSuperalgebra& algebra, const Element& v) {
  require_size(algebra, v);
  Element out(v.size());
  for (std::size_t i = 0; i < algebra.dim_even(); ++i) out[i] = v[i];
  return out;
}

Element odd_projection(const LieSuperalgebra& algebra, const Element& v) {
  require_size(algebra, v);
  Element out(v.size());
  for (std::size_t i = algebra.dim_even(); i < v.size(); ++i) out[i] = v[i];
  return out;
}

bool is_homogeneous(const LieSuperalgebra& algebra, const Element& v) {
  return is_zero(even_projection(algebra, v)) || is_zero(odd_projection(algebra, v));
}

Parity parity_of(const LieSuperalgebra& algebra, const Element& v) {
  const bool even_zero = is_zero(even_projection(algebra, v));
  const bool odd_zero = is_zero(odd_projection(algebra, v));
  if (even_zero == odd_zero) {
    throw Error(ErrorKind::PreconditionFailed, "parity is defined only for nonzero homogeneous elements");
  }
  return even_zero ? Parity::Odd : Parity::Even;
}

std::string to_string(const Element& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << to_string(v[i]);
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// LieSuperalgebra

LieSuperalgebra::LieSuperalgebra(std::size_t dim_even, std::size_t dim_odd,
                                 std::vector<std::string> names, std::vector<Element> tensor)
    : dim_even_(dim_even),
      dim_odd_(dim_odd),
      names_(default_names(dim_even + dim_odd, std::move(names))),
      tensor_(std::move(tensor)) {}

LieSuperalgebra LieSuperalgebra::build(std::size_t dim_even, std::size_t dim_odd,
                                       std::vector<std::string> names,
                                       const std::vector<BracketEntry>& table) {
  const std::size_t n = dim_even + dim_odd;
  std::vector<Element> tensor(n * n, Element(n));
  std::vector<bool> seen(n * n, false);
  auto par = [&](std::size_t i) { return i < dim_even ? Parity::Even : Parity::Odd; };

  for (const auto& entry : table) {
    if (entry.i >= n || entry.j >= n) {
      throw Error(ErrorKind::DimensionMismatch, "bracket index out of range");
    }
    Element value(n);
    for (const auto& [k, c] : entry.out) {
      if (k >= n) throw Error(ErrorKind::DimensionMismatch, "bracket output index out of range");
      value[k] += c;
    }
    const int swap = sign_of_swap(par(entry.i), par(entry.j));
    Element mirrored = scale(Rational(swap), value);
    if (entry.i == entry.j && value != mirrored) {
      throw Error(ErrorKind::InconsistentAntisymmetry,
                  "[" + std::to_string(entry.i) + "," + std::to_string(entry.i) +
                      "] of an even basis element must vanish");
    }
    for (auto [a, b, v] : {std::tuple{entry.i, entry.j, &value}, std::tuple{entry.j, entry.i, &mirrored}}) {
      const std::size_t slot = a * n + b;
      if (seen[slot] && tensor[slot] != *v) {
        throw Error(ErrorKind::InconsistentAntisymmetry,
                    "pair (" + std::to_string(entry.i) + "," + std::to_string(entry.j) +
                        ") specified twice with conflicting values");
      }
      seen[slot] = true;
      tensor[slot] = *v;
    }
  }
  return from_tensor(dim_even, dim_odd, std::move(names), std::move(tensor));
}

LieSuperalgebra LieSuperalgebra::from_tensor(std::size_t dim_even, std::size_t dim_odd,
                                             std::vector<std::string> names,
                                             std::vector<Element> tensor) {
  const std::size_t n = dim_even + dim_odd;
  if (tensor.size() != n * n) throw Error(ErrorKind::DimensionMismatch, "structure tensor size");
  for (const auto& v : tensor)
    if (v.size() != n) throw Error(ErrorKind::DimensionMismatch, "structure tensor entry size");
  LieSuperalgebra l(dim_even, dim_odd, std::move(names), std::move(tensor));
  l.validate();
  return l;
}

void LieSuperalgebra::validate() const {
  const std::size_t n = dim();
  auto pos = [&](std::size_t i, std::size_t j, std::size_t k) {
    return "c[" + std::to_string(i) + "][" + std::to_string(j) + "][" + std::to_string(k) + "]";
  };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const int target = (static_cast<int>(parity(i)) + static_cast<int>(parity(j))) % 2;
      for (std::size_t k = 0; k < n; ++k) {
        if (static_cast<int>(parity(k)) != target && !is_zero(structure(i, j)[k])) {
          throw Error(ErrorKind::GradingViolation,
                      pos(i, j, k) + " = " + to_string(structure(i, j)[k]) +
                          " maps into the wrong parity block");
        }
      }
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const int swap = sign_of_swap(parity(i), parity(j));
      for (std::size_t k = 0; k < n; ++k) {
        if (structure(j, i)[k] != swap * structure(i, j)[k]) {
          throw Error(ErrorKind::InconsistentAntisymmetry,
                      pos(i, j, k) + " = " + to_string(structure(i, j)[k]) + " but " + pos(j, i, k) +
                          " = " + to_string(structure(j, i)[k]));
        }
      }
    }

  // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]] on basis triples, with
  // brackets against basis vectors expanded through the sparse structure rows.
  auto add_left = [&](Element& acc, const Rational& c, std::size_t a, const Element& v) {  // acc += c [e_a, v]
    for (std::size_t k = 0; k < n; ++k)
      if (!superorbit::is_zero(v[k]))
        for (std::size_t m = 0; m < n; ++m)
          if (!superorbit::is_zero(structure(a, k)[m])) acc[m] += c * v[k] * structure(a, k)[m];
  };
  auto add_right = [&](Element& acc, const Rational& c, const Element& v, std::size_t b) {  // acc += c [v, e_b]
    for (std::size_t k = 0; k < n; ++k)
      if (!superorbit::is_zero(v[k]))
        for (std::size_t m = 0; m < n; ++m)
          if (!superorbit::is_zero(structure(k, b)[m])) acc[m] += c * v[k] * structure(k, b)[m];
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const int sign = (parity(x) == Parity::Odd && parity(y) == Parity::Odd) ? -1 : 1;
        Element residual(n);
        add_left(residual, Rational(1), x, structure(y, z));
        add_right(residual, Rational(-1), structure(x, y), z);
        add_left(residual, Rational(-sign), y, structure(x, z));
        if (!superorbit::is_zero(residual)) {
          throw Error(ErrorKind::JacobiViolation,
                      "triple (" + names_[x] + ", " + names_[y] + ", " + names_[z] +
                          ") has residual " + to_string(residual));
        }
      }
}

Element LieSuperalgebra::basis_vector(std::size_t i) const {
  Element e(dim());
  e.at(i) = 1;
  return e;
}

Element LieSuperalgebra::bracket(const Element& x, const Element& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "bracket arguments must have dimension " + std::to_string(n));
  }
  Element out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (superorbit::is_zero(x[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (superorbit::is_zero(y[j])) continue;
      const Element& c = structure(i, j);
      const Rational w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!superorbit::is_zero(c[k])) out[k] += w * c[k];
    }
  }
  return out;
}

std::vector<BracketEntry> LieSuperalgebra::table() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i; j < dim(); ++j) {
      const Element& c = structure(i, j);
      if (superorbit::is_zero(c)) continue;
      BracketEntry e{i, j, {}};
      for (std::size_t k = 0; k < dim(); ++k)
        if (!superorbit::is_zero(c[k])) e.out.emplace_back(k, c[k]);
      out.push_back(std::move(e));
    }
  return out;
}

Element bracket(const LieSuperalgebra& algebra, const Element& x, const Element& y) {
  return algebra.bracket(x, y);
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::span(std::size_t ambient, const std::vector<Element>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient) throw Error(ErrorKind::DimensionMismatch, "spanning vector size");
  Subspace s(ambient);
  s.basis_ = QMatrix::from_rows(vectors, ambient);
  s.pivots_ = rref_in_place(s.basis_);
  return s;
}

Subspace Subspace::whole(std::size_t ambient) { return coordinate(ambient, 0, ambient); }

Subspace Subspace::coordinate(std::size_t ambient, std::size_t begin, std::size_t end) {
  std::vector<Element> vs;
  for (std::size_t i = begin; i < end; ++i) {
    Element e(ambient);
    e[i] = 1;
    vs.push_back(std::move(e));
  }
  return span(ambient, vs);
}

Element Subspace::reduce(const Element& v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "vector size vs subspace");
  Element out = v;
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const Rational f = out[pivots_[r]];
    if (superorbit::is_zero(f)) continue;
    for (std::size_t c = 0; c < ambient_; ++c) out[c] -= f * basis_(r, c);
  }
  return out;
}

bool Subspace::contains(const Element& v) const { return superorbit::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.vector(r))) return false;
  return true;
}

Element Subspace::coordinates(const Element& v) const {
  Element out(pivots_.size());
  for (std::size_t r = 0; r < pivots_.size(); ++r) out[r] = v[pivots_[r]];
  return out;
}

bool Subspace::is_graded(std::size_t dim_even) const {
  for (std::size_t r = 0; r < dim(); ++r) {
    Element even(ambient_);
    for (std::size_t c = 0; c < dim_even && c < ambient_; ++c) even[c] = basis_(r, c);
    if (!contains(even)) return false;
  }
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorKind::DimensionMismatch, "subspace sum");
  auto rows = vectors();
  for (auto& v : other.vectors()) rows.push_back(std::move(v));
  return span(ambient_, rows);
}

Subspace Subspace::annihilator() const {
  return span(ambient_, kernel(basis_).to_rows());
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorKind::DimensionMismatch, "subspace intersection");
  return annihilator().sum(other.annihilator()).annihilator();
}

Subspace even_part(const LieSuperalgebra& algebra) {
  return Subspace::coordinate(algebra.dim(), 0, algebra.dim_even());
}

Subspace odd_part(const LieSuperalgebra& algebra) {
  return Subspace::coordinate(algebra.dim(), algebra.dim_even(), algebra.dim());
}

// ---------------------------------------------------------------------------
// Series, centre, closures

Subspace bracket_span(const LieSuperalgebra& algebra, const Subspace& s, const Subspace& t) {
  std::vector<Element> out;
  for (const auto& a : s.vectors())
    for (const auto& b : t.vectors()) out.push_back(algebra.bracket(a, b));
  return Subspace::span(algebra.dim(), out);
}

CentralSeries lower_central_series(const LieSuperalgebra& algebra) {
  CentralSeries series;
  const Subspace whole = Subspace::whole(algebra.dim());
  series.terms.push_back(whole);
  while (true) {
    Subspace next = bracket_span(algebra, whole, series.terms.back());
    if (next == series.terms.back()) break;
    series.terms.push_back(next);
    if (next.is_zero()) break;
  }
  series.nilpotent = series.terms.back().is_zero();
  series.nilpotency_class = series.nilpotent && series.terms.size() >= 2 ? series.terms.size() - 1 : 0;
  return series;
}

void require_nilpotent(const LieSuperalgebra& algebra) {
  if (!lower_central_series(algebra).nilpotent) {
    throw Error(ErrorKind::NotNilpotent, "lower central series stabilises at a nonzero term");
  }
}

Subspace centralizer(const LieSuperalgebra& algebra, const Element& y) {
  const std::size_t n = algebra.dim();
  // Row k of the system: sum_i v_i [e_i, y]_k = 0.
  QMatrix system(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Element b = algebra.bracket(algebra.basis_vector(i), y);
    for (std::size_t k = 0; k < n; ++k) system(k, i) = b[k];
  }
  return Subspace::span(n, kernel(system).to_rows());
}

Subspace center(const LieSuperalgebra& algebra) {
  const std::size_t n = algebra.dim();
  QMatrix system(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Element& c = algebra.structure(i, j);
      for (std::size_t k = 0; k < n; ++k) system(j * n + k, i) = c[k];
    }
  return Subspace::span(n, kernel(system).to_rows());
}

namespace {

std::vector<Element> homogeneous_parts(const LieSuperalgebra& algebra,
                                       const std::vector<Element>& generators) {
  std::vector<Element> out;
  for (const auto& g : generators) {
    if (g.size() != algebra.dim()) throw Error(ErrorKind::DimensionMismatch, "generator size");
    out.push_back(even_projection(algebra, g));
    out.push_back(odd_projection(algebra, g));
  }
  return out;
}

}  // namespace

Subspace ideal_closure(const LieSuperalgebra& algebra, const std::vector<Element>& generators) {
  Subspace current = Subspace::span(algebra.dim(), homogeneous_parts(algebra, generators));
  while (true) {
    std::vector<Element> grown = current.vectors();
    for (const auto& v : current.vectors())
      for (std::size_t i = 0; i < algebra.dim(); ++i)
        grown.push_back(algebra.bracket(algebra.basis_vector(i), v));
    Subspace next = Subspace::span(algebra.dim(), grown);
    if (next == current) return current;
    current = std::move(next);
  }
}

Subspace subalgebra_closure(const LieSuperalgebra& algebra, const std::vector<Element>& generators) {
  Subspace current = Subspace::span(algebra.dim(), homogeneous_parts(algebra, generators));
  while (true) {
    const Subspace next = current.sum(bracket_span(algebra, current, current));
    if (next == current) return current;
    current = next;
  }
}

bool is_ideal(const LieSuperalgebra& algebra, const Subspace& s) {
  for (const auto& v : s.vectors())
    for (std::size_t i = 0; i < algebra.dim(); ++i)
      if (!s.contains(algebra.bracket(algebra.basis_vector(i), v))) return false;
  return true;
}

bool is_subalgebra(const LieSuperalgebra& algebra, const Subspace& s) {
  return s.contains(bracket_span(algebra, s, s));
}

// ---------------------------------------------------------------------------
// Quotients and restrictions

Quotient quotient(const LieSuperalgebra& algebra, const Subspace& ideal) {
  const std::size_t n = algebra.dim();
  if (ideal.ambient() != n) throw Error(ErrorKind::DimensionMismatch, "ideal ambient dimension");
  if (!ideal.is_graded(algebra.dim_even())) {
    throw Error(ErrorKind::NotGraded, "quotient requires a Z2-graded ideal");
  }
  if (!is_ideal(algebra, ideal)) throw Error(ErrorKind::NotAnIdeal, "subspace is not an ideal");

  std::vector<bool> pivot(n, false);
  for (auto p : ideal.pivots()) pivot[p] = true;
  Quotient q;
  std::size_t kept_even = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (pivot[i]) continue;
    q.kept.push_back(i);
    if (i < algebra.dim_even()) ++kept_even;
  }
  const std::size_t m = q.kept.size();
  q.projection = QMatrix(m, n);
  q.section = QMatrix(n, m);
  for (std::size_t c = 0; c < n; ++c) {
    const Element r = ideal.reduce(algebra.basis_vector(c));
    for (std::size_t a = 0; a < m; ++a) q.projection(a, c) = r[q.kept[a]];
  }
  for (std::size_t a = 0; a < m; ++a) q.section(q.kept[a], a) = 1;

  std::vector<std::string> names;
  for (auto k : q.kept) names.push_back(algebra.names()[k]);
  std::vector<Element> tensor(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      tensor[a * m + b] = q.projection.apply(algebra.structure(q.kept[a], q.kept[b]));
  q.algebra = LieSuperalgebra::from_tensor(kept_even, m - kept_even, std::move(names), std::move(tensor));
  return q;
}

Restriction restrict_to(const LieSuperalgebra& algebra, const Subspace& s) {
  const std::size_t n = algebra.dim();
  if (s.ambient() != n) throw Error(ErrorKind::DimensionMismatch, "subspace ambient dimension");
  if (!s.is_graded(algebra.dim_even())) throw Error(ErrorKind::NotGraded, "restriction needs a graded subspace");
  if (!is_subalgebra(algebra, s)) {
    throw Error(ErrorKind::PreconditionFailed, "subspace is not closed under the bracket");
  }
  const std::size_t m = s.dim();
  std::size_t even = 0;
  for (auto p : s.pivots())
    if (p < algebra.dim_even()) ++even;
  Restriction r;
  r.subspace = s;
  r.inclusion = s.echelon().transpose();
  std::vector<std::string> names;
  for (std::size_t a = 0; a < m; ++a) {
    const Element v = s.vector(a);
    std::size_t nonzero = 0;
    std::size_t where = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (!superorbit::is_zero(v[k])) {
        ++nonzero;
        where = k;
      }
    names.push_back(nonzero == 1 && v[where] == 1 ? algebra.names()[where] : "b" + std::to_string(a));
  }
  std::vector<Element> tensor(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      tensor[a * m + b] = s.coordinates(algebra.bracket(s.vector(a), s.vector(b)));
  r.algebra = LieSuperalgebra::from_tensor(even, m - even, std::move(names), std::move(tensor));
  return r;
}

}  // namespace superorbit
