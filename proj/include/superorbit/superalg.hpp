#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "superorbit/matrix.hpp"
#include "superorbit/rational.hpp"

namespace superorbit {

/// Coordinates of an element in the ordered basis of an algebra: the even
/// block comes first, the odd block second.
using Element = std::vector<Rational>;

enum class Parity { Even = 0, Odd = 1 };

inline int sign_of_swap(Parity a, Parity b) {
  return (a == Parity::Odd && b == Parity::Odd) ? 1 : -1;
}

/// One row of a sparse bracket table: [e_i, e_j] = sum_k out_k e_k.
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<std::pair<std::size_t, Rational>> out;
};

/// Finite-dimensional Lie superalgebra over Q given by structure constants.
/// Instances are only produced by the validating factories, so every live
/// object satisfies grading compatibility, super-antisymmetry and the
/// super-Jacobi identity.
class LieSuperalgebra {
 public:
  LieSuperalgebra() = default;

  /// Builds from a table listing each unordered pair at most once; the other
  /// half is filled by super-antisymmetry.
  static LieSuperalgebra build(std::size_t dim_even, std::size_t dim_odd,
                               std::vector<std::string> names,
                               const std::vector<BracketEntry>& table);

  /// Validates a raw structure tensor, `tensor[i * dim + j]` being [e_i, e_j].
  static LieSuperalgebra from_tensor(std::size_t dim_even, std::size_t dim_odd,
                                     std::vector<std::string> names,
                                     std::vector<Element> tensor);

  std::size_t dim() const { return dim_even_ + dim_odd_; }
  std::size_t dim_even() const { return dim_even_; }
  std::size_t dim_odd() const { return dim_odd_; }
  const std::vector<std::string>& names() const { return names_; }

  Parity parity(std::size_t index) const { return index < dim_even_ ? Parity::Even : Parity::Odd; }

  /// [e_i, e_j] as a coordinate vector.
  const Element& structure(std::size_t i, std::size_t j) const { return tensor_[i * dim() + j]; }

  Element basis_vector(std::size_t i) const;
  Element zero() const { return Element(dim()); }

  /// Bilinear bracket of arbitrary (not necessarily homogeneous) elements.
  Element bracket(const Element& x, const Element& y) const;

  /// The sparse table of nonzero brackets with i <= j.
  std::vector<BracketEntry> table() const;

 private:
  LieSuperalgebra(std::size_t dim_even, std::size_t dim_odd, std::vector<std::string> names,
                  std::vector<Element> tensor);
  void validate() const;

  std::size_t dim_even_ = 0;
  std::size_t dim_odd_ = 0;
  std::vector<std::string> names_;
  std::vector<Element> tensor_;
};

/// Free function form of the bracket; throws DimensionMismatch on bad sizes.
Element bracket(const LieSuperalgebra& algebra, const Element& x, const Element& y);

bool is_zero(const Element& v);
bool is_homogeneous(const LieSuperalgebra& algebra, const Element& v);
/// Parity of a nonzero homogeneous element; throws PreconditionFailed otherwise.
Parity parity_of(const LieSuperalgebra& algebra, const Element& v);
Element even_projection(const LieSuperalgebra& algebra, const Element& v);
Element odd_projection(const LieSuperalgebra& algebra, const Element& v);

Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element scale(const Rational& s, const Element& a);
Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

/// Subspace of Q^n held in reduced row-echelon form, so two subspaces are
/// equal exactly when their echelon matrices are equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Element>& vectors);
  static Subspace whole(std::size_t ambient);
  /// span{e_begin, ..., e_{end-1}}
  static Subspace coordinate(std::size_t ambient, std::size_t begin, std::size_t end);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }

  const QMatrix& echelon() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Element> vectors() const { return basis_.to_rows(); }
  Element vector(std::size_t r) const { return basis_.row(r); }

  bool contains(const Element& v) const;
  bool contains(const Subspace& other) const;

  /// v minus the combination of echelon rows matching it on the pivots.
  Element reduce(const Element& v) const;
  /// Coordinates of v (assumed to lie in the subspace) in the echelon basis.
  Element coordinates(const Element& v) const;

  /// True iff S = (S ∩ span{e_0..e_{k-1}}) ⊕ (S ∩ span{e_k..}).
  bool is_graded(std::size_t dim_even) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// {y : <v, y> = 0 for all v in S} under the standard dot product.
  Subspace annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  QMatrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace even_part(const LieSuperalgebra& algebra);
Subspace odd_part(const LieSuperalgebra& algebra);

struct CentralSeries {
  std::vector<Subspace> terms;  // L, [L,L], [L,[L,L]], ... up to stabilisation
  bool nilpotent = false;
  std::size_t nilpotency_class = 0;  // c with the c-th bracket power nonzero and the next zero; abelian is 1
};

CentralSeries lower_central_series(const LieSuperalgebra& algebra);
/// Throws NotNilpotent when the lower central series does not reach zero.
void require_nilpotent(const LieSuperalgebra& algebra);

Subspace center(const LieSuperalgebra& algebra);
/// {v : [v, y] = 0}
Subspace centralizer(const LieSuperalgebra& algebra, const Element& y);
Subspace bracket_span(const LieSuperalgebra& algebra, const Subspace& s, const Subspace& t);
/// Smallest ideal containing the generators; non-homogeneous generators are
/// first split into their parity projections so the result is graded.
Subspace ideal_closure(const LieSuperalgebra& algebra, const std::vector<Element>& generators);
Subspace subalgebra_closure(const LieSuperalgebra& algebra, const std::vector<Element>& generators);

bool is_ideal(const LieSuperalgebra& algebra, const Subspace& s);
bool is_subalgebra(const LieSuperalgebra& algebra, const Subspace& s);

struct Quotient {
  LieSuperalgebra algebra;
  QMatrix projection;  // dim(L/I) x dim(L)
  QMatrix section;     // dim(L) x dim(L/I); the non-pivot coordinate lift
  std::vector<std::size_t> kept;  // ambient indices of the complement coordinates
};

/// L / ideal on the complement spanned by the non-pivot coordinates of the
/// ideal's echelon basis.
Quotient quotient(const LieSuperalgebra& algebra, const Subspace& ideal);

struct Restriction {
  LieSuperalgebra algebra;  // the subalgebra in its echelon basis
  QMatrix inclusion;        // dim(L) x dim(S), columns are the echelon rows
  Subspace subspace;
};

/// The graded subalgebra S as an algebra in its own right.
Restriction restrict_to(const LieSuperalgebra& algebra, const Subspace& s);

std::string to_string(const Element& v);

}  // namespace superorbit
