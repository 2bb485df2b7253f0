#pragma once

#include <map>
#include <string>

#include "superorbit/matrix.hpp"
#include "superorbit/rational.hpp"

namespace superorbit {

/// Element of Q(i)(√2, √3, √5, ...): a finite sum Σ c_m √m over square-free
/// positive integers m with Gaussian-rational coefficients. Square roots of
/// distinct square-free integers are linearly independent, so the term map
/// is a canonical form and equality is coefficient equality. Every element
/// lives in one field, so values coming from different quadratic towers can
/// be combined without any ring bookkeeping.
class ExtScalar {
 public:
  using Terms = std::map<mpz_class, Gauss>;

  ExtScalar() = default;
  ExtScalar(int value) : ExtScalar(Gauss(value)) {}  // NOLINT(google-explicit-constructor)
  ExtScalar(const Rational& value) : ExtScalar(Gauss(value)) {}  // NOLINT(google-explicit-constructor)
  ExtScalar(const Gauss& value);  // NOLINT(google-explicit-constructor)

  /// The nonnegative real square root of q ≥ 0.
  static ExtScalar sqrt(const Rational& q);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ExtScalar conj() const;

  ExtScalar& operator+=(const ExtScalar& o);
  ExtScalar& operator-=(const ExtScalar& o);
  ExtScalar& operator*=(const ExtScalar& o);

  friend ExtScalar operator+(ExtScalar a, const ExtScalar& b) { return a += b; }
  friend ExtScalar operator-(ExtScalar a, const ExtScalar& b) { return a -= b; }
  friend ExtScalar operator*(ExtScalar a, const ExtScalar& b) { return a *= b; }
  friend ExtScalar operator-(const ExtScalar& a) { return ExtScalar(-1) * a; }
  friend bool operator==(const ExtScalar& a, const ExtScalar& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const mpz_class& radicand, const Gauss& coeff);
  Terms terms_;
};

inline bool is_zero(const ExtScalar& x) { return x.is_zero(); }
std::string to_string(const ExtScalar& x);

using ExtMatrix = Matrix<ExtScalar>;

ExtMatrix to_ext(const GMatrix& m);
/// Conjugate transpose (i ↦ -i, square roots are real).
ExtMatrix adjoint(const ExtMatrix& m);
std::string to_string(const ExtMatrix& m);

}  // namespace superorbit
