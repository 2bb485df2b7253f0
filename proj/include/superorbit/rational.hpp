#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace superorbit {

/// Exact rational scalar. GMP keeps every value canonical (reduced, positive
/// denominator) as long as values are produced by arithmetic or by
/// parse_rational.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Throws Error(ParseError) on malformed input or
/// a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// p/q in lowest terms. The two-argument mpq_class constructor does not
/// canonicalize, so integer pairs should go through here.
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Element of the Gaussian rationals Q(i).
struct Gauss {
  Rational re;
  Rational im;

  Gauss() = default;
  Gauss(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Gauss(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  Gauss(int r) : re(r) {}  // NOLINT(google-explicit-constructor)

  static Gauss i() { return {Rational(0), Rational(1)}; }

  Gauss conj() const { return {re, -im}; }

  Gauss& operator+=(const Gauss& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gauss& operator-=(const Gauss& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Gauss& operator*=(const Gauss& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Gauss& operator/=(const Gauss& o) {
    Rational n = o.re * o.re + o.im * o.im;
    Gauss q = *this * o.conj();
    re = q.re / n;
    im = q.im / n;
    return *this;
  }

  friend Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
  friend Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
  friend Gauss operator*(Gauss a, const Gauss& b) { return a *= b; }
  friend Gauss operator/(Gauss a, const Gauss& b) { return a /= b; }
  friend Gauss operator-(const Gauss& a) { return {-a.re, -a.im}; }
  friend bool operator==(const Gauss& a, const Gauss& b) {
    return a.re == b.re && a.im == b.im;
  }
};

inline bool is_zero(const Gauss& x) { return is_zero(x.re) && is_zero(x.im); }

std::string to_string(const Gauss& value);

}  // namespace superorbit
