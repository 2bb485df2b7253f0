#include "superorbit/extring.hpp"

#include "superorbit/error.hpp"

namespace superorbit {

namespace {

/// n = r^2 * m with m square-free; returns {r, m}.
std::pair<mpz_class, mpz_class> squarefree_split(mpz_class n) {
  mpz_class r = 1;
  mpz_class m = 1;
  for (mpz_class p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (unsigned k = 0; k < e / 2; ++k) r *= p;
    if (e % 2 == 1) m *= p;
  }
  m *= n;  // remaining factor is 1 or a prime
  return {r, m};
}

}  // namespace

ExtScalar::ExtScalar(const Gauss& value) { add_term(1, value); }

ExtScalar ExtScalar::sqrt(const Rational& q) {
  if (sgn(q) < 0) throw Error(ErrorKind::PreconditionFailed, "square root of a negative rational");
  ExtScalar out;
  if (sgn(q) == 0) return out;
  // sqrt(a/b) = sqrt(a b) / b
  const auto [r, m] = squarefree_split(q.get_num() * q.get_den());
  Rational coeff(r, q.get_den());
  coeff.canonicalize();
  out.add_term(m, Gauss(coeff));
  return out;
}

void ExtScalar::add_term(const mpz_class& radicand, const Gauss& coeff) {
  if (superorbit::is_zero(coeff)) return;
  auto it = terms_.find(radicand);
  if (it == terms_.end()) {
    terms_.emplace(radicand, coeff);
    return;
  }
  it->second += coeff;
  if (superorbit::is_zero(it->second)) terms_.erase(it);
}

ExtScalar ExtScalar::conj() const {
  ExtScalar out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c.conj());
  return out;
}

ExtScalar& ExtScalar::operator+=(const ExtScalar& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ExtScalar& ExtScalar::operator-=(const ExtScalar& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ExtScalar& ExtScalar::operator*=(const ExtScalar& o) {
  ExtScalar out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      // sqrt(m1) sqrt(m2) = g sqrt((m1/g)(m2/g)) with g = gcd(m1, m2)
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
      const mpz_class m = (m1 / g) * (m2 / g);
      out.add_term(m, c1 * c2 * Gauss(Rational(g)));
    }
  terms_ = std::move(out.terms_);
  return *this;
}

std::string to_string(const ExtScalar& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    std::string coeff = to_string(c);
    if (m == 1) {
      out += coeff;
    } else {
      if (!superorbit::is_zero(c.re) && !superorbit::is_zero(c.im)) coeff = "(" + coeff + ")";
      out += (coeff == "1" ? "" : coeff + "*") + "sqrt(" + m.get_str() + ")";
    }
  }
  return out;
}

ExtMatrix to_ext(const GMatrix& m) {
  ExtMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = ExtScalar(m(r, c));
  return out;
}

ExtMatrix adjoint(const ExtMatrix& m) {
  ExtMatrix out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c).conj();
  return out;
}

std::string to_string(const ExtMatrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? ", " : "") + to_string(m(r, c));
    out += "]";
  }
  return out + "]";
}

}  // namespace superorbit
