#pragma once

#include <map>
#include <string>
#include <vector>

#include "superorbit/error.hpp"
#include "superorbit/extring.hpp"
#include "superorbit/rational.hpp"

namespace superorbit {

/// t^alpha ∂^beta in normal order (all derivatives to the right).
struct WeylMonomial {
  std::vector<unsigned> t;
  std::vector<unsigned> d;
  friend auto operator<=>(const WeylMonomial&, const WeylMonomial&) = default;
};

inline Gauss scale_coeff(const Rational& r, const Gauss& c) { return Gauss(r) * c; }
inline ExtMatrix scale_coeff(const Rational& r, const ExtMatrix& c) { return ExtScalar(r) * c; }
inline bool coeff_is_zero(const Gauss& c) { return is_zero(c); }
inline bool coeff_is_zero(const ExtMatrix& c) { return c.is_zero(); }

/// Finite sum of normal-ordered monomials in t_1..t_m, ∂_1..∂_m with
/// coefficients in `Coeff` (Gaussian rationals, or matrices for operators on
/// L² ⊗ C^N). Coefficients multiply in the order of the operator product.
template <typename Coeff>
class WeylOp {
 public:
  WeylOp() = default;
  explicit WeylOp(std::size_t vars) : vars_(vars) {}

  static WeylOp constant(std::size_t vars, const Coeff& c) {
    WeylOp op(vars);
    op.add_term(WeylMonomial{std::vector<unsigned>(vars), std::vector<unsigned>(vars)}, c);
    return op;
  }
  /// c · t_i
  static WeylOp t(std::size_t vars, std::size_t i, const Coeff& c) {
    WeylMonomial m{std::vector<unsigned>(vars), std::vector<unsigned>(vars)};
    m.t.at(i) = 1;
    WeylOp op(vars);
    op.add_term(m, c);
    return op;
  }
  /// c · ∂_i
  static WeylOp d(std::size_t vars, std::size_t i, const Coeff& c) {
    WeylMonomial m{std::vector<unsigned>(vars), std::vector<unsigned>(vars)};
    m.d.at(i) = 1;
    WeylOp op(vars);
    op.add_term(m, c);
    return op;
  }

  std::size_t vars() const { return vars_; }
  const std::map<WeylMonomial, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const WeylMonomial& m, const Coeff& c) {
    if (m.t.size() != vars_ || m.d.size() != vars_) {
      throw Error(ErrorKind::DimensionMismatch, "monomial has the wrong number of variables");
    }
    if (coeff_is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
      return;
    }
    it->second += c;
    if (coeff_is_zero(it->second)) terms_.erase(it);
  }

  WeylOp& operator+=(const WeylOp& o) {
    check_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  WeylOp& operator-=(const WeylOp& o) {
    check_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, scale_coeff(Rational(-1), c));
    return *this;
  }
  friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
  friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }

  /// Product with normal ordering: ∂^b t^c = Σ_k C(b,k) c!/(c-k)! t^(c-k) ∂^(b-k)
  /// in each variable.
  friend WeylOp operator*(const WeylOp& p, const WeylOp& q) {
    p.check_vars(q);
    WeylOp out(p.vars_);
    for (const auto& [m1, c1] : p.terms_)
      for (const auto& [m2, c2] : q.terms_) {
        const Coeff c = c1 * c2;
        // expand variable by variable; each entry is (monomial, rational factor)
        std::vector<std::pair<WeylMonomial, Rational>> partial{
            {WeylMonomial{std::vector<unsigned>(p.vars_), std::vector<unsigned>(p.vars_)}, Rational(1)}};
        for (std::size_t v = 0; v < p.vars_; ++v) {
          std::vector<std::pair<WeylMonomial, Rational>> grown;
          const unsigned b = m1.d[v];
          const unsigned cc = m2.t[v];
          for (unsigned k = 0; k <= std::min(b, cc); ++k) {
            const Rational f = binomial(b, k) * falling(cc, k);
            for (const auto& [mono, r] : partial) {
              WeylMonomial nm = mono;
              nm.t[v] = m1.t[v] + cc - k;
              nm.d[v] = b - k + m2.d[v];
              grown.emplace_back(std::move(nm), r * f);
            }
          }
          partial = std::move(grown);
        }
        for (const auto& [mono, r] : partial) out.add_term(mono, scale_coeff(r, c));
      }
    return out;
  }

  friend bool operator==(const WeylOp& a, const WeylOp& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  static Rational binomial(unsigned n, unsigned k) {
    Rational r(1);
    for (unsigned i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
  }
  static Rational falling(unsigned n, unsigned k) {
    Rational r(1);
    for (unsigned i = 0; i < k; ++i) r *= n - i;
    return r;
  }
  void check_vars(const WeylOp& o) const {
    if (o.vars_ != vars_) throw Error(ErrorKind::DimensionMismatch, "Weyl operators in different variables");
  }

  std::size_t vars_ = 0;
  std::map<WeylMonomial, Coeff> terms_;
};

template <typename Coeff>
WeylOp<Coeff> weyl_commutator(const WeylOp<Coeff>& p, const WeylOp<Coeff>& q) {
  return p * q - q * p;
}

template <typename Coeff>
WeylOp<Coeff> weyl_anticommutator(const WeylOp<Coeff>& p, const WeylOp<Coeff>& q) {
  return p * q + q * p;
}

inline std::string coeff_to_string(const Gauss& c) { return to_string(c); }
inline std::string coeff_to_string(const ExtMatrix& c) { return to_string(c); }

template <typename Coeff>
std::string to_string(const WeylOp<Coeff>& op) {
  if (op.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : op.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + coeff_to_string(c) + ")";
    for (std::size_t v = 0; v < op.vars(); ++v) {
      if (m.t[v]) out += "*t" + std::to_string(v + 1) + (m.t[v] > 1 ? "^" + std::to_string(m.t[v]) : "");
    }
    for (std::size_t v = 0; v < op.vars(); ++v) {
      if (m.d[v]) out += "*d" + std::to_string(v + 1) + (m.d[v] > 1 ? "^" + std::to_string(m.d[v]) : "");
    }
  }
  return out;
}

using WeylScalar = WeylOp<Gauss>;
using WeylMatrix = WeylOp<ExtMatrix>;

}  // namespace superorbit
