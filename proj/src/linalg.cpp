#include "superorbit/matrix.hpp"

namespace superorbit {

const char* to_string(FormVerdict verdict) {
  switch (verdict) {
    case FormVerdict::Zero: return "Zero";
    case FormVerdict::PositiveDefinite: return "PositiveDefinite";
    case FormVerdict::PositiveSemidefinite: return "PositiveSemidefinite";
    case FormVerdict::NegativeSemidefinite: return "NegativeSemidefinite";
    case FormVerdict::Indefinite: return "Indefinite";
  }
  return "?";
}

Congruence congruence_diagonalize(const QMatrix& gram) {
  const std::size_t n = gram.rows();
  if (gram.cols() != n) throw Error(ErrorKind::DimensionMismatch, "gram matrix must be square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gram(i, j) != gram(j, i)) {
        throw Error(ErrorKind::PreconditionFailed, "gram matrix is not symmetric");
      }

  QMatrix a = gram;
  QMatrix p = QMatrix::identity(n);

  // Column op c_j += f c_k is mirrored on rows so `a` stays equal to PᵀGP.
  auto add_multiple = [&](std::size_t j, std::size_t k, const Rational& f) {
    for (std::size_t r = 0; r < n; ++r) a(r, j) += f * a(r, k);
    for (std::size_t c = 0; c < n; ++c) a(j, c) += f * a(k, c);
    for (std::size_t r = 0; r < n; ++r) p(r, j) += f * p(r, k);
  };
  auto swap_index = [&](std::size_t j, std::size_t k) {
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, j), a(r, k));
    for (std::size_t c = 0; c < n; ++c) std::swap(a(j, c), a(k, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(p(r, j), p(r, k));
  };

  for (std::size_t k = 0; k < n; ++k) {
    if (is_zero(a(k, k))) {
      std::size_t j = k + 1;
      while (j < n && is_zero(a(j, j))) ++j;
      if (j < n) {
        swap_index(k, j);
      } else {
        j = k + 1;
        while (j < n && is_zero(a(k, j))) ++j;
        if (j == n) continue;  // row k already zero
        // a(k,k) becomes 2 a(k,j) != 0
        add_multiple(k, j, Rational(1));
      }
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(a(i, k))) continue;
      const Rational f = -a(i, k) / a(k, k);
      add_multiple(i, k, f);
    }
  }

  Congruence out{std::move(p), std::vector<Rational>(n)};
  for (std::size_t i = 0; i < n; ++i) out.diag[i] = a(i, i);
  return out;
}

FormVerdict verdict_from_diagonal(const std::vector<Rational>& d) {
  bool pos = false;
  bool neg = false;
  bool zero = false;
  for (const auto& x : d) {
    const int s = sgn(x);
    pos |= s > 0;
    neg |= s < 0;
    zero |= s == 0;
  }
  if (pos && neg) return FormVerdict::Indefinite;
  if (neg) return FormVerdict::NegativeSemidefinite;
  if (pos) return zero ? FormVerdict::PositiveSemidefinite : FormVerdict::PositiveDefinite;
  return FormVerdict::Zero;
}

}  // namespace superorbit
