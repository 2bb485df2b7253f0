#include "doctest.h"
#include "oracles.hpp"
#include "superorbit/cliffmod.hpp"
#include "superorbit/error.hpp"
#include "superorbit/extring.hpp"
#include "superorbit/models.hpp"

using namespace superorbit;

namespace {

QMatrix q(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<Rational>> r;
  for (auto row : rows) {
    r.emplace_back();
    for (int x : row) r.back().emplace_back(x);
  }
  return QMatrix::from_rows(r, r.empty() ? 0 : r[0].size());
}

ExtMatrix scalar(std::size_t n, const ExtScalar& s) { return s * ExtMatrix::identity(n); }

bool is_odd_matrix(const ExtMatrix& m, const std::vector<int>& parity) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (parity[r] == parity[c] && !m(r, c).is_zero()) return false;
  return true;
}

// parity-preserving as a map from a space graded by `from` to one graded by `to`
bool is_even_map(const ExtMatrix& m, const std::vector<int>& from, const std::vector<int>& to) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (to[r] != from[c] && !m(r, c).is_zero()) return false;
  return true;
}

}  // namespace

TEST_SUITE("cliffmod") {
  TEST_CASE("square roots in the extension field") {
    const ExtScalar r2 = ExtScalar::sqrt(Rational(2));
    const ExtScalar r3 = ExtScalar::sqrt(Rational(3));
    CHECK(r2 * r2 == ExtScalar(2));
    CHECK(r2 * r3 == ExtScalar::sqrt(Rational(6)));
    CHECK(ExtScalar::sqrt(Rational(8)) == ExtScalar(2) * r2);
    CHECK(ExtScalar::sqrt(ratio(1, 2)) == ExtScalar(ratio(1, 2)) * r2);
    CHECK(ExtScalar::sqrt(ratio(9, 4)) == ExtScalar(ratio(3, 2)));
    CHECK(to_string(ExtScalar(ratio(1, 2)) * r2) == "1/2*sqrt(2)");
    CHECK((r2 + r3) * (r2 - r3) == ExtScalar(-1));
    CHECK(ExtScalar(Gauss(0, 1)).conj() == ExtScalar(Gauss(0, -1)));
    CHECK(std::abs(oracle::approx(r2 * ExtScalar(Gauss(1, 1))) - std::complex<double>(std::sqrt(2.0), std::sqrt(2.0))) <
          1e-12);
  }

  TEST_CASE("form diagonalization") {
    const Congruence id = diagonalize_form(QMatrix::identity(2));
    CHECK(id.basis == QMatrix::identity(2));
    CHECK(id.diag == std::vector<Rational>{1, 1});
    const Congruence c = diagonalize_form(q({{2, 1}, {1, 2}}));
    CHECK(c.diag == std::vector<Rational>{2, ratio(3, 2)});
    CHECK(is_zero(c.basis(1, 0)));
    CHECK_THROWS_AS(diagonalize_form(q({{1, 2}, {2, 1}})), Error);
  }

  TEST_CASE("gamma matrices") {
    const auto g1 = gamma_matrices(1);
    REQUIRE(g1.size() == 1);
    CHECK(g1[0] == GMatrix::from_rows({{Gauss(0), Gauss(1)}, {Gauss(1), Gauss(0)}}, 2));
    const auto g2 = gamma_matrices(2);
    REQUIRE(g2.size() == 2);
    CHECK(g2[1] == GMatrix::from_rows({{Gauss(0), Gauss(0, -1)}, {Gauss(0, 1), Gauss(0)}}, 2));
    for (std::size_t l = 1; l <= 6; ++l) {
      const auto g = gamma_matrices(l);
      const std::size_t d = spinor_dim(l);
      CHECK(g.size() == l);
      for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) {
          GMatrix ac = g[i] * g[j] + g[j] * g[i];
          GMatrix want = GMatrix::identity(d);
          want.scale(Gauss(i == j ? 2 : 0));
          CHECK(ac == want);
        }
    }
  }

  TEST_CASE("module examples") {
    const auto c11 = heisenberg_clifford({0, 1, {1}});
    const CliffordModule m = clifford_module(c11, {Rational(1)});
    CHECK(m.dim() == 2);
    const ExtScalar s = m.rho[0](0, 1);
    CHECK(s * s == ExtScalar(ratio(1, 2)));
    CHECK(m.rho[0] * m.rho[0] == scalar(2, ExtScalar(ratio(1, 2))));

    const auto c12 = heisenberg_clifford({0, 2, {1, 1}});
    const CliffordModule m2 = clifford_module(c12, {Rational(2)});
    CHECK(m2.dim() == 2);
    for (const auto& r : m2.images) CHECK(r * r == ExtMatrix::identity(2));

    const CliffordModule t = clifford_module(c12, {Rational(0)});
    CHECK(t.trivial());
    CHECK(t.dim() == 1);
    CHECK(t.parity == std::vector<int>{0});
    for (const auto& r : t.images) CHECK(r.is_zero());
  }

  TEST_CASE("module relations hold exactly for random positive definite grams") {
    oracle::Sampler s(31);
    for (std::size_t l = 1; l <= 5; ++l) {
      for (int trial = 0; trial < 5; ++trial) {
        const oracle::Mat g = s.positive_definite(l);
        const Rational a = ratio(s.integer(1, 4), s.integer(1, 3));
        const CliffordModule m = clifford_module_from_gram(QMatrix::from_rows(g, l), a);
        CHECK(verify_module(m).empty());
        CHECK(m.dim() == spinor_dim(l));
        for (std::size_t i = 0; i < l; ++i) {
          CHECK(is_odd_matrix(m.images[i], m.parity));
          CHECK(adjoint(m.images[i]) == m.images[i]);
          for (std::size_t j = 0; j < l; ++j) {
            const ExtMatrix ac = m.images[i] * m.images[j] + m.images[j] * m.images[i];
            CHECK(ac == scalar(m.dim(), ExtScalar(g[i][j] * a)));
            // floating-point shadow of the same identity
            const auto x = oracle::approx(ac(0, 0));
            CHECK(std::abs(x - std::complex<double>(Rational(g[i][j] * a).get_d(), 0)) < 1e-9);
          }
        }
      }
    }
  }

  TEST_CASE("parity change") {
    const auto c = heisenberg_clifford({0, 2, {1, 1}});
    const CliffordModule m = clifford_module(c, {Rational(1)});
    const CliffordModule pp = parity_change(parity_change(m));
    CHECK(pp.parity == m.parity);
    CHECK(pp.images.size() == m.images.size());
    for (std::size_t i = 0; i < m.images.size(); ++i) CHECK(pp.images[i] == m.images[i]);
  }

  TEST_CASE("parity change is an equivalence exactly for odd l") {
    for (std::size_t l = 1; l <= 5; ++l) {
      const auto c = heisenberg_clifford({0, l, std::vector<int>(l, 1)});
      const CliffordModule m = clifford_module(c, {Rational(1)});
      const CliffordModule p = parity_change(m);
      const Equivalence e = module_equivalent(m, p);
      CAPTURE(l);
      CHECK(e.equivalent == (l % 2 == 1));
      if (e.equivalent) {
        REQUIRE(e.intertwiner);
        const ExtMatrix& t = *e.intertwiner;
        CHECK(is_even_map(t, m.parity, p.parity));
        for (std::size_t i = 0; i < l; ++i) CHECK(t * m.images[i] == p.images[i] * t);
      } else {
        // the product of all generators has opposite traces on the even part
        ExtMatrix vol = ExtMatrix::identity(m.dim());
        ExtMatrix volp = ExtMatrix::identity(m.dim());
        for (std::size_t i = 0; i < l; ++i) {
          vol = vol * m.images[i];
          volp = volp * p.images[i];
        }
        ExtScalar tr, trp;
        for (std::size_t k = 0; k < m.dim(); ++k) {
          if (m.parity[k] == 0) tr += vol(k, k);
          if (p.parity[k] == 0) trp += volp(k, k);
        }
        CHECK_FALSE(tr.is_zero());
        CHECK(tr == -trp);
      }
    }
  }

  TEST_CASE("equivalence under a change of diagonalizing basis") {
    const QMatrix g = QMatrix::identity(2);
    const CliffordModule m1 = clifford_module_from_gram(g, Rational(1));
    Congruence other{q({{1, 1}, {-1, 1}}), {Rational(2), Rational(2)}};
    const CliffordModule m2 = clifford_module_from_gram(g, Rational(1), other);
    CHECK(verify_module(m2).empty());
    const Equivalence e = module_equivalent(m1, m2);
    CHECK(e.equivalent);
    CHECK(module_equivalent(m1, m1).equivalent);

    const CliffordModule scaled = clifford_module_from_gram(g, Rational(2));
    CHECK_FALSE(module_equivalent(m1, scaled).equivalent);
    CHECK_THROWS_AS(module_equivalent(m1, clifford_module_from_gram(QMatrix::identity(3), Rational(1))), Error);
  }

  TEST_CASE("module_from_gram rejects bad input") {
    CHECK_THROWS_AS(clifford_module_from_gram(q({{1, 0}, {0, -1}}), Rational(1)), Error);
    CHECK_THROWS_AS(clifford_module(heisenberg_clifford({1, 1, {1}}), {Rational(1), Rational(0), Rational(0)}),
                    Error);
  }
}
