#include "doctest.h"
#include "oracles.hpp"
#include "superorbit/corpus.hpp"
#include "superorbit/error.hpp"
#include "superorbit/matrix.hpp"
#include "superorbit/models.hpp"
#include "superorbit/superalg.hpp"

using namespace superorbit;

namespace {

LieSuperalgebra heisenberg() { return corpus_entry("heisenberg").algebra; }

Element e(const LieSuperalgebra& l, std::size_t i) { return l.basis_vector(i); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& err) {
    return err.kind();
  }
  FAIL("expected an exception");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("parse and print round trip") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-7")) == "-7");
    CHECK(to_string(parse_rational("0/5")) == "0");
    CHECK(to_string(ratio(-3, 3)) == "-1");
    CHECK(kind_of([] { parse_rational("1/0"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_rational("abc"); }) == ErrorKind::ParseError);
  }

  TEST_CASE("gaussian arithmetic") {
    const Gauss i = Gauss::i();
    CHECK(i * i == Gauss(-1));
    CHECK((Gauss(1, 2) / Gauss(1, 2)) == Gauss(1));
    CHECK(Gauss(3, -4).conj() == Gauss(3, 4));
  }
}

TEST_SUITE("linalg") {
  TEST_CASE("rank agrees with a fraction-free oracle on random matrices") {
    oracle::Sampler s(11);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t r = s.integer(1, 5);
      const std::size_t c = s.integer(1, 5);
      oracle::Mat m(r, oracle::Vec(c));
      for (auto& row : m)
        for (auto& x : row) x = s.coin(0.4) ? Rational(0) : s.small_rational();
      // make some rows dependent
      if (r > 2 && s.coin(0.5)) {
        for (std::size_t j = 0; j < c; ++j) m[r - 1][j] = m[0][j] * 2 - m[1][j];
      }
      const QMatrix q = QMatrix::from_rows(m, c);
      CHECK(rank(q) == oracle::rank(m));
      const QMatrix k = kernel(q);
      CHECK(k.rows() == c - oracle::rank(m));
      CHECK((q * k.transpose()).is_zero());
    }
  }

  TEST_CASE("congruence diagonalization matches the principal-minor oracle") {
    oracle::Sampler s(12);
    for (int trial = 0; trial < 80; ++trial) {
      const std::size_t n = s.integer(1, 4);
      oracle::Mat g(n, oracle::Vec(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) g[i][j] = g[j][i] = s.coin(0.3) ? Rational(0) : s.small_rational();
      if (s.coin(0.5)) g = s.positive_definite(n);
      const QMatrix q = QMatrix::from_rows(g, n);
      const Congruence c = congruence_diagonalize(q);
      QMatrix d(n, n);
      for (std::size_t i = 0; i < n; ++i) d(i, i) = c.diag[i];
      CHECK(c.basis.transpose() * q * c.basis == d);
      CHECK(oracle::det(c.basis.to_rows()) != 0);
      const FormVerdict v = verdict_from_diagonal(c.diag);
      const bool psd = v == FormVerdict::Zero || v == FormVerdict::PositiveDefinite ||
                       v == FormVerdict::PositiveSemidefinite;
      CHECK(psd == oracle::psd(g));
    }
  }
}

TEST_SUITE("superalg") {
  TEST_CASE("building small algebras") {
    const auto h = LieSuperalgebra::build(3, 0, {}, {{0, 1, {{2, Rational(1)}}}});
    CHECK(h.dim() == 3);
    CHECK(h.names()[0] == "e0");
    const auto c = LieSuperalgebra::build(1, 1, {"Z", "V1"}, {{1, 1, {{0, Rational(1)}}}});
    CHECK(c.bracket(e(c, 1), e(c, 1)) == e(c, 0));
  }

  TEST_CASE("odd-odd bracket landing in an odd slot is a grading violation") {
    CHECK(kind_of([] {
            LieSuperalgebra::build(1, 2, {}, {{1, 1, {{0, Rational(1)}}}, {2, 2, {{0, Rational(1)}}},
                                              {1, 2, {{1, Rational(1)}}}});
          }) == ErrorKind::GradingViolation);
  }

  TEST_CASE("Jacobi failure names the offending triple") {
    // [e0,e1] = e2, [e0,e2] = e1, [e1,e2] = e0 fails Jacobi with this scaling
    try {
      LieSuperalgebra::build(3, 0, {}, {{0, 1, {{2, Rational(1)}}}, {1, 2, {{1, Rational(1)}}}});
      FAIL("accepted a non-Lie bracket");
    } catch (const Error& err) {
      CHECK(err.kind() == ErrorKind::JacobiViolation);
      CHECK(std::string(err.what()).find("(") != std::string::npos);
    }
  }

  TEST_CASE("even self-bracket must vanish") {
    CHECK(kind_of([] { LieSuperalgebra::build(2, 0, {}, {{0, 0, {{1, Rational(1)}}}}); }) ==
          ErrorKind::InconsistentAntisymmetry);
  }

  TEST_CASE("bracket values") {
    const auto h = heisenberg();
    CHECK(h.bracket(e(h, 0), e(h, 1)) == e(h, 2));
    CHECK(h.bracket(e(h, 1), e(h, 0)) == scale(Rational(-1), e(h, 2)));
    const auto hc = heisenberg_clifford({1, 1, {1}});
    CHECK(hc.bracket(e(hc, 3), e(hc, 3)) == e(hc, 0));
    oracle::Sampler s(3);
    for (int k = 0; k < 20; ++k) {
      const Element x = s.even_element(hc);
      CHECK(is_zero(hc.bracket(x, x)));
    }
  }

  TEST_CASE("lower central series") {
    const auto series = lower_central_series(heisenberg());
    REQUIRE(series.terms.size() == 3);
    CHECK(series.terms[0].dim() == 3);
    CHECK(series.terms[1].dim() == 1);
    CHECK(series.terms[2].dim() == 0);
    CHECK(series.nilpotency_class == 2);
    const auto ab = lower_central_series(corpus_entry("abelian_3").algebra);
    CHECK(ab.terms.size() == 2);
    CHECK(ab.terms.back().dim() == 0);
    const auto sl2 = LieSuperalgebra::build(
        3, 0, {"H", "E", "F"},
        {{0, 1, {{1, Rational(2)}}}, {0, 2, {{2, Rational(-2)}}}, {1, 2, {{0, Rational(1)}}}});
    const auto s = lower_central_series(sl2);
    CHECK_FALSE(s.nilpotent);
    CHECK(s.terms.back().dim() == 3);
    CHECK(kind_of([&] { require_nilpotent(sl2); }) == ErrorKind::NotNilpotent);
  }

  TEST_CASE("centers") {
    const auto h = heisenberg();
    CHECK(center(h) == Subspace::span(3, {e(h, 2)}));
    const auto hc = heisenberg_clifford({1, 1, {1}});
    CHECK(center(hc) == Subspace::span(4, {e(hc, 0)}));
    CHECK(center(corpus_entry("abelian_3").algebra).dim() == 3);
  }

  TEST_CASE("ideal closure") {
    const auto h = heisenberg();
    CHECK(ideal_closure(h, {e(h, 0)}) == Subspace::span(3, {e(h, 0), e(h, 2)}));
    CHECK(ideal_closure(h, {h.zero()}).dim() == 0);
    CHECK(ideal_closure(h, {e(h, 2)}) == Subspace::span(3, {e(h, 2)}));
  }

  TEST_CASE("quotients") {
    const auto h = heisenberg();
    const Quotient q = quotient(h, Subspace::span(3, {e(h, 2)}));
    CHECK(q.algebra.dim() == 2);
    CHECK(lower_central_series(q.algebra).terms.back().dim() == 0);
    CHECK(bracket_span(q.algebra, Subspace::whole(2), Subspace::whole(2)).dim() == 0);

    const auto hc = heisenberg_clifford({1, 2, {1, 1}});
    const Quotient qc = quotient(hc, Subspace::span(hc.dim(), {e(hc, 0)}));
    CHECK(qc.algebra.dim_even() == 2);
    CHECK(qc.algebra.dim_odd() == 2);
    for (std::size_t a = 2; a < 4; ++a)
      for (std::size_t b = 2; b < 4; ++b) CHECK(is_zero(qc.algebra.structure(a, b)));

    const Quotient same = quotient(h, Subspace(3));
    CHECK(same.projection == QMatrix::identity(3));
    CHECK(oracle::classify(3, oracle::tensor_of(same.algebra)) == oracle::Defect::None);
    CHECK(kind_of([&] { quotient(h, Subspace::span(3, {e(h, 0)})); }) == ErrorKind::NotAnIdeal);
  }

  TEST_CASE("bracket spans") {
    const auto hc = heisenberg_clifford({0, 2, {1, 1}});
    const Subspace odd = odd_part(hc);
    CHECK(bracket_span(hc, odd, odd) == Subspace::span(3, {e(hc, 0)}));
    CHECK(bracket_span(hc, odd, Subspace(3)).dim() == 0);
    for (const auto& spec : hc_family(2, 3)) {
      const auto l = heisenberg_clifford(spec);
      const Subspace o = odd_part(l);
      CHECK(bracket_span(l, o, bracket_span(l, o, o)).dim() == 0);
    }
  }

  TEST_CASE("validation agrees with the oracle on random single-entry edits") {
    oracle::Sampler s(99);
    const auto& entries = corpus();
    for (int trial = 0; trial < 40; ++trial) {
      const auto& l = entries[s.integer(0, static_cast<int>(entries.size()) - 1)].algebra;
      if (l.dim() == 0) continue;
      auto t = oracle::tensor_of(l);
      const std::size_t n = l.dim();
      const std::size_t i = s.integer(0, n - 1), j = s.integer(0, n - 1), k = s.integer(0, n - 1);
      t[i][j][k] += s.coin(0.5) ? 1 : -1;
      const oracle::Defect expect = oracle::classify(l.dim_even(), t);
      std::vector<Element> flat;
      for (const auto& row : t)
        for (const auto& v : row) flat.push_back(v);
      try {
        LieSuperalgebra::from_tensor(l.dim_even(), l.dim_odd(), l.names(), flat);
        CHECK(expect == oracle::Defect::None);
      } catch (const Error& err) {
        const ErrorKind want = expect == oracle::Defect::Grading        ? ErrorKind::GradingViolation
                               : expect == oracle::Defect::Antisymmetry ? ErrorKind::InconsistentAntisymmetry
                                                                        : ErrorKind::JacobiViolation;
        CHECK(expect != oracle::Defect::None);
        CHECK(err.kind() == want);
      }
    }
  }

  TEST_CASE("every corpus algebra satisfies the oracle's super-Jacobi check") {
    CHECK(corpus().size() >= 12);
    for (const auto& entry : corpus()) {
      CAPTURE(entry.name);
      CHECK(oracle::classify(entry.algebra.dim_even(), oracle::tensor_of(entry.algebra)) == oracle::Defect::None);
      CHECK(entry.algebra.dim() <= 8);
      CHECK(lower_central_series(entry.algebra).nilpotent);
    }
  }
}
