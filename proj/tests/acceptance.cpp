// Acceptance run: one PASS/FAIL line per numbered criterion.
//
//   acceptance [--seed N] [--cli PATH]

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "superorbit/cliffmod.hpp"
#include "superorbit/coadjoint.hpp"
#include "superorbit/corpus.hpp"
#include "superorbit/document.hpp"
#include "superorbit/error.hpp"
#include "superorbit/models.hpp"
#include "superorbit/polarize.hpp"

#ifndef SUPERORBIT_CLI_PATH
#define SUPERORBIT_CLI_PATH "superorbit"
#endif

using namespace superorbit;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

// Collects the first few failure messages and a running count.
class Tally {
 public:
  void require(bool ok, const std::string& what) {
    ++checked_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  std::size_t checked() const { return checked_; }
  Result result(const std::string& summary) const {
    if (failed_ == 0) return {true, summary};
    return {false, summary + ", " + std::to_string(failed_) + " failed: " + first_};
  }

 private:
  std::size_t checked_ = 0, failed_ = 0;
  std::string first_;
};

Rational lambda_on(const Functional& lam, const Element& w) {
  Rational s;
  for (std::size_t i = 0; i < lam.size(); ++i) s += lam[i] * w[i];
  return s;
}

std::vector<Element> flat(const oracle::Tensor& t) {
  std::vector<Element> out;
  for (const auto& row : t)
    for (const auto& v : row) out.push_back(v);
  return out;
}

ErrorKind expected_kind(oracle::Defect d) {
  switch (d) {
    case oracle::Defect::Grading: return ErrorKind::GradingViolation;
    case oracle::Defect::Antisymmetry: return ErrorKind::InconsistentAntisymmetry;
    default: return ErrorKind::JacobiViolation;
  }
}

// ≥100 nonnegative functionals per algebra, shared by criteria 2 to 4.
struct Sample {
  const CorpusEntry* entry;
  Functional lambda;
};

std::vector<Sample> draw_samples(std::uint64_t seed, int per_algebra) {
  oracle::Sampler s(seed);
  std::vector<Sample> out;
  for (const auto& e : corpus()) {
    for (int k = 0; k < per_algebra; ++k) {
      // rejection sampling into the cone, with the zero functional as a floor
      out.push_back({&e, s.nonnegative_functional(e.algebra)});
      if (!oracle::psd(oracle::odd_gram(e.algebra, out.back().lambda))) out.back().lambda.assign(e.algebra.dim_even(), Rational(0));
    }
  }
  return out;
}

Result criterion1(std::uint64_t seed) {
  Tally t;
  std::size_t max_dim = 0;
  for (const auto& e : corpus()) {
    const auto& l = e.algebra;
    max_dim = std::max(max_dim, l.dim());
    t.require(oracle::classify(l.dim_even(), oracle::tensor_of(l)) == oracle::Defect::None,
              e.name + " fails the reference Jacobi check");
    bool rebuilt = true;
    try {
      LieSuperalgebra::from_tensor(l.dim_even(), l.dim_odd(), l.names(), flat(oracle::tensor_of(l)));
    } catch (const Error&) {
      rebuilt = false;
    }
    t.require(rebuilt, e.name + " rejected by validation");
  }
  t.require(corpus().size() >= 12, "corpus too small");
  t.require(max_dim <= 8, "corpus algebra above dimension 8");

  // Perturbations alternate between editing one raw tensor slot and editing
  // one structure constant together with its super-antisymmetric mirror, so
  // that Jacobi failures are exercised as well as table inconsistencies.
  oracle::Sampler s(seed);
  const auto& entries = corpus();
  int rejected = 0, redrawn = 0, by_kind[3] = {0, 0, 0};
  for (int drawn = 0; rejected < 50; ++drawn) {
    const auto& l = entries[s.integer(0, static_cast<int>(entries.size()) - 1)].algebra;
    const std::size_t n = l.dim();
    auto tensor = oracle::tensor_of(l);
    const std::size_t i = s.integer(0, n - 1), j = s.integer(0, n - 1), k = s.integer(0, n - 1);
    const Rational delta = s.coin(0.5) ? ratio(1, s.integer(1, 3)) : ratio(-1, s.integer(1, 3));
    tensor[i][j][k] += delta;
    if (drawn % 2 == 1 && i != j) {
      const bool both_odd = i >= l.dim_even() && j >= l.dim_even();
      tensor[j][i][k] += both_odd ? delta : -delta;
    }
    const oracle::Defect want = oracle::classify(l.dim_even(), tensor);
    if (want == oracle::Defect::None) {
      ++redrawn;
      continue;
    }
    ++rejected;
    try {
      LieSuperalgebra::from_tensor(l.dim_even(), l.dim_odd(), l.names(), flat(tensor));
      t.require(false, "perturbation accepted");
    } catch (const Error& err) {
      const bool named = std::string(err.what()).size() > std::string(to_string(err.kind())).size() + 2;
      t.require(err.kind() == expected_kind(want) && named,
                std::string("expected ") + to_string(expected_kind(want)) + ", got " + err.what());
      ++by_kind[static_cast<int>(want) - 1];
    }
  }
  return t.result(std::to_string(corpus().size()) + " corpus algebras valid; 50 perturbations rejected (grading " +
                  std::to_string(by_kind[0]) + ", antisymmetry " + std::to_string(by_kind[1]) + ", Jacobi " +
                  std::to_string(by_kind[2]) + "; " + std::to_string(redrawn) + " valid edits redrawn)");
}

// λ applied to an odd element is zero by definition, so the odd-triple
// statement is read through B_λ: [[u,v],w] pairs to zero with every odd x,
// i.e. λ([[[u,v],w],x]) = 0, together with λ([[u,v],[w,x]]) = 0.
Result criterion2(const std::vector<Sample>& samples) {
  Tally t;
  std::size_t evaluations = 0;
  for (const auto& sm : samples) {
    const auto& l = sm.entry->algebra;
    const auto tensor = oracle::tensor_of(l);
    const std::size_t de = l.dim_even(), n = l.dim();
    for (std::size_t u = de; u < n; ++u)
      for (std::size_t v = u; v < n; ++v)
        for (std::size_t w = de; w < n; ++w) {
          const oracle::Vec uvw = oracle::bracket(tensor, tensor[u][v], l.basis_vector(w));
          for (std::size_t x = de; x < n; ++x) {
            evaluations += 2;
            t.require(lambda_on(sm.lambda, oracle::bracket(tensor, uvw, l.basis_vector(x))) == 0,
                      sm.entry->name + ": B_lambda([[u,v],w], x) != 0");
            t.require(lambda_on(sm.lambda, oracle::bracket(tensor, tensor[u][v], tensor[w][x])) == 0,
                      sm.entry->name + ": lambda([[u,v],[w,x]]) != 0");
          }
        }
  }
  return t.result(std::to_string(samples.size()) + " functionals in the cone, " + std::to_string(evaluations) +
                  " odd-basis evaluations, all exactly zero");
}

Result criterion3(const std::vector<Sample>& samples) {
  Tally t;
  std::size_t oracle_runs = 0;
  for (const auto& sm : samples) {
    const auto& l = sm.entry->algebra;
    const Polarization p = vergne_polarization(l, sm.lambda);
    const std::size_t s_dim = omega_radical(l, sm.lambda, even_part(l)).dim();
    t.require(2 * p.m0.dim() == l.dim_even() + s_dim, sm.entry->name + ": dim m0 is not half of n0 + s");
    const auto tensor = oracle::tensor_of(l);
    const auto basis = p.m0.vectors();
    for (const auto& a : basis)
      for (const auto& b : basis)
        t.require(lambda_on(sm.lambda, oracle::bracket(tensor, a, b)) == 0, sm.entry->name + ": lambda([m0,m0]) != 0");
    t.require(p.m0.contains(bracket_span(l, odd_part(l), odd_part(l))), sm.entry->name + ": m0 misses [n1,n1]");
    if (l.dim_even() <= 5) {
      ++oracle_runs;
      t.require(oracle::max_isotropic_subalgebra(l, sm.lambda) == p.m0.dim(),
                sm.entry->name + ": brute-force isotropic dimension differs");
    }
  }
  return t.result(std::to_string(samples.size()) + " polarizations; brute-force oracle agreed on " +
                  std::to_string(oracle_runs));
}

Result criterion4(const std::vector<Sample>& samples) {
  Tally t;
  const std::array<std::string, 8> required = {
      "(a)", "(b)", "(c)", "(d)", "j is an ideal", "(c) c is of Clifford type", "consistency", "phi([n1, [n1, n1]])"};
  for (const auto& sm : samples) {
    const auto& l = sm.entry->algebra;
    const PolarizingSystem sys = build_polarizing_system(l, sm.lambda);
    const VerificationReport r = verify_polarizing_system(l, sys);
    for (const auto& v : r.violations()) t.require(false, sm.entry->name + ": " + v);
    for (const auto& name : required) {
      bool present = false;
      for (const auto& c : r.checks) present = present || c.name.rfind(name, 0) == 0;
      t.require(present, "check '" + name + "' missing from the report");
    }
  }
  return t.result(std::to_string(samples.size()) + " systems certified with zero violations");
}

Result criterion5(std::uint64_t seed) {
  Tally t;
  oracle::Sampler s(seed);
  std::size_t triples = 0;
  for (const auto& e : corpus()) {
    const auto& l = e.algebra;
    if (l.dim_even() == 0) continue;
    for (int k = 0; k < 200; ++k) {
      const Functional lam = s.nonnegative_functional(l);
      const Element x = s.even_element(l);
      const Rational time = s.small_rational();
      const Functional moved = coadjoint_flow(l, lam, x, time);
      ++triples;
      t.require(kappa(l, lam) == kappa(l, moved), e.name + ": kappa changes along a flow");
    }
    if (l.dim_odd() == 0) {
      for (int k = 0; k < 20; ++k) t.require(kappa(l, s.functional(l.dim_even())) == 1, e.name + ": kappa != 1");
    }
  }
  return t.result(std::to_string(triples) + " flowed triples with equal kappa; kappa = 1 on every even algebra");
}

Result criterion6(std::uint64_t seed) {
  Tally t;
  oracle::Sampler s(seed);
  std::size_t grams = 0;
  for (std::size_t l = 1; l <= 5; ++l) {
    for (int trial = 0; trial < 20; ++trial, ++grams) {
      const oracle::Mat g = s.positive_definite(l);
      const Rational a = ratio(s.integer(1, 5), s.integer(1, 3));
      const CliffordModule m = clifford_module_from_gram(QMatrix::from_rows(g, l), a);
      t.require(m.dim() == (std::size_t{1} << ((l + 1) / 2)), "module dimension is not 2^ceil(l/2)");
      for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) {
          const ExtMatrix ac = m.images[i] * m.images[j] + m.images[j] * m.images[i];
          t.require(ac == ExtScalar(g[i][j] * a) * ExtMatrix::identity(m.dim()), "anticommutator identity fails");
        }
      const bool equivalent = module_equivalent(m, parity_change(m)).equivalent;
      t.require(equivalent == (l % 2 == 1), "parity change equivalence for l = " + std::to_string(l));
    }
  }
  return t.result(std::to_string(grams) + " Gram matrices, l = 1..5, identities exact");
}

Result criterion7() {
  Tally t;
  for (const auto& spec : hc_family(2, 3))
    for (int b : {-1, 0, 1}) {
      const SvnReport r = svn_classify(spec, Rational(b));
      const oracle::SvnExpected want = oracle::svn_expected(spec, b);
      const bool count_ok =
          want.conclusion != SvnConclusion::UniqueUpToParityAndEquivalence || r.count == want.count;
      t.require(r.conclusion == want.conclusion && count_ok, hc_name(spec) + " b=" + std::to_string(b));
    }
  return t.result(std::to_string(t.checked()) + " cases (" + std::to_string(hc_family(2, 3).size()) +
                  " sign patterns x 3 values of b) match the table");
}

Result criterion8(std::uint64_t seed) {
  Tally t;
  std::vector<HCSpec> with_odd;
  std::size_t models = 0;
  for (const auto& spec : hc_family(2, 3))
    for (int b : {-1, 0, 1}) {
      if (svn_classify(spec, Rational(b)).conclusion != SvnConclusion::UniqueUpToParityAndEquivalence) continue;
      ++models;
      const VerificationReport r = verify_model(schrodinger_model(spec, Rational(b)));
      for (const auto& v : r.violations()) t.require(false, hc_name(spec) + ": " + v);
      if (spec.n > 0 && b == spec.signs.front()) with_odd.push_back(spec);
    }

  // negative control: replace one odd image by its unscaled gamma matrix
  oracle::Sampler s(seed);
  const HCSpec spec = with_odd[s.integer(0, static_cast<int>(with_odd.size()) - 1)];
  const int b = spec.signs.front();
  SchrodingerModel broken = schrodinger_model(spec, Rational(b * 3));
  const std::size_t j = s.integer(0, static_cast<int>(spec.n) - 1);
  broken.images[1 + 2 * spec.m + j] = WeylMatrix::constant(spec.m, to_ext(broken.module.gammas[j]));
  const VerificationReport bad = verify_model(broken);
  t.require(!bad.ok(), "mis-scaled model passed verification");
  return t.result(std::to_string(models) + " admissible models with zero residual; mis-scaled " + hc_name(spec) +
                  " (V" + std::to_string(j + 1) + ") rejected with " + std::to_string(bad.violations().size()) +
                  " failing relations");
}

Result criterion9(std::uint64_t seed) {
  Tally t;
  oracle::Sampler s(seed);
  std::vector<const CorpusEntry*> even_nonzero;
  for (const auto& e : corpus())
    if (e.algebra.dim_even() > 0) even_nonzero.push_back(&e);
  auto pick = [&]() -> const CorpusEntry& {
    return *even_nonzero[s.integer(0, static_cast<int>(even_nonzero.size()) - 1)];
  };
  std::size_t inconclusive = 0;
  auto compare = [&](const LieSuperalgebra& l, const Functional& a, const Functional& b) {
    const OrbitVerdict v = orbit_equal(l, a, b).verdict;
    if (v == OrbitVerdict::Inconclusive) ++inconclusive;
    return v;
  };

  for (int k = 0; k < 100; ++k) {
    const auto& l = pick().algebra;
    const Functional lam = s.functional(l.dim_even());
    const Element x = s.even_element(l);
    const Rational a = s.small_rational(), b = s.small_rational();
    const Functional ab = coadjoint_flow(l, coadjoint_flow(l, lam, x, a), x, b);
    t.require(ab == coadjoint_flow(l, lam, x, a + b), "flow composition fails");
    t.require(coadjoint_flow(l, lam, x, a) == oracle::flow(l, lam, x, a), "flow differs from the series");
  }
  for (int k = 0; k < 100; ++k) {
    const auto& e = pick();
    const Functional lam = s.functional(e.algebra.dim_even());
    const Functional moved = coadjoint_flow(e.algebra, lam, s.even_element(e.algebra), s.small_rational());
    t.require(compare(e.algebra, lam, moved) == OrbitVerdict::Equal, e.name + ": flow image judged distinct");
  }
  int center_pairs = 0, kappa_pairs = 0;
  for (int guard = 0; guard < 20000 && (center_pairs < 100 || kappa_pairs < 100); ++guard) {
    const auto& e = pick();
    const auto& l = e.algebra;
    const Functional a = s.nonnegative_functional(l), b = s.nonnegative_functional(l);
    bool center_differs = false;
    for (const auto& z : center(l).vectors()) center_differs = center_differs || lambda_on(a, z) != lambda_on(b, z);
    const bool kappa_differs = kappa(l, a) != kappa(l, b);
    if (center_differs && center_pairs < 100) {
      ++center_pairs;
      t.require(compare(l, a, b) == OrbitVerdict::Distinct, e.name + ": center values differ but judged equal");
    } else if (kappa_differs && kappa_pairs < 100) {
      ++kappa_pairs;
      t.require(compare(l, a, b) == OrbitVerdict::Distinct, e.name + ": kappa differs but judged equal");
    }
  }
  t.require(kappa_pairs > 0, "no pair with differing kappa was found");
  for (const auto& e : corpus())
    for (int k = 0; k < 5 && e.algebra.dim_even() > 0; ++k)
      compare(e.algebra, s.functional(e.algebra.dim_even()), s.functional(e.algebra.dim_even()));
  t.require(inconclusive == 0, std::to_string(inconclusive) + " inconclusive comparisons");
  return t.result("100 flow compositions; 100 flow pairs equal; " + std::to_string(center_pairs) +
                  " center-separated and " + std::to_string(kappa_pairs) +
                  " kappa-separated pairs distinct; no inconclusive verdicts");
}

std::pair<int, std::string> run_cli(const std::string& cli, const std::string& args) {
  const std::string command = "\"" + cli + "\" " + args + " 2>&1";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) throw std::runtime_error("cannot start " + cli);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe.release());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Result criterion10(const std::string& cli) {
  Tally t;
  const std::vector<std::string> commands = {
      "examples --format document",
      "validate builtin:filiform_4_2",
      "reduce builtin:hc_2_3_pmm --format document",
      "orbit builtin:free_2_3 --lambda 0:1,2:-1/2 --seed 11",
      "orbit-equal builtin:heisenberg --lambda 0:1,2:1 --lambda 1:4,2:1",
      "polarize builtin:filiform_4_2 --lambda 2:1",
      "system builtin:mixed_3_1 --lambda 0:1 --format document",
      "kappa builtin:hc_1_3_ppp --lambda 0:1",
      "clifford builtin:clifford_1_2 --lambda 0:1 --format document",
      "svn builtin:hc_2_2_pp --b 1",
      "induce builtin:hc_2_3_mmm --lambda 0:-1",
  };
  for (const auto& c : commands) {
    const auto a = run_cli(cli, c), b = run_cli(cli, c);
    t.require(a.first == 0, "'" + c + "' exited with " + std::to_string(a.first));
    t.require(a.second == b.second && !a.second.empty(), "'" + c + "' output differs between runs");
  }
  std::size_t round_trips = 0;
  for (const auto& e : corpus()) {
    if (e.algebra.dim_even() == 0) continue;
    const std::string lam = std::to_string(e.algebra.dim_even() - 1) + ":1";
    const auto [code, text] = run_cli(cli, "system builtin:" + e.name + " --lambda " + lam + " --format document");
    if (code == 2) continue;  // outside the nonnegative cone
    t.require(code == 0, e.name + ": system exited with " + std::to_string(code));
    const auto [algebra, system] = system_from_json(Json::parse(text));
    t.require(verify_polarizing_system(algebra, system).ok(), e.name + ": document does not re-verify");
    ++round_trips;
  }
  return t.result(std::to_string(commands.size()) + " commands byte-identical across reruns; " +
                  std::to_string(round_trips) + " system documents re-verified");
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 20240601;
  std::string cli = SUPERORBIT_CLI_PATH;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--seed") seed = std::stoull(argv[i + 1]);
    else if (flag == "--cli") cli = argv[i + 1];
  }

  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  std::vector<Sample> samples;
  bool all = true;
  auto report = [&](int n, double limit, const std::function<Result()>& body) {
    const auto t0 = Clock::now();
    Result r;
    try {
      r = body();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (limit > 0 && secs > limit) {
      r.pass = false;
      r.detail += " (over the " + std::to_string(static_cast<int>(limit)) + " s limit)";
    }
    all = all && r.pass;
    char timing[32];
    std::snprintf(timing, sizeof timing, " [%.2f s]", secs);
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << r.detail << timing << std::endl;
  };

  report(1, 5, [&] { return criterion1(seed); });
  samples = draw_samples(seed + 2, 100);
  report(2, 30, [&] { return criterion2(samples); });
  report(3, 0, [&] { return criterion3(samples); });
  report(4, 0, [&] { return criterion4(samples); });
  report(5, 0, [&] { return criterion5(seed + 5); });
  report(6, 0, [&] { return criterion6(seed + 6); });
  report(7, 0, [&] { return criterion7(); });
  report(8, 0, [&] { return criterion8(seed + 8); });
  report(9, 0, [&] { return criterion9(seed + 9); });
  report(10, 0, [&] { return criterion10(cli); });

  const double total = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("acceptance total %.2f s\n", total);
  return all ? 0 : 1;
}
