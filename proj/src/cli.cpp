#include "superorbit/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <random>

#include "CLI11.hpp"
#include "superorbit/cliffmod.hpp"
#include "superorbit/coadjoint.hpp"
#include "superorbit/corpus.hpp"
#include "superorbit/document.hpp"
#include "superorbit/error.hpp"
#include "superorbit/models.hpp"
#include "superorbit/polarize.hpp"
#include "superorbit/reduction.hpp"

namespace superorbit {

namespace {

struct Options {
  std::string command;
  std::vector<std::string> inputs;
  std::vector<std::string> lambdas;
  std::optional<std::string> b;
  std::uint64_t seed = 20240601;
  std::string format = "human";
  std::optional<std::string> out_dir;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

LieSuperalgebra load_input(const std::string& spec) {
  const std::string prefix = "builtin:";
  if (spec.rfind(prefix, 0) == 0) return corpus_entry(spec.substr(prefix.size())).algebra;
  return load_algebra_file(spec);
}

// X + 1/2*Y style, using basis names.
std::string named(const LieSuperalgebra& l, const Element& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (is_zero(v[i])) continue;
    if (!out.empty()) out += " + ";
    if (v[i] != 1) out += to_string(v[i]) + "*";
    out += l.names()[i];
  }
  return out.empty() ? "0" : out;
}

std::string named_span(const LieSuperalgebra& l, const Subspace& s) {
  std::string out = "span{";
  for (std::size_t r = 0; r < s.dim(); ++r) {
    if (r) out += ", ";
    out += named(l, s.vector(r));
  }
  return out + "}";
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  int dispatch() {
    const std::string& c = o_.command;
    if (c == "examples") return examples();
    if (c == "validate") return validate();
    if (c == "reduce") return reduce();
    if (c == "split") return split();
    if (c == "orbit") return orbit();
    if (c == "orbit-equal") return orbit_equal_cmd();
    if (c == "polarize") return polarize();
    if (c == "system") return system();
    if (c == "kappa") return kappa_cmd();
    if (c == "clifford") return clifford();
    if (c == "svn") return svn();
    if (c == "induce") return induce();
    throw UsageError("unknown command '" + c + "'");
  }

 private:
  bool document() const { return o_.format == "document"; }

  LieSuperalgebra algebra() const {
    if (o_.inputs.size() != 1) throw UsageError(o_.command + " expects exactly one algebra input");
    return load_input(o_.inputs.front());
  }

  Functional lambda(const LieSuperalgebra& l, std::size_t which = 0) const {
    if (o_.lambdas.size() <= which) throw UsageError(o_.command + " needs --lambda");
    return parse_functional(o_.lambdas[which], l.dim_even());
  }

  int emit(const Json& doc) {
    out_ << doc.dump(2) << "\n";
    return kOk;
  }

  int examples() {
    if (!o_.inputs.empty()) throw UsageError("examples takes no inputs");
    if (o_.out_dir) std::filesystem::create_directories(*o_.out_dir);
    Json list = Json::array();
    for (const auto& e : corpus()) {
      if (o_.out_dir) {
        std::ofstream f(std::filesystem::path(*o_.out_dir) / (e.name + ".json"));
        f << algebra_to_json(e.algebra).dump(2) << "\n";
        if (!f) throw Error(ErrorKind::PreconditionFailed, "cannot write " + e.name + ".json");
      }
      if (document()) {
        list.push_back(Json{{"name", e.name}, {"description", e.description},
                            {"algebra", algebra_to_json(e.algebra)}});
      } else {
        out_ << e.name << " (" << e.algebra.dim_even() << "|" << e.algebra.dim_odd() << ")  " << e.description
             << "\n";
      }
    }
    return document() ? emit(list) : kOk;
  }

  int validate() {
    const LieSuperalgebra l = algebra();
    const CentralSeries series = lower_central_series(l);
    const Subspace z = center(l);
    if (document()) {
      return emit(Json{{"valid", true}, {"nilpotent", series.nilpotent},
                       {"class", series.nilpotency_class}, {"center", subspace_to_json(z)}});
    }
    out_ << "valid; ";
    if (series.nilpotent) {
      out_ << "nilpotent, class " << series.nilpotency_class;
    } else {
      out_ << "not nilpotent";
    }
    out_ << "; center dim " << z.dim() << "\n";
    return kOk;
  }

  int reduce() {
    const LieSuperalgebra l = algebra();
    const ReducedForm r = a_radical(l);
    const ReducedVerdict v = is_reduced(l);
    if (document()) {
      Json chain = Json::array();
      for (const auto& s : r.chain) chain.push_back(subspace_to_json(s));
      Json doc{{"status", to_string(v.status)},
               {"a_radical", subspace_to_json(r.a_radical)},
               {"chain", chain},
               {"certified", r.certified_complete},
               {"quotient", algebra_to_json(r.quotient.algebra)},
               {"projection", matrix_to_json(r.quotient.projection)}};
      if (v.witness) doc["witness"] = vector_to_json(*v.witness);
      return emit(doc);
    }
    out_ << "status: " << to_string(v.status) << "\n";
    if (v.witness) out_ << "witness: " << to_string(*v.witness) << "  (" << named(l, *v.witness) << ")\n";
    out_ << "a-radical dim " << r.a_radical.dim() << ": " << format_matrix(r.a_radical.echelon()) << "\n";
    for (std::size_t k = 0; k < r.chain.size(); ++k) {
      out_ << "stage " << k + 1 << ": " << format_matrix(r.chain[k].echelon()) << "\n";
    }
    out_ << "certified: " << (r.certified_complete ? "yes" : "no") << "\n";
    out_ << "quotient: (" << r.quotient.algebra.dim_even() << "|" << r.quotient.algebra.dim_odd() << ")\n";
    return kOk;
  }

  int split() {
    const LieSuperalgebra l = algebra();
    const SplitOutcome s = kirillov_split(l);
    if (s.clifford) {
      if (document()) {
        return emit(Json{{"clifford", true}, {"gram", matrix_to_json(s.recognition.gram)}});
      }
      out_ << "clifford type; gram " << format_matrix(s.recognition.gram) << "\n";
      return kOk;
    }
    const KirillovSplit& k = s.split;
    if (document()) {
      Json w = Json::array();
      for (const auto& v : k.w_basis) w.push_back(vector_to_json(v));
      return emit(Json{{"clifford", false}, {"x", vector_to_json(k.x)}, {"y", vector_to_json(k.y)},
                       {"z", vector_to_json(k.z)}, {"w", w}, {"n_prime", subspace_to_json(k.n_prime)}});
    }
    out_ << "X = " << named(l, k.x) << "\nY = " << named(l, k.y) << "\nZ = " << named(l, k.z) << "\n";
    out_ << "W = span{";
    for (std::size_t i = 0; i < k.w_basis.size(); ++i) out_ << (i ? ", " : "") << named(l, k.w_basis[i]);
    out_ << "}\n";
    out_ << "n' = " << named_span(l, k.n_prime) << " " << format_matrix(k.n_prime.echelon()) << "\n";
    return kOk;
  }

  // Random even element and flow time from the seed, for sampling an orbit point.
  std::pair<Element, Rational> sample_flow(const LieSuperalgebra& l) const {
    std::mt19937_64 rng(o_.seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    Element x = l.zero();
    for (std::size_t i = 0; i < l.dim_even(); ++i) x[i] = Rational(coef(rng));
    return {x, ratio(coef(rng), den(rng))};
  }

  int orbit() {
    const LieSuperalgebra l = algebra();
    const Functional lam = lambda(l);
    const OrbitRepresentative rep = canonical_orbit_rep(l, lam);
    const auto [x, t] = sample_flow(l);
    const Functional moved = coadjoint_flow(l, lam, x, t);
    const OrbitComparison cmp = orbit_equal(l, lam, moved);
    if (document()) {
      Json log = Json::array();
      for (const auto& [v, s] : rep.log) log.push_back(Json{{"x", vector_to_json(v)}, {"t", rational_to_json(s)}});
      return emit(Json{{"lambda", vector_to_json(lam)},
                       {"canonical", vector_to_json(rep.canonical)},
                       {"jumps", rep.jumps},
                       {"log", log},
                       {"in_n0_plus", in_n0_plus(l, lam)},
                       {"sample", Json{{"seed", o_.seed},
                                       {"x", vector_to_json(x)},
                                       {"t", rational_to_json(t)},
                                       {"image", vector_to_json(moved)},
                                       {"verdict", to_string(cmp.verdict)}}}});
    }
    out_ << "lambda = " << to_string(lam, l) << "\n";
    out_ << "canonical = " << to_string(rep.canonical, l) << "  " << to_string(rep.canonical) << "\n";
    out_ << "jumps:";
    for (auto j : rep.jumps) out_ << " " << j;
    out_ << "\n";
    for (const auto& [v, s] : rep.log) out_ << "flow " << named(l, v) << " by " << to_string(s) << "\n";
    out_ << "B verdict: " << to_string(b_form(l, lam).verdict) << "\n";
    out_ << "sample (seed " << o_.seed << "): exp(" << to_string(t) << " * (" << named(l, x)
         << ")) gives " << to_string(moved) << "; " << to_string(cmp.verdict) << "\n";
    return kOk;
  }

  int orbit_equal_cmd() {
    const LieSuperalgebra l = algebra();
    if (o_.lambdas.size() != 2) throw UsageError("orbit-equal needs --lambda twice");
    const OrbitComparison cmp = orbit_equal(l, lambda(l, 0), lambda(l, 1));
    if (document()) return emit(Json{{"verdict", to_string(cmp.verdict)}, {"reason", cmp.reason}});
    out_ << to_string(cmp.verdict) << ": " << cmp.reason << "\n";
    return kOk;
  }

  int polarize() {
    const LieSuperalgebra l = algebra();
    const Polarization p = vergne_polarization(l, lambda(l));
    if (document()) {
      Json flag = Json::array();
      for (const auto& s : p.flag) flag.push_back(subspace_to_json(s));
      return emit(Json{{"m0", subspace_to_json(p.m0)}, {"flag", flag}});
    }
    out_ << "m0 = " << named_span(l, p.m0) << " " << format_matrix(p.m0.echelon()) << "\n";
    out_ << "dim m0 = " << p.m0.dim() << "\n";
    for (std::size_t k = 0; k < p.flag.size(); ++k) {
      out_ << "flag " << k << ": " << format_matrix(p.flag[k].echelon()) << "\n";
    }
    return kOk;
  }

  int report_status(const VerificationReport& r) const { return r.ok() ? kOk : kVerification; }

  // A stored system document given as input is re-verified instead of rebuilt.
  std::optional<std::pair<LieSuperalgebra, PolarizingSystem>> stored_system() const {
    if (o_.inputs.size() != 1 || o_.inputs.front().rfind("builtin:", 0) == 0) return std::nullopt;
    std::ifstream in(o_.inputs.front());
    if (!in) return std::nullopt;
    const Json doc = Json::parse(in, nullptr, false);
    if (!doc.is_object() || !doc.contains("m0")) return std::nullopt;
    return system_from_json(doc);
  }

  int system() {
    if (auto stored = stored_system()) {
      const VerificationReport r = verify_polarizing_system(stored->first, stored->second);
      if (document()) {
        emit(report_to_json(r));
        return report_status(r);
      }
      for (const auto& c : r.checks) {
        out_ << (c.passed ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
      }
      return report_status(r);
    }
    const LieSuperalgebra l = algebra();
    const PolarizingSystem s = build_polarizing_system(l, lambda(l));
    const VerificationReport r = verify_polarizing_system(l, s);
    if (document()) {
      emit(system_to_json(l, s));
      return report_status(r);
    }
    out_ << "m0 = " << format_matrix(s.m0.echelon()) << "\n";
    out_ << "k = " << format_matrix(s.k_lambda.echelon()) << "\n";
    out_ << "r = " << format_matrix(s.r_lambda.echelon()) << "\n";
    out_ << "j = " << format_matrix(s.j.echelon()) << "\n";
    out_ << "c = (" << s.clifford.dim_even() << "|" << s.clifford.dim_odd() << ")\n";
    out_ << "phi = " << format_matrix(s.phi) << "\n";
    out_ << "mu = " << to_string(s.mu) << "\n";
    for (const auto& c : r.checks) {
      out_ << (c.passed ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    }
    return report_status(r);
  }

  int kappa_cmd() {
    const LieSuperalgebra l = algebra();
    const std::size_t k = kappa(l, lambda(l));
    if (document()) return emit(Json{{"kappa", k}});
    out_ << "kappa = " << k << "\n";
    return kOk;
  }

  int clifford() {
    const LieSuperalgebra l = algebra();
    const CliffordModule m = clifford_module(l, lambda(l));
    const auto problems = verify_module(m);
    if (document()) {
      Json doc = module_to_json(m);
      doc["violations"] = problems;
      emit(doc);
    } else {
      out_ << "module dim " << m.dim() << " (l = " << m.l << ")\n";
      for (std::size_t j = 0; j < m.images.size(); ++j) {
        out_ << l.names()[l.dim_even() + j] << " -> " << to_string(m.images[j]) << "\n";
      }
      for (const auto& p : problems) out_ << "FAIL " << p << "\n";
    }
    return problems.empty() ? kOk : kVerification;
  }

  int svn() {
    const LieSuperalgebra l = algebra();
    if (!o_.b) throw UsageError("svn needs --b");
    const Rational b = parse_rational(*o_.b);
    const HCSpec spec = infer_hc_spec(l);
    const SvnReport rep = svn_classify(spec, b);
    std::optional<SchrodingerModel> model;
    std::optional<VerificationReport> check;
    if (rep.conclusion == SvnConclusion::UniqueUpToParityAndEquivalence) {
      model = schrodinger_model(spec, b);
      check = verify_model(*model);
    }
    if (document()) {
      Json doc = svn_to_json(spec, b, rep);
      if (model) {
        doc["model"] = model_to_json(*model);
        doc["verification"] = report_to_json(*check);
      }
      emit(doc);
    } else {
      out_ << rep.summary << "\n";
      if (model) {
        for (std::size_t i = 0; i < model->images.size(); ++i) {
          out_ << "pi(" << model->algebra.names()[i] << ") = " << to_string(model->images[i]) << "\n";
        }
        out_ << "relations checked: " << check->checks.size() << ", failures: " << check->violations().size()
             << "\n";
      }
    }
    return check && !check->ok() ? kVerification : kOk;
  }

  int induce() {
    const LieSuperalgebra l = algebra();
    const InducedData d = induced_rep_data(l, lambda(l));
    if (document()) {
      return emit(Json{{"system", system_to_json(l, d.system)},
                       {"module", module_to_json(d.module)},
                       {"fiber_dim", d.fiber_dim},
                       {"transverse_dim", d.transverse_dim},
                       {"kappa", d.kappa}});
    }
    out_ << "fiber dim " << d.fiber_dim << "; transverse dim " << d.transverse_dim << "; kappa " << d.kappa
         << "\n";
    return kOk;
  }

  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact orbit-method computations for nilpotent Lie superalgebras", "superorbit"};
  app.add_option("command", o.command,
                 "validate | reduce | split | orbit | orbit-equal | polarize | system | kappa | clifford | "
                 "svn | induce | examples")
      ->required();
  app.add_option("inputs", o.inputs, "algebra JSON file or builtin:<name>");
  app.add_option("--lambda", o.lambdas, "functional on the even part as index:value pairs, e.g. \"0:1,2:-1/2\"");
  app.add_option("--b", o.b, "central character value for svn");
  app.add_option("--seed", o.seed, "seed for sampled data");
  app.add_option("--format", o.format, "human or document")->check(CLI::IsMember({"human", "document"}));
  app.add_option("--out", o.out_dir, "directory for `examples` to write algebra documents into");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    return Runner(o, out).dispatch();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.is_verification_failure() ? kVerification : kPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  }
}

}  // namespace superorbit
