#include "superorbit/document.hpp"

#include <fstream>
#include <sstream>

#include "superorbit/error.hpp"

namespace superorbit {

namespace {

template <typename F>
auto guarded(const char* what, F&& body) {
  try {
    return body();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string(what) + ": " + e.what());
  }
}

std::size_t index_from_key(const std::string& key) {
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != key.size()) throw Error(ErrorKind::ParseError, "bad basis index '" + key + "'");
  return value;
}

}  // namespace

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(ErrorKind::ParseError, "rationals are written as strings \"p/q\"");
}

Json vector_to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

std::vector<Rational> vector_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

Json matrix_to_json(const QMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

QMatrix matrix_from_json(const Json& j, std::size_t cols) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "expected a matrix (array of rows)");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) rows.push_back(vector_from_json(row));
  return QMatrix::from_rows(rows, cols);
}

Json subspace_to_json(const Subspace& s) { return matrix_to_json(s.echelon()); }

Subspace subspace_from_json(const Json& j, std::size_t ambient) {
  return Subspace::span(ambient, matrix_from_json(j, ambient).to_rows());
}

LieSuperalgebra algebra_from_json(const Json& doc) {
  return guarded("algebra document", [&] {
    const auto de = doc.at("dim_even").get<std::size_t>();
    const auto dodd = doc.at("dim_odd").get<std::size_t>();
    std::vector<std::string> names;
    if (doc.contains("names")) names = doc.at("names").get<std::vector<std::string>>();
    std::vector<BracketEntry> table;
    if (doc.contains("brackets")) {
      for (const auto& b : doc.at("brackets")) {
        BracketEntry e;
        e.i = b.at("i").get<std::size_t>();
        e.j = b.at("j").get<std::size_t>();
        for (const auto& [key, value] : b.at("out").items()) {
          e.out.emplace_back(index_from_key(key), rational_from_json(value));
        }
        table.push_back(std::move(e));
      }
    }
    return LieSuperalgebra::build(de, dodd, std::move(names), table);
  });
}

Json algebra_to_json(const LieSuperalgebra& algebra) {
  Json doc;
  doc["dim_even"] = algebra.dim_even();
  doc["dim_odd"] = algebra.dim_odd();
  doc["names"] = algebra.names();
  Json brackets = Json::array();
  for (const auto& e : algebra.table()) {
    Json out = Json::object();
    for (const auto& [k, c] : e.out) out[std::to_string(k)] = rational_to_json(c);
    brackets.push_back(Json{{"i", e.i}, {"j", e.j}, {"out", out}});
  }
  doc["brackets"] = brackets;
  return doc;
}

LieSuperalgebra parse_algebra(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
  }
  return algebra_from_json(doc);
}

LieSuperalgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str());
}

Json system_to_json(const LieSuperalgebra& algebra, const PolarizingSystem& system) {
  Json doc;
  doc["algebra"] = algebra_to_json(algebra);
  doc["lambda"] = vector_to_json(system.lambda);
  doc["m0"] = subspace_to_json(system.m0);
  doc["k_lambda"] = subspace_to_json(system.k_lambda);
  doc["r_lambda"] = subspace_to_json(system.r_lambda);
  doc["j"] = subspace_to_json(system.j);
  doc["clifford"] = algebra_to_json(system.clifford);
  doc["phi"] = matrix_to_json(system.phi);
  doc["mu"] = vector_to_json(system.mu);
  return doc;
}

std::pair<LieSuperalgebra, PolarizingSystem> system_from_json(const Json& doc) {
  return guarded("system document", [&] {
    LieSuperalgebra algebra = algebra_from_json(doc.at("algebra"));
    const std::size_t n = algebra.dim();
    PolarizingSystem s;
    s.lambda = vector_from_json(doc.at("lambda"));
    s.m0 = subspace_from_json(doc.at("m0"), n);
    s.k_lambda = subspace_from_json(doc.at("k_lambda"), n);
    s.r_lambda = subspace_from_json(doc.at("r_lambda"), n);
    s.j = subspace_from_json(doc.at("j"), n);
    s.clifford = algebra_from_json(doc.at("clifford"));
    s.phi = matrix_from_json(doc.at("phi"), n);
    s.mu = vector_from_json(doc.at("mu"));
    return std::pair{std::move(algebra), std::move(s)};
  });
}

namespace {

Json ext_matrix_to_json(const ExtMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    out.push_back(row);
  }
  return out;
}

}  // namespace

Json module_to_json(const CliffordModule& module) {
  Json doc;
  doc["l"] = module.l;
  doc["dim"] = module.dim();
  doc["parity"] = module.parity;
  doc["a"] = rational_to_json(module.a);
  doc["gram"] = matrix_to_json(module.gram);
  doc["q"] = vector_to_json(module.q);
  Json images = Json::array();
  for (const auto& m : module.images) images.push_back(ext_matrix_to_json(m));
  doc["images"] = images;
  return doc;
}

Json report_to_json(const VerificationReport& report) {
  Json doc;
  doc["ok"] = report.ok();
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  doc["checks"] = checks;
  return doc;
}

Json svn_to_json(const HCSpec& spec, const Rational& b, const SvnReport& report) {
  Json doc;
  doc["name"] = hc_name(spec);
  doc["m"] = spec.m;
  doc["n"] = spec.n;
  doc["signs"] = spec.signs;
  doc["b"] = rational_to_json(b);
  doc["form"] = to_string(report.form_verdict);
  doc["agrees"] = report.agrees;
  doc["conclusion"] = to_string(report.conclusion);
  doc["count"] = report.count;
  doc["summary"] = report.summary;
  return doc;
}

Json model_to_json(const SchrodingerModel& model) {
  Json doc;
  doc["name"] = hc_name(model.spec);
  doc["b"] = rational_to_json(model.b);
  doc["variables"] = model.spec.m;
  doc["module"] = module_to_json(model.module);
  Json images = Json::object();
  for (std::size_t i = 0; i < model.images.size(); ++i) {
    images[model.algebra.names()[i]] = to_string(model.images[i]);
  }
  doc["images"] = images;
  return doc;
}

std::string format_matrix(const QMatrix& m) {
  if (m.rows() == 0) return "[]";
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out += ", ";
    out += to_string(m.row(r));
  }
  return out + "]";
}

}  // namespace superorbit
