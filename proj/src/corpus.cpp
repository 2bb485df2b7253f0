#include "superorbit/corpus.hpp"

#include "superorbit/error.hpp"
#include "superorbit/models.hpp"

namespace superorbit {

namespace {

BracketEntry br(std::size_t i, std::size_t j, std::vector<std::pair<std::size_t, Rational>> out) {
  return {i, j, std::move(out)};
}

std::vector<CorpusEntry> make_corpus() {
  std::vector<CorpusEntry> c;
  const Rational one(1);
  c.push_back({"heisenberg", "Heisenberg: [X,Y] = Z",
               LieSuperalgebra::build(3, 0, {"X", "Y", "Z"}, {br(0, 1, {{2, one}})})});
  c.push_back({"mixed_3_1", "[X,Y] = Z, [V,V] = Z",
               LieSuperalgebra::build(3, 1, {"Z", "X", "Y", "V"},
                                      {br(1, 2, {{0, one}}), br(3, 3, {{0, one}})})});
  c.push_back({"heisenberg_central_odd", "[X,Y] = Z, V central with [V,V] = 0",
               LieSuperalgebra::build(3, 1, {"Z", "X", "Y", "V"}, {br(1, 2, {{0, one}})})});
  c.push_back({"filiform_4_2",
               "[e1,e2] = e3, [e1,e3] = e4, [e1,V1] = V2, [V1,V1] = e3, [V1,V2] = 1/2 e4",
               LieSuperalgebra::build(4, 2, {"e1", "e2", "e3", "e4", "V1", "V2"},
                                      {br(0, 1, {{2, one}}), br(0, 2, {{3, one}}), br(0, 4, {{5, one}}),
                                       br(4, 4, {{2, one}}), br(4, 5, {{3, Rational(1, 2)}})})});
  c.push_back({"filiform_4", "[e1,e2] = e3, [e1,e3] = e4",
               LieSuperalgebra::build(4, 0, {"e1", "e2", "e3", "e4"},
                                      {br(0, 1, {{2, one}}), br(0, 2, {{3, one}})})});
  c.push_back({"free_2_3", "free 3-step on two generators: [X1,X2] = Y, [X1,Y] = W1, [X2,Y] = W2",
               LieSuperalgebra::build(5, 0, {"X1", "X2", "Y", "W1", "W2"},
                                      {br(0, 1, {{2, one}}), br(0, 2, {{3, one}}), br(1, 2, {{4, one}})})});
  c.push_back({"abelian_3", "abelian", LieSuperalgebra::build(3, 0, {"A1", "A2", "A3"}, {})});
  c.push_back({"odd_abelian_2", "zero bracket", LieSuperalgebra::build(0, 2, {"V1", "V2"}, {})});
  c.push_back({"clifford_1_2", "[V1,V1] = 2Z, [V1,V2] = Z, [V2,V2] = 2Z",
               LieSuperalgebra::build(1, 2, {"Z", "V1", "V2"},
                                      {br(1, 1, {{0, Rational(2)}}), br(1, 2, {{0, one}}),
                                       br(2, 2, {{0, Rational(2)}})})});
  c.push_back({"odd_pair_2_3",
               "[V1,V1] = Z1, [V2,V2] = Z2, [V1,V3] = Z2, [V3,V3] = Z1 + Z2",
               LieSuperalgebra::build(2, 3, {"Z1", "Z2", "V1", "V2", "V3"},
                                      {br(2, 2, {{0, one}}), br(3, 3, {{1, one}}), br(2, 4, {{1, one}}),
                                       br(4, 4, {{0, one}, {1, one}})})});
  for (const HCSpec& s : hc_family(2, 3)) {
    std::string desc = "Heisenberg-Clifford m=" + std::to_string(s.m) + " n=" + std::to_string(s.n);
    if (s.n > 0) {
      desc += " signs";
      for (int sign : s.signs) desc += sign > 0 ? " +" : " -";
    }
    c.push_back({hc_name(s), desc, heisenberg_clifford(s)});
  }
  return c;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = make_corpus();
  return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return e;
  throw Error(ErrorKind::PreconditionFailed, "no built-in algebra named '" + name + "'");
}

}  // namespace superorbit
