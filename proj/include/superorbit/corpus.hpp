#pragma once

#include <string>
#include <vector>

#include "superorbit/superalg.hpp"

namespace superorbit {

struct CorpusEntry {
  std::string name;
  std::string description;
  LieSuperalgebra algebra;
};

/// Built-in examples in a fixed order: named algebras first, then the
/// Heisenberg-Clifford family for m ≤ 2, n ≤ 3.
const std::vector<CorpusEntry>& corpus();

/// Throws PreconditionFailed for unknown names.
const CorpusEntry& corpus_entry(const std::string& name);

}  // namespace superorbit
