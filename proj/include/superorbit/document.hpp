#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "superorbit/cliffmod.hpp"
#include "superorbit/models.hpp"
#include "superorbit/polarize.hpp"
#include "superorbit/superalg.hpp"

namespace superorbit {

using Json = nlohmann::ordered_json;

// Algebra documents:
//   {"dim_even": k, "dim_odd": r, "names": [...],
//    "brackets": [{"i": 0, "j": 1, "out": {"2": "1/2"}}]}
// Indices are 0-based, rationals are strings, omitted pairs bracket to zero.
LieSuperalgebra algebra_from_json(const Json& doc);
Json algebra_to_json(const LieSuperalgebra& algebra);
LieSuperalgebra parse_algebra(const std::string& text);
LieSuperalgebra load_algebra_file(const std::string& path);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json vector_to_json(const std::vector<Rational>& v);
std::vector<Rational> vector_from_json(const Json& j);
Json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const Json& j, std::size_t cols);
Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j, std::size_t ambient);

Json system_to_json(const LieSuperalgebra& algebra, const PolarizingSystem& system);
// Returns the host algebra together with the system it carries.
std::pair<LieSuperalgebra, PolarizingSystem> system_from_json(const Json& doc);

Json module_to_json(const CliffordModule& module);
Json report_to_json(const VerificationReport& report);
Json svn_to_json(const HCSpec& spec, const Rational& b, const SvnReport& report);
Json model_to_json(const SchrodingerModel& model);

// "[[1, 0, 1/2], [0, 1, 0]]"; an empty matrix prints as "[]".
std::string format_matrix(const QMatrix& m);

}  // namespace superorbit
