// JSON (de)serialization for quivers, bialgebra specs, representations,
// isotypic matrices, and the report types. Structural problems in the
// input raise parse_error; mathematical validity is checked separately.
#ifndef QSH_JSON_IO_HPP
#define QSH_JSON_IO_HPP

#include <json.hpp>

#include "qsh/bialgebra.hpp"
#include "qsh/rep.hpp"

namespace qsh {

using Json = nlohmann::json;

Json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

Json spec_to_json(const BialgebraSpec& spec);
BialgebraSpec spec_from_json(const Json& j);

Json rep_to_json(const Representation& rep);
Representation rep_from_json(const Json& j, const Quiver& q);

Json isotypic_to_json(const IsotypicMatrix& iso);
IsotypicMatrix isotypic_from_json(const Json& j);

Json decomposition_to_json(const IntervalMultiset& m);
Json cg_table_to_json(const std::vector<CgEntry>& table);
Json verify_report_to_json(const VerifyReport& report);
Json validation_to_json(const ValidationReport& report);
Json classification_to_json(const Classification& c, const Quiver& q);
Json path_vector_to_json(const Quiver& q, const PathVector& v);
Json tensor2_to_json(const Quiver& q, const TensorVector2& t);

// File helpers; missing or unreadable files raise parse_error.
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace qsh

#endif
