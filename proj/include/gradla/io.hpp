#pragma once

#include "gradla/gmatrix.hpp"

#include <json.hpp>

#include <string>

namespace gradla::io {

using Json = nlohmann::json;

// Any malformed document raises ParseError naming the source and the offending location.
Json read_json_file(const std::string& path);
Json parse_json(const std::string& text, const std::string& source);

// Scalars are strings ("1/2 + 3*z^2") or integers.
CycloScalar scalar_from_json(const Json& j, int root_order);

GradingGroup group_from_json(const Json& j);
// {"moduli": [...], "root_order": N, "exponents": [[...]]}
Json to_json(const BiadditiveMap& f);
Bicharacter bicharacter_from_json(const Json& j);
Multiplier multiplier_from_json(const Json& j);

GroupElement degree_from_json(const GradingGroup& g, const Json& j);
Json to_json(const GroupElement& x);

// {"group", "lambda", "root_order", "basis": [{"label", "degree"}], "table": {"a,b": [{"k", "c"}]}}
GradedAlgebra algebra_from_json(const Json& j);
Json to_json(const GradedAlgebra& a);
// "preset:NAME[:args]" or a path to an algebra document
GradedAlgebra load_algebra(const std::string& source);

// [{"b": label, "c": scalar}, ...]
AlgebraElement element_from_json(const GradedAlgebra& a, const Json& j);
Json to_json(const AlgebraElement& e);

// {"row_degrees", "col_degrees", "entries": [[element, ...], ...]}
GradedMatrix matrix_from_json(const GradedAlgebra& a, const Json& j);
Json to_json(const GradedMatrix& m);
// a bare degree list sets rows and columns; an object may set either
GradedMatrix override_degrees(const GradedMatrix& m, const Json& degrees);

// {"format": 1, "result": element, "degree": [...] | "inhomogeneous"}
Json result_document(const AlgebraElement& e);

} // namespace gradla::io
