#pragma once

#include <json.hpp>

#include "rsf/error.hpp"
#include "rsf/factor.hpp"

namespace rsf {

using json = nlohmann::json;

json to_json(const Scalar& s);
json to_json(const std::vector<Scalar>& v);
json to_json(const QMatrix& m);
json to_json(const ZetaCoords& z);
json to_json(const OrderedExpCoords& c);
json to_json(const DualCoords& d);
json to_json(const Error& e);
json roots_json(const RootSystem& rs, const std::vector<int>& indices);

// all parsers throw invalid_input on malformed documents
Scalar scalar_from_json(const json& j);
std::vector<Scalar> scalars_from_json(const json& j);
QMatrix matrix_from_json(const json& j);
ZetaCoords zeta_from_json(const json& j);
OrderedExpCoords coords_from_json(const json& j);
std::vector<RootVec> ordering_from_json(const json& j);
Word word_from_json(const json& j);

// "1,2,1"
Word parse_word(const std::string& text);

// dump() plus a trailing newline
std::string render(const json& j);

}  // namespace rsf
