#include "rsf/json_io.hpp"

#include <sstream>

namespace rsf {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::invalid_input, what); }

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

}  // namespace

json to_json(const Scalar& s) { return s.str(); }

json to_json(const std::vector<Scalar>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

json to_json(const QMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    out.push_back(row);
  }
  return out;
}

json to_json(const ZetaCoords& z) {
  json pairs = json::array();
  for (const auto& p : z.pairs) pairs.push_back({p.first.str(), p.second.str()});
  return {{"zeta", pairs}, {"h", to_json(z.h)}};
}

json to_json(const OrderedExpCoords& c) {
  return {{"l", to_json(c.l)}, {"u", to_json(c.u)}, {"h", to_json(c.h)}};
}

json to_json(const DualCoords& d) {
  json pairs = json::array();
  for (const auto& p : d.pairs) pairs.push_back({p.first.str(), p.second.str()});
  return {{"eta", pairs}, {"h_dual", to_json(d.h_dual)}};
}

json to_json(const Error& e) {
  json body = {{"kind", kind_name(e.kind())}, {"message", e.what()}};
  body["index"] = e.index() > 0 ? json(e.index()) : json(nullptr);
  body["value"] = e.value() ? json(e.value()->str()) : json(nullptr);
  return {{"error", body}};
}

json roots_json(const RootSystem& rs, const std::vector<int>& indices) {
  json out = json::array();
  for (int a : indices) out.push_back(rs.root(a));
  return out;
}

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  bad("scalar must be a string or an integer");
}

std::vector<Scalar> scalars_from_json(const json& j) {
  if (!j.is_array()) bad("expected an array of scalars");
  std::vector<Scalar> out;
  for (const auto& x : j) out.push_back(scalar_from_json(x));
  return out;
}

QMatrix matrix_from_json(const json& j) {
  const json& m = j.is_object() ? field(j, "matrix") : j;
  if (!m.is_array() || m.empty()) bad("matrix must be a non-empty array of rows");
  const std::size_t n = m.size();
  QMatrix out(n, m[0].is_array() ? m[0].size() : 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!m[i].is_array() || m[i].size() != out.cols()) bad("matrix rows have unequal lengths");
    for (std::size_t k = 0; k < out.cols(); ++k) out(i, k) = scalar_from_json(m[i][k]);
  }
  return out;
}

ZetaCoords zeta_from_json(const json& j) {
  const json& pairs = field(j, "zeta");
  if (!pairs.is_array()) bad("zeta must be an array of pairs");
  ZetaCoords z;
  for (const auto& p : pairs) {
    if (!p.is_array() || p.size() != 2) bad("each zeta entry must be a pair");
    z.pairs.emplace_back(scalar_from_json(p[0]), scalar_from_json(p[1]));
  }
  if (j.contains("h") && !j.at("h").is_null()) z.h = scalars_from_json(j.at("h"));
  return z;
}

OrderedExpCoords coords_from_json(const json& j) {
  OrderedExpCoords c;
  c.l = scalars_from_json(field(j, "l"));
  c.u = scalars_from_json(field(j, "u"));
  if (j.contains("h") && !j.at("h").is_null()) c.h = scalars_from_json(j.at("h"));
  return c;
}

std::vector<RootVec> ordering_from_json(const json& j) {
  const json& o = j.is_object() ? field(j, "ordering") : j;
  if (!o.is_array()) bad("ordering must be an array of integer vectors");
  std::vector<RootVec> out;
  for (const auto& r : o) {
    if (!r.is_array()) bad("each root must be an integer array");
    RootVec v;
    for (const auto& x : r) {
      if (!x.is_number_integer()) bad("root coefficients must be integers");
      v.push_back(x.get<int>());
    }
    out.push_back(v);
  }
  return out;
}

Word word_from_json(const json& j) {
  const json& w = j.is_object() ? field(j, "word") : j;
  if (!w.is_array()) bad("word must be an integer array");
  Word out;
  for (const auto& x : w) {
    if (!x.is_number_integer()) bad("word letters must be integers");
    out.push_back(x.get<int>());
  }
  return out;
}

Word parse_word(const std::string& text) {
  Word out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      bad("bad word letter \"" + item + "\"");
    }
    if (pos != item.size()) bad("bad word letter \"" + item + "\"");
    out.push_back(v);
  }
  return out;
}

std::string render(const json& j) { return j.dump() + "\n"; }

}  // namespace rsf
