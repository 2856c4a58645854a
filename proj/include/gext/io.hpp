#pragma once

// Text input of rims and the versioned JSON document every command emits.

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gext/error.hpp"
#include "gext/ext.hpp"
#include "gext/monomial_matrix.hpp"
#include "gext/rim.hpp"
#include "gext/trapezia.hpp"

namespace gext {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "1";

/// Parses "1,2,4,5": strictly ascending labels in 1..n, exactly k of them.
inline Rim parse_rim(std::string_view text, int n, int k) {
  if (n < 2) throw Error(ErrorCode::InvalidRim, "n must be at least 2, got " + std::to_string(n));
  std::vector<int> labels;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view token = text.substr(pos, comma - pos);
    int value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size())
      throw Error(ErrorCode::InvalidRim, "token '" + std::string(token) + "' is not an integer label");
    if (value < 1 || value > n)
      throw Error(ErrorCode::InvalidRim, "token '" + std::string(token) + "' is outside 1.." + std::to_string(n));
    if (!labels.empty() && value == labels.back())
      throw Error(ErrorCode::InvalidRim, "token '" + std::string(token) + "' is a duplicate");
    if (!labels.empty() && value < labels.back())
      throw Error(ErrorCode::InvalidRim, "token '" + std::string(token) + "' breaks ascending order");
    labels.push_back(value);
    pos = comma + 1;
  }
  return Rim(n, k, std::move(labels));
}

struct Trace {
  std::string path;  // algorithm route taken
  int rotation = 0;  // word rotation applied, 0 when no word is involved
  bool verified = false;
  friend bool operator==(const Trace&, const Trace&) = default;
};

struct QueryResult {
  std::string command;
  Json input;
  Json result;
  Trace trace;
  friend bool operator==(const QueryResult&, const QueryResult&) = default;
};

inline Json to_json(const QueryResult& q) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = q.command;
  j["input"] = q.input;
  j["result"] = q.result;
  j["trace"] = {{"path", q.trace.path}, {"rotation", q.trace.rotation}, {"verified", q.trace.verified}};
  return j;
}

inline QueryResult query_from_json(const Json& j) {
  if (!j.is_object() || j.value("schema", "") != kSchemaVersion)
    throw Error(ErrorCode::MalformedMatrix, "not a schema " + std::string(kSchemaVersion) + " document");
  QueryResult q;
  q.command = j.at("command").get<std::string>();
  q.input = j.at("input");
  q.result = j.at("result");
  const Json& t = j.at("trace");
  q.trace = {t.at("path").get<std::string>(), t.at("rotation").get<int>(), t.at("verified").get<bool>()};
  return q;
}

// Canonical text: two-space indent, trailing newline.
inline std::string dump(const QueryResult& q) { return to_json(q).dump(2) + "\n"; }

inline QueryResult parse_query(std::string_view text) { return query_from_json(Json::parse(text)); }

inline Json rim_json(const Rim& r) { return r.elements(); }

inline Json ext_json(const ExtDecomposition& e) {
  Json j;
  j["degree"] = e.degree;
  j["shape"] = to_string(e.shape);
  if (e.degree % 2) {
    j["exponents"] = e.exponents;
  } else {
    j["a"] = e.a;
  }
  j["dimension"] = e.dimension;
  j["context"] = rim_json(e.context);
  return j;
}

inline Json word_json(const TrapeziumWord& w) {
  Json boxes = Json::array();
  for (const auto& b : w.boxes) boxes.push_back({b.left, b.right});
  return {{"raw", w.raw()}, {"reduced", w.reduced()}, {"s", w.s()}, {"boxes", boxes}};
}

// Exponent grid with null for zero entries; signs go in a parallel grid.
inline Json matrix_json(const MonomialMatrix& m) {
  Json exps = Json::array(), signs = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json er = Json::array(), sr = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Monomial* x = m.at(r, c);
      er.push_back(x ? Json(x->exponent) : Json(nullptr));
      sr.push_back(x ? x->sign : 0);
    }
    exps.push_back(er);
    signs.push_back(sr);
  }
  return {{"rows", m.row_labels()}, {"cols", m.col_labels()}, {"exponents", exps}, {"signs", signs}};
}

}  // namespace gext
