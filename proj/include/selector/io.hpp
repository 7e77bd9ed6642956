#pragma once

#include <cctype>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "selector/distribution.hpp"
#include "selector/error.hpp"
#include "selector/fixed_point.hpp"
#include "selector/poly.hpp"
#include "selector/rational.hpp"
#include "selector/simulate.hpp"
#include "selector/sperner.hpp"

namespace selector {

// Floats always carry 17 significant digits so round trips are lossless and
// output is byte-stable. Non-finite values become quoted sentinels.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "\"nan\"";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string json_escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

// Minimal insertion-ordered JSON builder: values are preformatted tokens.
class JsonWriter {
 public:
  JsonWriter& field(const std::string& key, const std::string& token) {
    if (!first_) body_ += ",";
    first_ = false;
    body_ += json_escape(key) + ":" + token;
    return *this;
  }
  JsonWriter& str(const std::string& key, const std::string& value) {
    return field(key, json_escape(value));
  }
  JsonWriter& num(const std::string& key, double value) {
    return field(key, format_double(value));
  }
  JsonWriter& integer(const std::string& key, long long value) {
    return field(key, std::to_string(value));
  }
  JsonWriter& boolean(const std::string& key, bool value) {
    return field(key, value ? "true" : "false");
  }
  std::string done() const { return "{" + body_ + "}"; }

 private:
  std::string body_;
  bool first_ = true;
};

inline std::string json_array(const std::vector<std::string>& tokens) {
  std::string out = "[";
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ",";
    out += tokens[i];
  }
  return out + "]";
}

inline std::string poly_to_json(const RationalPoly& p) {
  std::vector<std::string> toks;
  for (const auto& c : p.coeffs) toks.push_back(json_escape(rational_to_string(c)));
  return json_array(toks);
}

inline std::string counts_to_json(const std::vector<long long>& c) {
  std::vector<std::string> toks;
  for (long long v : c) toks.push_back(std::to_string(v));
  return json_array(toks);
}

// Family input: `n=4;{1,2},{3,4}` (whitespace-insensitive) or the JSON form
// {"n":4,"sets":[[1,2],[3,4]]}. Both go through canonicalize.
inline SpernerFamily parse_family(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) fail(errc::parse_error, "empty family");
  if (s[0] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(s);
    } catch (const std::exception& e) {
      fail(errc::parse_error, std::string("bad family JSON: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("sets") || !j["n"].is_number_integer() ||
        !j["sets"].is_array())
      fail(errc::parse_error, "family JSON needs integer 'n' and array 'sets'");
    std::vector<std::vector<int>> sets;
    for (const auto& arr : j["sets"]) {
      if (!arr.is_array()) fail(errc::parse_error, "each set must be an array");
      std::vector<int> one;
      for (const auto& e : arr) {
        if (!e.is_number_integer()) fail(errc::parse_error, "set elements must be integers");
        one.push_back(e.get<int>());
      }
      sets.push_back(std::move(one));
    }
    return make_family(sets, j["n"].get<int>());
  }
  if (s.rfind("n=", 0) != 0) fail(errc::parse_error, "family text must start with n=");
  std::size_t semi = s.find(';');
  if (semi == std::string::npos) fail(errc::parse_error, "missing ';' after ground size");
  int n = 0;
  try {
    n = std::stoi(s.substr(2, semi - 2));
  } catch (...) {
    fail(errc::parse_error, "bad ground size");
  }
  std::vector<std::vector<int>> sets;
  std::size_t i = semi + 1;
  while (i < s.size()) {
    if (s[i] == ',') {
      ++i;
      continue;
    }
    if (s[i] != '{') fail(errc::parse_error, "expected '{' in set list");
    std::size_t close = s.find('}', i);
    if (close == std::string::npos) fail(errc::parse_error, "unterminated set");
    std::vector<int> one;
    std::size_t j = i + 1;
    while (j < close) {
      std::size_t next = std::min(close, s.find(',', j));
      if (next > j) {
        try {
          one.push_back(std::stoi(s.substr(j, next - j)));
        } catch (...) {
          fail(errc::parse_error, "bad element in set");
        }
      }
      j = next + 1;
    }
    sets.push_back(std::move(one));
    i = close + 1;
  }
  return make_family(sets, n);
}

// --dist grammar: uniform | bernoulli:q | normal:m,s | discrete:v1:p1,v2:p2,...
inline DistributionModel parse_dist(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "uniform") return DistributionModel::uniform01();
  auto starts = [&](const char* p) { return s.rfind(p, 0) == 0; };
  if (starts("bernoulli:")) return DistributionModel::bernoulli(parse_rational(s.substr(10)));
  if (starts("normal:")) {
    std::string rest = s.substr(7);
    std::size_t comma = rest.find(',');
    if (comma == std::string::npos) fail(errc::parse_error, "normal needs mean,sd");
    return DistributionModel::normal(to_double(parse_rational(rest.substr(0, comma))),
                                     to_double(parse_rational(rest.substr(comma + 1))));
  }
  if (starts("discrete:")) {
    std::string rest = s.substr(9);
    std::vector<std::pair<double, Rational>> atoms;
    std::size_t i = 0;
    while (i < rest.size()) {
      std::size_t comma = std::min(rest.size(), rest.find(',', i));
      std::string pair = rest.substr(i, comma - i);
      std::size_t colon = pair.find(':');
      if (colon == std::string::npos) fail(errc::parse_error, "discrete atoms are value:prob");
      atoms.emplace_back(to_double(parse_rational(pair.substr(0, colon))),
                         parse_rational(pair.substr(colon + 1)));
      i = comma + 1;
    }
    return DistributionModel::discrete(std::move(atoms));
  }
  fail(errc::parse_error, "unknown distribution '" + raw + "'");
}

inline std::string family_to_text(const SpernerFamily& f) {
  std::string out = "n=" + std::to_string(f.n) + ";";
  for (int i = 0; i < f.k(); ++i) {
    if (i) out += ",";
    out += "{";
    bool first = true;
    for (int j = 0; j < f.n; ++j)
      if (f.sets[i] & (1u << j)) {
        if (!first) out += ",";
        out += std::to_string(j + 1);
        first = false;
      }
    out += "}";
  }
  return out;
}

inline std::string error_to_json(const selector_error& e) {
  JsonWriter inner;
  inner.str("code", e.code_name()).str("message", e.what());
  JsonWriter outer;
  outer.field("error", inner.done());
  return outer.done();
}

}  // namespace selector
