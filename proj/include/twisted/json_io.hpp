#pragma once

// JSON (de)serialisation of matrices, classes and action specs.
// Integers are accepted as JSON numbers or decimal strings and written as
// numbers when they fit in 64 bits, strings otherwise.

#include "twisted/divisor_dynamics.hpp"
#include "twisted/exact_linalg.hpp"
#include "twisted/integer.hpp"
#include "twisted/twisted_ring.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace twisted::io {

using json = nlohmann::json;

inline Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw domain_error("not an integer: \"" + s + "\"");
    return Integer(s);
  }
  throw domain_error("expected an integer, got " + j.dump());
}

inline json to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return json(static_cast<std::int64_t>(x));
  return json(x.str());
}

inline json to_json(const Rational& x) { return json(to_string(x)); }

inline std::vector<Integer> vector_from_json(const json& j) {
  if (!j.is_array()) throw domain_error("expected an array of integers, got " + j.dump());
  std::vector<Integer> v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

inline json to_json(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

inline IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw domain_error("matrix must be a nonempty array of rows");
  std::vector<std::vector<Integer>> rows;
  for (const auto& row : j) rows.push_back(vector_from_json(row));
  return IntMatrix::from_rows(rows);
}

inline json to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.dim(); ++k) row.push_back(to_json(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

inline json to_json(const RationalInterval& r) {
  return {{"lo", to_json(r.lo)}, {"hi", to_json(r.hi)},
          {"lo_approx", to_double(r.lo)}, {"hi_approx", to_double(r.hi)}};
}

inline json to_json(const Monomial& u) { return to_json(u.exps); }

inline json parse_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw domain_error("invalid JSON for " + what + ": " + e.what());
  }
}

/// {"P": [[...]], "curves": [[...]], "dimX": n, "degSigma": n, "ampleFlag": bool}
inline NumericalActionSpec spec_from_json(const json& j) {
  if (!j.is_object()) throw domain_error("numerical action spec must be a JSON object");
  if (!j.contains("P")) throw domain_error("numerical action spec is missing \"P\"");
  if (!j.contains("curves")) throw domain_error("numerical action spec is missing \"curves\"");
  NumericalActionSpec spec;
  spec.action = matrix_from_json(j.at("P"));
  for (const auto& c : j.at("curves")) spec.curves.push_back({vector_from_json(c)});
  if (j.contains("dimX")) spec.dim_x = static_cast<std::int64_t>(integer_from_json(j.at("dimX")));
  if (j.contains("degSigma") && !j.at("degSigma").is_null())
    spec.deg_sigma = integer_from_json(j.at("degSigma"));
  if (j.contains("ampleFlag")) spec.ample_flag = j.at("ampleFlag").get<bool>();
  spec.validate();
  return spec;
}

inline json to_json(const NumericalActionSpec& s) {
  json curves = json::array();
  for (const auto& c : s.curves) curves.push_back(to_json(c.coords));
  json out = {{"P", to_json(s.action)}, {"curves", std::move(curves)}, {"dimX", s.dim_x},
              {"ampleFlag", s.ample_flag}};
  out["degSigma"] = s.deg_sigma ? to_json(*s.deg_sigma) : json(nullptr);
  return out;
}

}  // namespace twisted::io
