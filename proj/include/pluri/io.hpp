#pragma once

// JSON and CSV serialisation of types and reports (nlohmann::json).

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "pluri.hpp"

namespace pluri::io {

using nlohmann::json;

inline json to_json(const FibreDatum& f) {
  return json{{"m", f.m}, {"a", f.a}, {"nu", f.nu}, {"e", f.e}, {"t", f.t}};
}

inline json to_json(const FibrationNumericalType& type) {
  json fibres = json::array();
  for (const auto& f : type.fibres()) fibres.push_back(to_json(f));
  json j{{"p", type.p().value()},
         {"g", type.g()},
         {"chi", type.chi()},
         {"quasi_elliptic", type.quasi_elliptic()},
         {"fibres", fibres}};
  if (type.existence_unknown()) j["existence_unknown"] = true;
  return j;
}

namespace detail {

inline int int_field(const json& j, const char* key, std::optional<int> fallback = std::nullopt) {
  if (!j.contains(key)) {
    if (fallback) return *fallback;
    throw InvalidInput(std::string("missing field '") + key + "'");
  }
  const auto& v = j.at(key);
  if (!v.is_number_integer()) throw InvalidInput(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

inline bool bool_field(const json& j, const char* key) {
  if (!j.contains(key)) return false;
  if (!j.at(key).is_boolean()) throw InvalidInput(std::string("field '") + key + "' must be a boolean");
  return j.at(key).get<bool>();
}

}  // namespace detail

// Fibres may come in any order. A fibre without "a" or "nu" is read as tame
// (a = m - 1, nu = m).
inline FibreDatum fibre_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("fibre must be a JSON object");
  const int m = detail::int_field(j, "m");
  return FibreDatum{m, detail::int_field(j, "a", m - 1), detail::int_field(j, "nu", m),
                    detail::int_field(j, "e", 0), detail::int_field(j, "t", 0)};
}

inline FibrationNumericalType type_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("type must be a JSON object");
  if (!j.contains("fibres") || !j.at("fibres").is_array())
    throw InvalidInput("type needs a 'fibres' array");
  std::vector<FibreDatum> fibres;
  for (const auto& f : j.at("fibres")) fibres.push_back(fibre_from_json(f));
  return FibrationNumericalType(Characteristic(detail::int_field(j, "p", 0)), detail::int_field(j, "g", 0),
                                detail::int_field(j, "chi", 0), detail::bool_field(j, "quasi_elliptic"),
                                std::move(fibres), detail::bool_field(j, "existence_unknown"));
}

inline json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

// Compact one-line label, e.g. "p0 g0 chi0 [2,6,6]" or with wild data
// "p2 g0 chi0 [4(a1,nu1,t2)]".
inline std::string label(const FibrationNumericalType& type) {
  std::ostringstream os;
  os << "p" << type.p().value() << " g" << type.g() << " chi" << type.chi();
  if (type.quasi_elliptic()) os << " quasi";
  os << " [";
  for (std::size_t i = 0; i < type.fibres().size(); ++i) {
    const auto& f = type.fibres()[i];
    if (i) os << ",";
    os << f.m;
    if (f.is_wild() || f.a != f.m - 1 || f.nu != f.m)
      os << "(a" << f.a << ",nu" << f.nu << ",t" << f.t << ")";
  }
  os << "]";
  return os.str();
}

inline json to_json(const PlurigenusValue& v) {
  return json{{"n", v.n}, {"value", v.value}, {"exact", v.exact}};
}

inline json to_json(const AdmissibilityReport& r) {
  return json{{"admissible", r.admissible}, {"violations", r.violations}};
}

inline json to_json(const MainTheoremReport& r) {
  auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
  return json{{"p12", r.p12},
              {"stmt1", r.stmt1},
              {"stmt2_witness", opt(r.stmt2_witness)},
              {"stmt3_witness", opt(r.stmt3_witness)},
              {"stmt4", r.stmt4},
              {"all_hold", r.all_hold()},
              {"exact", r.exact},
              {"series_truncated", r.series_truncated},
              {"series", r.series}};
}

inline json to_json(const CaseAssignment& c) {
  json j{{"label", to_string(c.label)}, {"branch", c.branch}, {"bound", nullptr}};
  if (c.bound) j["bound"] = c.bound->describe();
  return j;
}

inline json to_json(const JumpProfile& jp) {
  return json{{"orders", jp.orders}, {"jumps", jp.jumps}};
}

inline JumpProfile jump_profile_from_json(const json& j, int p, int nu) {
  if (!j.is_object() || !j.contains("orders") || !j.contains("jumps"))
    throw InvalidInput("jump profile needs 'orders' and 'jumps'");
  JumpProfile jp;
  jp.p = p;
  jp.nu = nu;
  jp.orders = j.at("orders").get<std::vector<std::int64_t>>();
  jp.jumps = j.at("jumps").get<std::vector<int>>();
  return jp;
}

inline json to_json(const EnumerationBounds& b) {
  return json{{"max_mult", b.max_mult},
              {"max_fibres", b.max_fibres},
              {"max_chi_plus_t", b.max_chi_plus_t},
              {"characteristics", b.characteristics},
              {"include_wild", b.include_wild},
              {"include_quasi_elliptic", b.include_quasi_elliptic},
              {"max_genus", b.max_genus},
              {"max_fibre_torsion", b.max_fibre_torsion}};
}

inline json types_to_json(const std::vector<FibrationNumericalType>& types) {
  json out = json::array();
  for (const auto& t : types) out.push_back(to_json(t));
  return out;
}

inline json to_json(const ExtremeStat& s) {
  return json{{"value", s.value}, {"count", s.count}, {"examples", types_to_json(s.examples)}};
}

inline json to_json(const VerifyAllReport& r) {
  json cex = json::array();
  for (const auto& c : r.counterexamples)
    cex.push_back(json{{"type", to_json(c.type)}, {"report", to_json(c.report)}});
  return json{{"bounds", to_json(r.bounds)},
              {"pruned", r.pruned},
              {"types_verified", r.types_verified},
              {"conservative_types", r.conservative_types},
              {"existence_unknown_types", r.existence_unknown_types},
              {"nodes_visited", r.nodes_visited},
              {"subtrees_discharged", r.subtrees_discharged},
              {"counterexamples", cex},
              {"cases", r.cases},
              {"extremes",
               {{"exact", r.extremes_exact()},
                {"max_first_nonzero", to_json(r.first_nonzero)},
                {"max_first_ge2", to_json(r.first_ge2)},
                {"discharged_first_nonzero_bound", r.discharged_first_nonzero_bound},
                {"discharged_first_ge2_bound", r.discharged_first_ge2_bound}}},
              {"p13_le_1", {{"count", r.p13_le_1_count}, {"types", types_to_json(r.p13_le_1)}}}};
}

// CSV field quoting per RFC 4180.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Header plus one row per type: label, P_1 .. P_nmax.
inline std::string series_csv(const std::vector<FibrationNumericalType>& types, int n_max) {
  std::ostringstream os;
  os << "type";
  for (int n = 1; n <= n_max; ++n) os << ",P_" << n;
  os << "\n";
  for (const auto& t : types) {
    os << csv_field(label(t));
    for (const auto& v : plurigenera_series(t, n_max))
      if (v.n >= 1) os << "," << v.value;
    os << "\n";
  }
  return os.str();
}

}  // namespace pluri::io
