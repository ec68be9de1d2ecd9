#pragma once

// JSON forms. Objects are ordered_json so key order is fixed and reports can
// be diffed byte for byte.

#include "svlie/cohomology.hpp"
#include "svlie/literal.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace svlie {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

class FormatError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline Json window_json(const Window &w) { return Json{{"lo", w.lo}, {"hi", w.hi}}; }

inline Json params_json(const AlgebraParams &p) {
  return Json{{"s", to_string(p.s)}, {"lambda", to_string(p.lambda)}, {"central", p.central}};
}

// Derivation tables: {target, degree, window, values: [{gen, value}]}.

template <class V> Json table_to_json(const DerivationTable<V> &d) {
  Json values = Json::array();
  for (const auto &[g, v] : d.values) values.push_back(Json{{"gen", to_string(g)}, {"value", format(v)}});
  return Json{{"target", to_string(DerivationTable<V>::target)},
              {"degree", d.degree ? Json(to_string(*d.degree)) : Json(nullptr)},
              {"window", window_json(d.window)},
              {"values", std::move(values)}};
}

namespace detail {

inline const Json &field(const Json &j, const char *key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::string string_field(const Json &j, const char *key) {
  const Json &v = field(j, key);
  if (!v.is_string()) throw FormatError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

inline Window window_from_json(const Json &j) {
  const Json &lo = field(j, "lo"), &hi = field(j, "hi");
  if (!lo.is_number_integer() || !hi.is_number_integer()) throw FormatError("window bounds must be integers");
  Window w{lo.get<int>(), hi.get<int>()};
  if (w.lo > 0 || w.hi < 0) throw FormatError("window must satisfy lo <= 0 <= hi");
  return w;
}

inline BasisIndex single_gen(const std::string &text) {
  Element e = parse_element(text);
  if (e.size() != 1 || e.begin()->second != 1) throw FormatError("'" + text + "' is not a single generator");
  return e.begin()->first;
}

} // namespace detail

/// Reads a table whose target must match V. Literal errors surface as
/// ParseError, shape errors as FormatError.
template <class V> DerivationTable<V> table_from_json(const Json &j) {
  const std::string target = detail::string_field(j, "target");
  if (target != to_string(DerivationTable<V>::target))
    throw FormatError("table target is '" + target + "', expected '" + to_string(DerivationTable<V>::target) + "'");
  DerivationTable<V> d;
  d.window = detail::window_from_json(detail::field(j, "window"));
  const Json &deg = detail::field(j, "degree");
  if (deg.is_null()) {
    d.degree = std::nullopt;
  } else if (deg.is_string()) {
    auto h = try_parse_half_int(deg.get<std::string>());
    if (!h) throw FormatError("degree must be a half-integer");
    d.degree = *h;
  } else {
    throw FormatError("degree must be a string or null");
  }
  const Json &values = detail::field(j, "values");
  if (!values.is_array()) throw FormatError("'values' must be an array");
  for (const auto &entry : values) {
    BasisIndex g = detail::single_gen(detail::string_field(entry, "gen"));
    std::string text = detail::string_field(entry, "value");
    V v;
    if constexpr (std::is_same_v<V, Element>) {
      v = parse_element(text);
    } else {
      v = parse_tensor2(text);
    }
    if (d.values.count(g)) throw FormatError("duplicate generator " + to_string(g));
    d.set(g, std::move(v));
  }
  return d;
}

/// Peeks the target marker of a serialized table.
inline Target table_target(const Json &j) {
  const std::string t = detail::string_field(j, "target");
  if (t == "algebra") return Target::Algebra;
  if (t == "tensor-square") return Target::TensorSquare;
  throw FormatError("unknown target '" + t + "'");
}

inline Json report_to_json(const CohomologyReport &r) {
  Json cert = nullptr;
  if (r.certificate) {
    cert = Json{{"names", r.certificate->names},
                {"all_in_kernel", r.certificate->all_in_kernel},
                {"rank_mod_inner", r.certificate->rank_mod_inner}};
  }
  return Json{{"schema", kReportSchema},
              {"case",
               Json{{"s", to_string(r.params.s)},
                    {"lambda", to_string(r.params.lambda)},
                    {"central", r.params.central},
                    {"target", to_string(r.target)},
                    {"alpha", to_string(r.alpha)},
                    {"window", window_json(r.window)},
                    {"interior", window_json(r.interior)},
                    {"band", r.radius}}},
              {"unknowns", r.unknowns},
              {"equations", r.equations},
              {"rank", r.rank},
              {"dim_der", r.dim_der},
              {"dim_inn", r.dim_inn},
              {"dim_h1", r.dim_h1},
              {"inner_in_kernel", r.inner_in_kernel},
              {"certificate", std::move(cert)}};
}

} // namespace svlie
