#include "json_io.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "gammalat/version.hpp"

namespace gammalat::io {

namespace {

void require_keys(const Json& obj, const std::string& where, const std::set<std::string>& required,
                  const std::set<std::string>& optional = {}) {
  if (!obj.is_object()) throw InvalidInput(where + ": expected an object");
  for (const auto& key : required)
    if (!obj.contains(key)) throw InvalidInput(where + ": missing key \"" + key + "\"");
  for (const auto& [key, value] : obj.items())
    if (!required.count(key) && !optional.count(key)) throw InvalidInput(where + ": unknown key \"" + key + "\"");
}

std::int64_t get_int(const Json& obj, const std::string& key, const std::string& where) {
  const Json& v = obj.at(key);
  if (!v.is_number_integer()) throw InvalidInput(where + "." + key + ": expected an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    throw InvalidInput(where + "." + key + ": out of range");
  return v.get<std::int64_t>();
}

int get_small(const Json& obj, const std::string& key, const std::string& where) {
  const std::int64_t v = get_int(obj, key, where);
  if (v < INT32_MIN || v > INT32_MAX) throw InvalidInput(where + "." + key + ": out of range");
  return static_cast<int>(v);
}

Json labels_to_json(const std::vector<StandardLabel>& labels) {
  Json out = Json::array();
  for (const auto& l : labels) out.push_back({l.a, l.j});
  return out;
}

}  // namespace

ExtensionDatum datum_from_json(const Json& doc) {
  require_keys(doc, "datum", {"p", "n", "r1", "r2", "ramified", "s_counts", "regime"}, {"all_S_split"});
  ExtensionDatum d;
  d.params = GroupParams::make(get_small(doc, "p", "datum"), get_small(doc, "n", "datum"));
  d.r1 = get_int(doc, "r1", "datum");
  d.r2 = get_int(doc, "r2", "datum");

  const Json& ram = doc.at("ramified");
  if (!ram.is_array()) throw InvalidInput("datum.ramified: expected an array");
  for (std::size_t k = 0; k < ram.size(); ++k) {
    const std::string where = "datum.ramified[" + std::to_string(k) + "]";
    require_keys(ram[k], where, {"inertia_order", "decomposition_order"});
    d.ramified.push_back({get_int(ram[k], "inertia_order", where), get_int(ram[k], "decomposition_order", where)});
  }

  const Json& s = doc.at("s_counts");
  if (!s.is_array()) throw InvalidInput("datum.s_counts: expected an array");
  for (const auto& v : s) {
    if (!v.is_number_integer()) throw InvalidInput("datum.s_counts: expected integers");
    d.s_counts.push_back(v.get<std::int64_t>());
  }

  if (!doc.at("regime").is_string()) throw InvalidInput("datum.regime: expected a string");
  d.regime = regime_from_string(doc.at("regime").get<std::string>());

  if (doc.contains("all_S_split")) {
    if (!doc.at("all_S_split").is_boolean()) throw InvalidInput("datum.all_S_split: expected a boolean");
    d.all_S_split = doc.at("all_S_split").get<bool>();
  } else if (d.regime == Regime::HilbertCyclic && d.ramified.empty()) {
    throw InvalidInput("datum: all_S_split is required for an unramified HilbertCyclic datum");
  } else {
    d.all_S_split = std::all_of(d.s_counts.begin() + (d.s_counts.empty() ? 0 : 1), d.s_counts.end(),
                                [](std::int64_t c) { return c == 0; });
  }
  d.validate();
  return d;
}

Json datum_to_json(const ExtensionDatum& d) {
  Json ram = Json::array();
  for (const auto& place : d.ramified)
    ram.push_back({{"inertia_order", place.inertia_order}, {"decomposition_order", place.decomposition_order}});
  return Json{{"p", d.params.p},
              {"n", d.params.n},
              {"r1", d.r1},
              {"r2", d.r2},
              {"ramified", ram},
              {"s_counts", d.s_counts},
              {"regime", to_string(d.regime)},
              {"all_S_split", d.all_S_split}};
}

Json report_to_json(const ExtensionDatum& datum, const DecompositionReport& report) {
  Json summands = Json::array();
  for (const auto& [label, mult] : report.library_summands)
    summands.push_back({{"a", label.a}, {"b", label.b}, {"multiplicity", mult}});
  Json residual = nullptr;
  if (report.residual) {
    const CorollaryResidual& r = *report.residual;
    residual = {{"upsilon_size", r.upsilon_size}, {"r3_size", r.r3_size}, {"d_prime", r.d_prime},
                {"lhs", r.lhs},                   {"rhs", r.rhs},         {"identity_holds", r.identity_holds},
                {"diagnostics", r.diagnostics}};
  }
  return Json{{"input", datum_to_json(datum)},
              {"version", std::string("gammalat ") + kVersion},
              {"status", to_string(report.status)},
              {"library_summands", summands},
              {"perm_multiplicities", report.perm_multiplicities},
              {"minkowski_count", report.minkowski_count},
              {"total_rank", report.total_rank},
              {"residual", residual},
              {"diagnostics", report.diagnostics}};
}

DecompositionReport report_from_json(const Json& doc) {
  require_keys(doc, "report",
               {"input", "version", "status", "library_summands", "perm_multiplicities", "minkowski_count",
                "total_rank", "residual", "diagnostics"});
  DecompositionReport r;
  const std::string status = doc.at("status").get<std::string>();
  if (status == "Resolved")
    r.status = ReportStatus::Resolved;
  else if (status == "PartiallyResolved")
    r.status = ReportStatus::PartiallyResolved;
  else
    throw InvalidInput("report.status: unknown value \"" + status + "\"");
  for (const auto& s : doc.at("library_summands")) {
    require_keys(s, "report.library_summands[]", {"a", "b", "multiplicity"});
    r.library_summands.emplace_back(MabLabel{s.at("a").get<int>(), s.at("b").get<int>()},
                                    s.at("multiplicity").get<std::int64_t>());
  }
  r.perm_multiplicities = doc.at("perm_multiplicities").get<std::vector<std::int64_t>>();
  r.minkowski_count = get_int(doc, "minkowski_count", "report");
  r.total_rank = get_int(doc, "total_rank", "report");
  r.diagnostics = doc.at("diagnostics").get<std::vector<std::string>>();
  const Json& res = doc.at("residual");
  if (!res.is_null()) {
    require_keys(res, "report.residual",
                 {"upsilon_size", "r3_size", "d_prime", "lhs", "rhs", "identity_holds", "diagnostics"});
    CorollaryResidual c;
    c.upsilon_size = get_int(res, "upsilon_size", "report.residual");
    c.r3_size = get_int(res, "r3_size", "report.residual");
    c.d_prime = get_int(res, "d_prime", "report.residual");
    c.lhs = get_int(res, "lhs", "report.residual");
    c.rhs = get_int(res, "rhs", "report.residual");
    c.identity_holds = res.at("identity_holds").get<bool>();
    c.diagnostics = res.at("diagnostics").get<std::vector<std::string>>();
    r.residual = c;
  }
  return r;
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).fits_slong_p()) throw InvariantFailure("matrix entry does not fit in 64 bits");
      row.push_back(m(i, j).get_si());
    }
    rows.push_back(row);
  }
  return rows;
}

Json diagram_to_json(const YakovlevDiagram& d) {
  Json levels = Json::array();
  for (std::size_t i = 0; i < d.levels.size(); ++i) {
    const FiniteGammaModule& x = d.levels[i];
    auto labels = standard_labels(x);
    levels.push_back({{"level", i + 1},
                      {"exponents", x.exponents()},
                      {"action", matrix_to_json(x.action())},
                      {"labels", labels ? labels_to_json(*labels) : Json(nullptr)}});
  }
  auto maps = [](const std::vector<GammaMap>& fs, bool up) {
    Json out = Json::array();
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const auto lower = static_cast<int>(i) + 1;
      out.push_back({{"from", up ? lower : lower + 1}, {"to", up ? lower + 1 : lower},
                     {"matrix", matrix_to_json(fs[i].matrix)}});
    }
    return out;
  };
  return Json{{"p", d.params.p}, {"n", d.params.n}, {"levels", levels}, {"ups", maps(d.ups, true)},
              {"downs", maps(d.downs, false)}};
}

Json density_to_json(const DensityReport& r) {
  return Json{{"p", r.search.p},
              {"bound", r.search.bound},
              {"scanned", r.search.scanned},
              {"qualifying", r.search.qualifying.size()},
              {"observed", r.observed},
              {"expected", r.expected}};
}

std::string canonical_dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace gammalat::io
