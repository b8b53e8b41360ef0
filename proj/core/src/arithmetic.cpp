#include "gammalat/arithmetic.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "gammalat/cohomology.hpp"
#include "gammalat/lattice.hpp"

namespace gammalat {

namespace {

bool is_power_of(std::int64_t x, std::int64_t p) {
  if (x < 1) return false;
  while (x % p == 0) x /= p;
  return x == 1;
}

int log_p(std::int64_t x, std::int64_t p) {
  int e = 0;
  while (x > 1) {
    x /= p;
    ++e;
  }
  return e;
}

void require_hilbert_cyclic(const ExtensionDatum& datum) {
  datum.validate();
  if (datum.regime != Regime::HilbertCyclic)
    throw UnsupportedRegime("the predictor needs the HilbertCyclic regime; General data only supports guaranteed_summands");
  if (datum.ramified.empty() && !datum.all_S_split)
    throw UnsupportedRegime("unramified extension with S-places that do not split completely: the maps are not given");
}

std::int64_t lattice_fixed_rank_cached(const GroupParams& params, const MabLabel& label, int j) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int, int, int>, std::int64_t> cache;
  const auto key = std::make_tuple(params.p, params.n, label.a, label.b, j);
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const auto value = static_cast<std::int64_t>(fixed_rank(mab_lattice(params, label.a, label.b), j));
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(key, value);
  return value;
}

std::vector<std::pair<MabLabel, std::int64_t>> tally(std::vector<MabLabel> labels) {
  std::sort(labels.begin(), labels.end());
  std::vector<std::pair<MabLabel, std::int64_t>> out;
  for (const auto& l : labels) {
    if (!out.empty() && out.back().first == l)
      ++out.back().second;
    else
      out.emplace_back(l, 1);
  }
  return out;
}

}  // namespace

std::string to_string(Regime r) { return r == Regime::HilbertCyclic ? "HilbertCyclic" : "General"; }

Regime regime_from_string(const std::string& s) {
  if (s == "HilbertCyclic") return Regime::HilbertCyclic;
  if (s == "General") return Regime::General;
  throw InvalidInput("unknown regime '" + s + "' (expected HilbertCyclic or General)");
}

std::string to_string(ReportStatus s) { return s == ReportStatus::Resolved ? "Resolved" : "PartiallyResolved"; }

void ExtensionDatum::validate() const {
  GroupParams::make(params.p, params.n);
  if (r1 < 0 || r2 < 0) throw InvalidInput("r1 and r2 must be nonnegative");
  if (r1 + r2 < 1) throw InvalidInput("r1 + r2 must be at least 1");
  const std::int64_t order = params.order();
  for (std::size_t k = 0; k < ramified.size(); ++k) {
    const auto& place = ramified[k];
    const std::string where = "ramified place " + std::to_string(k) + ": ";
    if (!is_power_of(place.inertia_order, params.p) || !is_power_of(place.decomposition_order, params.p))
      throw InvalidInput(where + "orders must be powers of p");
    if (order % place.decomposition_order != 0) throw InvalidInput(where + "decomposition order must divide p^n");
    if (place.inertia_order < params.p) throw InvalidInput(where + "inertia order must be at least p");
    if (place.decomposition_order % place.inertia_order != 0)
      throw InvalidInput(where + "inertia order must divide decomposition order");
  }
  if (s_counts.size() != static_cast<std::size_t>(params.n) + 1)
    throw InvalidInput("s_counts must have n + 1 entries");
  for (auto s : s_counts)
    if (s < 0) throw InvalidInput("s_counts must be nonnegative");
  const bool split = std::all_of(s_counts.begin() + 1, s_counts.end(), [](std::int64_t s) { return s == 0; });
  if (regime == Regime::HilbertCyclic && ramified.empty() && all_S_split != split)
    throw InvalidInput("all_S_split disagrees with s_counts");
}

std::int64_t ExtensionDatum::s_size() const {
  std::int64_t s = 0;
  for (auto c : s_counts) s += c;
  return s;
}

std::int64_t ExtensionDatum::max_inertia() const {
  std::int64_t m = 1;
  for (const auto& place : ramified) m = std::max(m, place.inertia_order);
  return m;
}

std::int64_t ExtensionDatum::gs_order() const {
  std::int64_t m = 1;
  for (std::size_t j = 0; j < s_counts.size(); ++j)
    if (s_counts[j] > 0) m = std::max(m, params.subgroup_order(static_cast<int>(j)));
  return m;
}

UpsilonStats upsilon_stats(const ExtensionDatum& datum) {
  UpsilonStats st;
  for (const auto& place : datum.ramified) ++st.counts[{place.inertia_order, place.decomposition_order}];
  for (const auto& [pair, count] : st.counts)
    if (count >= 3) {
      st.upsilon.push_back(pair);
      st.r3 += count;
    }
  return st;
}

std::vector<std::int64_t> character_ranks(const ExtensionDatum& datum) {
  datum.validate();
  const auto& params = datum.params;
  std::vector<std::int64_t> ranks;
  for (int j = 0; j <= params.n; ++j) {
    std::int64_t rk = (datum.r1 + datum.r2) * params.index(j) - 1;
    for (int i = 0; i <= params.n; ++i) rk += datum.s_counts[static_cast<std::size_t>(i)] * params.index(std::max(i, j));
    ranks.push_back(rk);
  }
  return ranks;
}

WjPresentation wj_presentation_detail(const ExtensionDatum& datum, int j) {
  require_hilbert_cyclic(datum);
  if (datum.ramified.empty()) throw UnsupportedRegime("W_J presentations need at least one ramified place");
  const GroupParams& params = datum.params;
  params.check_subgroup_index(j);
  const std::int64_t order_j = params.subgroup_order(j);
  const std::int64_t t = std::max(datum.max_inertia(), datum.gs_order());
  WjPresentation w;
  w.a_order = std::max(order_j, t) / t;
  std::size_t g = 1;
  for (const auto& place : datum.ramified) {
    w.orbit_sizes.push_back(params.order() / std::max(place.decomposition_order, order_j));
    w.e_values.push_back(std::max(order_j, t) / std::max(std::min(order_j, place.decomposition_order), t));
    g += static_cast<std::size_t>(w.orbit_sizes.back());
  }
  // Relations: |A| Y, then |J_0| X_k - e Y for every X; sigma permutes each
  // place's X_k cyclically and fixes Y.
  std::vector<IntVector> relations;
  IntMatrix action(g, g);
  action(0, 0) = 1;
  {
    IntVector r(g);
    r[0] = w.a_order;
    relations.push_back(r);
  }
  std::size_t offset = 1;
  for (std::size_t k = 0; k < datum.ramified.size(); ++k) {
    const std::int64_t j0 = std::min(order_j, datum.ramified[k].inertia_order);
    const auto q = static_cast<std::size_t>(w.orbit_sizes[k]);
    for (std::size_t l = 0; l < q; ++l) {
      IntVector r(g);
      r[offset + l] = j0;
      r[0] = -w.e_values[k];
      relations.push_back(r);
      action(offset + (l + 1) % q, offset + l) = 1;
    }
    offset += q;
  }
  w.presented = FiniteGammaModule(params, IntMatrix::from_columns(relations, g), action);
  w.canonical = canonicalize(w.presented);
  return w;
}

FiniteGammaModule wj_presentation(const ExtensionDatum& datum, int j) {
  return wj_presentation_detail(datum, j).canonical.module;
}

YakovlevDiagram predict_diagram(const ExtensionDatum& datum) {
  require_hilbert_cyclic(datum);
  const GroupParams& params = datum.params;
  if (datum.ramified.empty()) return lemma_diagram(params, params.n, 0);
  std::vector<WjPresentation> w;
  for (int j = 0; j <= params.n; ++j) w.push_back(wj_presentation_detail(datum, j));
  YakovlevDiagram d;
  d.params = params;
  for (int j = 1; j <= params.n; ++j) d.levels.push_back(w[static_cast<std::size_t>(j)].canonical.module);
  // alpha_J : W_J -> W_J' and beta_J : W_J' -> W_J for J = Gamma_j, J' = Gamma_{j-1}.
  for (int j = 2; j <= params.n; ++j) {
    const WjPresentation& big = w[static_cast<std::size_t>(j)];
    const WjPresentation& small = w[static_cast<std::size_t>(j) - 1];
    const std::size_t gb = big.presented.generators();
    const std::size_t gs = small.presented.generators();
    IntMatrix alpha(gs, gb);
    IntMatrix beta(gb, gs);
    alpha(0, 0) = 1;
    beta(0, 0) = params.p;
    std::size_t ob = 1;
    std::size_t os = 1;
    for (std::size_t k = 0; k < datum.ramified.size(); ++k) {
      const auto qb = static_cast<std::size_t>(big.orbit_sizes[k]);
      const auto qs = static_cast<std::size_t>(small.orbit_sizes[k]);
      const bool inside = params.subgroup_order(j) <= datum.ramified[k].decomposition_order;
      if (inside) {
        for (std::size_t l = 0; l < qb; ++l) {
          alpha(os + l, ob + l) = 1;
          beta(ob + l, os + l) = params.p;
        }
      } else {
        for (std::size_t l = 0; l < qs; ++l) {
          alpha(os + l, ob + l % qb) = 1;
          beta(ob + l % qb, os + l) = 1;
        }
      }
      ob += qb;
      os += qs;
    }
    const CanonicalForm& cb = big.canonical;
    const CanonicalForm& cs = small.canonical;
    const auto carry = [&](const CanonicalForm& from, const CanonicalForm& to, const IntMatrix& m) {
      if (from.module.is_zero() || to.module.is_zero()) return zero_map(from.module, to.module);
      return make_map(from.module, to.module, to.to_canonical * m * from.from_canonical);
    };
    d.downs.push_back(carry(cb, cs, alpha));
    d.ups.push_back(carry(cs, cb, beta));
  }
  if (auto defect = diagram_defect(d)) throw InvariantFailure("predicted diagram is invalid: " + *defect);
  return d;
}

std::int64_t mab_rank(const GroupParams& params, const MabLabel& label) {
  return lattice_fixed_rank_cached(params, label, 0);
}

std::int64_t mab_fixed_rank(const GroupParams& params, const MabLabel& label, int j) {
  return lattice_fixed_rank_cached(params, label, j);
}

GuaranteedSummands guaranteed_summands(const ExtensionDatum& datum) {
  datum.validate();
  const UpsilonStats st = upsilon_stats(datum);
  GuaranteedSummands out;
  for (const auto& pair : st.upsilon) {
    const int a = log_p(pair.first, datum.params.p);
    const int b = log_p(pair.second, datum.params.p) - a;
    out.summands.emplace_back(MabLabel{a, b}, st.counts.at(pair) - 2);
  }
  std::sort(out.summands.begin(), out.summands.end());
  const std::int64_t n = datum.params.n;
  out.subgroup_pairs = (n + 1) * (n + 2) / 2;
  out.remainder_bound = 1 + 2 * out.subgroup_pairs;
  return out;
}

DecompositionReport recover_structure(const ExtensionDatum& datum) {
  require_hilbert_cyclic(datum);
  const GroupParams& params = datum.params;
  const int n = params.n;
  DecompositionReport report;
  const YakovlevDiagram d = predict_diagram(datum);
  const SubtractionResult sub = subtract_library(d);
  report.library_summands = tally(sub.extracted);
  report.diagnostics = sub.diagnostics;
  bool resolved = true;
  if (!sub.remainder) {
    resolved = false;
    report.diagnostics.push_back("library subtraction left an unresolved remainder");
  } else if (!is_zero_diagram(*sub.remainder)) {
    resolved = false;
    report.diagnostics.push_back("the diagram has a part outside the M_{a,b} library");
  }

  const std::vector<std::int64_t> ranks = character_ranks(datum);
  report.total_rank = ranks[0];
  std::vector<std::int64_t> residual(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    std::int64_t dagger = 0;
    for (const auto& [label, mult] : report.library_summands) dagger += mult * mab_fixed_rank(params, label, j);
    residual[static_cast<std::size_t>(j)] = ranks[static_cast<std::size_t>(j)] - dagger;
  }
  // Partial sums P_j = t_0 + ... + t_j from consecutive differences.
  std::vector<std::int64_t> partial(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const std::int64_t step = params.index(j) - params.index(j + 1);
    const std::int64_t diff = residual[static_cast<std::size_t>(j)] - residual[static_cast<std::size_t>(j) + 1];
    if (diff % step != 0) {
      resolved = false;
      report.diagnostics.push_back("rank difference at level " + std::to_string(j) + " is not divisible by " +
                                   std::to_string(step));
    }
    partial[static_cast<std::size_t>(j)] = diff / step;
  }
  report.perm_multiplicities.resize(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i)
    report.perm_multiplicities[static_cast<std::size_t>(i)] =
        partial[static_cast<std::size_t>(i)] - (i > 0 ? partial[static_cast<std::size_t>(i) - 1] : 0);
  report.perm_multiplicities[static_cast<std::size_t>(n)] =
      residual[static_cast<std::size_t>(n)] - partial[static_cast<std::size_t>(n) - 1];
  for (int i = 0; i <= n; ++i)
    if (report.perm_multiplicities[static_cast<std::size_t>(i)] < 0) {
      resolved = false;
      report.diagnostics.push_back("t_" + std::to_string(i) + " = " +
                                   std::to_string(report.perm_multiplicities[static_cast<std::size_t>(i)]) +
                                   " is negative: the datum is outside the supported regime");
    }
  // Rank accounting against the Dirichlet-Herbrand total.
  std::int64_t accounted = 0;
  for (const auto& [label, mult] : report.library_summands) accounted += mult * mab_rank(params, label);
  for (int i = 0; i <= n; ++i) accounted += report.perm_multiplicities[static_cast<std::size_t>(i)] * params.index(i);
  if (resolved && accounted != report.total_rank)
    throw InvariantFailure("rank accounting failed: " + std::to_string(accounted) + " vs " +
                           std::to_string(report.total_rank));
  report.minkowski_count = report.perm_multiplicities[0];
  report.status = resolved ? ReportStatus::Resolved : ReportStatus::PartiallyResolved;
  if (resolved) report.residual = corollary_residual(datum, report);
  return report;
}

std::int64_t minkowski_count(const DecompositionReport& report) {
  if (report.status != ReportStatus::Resolved) throw InvalidInput("minkowski_count needs a Resolved report");
  return report.perm_multiplicities.at(0);
}

CorollaryResidual corollary_residual(const ExtensionDatum& datum, const DecompositionReport& report) {
  if (report.status != ReportStatus::Resolved) throw InvalidInput("corollary_residual needs a Resolved report");
  const GroupParams& params = datum.params;
  const UpsilonStats st = upsilon_stats(datum);
  const GuaranteedSummands g = guaranteed_summands(datum);
  CorollaryResidual r;
  r.upsilon_size = static_cast<std::int64_t>(st.upsilon.size());
  r.r3_size = st.r3;
  // M_{L/K}: the library part with the guaranteed summands taken out.
  std::map<MabLabel, std::int64_t> rest;
  for (const auto& [label, mult] : report.library_summands) rest[label] += mult;
  for (const auto& [label, mult] : g.summands) {
    rest[label] -= mult;
    if (rest[label] < 0) {
      std::ostringstream msg;
      msg << "guaranteed summand M_{" << label.a << "," << label.b << "} missing from the recovered structure";
      r.diagnostics.push_back(msg.str());
    }
  }
  for (const auto& [label, mult] : rest)
    r.d_prime += mult * (mab_rank(params, label) - mab_fixed_rank(params, label, 1));
  const std::int64_t step = params.index(0) - params.index(1);
  r.lhs = report.perm_multiplicities.at(0) * step;
  r.rhs = (datum.r1 + datum.r2 + datum.n_SL() + st.correction()) * step - r.d_prime;
  r.identity_holds = r.diagnostics.empty() && r.lhs == r.rhs;
  if (r.lhs != r.rhs)
    r.diagnostics.push_back("t_0 identity fails: " + std::to_string(r.lhs) + " != " + std::to_string(r.rhs));
  return r;
}

}  // namespace gammalat
