#include "selftest.hpp"

#include <algorithm>
#include <cstdio>
#include <future>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "gammalat/cohomology.hpp"
#include "gammalat/diagram.hpp"
#include "gammalat/lattice.hpp"

namespace gammalat::selftest {

namespace {

std::string label_name(const char* prefix, int p, int n, int a, int b) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s.p%d.n%d.a%db%d", prefix, p, n, a, b);
  return buf;
}

std::string indexed(const std::string& prefix, int i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02d", i);
  return prefix + buf;
}

Check lemma_check(int p, int n, int a, int b) {
  Check c{label_name("lemma", p, n, a, b), false, ""};
  const GroupParams params = GroupParams::make(p, n);
  const YakovlevDiagram d = yakovlev_diagram(mab_lattice(params, a, b));
  if (auto defect = diagram_defect(d)) {
    c.detail = "invalid diagram: " + *defect;
    return c;
  }
  for (int i = 1; i <= n; ++i) {
    const auto labels = standard_labels(d.levels[static_cast<std::size_t>(i) - 1]);
    const StandardLabel expected{std::min(i, a), std::max(i, a + b)};
    if (!labels || *labels != std::vector<StandardLabel>{expected}) {
      c.detail = "level " + std::to_string(i) + " is not (Z/p^" + std::to_string(expected.a) + ")[G/G_" +
                 std::to_string(expected.j) + "]";
      return c;
    }
  }
  const Decision iso = diagram_isomorphic(d, lemma_diagram(params, a, b));
  if (iso != Decision::Yes) {
    c.detail = "maps differ from the closed form (" + to_string(iso) + ")";
    return c;
  }
  c.passed = true;
  c.detail = "levels and maps match";
  return c;
}

GammaLattice stability_sample(const GroupParams& params, const MabLabel& label, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> index(0, params.n);
  std::uniform_int_distribution<int> count(1, 2);
  GammaLattice m = mab_lattice(params, label.a, label.b);
  const int extra = count(rng);
  for (int k = 0; k < extra; ++k) {
    const GammaLattice perm = permutation_lattice(params, index(rng));
    m = (rng() & 1) ? direct_sum(m, perm) : direct_sum(perm, m);
  }
  return random_unimodular_change(m, rng());
}

Check stability_check(int n, const MabLabel& label, std::uint64_t seed, int trials) {
  Check c{label_name("stability", 3, n, label.a, label.b), false, ""};
  const GroupParams params = GroupParams::make(3, n);
  const YakovlevDiagram& target = library_diagram(params, label.a, label.b);
  std::mt19937_64 rng(seed ^ (0x5851f42d4c957f2dULL * static_cast<std::uint64_t>(100 * n + 10 * label.a + label.b)));
  int yes = 0;
  std::string first_failure;
  for (int t = 0; t < trials; ++t) {
    const GammaLattice m = stability_sample(params, label, rng);
    const Decision r = diagram_isomorphic(yakovlev_diagram(m), target);
    if (r == Decision::Yes)
      ++yes;
    else if (first_failure.empty())
      first_failure = "; trial " + std::to_string(t) + " gave " + to_string(r);
  }
  c.passed = yes == trials;
  c.detail = std::to_string(yes) + "/" + std::to_string(trials) + " isomorphic" + first_failure;
  return c;
}

std::vector<std::pair<MabLabel, std::int64_t>> single(MabLabel label) { return {{label, 1}}; }

Check report_check(const std::string& name, const ExtensionDatum& datum,
                   const std::vector<std::pair<MabLabel, std::int64_t>>* expected_summands,
                   const std::vector<std::int64_t>* expected_t) {
  Check c{name, false, ""};
  const DecompositionReport r = recover_structure(datum);
  if (r.status != ReportStatus::Resolved) {
    c.detail = "report not resolved";
    for (const auto& d : r.diagnostics) c.detail += "; " + d;
    return c;
  }
  if (auto defect = rank_accounting_defect(datum, r); !defect.empty()) {
    c.detail = defect;
    return c;
  }
  if (expected_summands && r.library_summands != *expected_summands) {
    c.detail = "unexpected library summands";
    return c;
  }
  if (expected_t && r.perm_multiplicities != *expected_t) {
    c.detail = "unexpected permutation multiplicities";
    return c;
  }
  if (!r.residual || !r.residual->identity_holds) {
    c.detail = "t_0 identity fails";
    if (r.residual)
      for (const auto& d : r.residual->diagnostics) c.detail += "; " + d;
    return c;
  }
  c.passed = true;
  c.detail = "m = " + std::to_string(r.minkowski_count) + ", d' = " + std::to_string(r.residual->d_prime);
  return c;
}

}  // namespace

std::vector<ExtensionDatum> unramified_family(std::uint64_t seed, int n, int count) {
  std::mt19937_64 rng(seed ^ (0x2545f4914f6cdd1dULL * static_cast<std::uint64_t>(n)));
  std::uniform_int_distribution<int> places(0, 6);
  std::vector<ExtensionDatum> out;
  for (int k = 0; k < count; ++k) {
    ExtensionDatum d;
    d.params = GroupParams::make(3, n);
    do {
      d.r1 = places(rng);
      d.r2 = places(rng);
    } while (d.r1 + d.r2 == 0);
    d.s_counts.assign(static_cast<std::size_t>(n) + 1, 0);
    d.s_counts[0] = places(rng);
    d.all_S_split = true;
    out.push_back(d);
  }
  return out;
}

ExtensionDatum single_place_datum(int n, std::int64_t r1, std::int64_t r2) {
  ExtensionDatum d;
  d.params = GroupParams::make(3, n);
  d.r1 = r1;
  d.r2 = r2;
  const std::int64_t full = d.params.order();
  d.ramified.push_back({full, full});
  d.s_counts.assign(static_cast<std::size_t>(n) + 1, 0);
  return d;
}

ExtensionDatum many_places_datum(int k, std::int64_t r1) {
  ExtensionDatum d;
  d.params = GroupParams::make(3, 1);
  d.r1 = r1;
  for (int i = 0; i < k; ++i) d.ramified.push_back({3, 3});
  d.s_counts = {0, 0};
  return d;
}

std::string rank_accounting_defect(const ExtensionDatum& datum, const DecompositionReport& report) {
  const GroupParams& params = datum.params;
  // Dirichlet-Herbrand: rk U_{L,S} = (r1 + r2) p^n + sum_i s_i p^{n-i} - 1.
  std::int64_t expected = (datum.r1 + datum.r2) * params.order() - 1;
  for (int i = 0; i <= params.n; ++i) expected += datum.s_counts[static_cast<std::size_t>(i)] * params.index(i);
  std::int64_t accounted = 0;
  for (const auto& [label, mult] : report.library_summands) accounted += mult * mab_rank(params, label);
  for (int i = 0; i <= params.n; ++i) {
    const std::int64_t t = report.perm_multiplicities[static_cast<std::size_t>(i)];
    if (t < 0) return "negative t_" + std::to_string(i);
    accounted += t * params.index(i);
  }
  if (accounted != expected || report.total_rank != expected)
    return "rank accounting: " + std::to_string(accounted) + " accounted, " + std::to_string(expected) + " expected";
  return "";
}

std::vector<Check> lemma_suite() {
  std::vector<Check> out;
  for (int p : {3, 5})
    for (int n = 1; n <= (p == 3 ? 3 : 2); ++n)
      for (int a = 1; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b) out.push_back(lemma_check(p, n, a, b));
  return out;
}

std::vector<Check> stability_suite(std::uint64_t seed, int trials) {
  std::vector<std::future<Check>> jobs;
  for (int n = 1; n <= 3; ++n)
    for (const MabLabel& label : library_labels(GroupParams::make(3, n)))
      jobs.push_back(std::async(std::launch::async, stability_check, n, label, seed, trials));
  std::vector<Check> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

std::vector<Check> corollary_suite(std::uint64_t seed) {
  std::vector<Check> out;
  for (int n = 1; n <= 3; ++n) {
    const auto family = unramified_family(seed, n, 20);
    for (std::size_t k = 0; k < family.size(); ++k) {
      const ExtensionDatum& d = family[k];
      const auto summands = single(MabLabel{n, 0});
      std::vector<std::int64_t> t(static_cast<std::size_t>(n) + 1, 0);
      t[0] = d.unit_rank_K() + d.s_size();
      out.push_back(report_check(indexed("corollary.unramified.n" + std::to_string(n) + ".", static_cast<int>(k)), d,
                                 &summands, &t));
    }
    const std::pair<std::int64_t, std::int64_t> signatures[] = {{1, 0}, {2, 0}, {1, 1}, {3, 2}};
    for (const auto& [r1, r2] : signatures) {
      const ExtensionDatum d = single_place_datum(n, r1, r2);
      const auto summands = single(MabLabel{n, 0});
      std::vector<std::int64_t> t(static_cast<std::size_t>(n) + 1, 0);
      t[0] = d.unit_rank_K();
      out.push_back(report_check("corollary.single_place.n" + std::to_string(n) + ".r1_" + std::to_string(r1) +
                                     ".r2_" + std::to_string(r2),
                                 d, &summands, &t));
    }
  }
  // k places of one type: each place beyond the second changes 2|Y| - |R3|
  // by -1, and once d' is constant m must follow it.
  std::vector<std::int64_t> m;
  std::vector<std::int64_t> correction;
  std::vector<std::int64_t> dprime;
  for (int k = 3; k <= 8; ++k) {
    const ExtensionDatum d = many_places_datum(k, 12);
    out.push_back(report_check(indexed("corollary.places.k", k), d, nullptr, nullptr));
    const DecompositionReport r = recover_structure(d);
    m.push_back(r.minkowski_count);
    correction.push_back(upsilon_stats(d).correction());
    dprime.push_back(r.residual ? r.residual->d_prime : -1);
  }
  Check slope{"corollary.places.slope", true, ""};
  for (std::size_t k = 1; k < m.size(); ++k)
    if (dprime[k] == dprime[k - 1] && m[k] - m[k - 1] != correction[k] - correction[k - 1]) slope.passed = false;
  slope.detail = "m(k) for k = 3..8:";
  for (auto v : m) slope.detail += " " + std::to_string(v);
  out.push_back(slope);
  return out;
}

std::vector<Check> run_suite(const std::string& name, std::uint64_t seed, int trials) {
  if (name == "lemma") return lemma_suite();
  if (name == "stability") return stability_suite(seed, trials);
  if (name == "corollary") return corollary_suite(seed);
  if (name == "all") {
    std::vector<Check> out = lemma_suite();
    for (auto& c : stability_suite(seed, trials)) out.push_back(std::move(c));
    for (auto& c : corollary_suite(seed)) out.push_back(std::move(c));
    return out;
  }
  throw InvalidInput("unknown suite \"" + name + "\"");
}

void print_table(std::ostream& os, std::vector<Check> checks) {
  std::sort(checks.begin(), checks.end(), [](const Check& x, const Check& y) { return x.name < y.name; });
  std::size_t width = 5;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  os << std::left << std::setw(static_cast<int>(width)) << "check" << "  result  detail\n";
  int failed = 0;
  for (const auto& c : checks) {
    os << std::left << std::setw(static_cast<int>(width)) << c.name << "  " << (c.passed ? "PASS  " : "FAIL  ") << "  "
       << c.detail << "\n";
    if (!c.passed) ++failed;
  }
  os << checks.size() - static_cast<std::size_t>(failed) << "/" << checks.size() << " checks passed\n";
}

bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

}  // namespace gammalat::selftest
