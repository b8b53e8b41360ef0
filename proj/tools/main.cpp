// gammalat: command-line front end.
//
// Exit codes: 0 success, 2 input error, 3 partially resolved report,
// 4 unsupported regime, 5 internal invariant failure or failed self-test.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gammalat/cohomology.hpp"
#include "gammalat/version.hpp"
#include "json_io.hpp"
#include "selftest.hpp"

using namespace gammalat;

namespace {

enum Exit { kOk = 0, kInput = 2, kPartial = 3, kUnsupported = 4, kInternal = 5 };

struct DiagramArgs {
  int p = 3;
  int n = 1;
  std::string kind = "mab";
  int a = 1;
  int b = 0;
  int i = 0;
};

int cmd_diagram(const DiagramArgs& args) {
  const GroupParams params = GroupParams::make(args.p, args.n);
  io::Json lattice;
  GammaLattice m;
  if (args.kind == "perm") {
    params.check_subgroup_index(args.i);
    m = permutation_lattice(params, args.i);
    lattice = {{"kind", "perm"}, {"i", args.i}};
  } else {
    if (args.a < 1 || args.a > args.n) throw InvalidInput("a must lie in [1, n]");
    if (args.b < 0 || args.a + args.b > args.n) throw InvalidInput("b must satisfy 0 <= b <= n - a");
    m = mab_lattice(params, args.a, args.b);
    lattice = {{"kind", "mab"}, {"a", args.a}, {"b", args.b}};
  }
  io::Json doc = io::diagram_to_json(yakovlev_diagram(m));
  lattice["rank"] = m.rank();
  doc["lattice"] = lattice;
  doc["version"] = std::string("gammalat ") + kVersion;
  std::cout << io::canonical_dump(doc);
  return kOk;
}

int cmd_predict(const std::string& input, const std::string& out) {
  std::ifstream in(input);
  if (!in) throw InvalidInput("cannot read " + input);
  io::Json doc;
  try {
    doc = io::Json::parse(in);
  } catch (const io::Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  const ExtensionDatum datum = io::datum_from_json(doc);
  const DecompositionReport report = recover_structure(datum);
  const std::string text = io::canonical_dump(io::report_to_json(datum, report));
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out);
    if (!os) throw InvalidInput("cannot write " + out);
    os << text;
  }
  for (const auto& d : report.diagnostics) std::cerr << "note: " << d << "\n";
  return report.status == ReportStatus::Resolved ? kOk : kPartial;
}

int cmd_primes(std::uint64_t p, std::uint64_t bound, bool density) {
  if (density) {
    std::cout << io::canonical_dump(io::density_to_json(density_report(p, bound)));
    return kOk;
  }
  for (auto q : find_qualifying(p, bound).qualifying) std::cout << q << "\n";
  return kOk;
}

int cmd_selftest(const std::string& suite, std::uint64_t seed, int trials) {
  const auto checks = selftest::run_suite(suite, seed, trials);
  selftest::print_table(std::cout, checks);
  return selftest::all_passed(checks) ? kOk : kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattices over cyclic p-groups, Tate cohomology and S-unit structure"};
  app.set_version_flag("--version", std::string("gammalat ") + kVersion);
  app.require_subcommand(1);

  DiagramArgs dargs;
  auto* diagram = app.add_subcommand("diagram", "Yakovlev diagram of a permutation or M_{a,b} lattice");
  diagram->add_option("--p", dargs.p, "odd prime")->required();
  diagram->add_option("--n", dargs.n, "exponent of the group order")->required();
  diagram->add_option("--kind", dargs.kind, "lattice family")->check(CLI::IsMember({"perm", "mab"}));
  diagram->add_option("--a", dargs.a, "M_{a,b}: a in [1, n]");
  diagram->add_option("--b", dargs.b, "M_{a,b}: b in [0, n - a]");
  diagram->add_option("--i", dargs.i, "perm: the lattice Z[G/G_i]");

  std::string input, out;
  auto* predict = app.add_subcommand("predict", "Predict S-unit structure from a datum document");
  predict->add_option("--input", input, "datum JSON")->required();
  predict->add_option("--out", out, "write the report here instead of standard output");

  std::uint64_t p = 3, bound = 0;
  bool with_density = false;
  auto* primes = app.add_subcommand("primes", "Qualifying primes q below a bound");
  primes->add_option("--p", p)->required();
  primes->add_option("--bound", bound)->required();
  primes->add_flag("--density", with_density, "print the density report instead");

  auto* density = app.add_subcommand("density", "Observed and predicted density of qualifying primes");
  density->add_option("--p", p)->required();
  density->add_option("--bound", bound)->required();

  std::string suite = "all";
  std::uint64_t seed = 0;
  int trials = 200;
  auto* selftest = app.add_subcommand("selftest", "Run a built-in check suite");
  selftest->add_option("--suite", suite)->check(CLI::IsMember({"lemma", "stability", "corollary", "all"}));
  selftest->add_option("--seed", seed, "seed for randomized suites");
  selftest->add_option("--trials", trials, "trials per lattice in the stability suite")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*diagram) return cmd_diagram(dargs);
    if (*predict) return cmd_predict(input, out);
    if (*primes) return cmd_primes(p, bound, with_density);
    if (*density) return cmd_primes(p, bound, true);
    if (*selftest) return cmd_selftest(suite, seed, trials);
  } catch (const UnsupportedRegime& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInput;
}
