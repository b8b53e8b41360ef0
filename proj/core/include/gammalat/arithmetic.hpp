#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gammalat/diagram.hpp"
#include "gammalat/finite_module.hpp"
#include "gammalat/group.hpp"

namespace gammalat {

/// Input that is well formed but outside the cases the predictor handles;
/// the CLI maps it to exit code 4.
class UnsupportedRegime : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Regime { HilbertCyclic, General };

std::string to_string(Regime r);
Regime regime_from_string(const std::string& s);

/// One ramified place: orders of its inertia and decomposition groups.
struct RamifiedPlace {
  std::int64_t inertia_order = 0;
  std::int64_t decomposition_order = 0;
  friend bool operator==(const RamifiedPlace&, const RamifiedPlace&) = default;
};

/// Abstract description of L/K and S. Subgroups of the cyclic group are
/// identified with their orders throughout.
struct ExtensionDatum {
  GroupParams params;
  std::int64_t r1 = 0;
  std::int64_t r2 = 0;
  std::vector<RamifiedPlace> ramified;
  std::vector<std::int64_t> s_counts;  // s_0..s_n
  Regime regime = Regime::HilbertCyclic;
  bool all_S_split = true;

  /// Throws InvalidInput on malformed data.
  void validate() const;

  std::int64_t unit_rank_K() const { return r1 + r2 - 1; }
  std::int64_t n_SL() const { return s_counts.empty() ? 0 : s_counts[0]; }
  std::int64_t s_size() const;
  /// Order of the largest inertia group (1 if unramified).
  std::int64_t max_inertia() const;
  /// Order of G(S): the largest decomposition group among S-places.
  std::int64_t gs_order() const;
};

struct UpsilonStats {
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> counts;  // (|H|, |H'|) -> places
  std::vector<std::pair<std::int64_t, std::int64_t>> upsilon;           // pairs with count >= 3
  std::int64_t r3 = 0;                                                   // places in those pairs
  std::int64_t correction() const { return 2 * static_cast<std::int64_t>(upsilon.size()) - r3; }
};

UpsilonStats upsilon_stats(const ExtensionDatum& datum);

/// Predicted rk(U_{L,S}^{Gamma_j}) for j = 0..n.
std::vector<std::int64_t> character_ranks(const ExtensionDatum& datum);

/// W_J for J = Gamma_j, canonical form, with the coordinates of the
/// presentation generators Y, X_{p,k} recorded for the map construction.
struct WjPresentation {
  FiniteGammaModule presented;  // generators: Y first, then X_{p,k} place by place
  CanonicalForm canonical;
  std::int64_t a_order = 1;                  // |A_{E,S}|
  std::vector<std::int64_t> orbit_sizes;    // q per ramified place
  std::vector<std::int64_t> e_values;       // e(J, p) per ramified place
};

WjPresentation wj_presentation_detail(const ExtensionDatum& datum, int j);
FiniteGammaModule wj_presentation(const ExtensionDatum& datum, int j);

YakovlevDiagram predict_diagram(const ExtensionDatum& datum);

enum class ReportStatus { Resolved, PartiallyResolved };
std::string to_string(ReportStatus s);

struct CorollaryResidual {
  std::int64_t upsilon_size = 0;
  std::int64_t r3_size = 0;
  std::int64_t d_prime = 0;
  /// t_0 (p^n - p^{n-1}) and (r1 + r2 + n_{S,L} + 2|Y| - |R3|)(p^n - p^{n-1}) - d'.
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool identity_holds = false;
  std::vector<std::string> diagnostics;
};

struct DecompositionReport {
  std::vector<std::pair<MabLabel, std::int64_t>> library_summands;  // label -> multiplicity, sorted by label
  std::vector<std::int64_t> perm_multiplicities;                    // t_0..t_n
  std::int64_t minkowski_count = 0;
  std::int64_t total_rank = 0;
  std::optional<CorollaryResidual> residual;
  ReportStatus status = ReportStatus::PartiallyResolved;
  std::vector<std::string> diagnostics;
};

DecompositionReport recover_structure(const ExtensionDatum& datum);

struct GuaranteedSummands {
  std::vector<std::pair<MabLabel, std::int64_t>> summands;  // label -> t - 2
  std::int64_t subgroup_pairs = 0;                          // B_n
  std::int64_t remainder_bound = 0;                         // 1 + 2 B_n
};

GuaranteedSummands guaranteed_summands(const ExtensionDatum& datum);

/// m = t_0; throws InvalidInput unless the report is Resolved.
std::int64_t minkowski_count(const DecompositionReport& report);

CorollaryResidual corollary_residual(const ExtensionDatum& datum, const DecompositionReport& report);

/// rk(M_{a,b}) and rk(M_{a,b}^{Gamma_j}), from the lattice itself.
std::int64_t mab_rank(const GroupParams& params, const MabLabel& label);
std::int64_t mab_fixed_rank(const GroupParams& params, const MabLabel& label, int j);

}  // namespace gammalat
