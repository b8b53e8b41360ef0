#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gammalat/finite_module.hpp"
#include "gammalat/group.hpp"

namespace gammalat {

/// Levels A_1..A_n with maps between neighbours.
///
/// levels[i] is A_{i+1}. For i in 0..n-2, ups[i] : A_{i+1} -> A_{i+2} and
/// downs[i] : A_{i+2} -> A_{i+1}. The convention is down∘up = relative norm
/// on the lower level and up∘down = multiplication by p on the upper one.
struct YakovlevDiagram {
  GroupParams params;
  std::vector<FiniteGammaModule> levels;
  std::vector<GammaMap> ups;
  std::vector<GammaMap> downs;
};

YakovlevDiagram zero_diagram(const GroupParams& params);

/// Levels and maps all canonical and well defined, level i killed by p^i
/// with Gamma_i acting trivially, and both composite identities exact.
bool validate_diagram(const YakovlevDiagram& d);

/// Same checks, returning the first failure as text (nullopt when valid).
std::optional<std::string> diagram_defect(const YakovlevDiagram& d);

YakovlevDiagram diagram_direct_sum(const YakovlevDiagram& d1, const YakovlevDiagram& d2);

bool is_zero_diagram(const YakovlevDiagram& d);

/// The closed-form diagram of M_{a,b}: level i is
/// (Z/p^{min(i,a)})[Gamma/Gamma_{max(i,a+b)}], the maps are projection / x p,
/// id / x p and T / coset projection in the three ranges of the upper index.
YakovlevDiagram lemma_diagram(const GroupParams& params, int a, int b);

enum class Decision { Yes, No, Unknown };

std::string to_string(Decision d);

struct IsomorphismOptions {
  int samples = 256;  // random draws from the Hom space before giving up
  std::uint64_t seed = 0;
};

/// Three-valued isomorphism test. No is only returned when some invariant
/// differs, Yes only with an explicit levelwise isomorphism commuting with
/// every map.
Decision diagram_isomorphic(const YakovlevDiagram& d1, const YakovlevDiagram& d2, IsomorphismOptions options = {});

/// Invariants compared by diagram_isomorphic before any search.
struct DiagramInvariants {
  std::vector<std::vector<int>> level_grids;  // flattened L(a, j) per level
  std::vector<std::vector<int>> map_types;    // cokernel types of all maps and composites
  friend bool operator==(const DiagramInvariants&, const DiagramInvariants&) = default;
};

DiagramInvariants diagram_invariants(const YakovlevDiagram& d);

/// Sufficient criterion for indecomposability: the nonzero levels form one
/// unbroken range, each has coinvariants X/(pX + (sigma-1)X) of order at
/// most p, and each pair of neighbouring nonzero levels is joined by at
/// least one nonzero map. The zero diagram passes.
bool indecomposability_certificate(const YakovlevDiagram& d);

/// A morphism of diagrams: one map per level.
struct DiagramMorphism {
  std::vector<GammaMap> components;
};

bool is_diagram_morphism(const YakovlevDiagram& source, const YakovlevDiagram& target, const DiagramMorphism& f);

/// Label (a, b) of the library lattice M_{a,b}.
struct MabLabel {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const MabLabel&, const MabLabel&) = default;
};

/// All valid labels for the given group, in extraction order: larger total
/// diagram order first, ties by (a, b).
std::vector<MabLabel> library_labels(const GroupParams& params);

struct SubtractionResult {
  std::vector<MabLabel> extracted;            // in extraction order
  std::optional<YakovlevDiagram> remainder;  // nullopt = Unresolved
  std::vector<std::string> diagnostics;
};

/// Greedily splits off copies of the library diagrams Delta(M_{a,b}).
SubtractionResult subtract_library(const YakovlevDiagram& d, IsomorphismOptions options = {});

}  // namespace gammalat
