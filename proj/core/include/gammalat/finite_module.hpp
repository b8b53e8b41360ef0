#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "gammalat/group.hpp"
#include "gammalat/matrix.hpp"
#include "gammalat/modular.hpp"

namespace gammalat {

/// A finite abelian p-group with Gamma-action, presented as Z^g modulo the
/// column span of `relations`, with sigma acting by `action` on generators.
///
/// Most algorithms expect the canonical shape produced by canonicalize():
/// square diagonal relations whose entries are powers of p greater than 1,
/// and action entries reduced modulo the row's relation.
class FiniteGammaModule {
 public:
  FiniteGammaModule() = default;

  /// Validates finiteness and that the action preserves the relations with
  /// sigma^{p^n} = 1 modulo them. Throws InvalidInput otherwise.
  FiniteGammaModule(GroupParams params, IntMatrix relations, IntMatrix action);

  /// Canonical-shape module with relation p^{exponents[r]} on generator r.
  static FiniteGammaModule diagonal(GroupParams params, std::vector<int> exponents, IntMatrix action);
  static FiniteGammaModule zero(GroupParams params);

  const GroupParams& params() const { return params_; }
  std::size_t generators() const { return action_.rows(); }
  const IntMatrix& relations() const { return relations_; }
  const IntMatrix& action() const { return action_; }

  bool is_canonical() const { return canonical_; }
  /// log_p of the diagonal relations; canonical modules only.
  const std::vector<int>& exponents() const;
  int max_exponent() const;
  int log_order() const;
  bool is_zero() const { return generators() == 0; }

  /// Z/p^E with E the largest exponent (at least 1).
  modular::PrimePower ring() const;

 private:
  GroupParams params_;
  IntMatrix relations_;
  IntMatrix action_;
  bool canonical_ = false;
  std::vector<int> exponents_;
};

/// A Gamma-map given by the images of the source generators (columns) in
/// target coordinates.
struct GammaMap {
  FiniteGammaModule source;
  FiniteGammaModule target;
  IntMatrix matrix;  // target.generators() x source.generators()
};

struct CanonicalForm {
  FiniteGammaModule module;
  IntMatrix to_canonical;    // new coordinates of the old generators
  IntMatrix from_canonical;  // old coordinates of the new generators
};

CanonicalForm canonicalize(const FiniteGammaModule& x);

/// Re-expresses a map between the original modules as a map between their
/// canonical forms.
GammaMap transport(const GammaMap& f, const CanonicalForm& source, const CanonicalForm& target);

/// Abelian-group type: p-power invariant factors, ascending.
IntVector snf_invariants(const FiniteGammaModule& x);

/// (Z/p^a)[Gamma/Gamma_j] on the basis sigma^k e, k < p^{n-j}.
FiniteGammaModule standard_module(const GroupParams& params, int a, int j);

FiniteGammaModule module_direct_sum(const FiniteGammaModule& x, const FiniteGammaModule& y);

// Everything below expects canonical modules.

/// The map sending each generator to the given matrix columns; checks
/// well-definedness and equivariance and throws InvariantFailure if either fails.
GammaMap make_map(const FiniteGammaModule& source, const FiniteGammaModule& target, IntMatrix matrix);
bool is_well_defined(const GammaMap& f);
bool is_equivariant(const GammaMap& f);

GammaMap compose(const GammaMap& g, const GammaMap& f);  // g after f
GammaMap identity_map(const FiniteGammaModule& x);
GammaMap zero_map(const FiniteGammaModule& source, const FiniteGammaModule& target);
GammaMap scalar_map(const FiniteGammaModule& x, std::int64_t c);
/// Action of a group ring element on x.
GammaMap group_ring_action(const FiniteGammaModule& x, const GroupRingElt& r);
GammaMap map_direct_sum(const GammaMap& f, const GammaMap& g);

/// f == g as maps, i.e. the matrices agree modulo the target relations.
bool maps_equal(const GammaMap& f, const GammaMap& g);
bool is_zero_map(const GammaMap& f);

int image_log_order(const GammaMap& f);
/// Invariant-factor exponents of the cokernel, ascending.
std::vector<int> cokernel_type(const GammaMap& f);
bool is_bijective(const GammaMap& f);

/// Reduces every column of v modulo the diagonal relations of x.
IntMatrix reduce_coordinates(const FiniteGammaModule& x, IntMatrix v);

/// Matrix of tau_j = sigma^{p^{n-j}} on x, reduced mod P.
modular::ModMatrix subgroup_generator_mod(const FiniteGammaModule& x, int j, const modular::PrimePower& ring);

/// log_p |X / (p^a X + (tau_j - 1) X)|.
int quotient_log_order(const FiniteGammaModule& x, int a, int j);

/// log_p |{x in X : p^a x = 0 and tau_j x = x}|.
int fixed_torsion_log_order(const FiniteGammaModule& x, int a, int j);

/// Generators of {x in X : p^a x = 0 and tau_j x = x}, as X coordinates.
std::vector<std::vector<std::int64_t>> fixed_torsion_generators(const FiniteGammaModule& x, int a, int j);

/// Generators of the solution set of a congruence system whose row r is read
/// modulo p^{row_exponents[r]}; E is taken from `ring`.
std::vector<std::vector<std::int64_t>> congruence_kernel(const modular::ModMatrix& a, const std::vector<int>& row_exponents,
                                                         const modular::PrimePower& ring);

/// A summand (Z/p^a)[Gamma/Gamma_j].
struct StandardLabel {
  int a = 0;
  int j = 0;
  friend auto operator<=>(const StandardLabel&, const StandardLabel&) = default;
};

/// Witnessed isomorphism X = (+)_k (Z/p^{a_k})[Gamma/Gamma_{j_k}].
struct StandardSum {
  std::vector<StandardLabel> labels;  // ascending
  FiniteGammaModule standard;         // the direct sum in label order
  GammaMap to_module;                 // standard -> X, bijective
  GammaMap from_module;               // X -> standard, inverse of to_module
};

struct NotStandard {};

using Recognition = std::variant<StandardSum, NotStandard>;

/// Decides whether a canonical module is a direct sum of standard modules,
/// returning an explicit isomorphism when it is. The labels come from the
/// grid of quotient orders; the isomorphism is found by seeded random
/// search in Hom(standard, X) with at most `attempts` draws.
Recognition recognize_standard_sum(const FiniteGammaModule& x, int attempts = 64);

/// Label multiset only; nullopt for NotStandard.
std::optional<std::vector<StandardLabel>> standard_labels(const FiniteGammaModule& x);

/// Direct sum of standard modules in the given order.
FiniteGammaModule standard_sum_module(const GroupParams& params, const std::vector<StandardLabel>& labels);

/// The grid L(a, j) for a in 1..max(E, 1), j in 0..n; row a-1, column j.
std::vector<std::vector<int>> quotient_grid(const FiniteGammaModule& x, int max_a);

/// Solves the grid for summand multiplicities; nullopt if inconsistent.
std::optional<std::vector<StandardLabel>> labels_from_grid(const GroupParams& params,
                                                           const std::vector<std::vector<int>>& grid);

}  // namespace gammalat
