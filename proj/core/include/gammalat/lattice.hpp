#pragma once

#include <cstdint>

#include "gammalat/group.hpp"
#include "gammalat/matrix.hpp"

namespace gammalat {

/// A Z_p[Gamma]-lattice: Z^r with sigma acting by an integer matrix.
///
/// Two lattices are considered the same when they differ by a base change
/// whose determinant is prime to p; nothing here decides that in general.
class GammaLattice {
 public:
  GammaLattice() = default;

  /// Checks that action is square with action^{p^n} = I.
  GammaLattice(GroupParams params, IntMatrix action);

  const GroupParams& params() const { return params_; }
  std::size_t rank() const { return action_.rows(); }
  const IntMatrix& action() const { return action_; }

  /// Matrix of sigma^{p^{n-j}}, the generator of Gamma_j.
  IntMatrix subgroup_generator(int j) const;

 private:
  GroupParams params_;
  IntMatrix action_;
};

/// Z[Gamma/Gamma_i] with sigma permuting the p^{n-i} cosets cyclically.
GammaLattice permutation_lattice(const GroupParams& params, int i);

/// Z[Gamma] itself.
inline GammaLattice regular_lattice(const GroupParams& params) { return permutation_lattice(params, 0); }

/// Basis (columns, inside Z[Gamma] with basis sigma^k) of the ideal
/// Z[Gamma](p^a, sigma^{p^c} - 1) with c = n-a-b, or of Z[Gamma](sigma^{p^c} - 1)
/// when b = 0.
IntMatrix mab_basis(const GroupParams& params, int a, int b);

GammaLattice mab_lattice(const GroupParams& params, int a, int b);

/// Z[Gamma]/(sum of all group elements), on the images of sigma^0..sigma^{p^n-2}.
GammaLattice norm_quotient_lattice(const GroupParams& params);

/// Action of sigma on a sigma-stable sublattice given by a basis; throws
/// InvariantFailure if the span is not stable.
IntMatrix restricted_action(const IntMatrix& ambient_action, const IntMatrix& basis);

struct FixedSublattice {
  IntMatrix basis;      // saturated basis of ker(tau_j - 1), columns
  GammaLattice lattice;  // sigma restricted to it; Gamma_j acts trivially
  std::size_t rank() const { return basis.cols(); }
};

FixedSublattice fixed_sublattice(const GammaLattice& m, int j);
std::size_t fixed_rank(const GammaLattice& m, int j);

GammaLattice direct_sum(const GammaLattice& m, const GammaLattice& n);

/// Conjugates the action by a pseudorandom unimodular matrix drawn from
/// `seed`; the result is isomorphic to m.
GammaLattice random_unimodular_change(const GammaLattice& m, std::uint64_t seed);

}  // namespace gammalat
