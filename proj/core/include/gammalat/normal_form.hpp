#pragma once

#include <optional>
#include <vector>

#include "gammalat/matrix.hpp"

namespace gammalat {

/// U * A * V = diag(invariants, 0, ...), with U and V unimodular.
///
/// `invariants` holds the nonzero invariant factors d_0 | d_1 | ... (all
/// positive); its length is the rank of A. The transforms are only filled
/// in when requested, since they dominate the cost on larger inputs.
struct SmithDecomposition {
  IntVector invariants;
  IntMatrix left;          // U  (rows x rows)
  IntMatrix left_inverse;  // U^{-1}
  IntMatrix right;         // V  (cols x cols)

  std::size_t rank() const { return invariants.size(); }
};

struct SmithRequest {
  bool left = false;
  bool left_inverse = false;
  bool right = false;
};

SmithDecomposition smith_form(const IntMatrix& a, SmithRequest request = {true, true, true});

/// Nonzero invariant factors only.
IntVector invariant_factors(const IntMatrix& a);

/// Column Hermite normal form of the column span of `a`.
///
/// The result has rank-many columns. Column k has a positive pivot in row
/// rho_k (rho strictly increasing), zeros above it, and every entry to the
/// left of a pivot lies in [0, pivot).
IntMatrix column_hnf(const IntMatrix& a);

/// Column HNF of the p-saturation of the span of `cols`: the unique lattice
/// with the same localization at p whose index in its rational saturation is
/// a power of p. Every pivot of the result is a power of p.
IntMatrix hnf_p_saturated(const IntMatrix& cols, const Integer& p);

/// Saturated basis (column HNF) of { x : a x = 0 }.
IntMatrix integer_kernel(const IntMatrix& a);

/// Exact solver for B y = v where B has full column rank. Column echelon
/// bases (such as HNF output) are solved by substitution; anything else
/// goes through a Smith decomposition.
class LatticeSolver {
 public:
  LatticeSolver() = default;
  explicit LatticeSolver(const IntMatrix& basis);

  std::size_t ambient_dimension() const { return ambient_; }
  std::size_t rank() const { return invariants_.size(); }

  std::optional<IntVector> solve(const IntVector& v) const;

  /// Solves column by column; throws std::domain_error if some column is
  /// outside the lattice.
  IntMatrix solve_columns(const IntMatrix& rhs) const;

 private:
  std::size_t ambient_ = 0;
  bool echelon_ = false;
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
  IntVector invariants_;
  IntMatrix left_;
  IntMatrix right_;
};

/// v_p(x) for x != 0.
int p_valuation(Integer x, const Integer& p);

/// Largest power of p dividing x (x != 0).
Integer p_part(const Integer& x, const Integer& p);

/// Nearest-integer quotient, ties toward zero.
Integer rounded_quotient(const Integer& a, const Integer& b);

}  // namespace gammalat
