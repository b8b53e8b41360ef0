#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gammalat/matrix.hpp"

// Linear algebra over the chain ring Z/p^E with machine integers.
//
// Finite Gamma-modules in this library are p-groups of small exponent, so
// every computation on them can be carried out modulo a single prime power
// P = p^E. All entries are kept in [0, P) and P < 2^31, so products fit in
// 64 bits.
namespace gammalat::modular {

struct PrimePower {
  std::int64_t p = 0;
  int exponent = 0;
  std::int64_t modulus = 1;

  static PrimePower make(std::int64_t p, int exponent);
};

class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  /// Reduces an integer matrix entrywise modulo `modulus`.
  static ModMatrix reduce(const IntMatrix& m, std::int64_t modulus);
  IntMatrix to_integer() const;

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

std::int64_t reduce(std::int64_t x, std::int64_t modulus);

/// v_p(x mod P), capped at E for x == 0 mod P.
int valuation(std::int64_t x, const PrimePower& ring);

/// Inverse of a unit modulo P.
std::int64_t unit_inverse(std::int64_t x, std::int64_t modulus);

/// Smith-type reduction over Z/P: left * a * right = diag(p^{v_t}) with
/// left and right invertible. Transforms are only filled in on request.
struct ChainSmith {
  std::vector<int> pivot_valuations;  // v_t < E for each pivot, nondecreasing
  ModMatrix right;
  ModMatrix left;
  ModMatrix left_inverse;
  std::size_t rank() const { return pivot_valuations.size(); }
};

ChainSmith chain_smith(ModMatrix a, const PrimePower& ring, bool track_right, bool track_left = false);

/// log_p of |(Z/P)^rows / column span of a|.
int cokernel_log_order(const ModMatrix& a, const PrimePower& ring);

/// Generators of the solution module { x in (Z/P)^cols : a x = 0 }.
std::vector<std::vector<std::int64_t>> kernel_generators(const ModMatrix& a, const PrimePower& ring);

/// Rank over F_p of a matrix (entries taken mod p).
std::size_t rank_mod_p(const ModMatrix& a, std::int64_t p);

/// One solution of a x = b over Z/P, or nullopt if there is none.
std::optional<std::vector<std::int64_t>> solve(const ModMatrix& a, const std::vector<std::int64_t>& b,
                                               const PrimePower& ring);

/// Multiplies modulus-p^e rows into the ambient ring: row r of an equation
/// system meant modulo p^{row_exponents[r]} is scaled by p^{E - e_r}.
ModMatrix scale_rows(const ModMatrix& a, const std::vector<int>& row_exponents, const PrimePower& ring);

}  // namespace gammalat::modular
