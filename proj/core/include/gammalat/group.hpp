#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gammalat/matrix.hpp"

namespace gammalat {

/// Thrown for parameter-range violations; the CLI maps it to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal consistency check fails (a bug, never a user
/// error); the CLI maps it to exit code 5.
class InvariantFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The cyclic group of order p^n with generator sigma.
///
/// Gamma_j = <sigma^{p^{n-j}}> is the subgroup of order p^j, for j in
/// {0, ..., n}.
struct GroupParams {
  int p = 3;
  int n = 1;

  /// Validates p (odd prime) and n >= 1.
  static GroupParams make(int p, int n);

  std::int64_t order() const { return ipow(p, n); }
  std::int64_t subgroup_order(int j) const { return ipow(p, j); }
  /// [Gamma : Gamma_j] = p^{n-j}.
  std::int64_t index(int j) const { return ipow(p, n - j); }

  void check_subgroup_index(int j) const;

  static std::int64_t ipow(std::int64_t base, int exponent);

  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

/// Element of Z[Gamma]; coeffs[k] is the coefficient of sigma^k.
class GroupRingElt {
 public:
  explicit GroupRingElt(GroupParams params);
  GroupRingElt(GroupParams params, IntVector coeffs);

  static GroupRingElt one(GroupParams params);
  static GroupRingElt sigma_power(GroupParams params, std::int64_t k);

  const GroupParams& params() const { return params_; }
  const IntVector& coeffs() const { return coeffs_; }
  Integer augmentation() const;

  GroupRingElt operator+(const GroupRingElt& other) const;
  GroupRingElt operator-(const GroupRingElt& other) const;
  /// Cyclic convolution.
  GroupRingElt operator*(const GroupRingElt& other) const;
  GroupRingElt scaled(const Integer& factor) const;
  /// sigma^k * x.
  GroupRingElt shifted(std::int64_t k) const;

  /// Matrix of y -> x * y on the basis {sigma^k}.
  IntMatrix multiplication_matrix() const;

  friend bool operator==(const GroupRingElt&, const GroupRingElt&) = default;

 private:
  GroupParams params_;
  IntVector coeffs_;
};

/// Sum of the elements of Gamma_j.
GroupRingElt norm_element(const GroupParams& params, int j);

/// Sum over representatives of Gamma_i / Gamma_{i-1}: sum_{k<p} sigma^{k p^{n-i}}.
GroupRingElt relative_norm_element(const GroupParams& params, int i);

/// The cyclic shift sigma on Z[Gamma/Gamma_j] (size p^{n-j}).
IntMatrix coset_shift_matrix(const GroupParams& params, int j);

/// sum_{k<count} a^k for a square matrix a.
IntMatrix geometric_sum(const IntMatrix& a, std::int64_t count);

}  // namespace gammalat
