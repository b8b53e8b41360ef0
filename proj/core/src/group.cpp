#include "gammalat/group.hpp"

#include <string>

#include "gammalat/primes.hpp"

namespace gammalat {

std::int64_t GroupParams::ipow(std::int64_t base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("ipow: negative exponent");
  std::int64_t r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

GroupParams GroupParams::make(int p, int n) {
  if (p < 3 || !is_prime_u64(static_cast<std::uint64_t>(p)))
    throw InvalidInput("p must be an odd prime, got " + std::to_string(p));
  if (n < 1) throw InvalidInput("n must be a positive integer, got " + std::to_string(n));
  // Keeps |Gamma| and every p-power exponent used downstream in 31 bits.
  std::int64_t order = 1;
  for (int i = 0; i < n; ++i) {
    order *= p;
    if (order > 100000) throw InvalidInput("p^n is too large for this workbench");
  }
  return GroupParams{p, n};
}

void GroupParams::check_subgroup_index(int j) const {
  if (j < 0 || j > n)
    throw InvalidInput("subgroup index " + std::to_string(j) + " outside [0, " + std::to_string(n) + "]");
}

GroupRingElt::GroupRingElt(GroupParams params)
    : params_(params), coeffs_(static_cast<std::size_t>(params.order())) {}

GroupRingElt::GroupRingElt(GroupParams params, IntVector coeffs) : params_(params), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<std::size_t>(params_.order()))
    throw InvalidInput("group ring element needs exactly p^n coefficients");
}

GroupRingElt GroupRingElt::one(GroupParams params) { return sigma_power(params, 0); }

GroupRingElt GroupRingElt::sigma_power(GroupParams params, std::int64_t k) {
  GroupRingElt x(params);
  const std::int64_t order = params.order();
  x.coeffs_[static_cast<std::size_t>(((k % order) + order) % order)] = 1;
  return x;
}

Integer GroupRingElt::augmentation() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

GroupRingElt GroupRingElt::operator+(const GroupRingElt& other) const {
  if (!(params_ == other.params_)) throw InvalidInput("group ring: mismatched parameters");
  GroupRingElt r = *this;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] += other.coeffs_[k];
  return r;
}

GroupRingElt GroupRingElt::operator-(const GroupRingElt& other) const { return *this + other.scaled(-1); }

GroupRingElt GroupRingElt::operator*(const GroupRingElt& other) const {
  if (!(params_ == other.params_)) throw InvalidInput("group ring: mismatched parameters");
  const std::size_t order = coeffs_.size();
  GroupRingElt r(params_);
  for (std::size_t i = 0; i < order; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < order; ++j) {
      if (sgn(other.coeffs_[j]) == 0) continue;
      mpz_addmul(r.coeffs_[(i + j) % order].get_mpz_t(), coeffs_[i].get_mpz_t(), other.coeffs_[j].get_mpz_t());
    }
  }
  return r;
}

GroupRingElt GroupRingElt::scaled(const Integer& factor) const {
  GroupRingElt r = *this;
  for (auto& c : r.coeffs_) c *= factor;
  return r;
}

GroupRingElt GroupRingElt::shifted(std::int64_t k) const { return sigma_power(params_, k) * *this; }

IntMatrix GroupRingElt::multiplication_matrix() const {
  const std::size_t order = coeffs_.size();
  IntMatrix m(order, order);
  // Column j is x * sigma^j.
  for (std::size_t j = 0; j < order; ++j)
    for (std::size_t i = 0; i < order; ++i) m((i + j) % order, j) = coeffs_[i];
  return m;
}

GroupRingElt norm_element(const GroupParams& params, int j) {
  params.check_subgroup_index(j);
  GroupRingElt x(params);
  const std::int64_t step = params.index(j);
  for (std::int64_t k = 0; k < params.subgroup_order(j); ++k) x = x + GroupRingElt::sigma_power(params, k * step);
  return x;
}

GroupRingElt relative_norm_element(const GroupParams& params, int i) {
  if (i < 1 || i > params.n) throw InvalidInput("relative norm index must lie in [1, n]");
  GroupRingElt x(params);
  const std::int64_t step = params.index(i);
  for (std::int64_t k = 0; k < params.p; ++k) x = x + GroupRingElt::sigma_power(params, k * step);
  return x;
}

IntMatrix coset_shift_matrix(const GroupParams& params, int j) {
  params.check_subgroup_index(j);
  const auto size = static_cast<std::size_t>(params.index(j));
  IntMatrix s(size, size);
  for (std::size_t k = 0; k < size; ++k) s((k + 1) % size, k) = 1;
  return s;
}

IntMatrix geometric_sum(const IntMatrix& a, std::int64_t count) {
  IntMatrix sum(a.rows(), a.cols());
  IntMatrix power = IntMatrix::identity(a.rows());
  for (std::int64_t k = 0; k < count; ++k) {
    sum += power;
    if (k + 1 < count) power = power * a;
  }
  return sum;
}

}  // namespace gammalat
