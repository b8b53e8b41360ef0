#pragma once

#include <cstdint>
#include <vector>

namespace gammalat {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

/// b^e mod m.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus);

/// q = 1 (mod p), q != 1 (mod p^2), and p is not a p-th power mod q.
///
/// Throws InvalidInput unless p is an odd prime and q is a prime different
/// from p.
bool is_qualifying(std::uint64_t p, std::uint64_t q);

struct PrimeSearchResult {
  std::uint64_t p = 0;
  std::uint64_t bound = 0;
  std::vector<std::uint64_t> qualifying;  // ascending, all < bound
  std::uint64_t scanned = 0;              // primes q = 1 (mod p) below bound
};

PrimeSearchResult find_qualifying(std::uint64_t p, std::uint64_t bound);

struct DensityReport {
  PrimeSearchResult search;
  double observed = 0.0;
  double expected = 0.0;  // (1 - 1/p)^2
};

/// Rejects (InvalidInput) samples with fewer than `min_sample` scanned primes.
DensityReport density_report(std::uint64_t p, std::uint64_t bound, std::uint64_t min_sample = 200);

}  // namespace gammalat
