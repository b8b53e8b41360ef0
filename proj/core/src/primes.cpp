#include "gammalat/primes.hpp"

#include <string>

#include "gammalat/group.hpp"

namespace gammalat {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

bool witness_passes(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
  if (modulus == 1) return 0;
  std::uint64_t result = 1;
  base %= modulus;
  while (exponent > 0) {
    if (exponent & 1) result = mul_mod(result, base, modulus);
    base = mul_mod(base, base, modulus);
    exponent >>= 1;
  }
  return result;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are sufficient below 3.3 * 10^24.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
    if (!witness_passes(n, a, d, s)) return false;
  return true;
}

bool is_qualifying(std::uint64_t p, std::uint64_t q) {
  if (p < 3 || !is_prime_u64(p)) throw InvalidInput("p must be an odd prime, got " + std::to_string(p));
  if (!is_prime_u64(q)) throw InvalidInput("q must be prime, got " + std::to_string(q));
  if (q == p) throw InvalidInput("q must differ from p");
  if (q % p != 1) return false;
  if (q % (p * p) == 1) return false;
  return pow_mod(p, (q - 1) / p, q) != 1;
}

PrimeSearchResult find_qualifying(std::uint64_t p, std::uint64_t bound) {
  if (p < 3 || !is_prime_u64(p)) throw InvalidInput("p must be an odd prime, got " + std::to_string(p));
  if (bound < p) throw InvalidInput("bound must be at least p");
  PrimeSearchResult out{p, bound, {}, 0};
  for (std::uint64_t q = p + 1; q < bound; q += p) {
    if (!is_prime_u64(q)) continue;
    ++out.scanned;
    if (is_qualifying(p, q)) out.qualifying.push_back(q);
  }
  return out;
}

DensityReport density_report(std::uint64_t p, std::uint64_t bound, std::uint64_t min_sample) {
  DensityReport out;
  out.search = find_qualifying(p, bound);
  if (out.search.scanned < min_sample)
    throw InvalidInput("density sample too small: " + std::to_string(out.search.scanned) + " primes = 1 mod p below " +
                       std::to_string(bound) + ", need " + std::to_string(min_sample));
  out.observed = static_cast<double>(out.search.qualifying.size()) / static_cast<double>(out.search.scanned);
  const double keep = 1.0 - 1.0 / static_cast<double>(p);
  out.expected = keep * keep;
  return out;
}

}  // namespace gammalat
