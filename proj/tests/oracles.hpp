#pragma once

// Brute-force reference computations used to cross-check the library. They
// only rely on plain integer arithmetic and enumeration.

#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "gammalat/finite_module.hpp"
#include "gammalat/matrix.hpp"

namespace oracle {

using Vec = std::vector<std::int64_t>;

inline std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline bool is_prime_naive(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// q = 1 mod p, q != 1 mod p^2 and p outside the set of p-th powers mod q,
/// the latter by listing x^p for every residue x.
inline bool qualifies_by_enumeration(std::uint64_t p, std::uint64_t q) {
  if (q % p != 1 || q % (p * p) == 1) return false;
  std::set<std::uint64_t> powers;
  for (std::uint64_t x = 0; x < q; ++x) {
    std::uint64_t y = 1;
    for (std::uint64_t k = 0; k < p; ++k) y = y * x % q;
    powers.insert(y);
  }
  return !powers.count(p % q);
}

/// rk of the units of the fixed field of Gamma_j, by counting orbits of the
/// group Z/p^n on the places above each place of K: a place with
/// decomposition group D splits into |Gamma / D Gamma_j| places of L^{Gamma_j}.
inline std::int64_t orbit_count(std::int64_t p, int n, int decomposition, int j) {
  const std::int64_t order = ipow(p, n);
  // Subgroup generated by the elements of order dividing p^d and p^j.
  const std::int64_t step = std::gcd(ipow(p, n - decomposition), ipow(p, n - j));
  std::set<std::int64_t> cosets;
  for (std::int64_t x = 0; x < order; ++x) cosets.insert(x % step);
  return static_cast<std::int64_t>(cosets.size());
}

/// Every element of a canonical finite module as a coordinate vector.
inline std::vector<Vec> all_elements(const gammalat::FiniteGammaModule& x, std::int64_t p) {
  const auto& e = x.exponents();
  std::vector<Vec> out{Vec{}};
  for (int ex : e) {
    std::vector<Vec> next;
    for (const auto& v : out)
      for (std::int64_t c = 0; c < ipow(p, ex); ++c) {
        Vec w = v;
        w.push_back(c);
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

inline Vec apply(const gammalat::FiniteGammaModule& x, std::int64_t p, const gammalat::IntMatrix& a, const Vec& v) {
  const auto& e = x.exponents();
  Vec w(v.size(), 0);
  for (std::size_t r = 0; r < v.size(); ++r) {
    const std::int64_t mod = ipow(p, e[r]);
    std::int64_t s = 0;
    for (std::size_t c = 0; c < v.size(); ++c) s = (s + a(r, c).get_si() % mod * v[c]) % mod;
    w[r] = (s + mod) % mod;
  }
  return w;
}

inline Vec add(const gammalat::FiniteGammaModule& x, std::int64_t p, const Vec& u, const Vec& v) {
  Vec w(u.size());
  for (std::size_t r = 0; r < u.size(); ++r) w[r] = (u[r] + v[r]) % ipow(p, x.exponents()[r]);
  return w;
}

/// Order of the Gamma-submodule generated by `gens`, by closing under
/// addition and sigma.
inline std::size_t generated_order(const gammalat::FiniteGammaModule& x, std::int64_t p, const std::vector<Vec>& gens) {
  std::set<Vec> seen{Vec(x.generators(), 0)};
  std::vector<Vec> frontier(seen.begin(), seen.end());
  std::vector<Vec> moves;
  for (const auto& g : gens) {
    Vec v = g;
    for (std::int64_t k = 0; k < ipow(p, x.params().n); ++k) {
      moves.push_back(v);
      v = apply(x, p, x.action(), v);
    }
  }
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& v : frontier)
      for (const auto& m : moves) {
        Vec w = add(x, p, v, m);
        if (seen.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

/// Whether (+)_k (Z/p^{a_k})[Gamma/Gamma_{j_k}] maps onto x, searching all
/// generator images x_k with p^{a_k} x_k = 0 and tau_{j_k} x_k = x_k.
inline bool standard_sum_surjects(const gammalat::FiniteGammaModule& x, const std::vector<gammalat::StandardLabel>& labels) {
  const std::int64_t p = x.params().p;
  const int n = x.params().n;
  const auto elements = all_elements(x, p);
  std::vector<std::vector<Vec>> candidates;
  for (const auto& l : labels) {
    const gammalat::IntMatrix tau = x.action().pow(static_cast<std::uint64_t>(ipow(p, n - l.j)));
    std::vector<Vec> ok;
    for (const auto& v : elements) {
      Vec scaled = v;
      for (std::size_t r = 0; r < v.size(); ++r) scaled[r] = v[r] * ipow(p, l.a) % ipow(p, x.exponents()[r]);
      if (scaled != Vec(v.size(), 0)) continue;
      if (apply(x, p, tau, v) != v) continue;
      ok.push_back(v);
    }
    candidates.push_back(ok);
  }
  const std::size_t target = elements.size();
  std::vector<Vec> chosen(labels.size());
  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == labels.size()) return generated_order(x, p, chosen) == target;
    for (const auto& v : candidates[k]) {
      chosen[k] = v;
      if (self(self, k + 1)) return true;
    }
    return false;
  };
  return search(search, 0);
}

/// All multisets of labels (a, j) with a >= 1 whose standard sums have the
/// given log order.
inline std::vector<std::vector<gammalat::StandardLabel>> label_multisets(std::int64_t p, int n, int log_order) {
  std::vector<gammalat::StandardLabel> all;
  for (int a = 1; a <= log_order; ++a)
    for (int j = 0; j <= n; ++j)
      if (a * ipow(p, n - j) <= log_order) all.push_back({a, j});
  std::vector<std::vector<gammalat::StandardLabel>> out;
  std::vector<gammalat::StandardLabel> cur;
  auto rec = [&](auto&& self, std::size_t from, std::int64_t left) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t k = from; k < all.size(); ++k) {
      const std::int64_t size = all[k].a * ipow(p, n - all[k].j);
      if (size > left) continue;
      cur.push_back(all[k]);
      self(self, k, left - size);
      cur.pop_back();
    }
  };
  rec(rec, 0, log_order);
  return out;
}

/// A random matrix with determinant +-1, built from elementary operations.
inline gammalat::IntMatrix random_unimodular(std::size_t dim, std::mt19937_64& rng, gammalat::IntMatrix* inverse) {
  gammalat::IntMatrix u = gammalat::IntMatrix::identity(dim);
  gammalat::IntMatrix v = gammalat::IntMatrix::identity(dim);
  if (dim < 2) {
    if (inverse) *inverse = v;
    return u;
  }
  std::uniform_int_distribution<std::size_t> idx(0, dim - 1);
  std::uniform_int_distribution<int> f(-2, 2);
  for (std::size_t s = 0; s < 3 * dim; ++s) {
    const std::size_t i = idx(rng), j = idx(rng);
    const int c = f(rng);
    if (i == j || c == 0) continue;
    u.add_row_multiple(i, j, c);    // u <- E u
    v.add_column_multiple(j, i, -c);  // v <- v E^{-1}
  }
  if (inverse) *inverse = v;
  return u;
}

}  // namespace oracle
