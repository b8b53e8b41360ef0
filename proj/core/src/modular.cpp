#include "gammalat/modular.hpp"

#include <limits>
#include <stdexcept>

namespace gammalat::modular {

PrimePower PrimePower::make(std::int64_t p, int exponent) {
  if (p < 2 || exponent < 0) throw std::invalid_argument("PrimePower: bad parameters");
  PrimePower ring{p, exponent, 1};
  for (int i = 0; i < exponent; ++i) {
    ring.modulus *= p;
    if (ring.modulus >= (std::int64_t{1} << 31)) throw std::overflow_error("PrimePower: modulus exceeds 2^31");
  }
  return ring;
}

std::int64_t reduce(std::int64_t x, std::int64_t modulus) {
  std::int64_t r = x % modulus;
  return r < 0 ? r + modulus : r;
}

ModMatrix ModMatrix::reduce(const IntMatrix& m, std::int64_t modulus) {
  ModMatrix out(m.rows(), m.cols());
  Integer r;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_fdiv_r_ui(r.get_mpz_t(), m(i, j).get_mpz_t(), static_cast<unsigned long>(modulus));
      out(i, j) = r.get_si();
    }
  return out;
}

IntMatrix ModMatrix::to_integer() const {
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = static_cast<long>((*this)(i, j));
  return out;
}

int valuation(std::int64_t x, const PrimePower& ring) {
  x = reduce(x, ring.modulus);
  if (x == 0) return ring.exponent;
  int v = 0;
  while (x % ring.p == 0) {
    x /= ring.p;
    ++v;
  }
  return v;
}

std::int64_t unit_inverse(std::int64_t x, std::int64_t modulus) {
  std::int64_t old_r = reduce(x, modulus);
  std::int64_t r = modulus;
  std::int64_t old_s = 1;
  std::int64_t s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw std::domain_error("unit_inverse: not a unit");
  return reduce(old_s, modulus);
}

ChainSmith chain_smith(ModMatrix a, const PrimePower& ring, bool track_right, bool track_left) {
  const std::int64_t P = ring.modulus;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  ChainSmith out;
  if (track_right) {
    out.right = ModMatrix(cols, cols);
    for (std::size_t j = 0; j < cols; ++j) out.right(j, j) = 1 % P;
  }
  if (track_left) {
    out.left = ModMatrix(rows, rows);
    out.left_inverse = ModMatrix(rows, rows);
    for (std::size_t i = 0; i < rows; ++i) out.left(i, i) = out.left_inverse(i, i) = 1 % P;
  }
  std::size_t t = 0;
  while (t < rows && t < cols) {
    int best = ring.exponent;
    std::size_t bi = 0;
    std::size_t bj = 0;
    for (std::size_t i = t; i < rows && best > 0; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (a(i, j) == 0) continue;
        const int v = valuation(a(i, j), ring);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    if (best == ring.exponent) break;
    if (bi != t) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(t, j), a(bi, j));
      if (track_left)
        for (std::size_t k = 0; k < rows; ++k) {
          std::swap(out.left(t, k), out.left(bi, k));
          std::swap(out.left_inverse(k, t), out.left_inverse(k, bi));
        }
    }
    if (bj != t) {
      for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, t), a(i, bj));
      if (track_right)
        for (std::size_t i = 0; i < cols; ++i) std::swap(out.right(i, t), out.right(i, bj));
    }
    std::int64_t pv = 1;
    for (int k = 0; k < best; ++k) pv *= ring.p;
    const std::int64_t unit_inv = unit_inverse(a(t, t) / pv, P);
    for (std::size_t j = t; j < cols; ++j) a(t, j) = (a(t, j) * unit_inv) % P;
    if (track_left) {
      // Row t scaled by u^{-1}: the inverse scales column t by u.
      const std::int64_t unit = unit_inverse(unit_inv, P);
      for (std::size_t k = 0; k < rows; ++k) {
        out.left(t, k) = (out.left(t, k) * unit_inv) % P;
        out.left_inverse(k, t) = (out.left_inverse(k, t) * unit) % P;
      }
    }
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (a(i, t) == 0) continue;
      const std::int64_t f = a(i, t) / pv;
      for (std::size_t j = t; j < cols; ++j)
        if (a(t, j) != 0) a(i, j) = reduce(a(i, j) - f * a(t, j), P);
      if (track_left)
        for (std::size_t k = 0; k < rows; ++k) {
          // row_i -= f row_t; the inverse adds f column_i into column_t.
          if (out.left(t, k) != 0) out.left(i, k) = reduce(out.left(i, k) - f * out.left(t, k), P);
          if (out.left_inverse(k, i) != 0) out.left_inverse(k, t) = (out.left_inverse(k, t) + f * out.left_inverse(k, i)) % P;
        }
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (a(t, j) == 0) continue;
      const std::int64_t f = a(t, j) / pv;
      a(t, j) = 0;
      if (track_right)
        for (std::size_t i = 0; i < cols; ++i)
          if (out.right(i, t) != 0) out.right(i, j) = reduce(out.right(i, j) - f * out.right(i, t), P);
    }
    out.pivot_valuations.push_back(best);
    ++t;
  }
  return out;
}

int cokernel_log_order(const ModMatrix& a, const PrimePower& ring) {
  ChainSmith s = chain_smith(a, ring, false);
  int total = static_cast<int>(a.rows() - s.rank()) * ring.exponent;
  for (int v : s.pivot_valuations) total += v;
  return total;
}

std::vector<std::vector<std::int64_t>> kernel_generators(const ModMatrix& a, const PrimePower& ring) {
  ChainSmith s = chain_smith(a, ring, true);
  const std::size_t cols = a.cols();
  std::vector<std::vector<std::int64_t>> gens;
  for (std::size_t t = 0; t < cols; ++t) {
    std::int64_t scale = 1;
    if (t < s.rank()) {
      const int v = s.pivot_valuations[t];
      if (v == 0) continue;
      for (int k = 0; k < ring.exponent - v; ++k) scale *= ring.p;
    }
    std::vector<std::int64_t> g(cols);
    for (std::size_t i = 0; i < cols; ++i) g[i] = (s.right(i, t) * scale) % ring.modulus;
    gens.push_back(std::move(g));
  }
  return gens;
}

std::size_t rank_mod_p(const ModMatrix& a, std::int64_t p) {
  ModMatrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = reduce(a(i, j), p);
  return chain_smith(std::move(m), PrimePower::make(p, 1), false).rank();
}

std::optional<std::vector<std::int64_t>> solve(const ModMatrix& a, const std::vector<std::int64_t>& b,
                                               const PrimePower& ring) {
  const std::size_t cols = a.cols();
  ModMatrix aug(a.rows(), cols + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug(i, j) = a(i, j);
    aug(i, cols) = reduce(-b[i], ring.modulus);
  }
  // Any kernel vector whose last coordinate is a unit yields a solution, and
  // the last coordinates of the generators generate the same ideal.
  for (const auto& g : kernel_generators(aug, ring)) {
    if (g[cols] % ring.p == 0) continue;
    const std::int64_t inv = unit_inverse(g[cols], ring.modulus);
    std::vector<std::int64_t> x(cols);
    for (std::size_t j = 0; j < cols; ++j) x[j] = (g[j] * inv) % ring.modulus;
    return x;
  }
  return std::nullopt;
}

ModMatrix scale_rows(const ModMatrix& a, const std::vector<int>& row_exponents, const PrimePower& ring) {
  ModMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::int64_t s = 1;
    for (int k = row_exponents[i]; k < ring.exponent; ++k) s *= ring.p;
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = (a(i, j) * s) % ring.modulus;
  }
  return out;
}

}  // namespace gammalat::modular
