#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gammalat/modular.hpp"

using namespace gammalat;
using namespace gammalat::modular;

namespace {

ModMatrix random_mod(std::size_t r, std::size_t c, std::int64_t modulus, std::mt19937_64& rng) {
  ModMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(modulus));
  return m;
}

ModMatrix mul(const ModMatrix& a, const ModMatrix& b, std::int64_t modulus) {
  ModMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = (c(i, j) + a(i, k) * b(k, j)) % modulus;
  return c;
}

std::vector<std::int64_t> apply(const ModMatrix& a, const std::vector<std::int64_t>& x, std::int64_t modulus) {
  std::vector<std::int64_t> y(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] = (y[i] + a(i, j) * x[j]) % modulus;
  return y;
}

// Every vector of (Z/P)^dim.
std::vector<std::vector<std::int64_t>> all_vectors(std::size_t dim, std::int64_t modulus) {
  std::vector<std::vector<std::int64_t>> out{{}};
  for (std::size_t d = 0; d < dim; ++d) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& v : out)
      for (std::int64_t c = 0; c < modulus; ++c) {
        auto w = v;
        w.push_back(c);
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

// Subgroup of (Z/P)^dim generated by the given vectors.
std::set<std::vector<std::int64_t>> span(const std::vector<std::vector<std::int64_t>>& gens, std::size_t dim,
                                         std::int64_t modulus) {
  std::set<std::vector<std::int64_t>> seen{std::vector<std::int64_t>(dim, 0)};
  std::vector<std::vector<std::int64_t>> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& v : frontier)
      for (const auto& g : gens) {
        auto w = v;
        for (std::size_t i = 0; i < dim; ++i) w[i] = (w[i] + g[i]) % modulus;
        if (seen.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST(ChainSmith, TransformsDiagonalize) {
  const PrimePower ring = PrimePower::make(3, 3);
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 30; ++trial) {
    ModMatrix a = random_mod(2 + rng() % 4, 2 + rng() % 4, ring.modulus, rng);
    for (std::size_t j = 0; j < a.cols(); ++j) a(0, j) = a(0, j) * 3 % ring.modulus;
    const ChainSmith cs = chain_smith(a, ring, true, true);
    const ModMatrix d = mul(mul(cs.left, a, ring.modulus), cs.right, ring.modulus);
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j) {
        std::int64_t expected = 0;
        if (i == j && i < cs.rank()) {
          expected = 1;
          for (int k = 0; k < cs.pivot_valuations[i]; ++k) expected *= 3;
        }
        EXPECT_EQ(d(i, j), expected);
      }
    const ModMatrix id = mul(cs.left, cs.left_inverse, ring.modulus);
    for (std::size_t i = 0; i < id.rows(); ++i)
      for (std::size_t j = 0; j < id.cols(); ++j) EXPECT_EQ(id(i, j), i == j ? 1 : 0);
    EXPECT_TRUE(std::is_sorted(cs.pivot_valuations.begin(), cs.pivot_valuations.end()));
  }
}

TEST(Modular, KernelAndCokernelAgainstEnumeration) {
  const PrimePower ring = PrimePower::make(3, 2);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t r = 1 + rng() % 3, c = 1 + rng() % 3;
    const ModMatrix a = random_mod(r, c, ring.modulus, rng);
    std::set<std::vector<std::int64_t>> kernel, image;
    for (const auto& x : all_vectors(c, ring.modulus)) {
      const auto y = apply(a, x, ring.modulus);
      image.insert(y);
      if (std::all_of(y.begin(), y.end(), [](std::int64_t v) { return v == 0; })) kernel.insert(x);
    }
    EXPECT_EQ(span(kernel_generators(a, ring), c, ring.modulus), kernel);
    std::size_t total = 1;
    for (std::size_t i = 0; i < r; ++i) total *= static_cast<std::size_t>(ring.modulus);
    std::size_t coker = total / image.size();
    int log = 0;
    while (coker > 1) {
      coker /= 3;
      ++log;
    }
    EXPECT_EQ(cokernel_log_order(a, ring), log);
  }
}

TEST(Modular, SolveFindsSolutionsExactlyWhenTheyExist) {
  const PrimePower ring = PrimePower::make(5, 1);
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const ModMatrix a = random_mod(2, 2, ring.modulus, rng);
    std::set<std::vector<std::int64_t>> image;
    for (const auto& x : all_vectors(2, ring.modulus)) image.insert(apply(a, x, ring.modulus));
    for (const auto& b : all_vectors(2, ring.modulus)) {
      const auto x = solve(a, b, ring);
      EXPECT_EQ(x.has_value(), image.count(b) == 1);
      if (x) EXPECT_EQ(apply(a, *x, ring.modulus), b);
    }
  }
}

TEST(Modular, RankModP) {
  const ModMatrix a = ModMatrix::reduce(IntMatrix{{3, 6}, {1, 2}}, 9);
  EXPECT_EQ(rank_mod_p(a, 3), 1u);
  EXPECT_EQ(rank_mod_p(ModMatrix::reduce(IntMatrix::identity(3), 9), 3), 3u);
}

TEST(Modular, RingTooLargeRejected) { EXPECT_THROW(PrimePower::make(99991, 2), std::overflow_error); }
