#include "gammalat/cohomology.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>

#include "gammalat/modular.hpp"
#include "gammalat/normal_form.hpp"

namespace gammalat {

namespace {

using modular::ModMatrix;
using modular::PrimePower;

ModMatrix mod_mul(const ModMatrix& a, const ModMatrix& b, std::int64_t modulus) {
  ModMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = (c(i, j) + aik * b(k, j)) % modulus;
    }
  return c;
}

// Working precision for the p-adic path. H^1(Gamma_j, M) is killed by p^j,
// so every nonzero Smith invariant of tau_j - 1 over Z_p has valuation at
// most j <= n. The kernel basis read off modulo p^E is only correct modulo
// p^{E-j}, and coordinates are needed modulo p^j, hence E = 2n + 1.
std::optional<PrimePower> padic_ring(const GroupParams& params) {
  try {
    return PrimePower::make(params.p, 2 * params.n + 1);
  } catch (const std::overflow_error&) {
    return std::nullopt;
  }
}

// Rows from `first` on must vanish up to the precision loss p^{E-n}.
bool tail_vanishes(const ModMatrix& c, std::size_t first, std::size_t cols, const PrimePower& ring, int n) {
  std::int64_t q = 1;
  for (int i = 0; i < ring.exponent - n; ++i) q *= ring.p;
  for (std::size_t i = first; i < c.rows(); ++i)
    for (std::size_t col = 0; col < cols; ++col)
      if (c(i, col) % q != 0) return false;
  return true;
}

struct Level {
  TateModel model;
  std::size_t kernel_rank = 0;
  // Exact path: solver on the integral kernel basis.
  std::optional<LatticeSolver> solver;
  // p-adic path: left transform putting tau_j - 1 in Smith shape mod p^E.
  std::optional<PrimePower> ring;
  ModMatrix left;
  int n = 0;
};

void set_zero_h1(Level& out, const GammaLattice& m) {
  const FiniteGammaModule z = FiniteGammaModule::zero(m.params());
  out.model.h1 = CanonicalForm{z, IntMatrix(0, out.kernel_rank), IntMatrix(out.kernel_rank, 0)};
}

// ker N_j is the saturation of (tau_j - 1)M, and Smith reduction of tau_j - 1
// over Z/p^E gives both at once: with L (tau_j - 1) R = diag(p^{v_t}), the
// first columns of L^{-1} span the kernel and the quotient is sum Z/p^{v_t}.
Level padic_level(const GammaLattice& m, int j, const PrimePower& ring) {
  const std::size_t r = m.rank();
  const std::int64_t P = ring.modulus;
  const ModMatrix tau = ModMatrix::reduce(m.subgroup_generator(j), P);
  ModMatrix b = tau;
  for (std::size_t i = 0; i < r; ++i) b(i, i) = modular::reduce(b(i, i) - 1, P);
  modular::ChainSmith cs = modular::chain_smith(b, ring, false, true);
  const std::size_t k = cs.rank();
  for (int v : cs.pivot_valuations)
    if (v > j) throw InvariantFailure("tate model: H^1 is not killed by the subgroup order");

  Level out;
  out.model.level = j;
  out.kernel_rank = k;
  out.ring = ring;
  out.left = cs.left;
  out.n = m.params().n;
  std::vector<std::size_t> first(k);
  for (std::size_t t = 0; t < k; ++t) first[t] = t;
  out.model.kernel_basis = cs.left_inverse.to_integer().select_columns(first);
  const IntMatrix lb = mod_mul(cs.left, b, P).to_integer().select_rows(first);
  out.model.relation_matrix = hconcat(lb, IntMatrix::identity(k) * Integer(P));
  const ModMatrix conj = mod_mul(mod_mul(cs.left, ModMatrix::reduce(m.action(), P), P), cs.left_inverse, P);
  if (!tail_vanishes(conj, k, k, ring, m.params().n))
    throw InvariantFailure("tate model: sigma does not preserve the norm kernel");
  out.model.induced_action = conj.to_integer().select_rows(first).select_columns(first);

  std::vector<std::size_t> kept;
  std::vector<int> exps;
  for (std::size_t t = 0; t < k; ++t)
    if (cs.pivot_valuations[t] > 0) {
      kept.push_back(t);
      exps.push_back(cs.pivot_valuations[t]);
    }
  if (kept.empty()) {
    set_zero_h1(out, m);
    return out;
  }
  const IntMatrix id = IntMatrix::identity(k);
  const IntMatrix action = out.model.induced_action.select_rows(kept).select_columns(kept);
  const FiniteGammaModule canon = FiniteGammaModule::diagonal(m.params(), exps, action);
  out.model.h1 = CanonicalForm{canon, id.select_rows(kept), id.select_columns(kept)};
  return out;
}

Level exact_level(const GammaLattice& m, int j) {
  const std::size_t r = m.rank();
  const IntMatrix tau = m.subgroup_generator(j);
  const IntMatrix norm = geometric_sum(tau, m.params().subgroup_order(j));
  Level out;
  out.model.level = j;
  out.model.kernel_basis = integer_kernel(norm);
  const std::size_t k = out.model.kernel_basis.cols();
  out.kernel_rank = k;
  if (k == 0) {
    out.model.relation_matrix = IntMatrix(0, r);
    out.model.induced_action = IntMatrix(0, 0);
    set_zero_h1(out, m);
    return out;
  }
  out.solver.emplace(out.model.kernel_basis);
  try {
    out.model.relation_matrix = out.solver->solve_columns(tau - IntMatrix::identity(r));
    out.model.induced_action = out.solver->solve_columns(m.action() * out.model.kernel_basis);
  } catch (const std::domain_error&) {
    throw InvariantFailure("tate model: (tau - 1)M or sigma ker N leaves the norm kernel");
  }
  const FiniteGammaModule presented(m.params(), out.model.relation_matrix, out.model.induced_action);
  out.model.h1 = canonicalize(presented);
  return out;
}

Level compute_level(const GammaLattice& m, int j, TateMethod method = TateMethod::Auto) {
  m.params().check_subgroup_index(j);
  if (m.rank() == 0) {
    Level out;
    out.model.level = j;
    out.model.kernel_basis = IntMatrix(0, 0);
    out.model.relation_matrix = IntMatrix(0, 0);
    out.model.induced_action = IntMatrix(0, 0);
    set_zero_h1(out, m);
    return out;
  }
  if (method == TateMethod::Exact) return exact_level(m, j);
  const auto ring = padic_ring(m.params());
  if (ring) return padic_level(m, j, *ring);
  if (method == TateMethod::PAdic) throw InvalidInput("p-adic route needs p^{2n+1} < 2^31");
  return exact_level(m, j);
}

// Coordinates of the columns of `vectors` (elements of ker N) in the kernel
// basis of `level`.
IntMatrix kernel_coordinates(const Level& level, const IntMatrix& vectors, const char* what) {
  if (level.ring) {
    const std::int64_t P = level.ring->modulus;
    const ModMatrix c = mod_mul(level.left, ModMatrix::reduce(vectors, P), P);
    if (!tail_vanishes(c, level.kernel_rank, c.cols(), *level.ring, level.n))
      throw InvariantFailure(std::string(what) + ": image leaves the norm kernel");
    std::vector<std::size_t> first(level.kernel_rank);
    for (std::size_t t = 0; t < first.size(); ++t) first[t] = t;
    return c.to_integer().select_rows(first);
  }
  if (!level.solver) {
    if (!vectors.is_zero()) throw InvariantFailure(std::string(what) + ": image leaves the norm kernel");
    return IntMatrix(0, vectors.cols());
  }
  try {
    return level.solver->solve_columns(vectors);
  } catch (const std::domain_error&) {
    throw InvariantFailure(std::string(what) + ": image leaves the norm kernel");
  }
}

GammaMap induced_map(const Level& from, const Level& to, const IntMatrix& lattice_map, const char* what) {
  const CanonicalForm& s = from.model.h1;
  const CanonicalForm& t = to.model.h1;
  if (s.module.is_zero() || t.module.is_zero()) return zero_map(s.module, t.module);
  const IntMatrix images = lattice_map * from.model.kernel_basis * s.from_canonical;
  const IntMatrix coords = kernel_coordinates(to, images, what);
  // make_map rejects the result if relations do not go to relations.
  return make_map(s.module, t.module, t.to_canonical * coords);
}

GammaMap down_from_levels(const GammaLattice& m, const Level& upper, const Level& lower, int i) {
  const IntMatrix tau = m.subgroup_generator(i);
  return induced_map(upper, lower, geometric_sum(tau, m.params().p), "down map");
}

GammaMap up_from_levels(const GammaLattice& m, const Level& lower, const Level& upper) {
  return induced_map(lower, upper, IntMatrix::identity(m.rank()), "up map");
}

void check_map_index(const GammaLattice& m, int i) {
  if (i < 1 || i > m.params().n) throw InvalidInput("map index must lie in [1, n]");
}

}  // namespace

TateModel tate_model(const GammaLattice& m, int j, TateMethod method) { return compute_level(m, j, method).model; }

FiniteGammaModule tate_h1(const GammaLattice& m, int j) { return compute_level(m, j).model.h1.module; }

FiniteGammaModule tate_h0(const GammaLattice& m, int j) {
  m.params().check_subgroup_index(j);
  const FixedSublattice fixed = fixed_sublattice(m, j);
  if (fixed.rank() == 0) return FiniteGammaModule::zero(m.params());
  const IntMatrix norm = geometric_sum(m.subgroup_generator(j), m.params().subgroup_order(j));
  const IntMatrix rel = LatticeSolver(fixed.basis).solve_columns(norm);
  return canonicalize(FiniteGammaModule(m.params(), rel, fixed.lattice.action())).module;
}

GammaMap down_map(const GammaLattice& m, int i) {
  check_map_index(m, i);
  return down_from_levels(m, compute_level(m, i), compute_level(m, i - 1), i);
}

GammaMap up_map(const GammaLattice& m, int i) {
  check_map_index(m, i);
  return up_from_levels(m, compute_level(m, i - 1), compute_level(m, i));
}

YakovlevDiagram yakovlev_diagram(const GammaLattice& m, TateMethod method) {
  const int n = m.params().n;
  std::vector<Level> levels;
  for (int j = 0; j <= n; ++j) levels.push_back(compute_level(m, j, method));
  YakovlevDiagram d;
  d.params = m.params();
  for (int j = 1; j <= n; ++j) d.levels.push_back(levels[static_cast<std::size_t>(j)].model.h1.module);
  for (int i = 2; i <= n; ++i) {
    const auto& lower = levels[static_cast<std::size_t>(i) - 1];
    const auto& upper = levels[static_cast<std::size_t>(i)];
    d.ups.push_back(up_from_levels(m, lower, upper));
    d.downs.push_back(down_from_levels(m, upper, lower, i));
  }
  return d;
}

bool is_cohomologically_trivial(const GammaLattice& m) {
  for (int j = 1; j <= m.params().n; ++j)
    if (!tate_h1(m, j).is_zero() || !tate_h0(m, j).is_zero()) return false;
  return true;
}

const YakovlevDiagram& library_diagram(const GroupParams& params, int a, int b) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int, int>, std::unique_ptr<YakovlevDiagram>> cache;
  const auto key = std::make_tuple(params.p, params.n, a, b);
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto computed = std::make_unique<YakovlevDiagram>(yakovlev_diagram(mab_lattice(params, a, b)));
  std::lock_guard<std::mutex> lock(mutex);
  auto [it, inserted] = cache.emplace(key, std::move(computed));
  return *it->second;
}

}  // namespace gammalat
