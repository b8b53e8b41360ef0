#include "gammalat/finite_module.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "gammalat/normal_form.hpp"

namespace gammalat {

namespace {

using modular::ModMatrix;
using modular::PrimePower;

Integer pow_p(int p, int e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

std::int64_t pow_p64(std::int64_t p, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

void require_canonical(const FiniteGammaModule& x, const char* where) {
  if (!x.is_canonical()) throw std::invalid_argument(std::string(where) + ": module is not in canonical form");
}

// Ring Z/p^E large enough for both modules.
PrimePower joint_ring(const FiniteGammaModule& x, const FiniteGammaModule& y) {
  return PrimePower::make(x.params().p, std::max({x.max_exponent(), y.max_exponent(), 1}));
}

ModMatrix mat_mul(const ModMatrix& a, const ModMatrix& b, std::int64_t modulus) {
  ModMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = (c(i, j) + aik * b(k, j)) % modulus;
    }
  return c;
}

ModMatrix mat_pow(ModMatrix a, std::uint64_t e, std::int64_t modulus) {
  ModMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) r(i, i) = 1 % modulus;
  while (e > 0) {
    if (e & 1) r = mat_mul(r, a, modulus);
    e >>= 1;
    if (e > 0) a = mat_mul(a, a, modulus);
  }
  return r;
}

ModMatrix diagonal_relations(const std::vector<int>& exps, const PrimePower& ring) {
  ModMatrix d(exps.size(), exps.size());
  for (std::size_t r = 0; r < exps.size(); ++r) d(r, r) = pow_p64(ring.p, exps[r]) % ring.modulus;
  return d;
}

ModMatrix hstack(const std::vector<const ModMatrix*>& parts) {
  std::size_t cols = 0;
  for (const auto* m : parts) cols += m->cols();
  ModMatrix out(parts.front()->rows(), cols);
  std::size_t offset = 0;
  for (const auto* m : parts) {
    for (std::size_t i = 0; i < m->rows(); ++i)
      for (std::size_t j = 0; j < m->cols(); ++j) out(i, offset + j) = (*m)(i, j);
    offset += m->cols();
  }
  return out;
}

// log_p of the image of the columns of m inside the module with the given
// diagonal exponents.
int image_log(const ModMatrix& m, const std::vector<int>& target_exps, const PrimePower& ring) {
  int total = 0;
  for (int e : target_exps) total += e;
  const ModMatrix d = diagonal_relations(target_exps, ring);
  return total - modular::cokernel_log_order(hstack({&d, &m}), ring);
}

std::vector<std::int64_t> reduce_vector(std::vector<std::int64_t> v, const std::vector<int>& exps, std::int64_t p) {
  for (std::size_t r = 0; r < v.size(); ++r) v[r] = modular::reduce(v[r], pow_p64(p, exps[r]));
  return v;
}

}  // namespace

FiniteGammaModule::FiniteGammaModule(GroupParams params, IntMatrix relations, IntMatrix action)
    : params_(params), relations_(std::move(relations)), action_(std::move(action)) {
  const std::size_t g = action_.rows();
  if (action_.cols() != g || relations_.rows() != g)
    throw InvalidInput("finite module: relation and action shapes disagree");
  if (g == 0) return;
  if (invariant_factors(relations_).size() != g) throw InvalidInput("finite module: presentation is not finite");
  LatticeSolver solver(column_hnf(relations_));
  const IntMatrix cycle = action_.pow(static_cast<std::uint64_t>(params_.order())) - IntMatrix::identity(g);
  auto in_span = [&](const IntMatrix& m) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!solver.solve(m.column(c))) return false;
    return true;
  };
  if (!in_span(action_ * relations_) || !in_span(cycle))
    throw InvalidInput("finite module: action does not preserve the relations or has the wrong order");
}

FiniteGammaModule FiniteGammaModule::diagonal(GroupParams params, std::vector<int> exponents, IntMatrix action) {
  const std::size_t g = exponents.size();
  if (action.rows() != g || action.cols() != g) throw InvalidInput("finite module: action shape mismatch");
  FiniteGammaModule x;
  x.params_ = params;
  x.canonical_ = true;
  x.relations_ = IntMatrix(g, g);
  for (std::size_t r = 0; r < g; ++r) {
    if (exponents[r] < 1) throw InvalidInput("finite module: canonical exponents must be positive");
    x.relations_(r, r) = pow_p(params.p, exponents[r]);
  }
  x.exponents_ = std::move(exponents);
  x.action_ = std::move(action);
  x.action_ = reduce_coordinates(x, x.action_);
  for (std::size_t r = 0; r < g; ++r)
    for (std::size_t k = 0; k < g; ++k)
      if (x.exponents_[k] < x.exponents_[r] &&
          !mpz_divisible_p(x.action_(r, k).get_mpz_t(), pow_p(params.p, x.exponents_[r] - x.exponents_[k]).get_mpz_t()))
        throw InvalidInput("finite module: action does not preserve the relations");
  if (g > 0) {
    const PrimePower ring = x.ring();
    const ModMatrix cycle = mat_pow(ModMatrix::reduce(x.action_, ring.modulus),
                                    static_cast<std::uint64_t>(params.order()), ring.modulus);
    for (std::size_t r = 0; r < g; ++r)
      for (std::size_t k = 0; k < g; ++k)
        if (modular::reduce(cycle(r, k) - (r == k ? 1 : 0), pow_p64(params.p, x.exponents_[r])) != 0)
          throw InvalidInput("finite module: sigma^{p^n} does not act trivially");
  }
  return x;
}

FiniteGammaModule FiniteGammaModule::zero(GroupParams params) { return diagonal(params, {}, IntMatrix(0, 0)); }

const std::vector<int>& FiniteGammaModule::exponents() const {
  if (!canonical_) throw std::logic_error("exponents(): module is not canonical");
  return exponents_;
}

int FiniteGammaModule::max_exponent() const {
  const auto& e = exponents();
  return e.empty() ? 0 : *std::max_element(e.begin(), e.end());
}

int FiniteGammaModule::log_order() const {
  if (canonical_) {
    int s = 0;
    for (int e : exponents_) s += e;
    return s;
  }
  return canonicalize(*this).module.log_order();
}

PrimePower FiniteGammaModule::ring() const { return PrimePower::make(params_.p, std::max(max_exponent(), 1)); }

CanonicalForm canonicalize(const FiniteGammaModule& x) {
  const std::size_t g = x.generators();
  if (x.is_canonical()) return CanonicalForm{x, IntMatrix::identity(g), IntMatrix::identity(g)};
  const Integer p = x.params().p;
  SmithDecomposition snf = smith_form(x.relations(), SmithRequest{true, true, false});
  std::vector<std::size_t> kept;
  std::vector<int> exps;
  for (std::size_t k = 0; k < snf.rank(); ++k) {
    const int v = p_valuation(snf.invariants[k], p);
    if (v == 0) continue;
    kept.push_back(k);
    exps.push_back(v);
  }
  IntMatrix to = snf.left.select_rows(kept);
  IntMatrix from = snf.left_inverse.select_columns(kept);
  // Kill the prime-to-p component of each new generator.
  for (std::size_t c = 0; c < kept.size(); ++c) {
    const Integer d = snf.invariants[kept[c]];
    const Integer pe = p_part(d, p);
    const Integer u = d / pe;
    if (u == 1) continue;
    Integer inv;
    mpz_invert(inv.get_mpz_t(), u.get_mpz_t(), pe.get_mpz_t());
    const Integer scale = u * inv;
    for (std::size_t r = 0; r < g; ++r) from(r, c) *= scale;
  }
  IntMatrix action = to * x.action() * from;
  FiniteGammaModule canon = FiniteGammaModule::diagonal(x.params(), exps, action);
  return CanonicalForm{canon, reduce_coordinates(canon, to), from};
}

GammaMap transport(const GammaMap& f, const CanonicalForm& source, const CanonicalForm& target) {
  return make_map(source.module, target.module, target.to_canonical * f.matrix * source.from_canonical);
}

IntVector snf_invariants(const FiniteGammaModule& x) {
  const FiniteGammaModule c = x.is_canonical() ? x : canonicalize(x).module;
  std::vector<int> e = c.exponents();
  std::sort(e.begin(), e.end());
  IntVector out;
  for (int v : e) out.push_back(pow_p(c.params().p, v));
  return out;
}

FiniteGammaModule standard_module(const GroupParams& params, int a, int j) {
  params.check_subgroup_index(j);
  if (a < 0) throw InvalidInput("standard module: negative exponent");
  if (a == 0) return FiniteGammaModule::zero(params);
  const IntMatrix shift = coset_shift_matrix(params, j);
  return FiniteGammaModule::diagonal(params, std::vector<int>(shift.rows(), a), shift);
}

FiniteGammaModule module_direct_sum(const FiniteGammaModule& x, const FiniteGammaModule& y) {
  if (!(x.params() == y.params())) throw InvalidInput("direct sum: modules over different groups");
  if (x.is_canonical() && y.is_canonical()) {
    std::vector<int> e = x.exponents();
    e.insert(e.end(), y.exponents().begin(), y.exponents().end());
    return FiniteGammaModule::diagonal(x.params(), e, block_diagonal(x.action(), y.action()));
  }
  return FiniteGammaModule(x.params(), block_diagonal(x.relations(), y.relations()),
                           block_diagonal(x.action(), y.action()));
}

IntMatrix reduce_coordinates(const FiniteGammaModule& x, IntMatrix v) {
  const auto& exps = x.exponents();
  for (std::size_t r = 0; r < v.rows(); ++r) {
    const Integer d = pow_p(x.params().p, exps[r]);
    for (std::size_t c = 0; c < v.cols(); ++c) mpz_fdiv_r(v(r, c).get_mpz_t(), v(r, c).get_mpz_t(), d.get_mpz_t());
  }
  return v;
}

bool is_well_defined(const GammaMap& f) {
  require_canonical(f.source, "is_well_defined");
  require_canonical(f.target, "is_well_defined");
  const auto& es = f.source.exponents();
  const auto& et = f.target.exponents();
  if (f.matrix.rows() != et.size() || f.matrix.cols() != es.size()) return false;
  for (std::size_t r = 0; r < et.size(); ++r)
    for (std::size_t k = 0; k < es.size(); ++k)
      if (es[k] < et[r] &&
          !mpz_divisible_p(f.matrix(r, k).get_mpz_t(), pow_p(f.target.params().p, et[r] - es[k]).get_mpz_t()))
        return false;
  return true;
}

bool is_equivariant(const GammaMap& f) {
  const IntMatrix diff = f.matrix * f.source.action() - f.target.action() * f.matrix;
  return reduce_coordinates(f.target, diff).is_zero();
}

GammaMap make_map(const FiniteGammaModule& source, const FiniteGammaModule& target, IntMatrix matrix) {
  require_canonical(source, "make_map");
  require_canonical(target, "make_map");
  if (!(source.params() == target.params())) throw InvariantFailure("map between modules over different groups");
  if (matrix.rows() != target.generators() || matrix.cols() != source.generators())
    throw InvariantFailure("map matrix has the wrong shape");
  GammaMap f{source, target, reduce_coordinates(target, std::move(matrix))};
  if (!is_well_defined(f)) throw InvariantFailure("map does not send relations to relations");
  if (!is_equivariant(f)) throw InvariantFailure("map does not commute with sigma");
  return f;
}

GammaMap compose(const GammaMap& g, const GammaMap& f) {
  if (g.source.generators() != f.target.generators()) throw InvariantFailure("compose: shape mismatch");
  return GammaMap{f.source, g.target, reduce_coordinates(g.target, g.matrix * f.matrix)};
}

GammaMap identity_map(const FiniteGammaModule& x) {
  return GammaMap{x, x, reduce_coordinates(x, IntMatrix::identity(x.generators()))};
}

GammaMap zero_map(const FiniteGammaModule& source, const FiniteGammaModule& target) {
  return GammaMap{source, target, IntMatrix(target.generators(), source.generators())};
}

GammaMap scalar_map(const FiniteGammaModule& x, std::int64_t c) {
  return GammaMap{x, x, reduce_coordinates(x, IntMatrix::identity(x.generators()) * Integer(static_cast<long>(c)))};
}

GammaMap group_ring_action(const FiniteGammaModule& x, const GroupRingElt& r) {
  const std::size_t g = x.generators();
  IntMatrix sum(g, g);
  IntMatrix power = IntMatrix::identity(g);
  for (std::size_t k = 0; k < r.coeffs().size(); ++k) {
    if (sgn(r.coeffs()[k]) != 0) sum += power * r.coeffs()[k];
    power = reduce_coordinates(x, power * x.action());
  }
  return GammaMap{x, x, reduce_coordinates(x, sum)};
}

GammaMap map_direct_sum(const GammaMap& f, const GammaMap& g) {
  return GammaMap{module_direct_sum(f.source, g.source), module_direct_sum(f.target, g.target),
                  block_diagonal(f.matrix, g.matrix)};
}

bool maps_equal(const GammaMap& f, const GammaMap& g) {
  if (f.matrix.rows() != g.matrix.rows() || f.matrix.cols() != g.matrix.cols()) return false;
  return reduce_coordinates(f.target, f.matrix - g.matrix).is_zero();
}

bool is_zero_map(const GammaMap& f) { return reduce_coordinates(f.target, f.matrix).is_zero(); }

int image_log_order(const GammaMap& f) {
  if (f.target.is_zero() || f.source.is_zero()) return 0;
  const PrimePower ring = joint_ring(f.source, f.target);
  return image_log(ModMatrix::reduce(f.matrix, ring.modulus), f.target.exponents(), ring);
}

std::vector<int> cokernel_type(const GammaMap& f) {
  std::vector<int> out;
  if (f.target.is_zero()) return out;
  const PrimePower ring = joint_ring(f.source, f.target);
  const ModMatrix d = diagonal_relations(f.target.exponents(), ring);
  const ModMatrix m = ModMatrix::reduce(f.matrix, ring.modulus);
  const modular::ChainSmith s = modular::chain_smith(hstack({&d, &m}), ring, false);
  for (int v : s.pivot_valuations)
    if (v > 0) out.push_back(v);
  for (std::size_t k = s.rank(); k < f.target.generators(); ++k) out.push_back(ring.exponent);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_bijective(const GammaMap& f) {
  if (f.source.log_order() != f.target.log_order()) return false;
  if (f.target.is_zero()) return true;
  const ModMatrix m = ModMatrix::reduce(f.matrix, f.target.params().p);
  return modular::rank_mod_p(m, f.target.params().p) == f.target.generators();
}

ModMatrix subgroup_generator_mod(const FiniteGammaModule& x, int j, const PrimePower& ring) {
  x.params().check_subgroup_index(j);
  return mat_pow(ModMatrix::reduce(x.action(), ring.modulus), static_cast<std::uint64_t>(x.params().index(j)),
                 ring.modulus);
}

int quotient_log_order(const FiniteGammaModule& x, int a, int j) {
  require_canonical(x, "quotient_log_order");
  if (x.is_zero()) return 0;
  const PrimePower ring = x.ring();
  const std::size_t g = x.generators();
  const ModMatrix d = diagonal_relations(x.exponents(), ring);
  ModMatrix scalar(g, g);
  ModMatrix shift = subgroup_generator_mod(x, j, ring);
  const std::int64_t pa = a >= ring.exponent ? 0 : pow_p64(ring.p, a);
  for (std::size_t r = 0; r < g; ++r) {
    scalar(r, r) = pa;
    shift(r, r) = modular::reduce(shift(r, r) - 1, ring.modulus);
  }
  return modular::cokernel_log_order(hstack({&d, &scalar, &shift}), ring);
}

namespace {

// Rows 0..g-1: p^a x; rows g..2g-1: (tau_j - 1) x; every row read modulo
// the generator's relation.
ModMatrix fixed_torsion_system(const FiniteGammaModule& x, int a, int j, const PrimePower& ring) {
  const std::size_t g = x.generators();
  const ModMatrix shift = subgroup_generator_mod(x, j, ring);
  const std::int64_t pa = a >= ring.exponent ? 0 : pow_p64(ring.p, a);
  ModMatrix sys(2 * g, g);
  for (std::size_t r = 0; r < g; ++r) {
    sys(r, r) = pa;
    for (std::size_t c = 0; c < g; ++c)
      sys(g + r, c) = modular::reduce(shift(r, c) - (r == c ? 1 : 0), ring.modulus);
  }
  return sys;
}

}  // namespace

int fixed_torsion_log_order(const FiniteGammaModule& x, int a, int j) {
  require_canonical(x, "fixed_torsion_log_order");
  if (x.is_zero()) return 0;
  const PrimePower ring = x.ring();
  std::vector<int> doubled = x.exponents();
  doubled.insert(doubled.end(), x.exponents().begin(), x.exponents().end());
  return x.log_order() - image_log(fixed_torsion_system(x, a, j, ring), doubled, ring);
}

std::vector<std::vector<std::int64_t>> congruence_kernel(const ModMatrix& a, const std::vector<int>& row_exponents,
                                                         const PrimePower& ring) {
  return modular::kernel_generators(modular::scale_rows(a, row_exponents, ring), ring);
}

std::vector<std::vector<std::int64_t>> fixed_torsion_generators(const FiniteGammaModule& x, int a, int j) {
  require_canonical(x, "fixed_torsion_generators");
  if (x.is_zero()) return {};
  const PrimePower ring = x.ring();
  std::vector<int> doubled = x.exponents();
  doubled.insert(doubled.end(), x.exponents().begin(), x.exponents().end());
  auto gens = congruence_kernel(fixed_torsion_system(x, a, j, ring), doubled, ring);
  for (auto& v : gens) v = reduce_vector(std::move(v), x.exponents(), ring.p);
  return gens;
}

FiniteGammaModule standard_sum_module(const GroupParams& params, const std::vector<StandardLabel>& labels) {
  FiniteGammaModule out = FiniteGammaModule::zero(params);
  for (const auto& l : labels) out = module_direct_sum(out, standard_module(params, l.a, l.j));
  return out;
}

std::vector<std::vector<int>> quotient_grid(const FiniteGammaModule& x, int max_a) {
  std::vector<std::vector<int>> grid;
  for (int a = 1; a <= max_a; ++a) {
    std::vector<int> row;
    for (int j = 0; j <= x.params().n; ++j) row.push_back(quotient_log_order(x, a, j));
    grid.push_back(std::move(row));
  }
  return grid;
}

std::optional<std::vector<StandardLabel>> labels_from_grid(const GroupParams& params,
                                                           const std::vector<std::vector<int>>& grid) {
  const int n = params.n;
  const int max_a = static_cast<int>(grid.size());
  auto level = [&](int a, int j) -> std::int64_t {
    if (a <= 0) return 0;
    return grid[static_cast<std::size_t>(std::min(a, max_a) - 1)][static_cast<std::size_t>(j)];
  };
  std::vector<StandardLabel> labels;
  for (int a = 1; a <= max_a; ++a) {
    // g(j) = sum_{j'} m_{a,j'} p^{n - max(j, j')}: second difference in a.
    std::vector<std::int64_t> g(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
      const std::int64_t d_here = level(a, j) - level(a - 1, j);
      const std::int64_t d_next = a + 1 > max_a ? 0 : level(a + 1, j) - level(a, j);
      g[static_cast<std::size_t>(j)] = d_here - d_next;
    }
    std::int64_t previous = 0;
    for (int j = 0; j <= n; ++j) {
      std::int64_t partial;
      if (j == n) {
        partial = g[static_cast<std::size_t>(n)];
      } else {
        const std::int64_t step = params.index(j) - params.index(j + 1);
        const std::int64_t diff = g[static_cast<std::size_t>(j)] - g[static_cast<std::size_t>(j) + 1];
        if (diff % step != 0) return std::nullopt;
        partial = diff / step;
      }
      const std::int64_t m = partial - previous;
      if (m < 0) return std::nullopt;
      for (std::int64_t k = 0; k < m; ++k) labels.push_back(StandardLabel{a, j});
      previous = partial;
    }
  }
  std::sort(labels.begin(), labels.end());
  // The solved multiplicities must regenerate the whole grid.
  for (int a = 1; a <= max_a; ++a)
    for (int j = 0; j <= n; ++j) {
      std::int64_t predicted = 0;
      for (const auto& l : labels) predicted += std::min(a, l.a) * params.index(std::max(j, l.j));
      if (predicted != level(a, j)) return std::nullopt;
    }
  return labels;
}

Recognition recognize_standard_sum(const FiniteGammaModule& x, int attempts) {
  if (!x.is_canonical()) {
    const CanonicalForm c = canonicalize(x);
    Recognition inner = recognize_standard_sum(c.module, attempts);
    if (std::holds_alternative<NotStandard>(inner)) return inner;
    StandardSum s = std::get<StandardSum>(std::move(inner));
    s.to_module = GammaMap{s.standard, x, c.from_canonical * s.to_module.matrix};
    s.from_module = GammaMap{x, s.standard, reduce_coordinates(s.standard, s.from_module.matrix * c.to_canonical)};
    return s;
  }
  const GroupParams& params = x.params();
  if (x.is_zero()) {
    const FiniteGammaModule z = FiniteGammaModule::zero(params);
    return StandardSum{{}, z, zero_map(z, x), zero_map(x, z)};
  }
  const int max_a = x.max_exponent();
  const auto grid = quotient_grid(x, max_a);
  const auto labels = labels_from_grid(params, grid);
  if (!labels) return NotStandard{};
  // Standard modules are self-dual, so the fixed-torsion grid must agree.
  for (int a = 1; a <= max_a; ++a)
    for (int j = 0; j <= params.n; ++j)
      if (fixed_torsion_log_order(x, a, j) != grid[static_cast<std::size_t>(a) - 1][static_cast<std::size_t>(j)])
        return NotStandard{};

  const FiniteGammaModule standard = standard_sum_module(params, *labels);
  const PrimePower ring = x.ring();
  const std::size_t g = x.generators();
  const ModMatrix action = ModMatrix::reduce(x.action(), ring.modulus);
  std::vector<std::vector<std::vector<std::int64_t>>> choices;
  for (const auto& l : *labels) choices.push_back(fixed_torsion_generators(x, l.a, l.j));

  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<std::int64_t> coeff(0, ring.modulus - 1);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    ModMatrix psi(g, standard.generators());
    std::size_t col = 0;
    for (std::size_t k = 0; k < labels->size(); ++k) {
      std::vector<std::int64_t> v(g, 0);
      for (const auto& gen : choices[k]) {
        const std::int64_t c = coeff(rng);
        for (std::size_t r = 0; r < g; ++r) v[r] = (v[r] + c * gen[r]) % ring.modulus;
      }
      const std::int64_t orbit = params.index((*labels)[k].j);
      for (std::int64_t l = 0; l < orbit; ++l) {
        for (std::size_t r = 0; r < g; ++r) psi(r, col) = v[r];
        ++col;
        std::vector<std::int64_t> next(g, 0);
        for (std::size_t r = 0; r < g; ++r)
          for (std::size_t c = 0; c < g; ++c) next[r] = (next[r] + action(r, c) * v[c]) % ring.modulus;
        v = std::move(next);
      }
    }
    if (modular::rank_mod_p(psi, ring.p) != g) continue;
    GammaMap to = make_map(standard, x, psi.to_integer());
    // Invert column by column: solve psi y = e_i with row i read mod p^{e_i}.
    const ModMatrix scaled = modular::scale_rows(psi, x.exponents(), ring);
    IntMatrix inverse(standard.generators(), g);
    for (std::size_t i = 0; i < g; ++i) {
      std::vector<std::int64_t> rhs(g, 0);
      rhs[i] = pow_p64(ring.p, ring.exponent - x.exponents()[i]);
      const auto y = modular::solve(scaled, rhs, ring);
      if (!y) throw InvariantFailure("recognize_standard_sum: bijective map has no inverse");
      for (std::size_t r = 0; r < y->size(); ++r) inverse(r, i) = static_cast<long>((*y)[r]);
    }
    GammaMap from = make_map(x, standard, inverse);
    if (!compose(from, to).matrix.is_identity() && !maps_equal(compose(from, to), identity_map(standard)))
      throw InvariantFailure("recognize_standard_sum: inverse check failed");
    return StandardSum{*labels, standard, std::move(to), std::move(from)};
  }
  return NotStandard{};
}

std::optional<std::vector<StandardLabel>> standard_labels(const FiniteGammaModule& x) {
  Recognition r = recognize_standard_sum(x);
  if (std::holds_alternative<NotStandard>(r)) return std::nullopt;
  return std::get<StandardSum>(r).labels;
}

}  // namespace gammalat
