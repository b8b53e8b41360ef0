#include "gammalat/lattice.hpp"

#include <random>
#include <string>

#include "gammalat/normal_form.hpp"

namespace gammalat {

GammaLattice::GammaLattice(GroupParams params, IntMatrix action) : params_(params), action_(std::move(action)) {
  if (action_.rows() != action_.cols()) throw InvalidInput("lattice action must be square");
  if (!action_.pow(static_cast<std::uint64_t>(params_.order())).is_identity())
    throw InvalidInput("lattice action does not satisfy sigma^{p^n} = 1");
}

IntMatrix GammaLattice::subgroup_generator(int j) const {
  params_.check_subgroup_index(j);
  return action_.pow(static_cast<std::uint64_t>(params_.index(j)));
}

GammaLattice permutation_lattice(const GroupParams& params, int i) {
  return GammaLattice(params, coset_shift_matrix(params, i));
}

IntMatrix mab_basis(const GroupParams& params, int a, int b) {
  if (a < 1 || a > params.n) throw InvalidInput("a must lie in [1, n], got " + std::to_string(a));
  if (b < 0 || a + b > params.n) throw InvalidInput("b must satisfy 0 <= b and a + b <= n");
  const int c = params.n - a - b;
  const auto order = static_cast<std::size_t>(params.order());
  const GroupRingElt gen =
      GroupRingElt::sigma_power(params, GroupParams::ipow(params.p, c)) - GroupRingElt::one(params);
  std::vector<IntVector> columns;
  for (std::size_t k = 0; k < order; ++k) columns.push_back(gen.shifted(static_cast<std::int64_t>(k)).coeffs());
  if (b > 0) {
    const Integer pa = GroupParams::ipow(params.p, a);
    for (std::size_t k = 0; k < order; ++k) {
      IntVector e(order);
      e[k] = pa;
      columns.push_back(std::move(e));
    }
  }
  return hnf_p_saturated(IntMatrix::from_columns(columns, order), Integer(params.p));
}

IntMatrix restricted_action(const IntMatrix& ambient_action, const IntMatrix& basis) {
  if (basis.cols() == 0) return IntMatrix(0, 0);
  LatticeSolver solver(basis);
  try {
    return solver.solve_columns(ambient_action * basis);
  } catch (const std::domain_error&) {
    throw InvariantFailure("sublattice is not stable under sigma");
  }
}

GammaLattice mab_lattice(const GroupParams& params, int a, int b) {
  const IntMatrix basis = mab_basis(params, a, b);
  return GammaLattice(params, restricted_action(coset_shift_matrix(params, 0), basis));
}

GammaLattice norm_quotient_lattice(const GroupParams& params) {
  const auto r = static_cast<std::size_t>(params.order() - 1);
  IntMatrix a(r, r);
  for (std::size_t k = 0; k + 1 < r; ++k) a(k + 1, k) = 1;
  // sigma * sigma^{p^n - 2} = sigma^{p^n - 1} = -(sum of the others).
  for (std::size_t i = 0; i < r; ++i) a(i, r - 1) = -1;
  return GammaLattice(params, a);
}

FixedSublattice fixed_sublattice(const GammaLattice& m, int j) {
  const IntMatrix tau = m.subgroup_generator(j);
  const IntMatrix basis = integer_kernel(tau - IntMatrix::identity(m.rank()));
  return FixedSublattice{basis, GammaLattice(m.params(), restricted_action(m.action(), basis))};
}

std::size_t fixed_rank(const GammaLattice& m, int j) {
  const IntMatrix tau = m.subgroup_generator(j);
  return m.rank() - invariant_factors(tau - IntMatrix::identity(m.rank())).size();
}

GammaLattice direct_sum(const GammaLattice& m, const GammaLattice& n) {
  if (!(m.params() == n.params())) throw InvalidInput("direct_sum: lattices over different groups");
  return GammaLattice(m.params(), block_diagonal(m.action(), n.action()));
}

GammaLattice random_unimodular_change(const GammaLattice& m, std::uint64_t seed) {
  const std::size_t r = m.rank();
  if (r < 2) return m;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, r - 1);
  std::uniform_int_distribution<long> factor(-2, 2);
  IntMatrix u = IntMatrix::identity(r);
  IntMatrix u_inv = IntMatrix::identity(r);
  // Product of elementary transvections; the inverse is accumulated alongside.
  for (std::size_t step = 0; step < 3 * r; ++step) {
    const std::size_t s = pick(rng);
    std::size_t t = pick(rng);
    if (t == s) t = (t + 1) % r;
    const Integer f = factor(rng);
    u.add_column_multiple(t, s, f);
    u_inv.add_row_multiple(s, t, -f);
  }
  return GammaLattice(m.params(), u_inv * m.action() * u);
}

}  // namespace gammalat
