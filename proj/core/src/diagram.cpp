#include "gammalat/diagram.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "gammalat/cohomology.hpp"

namespace gammalat {

namespace {

using modular::ModMatrix;
using modular::PrimePower;

std::int64_t pow_p64(std::int64_t p, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

std::size_t level_count(const YakovlevDiagram& d) { return static_cast<std::size_t>(d.params.n); }

int diagram_max_exponent(const YakovlevDiagram& d) {
  int e = 0;
  for (const auto& l : d.levels) e = std::max(e, l.max_exponent());
  return e;
}

ModMatrix mod_mul(const ModMatrix& a, const ModMatrix& b, std::int64_t modulus) {
  ModMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::int64_t x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = (c(i, j) + x * b(k, j)) % modulus;
    }
  return c;
}

// Dense congruence system: each row is read modulo p^{exponent}.
class CongruenceSystem {
 public:
  explicit CongruenceSystem(std::size_t unknowns) : unknowns_(unknowns) {}

  std::vector<std::int64_t>& add_row(int exponent) {
    rows_.emplace_back(unknowns_, 0);
    exponents_.push_back(exponent);
    return rows_.back();
  }

  std::vector<std::vector<std::int64_t>> solution_generators(const PrimePower& ring) const {
    if (unknowns_ == 0) return {};
    if (rows_.empty()) {
      std::vector<std::vector<std::int64_t>> basis;
      for (std::size_t k = 0; k < unknowns_; ++k) {
        basis.emplace_back(unknowns_, 0);
        basis.back()[k] = 1;
      }
      return basis;
    }
    ModMatrix m(rows_.size(), unknowns_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::size_t j = 0; j < unknowns_; ++j) m(i, j) = modular::reduce(rows_[i][j], ring.modulus);
    auto gens = congruence_kernel(m, exponents_, ring);
    std::erase_if(gens, [](const std::vector<std::int64_t>& g) {
      return std::all_of(g.begin(), g.end(), [](std::int64_t v) { return v == 0; });
    });
    return gens;
  }

 private:
  std::size_t unknowns_;
  std::vector<std::vector<std::int64_t>> rows_;
  std::vector<int> exponents_;
};

// Linear parametrization of Hom(source, target) in the diagram category.
//
// When every source level is a recognized standard sum, a level map is fixed
// by the images of the standard generators, which keeps the unknown count
// small. Otherwise every matrix entry is an unknown.
class HomSpace {
 public:
  HomSpace(const YakovlevDiagram& source, const YakovlevDiagram& target) : source_(source), target_(target) {
    ring_ = PrimePower::make(source.params.p, std::max({diagram_max_exponent(source), diagram_max_exponent(target), 1}));
    for (const auto& level : source.levels) {
      Recognition r = recognize_standard_sum(level);
      if (std::holds_alternative<NotStandard>(r)) {
        sums_.clear();
        break;
      }
      sums_.push_back(std::get<StandardSum>(std::move(r)));
    }
    standard_ = sums_.size() == level_count(source);
    for (const auto& level : target.levels) {
      std::vector<ModMatrix> powers;
      ModMatrix a = ModMatrix::reduce(level.action(), ring_.modulus);
      ModMatrix cur(level.generators(), level.generators());
      for (std::size_t i = 0; i < level.generators(); ++i) cur(i, i) = 1;
      for (std::int64_t l = 0; l < source.params.order(); ++l) {
        powers.push_back(cur);
        cur = mod_mul(a, cur, ring_.modulus);
      }
      target_powers_.push_back(std::move(powers));
    }
    std::size_t offset = 0;
    for (std::size_t i = 0; i < level_count(source); ++i) {
      offsets_.push_back(offset);
      const std::size_t gt = target.levels[i].generators();
      offset += gt * (standard_ ? sums_[i].labels.size() : source.levels[i].generators());
    }
    unknowns_ = offset;
    CongruenceSystem sys(unknowns_);
    if (standard_)
      build_standard(sys);
    else
      build_generic(sys);
    generators_ = sys.solution_generators(ring_);
  }

  bool trivial() const { return generators_.empty(); }

  DiagramMorphism sample(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::int64_t> coeff(0, ring_.modulus - 1);
    std::vector<std::int64_t> u(unknowns_, 0);
    for (const auto& g : generators_) {
      const std::int64_t c = coeff(rng);
      if (c == 0) continue;
      for (std::size_t k = 0; k < unknowns_; ++k) u[k] = (u[k] + c * g[k]) % ring_.modulus;
    }
    return assemble(u);
  }

 private:
  std::size_t gt(std::size_t i) const { return target_.levels[i].generators(); }
  std::vector<int> texps(std::size_t i) const { return target_.levels[i].exponents(); }

  // Standard layout: x_{i,k} occupies offset_i + k * gt(i) + r.
  std::size_t var(std::size_t i, std::size_t k, std::size_t r) const { return offsets_[i] + k * gt(i) + r; }

  // Block start of summand k in the standard module of level i.
  std::vector<std::size_t> block_starts(std::size_t i) const {
    std::vector<std::size_t> starts;
    std::size_t s = 0;
    for (const auto& l : sums_[i].labels) {
      starts.push_back(s);
      s += static_cast<std::size_t>(source_.params.index(l.j));
    }
    return starts;
  }

  // Adds, for a vector c in standard coordinates of level i, the image
  // Theta_i(c) with sign +1 into rows indexed by target generator r.
  void add_theta(std::vector<std::vector<std::int64_t>*>& rows, std::size_t i, const std::vector<std::int64_t>& c) const {
    const auto starts = block_starts(i);
    for (std::size_t m = 0; m < sums_[i].labels.size(); ++m) {
      const auto len = static_cast<std::size_t>(source_.params.index(sums_[i].labels[m].j));
      for (std::size_t l = 0; l < len; ++l) {
        const std::int64_t coef = c[starts[m] + l];
        if (coef == 0) continue;
        const ModMatrix& pw = target_powers_[i][l];
        for (std::size_t r = 0; r < gt(i); ++r)
          for (std::size_t s = 0; s < gt(i); ++s)
            if (pw(r, s) != 0) (*rows[r])[var(i, m, s)] = ((*rows[r])[var(i, m, s)] + coef * pw(r, s)) % ring_.modulus;
      }
    }
  }

  void build_standard(CongruenceSystem& sys) const {
    const std::size_t n = level_count(source_);
    for (std::size_t i = 0; i < n; ++i) {
      const auto e = texps(i);
      for (std::size_t k = 0; k < sums_[i].labels.size(); ++k) {
        const auto [a, j] = sums_[i].labels[k];
        for (std::size_t r = 0; r < gt(i); ++r)
          if (a < e[r]) sys.add_row(e[r])[var(i, k, r)] = pow_p64(ring_.p, a);
        const ModMatrix tau = subgroup_generator_mod(target_.levels[i], j, ring_);
        for (std::size_t r = 0; r < gt(i); ++r) {
          auto& row = sys.add_row(e[r]);
          for (std::size_t s = 0; s < gt(i); ++s) row[var(i, k, s)] = modular::reduce(tau(r, s) - (r == s), ring_.modulus);
        }
      }
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
      add_commutation(sys, i, i + 1, source_.downs[i], target_.downs[i]);
      add_commutation(sys, i + 1, i, source_.ups[i], target_.ups[i]);
    }
  }

  // Condition Theta_to(from_to * f1 * to_from (e_k)) = f2(x_{from,k}) for a
  // source map f1 : level `from` -> level `to` and its target counterpart f2.
  void add_commutation(CongruenceSystem& sys, std::size_t to, std::size_t from, const GammaMap& f1,
                       const GammaMap& f2) const {
    const IntMatrix c_int = sums_[to].from_module.matrix * f1.matrix * sums_[from].to_module.matrix;
    const ModMatrix c = ModMatrix::reduce(c_int, ring_.modulus);
    const ModMatrix f2m = ModMatrix::reduce(f2.matrix, ring_.modulus);
    const auto starts = block_starts(from);
    const auto e = texps(to);
    for (std::size_t k = 0; k < sums_[from].labels.size(); ++k) {
      std::vector<std::vector<std::int64_t>*> rows;
      for (std::size_t r = 0; r < gt(to); ++r) rows.push_back(&sys.add_row(e[r]));
      std::vector<std::int64_t> col(c.rows());
      for (std::size_t q = 0; q < c.rows(); ++q) col[q] = c(q, starts[k]);
      add_theta(rows, to, col);
      for (std::size_t r = 0; r < gt(to); ++r)
        for (std::size_t s = 0; s < gt(from); ++s)
          if (f2m(r, s) != 0) {
            auto& slot = (*rows[r])[var(from, k, s)];
            slot = modular::reduce(slot - f2m(r, s), ring_.modulus);
          }
    }
  }

  // Generic layout: phi_i(r, c) occupies offset_i + r * gs(i) + c.
  std::size_t gs(std::size_t i) const { return source_.levels[i].generators(); }
  std::size_t gvar(std::size_t i, std::size_t r, std::size_t c) const { return offsets_[i] + r * gs(i) + c; }

  void build_generic(CongruenceSystem& sys) const {
    const std::size_t n = level_count(source_);
    for (std::size_t i = 0; i < n; ++i) {
      const auto es = source_.levels[i].exponents();
      const auto et = texps(i);
      const ModMatrix as = ModMatrix::reduce(source_.levels[i].action(), ring_.modulus);
      const ModMatrix at = ModMatrix::reduce(target_.levels[i].action(), ring_.modulus);
      for (std::size_t r = 0; r < gt(i); ++r)
        for (std::size_t c = 0; c < gs(i); ++c) {
          if (es[c] < et[r]) sys.add_row(et[r])[gvar(i, r, c)] = pow_p64(ring_.p, es[c]);
          auto& row = sys.add_row(et[r]);
          for (std::size_t s = 0; s < gs(i); ++s) row[gvar(i, r, s)] = (row[gvar(i, r, s)] + as(s, c)) % ring_.modulus;
          for (std::size_t s = 0; s < gt(i); ++s)
            row[gvar(i, s, c)] = modular::reduce(row[gvar(i, s, c)] - at(r, s), ring_.modulus);
        }
    }
    auto commute = [&](std::size_t to, std::size_t from, const GammaMap& f1, const GammaMap& f2) {
      // phi_to * f1 - f2 * phi_from = 0, entries (r, c) with c a source generator of `from`.
      const ModMatrix a = ModMatrix::reduce(f1.matrix, ring_.modulus);
      const ModMatrix b = ModMatrix::reduce(f2.matrix, ring_.modulus);
      const auto et = texps(to);
      for (std::size_t r = 0; r < gt(to); ++r)
        for (std::size_t c = 0; c < gs(from); ++c) {
          auto& row = sys.add_row(et[r]);
          for (std::size_t s = 0; s < gs(to); ++s) row[gvar(to, r, s)] = (row[gvar(to, r, s)] + a(s, c)) % ring_.modulus;
          for (std::size_t s = 0; s < gt(from); ++s)
            row[gvar(from, s, c)] = modular::reduce(row[gvar(from, s, c)] - b(r, s), ring_.modulus);
        }
    };
    for (std::size_t i = 0; i + 1 < n; ++i) {
      commute(i, i + 1, source_.downs[i], target_.downs[i]);
      commute(i + 1, i, source_.ups[i], target_.ups[i]);
    }
  }

  DiagramMorphism assemble(const std::vector<std::int64_t>& u) const {
    DiagramMorphism f;
    for (std::size_t i = 0; i < level_count(source_); ++i) {
      const FiniteGammaModule& src = source_.levels[i];
      const FiniteGammaModule& tgt = target_.levels[i];
      IntMatrix phi(gt(i), gs(i));
      if (standard_) {
        const auto starts = block_starts(i);
        IntMatrix theta(gt(i), sums_[i].standard.generators());
        for (std::size_t k = 0; k < sums_[i].labels.size(); ++k) {
          const auto len = static_cast<std::size_t>(source_.params.index(sums_[i].labels[k].j));
          for (std::size_t l = 0; l < len; ++l)
            for (std::size_t r = 0; r < gt(i); ++r) {
              std::int64_t v = 0;
              for (std::size_t s = 0; s < gt(i); ++s)
                v = (v + target_powers_[i][l](r, s) * u[var(i, k, s)]) % ring_.modulus;
              theta(r, starts[k] + l) = static_cast<long>(v);
            }
        }
        phi = theta * sums_[i].from_module.matrix;
      } else {
        for (std::size_t r = 0; r < gt(i); ++r)
          for (std::size_t c = 0; c < gs(i); ++c) phi(r, c) = static_cast<long>(u[gvar(i, r, c)]);
      }
      f.components.push_back(GammaMap{src, tgt, reduce_coordinates(tgt, phi)});
    }
    return f;
  }

  const YakovlevDiagram& source_;
  const YakovlevDiagram& target_;
  PrimePower ring_;
  bool standard_ = false;
  std::vector<StandardSum> sums_;
  std::vector<std::vector<ModMatrix>> target_powers_;
  std::vector<std::size_t> offsets_;
  std::size_t unknowns_ = 0;
  std::vector<std::vector<std::int64_t>> generators_;
};

bool all_bijective(const DiagramMorphism& f) {
  return std::all_of(f.components.begin(), f.components.end(), [](const GammaMap& c) { return is_bijective(c); });
}

DiagramMorphism compose_morphisms(const DiagramMorphism& g, const DiagramMorphism& f) {
  DiagramMorphism out;
  for (std::size_t i = 0; i < f.components.size(); ++i) out.components.push_back(compose(g.components[i], f.components[i]));
  return out;
}

// Cokernel of a levelwise injective morphism, with the maps carried along.
YakovlevDiagram cokernel_diagram(const YakovlevDiagram& d, const DiagramMorphism& iota) {
  YakovlevDiagram out;
  out.params = d.params;
  std::vector<CanonicalForm> forms;
  for (std::size_t i = 0; i < d.levels.size(); ++i) {
    const FiniteGammaModule& y = d.levels[i];
    const IntMatrix rel = hconcat(y.relations(), iota.components[i].matrix);
    const FiniteGammaModule quotient(d.params, rel, y.action());
    forms.push_back(canonicalize(quotient));
    out.levels.push_back(forms.back().module);
  }
  for (std::size_t i = 0; i + 1 < d.levels.size(); ++i) {
    const auto carry = [&](const GammaMap& f, std::size_t from, std::size_t to) {
      if (forms[from].module.is_zero() || forms[to].module.is_zero())
        return zero_map(forms[from].module, forms[to].module);
      return make_map(forms[from].module, forms[to].module,
                      forms[to].to_canonical * f.matrix * forms[from].from_canonical);
    };
    out.ups.push_back(carry(d.ups[i], i, i + 1));
    out.downs.push_back(carry(d.downs[i], i + 1, i));
  }
  return out;
}

int library_total_order(const GroupParams& params, const MabLabel& l) {
  int total = 0;
  for (int i = 1; i <= params.n; ++i)
    total += std::min(i, l.a) * static_cast<int>(params.index(std::max(i, l.a + l.b)));
  return total;
}

bool labels_contained(std::vector<StandardLabel> small, std::vector<StandardLabel> big) {
  std::sort(small.begin(), small.end());
  std::sort(big.begin(), big.end());
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

YakovlevDiagram zero_diagram(const GroupParams& params) {
  YakovlevDiagram d;
  d.params = params;
  const FiniteGammaModule z = FiniteGammaModule::zero(params);
  for (int i = 0; i < params.n; ++i) d.levels.push_back(z);
  for (int i = 0; i + 1 < params.n; ++i) {
    d.ups.push_back(zero_map(z, z));
    d.downs.push_back(zero_map(z, z));
  }
  return d;
}

bool is_zero_diagram(const YakovlevDiagram& d) {
  return std::all_of(d.levels.begin(), d.levels.end(), [](const FiniteGammaModule& l) { return l.is_zero(); });
}

std::optional<std::string> diagram_defect(const YakovlevDiagram& d) {
  const int n = d.params.n;
  if (d.levels.size() != static_cast<std::size_t>(n)) return "expected n levels";
  if (d.ups.size() + 1 != d.levels.size() || d.downs.size() + 1 != d.levels.size()) return "expected n-1 maps each way";
  for (int i = 0; i < n; ++i) {
    const FiniteGammaModule& x = d.levels[static_cast<std::size_t>(i)];
    std::ostringstream where;
    where << "level " << i + 1;
    if (!x.is_canonical()) return where.str() + " is not canonical";
    if (!(x.params() == d.params)) return where.str() + " has different group parameters";
    if (x.max_exponent() > i + 1) return where.str() + " is not killed by p^" + std::to_string(i + 1);
    if (x.is_zero()) continue;
    const PrimePower ring = x.ring();
    const ModMatrix tau = subgroup_generator_mod(x, i + 1, ring);
    IntMatrix diff = tau.to_integer() - IntMatrix::identity(x.generators());
    if (!reduce_coordinates(x, diff).is_zero()) return where.str() + ": Gamma_i does not act trivially";
  }
  for (std::size_t i = 0; i + 1 < d.levels.size(); ++i) {
    const GammaMap& up = d.ups[i];
    const GammaMap& down = d.downs[i];
    const std::string where = " between levels " + std::to_string(i + 1) + " and " + std::to_string(i + 2);
    if (up.matrix.rows() != d.levels[i + 1].generators() || up.matrix.cols() != d.levels[i].generators() ||
        down.matrix.rows() != d.levels[i].generators() || down.matrix.cols() != d.levels[i + 1].generators())
      return "map shapes disagree" + where;
    const GammaMap u{d.levels[i], d.levels[i + 1], up.matrix};
    const GammaMap w{d.levels[i + 1], d.levels[i], down.matrix};
    if (!is_well_defined(u) || !is_equivariant(u)) return "up map is not a module map" + where;
    if (!is_well_defined(w) || !is_equivariant(w)) return "down map is not a module map" + where;
    const GroupRingElt rel = relative_norm_element(d.params, static_cast<int>(i) + 2);
    if (!maps_equal(compose(w, u), group_ring_action(d.levels[i], rel)))
      return "down after up is not the relative norm" + where;
    if (!maps_equal(compose(u, w), scalar_map(d.levels[i + 1], d.params.p)))
      return "up after down is not multiplication by p" + where;
  }
  return std::nullopt;
}

bool validate_diagram(const YakovlevDiagram& d) { return !diagram_defect(d).has_value(); }

YakovlevDiagram diagram_direct_sum(const YakovlevDiagram& d1, const YakovlevDiagram& d2) {
  if (!(d1.params == d2.params)) throw InvalidInput("diagram_direct_sum: different group parameters");
  YakovlevDiagram d;
  d.params = d1.params;
  for (std::size_t i = 0; i < d1.levels.size(); ++i) d.levels.push_back(module_direct_sum(d1.levels[i], d2.levels[i]));
  for (std::size_t i = 0; i < d1.ups.size(); ++i) {
    d.ups.push_back(map_direct_sum(d1.ups[i], d2.ups[i]));
    d.downs.push_back(map_direct_sum(d1.downs[i], d2.downs[i]));
  }
  return d;
}

YakovlevDiagram lemma_diagram(const GroupParams& params, int a, int b) {
  if (a < 1 || a > params.n || b < 0 || a + b > params.n) throw InvalidInput("lemma_diagram: invalid (a, b)");
  YakovlevDiagram d;
  d.params = params;
  for (int i = 1; i <= params.n; ++i) d.levels.push_back(standard_module(params, std::min(i, a), std::max(i, a + b)));
  for (int l = 2; l <= params.n; ++l) {
    const FiniteGammaModule& lower = d.levels[static_cast<std::size_t>(l) - 2];
    const FiniteGammaModule& upper = d.levels[static_cast<std::size_t>(l) - 1];
    if (l <= a + b) {
      // Same coset module on both sides: res is the identity on coordinates
      // (a projection when l <= a), cor is x p.
      const std::size_t g = lower.generators();
      d.downs.push_back(make_map(upper, lower, IntMatrix::identity(g)));
      d.ups.push_back(make_map(lower, upper, IntMatrix::identity(g) * Integer(params.p)));
    } else {
      const auto small = static_cast<std::size_t>(params.index(l));
      const std::size_t big = small * static_cast<std::size_t>(params.p);
      IntMatrix t(big, small);
      IntMatrix proj(small, big);
      for (std::size_t k = 0; k < big; ++k) {
        t(k, k % small) = 1;
        proj(k % small, k) = 1;
      }
      d.downs.push_back(make_map(upper, lower, t));
      d.ups.push_back(make_map(lower, upper, proj));
    }
  }
  return d;
}

std::string to_string(Decision d) {
  switch (d) {
    case Decision::Yes:
      return "yes";
    case Decision::No:
      return "no";
    case Decision::Unknown:
      return "unknown";
  }
  return "unknown";
}

DiagramInvariants diagram_invariants(const YakovlevDiagram& d) {
  DiagramInvariants inv;
  const int n = d.params.n;
  for (const auto& level : d.levels) {
    std::vector<int> flat{level.log_order()};
    for (const auto& row : quotient_grid(level, n)) flat.insert(flat.end(), row.begin(), row.end());
    for (int a = 1; a <= n; ++a)
      for (int j = 0; j <= n; ++j) flat.push_back(fixed_torsion_log_order(level, a, j));
    inv.level_grids.push_back(std::move(flat));
  }
  // Every composite of consecutive ups, and of consecutive downs.
  for (std::size_t i = 0; i + 1 < d.levels.size(); ++i) {
    GammaMap up = d.ups[i];
    GammaMap down = d.downs[i];
    for (std::size_t k = i;; ++k) {
      inv.map_types.push_back(cokernel_type(up));
      inv.map_types.back().push_back(-1 - image_log_order(up));
      inv.map_types.push_back(cokernel_type(down));
      inv.map_types.back().push_back(-1 - image_log_order(down));
      if (k + 1 >= d.ups.size()) break;
      up = compose(d.ups[k + 1], up);
      down = compose(down, d.downs[k + 1]);
    }
  }
  return inv;
}

bool is_diagram_morphism(const YakovlevDiagram& source, const YakovlevDiagram& target, const DiagramMorphism& f) {
  if (f.components.size() != source.levels.size()) return false;
  for (const auto& c : f.components)
    if (!is_well_defined(c) || !is_equivariant(c)) return false;
  for (std::size_t i = 0; i + 1 < source.levels.size(); ++i) {
    if (!maps_equal(compose(f.components[i + 1], source.ups[i]), compose(target.ups[i], f.components[i]))) return false;
    if (!maps_equal(compose(f.components[i], source.downs[i]), compose(target.downs[i], f.components[i + 1])))
      return false;
  }
  return true;
}

Decision diagram_isomorphic(const YakovlevDiagram& d1, const YakovlevDiagram& d2, IsomorphismOptions options) {
  if (!(d1.params == d2.params)) return Decision::No;
  if (d1.levels.size() != d2.levels.size()) return Decision::No;
  for (std::size_t i = 0; i < d1.levels.size(); ++i)
    if (d1.levels[i].log_order() != d2.levels[i].log_order()) return Decision::No;
  if (!(diagram_invariants(d1) == diagram_invariants(d2))) return Decision::No;
  if (is_zero_diagram(d1)) return Decision::Yes;
  const HomSpace hom(d1, d2);
  if (hom.trivial()) return Decision::No;  // only the zero map, and the levels are nonzero
  std::mt19937_64 rng(options.seed);
  for (int s = 0; s < options.samples; ++s) {
    DiagramMorphism f = hom.sample(rng);
    if (!all_bijective(f)) continue;
    if (!is_diagram_morphism(d1, d2, f)) throw InvariantFailure("diagram_isomorphic: sampled map is not a morphism");
    return Decision::Yes;
  }
  return Decision::Unknown;
}

bool indecomposability_certificate(const YakovlevDiagram& d) {
  std::vector<std::size_t> nonzero;
  for (std::size_t i = 0; i < d.levels.size(); ++i)
    if (!d.levels[i].is_zero()) nonzero.push_back(i);
  if (nonzero.empty()) return true;
  if (nonzero.back() - nonzero.front() + 1 != nonzero.size()) return false;
  for (std::size_t i : nonzero)
    if (quotient_log_order(d.levels[i], 1, d.params.n) > 1) return false;
  for (std::size_t k = 0; k + 1 < nonzero.size(); ++k) {
    const std::size_t i = nonzero[k];
    if (is_zero_map(d.ups[i]) && is_zero_map(d.downs[i])) return false;
  }
  return true;
}

std::vector<MabLabel> library_labels(const GroupParams& params) {
  std::vector<MabLabel> labels;
  for (int a = 1; a <= params.n; ++a)
    for (int b = 0; a + b <= params.n; ++b) labels.push_back(MabLabel{a, b});
  std::stable_sort(labels.begin(), labels.end(), [&](const MabLabel& x, const MabLabel& y) {
    const int ox = library_total_order(params, x);
    const int oy = library_total_order(params, y);
    if (ox != oy) return ox > oy;
    return x < y;
  });
  return labels;
}

SubtractionResult subtract_library(const YakovlevDiagram& d, IsomorphismOptions options) {
  SubtractionResult out;
  YakovlevDiagram current = d;
  bool inconclusive = false;
  std::mt19937_64 rng(options.seed);
  for (const MabLabel& label : library_labels(d.params)) {
    const YakovlevDiagram& piece = library_diagram(d.params, label.a, label.b);
    for (;;) {
      if (is_zero_diagram(current)) break;
      bool fits = true;
      for (std::size_t i = 0; i < current.levels.size() && fits; ++i) {
        if (piece.levels[i].log_order() > current.levels[i].log_order()) {
          fits = false;
          break;
        }
        const auto have = standard_labels(current.levels[i]);
        const auto need = standard_labels(piece.levels[i]);
        if (have && need && !labels_contained(*need, *have)) fits = false;
      }
      if (!fits) break;
      const HomSpace into(piece, current);
      const HomSpace back(current, piece);
      if (into.trivial() || back.trivial()) break;
      bool split = false;
      for (int s = 0; s < options.samples && !split; ++s) {
        DiagramMorphism iota = into.sample(rng);
        DiagramMorphism pi = back.sample(rng);
        if (!all_bijective(compose_morphisms(pi, iota))) continue;
        current = cokernel_diagram(current, iota);
        out.extracted.push_back(label);
        split = true;
      }
      if (!split) {
        inconclusive = true;
        out.diagnostics.push_back("no split copy of M_{" + std::to_string(label.a) + "," + std::to_string(label.b) +
                                  "} found within the sample budget");
        break;
      }
    }
  }
  if (is_zero_diagram(current))
    out.remainder = zero_diagram(d.params);
  else if (!inconclusive)
    out.remainder = std::move(current);
  return out;
}

}  // namespace gammalat
