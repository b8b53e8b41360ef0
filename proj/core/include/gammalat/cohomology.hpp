#pragma once

#include "gammalat/diagram.hpp"
#include "gammalat/finite_module.hpp"
#include "gammalat/lattice.hpp"

namespace gammalat {

/// H^1(Gamma_j, M) computed as ker(N_j) / (tau_j - 1)M. On the p-adic route
/// the kernel basis and matrices are representatives modulo p^{2n+1}, which
/// determines the quotient exactly since it is killed by p^j.
struct TateModel {
  int level = 0;
  IntMatrix kernel_basis;     // lattice coordinates, one column per kernel generator
  IntMatrix relation_matrix;  // (tau_j - 1) e_k in kernel coordinates
  IntMatrix induced_action;   // sigma in kernel coordinates
  CanonicalForm h1;           // the quotient, with coordinate changes
};

/// Auto uses the p-adic route whenever p^{2n+1} < 2^31 and the exact
/// integral kernel otherwise; the other two force one route.
enum class TateMethod { Auto, Exact, PAdic };

TateModel tate_model(const GammaLattice& m, int j, TateMethod method = TateMethod::Auto);

FiniteGammaModule tate_h1(const GammaLattice& m, int j);

/// M^{Gamma_j} / N_j M.
FiniteGammaModule tate_h0(const GammaLattice& m, int j);

/// H^1(Gamma_i) -> H^1(Gamma_{i-1}), induced by the relative norm T_i.
GammaMap down_map(const GammaLattice& m, int i);

/// H^1(Gamma_{i-1}) -> H^1(Gamma_i), induced by ker N_{i-1} in ker N_i.
GammaMap up_map(const GammaLattice& m, int i);

YakovlevDiagram yakovlev_diagram(const GammaLattice& m, TateMethod method = TateMethod::Auto);

bool is_cohomologically_trivial(const GammaLattice& m);

/// Delta(M_{a,b}), memoized per (p, n, a, b); safe to call from several threads.
const YakovlevDiagram& library_diagram(const GroupParams& params, int a, int b);

}  // namespace gammalat
