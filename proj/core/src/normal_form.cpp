#include "gammalat/normal_form.hpp"

#include <stdexcept>

namespace gammalat {

namespace {

// Tracks the working matrix together with whichever transforms were asked for.
class SmithWorkspace {
 public:
  SmithWorkspace(const IntMatrix& a, SmithRequest request) : m_(a), request_(request) {
    if (request.left) u_ = IntMatrix::identity(a.rows());
    if (request.left_inverse) u_inv_ = IntMatrix::identity(a.rows());
    if (request.right) v_ = IntMatrix::identity(a.cols());
  }

  IntMatrix& m() { return m_; }

  void row_add(std::size_t target, std::size_t source, const Integer& factor) {
    if (sgn(factor) == 0) return;
    m_.add_row_multiple(target, source, factor);
    if (request_.left) u_.add_row_multiple(target, source, factor);
    if (request_.left_inverse) u_inv_.add_column_multiple(source, target, -factor);
  }
  void col_add(std::size_t target, std::size_t source, const Integer& factor) {
    if (sgn(factor) == 0) return;
    m_.add_column_multiple(target, source, factor);
    if (request_.right) v_.add_column_multiple(target, source, factor);
  }
  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    m_.swap_rows(i, j);
    if (request_.left) u_.swap_rows(i, j);
    if (request_.left_inverse) u_inv_.swap_columns(i, j);
  }
  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    m_.swap_columns(i, j);
    if (request_.right) v_.swap_columns(i, j);
  }
  void row_negate(std::size_t i) {
    m_.negate_row(i);
    if (request_.left) u_.negate_row(i);
    if (request_.left_inverse) u_inv_.negate_column(i);
  }

  SmithDecomposition finish(std::size_t rank) {
    SmithDecomposition out;
    out.invariants.reserve(rank);
    for (std::size_t k = 0; k < rank; ++k) out.invariants.push_back(m_(k, k));
    out.left = std::move(u_);
    out.left_inverse = std::move(u_inv_);
    out.right = std::move(v_);
    return out;
  }

 private:
  IntMatrix m_;
  SmithRequest request_;
  IntMatrix u_;
  IntMatrix u_inv_;
  IntMatrix v_;
};

int cmp_abs_value(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

}  // namespace

Integer rounded_quotient(const Integer& a, const Integer& b) {
  Integer q;
  Integer r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  // |r| > |b|/2 -> step one further away from zero.
  Integer twice_r = 2 * abs(r);
  if (cmp_abs_value(twice_r, b) > 0) {
    if ((sgn(a) < 0) == (sgn(b) < 0))
      q += 1;
    else
      q -= 1;
  }
  return q;
}

SmithDecomposition smith_form(const IntMatrix& a, SmithRequest request) {
  SmithWorkspace ws(a, request);
  IntMatrix& m = ws.m();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t t = 0;
  while (t < rows && t < cols) {
    std::size_t pi = rows;
    std::size_t pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (sgn(m(i, j)) != 0 && (pi == rows || cmp_abs_value(m(i, j), m(pi, pj)) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    ws.row_swap(t, pi);
    ws.col_swap(t, pj);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(m(i, t)) == 0) continue;
        ws.row_add(i, t, -rounded_quotient(m(i, t), m(t, t)));
        if (sgn(m(i, t)) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(m(t, j)) == 0) continue;
        ws.col_add(j, t, -rounded_quotient(m(t, j), m(t, t)));
        if (sgn(m(t, j)) != 0) dirty = true;
      }
      if (dirty) {
        // A remainder survived: promote the smallest one to the pivot.
        std::size_t bi = t;
        std::size_t bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (sgn(m(i, t)) != 0 && cmp_abs_value(m(i, t), m(bi, bj)) < 0) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (sgn(m(t, j)) != 0 && cmp_abs_value(m(t, j), m(bi, bj)) < 0) {
            bi = t;
            bj = j;
          }
        ws.row_swap(t, bi);
        ws.col_swap(t, bj);
        continue;
      }
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(m(i, j).get_mpz_t(), m(t, t).get_mpz_t())) {
            ws.row_add(t, i, Integer(1));
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (sgn(m(t, t)) < 0) ws.row_negate(t);
    ++t;
  }
  return ws.finish(t);
}

IntVector invariant_factors(const IntMatrix& a) { return smith_form(a, SmithRequest{}).invariants; }

IntMatrix column_hnf(const IntMatrix& a) {
  IntMatrix m = a;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t k = 0;
  for (std::size_t i = 0; i < rows && k < cols; ++i) {
    for (std::size_t j = k + 1; j < cols; ++j) {
      if (sgn(m(i, j)) == 0) continue;
      if (sgn(m(i, k)) == 0) {
        m.swap_columns(k, j);
        continue;
      }
      Integer g;
      Integer s;
      Integer t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m(i, k).get_mpz_t(), m(i, j).get_mpz_t());
      const Integer ak = m(i, k) / g;
      const Integer aj = m(i, j) / g;
      for (std::size_t r = i; r < rows; ++r) {
        const Integer x = m(r, k);
        const Integer y = m(r, j);
        m(r, k) = s * x + t * y;
        m(r, j) = ak * y - aj * x;
      }
    }
    if (sgn(m(i, k)) == 0) continue;
    if (sgn(m(i, k)) < 0) m.negate_column(k);
    for (std::size_t l = 0; l < k; ++l) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m(i, l).get_mpz_t(), m(i, k).get_mpz_t());
      m.add_column_multiple(l, k, -q);
    }
    ++k;
  }
  return m.columns(0, k);
}

IntMatrix hnf_p_saturated(const IntMatrix& cols, const Integer& p) {
  SmithDecomposition snf = smith_form(cols, SmithRequest{false, true, false});
  IntMatrix basis(cols.rows(), snf.rank());
  for (std::size_t i = 0; i < snf.rank(); ++i) {
    const Integer scale = p_part(snf.invariants[i], p);
    for (std::size_t r = 0; r < cols.rows(); ++r) basis(r, i) = snf.left_inverse(r, i) * scale;
  }
  return column_hnf(basis);
}

IntMatrix integer_kernel(const IntMatrix& a) {
  SmithDecomposition snf = smith_form(a, SmithRequest{false, false, true});
  const std::size_t nullity = a.cols() - snf.rank();
  if (nullity == 0) return IntMatrix(a.cols(), 0);
  return column_hnf(snf.right.columns(snf.rank(), nullity));
}

namespace {

// Pivot rows of a column echelon basis (zeros above each pivot, pivot rows
// strictly increasing), or nullopt if the basis is not of that shape.
std::optional<std::vector<std::size_t>> echelon_pivots(const IntMatrix& b) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    std::size_t r = 0;
    while (r < b.rows() && sgn(b(r, c)) == 0) ++r;
    if (r == b.rows() || r < next) return std::nullopt;
    pivots.push_back(r);
    next = r + 1;
  }
  return pivots;
}

}  // namespace

LatticeSolver::LatticeSolver(const IntMatrix& basis) : ambient_(basis.rows()) {
  if (auto pivots = echelon_pivots(basis)) {
    basis_ = basis;
    pivots_ = std::move(*pivots);
    echelon_ = true;
    invariants_.assign(basis.cols(), Integer(1));
    return;
  }
  SmithDecomposition snf = smith_form(basis, SmithRequest{true, false, true});
  if (snf.rank() != basis.cols()) throw std::invalid_argument("LatticeSolver: basis is not of full column rank");
  invariants_ = std::move(snf.invariants);
  left_ = std::move(snf.left);
  right_ = std::move(snf.right);
}

std::optional<IntVector> LatticeSolver::solve(const IntVector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("LatticeSolver::solve: dimension mismatch");
  if (echelon_) {
    IntVector w = v;
    IntVector y(basis_.cols());
    for (std::size_t c = 0; c < basis_.cols(); ++c) {
      const std::size_t r = pivots_[c];
      // Everything above this pivot must already be cleared.
      for (std::size_t i = c == 0 ? 0 : pivots_[c - 1] + 1; i < r; ++i)
        if (sgn(w[i]) != 0) return std::nullopt;
      if (!mpz_divisible_p(w[r].get_mpz_t(), basis_(r, c).get_mpz_t())) return std::nullopt;
      mpz_divexact(y[c].get_mpz_t(), w[r].get_mpz_t(), basis_(r, c).get_mpz_t());
      if (sgn(y[c]) == 0) continue;
      for (std::size_t i = r; i < ambient_; ++i) mpz_submul(w[i].get_mpz_t(), y[c].get_mpz_t(), basis_(i, c).get_mpz_t());
    }
    for (const auto& x : w)
      if (sgn(x) != 0) return std::nullopt;
    return y;
  }
  const std::size_t r = invariants_.size();
  IntVector w = left_ * v;
  for (std::size_t i = r; i < ambient_; ++i)
    if (sgn(w[i]) != 0) return std::nullopt;
  IntVector z(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (!mpz_divisible_p(w[i].get_mpz_t(), invariants_[i].get_mpz_t())) return std::nullopt;
    mpz_divexact(z[i].get_mpz_t(), w[i].get_mpz_t(), invariants_[i].get_mpz_t());
  }
  if (r == 0) return z;
  return right_ * z;
}

IntMatrix LatticeSolver::solve_columns(const IntMatrix& rhs) const {
  IntMatrix out(rank(), rhs.cols());
  for (std::size_t j = 0; j < rhs.cols(); ++j) {
    auto y = solve(rhs.column(j));
    if (!y) throw std::domain_error("LatticeSolver: vector outside the lattice");
    out.set_column(j, *y);
  }
  return out;
}

int p_valuation(Integer x, const Integer& p) {
  if (sgn(x) == 0) throw std::domain_error("p_valuation of zero");
  int v = 0;
  while (mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) {
    x /= p;
    ++v;
  }
  return v;
}

Integer p_part(const Integer& x, const Integer& p) {
  Integer out = 1;
  const int v = p_valuation(x, p);
  for (int i = 0; i < v; ++i) out *= p;
  return out;
}

}  // namespace gammalat
