#include "lgt/zlattice.hpp"

#include <algorithm>
#include <functional>

namespace lgt {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = BigInt(1);
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntVec IntMatrix::row(std::size_t i) const {
  IntVec r(cols);
  for (std::size_t j = 0; j < cols; ++j) r[j] = at(i, j);
  return r;
}

IntVec IntMatrix::mul_vec(const IntVec& v) const {
  if (v.size() != cols) throw dimension_mismatch("matrix/vector size mismatch");
  IntVec out(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    BigInt acc;
    for (std::size_t j = 0; j < cols; ++j) acc += at(i, j) * v[j];
    out[i] = std::move(acc);
  }
  return out;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
  if (rows != o.rows || cols != o.cols) return false;
  for (std::size_t i = 0; i < data.size(); ++i)
    if (data[i] != o.data[i]) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw dimension_mismatch("matrix product size mismatch");
  IntMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows != m.cols) throw dimension_mismatch("determinant of non-square matrix");
  const std::size_t n = m.rows;
  if (n == 0) return BigInt(1);
  // Expansion along rows, minors memoized by used-column mask; the row index
  // is always the popcount of the mask.
  std::vector<BigInt> cache(std::size_t{1} << n);
  std::vector<bool> have(std::size_t{1} << n, false);
  std::function<BigInt(std::size_t, std::size_t)> minor =
      [&](std::size_t row, std::size_t mask) -> BigInt {
    if (row == n) return BigInt(1);
    if (have[mask]) return cache[mask];
    BigInt acc;
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (std::size_t{1} << j)) continue;
      if (!m.at(row, j).is_zero()) {
        BigInt sub = minor(row + 1, mask | (std::size_t{1} << j));
        BigInt term = m.at(row, j) * sub;
        if (sign < 0) term = -term;
        acc += term;
      }
      sign = -sign;
    }
    have[mask] = true;
    cache[mask] = acc;
    return acc;
  };
  return minor(0, 0);
}

bool is_unimodular(const IntMatrix& m) {
  if (m.rows != m.cols) return false;
  BigInt d = determinant(m);
  return d == BigInt(1) || d == BigInt(-1);
}

namespace {

struct SnfWork {
  IntMatrix a, u, v;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
    for (std::size_t c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows; ++r) std::swap(a.at(r, i), a.at(r, j));
    for (std::size_t r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  // row i -= q * row s
  void row_sub(std::size_t i, std::size_t s, const BigInt& q) {
    if (q.is_zero()) return;
    for (std::size_t c = 0; c < a.cols; ++c) a.at(i, c) -= q * a.at(s, c);
    for (std::size_t c = 0; c < u.cols; ++c) u.at(i, c) -= q * u.at(s, c);
  }
  void col_sub(std::size_t j, std::size_t s, const BigInt& q) {
    if (q.is_zero()) return;
    for (std::size_t r = 0; r < a.rows; ++r) a.at(r, j) -= q * a.at(r, s);
    for (std::size_t r = 0; r < v.rows; ++r) v.at(r, j) -= q * v.at(r, s);
  }
  void row_add(std::size_t i, std::size_t s) {
    for (std::size_t c = 0; c < a.cols; ++c) a.at(i, c) += a.at(s, c);
    for (std::size_t c = 0; c < u.cols; ++c) u.at(i, c) += u.at(s, c);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols; ++c) a.at(i, c) = -a.at(i, c);
    for (std::size_t c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
  }

  // Smallest-absolute-value nonzero entry of the submatrix [s.., s..];
  // first position wins ties.
  bool find_pivot(std::size_t s, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    BigInt best;
    for (std::size_t i = s; i < a.rows; ++i)
      for (std::size_t j = s; j < a.cols; ++j) {
        const BigInt& e = a.at(i, j);
        if (e.is_zero()) continue;
        BigInt mag = e.abs();
        if (!found || mag < best) {
          found = true;
          best = std::move(mag);
          pi = i;
          pj = j;
        }
      }
    return found;
  }
};

} // namespace

SmithForm smith_normal_form(IntMatrix m) {
  const std::size_t rows = m.rows, cols = m.cols;
  SnfWork w{std::move(m), IntMatrix::identity(rows), IntMatrix::identity(cols)};

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t s = 0; s < steps; ++s) {
    std::size_t pi = s, pj = s;
    if (!w.find_pivot(s, pi, pj)) break; // submatrix is zero
    w.swap_rows(s, pi);
    w.swap_cols(s, pj);

    while (true) {
      // Reduce column s, then row s, against the pivot.
      bool dirty = false;
      for (std::size_t i = s + 1; i < rows; ++i) {
        if (w.a.at(i, s).is_zero()) continue;
        BigInt q = w.a.at(i, s) / w.a.at(s, s);
        w.row_sub(i, s, q);
        if (!w.a.at(i, s).is_zero()) dirty = true;
      }
      for (std::size_t j = s + 1; j < cols; ++j) {
        if (w.a.at(s, j).is_zero()) continue;
        BigInt q = w.a.at(s, j) / w.a.at(s, s);
        w.col_sub(j, s, q);
        if (!w.a.at(s, j).is_zero()) dirty = true;
      }
      if (dirty) {
        // Remainders are strictly smaller than the pivot; re-pivot.
        std::size_t qi = s, qj = s;
        w.find_pivot(s, qi, qj);
        w.swap_rows(s, qi);
        w.swap_cols(s, qj);
        continue;
      }
      // Pivot now divides its row and column remainders (all zero). Enforce
      // divisibility of the remaining submatrix.
      bool fixed = true;
      for (std::size_t i = s + 1; i < rows && fixed; ++i)
        for (std::size_t j = s + 1; j < cols && fixed; ++j)
          if (!w.a.at(i, j).divisible_by(w.a.at(s, s))) {
            w.row_add(s, i);
            fixed = false;
          }
      if (fixed) break;
    }
    if (w.a.at(s, s).sign() < 0) w.negate_row(s);
  }

  SmithForm out;
  out.invariants.clear();
  for (std::size_t s = 0; s < steps; ++s) {
    const BigInt& d = w.a.at(s, s);
    if (d.is_zero()) break;
    out.invariants.push_back(d);
  }
  out.u = std::move(w.u);
  out.d = std::move(w.a);
  out.v = std::move(w.v);
  return out;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (m.rows != m.cols) throw dimension_mismatch("inverse of non-square matrix");
  SmithForm snf = smith_normal_form(m);
  if (snf.invariants.size() != m.rows)
    throw validation_error("matrix is not invertible over the integers");
  for (const auto& p : snf.invariants)
    if (p != BigInt(1))
      throw validation_error("matrix is not invertible over the integers");
  // u * m * v = I  =>  m^-1 = v * u
  return snf.v * snf.u;
}

namespace {

IntMatrix rows_to_matrix(std::size_t dim, const std::vector<IntVec>& rows) {
  IntMatrix m(rows.size(), dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim)
      throw dimension_mismatch("vector length does not match the dimension");
    for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

} // namespace

StackedBasis stacked_basis(std::size_t dim, const std::vector<IntVec>& generators) {
  IntMatrix a = rows_to_matrix(dim, generators);
  SmithForm snf = smith_normal_form(a);
  StackedBasis out;
  // a = u^-1 d v^-1 and u is unimodular, so the row lattice of a equals the
  // row lattice of d * v^-1, whose i-th row is p_i times the i-th row of v^-1.
  out.ambient = inverse_unimodular(snf.v);
  out.invariants = snf.invariants;
  return out;
}

bool lattice_member(const IntMatrix& gens, const IntVec& x) {
  // x is in the row lattice iff y * gens = x has an integer solution, i.e.
  // gens^T y^T = x^T does.
  SmithForm snf = smith_normal_form(gens.transposed());
  IntVec c = snf.u.mul_vec(x);
  const std::size_t r = snf.invariants.size();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < r) {
      if (!c[i].divisible_by(snf.invariants[i])) return false;
    } else if (!c[i].is_zero()) {
      return false;
    }
  }
  return true;
}

std::optional<IntMatrix> solve_endo(std::size_t dim, const std::vector<IntVec>& a,
                                    const std::vector<IntVec>& b) {
  if (a.size() != b.size())
    throw dimension_mismatch("need the same number of source and target vectors");
  IntMatrix am = rows_to_matrix(dim, a); // k x dim, rows a_i
  IntMatrix bm = rows_to_matrix(dim, b);

  // X * A = B with A, B holding a_i, b_i as columns is equivalent to
  // A^T X^T = B^T; A^T is exactly `am`. Solve column by column of X^T.
  SmithForm snf = smith_normal_form(am);
  const std::size_t k = a.size();
  const std::size_t r = snf.invariants.size();
  IntMatrix xt(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    IntVec c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = bm.at(i, col);
    IntVec cp = snf.u.mul_vec(c);
    IntVec z(dim);
    for (std::size_t i = 0; i < k; ++i) {
      if (i < r) {
        if (!cp[i].divisible_by(snf.invariants[i])) return std::nullopt;
        if (i < dim) z[i] = cp[i] / snf.invariants[i];
      } else if (!cp[i].is_zero()) {
        return std::nullopt;
      }
    }
    IntVec y = snf.v.mul_vec(z);
    for (std::size_t i = 0; i < dim; ++i) xt.at(i, col) = y[i];
  }
  return xt.transposed();
}

ExtendResult abelian_extend(std::size_t dim, const std::vector<IntVec>& a,
                            const std::vector<IntVec>& b) {
  auto sigma = solve_endo(dim, a, b);
  if (!sigma) return {ExtendStatus::no_forward_endo, std::nullopt};
  auto tau = solve_endo(dim, b, a);
  if (!tau) return {ExtendStatus::no_backward_endo, std::nullopt};

  StackedBasis sba = stacked_basis(dim, a);
  StackedBasis sbb = stacked_basis(dim, b);
  const std::size_t k = sba.rank();
  if (sbb.rank() != k)
    throw internal_check_failed("mutually embeddable subgroups of different rank");

  const IntMatrix& g = sba.ambient; // rows g_i
  const IntMatrix& f = sbb.ambient; // rows f_i
  IntMatrix f_inv = inverse_unimodular(f);
  IntMatrix g_inv = inverse_unimodular(g);

  // Row i of `s` holds the coordinates of sigma(g_i) in the basis f; row i of
  // `t` holds the coordinates of tau(f_i) in the basis g.
  IntMatrix s = g * sigma->transposed() * f_inv;
  IntMatrix t = f * tau->transposed() * g_inv;

  // The mutual-inverse identity on the leading k x k corner.
  IntMatrix ts = t * s;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (ts.at(i, j) != BigInt(i == j ? 1 : 0))
        throw internal_check_failed("base-change matrices are not mutually inverse");

  // The extension maps g_i to sigma(g_i) for i <= k and to f_i beyond.
  IntMatrix w(dim, dim);
  IntMatrix sigma_g = g * sigma->transposed(); // rows sigma(g_i)
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      w.at(i, j) = i < k ? sigma_g.at(i, j) : f.at(i, j);
  IntMatrix phi = w.transposed() * g_inv.transposed();

  BigInt det = determinant(phi);
  if (det != BigInt(1) && det != BigInt(-1))
    throw internal_check_failed("extension matrix is not unimodular");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (phi.mul_vec(a[i]) != b[i])
      throw internal_check_failed("extension matrix does not map a to b");

  ExtensionCertificate cert;
  cert.phi = std::move(phi);
  cert.basis_a = std::move(sba);
  cert.basis_b = std::move(sbb);
  cert.sigma = std::move(*sigma);
  cert.tau = std::move(*tau);
  cert.coords_forward = std::move(s);
  cert.coords_backward = std::move(t);
  return {ExtendStatus::ok, std::move(cert)};
}

bool eval_u_formula(const std::vector<BigInt>& q, const std::vector<IntVec>& g) {
  if (q.size() != g.size())
    throw dimension_mismatch("need one parameter per vector");
  bool all_zero = true;
  for (const auto& qi : q)
    if (!qi.is_zero()) all_zero = false;
  if (all_zero) throw zero_parameter("parameters must not all be zero");
  std::size_t m = g.empty() ? 0 : g[0].size();
  IntVec sum(m);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].size() != m) throw dimension_mismatch("ragged tuple of vectors");
    for (std::size_t j = 0; j < m; ++j) sum[j] += q[i] * g[i][j];
  }
  for (const auto& c : sum)
    if (!c.is_zero()) return true;
  return false;
}

bool eval_v_formula(const std::vector<BigInt>& q, const BigInt& q0,
                    const std::vector<IntVec>& g) {
  if (q0.is_zero()) throw zero_parameter("the coefficient of y must be nonzero");
  if (q.size() != g.size())
    throw dimension_mismatch("need one parameter per vector");
  const std::size_t n = g.size();
  std::size_t m = g.empty() ? 0 : g[0].size();
  for (const auto& gi : g)
    if (gi.size() != m) throw dimension_mismatch("ragged tuple of vectors");

  IntVec c(m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) c[j] -= q[i] * g[i][j];
  // The premise forces y = c / q0; if that is not integral the formula holds
  // vacuously in the torsion-free ambient group.
  IntVec y(m);
  for (std::size_t j = 0; j < m; ++j) {
    if (!c[j].divisible_by(q0)) return true;
    y[j] = c[j] / q0;
  }

  // Search the box |k_i * q0| <= |q_i| for a combination hitting y.
  std::vector<long long> bound(n);
  for (std::size_t i = 0; i < n; ++i)
    bound[i] = (q[i].abs() / q0.abs()).to_long_long();
  std::vector<long long> k(n);
  for (std::size_t i = 0; i < n; ++i) k[i] = -bound[i];
  while (true) {
    IntVec sum(m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) sum[j] += BigInt(k[i]) * g[i][j];
    if (sum == y) return true;
    std::size_t pos = n;
    while (pos > 0) {
      if (++k[pos - 1] <= bound[pos - 1]) break;
      k[pos - 1] = -bound[pos - 1];
      --pos;
    }
    if (pos == 0) break;
  }
  return false;
}

} // namespace lgt
