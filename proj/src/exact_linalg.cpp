#include "cayleykit/exact_linalg.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace cayleykit {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows,
                               std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_cols(const std::vector<IntVec>& cols,
                               std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows)
      throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntVec IntMatrix::row(std::size_t i) const {
  IntVec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

IntVec IntMatrix::col(std::size_t j) const {
  IntVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVec IntMatrix::apply(const IntVec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("dimension mismatch");
  IntVec y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from(const IntMatrix& m) {
  RatMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rat(m(i, j));
  return q;
}

RatVec RatMatrix::apply(const RatVec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("dimension mismatch");
  RatVec y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch");
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int vector_gcd(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

void make_primitive(IntVec& v) {
  Int g = vector_gcd(v);
  if (g == 0) return;
  for (Int& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  for (const Int& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (Int& y : v) y = -y;
    break;
  }
}

namespace {

// Left-multiplies rows a and b of each matrix in ms by the unimodular
// 2x2 matrix [[p, q], [-beta, alpha]] with p*x + q*y = g, alpha = x/g,
// beta = y/g, so that entry (b, pivot column) becomes zero. When x divides
// y this degenerates to plain elimination, leaving row a untouched.
void gcd_row_op(std::vector<IntMatrix*> ms, std::size_t a, std::size_t b,
                const Int& x, const Int& y) {
  if (x != 0 && mpz_divisible_p(y.get_mpz_t(), x.get_mpz_t())) {
    Int f;
    mpz_divexact(f.get_mpz_t(), y.get_mpz_t(), x.get_mpz_t());
    for (IntMatrix* m : ms)
      for (std::size_t k = 0; k < m->cols(); ++k)
        (*m)(b, k) -= f * (*m)(a, k);
    return;
  }
  Int g, p, q;
  mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), x.get_mpz_t(),
             y.get_mpz_t());
  Int alpha, beta;
  mpz_divexact(alpha.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(beta.get_mpz_t(), y.get_mpz_t(), g.get_mpz_t());
  for (IntMatrix* m : ms) {
    for (std::size_t k = 0; k < m->cols(); ++k) {
      Int ra = (*m)(a, k), rb = (*m)(b, k);
      (*m)(a, k) = p * ra + q * rb;
      (*m)(b, k) = alpha * rb - beta * ra;
    }
  }
}

void swap_rows(std::vector<IntMatrix*> ms, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (IntMatrix* m : ms)
    for (std::size_t k = 0; k < m->cols(); ++k)
      std::swap((*m)(a, k), (*m)(b, k));
}

void negate_row(std::vector<IntMatrix*> ms, std::size_t a) {
  for (IntMatrix* m : ms)
    for (std::size_t k = 0; k < m->cols(); ++k) (*m)(a, k) = -(*m)(a, k);
}

void swap_cols(std::vector<IntMatrix*> ms, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (IntMatrix* m : ms)
    for (std::size_t k = 0; k < m->rows(); ++k)
      std::swap((*m)(k, a), (*m)(k, b));
}

// Column analogue of gcd_row_op, acting on columns a and b.
void gcd_col_op(std::vector<IntMatrix*> ms, std::size_t a, std::size_t b,
                const Int& x, const Int& y) {
  if (x != 0 && mpz_divisible_p(y.get_mpz_t(), x.get_mpz_t())) {
    Int f;
    mpz_divexact(f.get_mpz_t(), y.get_mpz_t(), x.get_mpz_t());
    for (IntMatrix* m : ms)
      for (std::size_t k = 0; k < m->rows(); ++k)
        (*m)(k, b) -= f * (*m)(k, a);
    return;
  }
  Int g, p, q;
  mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), x.get_mpz_t(),
             y.get_mpz_t());
  Int alpha, beta;
  mpz_divexact(alpha.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(beta.get_mpz_t(), y.get_mpz_t(), g.get_mpz_t());
  for (IntMatrix* m : ms) {
    for (std::size_t k = 0; k < m->rows(); ++k) {
      Int ca = (*m)(k, a), cb = (*m)(k, b);
      (*m)(k, a) = p * ca + q * cb;
      (*m)(k, b) = alpha * cb - beta * ca;
    }
  }
}

}  // namespace

HermiteResult hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::vector<IntMatrix*> hu{&h, &u};
  std::size_t row = 0;
  for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < h.rows() && h(pivot, col) == 0) ++pivot;
    if (pivot == h.rows()) continue;
    swap_rows(hu, row, pivot);
    for (std::size_t i = row + 1; i < h.rows(); ++i)
      if (h(i, col) != 0) gcd_row_op(hu, row, i, h(row, col), h(i, col));
    if (h(row, col) < 0) negate_row(hu, row);
    for (std::size_t i = 0; i < row; ++i) {
      Int f;
      mpz_fdiv_q(f.get_mpz_t(), h(i, col).get_mpz_t(),
                 h(row, col).get_mpz_t());
      if (f == 0) continue;
      for (std::size_t k = 0; k < h.cols(); ++k) h(i, k) -= f * h(row, k);
      for (std::size_t k = 0; k < u.cols(); ++k) u(i, k) -= f * u(row, k);
    }
    ++row;
  }
  return {std::move(h), std::move(u)};
}

SmithResult smith_normal_form(const IntMatrix& m) {
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  std::vector<IntMatrix*> du{&d, &u};
  std::vector<IntMatrix*> dv{&d, &v};
  const std::size_t bound = std::min(d.rows(), d.cols());

  for (std::size_t t = 0; t < bound; ++t) {
    // Move the first nonzero entry of the trailing block to (t, t).
    std::size_t pi = d.rows(), pj = d.cols();
    for (std::size_t i = t; i < d.rows() && pi == d.rows(); ++i)
      for (std::size_t j = t; j < d.cols(); ++j)
        if (d(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == d.rows()) break;
    swap_rows(du, t, pi);
    swap_cols(dv, t, pj);

    for (;;) {
      bool dirty = true;
      while (dirty) {
        dirty = false;
        for (std::size_t i = t + 1; i < d.rows(); ++i)
          if (d(i, t) != 0) {
            gcd_row_op(du, t, i, d(t, t), d(i, t));
            dirty = true;
          }
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(t, j) != 0) {
            gcd_col_op(dv, t, j, d(t, t), d(t, j));
            dirty = true;
          }
      }
      // Enforce divisibility of the trailing block by the pivot.
      bool fixed = true;
      for (std::size_t i = t + 1; i < d.rows() && fixed; ++i)
        for (std::size_t j = t + 1; j < d.cols() && fixed; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            for (std::size_t k = 0; k < d.cols(); ++k) d(t, k) += d(i, k);
            for (std::size_t k = 0; k < u.cols(); ++k) u(t, k) += u(i, k);
            fixed = false;
          }
      if (fixed) break;
    }
    if (d(t, t) < 0) negate_row(du, t);
  }
  return {std::move(u), std::move(d), std::move(v)};
}

std::size_t integer_rank(const IntMatrix& m) {
  IntMatrix h = hermite_normal_form(m).h;
  std::size_t rank = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < h.cols() && zero; ++j)
      if (h(i, j) != 0) zero = false;
    if (!zero) ++rank;
  }
  return rank;
}

std::vector<IntVec> kernel_basis(const IntMatrix& m) {
  // Rows x of U with x * m^T = 0 are exactly the integer solutions of
  // m * x^T = 0, and the rows aligned with zero rows of H form a basis.
  auto [h, u] = hermite_normal_form(m.transposed());
  std::vector<IntVec> basis;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < h.cols() && zero; ++j)
      if (h(i, j) != 0) zero = false;
    if (zero) basis.push_back(u.row(i));
  }
  return basis;
}

std::optional<IntegerSolution> solve_integer(const IntMatrix& a,
                                             const IntVec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("dimension mismatch");
  auto [u, d, v] = smith_normal_form(a);
  IntVec c = u.apply(b);
  const std::size_t bound = std::min(a.rows(), a.cols());
  std::size_t rank = 0;
  while (rank < bound && d(rank, rank) != 0) ++rank;

  IntVec y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i < rank) {
      if (!mpz_divisible_p(c[i].get_mpz_t(), d(i, i).get_mpz_t()))
        return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), c[i].get_mpz_t(), d(i, i).get_mpz_t());
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  IntegerSolution sol;
  sol.particular = v.apply(y);
  for (std::size_t j = rank; j < a.cols(); ++j) sol.kernel.push_back(v.col(j));
  return sol;
}

std::optional<Int> lattice_index(const std::vector<IntVec>& vs,
                                 std::size_t n) {
  IntMatrix m = IntMatrix::from_rows(vs, n);
  IntMatrix d = smith_normal_form(m).d;
  Int index = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= std::min(d.rows(), d.cols()) || d(i, i) == 0) return std::nullopt;
    index *= d(i, i);
  }
  return index;
}

RatMatrix invert_rational(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix not square");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw std::invalid_argument("singular matrix");
    if (pivot != col)
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a(col, k), a(pivot, k));
        std::swap(inv(col, k), inv(pivot, k));
      }
    Rat p = a(col, col);
    for (std::size_t k = 0; k < n; ++k) {
      a(col, k) /= p;
      inv(col, k) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      Rat f = a(i, col);
      for (std::size_t k = 0; k < n; ++k) {
        a(i, k) -= f * a(col, k);
        inv(i, k) -= f * inv(col, k);
      }
    }
  }
  return inv;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  RatMatrix inv = invert_rational(RatMatrix::from(m));
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (inv(i, j).get_den() != 1)
        throw std::invalid_argument("matrix is not unimodular");
      out(i, j) = inv(i, j).get_num();
    }
  return out;
}

std::size_t rational_rank(const std::vector<RatVec>& vectors) {
  std::vector<RatVec> rows = vectors;
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t n = rows[0].size();
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      Rat f = rows[i][col] / rows[rank][col];
      for (std::size_t k = col; k < n; ++k) rows[i][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace cayleykit
