#include "subadd/matrix.hpp"

#include <utility>

#include "subadd/error.hpp"

namespace subadd {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::InvalidParameters, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool QMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

QMatrix QMatrix::principal(std::span<const std::size_t> idx) const {
  QMatrix out(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = (*this)(idx[i], idx[j]);
  return out;
}

QVector QMatrix::operator*(std::span<const Rational> x) const {
  if (x.size() != cols_) throw Error(ErrorKind::InvalidParameters, "dimension mismatch in product");
  QVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!(*this)(i, j).is_zero() && !x[j].is_zero()) acc += (*this)(i, j) * x[j];
    }
    y[i] = std::move(acc);
  }
  return y;
}

namespace {

using IntRows = std::vector<std::vector<Integer>>;

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Clears denominators row by row. The returned scale factors satisfy
// int_row[i] = scale[i] * rational_row[i].
IntRows to_integer_rows(const QMatrix& m, std::span<const Rational> rhs, std::vector<Integer>& scale) {
  const bool aug = !rhs.empty();
  IntRows out(m.rows());
  scale.assign(m.rows(), Integer(1));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).denominator());
    if (aug) l = lcm(l, rhs[i].denominator());
    scale[i] = l;
    out[i].reserve(m.cols() + (aug ? 1 : 0));
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[i].push_back(m(i, j).numerator() * (l / m(i, j).denominator()));
    if (aug) out[i].push_back(rhs[i].numerator() * (l / rhs[i].denominator()));
  }
  return out;
}

// In-place Bareiss forward elimination over the first `n` columns. Returns
// false if a zero pivot column is met; `swaps` counts row exchanges.
bool bareiss(IntRows& a, std::size_t n, int& swaps) {
  swaps = 0;
  Integer prev = 1;
  const std::size_t width = a.empty() ? 0 : a[0].size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return false;
    if (p != k) {
      std::swap(a[p], a[k]);
      ++swaps;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < width; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return true;
}

}  // namespace

Rational determinant(const QMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::InvalidParameters, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<Integer> scale;
  IntRows a = to_integer_rows(m, {}, scale);
  int swaps = 0;
  if (!bareiss(a, n, swaps)) return 0;
  Integer den = 1;
  for (const auto& s : scale) den *= s;
  Rational det(a[n - 1][n - 1], den);
  return swaps % 2 ? -det : det;
}

QVector solve_linear(const QMatrix& m, std::span<const Rational> rhs) {
  if (!m.is_square() || rhs.size() != m.rows())
    throw Error(ErrorKind::SingularMatrix, "system is not square");
  const std::size_t n = m.rows();
  std::vector<Integer> scale;
  QVector padded(rhs.begin(), rhs.end());
  IntRows a = n ? to_integer_rows(m, padded, scale) : IntRows{};
  int swaps = 0;
  if (!bareiss(a, n, swaps)) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible");
  QVector x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational acc(a[ii][n]);
    for (std::size_t j = ii + 1; j < n; ++j)
      if (a[ii][j] != 0) acc -= Rational(a[ii][j]) * x[j];
    x[ii] = acc / Rational(a[ii][ii]);
  }
  return x;
}

bool is_negative_definite(const QMatrix& m) {
  if (!m.is_symmetric()) throw Error(ErrorKind::NonSymmetric, "intersection form must be symmetric");
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < m.rows(); ++k) {
    idx.push_back(k);
    Rational minor = determinant(m.principal(idx));
    // Sign of the k-th leading minor must be (-1)^(k+1) for 0-based k.
    const int want = (k % 2 == 0) ? -1 : 1;
    if (minor.sign() != want) return false;
  }
  return true;
}

std::vector<QVector> null_space(const QMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  QMatrix a = m;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    Rational inv = Rational(1) / a(r, c);
    for (std::size_t j = 0; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVector v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a(i, free);
    Integer l = 1, g = 0;
    for (const auto& e : v) l = lcm(l, e.denominator());
    for (auto& e : v) {
      e *= Rational(l);
      Integer num = e.numerator();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    if (g > 1)
      for (auto& e : v) e /= Rational(g);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace subadd
