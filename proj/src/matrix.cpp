#include "lieorb/matrix.hpp"

#include <utility>

#include "lieorb/errors.hpp"

namespace lieorb {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix(0, 0);
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Vec Matrix::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void Matrix::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) throw DimensionMismatch("row length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) p.at(i, j) += aik * o.at(k, j);
    }
  return p;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shape mismatch");
  Matrix d(rows_, cols_);
  for (std::size_t i = 0; i < rows_ * cols_; ++i) d.e_[i] = e_[i] - o.e_[i];
  return d;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shape mismatch");
  Matrix s(rows_, cols_);
  for (std::size_t i = 0; i < rows_ * cols_; ++i) s.e_[i] = e_[i] + o.e_[i];
  return s;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rat s;
    for (std::size_t j = 0; j < cols_; ++j) s += at(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  const std::size_t nrows = a.rows(), ncols = a.cols();

  // Row scaling changes neither rank, pivots nor the reduced form; clearing
  // denominators keeps the forward pass in integers.
  for (std::size_t i = 0; i < nrows; ++i) {
    Rat l = 1;
    for (std::size_t j = 0; j < ncols; ++j) l = Rat::den_lcm(l, a.at(i, j));
    if (l != Rat(1))
      for (std::size_t j = 0; j < ncols; ++j) a.at(i, j) *= l;
  }

  // Bareiss fraction-free elimination: one-step division by the previous
  // pivot keeps every intermediate an exact minor of the integer matrix.
  Rat prev = 1;
  std::size_t rk = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < ncols && rk < nrows; ++col) {
    std::size_t p = rk;
    while (p < nrows && a.at(p, col).is_zero()) ++p;
    if (p == nrows) continue;
    if (p != rk)
      for (std::size_t j = 0; j < ncols; ++j) std::swap(a.at(p, j), a.at(rk, j));
    const Rat pv = a.at(rk, col);
    for (std::size_t i = rk + 1; i < nrows; ++i) {
      const Rat f = a.at(i, col);
      for (std::size_t j = col + 1; j < ncols; ++j)
        a.at(i, j) = (pv * a.at(i, j) - f * a.at(rk, j)) / prev;
      a.at(i, col) = 0;
    }
    prev = pv;
    pivots.push_back(col);
    ++rk;
  }

  // Normalize to the unique reduced form.
  for (std::size_t k = rk; k-- > 0;) {
    const std::size_t pc = pivots[k];
    const Rat pv = a.at(k, pc);
    for (std::size_t j = pc; j < ncols; ++j) a.at(k, j) /= pv;
    for (std::size_t i = 0; i < k; ++i) {
      const Rat f = a.at(i, pc);
      if (f.is_zero()) continue;
      for (std::size_t j = pc; j < ncols; ++j) a.at(i, j) -= f * a.at(k, j);
    }
  }

  return RrefResult{std::move(a), rk, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
  const auto r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;

  std::vector<Vec> rows;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n);
    v[f] = 1;
    for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.reduced.at(k, f);
    rows.push_back(std::move(v));
  }
  if (rows.empty()) return Matrix(0, n);
  auto canon = rref(Matrix::from_rows(rows));
  // Kernel rows are independent by construction, so nothing drops out.
  return canon.reduced;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("rhs length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  const auto r = rref(aug);
  for (auto p : r.pivots)
    if (p == a.cols()) return std::nullopt;  // inconsistent
  Vec x(a.cols());
  for (std::size_t k = 0; k < r.pivots.size(); ++k) x[r.pivots[k]] = r.reduced.at(k, a.cols());
  return x;
}

}  // namespace lieorb
