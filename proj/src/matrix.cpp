#include "umbrella/matrix.hpp"

#include <stdexcept>

namespace umb {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  RationalMatrix m(n, n);
  m(i, j) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Scalar RationalMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of a non-square matrix");
  Scalar t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

RationalMatrix RationalMatrix::block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) throw std::out_of_range("block out of range");
  RationalMatrix b(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
  return b;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!umb::is_zero(x)) return false;
  return true;
}

bool RationalMatrix::is_antisymmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Scalar& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch in product");
  RationalMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (umb::is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) { return a * b - b * a; }

RationalMatrix rref(RationalMatrix m, std::vector<std::size_t>* pivots) {
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(lead_row, j));
    const Scalar inv = 1 / m(lead_row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead_row || is_zero(m(i, col))) continue;
      const Scalar factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(lead_row, j);
    }
    if (pivots) pivots->push_back(col);
    ++lead_row;
  }
  return m;
}

std::size_t rank(const RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> pivots;
  aug = rref(std::move(aug), &pivots);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  return aug.block(0, n, n, n);
}

std::vector<std::vector<Scalar>> nullspace(const RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  const RationalMatrix r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols());
    v[free] = 1;
    for (std::size_t row = 0; row < pivots.size(); ++row) v[pivots[row]] = -r(row, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

void axpy(SparseVector& y, const Scalar& a, const SparseVector& x) {
  for (const auto& [k, v] : x) {
    auto [it, inserted] = y.try_emplace(k, a * v);
    if (!inserted) {
      it->second += a * v;
      if (is_zero(it->second)) y.erase(it);
    }
  }
}

}  // namespace

SparseVector SparseEliminator::reduce(SparseVector v) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto p = rows_.find(it->first);
    if (p == rows_.end()) {
      ++it;
      continue;
    }
    const std::size_t col = it->first;
    const Scalar c = it->second;
    axpy(v, -c, p->second);
    it = v.upper_bound(col);
  }
  return v;
}

bool SparseEliminator::add_row(SparseVector row) {
  for (auto it = row.begin(); it != row.end();) {
    if (it->first >= columns_) throw std::out_of_range("sparse row column out of range");
    it = is_zero(it->second) ? row.erase(it) : std::next(it);
  }
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const std::size_t pivot = row.begin()->first;
  const Scalar inv = 1 / row.begin()->second;
  for (auto& [k, v] : row) v *= inv;
  rows_.emplace(pivot, std::move(row));
  return true;
}

std::vector<SparseVector> SparseEliminator::nullspace() const {
  // Back-substitute into reduced row echelon form.
  std::map<std::size_t, SparseVector> reduced;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    SparseVector row = it->second;
    for (auto e = row.upper_bound(it->first); e != row.end();) {
      auto p = reduced.find(e->first);
      if (p == reduced.end()) {
        ++e;
        continue;
      }
      const std::size_t col = e->first;
      const Scalar c = e->second;
      axpy(row, -c, p->second);
      e = row.upper_bound(col);
    }
    reduced.emplace(it->first, std::move(row));
  }
  std::vector<SparseVector> basis;
  for (std::size_t free = 0; free < columns_; ++free) {
    if (reduced.count(free)) continue;
    SparseVector v;
    v[free] = 1;
    for (const auto& [pivot, row] : reduced) {
      auto e = row.find(free);
      if (e != row.end()) v[pivot] = -e->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<SparseVector> SparseEliminator::basis() const {
  std::vector<SparseVector> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(row);
  return out;
}

SpanCoordinates::SpanCoordinates(std::vector<std::vector<Scalar>> basis) : basis_(std::move(basis)) {
  const std::size_t d = basis_.size();
  if (d == 0) return;
  const std::size_t n = basis_.front().size();
  RationalMatrix aug(d, n + d);
  for (std::size_t a = 0; a < d; ++a) {
    if (basis_[a].size() != n) throw std::invalid_argument("ragged basis");
    for (std::size_t j = 0; j < n; ++j) aug(a, j) = basis_[a][j];
    aug(a, n + a) = 1;
  }
  std::vector<std::size_t> pivots;
  aug = rref(std::move(aug), &pivots);
  if (pivots.size() != d || pivots.back() >= n) throw std::invalid_argument("basis is linearly dependent");
  pivots_ = std::move(pivots);
  transform_ = aug.block(0, n, d, d);
}

std::optional<std::vector<Scalar>> SpanCoordinates::coordinates(const std::vector<Scalar>& v) const {
  const std::size_t d = basis_.size();
  if (d == 0) {
    for (const auto& x : v)
      if (!is_zero(x)) return std::nullopt;
    return std::vector<Scalar>{};
  }
  const std::size_t n = basis_.front().size();
  if (v.size() != n) throw std::invalid_argument("vector length mismatch");
  std::vector<Scalar> c(d);
  for (std::size_t row = 0; row < d; ++row) {
    const Scalar& vp = v[pivots_[row]];
    if (is_zero(vp)) continue;
    for (std::size_t a = 0; a < d; ++a) c[a] += vp * transform_(row, a);
  }
  for (std::size_t j = 0; j < n; ++j) {
    Scalar s = 0;
    for (std::size_t a = 0; a < d; ++a) s += c[a] * basis_[a][j];
    if (s != v[j]) return std::nullopt;
  }
  return c;
}

}  // namespace umb
