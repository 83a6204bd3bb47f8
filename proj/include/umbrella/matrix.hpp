#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <vector>

#include "umbrella/scalar.hpp"

namespace umb {

/// Dense rows x cols matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static RationalMatrix identity(std::size_t n);
  /// n x n matrix unit e_ij (0-based indices).
  static RationalMatrix unit(std::size_t n, std::size_t i, std::size_t j);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Scalar>& data() const { return data_; }

  RationalMatrix transpose() const;
  Scalar trace() const;
  RationalMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  bool is_zero() const;
  bool is_antisymmetric() const;
  bool is_symmetric() const;

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);
  RationalMatrix& operator*=(const Scalar& c);
  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Scalar& c) { return a *= c; }
  friend RationalMatrix operator*(const Scalar& c, RationalMatrix a) { return a *= c; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b);

/// Reduced row echelon form by exact Gaussian elimination; pivot columns are
/// appended to `pivots` when given.
RationalMatrix rref(RationalMatrix m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const RationalMatrix& m);
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// Canonical basis of {v : m v = 0}: one vector per free column, that entry set to 1.
std::vector<std::vector<Scalar>> nullspace(const RationalMatrix& m);

using SparseVector = std::map<std::size_t, Scalar>;

/// Incremental row echelon form over sparse rows. Used for the larger exact
/// solves (primitive spaces, filtration pieces) where dense storage is wasteful.
class SparseEliminator {
 public:
  explicit SparseEliminator(std::size_t columns) : columns_(columns) {}

  /// Returns true when the row was independent of the rows already added.
  bool add_row(SparseVector row);
  std::size_t rank() const { return rows_.size(); }
  std::size_t columns() const { return columns_; }
  /// Remainder of v modulo the row space; zero iff v lies in it. Linear in v.
  SparseVector reduce(SparseVector v) const;
  /// Basis of {x : r . x = 0 for every added row r}.
  std::vector<SparseVector> nullspace() const;
  /// The echelon rows, a basis of the row space.
  std::vector<SparseVector> basis() const;

 private:
  std::size_t columns_;
  std::map<std::size_t, SparseVector> rows_;  // keyed by pivot, pivot entry 1
};

/// Coordinates of vectors with respect to a fixed linearly independent family.
class SpanCoordinates {
 public:
  SpanCoordinates() = default;
  /// Throws std::invalid_argument when the family is dependent or ragged.
  explicit SpanCoordinates(std::vector<std::vector<Scalar>> basis);

  std::size_t dimension() const { return basis_.size(); }
  std::optional<std::vector<Scalar>> coordinates(const std::vector<Scalar>& v) const;

 private:
  std::vector<std::vector<Scalar>> basis_;
  std::vector<std::size_t> pivots_;
  RationalMatrix transform_;  // rows: combinations of basis vectors giving the RREF rows
};

}  // namespace umb
