#pragma once

#include <map>
#include <string>
#include <vector>

#include "umbrella/ncpoly.hpp"

namespace umb {

using WordTuple = std::vector<Word>;

struct TupleLess {
  const Alphabet* alphabet = nullptr;
  bool operator()(const WordTuple& a, const WordTuple& b) const;
};

/// Element of the n-fold tensor power of the free algebra: WordTuple -> Scalar.
class TensorPoly {
 public:
  using Terms = std::map<WordTuple, Scalar, TupleLess>;

  TensorPoly(AlphabetPtr alphabet, std::size_t arity);

  static TensorPoly pure(const NCPoly& a, const NCPoly& b);

  const Alphabet& alphabet() const { return *alphabet_; }
  const AlphabetPtr& alphabet_ptr() const { return alphabet_; }
  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const WordTuple& t) const;

  void add_term(const WordTuple& t, const Scalar& c);
  void add_scaled(const TensorPoly& other, const Scalar& c);

  TensorPoly& operator+=(const TensorPoly& o) {
    add_scaled(o, 1);
    return *this;
  }
  TensorPoly& operator-=(const TensorPoly& o) {
    add_scaled(o, -1);
    return *this;
  }
  TensorPoly& operator*=(const Scalar& c);
  friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
  friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
  friend TensorPoly operator*(const Scalar& c, TensorPoly a) { return a *= c; }

  bool operator==(const TensorPoly& other) const;

 private:
  AlphabetPtr alphabet_;
  std::size_t arity_;
  Terms terms_;
};

/// Componentwise concatenation, no normalization.
TensorPoly mul(const TensorPoly& a, const TensorPoly& b);

/// "x0 ⊗ x1 - x1 ⊗ x0"; zero prints "0".
std::string format_tensor(const TensorPoly& t);

}  // namespace umb
