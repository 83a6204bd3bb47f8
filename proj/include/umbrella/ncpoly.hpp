#pragma once

#include <map>

#include "umbrella/scalar.hpp"
#include "umbrella/word.hpp"

namespace umb {

/// Element of the free algebra over an alphabet: a finite Word -> Scalar map
/// with no zero coefficients, iterated in increasing wlex order.
class NCPoly {
 public:
  using Terms = std::map<Word, Scalar, WlexLess>;

  explicit NCPoly(AlphabetPtr alphabet);
  NCPoly(AlphabetPtr alphabet, const Word& w, const Scalar& c = 1);

  static NCPoly constant(AlphabetPtr alphabet, const Scalar& c);
  static NCPoly generator(AlphabetPtr alphabet, int id);

  const Alphabet& alphabet() const { return *alphabet_; }
  const AlphabetPtr& alphabet_ptr() const { return alphabet_; }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(const Word& w) const;
  Scalar constant_term() const { return coefficient(Word{}); }
  /// True when every term is the empty word (includes zero).
  bool is_scalar() const;

  void add_term(const Word& w, const Scalar& c);
  void add_scaled(const NCPoly& other, const Scalar& c);

  /// wlex-maximal word. Throws std::domain_error("no leading word") on zero.
  const Word& leading_word() const;

  NCPoly& operator+=(const NCPoly& other);
  NCPoly& operator-=(const NCPoly& other);
  NCPoly& operator*=(const Scalar& c);

  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const Scalar& c) { return a *= c; }
  friend NCPoly operator*(const Scalar& c, NCPoly a) { return a *= c; }
  NCPoly operator-() const;

  bool operator==(const NCPoly& other) const;

 private:
  void check_same_alphabet(const NCPoly& other) const;

  AlphabetPtr alphabet_;
  Terms terms_;
};

/// Bilinear extension of concatenation.
NCPoly mul(const NCPoly& f, const NCPoly& g);
inline NCPoly operator*(const NCPoly& f, const NCPoly& g) { return mul(f, g); }

NCPoly commutator(const NCPoly& f, const NCPoly& g);

/// Integer power, f^0 = 1.
NCPoly power(const NCPoly& f, int exponent);

}  // namespace umb
