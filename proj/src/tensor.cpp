#include "umbrella/tensor.hpp"

#include <stdexcept>

#include "umbrella/literal.hpp"

namespace umb {

bool TupleLess::operator()(const WordTuple& a, const WordTuple& b) const {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    const auto c = wlex_compare(*alphabet, a[k], b[k]);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
  }
  return a.size() < b.size();
}

TensorPoly::TensorPoly(AlphabetPtr alphabet, std::size_t arity)
    : alphabet_(std::move(alphabet)), arity_(arity), terms_(TupleLess{alphabet_.get()}) {
  if (!alphabet_) throw std::invalid_argument("TensorPoly requires an alphabet");
}

TensorPoly TensorPoly::pure(const NCPoly& a, const NCPoly& b) {
  TensorPoly t(a.alphabet_ptr(), 2);
  for (const auto& [u, c] : a.terms())
    for (const auto& [v, d] : b.terms()) t.add_term({u, v}, c * d);
  return t;
}

Scalar TensorPoly::coefficient(const WordTuple& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void TensorPoly::add_term(const WordTuple& t, const Scalar& c) {
  if (t.size() != arity_) throw std::invalid_argument("tensor arity mismatch");
  if (umb::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (umb::is_zero(it->second)) terms_.erase(it);
  }
}

void TensorPoly::add_scaled(const TensorPoly& other, const Scalar& c) {
  if (other.arity_ != arity_) throw std::invalid_argument("tensor arity mismatch");
  if (umb::is_zero(c)) return;
  for (const auto& [t, a] : other.terms_) add_term(t, a * c);
}

TensorPoly& TensorPoly::operator*=(const Scalar& c) {
  if (umb::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, a] : terms_) a *= c;
  return *this;
}

bool TensorPoly::operator==(const TensorPoly& other) const {
  if (arity_ != other.arity_ || terms_.size() != other.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  for (; a != terms_.end(); ++a, ++b)
    if (a->first != b->first || a->second != b->second) return false;
  return true;
}

TensorPoly mul(const TensorPoly& a, const TensorPoly& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("tensor arity mismatch");
  TensorPoly out(a.alphabet_ptr(), a.arity());
  for (const auto& [s, c] : a.terms()) {
    for (const auto& [t, d] : b.terms()) {
      WordTuple u(s);
      for (std::size_t k = 0; k < u.size(); ++k) u[k] += t[k];
      out.add_term(u, c * d);
    }
  }
  return out;
}

std::string format_tensor(const TensorPoly& t) {
  if (t.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it) {
    const Scalar& c = it->second;
    const bool neg = sgn(c) < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const Scalar mag = neg ? Scalar(-c) : c;
    if (mag != 1) out += to_string(mag) + " ";
    for (std::size_t k = 0; k < it->first.size(); ++k) {
      if (k) out += " ⊗ ";
      out += format_word(t.alphabet(), it->first[k]);
    }
    first = false;
  }
  return out;
}

}  // namespace umb
