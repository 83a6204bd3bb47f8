#include "umbrella/ncpoly.hpp"

#include <stdexcept>

namespace umb {

NCPoly::NCPoly(AlphabetPtr alphabet)
    : alphabet_(std::move(alphabet)), terms_(WlexLess{alphabet_.get()}) {
  if (!alphabet_) throw std::invalid_argument("NCPoly requires an alphabet");
}

NCPoly::NCPoly(AlphabetPtr alphabet, const Word& w, const Scalar& c) : NCPoly(std::move(alphabet)) {
  add_term(w, c);
}

NCPoly NCPoly::constant(AlphabetPtr alphabet, const Scalar& c) { return NCPoly(std::move(alphabet), Word{}, c); }

NCPoly NCPoly::generator(AlphabetPtr alphabet, int id) {
  if (id < 0 || static_cast<std::size_t>(id) >= alphabet->size()) {
    throw std::out_of_range("generator id out of range");
  }
  return NCPoly(std::move(alphabet), Word::letter(id));
}

Scalar NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

bool NCPoly::is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

void NCPoly::add_term(const Word& w, const Scalar& c) {
  if (umb::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (umb::is_zero(it->second)) terms_.erase(it);
  }
}

void NCPoly::add_scaled(const NCPoly& other, const Scalar& c) {
  check_same_alphabet(other);
  if (umb::is_zero(c)) return;
  for (const auto& [w, a] : other.terms_) add_term(w, a * c);
}

const Word& NCPoly::leading_word() const {
  if (terms_.empty()) throw std::domain_error("no leading word");
  return terms_.rbegin()->first;
}

NCPoly& NCPoly::operator+=(const NCPoly& other) {
  add_scaled(other, 1);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& other) {
  add_scaled(other, -1);
  return *this;
}

NCPoly& NCPoly::operator*=(const Scalar& c) {
  if (umb::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, a] : terms_) a *= c;
  return *this;
}

NCPoly NCPoly::operator-() const {
  NCPoly out(*this);
  out *= -1;
  return out;
}

bool NCPoly::operator==(const NCPoly& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  for (; a != terms_.end(); ++a, ++b) {
    if (!(a->first == b->first) || a->second != b->second) return false;
  }
  return true;
}

void NCPoly::check_same_alphabet(const NCPoly& other) const {
  if (alphabet_ != other.alphabet_ && !(*alphabet_ == *other.alphabet_)) {
    throw std::invalid_argument("polynomials over different alphabets");
  }
}

NCPoly mul(const NCPoly& f, const NCPoly& g) {
  if (f.alphabet_ptr() != g.alphabet_ptr() && !(f.alphabet() == g.alphabet())) {
    throw std::invalid_argument("polynomials over different alphabets");
  }
  NCPoly out(f.alphabet_ptr());
  for (const auto& [u, a] : f.terms()) {
    for (const auto& [v, b] : g.terms()) out.add_term(u + v, a * b);
  }
  return out;
}

NCPoly commutator(const NCPoly& f, const NCPoly& g) { return mul(f, g) - mul(g, f); }

NCPoly power(const NCPoly& f, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  NCPoly out = NCPoly::constant(f.alphabet_ptr(), 1);
  for (int i = 0; i < exponent; ++i) out = mul(out, f);
  return out;
}

}  // namespace umb
