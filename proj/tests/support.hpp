#pragma once

#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "umbrella/literal.hpp"
#include "umbrella/ncpoly.hpp"
#include "umbrella/tensor.hpp"

namespace testsupport {

inline constexpr std::uint64_t kSeed = 7001;

inline umb::NCPoly P(const umb::AlphabetPtr& a, const std::string& text) { return umb::parse_polynomial(a, text); }

inline umb::Word random_word(std::mt19937_64& rng, const umb::Alphabet& a, int max_weight) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(a.size()) - 1);
  std::uniform_int_distribution<int> target(0, max_weight);
  int budget = target(rng);
  std::vector<int> letters;
  for (int tries = 0; budget > 0 && tries < 32; ++tries) {
    const int id = pick(rng);
    if (a.weight(id) > budget) continue;
    letters.push_back(id);
    budget -= a.weight(id);
  }
  return umb::Word(letters);
}

inline umb::NCPoly random_poly(std::mt19937_64& rng, const umb::AlphabetPtr& a, int max_weight, int terms) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  umb::NCPoly f(a);
  for (int t = 0; t < terms; ++t) {
    umb::Scalar c(num(rng), den(rng));
    c.canonicalize();  // the two-argument constructor does not reduce
    f.add_term(random_word(rng, *a, max_weight), c);
  }
  return f;
}

}  // namespace testsupport

namespace doctest {
template <>
struct StringMaker<umb::NCPoly> {
  static String convert(const umb::NCPoly& f) { return umb::format_polynomial(f).c_str(); }
};
template <>
struct StringMaker<umb::TensorPoly> {
  static String convert(const umb::TensorPoly& t) { return umb::format_tensor(t).c_str(); }
};
}  // namespace doctest
