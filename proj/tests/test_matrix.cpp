#include <doctest.h>

#include <random>

#include "umbrella/matrix.hpp"

using namespace umb;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo = -2, int hi = 2) {
  std::uniform_int_distribution<int> d(lo, hi);
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("products, transpose, trace") {
  RationalMatrix a{{1, 2}, {3, 4}};
  RationalMatrix b{{0, 1}, {1, 0}};
  CHECK(a * b == RationalMatrix{{2, 1}, {4, 3}});
  CHECK(a.transpose() == RationalMatrix{{1, 3}, {2, 4}});
  CHECK(a.trace() == 5);
  CHECK(RationalMatrix{{0, 1}, {-1, 0}}.is_antisymmetric());
  CHECK(!a.is_antisymmetric());
  CHECK(commutator(a, a).is_zero());
}

TEST_CASE("rank, inverse and nullspace") {
  RationalMatrix a{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank(a) == 2);
  CHECK(!inverse(a));
  const auto ns = nullspace(a);
  REQUIRE(ns.size() == 1);
  for (std::size_t i = 0; i < 3; ++i) {
    Scalar s = 0;
    for (std::size_t j = 0; j < 3; ++j) s += a(i, j) * ns[0][j];
    CHECK(s == 0);
  }
  RationalMatrix d{{2, 0}, {0, Scalar(1, 3)}};
  CHECK(*inverse(d) == RationalMatrix{{Scalar(1, 2), 0}, {0, 3}});
}

TEST_CASE("sparse eliminator agrees with dense elimination") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    const RationalMatrix m = random_matrix(rng, 5, 7, -1, 1);
    SparseEliminator e(7);
    for (std::size_t i = 0; i < 5; ++i) {
      SparseVector row;
      for (std::size_t j = 0; j < 7; ++j)
        if (m(i, j) != 0) row[j] = m(i, j);
      e.add_row(row);
    }
    CHECK(e.rank() == rank(m));
    const auto ns = e.nullspace();
    CHECK(ns.size() == 7 - rank(m));
    for (const auto& v : ns) {
      for (std::size_t i = 0; i < 5; ++i) {
        Scalar s = 0;
        for (const auto& [j, x] : v) s += m(i, j) * x;
        CHECK(s == 0);
      }
    }
    // a row-space vector reduces to zero, a generic one usually does not
    SparseVector combo;
    for (std::size_t j = 0; j < 7; ++j)
      if (m(0, j) + 2 * m(1, j) != 0) combo[j] = m(0, j) + 2 * m(1, j);
    CHECK(e.reduce(combo).empty());
  }
}

TEST_CASE("span coordinates") {
  SpanCoordinates s({{1, 1, 0}, {0, 1, 1}});
  auto c = s.coordinates({2, 5, 3});
  REQUIRE(c);
  CHECK((*c)[0] == 2);
  CHECK((*c)[1] == 3);
  CHECK(!s.coordinates({1, 0, 0}));
  CHECK_THROWS_AS(SpanCoordinates({{1, 2}, {2, 4}}), std::invalid_argument);
}
