#include <doctest.h>

#include <random>

#include "support.hpp"
#include "umbrella/hopf.hpp"
#include "umbrella/io.hpp"
#include "umbrella/umbrella.hpp"

using namespace umb;
using testsupport::P;

namespace {

RationalMatrix random_invertible(std::mt19937_64& rng, std::size_t r) {
  std::uniform_int_distribution<int> d(-2, 2);
  for (;;) {
    RationalMatrix m(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) m(i, j) = d(rng);
    if (inverse(m)) return m;
  }
}

}  // namespace

TEST_CASE("GK dimension and generator roster") {
  CHECK(gkdim(2, 1) == 8);
  CHECK(gkdim(3, 1) == 13);
  CHECK(gkdim(4, 2) == 19);
  CHECK(gkdim(5, 2) == 26);
  CHECK(gkdim(0, 0) == 1);
  CHECK_THROWS(gkdim(1, 1));
  CHECK_THROWS(gkdim(2, -1));
  for (int r = 0; r <= 6; ++r)
    for (int s = 0; 2 * s <= r; ++s) {
      auto U = build_umbrella(r, s);
      CHECK(static_cast<int>(U.generator_count()) == gkdim(r, s));
      CHECK(U.presentation.relation_count() == U.generator_count() * (U.generator_count() - 1) / 2);
    }
}

TEST_CASE("UM(2,2) presentation") {
  auto U = build_umbrella(2, 1);
  REQUIRE(U.generator_count() == 8);
  CHECK((*U.alphabet)[0].name == "x0");
  CHECK((*U.alphabet)[U.y(2)].name == "y2");
  CHECK(U.alphabet->weight(U.y(1)) == 2);
  CHECK(U.alphabet->weight(U.X(0)) == 1);
  CHECK(U.presentation.f(U.x(1), U.x(2)) == P(U.alphabet, "x0"));
  CHECK(U.presentation.f(U.y(1), U.y(2)) == P(U.alphabet, "1/3 x0 x0 x0"));
  CHECK(U.presentation.relation(U.y(1), U.y(2)) == P(U.alphabet, "y2 y1 - y1 y2 + 1/3 x0 x0 x0"));
  CHECK(U.presentation.f(U.x(0), U.y(1)).is_zero());
  // f(X, y_i) = -sum_k M_ik y_k with M = e12 = X1
  CHECK(U.presentation.f(U.X(0), U.y(2)).is_zero());
  CHECK(U.presentation.f(U.X(0), U.y(1)) == P(U.alphabet, "-y2"));
  CHECK(U.presentation.f(U.x(1), U.X(0)) == P(U.alphabet, "x2"));
}

TEST_CASE("UM(r,0) is commutative on the vector part") {
  auto U = build_umbrella(3, 0);
  CHECK(U.lie_dim() == 9);
  for (int i = 0; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) CHECK(U.presentation.f(U.x(i), U.x(j)).is_zero());
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) CHECK(U.presentation.f(U.y(i), U.y(j)).is_zero());
}

TEST_CASE("generator Hopf data") {
  auto U = build_umbrella(2, 1);
  const auto& d = U.hopf.delta;
  const NCPoly one = NCPoly::constant(U.alphabet, 1);
  CHECK(d[U.x(0)] == TensorPoly::pure(P(U.alphabet, "x0"), one) + TensorPoly::pure(one, P(U.alphabet, "x0")));
  const TensorPoly dy = TensorPoly::pure(P(U.alphabet, "y1"), one) + TensorPoly::pure(one, P(U.alphabet, "y1")) +
                        TensorPoly::pure(P(U.alphabet, "x0"), P(U.alphabet, "x1")) -
                        TensorPoly::pure(P(U.alphabet, "x1"), P(U.alphabet, "x0"));
  CHECK(d[U.y(1)] == dy);
  CHECK(U.hopf.antipode[U.X(1)] == -U.gen(U.X(1)));
  for (const auto& c : U.hopf.counit) CHECK(c == 0);
  CHECK(format_tensor(d[U.x(1)]) == "x1 ⊗ 1 + 1 ⊗ x1");
}

TEST_CASE("iso_map: identity, scaling, permutation, random congruences") {
  {
    auto U = build_umbrella(2, 1);
    auto rep = iso_map(U, U, RationalMatrix::identity(2));
    CHECK(rep.verified);
    for (int g = 0; g < static_cast<int>(U.generator_count()); ++g) CHECK(rep.images[g] == U.gen(g));
  }
  {
    // P A P^T = diag(1,1/2) A diag(1,1/2) = 1/2 A
    auto U = build_umbrella(2, 1);
    RationalMatrix Pm{{1, 0}, {0, Scalar(1, 2)}};
    auto V = build_umbrella(Pm * U.A() * Pm.transpose());
    auto rep = iso_map(U, V, Pm);
    CHECK(rep.verified);
    CHECK(rep.failures.empty());
    // Q = P^-T = diag(1,2): x2 -> 2 x2'
    CHECK(rep.images[U.x(2)] == P(V.alphabet, "2 x2"));
  }
  {
    auto U = build_umbrella(4, 1);
    RationalMatrix swap34(4, 4);
    swap34(0, 0) = swap34(1, 1) = swap34(2, 3) = swap34(3, 2) = 1;
    CHECK(swap34 * U.A() * swap34.transpose() == U.A());
    auto rep = iso_map(U, U, swap34);
    CHECK(rep.verified);
    CHECK(rep.images[U.x(3)] == U.gen(U.x(4)));
  }
  std::mt19937_64 rng(testsupport::kSeed);
  for (int t = 0; t < 6; ++t) {
    const int r = 2 + t % 3;
    const int s = (t % 2 == 0) ? r / 2 : 0;
    auto U = build_umbrella(r, s);
    const RationalMatrix Pm = random_invertible(rng, static_cast<std::size_t>(r));
    auto V = build_umbrella(Pm * U.A() * Pm.transpose());
    auto rep = iso_map(U, V, Pm);
    CHECK(rep.verified);
    CHECK(rep.failures.empty());
  }
  {
    auto U = build_umbrella(2, 1);
    CHECK_THROWS(iso_map(U, U, RationalMatrix{{2, 0}, {0, 1}}));
  }
}

TEST_CASE("normalizing an arbitrary matrix gives an isomorphic block algebra") {
  RationalMatrix A{{0, 2, 1}, {-2, 0, 3}, {-1, -3, 0}};
  auto c = congruence_normalize(A);
  auto U = build_umbrella(A);
  auto V = build_umbrella(c.B);
  CHECK(V.s == 1);
  CHECK(iso_map(U, V, c.P).verified);
}

TEST_CASE("small example with the twisted coproduct") {
  for (const Scalar lambda : {Scalar(0), Scalar(1), Scalar(-2, 3)}) {
    auto W = build_wzz_example(lambda);
    QuotientHopf H(W.presentation, W.hopf);
    const auto v = H.verify();
    CHECK(v.confluence.confluent);
    CHECK(v.pass);
    const AlphabetPtr& a = H.alphabet_ptr();
    CHECK(H.nf(P(a, "x y")) == P(a, "y x + y"));
    CHECK(H.nf(P(a, "z x")) == P(a, "x z - z") + lambda * P(a, "y"));
    CHECK(H.delta_reduced(P(a, "z")) == TensorPoly::pure(P(a, "x"), P(a, "y")) - TensorPoly::pure(P(a, "y"), P(a, "x")));
    CHECK(H.antipode(P(a, "z")) == H.nf(P(a, "-z + x y - y x")));
  }
}

TEST_CASE("presentation JSON round trip") {
  for (auto [r, s] : {std::pair{2, 1}, {3, 0}}) {
    auto U = build_umbrella(r, s);
    const json j = presentation_to_json(U.presentation, U.hopf);
    const auto back = presentation_from_json(j);
    CHECK(back.presentation.alphabet() == U.presentation.alphabet());
    for (int i = 0; i < static_cast<int>(U.generator_count()); ++i) {
      for (int k = i + 1; k < static_cast<int>(U.generator_count()); ++k)
        CHECK(back.presentation.f(i, k) == P(back.presentation.alphabet_ptr(), format_polynomial(U.presentation.f(i, k))));
    }
    CHECK(presentation_to_json(back.presentation, back.hopf).dump() == j.dump());
  }
}
