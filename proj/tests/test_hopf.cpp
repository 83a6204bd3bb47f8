#include <doctest.h>

#include <functional>
#include <memory>
#include <random>

#include "support.hpp"
#include "umbrella/crossed.hpp"
#include "umbrella/filtration.hpp"
#include "umbrella/hopf.hpp"
#include "umbrella/nakayama.hpp"

using namespace umb;
using testsupport::P;

namespace {

std::unique_ptr<QuotientHopf> verified(const UmbrellaAlgebra& U) {
  auto H = std::make_unique<QuotientHopf>(U.presentation, U.hopf);
  REQUIRE(H->verify().pass);
  return H;
}

TensorPoly T(const AlphabetPtr& a, const std::string& l, const std::string& r) { return TensorPoly::pure(P(a, l), P(a, r)); }

// The y-pair relation with 1/3 replaced by c.
Presentation mutant(const UmbrellaAlgebra& U, const Scalar& c) {
  Presentation p = U.presentation;
  for (int i = 1; i <= U.r; ++i)
    for (int j = i + 1; j <= U.r; ++j)
      if (U.A()(i - 1, j - 1) != 0) p.set_f(U.y(i), U.y(j), c * U.A()(i - 1, j - 1) * P(U.alphabet, "x0 x0 x0"));
  return p;
}

// sorted words of weight <= W by brute force over all words
std::size_t sorted_words(const Alphabet& a, int W) {
  std::size_t n = 0;
  std::function<void(int, int)> rec = [&](int last, int budget) {
    ++n;
    for (int id = last; id < static_cast<int>(a.size()); ++id)
      if (a.weight(id) <= budget) rec(id, budget - a.weight(id));
  };
  rec(0, W);
  return n;
}

}  // namespace

TEST_CASE("coproduct examples") {
  auto U = build_umbrella(2, 1);
  auto held = verified(U);
  QuotientHopf& H = *held;
  const auto& a = U.alphabet;
  CHECK(H.coproduct(NCPoly::constant(a, 1)) == T(a, "1", "1"));
  CHECK(H.coproduct(P(a, "x0 x1")) == T(a, "x0 x1", "1") + T(a, "x0", "x1") + T(a, "x1", "x0") + T(a, "1", "x0 x1"));
  CHECK(H.coproduct(P(a, "y1")) == T(a, "y1", "1") + T(a, "1", "y1") + T(a, "x0", "x1") - T(a, "x1", "x0"));
  CHECK(H.delta_reduced(P(a, "x1")).is_zero());
  CHECK(H.delta_reduced(P(a, "y1")) == T(a, "x0", "x1") - T(a, "x1", "x0"));
  CHECK(H.delta_reduced(P(a, "x0 x0")) == Scalar(2) * T(a, "x0", "x0"));
  CHECK_THROWS(H.delta_reduced(P(a, "x0 + 1")));
  CHECK(H.counit(P(a, "3 + x0")) == 3);
  CHECK(H.antipode(P(a, "y1")) == P(a, "-y1"));
  CHECK(H.antipode(P(a, "x1 x2")) == H.nf(P(a, "x2 x1")));
}

TEST_CASE("Hopf ideal holds on the families") {
  for (auto [r, s] : {std::pair{2, 1}, {3, 1}, {4, 2}, {3, 0}}) {
    auto U = build_umbrella(r, s);
    QuotientHopf H(U.presentation, U.hopf);
    const auto res = check_hopf_ideal(H);
    CHECK(res.pass);
    CHECK(res.failures.empty());
  }
  auto a = make_alphabet({{"a", 1}, {"b", 1}});
  QuotientHopf comm(Presentation(a), primitive_hopf_data(a));
  CHECK(check_hopf_ideal(comm).pass);
}

TEST_CASE("Hopf ideal check refuses a non-confluent system") {
  auto a = make_alphabet({{"a", 1}, {"b", 1}, {"c", 1}});
  Presentation p(a);
  p.set_f(0, 1, P(a, "c"));
  p.set_f(1, 2, P(a, "a"));
  p.set_f(0, 2, P(a, "-a"));
  QuotientHopf H(p, primitive_hopf_data(a));
  CHECK_THROWS_AS(check_hopf_ideal(H), std::logic_error);
  CHECK(!H.verify().pass);
}

TEST_CASE("mutant y-relation fails exactly on the A-nonzero pairs") {
  // Delta of y_j y_i - y_i y_j + c A_ij x0^3 leaves (3c - 1) A_ij (x0^2 (x) x0 + x0 (x) x0^2).
  {
    auto U = build_umbrella(2, 1);
    QuotientHopf H(mutant(U, Scalar(1, 2)), U.hopf);
    const auto res = check_hopf_ideal(H);
    CHECK(!res.pass);
    REQUIRE(res.failures.size() == 1);
    CHECK(res.failures[0].what == "coproduct of relation (y1,y2)");
    const auto& a = U.alphabet;
    const TensorPoly expected = Scalar(1, 2) * (T(a, "x0 x0", "x0") + T(a, "x0", "x0 x0"));
    CHECK(H.coproduct(H.presentation().relation(U.y(1), U.y(2))) == expected);
    CHECK(res.failures[0].residue == format_tensor(expected));
  }
  {
    auto U = build_umbrella(4, 2);
    QuotientHopf H(mutant(U, Scalar(1, 2)), U.hopf);
    const auto res = check_hopf_ideal(H);
    std::vector<std::string> got;
    for (const auto& f : res.failures) got.push_back(f.what);
    CHECK(got == std::vector<std::string>{"coproduct of relation (y1,y2)", "coproduct of relation (y3,y4)"});
  }
  {
    // c = 1/3 is the only value that works
    auto U = build_umbrella(2, 1);
    QuotientHopf H(mutant(U, Scalar(1, 3)), U.hopf);
    CHECK(check_hopf_ideal(H).pass);
  }
}

TEST_CASE("coalgebra axioms") {
  for (auto [r, s] : {std::pair{2, 1}, {3, 1}}) {
    auto U = build_umbrella(r, s);
    QuotientHopf H(U.presentation, U.hopf);
    const auto v = H.verify();
    CHECK(v.pass);
    REQUIRE(v.coalgebra);
    CHECK(v.coalgebra->pass);
  }
}

TEST_CASE("random relation sandwiches lie in the kernel of the coproduct") {
  auto U = build_umbrella(2, 1);
  auto held = verified(U);
  QuotientHopf& H = *held;
  std::mt19937_64 rng(testsupport::kSeed + 9);
  const int n = static_cast<int>(U.generator_count());
  std::uniform_int_distribution<int> g(0, n - 1);
  for (int t = 0; t < 40; ++t) {
    int i = g(rng), j = g(rng);
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    const NCPoly u(U.alphabet, testsupport::random_word(rng, *U.alphabet, 2));
    const NCPoly v(U.alphabet, testsupport::random_word(rng, *U.alphabet, 2));
    CHECK(H.coproduct(u * U.presentation.relation(i, j) * v).is_zero());
  }
}

TEST_CASE("coassociativity on random normal monomials") {
  auto U = build_umbrella(3, 1);
  auto held = verified(U);
  QuotientHopf& H = *held;
  for (const Word& w : sample_normal_words(*U.alphabet, 4, 30, 99)) {
    const TensorPoly d = H.coproduct(w);
    TensorPoly left(U.alphabet, 3), right(U.alphabet, 3);
    for (const auto& [t, c] : d.terms()) {
      const TensorPoly dl = H.coproduct(t[0]);
      for (const auto& [s, e] : dl.terms()) left.add_term({s[0], s[1], t[1]}, c * e);
      const TensorPoly dr = H.coproduct(t[1]);
      for (const auto& [s, e] : dr.terms()) right.add_term({t[0], s[0], s[1]}, c * e);
    }
    CHECK(left == right);
  }
}

TEST_CASE("coradical order") {
  auto U = build_umbrella(2, 1);
  auto held = verified(U);
  QuotientHopf& H = *held;
  const auto& a = U.alphabet;
  CHECK(order(H, P(a, "5")) == 0);
  CHECK(order(H, P(a, "x1")) == 1);
  CHECK(order(H, P(a, "y1")) == 2);
  CHECK(order(H, P(a, "x0 x0 x0")) == 3);
  CHECK(order(H, P(a, "x1 y2 + x0")) == 3);
  CHECK_THROWS_WITH_AS(order(H, P(a, "x0 x0 x0 x0 x0"), 3), "order > cutoff", std::runtime_error);
  CHECK_THROWS(order(H, NCPoly(a)));
  // order(uv) <= order(u) + order(v)
  const auto words = sample_normal_words(*a, 3, 20, 5);
  for (std::size_t p = 0; p + 1 < words.size(); ++p) {
    const NCPoly u(a, words[p]), v(a, words[p + 1]);
    const NCPoly uv = H.nf(u * v);
    if (uv.is_zero()) continue;
    CHECK(order(H, uv) <= order(H, u) + order(H, v));
  }
}

TEST_CASE("primitive spaces") {
  {
    auto U = build_umbrella(2, 1);
    auto held = verified(U);
  QuotientHopf& H = *held;
    CHECK(primitive_space(H, 1).size() == 6);
    CHECK(primitive_space(H, 2).size() == 6);
    CHECK(primitive_space(H, 3).size() == 6);
    for (const auto& p : primitive_space(H, 2)) CHECK(H.delta_reduced(p).is_zero());
  }
  {
    auto U = build_umbrella(4, 2);
    auto held = verified(U);
  QuotientHopf& H = *held;
    CHECK(primitive_space(H, 2).size() == 15);
  }
  {
    auto W = build_wzz_example(0);
    QuotientHopf H(W.presentation, W.hopf);
    REQUIRE(H.verify().pass);
    CHECK(primitive_space(H, 2).size() == 2);
  }
}

TEST_CASE("commutator filtration on UM(2,2)") {
  auto U = build_umbrella(2, 1);
  auto held = verified(U);
  QuotientHopf& H = *held;
  const auto one = check_commutator_filtration(H, 1, 5);
  CHECK(one.result.pass);
  CHECK(one.violations == 0);
  CHECK(one.pairs > 0);
  const auto two = check_commutator_filtration(H, 2, 4);
  CHECK(!two.result.pass);
  CHECK(two.violations > 0);
  CHECK(two.witness == "[x1, x2] = x0 has order 1");
  CHECK(two.result.failures.size() <= 50);
}

TEST_CASE("commutator filtration on a commutative algebra") {
  auto a = make_alphabet({{"a", 1}, {"b", 1}, {"c", 2}});
  QuotientHopf H(Presentation(a), primitive_hopf_data(a));
  REQUIRE(H.verify().pass);
  for (int k = 1; k <= 4; ++k) CHECK(check_commutator_filtration(H, k, 4).result.pass);
}

TEST_CASE("commutator filtration on UM(4,4) up to bound 5" * doctest::timeout(600)) {
  auto U = build_umbrella(4, 2);
  auto held = verified(U);
  QuotientHopf& H = *held;
  const auto rep = check_commutator_filtration(H, 1, 5);
  CHECK(rep.result.pass);
  CHECK(rep.violations == 0);
}

TEST_CASE("coradical filtration: preimage recursion vs kernel characterization") {
  auto U = build_umbrella(2, 1);
  auto held = verified(U);
  QuotientHopf& H = *held;
  const auto v = cross_validate_filtration(H, 3, 4);
  CHECK(v.pass);
  REQUIRE(v.levels.size() == 4);
  for (const auto& L : v.levels) {
    CHECK(L.agree);
    CHECK(L.hilbert_agree);
    CHECK(L.preimage_dim == L.kernel_dim);
    CHECK(L.sum_dim == L.kernel_dim);
    CHECK(L.kernel_dim == sorted_words(*U.alphabet, L.m));
  }
  CHECK(v.levels[3].kernel_dim == 98);
}

TEST_CASE("Nakayama candidate") {
  for (int r = 0; r <= 5; ++r)
    for (int s = 0; 2 * s <= r; ++s) {
      if (r == 5 && s == 0) continue;
      auto U = build_umbrella(r, s);
      ReductionSystem R(U.presentation);
      const auto rep = verify_nakayama(U, R, nakayama_candidate(U));
      CHECK(rep.pass);
      if (r == 2 * s) {
        for (int g = 0; g < static_cast<int>(U.generator_count()); ++g)
          CHECK(nakayama_candidate(U).images[g] == U.gen(g));
      }
    }
  auto U = build_umbrella(5, 2);
  ReductionSystem R(U.presentation);
  const NCPoly e55 = U.lie_element(RationalMatrix::unit(5, 4, 4));
  REQUIRE(e55.size() == 1);
  const int id = e55.leading_word()[0];
  CHECK(phi_eta(U, R, id) == -2);
  CHECK(phi_eta_oracle(U, R, id) == -2);
  CHECK(phi_eta_left(U, R, id) == -6);
  auto sigma = nakayama_candidate(U);
  CHECK(sigma.images[id] == U.gen(id) - NCPoly::constant(U.alphabet, 2));
  sigma.images[id] = U.gen(id) + NCPoly::constant(U.alphabet, 1);
  const auto bad = verify_nakayama(U, R, sigma);
  CHECK(!bad.pass);
  CHECK(!bad.agreement.pass);
  CHECK(bad.agreement.failures.size() == 1);
}

TEST_CASE("crossed product data on UM(2,2)") {
  auto U = build_umbrella(2, 1);
  auto held = verified(U);
  QuotientHopf& H = *held;
  CrossedData D(U, H);
  const auto& a = U.alphabet;
  CHECK(D.sigma({0, 0}, {1, 0}).is_zero());
  // worked by hand from the defining sum
  CHECK(D.sigma({0, 1}, {1, 0}) == P(a, "-1/3 x0 x0 x0"));
  CHECK(D.sigma({1, 0}, {0, 1}).is_zero());
  CHECK(D.chi_prime({1, 1}) == P(a, "y1 y2 - 1/3 x0 x0 x0"));
  CHECK(exponent_vectors(2, 0, 2).size() == 6);
  CHECK(sub_vectors({2, 1}).size() == 6);
  CHECK(multi_binomial({4, 3}, {2, 1}) == 18);
  const auto rep = verify_crossed_product(U, H, 4);
  CHECK(rep.pass);
  CHECK(rep.normalization_and_cocycle.pass);
  CHECK(rep.cocycle_values.pass);
  CHECK(rep.convolution_inverse.pass);
  CHECK(rep.product_formula.pass);
  CHECK(rep.cococycle.pass);
  CHECK(rep.action.pass);
  CHECK(rep.action_orientation == "displayed");
}

TEST_CASE("crossed product on UM(4,4)") {
  auto U = build_umbrella(4, 2);
  auto held = verified(U);
  QuotientHopf& H = *held;
  const auto rep = verify_crossed_product(U, H, 2);
  CHECK(rep.pass);
}
