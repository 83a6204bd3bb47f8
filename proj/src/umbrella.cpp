#include "umbrella/umbrella.hpp"

#include <stdexcept>

#include "umbrella/literal.hpp"
#include "umbrella/nakayama.hpp"

namespace umb {

HopfData primitive_hopf_data(const AlphabetPtr& alphabet) {
  HopfData h;
  const NCPoly one = NCPoly::constant(alphabet, 1);
  for (int id = 0; id < static_cast<int>(alphabet->size()); ++id) {
    const NCPoly z = NCPoly::generator(alphabet, id);
    h.delta.push_back(TensorPoly::pure(z, one) + TensorPoly::pure(one, z));
    h.counit.push_back(0);
    h.antipode.push_back(-z);
  }
  return h;
}

UmbrellaAlgebra::UmbrellaAlgebra(LieData lie_, AlphabetPtr alphabet_, Presentation presentation_, HopfData hopf_)
    : r(lie_.r), s(lie_.s), lie(std::move(lie_)), alphabet(std::move(alphabet_)),
      presentation(std::move(presentation_)), hopf(std::move(hopf_)) {}

NCPoly UmbrellaAlgebra::lie_element(const RationalMatrix& M) const {
  const auto c = lie.coordinates(M);
  NCPoly out(alphabet);
  for (std::size_t a = 0; a < c.size(); ++a) out.add_term(Word::letter(X(static_cast<int>(a))), c[a]);
  return out;
}

namespace {

AlphabetPtr umbrella_alphabet(int r, std::size_t d) {
  std::vector<Alphabet::Entry> entries;
  for (int i = 0; i <= r; ++i) entries.push_back({"x" + std::to_string(i), 1});
  for (std::size_t a = 1; a <= d; ++a) entries.push_back({"X" + std::to_string(a), 1});
  for (int i = 1; i <= r; ++i) entries.push_back({"y" + std::to_string(i), 2});
  return make_alphabet(entries);
}

}  // namespace

UmbrellaAlgebra build_umbrella(const RationalMatrix& A) {
  LieData lie = so_basis(A);
  const int r = lie.r;
  const auto d = static_cast<int>(lie.dim());
  AlphabetPtr alpha = umbrella_alphabet(r, lie.dim());
  Presentation p(alpha);
  auto g = [&](int id) { return NCPoly::generator(alpha, id); };
  auto x = [&](int i) { return i; };
  auto X = [&](int a) { return r + 1 + a; };
  auto y = [&](int i) { return r + d + i; };
  const NCPoly x0 = g(0);
  const NCPoly x0_cubed = power(x0, 3);
  for (int i = 1; i <= r; ++i) {
    for (int j = i + 1; j <= r; ++j) {
      const Scalar& a = A(i - 1, j - 1);
      if (is_zero(a)) continue;
      p.set_f(x(i), x(j), x0 * a);
      p.set_f(y(i), y(j), x0_cubed * (a / 3));
    }
  }
  for (int a = 0; a < d; ++a) {
    const RationalMatrix& M = lie.basis[a];
    for (int i = 1; i <= r; ++i) {
      NCPoly fx(alpha), fy(alpha);
      for (int k = 1; k <= r; ++k) {
        const Scalar& m = M(i - 1, k - 1);
        if (is_zero(m)) continue;
        fx.add_term(Word::letter(x(k)), m);
        fy.add_term(Word::letter(y(k)), -m);
      }
      p.set_f(x(i), X(a), std::move(fx));
      p.set_f(X(a), y(i), std::move(fy));
    }
    for (int b = a + 1; b < d; ++b) {
      NCPoly f(alpha);
      for (int e = 0; e < d; ++e) f.add_term(Word::letter(X(e)), lie.structure[a][b][e]);
      p.set_f(X(a), X(b), std::move(f));
    }
  }
  p.meta.family = "UM";
  p.meta.r = r;
  p.meta.s = lie.s;
  p.meta.A = A;

  HopfData h = primitive_hopf_data(alpha);
  for (int i = 1; i <= r; ++i) {
    h.delta[y(i)] += TensorPoly::pure(x0, g(x(i))) - TensorPoly::pure(g(x(i)), x0);
  }
  return UmbrellaAlgebra(std::move(lie), alpha, std::move(p), std::move(h));
}

UmbrellaAlgebra build_umbrella(int r, int s) { return build_umbrella(block_form(r, s)); }

Presentation build_presentation(const RationalMatrix& A) { return build_umbrella(A).presentation; }
HopfData build_hopf_data(const RationalMatrix& A) { return build_umbrella(A).hopf; }

int gkdim(int r, int s) {
  if (s < 0 || r < 2 * s) throw std::invalid_argument("gkdim needs r >= 2s >= 0");
  return so_dimension(r, s) + 2 * r + 1;
}


IsoReport iso_map(const UmbrellaAlgebra& source, const UmbrellaAlgebra& target, const RationalMatrix& P) {
  if (P.rows() != static_cast<std::size_t>(source.r) || !P.is_square() || source.r != target.r)
    throw std::invalid_argument("congruence precondition violated: shape mismatch");
  if (!(P * source.A() * P.transpose() == target.A()))
    throw std::invalid_argument("congruence precondition violated: P A P^T != A'");
  const auto Pinv = inverse(P);
  if (!Pinv) throw std::invalid_argument("congruence precondition violated: P is singular");
  const RationalMatrix Q = Pinv->transpose();
  const int r = source.r;

  IsoReport rep;
  rep.images.assign(source.generator_count(), NCPoly(target.alphabet));
  rep.images[0] = target.gen(0);
  for (int i = 1; i <= r; ++i) {
    NCPoly xi(target.alphabet), yi(target.alphabet);
    for (int j = 1; j <= r; ++j) {
      const Scalar& q = Q(j - 1, i - 1);
      xi.add_term(Word::letter(target.x(j)), q);
      yi.add_term(Word::letter(target.y(j)), q);
    }
    rep.images[source.x(i)] = std::move(xi);
    rep.images[source.y(i)] = std::move(yi);
  }
  // Q^-T M Q^T = P M P^-1
  for (std::size_t a = 0; a < source.lie_dim(); ++a) {
    const RationalMatrix M = P * source.lie.basis[a] * *Pinv;
    NCPoly img(target.alphabet);
    try {
      img = target.lie_element(M);
    } catch (const std::invalid_argument&) {
      rep.failures.push_back("image of " + source.alphabet->operator[](source.X(static_cast<int>(a))).name +
                             " is outside so(A')");
    }
    rep.images[source.X(static_cast<int>(a))] = std::move(img);
  }
  if (!rep.failures.empty()) return rep;

  ReductionSystem rs(target.presentation);
  const int n = static_cast<int>(source.generator_count());
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      const NCPoly res = rs.normal_form(substitute(source.presentation.relation(i, j), rep.images, target.alphabet));
      if (!res.is_zero())
        rep.failures.push_back("relation (" + source.alphabet->operator[](i).name + "," +
                               source.alphabet->operator[](j).name + ") -> " + format_polynomial(res));
    }
  }
  // (Phi (x) Phi) Delta z = Delta' Phi(z) on generators
  for (int id = 0; id < n; ++id) {
    TensorPoly lhs(target.alphabet, 2);
    for (const auto& [t, c] : source.hopf.delta[id].terms()) {
      NCPoly a = substitute(NCPoly(source.alphabet, t[0]), rep.images, target.alphabet);
      NCPoly b = substitute(NCPoly(source.alphabet, t[1]), rep.images, target.alphabet);
      lhs.add_scaled(TensorPoly::pure(rs.normal_form(a), rs.normal_form(b)), c);
    }
    TensorPoly rhs(target.alphabet, 2);
    for (const auto& [w, c] : rep.images[id].terms()) {
      // images are linear in generators
      rhs.add_scaled(target.hopf.delta[w[0]], c);
    }
    TensorPoly diff = lhs - rhs;
    TensorPoly normal(target.alphabet, 2);
    for (const auto& [t, c] : diff.terms())
      normal.add_scaled(TensorPoly::pure(rs.normal_form(t[0]), rs.normal_form(t[1])), c);
    if (!normal.is_zero())
      rep.failures.push_back("coproduct of " + source.alphabet->operator[](id).name + " -> " + format_tensor(normal));
  }
  rep.verified = rep.failures.empty();
  return rep;
}

WzzExample build_wzz_example(const Scalar& lambda) {
  AlphabetPtr alpha = make_alphabet({{"y", 1}, {"x", 1}, {"z", 2}});
  const int y = 0, x = 1, z = 2;
  Presentation p(alpha);
  auto g = [&](int id) { return NCPoly::generator(alpha, id); };
  p.set_f(y, x, -g(y));                  // [y,x] = -y
  p.set_f(x, z, g(z) - g(y) * lambda);   // [x,z] = z - lambda y
  p.meta.family = "WZZ";
  p.meta.lambda = lambda;
  HopfData h = primitive_hopf_data(alpha);
  h.delta[z] += TensorPoly::pure(g(x), g(y)) - TensorPoly::pure(g(y), g(x));
  h.antipode[z] = -g(z) + g(x) * g(y) - g(y) * g(x);
  return {std::move(p), std::move(h)};
}

}  // namespace umb
