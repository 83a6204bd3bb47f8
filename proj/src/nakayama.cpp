#include "umbrella/nakayama.hpp"

#include <stdexcept>

#include "umbrella/literal.hpp"

namespace umb {

NCPoly substitute(const NCPoly& f, const std::vector<NCPoly>& images, const AlphabetPtr& target) {
  NCPoly out(target);
  for (const auto& [w, c] : f.terms()) {
    NCPoly term = NCPoly::constant(target, c);
    for (std::size_t k = 0; k < w.size(); ++k) term = term * images.at(static_cast<std::size_t>(w[k]));
    out += term;
  }
  return out;
}

AutomorphismData nakayama_candidate(const UmbrellaAlgebra& U) {
  AutomorphismData sigma;
  for (int id = 0; id < static_cast<int>(U.generator_count()); ++id) {
    NCPoly img = U.gen(id);
    if (U.is_lie(id)) img.add_term(Word{}, Scalar(2 - 2 * U.s) * U.lie.basis[U.lie_index(id)].trace());
    sigma.images.push_back(std::move(img));
  }
  return sigma;
}

namespace {

Scalar linear_coefficient(const NCPoly& f, int id) { return f.coefficient(Word::letter(id)); }

}  // namespace

Scalar phi_eta_oracle(const UmbrellaAlgebra& U, const ReductionSystem& R, int g) {
  Scalar t = 0;
  const NCPoly G = U.gen(g);
  for (int id = 0; id < static_cast<int>(U.generator_count()); ++id) {
    const NCPoly Z = U.gen(id);
    const NCPoly bracket = U.is_lie(id) ? commutator(G, Z) : commutator(Z, G);
    t += linear_coefficient(R.normal_form(bracket), id);
  }
  return t;
}

Scalar phi_eta_left(const UmbrellaAlgebra& U, const ReductionSystem& R, int g) {
  Scalar t = 0;
  const NCPoly G = U.gen(g);
  for (int id = 0; id < static_cast<int>(U.generator_count()); ++id)
    t += linear_coefficient(R.normal_form(commutator(G, U.gen(id))), id);
  return t;
}

Scalar phi_eta(const UmbrellaAlgebra& U, const ReductionSystem& R, int g) {
  Scalar value = 0;
  if (U.is_lie(g)) value = phi_eta(U.lie, U.lie.basis[U.lie_index(g)]);
  const Scalar oracle = phi_eta_oracle(U, R, g);
  if (value != oracle)
    throw std::logic_error("phi_eta disagrees with the bracket-trace oracle on " + U.alphabet->operator[](g).name);
  return value;
}

NakayamaReport verify_nakayama(const UmbrellaAlgebra& U, const ReductionSystem& R, const AutomorphismData& sigma) {
  NakayamaReport rep;
  const Alphabet& a = *U.alphabet;
  const int n = static_cast<int>(U.generator_count());
  if (static_cast<int>(sigma.images.size()) != n) throw std::invalid_argument("sigma must be total on generators");

  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      const NCPoly res = R.normal_form(substitute(U.presentation.relation(i, j), sigma.images, U.alphabet));
      if (!res.is_zero()) rep.automorphism.fail("relation (" + a[i].name + "," + a[j].name + ")", format_polynomial(res));
    }
  }
  for (int id = 0; id < n; ++id) {
    const Scalar phi = phi_eta(U, R, id);
    rep.phi.push_back(phi);
    const NCPoly shift = sigma.images[id] - U.gen(id);
    const NCPoly expected = NCPoly::constant(U.alphabet, phi);
    if (!(shift == expected))
      rep.agreement.fail("sigma(" + a[id].name + ") - " + a[id].name + " != " + to_string(phi),
                         format_polynomial(shift - expected));
    if (U.r == 2 * U.s && !shift.is_zero())
      rep.calabi_yau.fail("sigma(" + a[id].name + ") is not " + a[id].name, format_polynomial(shift));
  }
  rep.pass = rep.automorphism.pass && rep.agreement.pass && rep.calabi_yau.pass;
  return rep;
}

}  // namespace umb
