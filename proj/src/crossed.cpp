#include "umbrella/crossed.hpp"

#include <stdexcept>

#include "umbrella/literal.hpp"

namespace umb {

namespace {

int degree(const Exponents& a) {
  int d = 0;
  for (int x : a) d += x;
  return d;
}

Exponents add(const Exponents& a, const Exponents& b) {
  Exponents c(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

Exponents sub(const Exponents& a, const Exponents& b) {
  Exponents c(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
  return c;
}

Exponents unit(int r, int i) {
  Exponents e(static_cast<std::size_t>(r), 0);
  e[static_cast<std::size_t>(i - 1)] = 1;
  return e;
}

std::string show(const Exponents& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

void collect(int r, int pos, int remaining, Exponents& cur, std::vector<Exponents>& out) {
  if (pos == r) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur[static_cast<std::size_t>(pos)] = k;
    collect(r, pos + 1, remaining - k, cur, out);
  }
  cur[static_cast<std::size_t>(pos)] = 0;
}

}  // namespace

std::vector<Exponents> exponent_vectors(int r, int lo, int hi) {
  std::vector<Exponents> out;
  Exponents cur(static_cast<std::size_t>(r), 0);
  for (int d = std::max(lo, 0); d <= hi; ++d) collect(r, 0, d, cur, out);
  return out;
}

std::vector<Exponents> sub_vectors(const Exponents& a) {
  std::vector<Exponents> out{Exponents(a.size(), 0)};
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<Exponents> next;
    for (const auto& b : out) {
      for (int k = 0; k <= a[i]; ++k) {
        Exponents c(b);
        c[i] = k;
        next.push_back(std::move(c));
      }
    }
    out = std::move(next);
  }
  return out;
}

Scalar multi_binomial(const Exponents& a, const Exponents& b) {
  mpz_class total = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(a[i]), static_cast<unsigned long>(b[i]));
    total *= c;
  }
  return Scalar(total);
}

CrossedData::CrossedData(const UmbrellaAlgebra& U, const QuotientHopf& H) : U_(U), H_(H), r_(U.r) {}

NCPoly CrossedData::chi(const Exponents& a) const {
  Word w;
  for (int i = 1; i <= r_; ++i)
    for (int k = 0; k < a[static_cast<std::size_t>(i - 1)]; ++k) w += Word::letter(U_.y(i));
  return H_.nf(NCPoly(U_.alphabet, w));
}

NCPoly CrossedData::chi_prime(const Exponents& a) const {
  Word w;
  for (int i = r_; i >= 1; --i)
    for (int k = 0; k < a[static_cast<std::size_t>(i - 1)]; ++k) w += Word::letter(U_.y(i));
  NCPoly out = H_.nf(NCPoly(U_.alphabet, w));
  if (degree(a) % 2) out *= -1;
  return out;
}

NCPoly CrossedData::sigma(const Exponents& u, const Exponents& v) const {
  auto key = std::make_pair(u, v);
  auto it = sigma_memo_.find(key);
  if (it != sigma_memo_.end()) return it->second;
  NCPoly out(U_.alphabet);
  for (const auto& b : sub_vectors(u)) {
    for (const auto& c : sub_vectors(v)) {
      const Scalar coeff = multi_binomial(u, b) * multi_binomial(v, c);
      out.add_scaled(H_.nf(chi(b) * chi(c) * chi_prime(add(sub(u, b), sub(v, c)))), coeff);
    }
  }
  return sigma_memo_.emplace(key, std::move(out)).first->second;
}

TensorPoly CrossedData::tau(int i) const {
  TensorPoly out(U_.alphabet, 2);
  const TensorPoly full = H_.coproduct(chi(unit(r_, i)));
  for (const auto& [t, c] : full.terms()) {
    bool y_free = true;
    for (const auto& w : t)
      for (std::size_t k = 0; k < w.size(); ++k)
        if (U_.is_y(w[k])) y_free = false;
    if (y_free) out.add_term(t, c);
  }
  return out;
}

CrossedReport verify_crossed_product(const UmbrellaAlgebra& U, const QuotientHopf& H, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("degree cutoff must be >= 0");
  CrossedReport rep;
  CrossedData D(U, H);
  const int r = U.r;
  const Exponents zero(static_cast<std::size_t>(r), 0);
  const NCPoly one = NCPoly::constant(U.alphabet, 1);
  const NCPoly x0 = U.gen(U.x(0));
  const auto all = exponent_vectors(r, 0, cutoff);

  // normalization and the cocycle identity with trivial action
  for (const auto& a : all) {
    const NCPoly eps = degree(a) == 0 ? one : NCPoly(U.alphabet);
    if (!(D.sigma(zero, a) == eps)) rep.normalization_and_cocycle.fail("sigma(1," + show(a) + ")", format_polynomial(D.sigma(zero, a) - eps));
    if (!(D.sigma(a, zero) == eps)) rep.normalization_and_cocycle.fail("sigma(" + show(a) + ",1)", format_polynomial(D.sigma(a, zero) - eps));
  }
  for (const auto& a : all) {
    for (const auto& b : all) {
      if (degree(a) + degree(b) > cutoff) continue;
      for (const auto& c : all) {
        if (degree(a) + degree(b) + degree(c) > cutoff) continue;
        NCPoly lhs(U.alphabet), rhs(U.alphabet);
        for (const auto& b1 : sub_vectors(b)) {
          const Exponents b2 = sub(b, b1);
          const Scalar cb = multi_binomial(b, b1);
          for (const auto& c1 : sub_vectors(c)) {
            const Scalar cc = cb * multi_binomial(c, c1);
            lhs.add_scaled(H.nf(D.sigma(b1, c1) * D.sigma(a, add(b2, sub(c, c1)))), cc);
          }
          for (const auto& a1 : sub_vectors(a)) {
            const Scalar ca = cb * multi_binomial(a, a1);
            rhs.add_scaled(H.nf(D.sigma(a1, b1) * D.sigma(add(sub(a, a1), b2), c)), ca);
          }
        }
        if (!(lhs == rhs))
          rep.normalization_and_cocycle.fail("cocycle identity at " + show(a) + show(b) + show(c),
                                             format_polynomial(lhs - rhs));
      }
    }
  }

  // values on pairs of generators
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j <= r; ++j) {
      NCPoly expected(U.alphabet);
      if (i > j) expected = power(x0, 3) * (-U.A()(j - 1, i - 1) / 3);
      const NCPoly got = D.sigma(unit(r, i), unit(r, j));
      if (!(got == expected))
        rep.cocycle_values.fail("sigma(y" + std::to_string(i) + ",y" + std::to_string(j) + ")",
                                format_polynomial(got - expected));
    }
  }

  // chi * chi' = 0 in positive degree
  for (const auto& a : exponent_vectors(r, 1, cutoff)) {
    NCPoly conv(U.alphabet);
    for (const auto& b : sub_vectors(a)) conv.add_scaled(H.nf(D.chi(b) * D.chi_prime(sub(a, b))), multi_binomial(a, b));
    if (!conv.is_zero()) rep.convolution_inverse.fail("convolution at " + show(a), format_polynomial(conv));
  }

  // (h # a)(g # b) = sum h g sigma(a1,b1) # a2 b2, for h, g in {1, x0..xr}
  std::vector<NCPoly> coeffs{one};
  for (int i = 0; i <= r; ++i) coeffs.push_back(U.gen(U.x(i)));
  for (const auto& a : all) {
    for (const auto& b : all) {
      if (degree(a) + degree(b) > cutoff) continue;
      for (const auto& h : coeffs) {
        for (const auto& g : coeffs) {
          const NCPoly direct = H.nf(h * D.chi(a) * g * D.chi(b));
          NCPoly formula(U.alphabet);
          for (const auto& a1 : sub_vectors(a))
            for (const auto& b1 : sub_vectors(b))
              formula.add_scaled(H.nf(h * g * D.sigma(a1, b1) * D.chi(add(sub(a, a1), sub(b, b1)))),
                                 multi_binomial(a, a1) * multi_binomial(b, b1));
          if (!(direct == formula))
            rep.product_formula.fail("(" + format_polynomial(h) + " # " + show(a) + ")(" + format_polynomial(g) +
                                         " # " + show(b) + ")",
                                     format_polynomial(direct - formula));
        }
      }
    }
  }

  // tau(ybar_i) = x0 (x) x_i - x_i (x) x0 = delta(y_i)
  for (int i = 1; i <= r; ++i) {
    const NCPoly xi = U.gen(U.x(i));
    const TensorPoly expected = TensorPoly::pure(x0, xi) - TensorPoly::pure(xi, x0);
    const TensorPoly t = D.tau(i);
    if (!(t == expected)) rep.cococycle.fail("tau(y" + std::to_string(i) + ")", format_tensor(t - expected));
    const TensorPoly d = H.delta_reduced(U.gen(U.y(i)));
    if (!(t == d)) rep.cococycle.fail("tau(y" + std::to_string(i) + ") vs delta(y" + std::to_string(i) + ")",
                                      format_tensor(t - d));
  }

  // [M, x_i y_j] against both sign orientations of the action table
  bool displayed_ok = true, opposite_ok = true;
  std::string first_mismatch;
  for (std::size_t a = 0; a < U.lie_dim(); ++a) {
    const RationalMatrix& M = U.lie.basis[a];
    const NCPoly X = U.gen(U.X(static_cast<int>(a)));
    for (int i = 1; i <= r; ++i) {
      for (int j = 1; j <= r; ++j) {
        const NCPoly xy = U.gen(U.x(i)) * U.gen(U.y(j));
        const NCPoly got = H.nf(commutator(X, xy));
        NCPoly table(U.alphabet);
        for (int k = 1; k <= r; ++k) {
          table.add_scaled(U.gen(U.x(k)) * U.gen(U.y(j)), -M(i - 1, k - 1));
          table.add_scaled(U.gen(U.x(i)) * U.gen(U.y(k)), -M(j - 1, k - 1));
        }
        table = H.nf(table);
        if (!(got == table)) {
          displayed_ok = false;
          if (first_mismatch.empty())
            first_mismatch = "[X" + std::to_string(a + 1) + ", x" + std::to_string(i) + " y" + std::to_string(j) + "]";
        }
        if (!(got == -table)) opposite_ok = false;
      }
    }
  }
  if (U.lie_dim() == 0) opposite_ok = false;
  rep.action_orientation = displayed_ok && opposite_ok ? "both" : displayed_ok ? "displayed" : opposite_ok ? "opposite" : "neither";
  rep.action.notes.push_back("action table matches H with orientation: " + rep.action_orientation);
  if (!displayed_ok && !opposite_ok) rep.action.fail("action table", "no orientation matches, first at " + first_mismatch);

  rep.pass = rep.normalization_and_cocycle.pass && rep.cocycle_values.pass && rep.convolution_inverse.pass &&
             rep.product_formula.pass && rep.cococycle.pass && rep.action.pass;
  return rep;
}

}  // namespace umb
