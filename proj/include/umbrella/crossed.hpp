#pragma once

#include <map>
#include <string>
#include <vector>

#include "umbrella/hopf.hpp"
#include "umbrella/umbrella.hpp"

namespace umb {

/// Exponent vector of a U(Y) monomial ybar_1^a_1 ... ybar_r^a_r.
using Exponents = std::vector<int>;

/// chi, chi' and the cocycle sigma on U(Y), evaluated inside H.
class CrossedData {
 public:
  CrossedData(const UmbrellaAlgebra& U, const QuotientHopf& H);

  int rank() const { return r_; }
  /// y_1^a_1 ... y_r^a_r
  NCPoly chi(const Exponents& a) const;
  /// (-1)^|a| NF(y_r^a_r ... y_1^a_1)
  NCPoly chi_prime(const Exponents& a) const;
  /// sum C(u,b) C(v,c) chi(b) chi(c) chi'(u-b + v-c)
  NCPoly sigma(const Exponents& u, const Exponents& v) const;
  /// (xi (x) xi) Delta chi(e_i): the y-free part of the coproduct.
  TensorPoly tau(int i) const;

 private:
  const UmbrellaAlgebra& U_;
  const QuotientHopf& H_;
  int r_;
  mutable std::map<std::pair<Exponents, Exponents>, NCPoly> sigma_memo_;
};

/// All exponent vectors of length r with total degree in [lo, hi], graded lex.
std::vector<Exponents> exponent_vectors(int r, int lo, int hi);
/// All b <= a componentwise.
std::vector<Exponents> sub_vectors(const Exponents& a);
/// prod_i C(a_i, b_i)
Scalar multi_binomial(const Exponents& a, const Exponents& b);

struct CrossedReport {
  CheckResult normalization_and_cocycle;
  CheckResult cocycle_values;
  CheckResult convolution_inverse;
  CheckResult product_formula;
  CheckResult cococycle;
  CheckResult action;
  std::string action_orientation;  // "displayed", "opposite", "neither" or "both"
  bool pass = false;
};

CrossedReport verify_crossed_product(const UmbrellaAlgebra& U, const QuotientHopf& H, int degree_cutoff);

}  // namespace umb
