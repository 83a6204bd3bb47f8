#pragma once

#include <vector>

#include "umbrella/hopf.hpp"
#include "umbrella/umbrella.hpp"

namespace umb {

/// Images of the generators under an algebra endomorphism.
struct AutomorphismData {
  std::vector<NCPoly> images;
};

/// sigma(x_i) = x_i, sigma(y_i) = y_i, sigma(M) = M + (2-2s) tr(M).
AutomorphismData nakayama_candidate(const UmbrellaAlgebra& U);

/// phi_eta on a generator: 0 on x_i and y_i, 2 tr(M) + tr(ad M) on Lie
/// generators. Asserts agreement with phi_eta_oracle (throws std::logic_error).
Scalar phi_eta(const UmbrellaAlgebra& U, const ReductionSystem& R, int generator);

/// Trace of the linear part of the bracket with g on the generator span, with
/// g acting on the vector generators from the right ([v, g]) and on the Lie
/// generators from the left ([g, X]).
Scalar phi_eta_oracle(const UmbrellaAlgebra& U, const ReductionSystem& R, int generator);

/// Same trace with g acting from the left on every generator; reported only
/// as a diagnostic, it gives -2 tr(M) + tr(ad M).
Scalar phi_eta_left(const UmbrellaAlgebra& U, const ReductionSystem& R, int generator);

struct NakayamaReport {
  CheckResult automorphism;  // relation images reduce to 0
  CheckResult agreement;     // sigma(z) - z = phi_eta(z)
  CheckResult calabi_yau;    // r = 2s forces the identity
  std::vector<Scalar> phi;   // per generator
  bool pass = false;
};

NakayamaReport verify_nakayama(const UmbrellaAlgebra& U, const ReductionSystem& R, const AutomorphismData& sigma);

NCPoly substitute(const NCPoly& f, const std::vector<NCPoly>& images, const AlphabetPtr& target);

}  // namespace umb
