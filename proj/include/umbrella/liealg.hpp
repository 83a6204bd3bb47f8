#pragma once

#include <vector>

#include "umbrella/matrix.hpp"

namespace umb {

/// so(A) = {M : M A = -A M^T} for an antisymmetric A, with a fixed ordered basis.
struct LieData {
  RationalMatrix A;
  int r = 0;
  int s = 0;           // rank(A) = 2s
  bool block = false;  // A is the canonical block form
  std::vector<RationalMatrix> basis;
  /// structure[a][b] = coordinates of [basis[a], basis[b]].
  std::vector<std::vector<std::vector<Scalar>>> structure;

  std::size_t dim() const { return basis.size(); }
  /// Throws std::invalid_argument("matrix outside so(A)") when M is not in the span.
  std::vector<Scalar> coordinates(const RationalMatrix& M) const;
  RationalMatrix element(const std::vector<Scalar>& coords) const;

  SpanCoordinates span;
};

/// s diagonal blocks [[0,1],[-1,0]] followed by zeros.
RationalMatrix block_form(int r, int s);

/// (r-2s) r + 2s^2 + s.
int so_dimension(int r, int s);

/// For the block form the basis is the symplectic part (symmetric units times
/// the block, first nonzero entry made positive) followed by e_ij, j > 2s, in
/// row-major order. Other matrices get the RREF nullspace basis of
/// M A - (M A)^T = 0. Throws when A is not antisymmetric.
LieData so_basis(const RationalMatrix& A);

/// Coordinates of every commutator of basis elements; throws "not a subalgebra"
/// when a commutator leaves the span.
std::vector<std::vector<std::vector<Scalar>>> structure_constants(const std::vector<RationalMatrix>& basis,
                                                                 const SpanCoordinates& span);

struct CongruenceResult {
  RationalMatrix P;  // P A P^T = B
  RationalMatrix B;
  int s = 0;
};

/// Skew Gram-Schmidt over Q.
CongruenceResult congruence_normalize(const RationalMatrix& A);

/// Trace of ad_M on so(A), from the structure constants.
Scalar ad_trace(const LieData& L, const RationalMatrix& M);
/// (r-2s) tr(M) - r tr(M22), valid for the block form only.
Scalar ad_trace_closed_form(const LieData& L, const RationalMatrix& M);
/// 2 tr(M) + tr(ad M), the Lie part of the Nakayama character.
Scalar phi_eta(const LieData& L, const RationalMatrix& M);

}  // namespace umb
