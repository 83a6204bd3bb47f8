#pragma once

#include <string>
#include <vector>

#include "umbrella/liealg.hpp"
#include "umbrella/rewrite.hpp"
#include "umbrella/tensor.hpp"

namespace umb {

/// Full coproduct, counit and antipode on each generator.
struct HopfData {
  std::vector<TensorPoly> delta;
  std::vector<Scalar> counit;
  std::vector<NCPoly> antipode;
};

/// HopfData with every generator primitive.
HopfData primitive_hopf_data(const AlphabetPtr& alphabet);

/// UM(A): generators x0 < x1..xr < X1..Xd < y1..yr, weights 1,1,2.
class UmbrellaAlgebra {
 public:
  int r = 0;
  int s = 0;
  LieData lie;
  AlphabetPtr alphabet;
  Presentation presentation;
  HopfData hopf;

  UmbrellaAlgebra(LieData lie, AlphabetPtr alphabet, Presentation presentation, HopfData hopf);

  const RationalMatrix& A() const { return lie.A; }
  std::size_t lie_dim() const { return lie.dim(); }
  std::size_t generator_count() const { return alphabet->size(); }

  int x(int i) const { return i; }  // 0..r
  int X(int a) const { return r + 1 + a; }  // 0..d-1
  int y(int i) const { return r + static_cast<int>(lie_dim()) + i; }  // 1..r
  bool is_x(int id) const { return id <= r; }
  bool is_lie(int id) const { return id > r && id <= r + static_cast<int>(lie_dim()); }
  bool is_y(int id) const { return id > r + static_cast<int>(lie_dim()); }
  /// Index a of a Lie generator X(a); i of x(i) or y(i).
  int lie_index(int id) const { return id - r - 1; }
  int vector_index(int id) const { return is_x(id) ? id : id - r - static_cast<int>(lie_dim()); }

  NCPoly gen(int id) const { return NCPoly::generator(alphabet, id); }
  /// sum of coordinates times Lie generators.
  NCPoly lie_element(const RationalMatrix& M) const;
};

UmbrellaAlgebra build_umbrella(const RationalMatrix& A);
UmbrellaAlgebra build_umbrella(int r, int s);

Presentation build_presentation(const RationalMatrix& A);
HopfData build_hopf_data(const RationalMatrix& A);

/// (r-2s) r + 2s^2 + s + 2r + 1; throws when r < 2s or s < 0.
int gkdim(int r, int s);

struct IsoReport {
  std::vector<NCPoly> images;  // one per source generator, over the target alphabet
  bool verified = false;
  std::vector<std::string> failures;
};

/// Substitution UM(A) -> UM(A_target) induced by P with P A P^T = A_target:
/// with Q = P^-T, x_i -> sum_j Q_ji x'_j (same for y), x0 -> x0',
/// M -> Q^-T M Q^T. Every relation image and every generator coproduct is
/// checked in the target. Throws when the congruence does not hold.
IsoReport iso_map(const UmbrellaAlgebra& source, const UmbrellaAlgebra& target, const RationalMatrix& P);

/// 3-generator example: y < x < z with [x,y] = y, [z,y] = 0, [z,x] = -z + lambda y,
/// x and y primitive, delta z = x(x)y - y(x)x.
struct WzzExample {
  Presentation presentation;
  HopfData hopf;
};
WzzExample build_wzz_example(const Scalar& lambda);

}  // namespace umb
