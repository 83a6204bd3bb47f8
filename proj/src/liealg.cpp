#include "umbrella/liealg.hpp"

#include <stdexcept>

namespace umb {

RationalMatrix block_form(int r, int s) {
  if (s < 0 || 2 * s > r) throw std::invalid_argument("block form needs r >= 2s >= 0");
  RationalMatrix B(static_cast<std::size_t>(r), static_cast<std::size_t>(r));
  for (int k = 0; k < s; ++k) {
    B(2 * k, 2 * k + 1) = 1;
    B(2 * k + 1, 2 * k) = -1;
  }
  return B;
}

int so_dimension(int r, int s) { return (r - 2 * s) * r + 2 * s * s + s; }

std::vector<Scalar> LieData::coordinates(const RationalMatrix& M) const {
  if (M.rows() != static_cast<std::size_t>(r) || M.cols() != static_cast<std::size_t>(r))
    throw std::invalid_argument("matrix outside so(A)");
  auto c = span.coordinates(M.data());
  if (!c) throw std::invalid_argument("matrix outside so(A)");
  return *c;
}

RationalMatrix LieData::element(const std::vector<Scalar>& coords) const {
  RationalMatrix M(static_cast<std::size_t>(r), static_cast<std::size_t>(r));
  for (std::size_t a = 0; a < coords.size() && a < basis.size(); ++a)
    if (!is_zero(coords[a])) M += basis[a] * coords[a];
  return M;
}

namespace {

std::vector<RationalMatrix> block_basis(int r, int s) {
  const auto n = static_cast<std::size_t>(r);
  const std::size_t m = 2 * static_cast<std::size_t>(s);
  const RationalMatrix Bp = block_form(2 * s, s);
  std::vector<RationalMatrix> out;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      RationalMatrix S(m, m);
      S(i, j) = 1;
      S(j, i) = 1;
      RationalMatrix M = S * Bp;
      for (const auto& x : M.data()) {
        if (is_zero(x)) continue;
        if (sgn(x) < 0) M *= -1;
        break;
      }
      RationalMatrix full(n, n);
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) full(a, b) = M(a, b);
      out.push_back(std::move(full));
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = m; j < n; ++j) out.push_back(RationalMatrix::unit(n, i, j));
  return out;
}

// Linear system M A - (M A)^T = 0 in the r^2 entries of M.
RationalMatrix so_equations(const RationalMatrix& A) {
  const std::size_t n = A.rows();
  RationalMatrix E(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // (MA)_ij - (MA)_ji = sum_k M_ik A_kj - M_jk A_ki
      const std::size_t row = i * n + j;
      for (std::size_t k = 0; k < n; ++k) {
        E(row, i * n + k) += A(k, j);
        E(row, j * n + k) -= A(k, i);
      }
    }
  }
  return E;
}

}  // namespace

std::vector<std::vector<std::vector<Scalar>>> structure_constants(const std::vector<RationalMatrix>& basis,
                                                                 const SpanCoordinates& span) {
  const std::size_t d = basis.size();
  std::vector<std::vector<std::vector<Scalar>>> table(d, std::vector<std::vector<Scalar>>(d));
  for (std::size_t a = 0; a < d; ++a) {
    table[a][a] = std::vector<Scalar>(d);
    for (std::size_t b = a + 1; b < d; ++b) {
      auto c = span.coordinates(commutator(basis[a], basis[b]).data());
      if (!c) throw std::runtime_error("not a subalgebra");
      table[b][a] = *c;
      for (auto& x : table[b][a]) x = -x;
      table[a][b] = std::move(*c);
    }
  }
  return table;
}

LieData so_basis(const RationalMatrix& A) {
  if (!A.is_antisymmetric()) throw std::invalid_argument("matrix is not antisymmetric");
  LieData L;
  L.A = A;
  L.r = static_cast<int>(A.rows());
  const std::size_t rk = rank(A);
  L.s = static_cast<int>(rk / 2);
  L.block = (A == block_form(L.r, L.s));
  if (L.block) {
    L.basis = block_basis(L.r, L.s);
  } else {
    const auto n = A.rows();
    for (auto& v : nullspace(so_equations(A))) {
      RationalMatrix M(n, n);
      for (std::size_t k = 0; k < v.size(); ++k) M(k / n, k % n) = v[k];
      L.basis.push_back(std::move(M));
    }
  }
  std::vector<std::vector<Scalar>> flat;
  flat.reserve(L.basis.size());
  for (const auto& M : L.basis) flat.push_back(M.data());
  L.span = SpanCoordinates(std::move(flat));
  L.structure = structure_constants(L.basis, L.span);
  return L;
}

CongruenceResult congruence_normalize(const RationalMatrix& A) {
  if (!A.is_antisymmetric()) throw std::invalid_argument("matrix is not antisymmetric");
  const std::size_t n = A.rows();
  using Vec = std::vector<Scalar>;
  auto omega = [&](const Vec& u, const Vec& v) {
    Scalar t = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (is_zero(u[i])) continue;
      for (std::size_t j = 0; j < n; ++j) t += u[i] * A(i, j) * v[j];
    }
    return t;
  };
  std::vector<Vec> pool;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n);
    e[i] = 1;
    pool.push_back(std::move(e));
  }
  std::vector<Vec> rows;
  int s = 0;
  for (;;) {
    std::size_t iu = pool.size(), iv = pool.size();
    for (std::size_t a = 0; a < pool.size() && iu == pool.size(); ++a)
      for (std::size_t b = 0; b < pool.size(); ++b)
        if (a != b && !is_zero(omega(pool[a], pool[b]))) {
          iu = a;
          iv = b;
          break;
        }
    if (iu == pool.size()) break;
    Vec p1 = pool[iu];
    Vec p2 = pool[iv];
    const Scalar w = omega(p1, p2);
    for (auto& x : p2) x /= w;
    std::vector<Vec> rest;
    for (std::size_t c = 0; c < pool.size(); ++c) {
      if (c == iu || c == iv) continue;
      Vec v = pool[c];
      const Scalar a2 = omega(v, p2);
      const Scalar a1 = omega(v, p1);
      for (std::size_t k = 0; k < n; ++k) v[k] += -a2 * p1[k] + a1 * p2[k];
      rest.push_back(std::move(v));
    }
    rows.push_back(std::move(p1));
    rows.push_back(std::move(p2));
    pool = std::move(rest);
    ++s;
  }
  for (auto& v : pool) rows.push_back(std::move(v));
  CongruenceResult out;
  out.P = RationalMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.P(i, j) = rows[i][j];
  out.s = s;
  out.B = out.P * A * out.P.transpose();
  return out;
}

Scalar ad_trace(const LieData& L, const RationalMatrix& M) {
  const auto m = L.coordinates(M);
  Scalar t = 0;
  for (std::size_t a = 0; a < m.size(); ++a) {
    if (is_zero(m[a])) continue;
    for (std::size_t b = 0; b < m.size(); ++b) t += m[a] * L.structure[a][b][b];
  }
  return t;
}

Scalar ad_trace_closed_form(const LieData& L, const RationalMatrix& M) {
  if (!L.block) throw std::invalid_argument("closed form needs the block form");
  const auto m = static_cast<std::size_t>(2 * L.s);
  const auto n = static_cast<std::size_t>(L.r);
  const Scalar tr22 = M.block(m, m, n - m, n - m).trace();
  return Scalar(L.r - 2 * L.s) * M.trace() - Scalar(L.r) * tr22;
}

Scalar phi_eta(const LieData& L, const RationalMatrix& M) { return 2 * M.trace() + ad_trace(L, M); }

}  // namespace umb
