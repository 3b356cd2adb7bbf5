#include "bcx/sampling.hpp"

#include <cmath>
#include <vector>

namespace bcx::sampling {

CVector cvector(Rng& rng, Eigen::Index n) {
  CVector v(n);
  for (Eigen::Index k = 0; k < n; ++k) v[k] = rng.cnormal();
  return v;
}

CMatrix cmatrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  CMatrix m(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r) m(r, c) = rng.cnormal();
  return m;
}

CMatrix unitary(Rng& rng, Eigen::Index n) {
  const CMatrix g = cmatrix(rng, n, n);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex d = r(k, k);
    const double a = std::abs(d);
    q.col(k) *= (a > 0.0) ? Complex(d / a) : Complex(1.0);
  }
  return q;
}

CMatrix normal_matrix(Rng& rng, Eigen::Index n) {
  const CMatrix u = unitary(rng, n);
  CVector d(n);
  for (Eigen::Index k = 0; k < n; ++k) d[k] = rng.cnormal();
  return u * d.asDiagonal() * u.adjoint();
}

BCVector bc_vector(Rng& rng, Eigen::Index n) {
  return {cvector(rng, n), cvector(rng, n)};
}

BCMatrix bc_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  return {cmatrix(rng, rows, cols), cmatrix(rng, rows, cols)};
}

BCMatrix bc_normal_matrix(Rng& rng, Eigen::Index n) {
  return {normal_matrix(rng, n), normal_matrix(rng, n)};
}

BCMatrix commuting_hermitian_pair(Rng& rng, Eigen::Index n) {
  const CMatrix u = unitary(rng, n);
  Eigen::VectorXd db(n), dc(n);
  for (Eigen::Index k = 0; k < n; ++k) db[k] = rng.normal();
  for (Eigen::Index k = 0; k < n; ++k) dc[k] = rng.normal();
  const CMatrix B = u * db.cast<Complex>().asDiagonal() * u.adjoint();
  const CMatrix C = u * dc.cast<Complex>().asDiagonal() * u.adjoint();
  return from_cartesian_matrix(B, C);
}

Submodule submodule(Rng& rng, Eigen::Index n) {
  const int count = rng.uniform_int(0, static_cast<int>(n));
  std::vector<BCVector> gens;
  gens.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    BCVector g = bc_vector(rng, n);
    const double pick = rng.uniform();
    if (pick < 0.2)
      g.v2.setZero();  // e1-multiple
    else if (pick < 0.4)
      g.v1.setZero();  // e2-multiple
    gens.push_back(std::move(g));
  }
  return submodule_from_generators(n, gens);
}

PowerSeries series(Rng& rng, int degree) {
  std::vector<Bicomplex> c(static_cast<std::size_t>(degree) + 1);
  for (auto& a : c) a = rng.bc_normal();
  return PowerSeries(std::move(c));
}

WeightSequence weights(Rng& rng, int degree, double lo, double hi) {
  std::vector<Hyperbolic> b(static_cast<std::size_t>(degree) + 1, Hyperbolic{1.0, 1.0});
  for (std::size_t n = 1; n < b.size(); ++n) b[n] = rng.hyp_box(lo, hi);
  return WeightSequence(std::move(b));
}

SelfMap origin_fixing_self_map(Rng& rng, int degree, int max_factors, double max_zero) {
  auto build = [&](int factors) {
    std::vector<Complex> c{Complex{1.0}};
    for (int m = 0; m < factors; ++m) {
      const Complex alpha = rng.disk_point(max_zero);
      // b_alpha(z) = (alpha - z)/(1 - conj(alpha) z), modulus 1 on the circle.
      c = truncated_product(c, mobius_component_coeffs(alpha, degree - 1), degree - 1);
    }
    std::vector<Complex> shifted(static_cast<std::size_t>(degree) + 1, Complex{});
    for (std::size_t k = 0; k + 1 < shifted.size() && k < c.size(); ++k) shifted[k + 1] = c[k];
    return shifted;
  };
  if (degree < 1) throw InvalidConfigError("origin_fixing_self_map: degree must be >= 1");
  const int f1 = rng.uniform_int(0, max_factors);
  const int f2 = rng.uniform_int(0, max_factors);
  const auto c1 = build(f1);
  const auto c2 = build(f2);
  std::vector<Bicomplex> out(static_cast<std::size_t>(degree) + 1);
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = {c1[n], c2[n]};
  return SelfMap{PowerSeries(std::move(out))};
}

SelfMap mobius_composite(Rng& rng, int degree, double max_a) {
  const Bicomplex a{rng.disk_point(max_a), rng.disk_point(max_a)};
  const SelfMap inner = origin_fixing_self_map(rng, degree);
  const SelfMap outer = mobius_series(a, degree);
  // The inner map fixes the origin, so the truncated composition is the exact
  // coefficient prefix of the genuine self-map T_a . inner.
  return SelfMap{compose(outer.series, inner.series, degree)};
}

}  // namespace bcx::sampling
