#include "bcx/duality.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bcx/rng.hpp"
#include "bcx/sampling.hpp"

namespace bcx {

Bicomplex Functional::operator()(const BCVector& x) const {
  return inner_product(x, riesz);
}

CMatrix orthonormal_columns(const CMatrix& gens, double rel) {
  const Eigen::Index n = gens.rows();
  if (gens.cols() == 0) return CMatrix(n, 0);
  Eigen::JacobiSVD<CMatrix> svd(gens, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double cutoff = rel * sv(0);
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > cutoff && sv(r) > 0.0) ++r;
  return svd.matrixU().leftCols(r);
}

CMatrix orthonormal_complement(const CMatrix& basis) {
  const Eigen::Index n = basis.rows();
  const Eigen::Index r = basis.cols();
  if (r == 0) return CMatrix::Identity(n, n);
  Eigen::JacobiSVD<CMatrix> svd(basis, Eigen::ComputeFullU);
  return svd.matrixU().rightCols(n - r);
}

Submodule submodule_from_generators(Eigen::Index ambient_dim, const std::vector<BCVector>& gens,
                                    Tolerance tol) {
  CMatrix g1(ambient_dim, static_cast<Eigen::Index>(gens.size()));
  CMatrix g2(ambient_dim, static_cast<Eigen::Index>(gens.size()));
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].dim() != ambient_dim)
      throw DimensionMismatchError("submodule_from_generators: generator " + std::to_string(k) +
                                   " has wrong dimension");
    g1.col(static_cast<Eigen::Index>(k)) = gens[k].v1;
    g2.col(static_cast<Eigen::Index>(k)) = gens[k].v2;
  }
  Submodule m;
  m.ambient = ambient_dim;
  m.basis1 = orthonormal_columns(g1, tol.rel);
  m.basis2 = orthonormal_columns(g2, tol.rel);
  return m;
}

BCVector project(const BCVector& x, const Submodule& M) {
  if (x.dim() != M.ambient)
    throw DimensionMismatchError("project: vector dimension does not match the ambient module");
  CVector p1 = (M.rank1() > 0) ? CVector(M.basis1 * (M.basis1.adjoint() * x.v1))
                               : CVector(CVector::Zero(M.ambient));
  CVector p2 = (M.rank2() > 0) ? CVector(M.basis2 * (M.basis2.adjoint() * x.v2))
                               : CVector(CVector::Zero(M.ambient));
  return {std::move(p1), std::move(p2)};
}

Hyperbolic quotient_norm(const BCVector& x, const Submodule& M) {
  return dnorm_vec(x - project(x, M));
}

Submodule annihilator(const Submodule& M) {
  Submodule a;
  a.ambient = M.ambient;
  a.basis1 = orthonormal_complement(M.basis1);
  a.basis2 = orthonormal_complement(M.basis2);
  return a;
}

Functional extend_functional(const Functional& f, const Submodule& M, Tolerance tol) {
  if (f.riesz.dim() != M.ambient)
    throw DimensionMismatchError("extend_functional: representer dimension mismatch");
  const Hyperbolic off = quotient_norm(f.riesz, M);
  const Hyperbolic nrm = dnorm_vec(f.riesz);
  const double thr1 = tol.rel * std::max(1.0, nrm.x1) + tol.abs;
  const double thr2 = tol.rel * std::max(1.0, nrm.x2) + tol.abs;
  if (off.x1 > thr1 || off.x2 > thr2)
    throw RepresenterError("extend_functional: representer is not in the submodule");
  // The Hahn-Banach extension along the orthogonal decomposition keeps the
  // representer itself, now read against the ambient module.
  return Functional{f.riesz};
}

DualityReport check_dual_isometries(const Submodule& M, int trials, std::uint64_t seed) {
  if (trials < 1) throw InvalidConfigError("check_dual_isometries: trials must be >= 1");
  const Submodule Mp = annihilator(M);
  Hyperbolic va{0.0, 0.0};
  Hyperbolic vb{0.0, 0.0};
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, "dual-isometry", static_cast<std::uint64_t>(t)));

    // (a) a functional on M, given by a representer inside M. Its norm on M
    // comes from basis coordinates; the duality M' = X'/M^perp says this is
    // the quotient norm of the extension's representer modulo M^perp.
    const CVector c1 = sampling::cvector(rng, M.rank1());
    const CVector c2 = sampling::cvector(rng, M.rank2());
    const BCVector m{(M.rank1() > 0) ? CVector(M.basis1 * c1) : CVector(CVector::Zero(M.ambient)),
                     (M.rank2() > 0) ? CVector(M.basis2 * c2) : CVector(CVector::Zero(M.ambient))};
    const Functional ext = extend_functional(Functional{m}, M);
    const double fa1 = (M.basis1.adjoint() * m.v1).norm();
    const double fa2 = (M.basis2.adjoint() * m.v2).norm();
    const Hyperbolic q = quotient_norm(ext.riesz, Mp);
    va.x1 = std::max(va.x1, std::abs(fa1 - q.x1) / std::max(1.0, fa1));
    va.x2 = std::max(va.x2, std::abs(fa2 - q.x2) / std::max(1.0, fa2));

    // (b) a functional on the quotient X/M, represented in M^perp. Its norm
    // through the quotient parametrization (coordinates against the
    // annihilator basis) must match the plain norm of the representer.
    const CVector d1 = sampling::cvector(rng, Mp.rank1());
    const CVector d2 = sampling::cvector(rng, Mp.rank2());
    const BCVector u{
        (Mp.rank1() > 0) ? CVector(Mp.basis1 * d1) : CVector(CVector::Zero(M.ambient)),
        (Mp.rank2() > 0) ? CVector(Mp.basis2 * d2) : CVector(CVector::Zero(M.ambient))};
    const double g1 = (Mp.basis1.adjoint() * u.v1).norm();
    const double g2 = (Mp.basis2.adjoint() * u.v2).norm();
    const Hyperbolic r = dnorm_vec(u);
    vb.x1 = std::max(vb.x1, std::abs(g1 - r.x1) / std::max(1.0, r.x1));
    vb.x2 = std::max(vb.x2, std::abs(g2 - r.x2) / std::max(1.0, r.x2));
  }
  return {va, vb, trials, seed};
}

}  // namespace bcx
