#include "bcx/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace bcx {

namespace {

void require_same_dim(const BCVector& a, const BCVector& b, const char* what) {
  if (a.dim() != b.dim())
    throw DimensionMismatchError(std::string(what) + ": vector dimensions differ");
}

void require_square(const BCMatrix& a, const char* what) {
  if (a.rows() != a.cols())
    throw NotSquareError(std::string(what) + ": matrix is not square");
}

double frob(const BCMatrix& a) {
  return std::sqrt(a.A1.squaredNorm() + a.A2.squaredNorm());
}

}  // namespace

BCVector::BCVector(CVector a, CVector b) : v1(std::move(a)), v2(std::move(b)) {
  if (v1.size() != v2.size())
    throw DimensionMismatchError("BCVector: idempotent components have different lengths");
}

BCVector BCVector::zero(Eigen::Index n) {
  return {CVector::Zero(n), CVector::Zero(n)};
}

BCMatrix::BCMatrix(CMatrix a, CMatrix b) : A1(std::move(a)), A2(std::move(b)) {
  if (A1.rows() != A2.rows() || A1.cols() != A2.cols())
    throw DimensionMismatchError("BCMatrix: idempotent components have different shapes");
}

BCMatrix BCMatrix::identity(Eigen::Index n) {
  return {CMatrix::Identity(n, n), CMatrix::Identity(n, n)};
}

BCMatrix BCMatrix::zero(Eigen::Index rows, Eigen::Index cols) {
  return {CMatrix::Zero(rows, cols), CMatrix::Zero(rows, cols)};
}

BCVector operator+(const BCVector& a, const BCVector& b) {
  require_same_dim(a, b, "operator+");
  return {a.v1 + b.v1, a.v2 + b.v2};
}

BCVector operator-(const BCVector& a, const BCVector& b) {
  require_same_dim(a, b, "operator-");
  return {a.v1 - b.v1, a.v2 - b.v2};
}

BCVector operator*(Bicomplex s, const BCVector& a) {
  return {s.z1 * a.v1, s.z2 * a.v2};
}

BCMatrix operator+(const BCMatrix& a, const BCMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatchError("operator+: matrix shapes differ");
  return {a.A1 + b.A1, a.A2 + b.A2};
}

BCMatrix operator-(const BCMatrix& a, const BCMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatchError("operator-: matrix shapes differ");
  return {a.A1 - b.A1, a.A2 - b.A2};
}

BCMatrix operator*(Bicomplex s, const BCMatrix& a) {
  return {s.z1 * a.A1, s.z2 * a.A2};
}

BCMatrix from_cartesian_matrix(const CMatrix& B, const CMatrix& C) {
  if (B.rows() != C.rows() || B.cols() != C.cols())
    throw DimensionMismatchError("from_cartesian_matrix: shapes differ");
  const Complex i(0.0, 1.0);
  return {B - i * C, B + i * C};
}

std::pair<CMatrix, CMatrix> to_cartesian_matrix(const BCMatrix& A) {
  const Complex i(0.0, 1.0);
  return {(A.A1 + A.A2) / 2.0, i * (A.A1 - A.A2) / 2.0};
}

Bicomplex inner_product(const BCVector& x, const BCVector& y) {
  require_same_dim(x, y, "inner_product");
  // Eigen's dot conjugates its *object*, so y_i.dot(x_i) = sum x conj(y).
  return {y.v1.dot(x.v1), y.v2.dot(x.v2)};
}

Hyperbolic dnorm_vec(const BCVector& x) {
  return {x.v1.norm(), x.v2.norm()};
}

double euclid_vec(const BCVector& x) {
  return std::sqrt((x.v1.squaredNorm() + x.v2.squaredNorm()) / 2.0);
}

BCVector apply(const BCMatrix& A, const BCVector& x) {
  if (A.cols() != x.dim())
    throw DimensionMismatchError("apply: matrix columns do not match vector dimension");
  return {A.A1 * x.v1, A.A2 * x.v2};
}

BCMatrix matmul(const BCMatrix& A, const BCMatrix& B) {
  if (A.cols() != B.rows())
    throw DimensionMismatchError("matmul: inner dimensions differ");
  return {A.A1 * B.A1, A.A2 * B.A2};
}

BCMatrix adjoint(const BCMatrix& A) {
  return {A.A1.adjoint(), A.A2.adjoint()};
}

double spectral_norm(const CMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  const CMatrix g = (m.rows() <= m.cols()) ? CMatrix(m * m.adjoint()) : CMatrix(m.adjoint() * m);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(g, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

OperatorNormReport op_dnorm(const BCMatrix& A) {
  const Hyperbolic d{spectral_norm(A.A1), spectral_norm(A.A2)};
  return {d, d.magnitude()};
}

bool is_normal(const BCMatrix& A, Tolerance tol) {
  require_square(A, "is_normal");
  const BCMatrix comm = matmul(A, adjoint(A)) - matmul(adjoint(A), A);
  const double scale = std::max(1.0, frob(A) * frob(A));
  return frob(comm) <= tol.rel * scale + tol.abs;
}

bool cartesian_normal_check(const CMatrix& B, const CMatrix& C, Tolerance tol) {
  if (B.rows() != C.rows() || B.cols() != C.cols())
    throw DimensionMismatchError("cartesian_normal_check: shapes differ");
  if (B.rows() != B.cols())
    throw NotSquareError("cartesian_normal_check: matrices are not square");
  const double sb = B.norm();
  const double sc = C.norm();
  const bool b_herm = (B - B.adjoint()).norm() <= tol.rel * std::max(1.0, sb) + tol.abs;
  const bool c_herm = (C - C.adjoint()).norm() <= tol.rel * std::max(1.0, sc) + tol.abs;
  const bool commute =
      (B * C - C * B).norm() <= tol.rel * std::max(1.0, sb * sc) + tol.abs;
  return b_herm && c_herm && commute;
}

bool is_self_adjoint(const BCMatrix& A, Tolerance tol) {
  require_square(A, "is_self_adjoint");
  const BCMatrix d = A - adjoint(A);
  return frob(d) <= tol.rel * std::max(1.0, frob(A)) + tol.abs;
}

bool is_unitary(const BCMatrix& A, Tolerance tol) {
  require_square(A, "is_unitary");
  const Eigen::Index n = A.rows();
  const BCMatrix id = BCMatrix::identity(n);
  const double scale = std::max(1.0, frob(A) * frob(A));
  const double r1 = frob(matmul(A, adjoint(A)) - id);
  const double r2 = frob(matmul(adjoint(A), A) - id);
  return r1 <= tol.rel * scale + tol.abs && r2 <= tol.rel * scale + tol.abs;
}

bool is_positive(const BCMatrix& A, Tolerance tol) {
  require_square(A, "is_positive");
  if (!is_self_adjoint(A, tol)) return false;
  auto min_eig = [](const CMatrix& m) {
    if (m.rows() == 0) return 0.0;
    const CMatrix h = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
  };
  const double floor1 = -(tol.rel * std::max(1.0, spectral_norm(A.A1)) + tol.abs);
  const double floor2 = -(tol.rel * std::max(1.0, spectral_norm(A.A2)) + tol.abs);
  return min_eig(A.A1) >= floor1 && min_eig(A.A2) >= floor2;
}

bool is_zero_operator(const BCMatrix& A, Tolerance tol) {
  require_square(A, "is_zero_operator");
  if (A.rows() == 0) return true;
  const double biggest =
      std::max(A.A1.cwiseAbs().maxCoeff(), A.A2.cwiseAbs().maxCoeff());
  return biggest <= tol.rel * std::max(1.0, frob(A)) + tol.abs;
}

}  // namespace bcx
