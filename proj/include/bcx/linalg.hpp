#pragma once

#include <Eigen/Dense>
#include <utility>

#include "bcx/bicomplex.hpp"

namespace bcx {

using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

// Vector over the bicomplex numbers, stored as two complex idempotent
// components of equal length: x = v1*e1 + v2*e2.
struct BCVector {
  CVector v1;
  CVector v2;

  BCVector() = default;
  BCVector(CVector a, CVector b);

  static BCVector zero(Eigen::Index n);

  Eigen::Index dim() const { return v1.size(); }
  Bicomplex entry(Eigen::Index k) const { return {v1[k], v2[k]}; }
};

// Matrix over the bicomplex numbers, idempotent components of equal shape.
struct BCMatrix {
  CMatrix A1;
  CMatrix A2;

  BCMatrix() = default;
  BCMatrix(CMatrix a, CMatrix b);

  static BCMatrix identity(Eigen::Index n);
  static BCMatrix zero(Eigen::Index rows, Eigen::Index cols);

  Eigen::Index rows() const { return A1.rows(); }
  Eigen::Index cols() const { return A1.cols(); }
  Bicomplex entry(Eigen::Index r, Eigen::Index c) const { return {A1(r, c), A2(r, c)}; }
};

BCVector operator+(const BCVector& a, const BCVector& b);
BCVector operator-(const BCVector& a, const BCVector& b);
BCVector operator*(Bicomplex s, const BCVector& a);
BCMatrix operator+(const BCMatrix& a, const BCMatrix& b);
BCMatrix operator-(const BCMatrix& a, const BCMatrix& b);
BCMatrix operator*(Bicomplex s, const BCMatrix& a);

// A = B + j*C  ->  components (B - i*C, B + i*C), and back.
BCMatrix from_cartesian_matrix(const CMatrix& B, const CMatrix& C);
std::pair<CMatrix, CMatrix> to_cartesian_matrix(const BCMatrix& A);

// <x, y> = e1<x1,y1> + e2<x2,y2>, linear in the first slot and
// conj3-conjugate in the second.
Bicomplex inner_product(const BCVector& x, const BCVector& y);

// Hyperbolic-valued norm (||x1||, ||x2||) = sqrt(<x,x>) and its Euclidean
// collapse sqrt((||x1||^2 + ||x2||^2)/2).
Hyperbolic dnorm_vec(const BCVector& x);
double euclid_vec(const BCVector& x);

BCVector apply(const BCMatrix& A, const BCVector& x);
BCMatrix matmul(const BCMatrix& A, const BCMatrix& B);

// Componentwise conjugate transpose; the adjoint for the inner product above.
BCMatrix adjoint(const BCMatrix& A);

// Largest singular value, via the Hermitian eigenproblem on the smaller Gram
// matrix. Deterministic; relative accuracy far below the predicate tolerances.
double spectral_norm(const CMatrix& m);

// Hyperbolic operator norm (sigma_max(A1), sigma_max(A2)) together with its
// Euclidean collapse.
struct OperatorNormReport {
  Hyperbolic dnorm;
  double euclid = 0.0;
};

OperatorNormReport op_dnorm(const BCMatrix& A);

// Predicates. Residuals are measured in norms scaled by max(1, size of A), so
// the default rel tolerance 1e-9 behaves sensibly near zero.
bool is_normal(const BCMatrix& A, Tolerance tol = {});
bool cartesian_normal_check(const CMatrix& B, const CMatrix& C, Tolerance tol = {});
bool is_self_adjoint(const BCMatrix& A, Tolerance tol = {});
bool is_unitary(const BCMatrix& A, Tolerance tol = {});
bool is_positive(const BCMatrix& A, Tolerance tol = {});
bool is_zero_operator(const BCMatrix& A, Tolerance tol = {});

}  // namespace bcx
