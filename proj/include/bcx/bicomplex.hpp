#pragma once

#include <cmath>
#include <complex>
#include <utility>

#include "bcx/errors.hpp"

namespace bcx {

using Complex = std::complex<double>;

// Relative/absolute tolerance pair. `rel` scales with the data, `abs` is a
// flat floor added on top.
struct Tolerance {
  double rel = 1e-9;
  double abs = 0.0;
};

// Default tolerance for null-cone membership (is_null_cone / inverse).
inline constexpr Tolerance kNullConeTol{1e-10, 0.0};

// Hyperbolic number x1*e1 + x2*e2 with real idempotent coefficients.
// Ordering is the componentwise partial order; incomparable pairs answer
// false in both directions.
struct Hyperbolic {
  double x1 = 0.0;
  double x2 = 0.0;

  constexpr Hyperbolic() = default;
  constexpr Hyperbolic(double a, double b) : x1(a), x2(b) {}
  constexpr explicit Hyperbolic(double r) : x1(r), x2(r) {}

  constexpr bool positive() const { return x1 >= 0.0 && x2 >= 0.0; }
  constexpr bool strictly_positive() const { return x1 > 0.0 && x2 > 0.0; }

  // Euclidean size sqrt((x1^2 + x2^2)/2); agrees with euclid_norm on the
  // bicomplex embedding.
  double magnitude() const { return std::sqrt((x1 * x1 + x2 * x2) / 2.0); }
};

constexpr Hyperbolic operator+(Hyperbolic a, Hyperbolic b) { return {a.x1 + b.x1, a.x2 + b.x2}; }
constexpr Hyperbolic operator-(Hyperbolic a, Hyperbolic b) { return {a.x1 - b.x1, a.x2 - b.x2}; }
constexpr Hyperbolic operator*(Hyperbolic a, Hyperbolic b) { return {a.x1 * b.x1, a.x2 * b.x2}; }
constexpr Hyperbolic operator*(double s, Hyperbolic a) { return {s * a.x1, s * a.x2}; }

// a <= b componentwise.
constexpr bool hyp_leq(Hyperbolic a, Hyperbolic b) { return a.x1 <= b.x1 && a.x2 <= b.x2; }

// Componentwise square root; only defined on positive values.
inline Hyperbolic hyp_sqrt(Hyperbolic a) {
  if (!a.positive())
    throw NegativeComponentError("hyp_sqrt: negative idempotent coefficient");
  return {std::sqrt(a.x1), std::sqrt(a.x2)};
}

// Bicomplex number stored in idempotent coordinates: Z = z1*e1 + z2*e2 with
// e1 = (1 + ij)/2, e2 = (1 - ij)/2. All arithmetic is componentwise in these
// coordinates; the cartesian pair (z, w) with Z = z + j*w is an I/O view
// handled by from_cartesian / to_cartesian.
struct Bicomplex {
  Complex z1{};
  Complex z2{};

  Bicomplex() = default;
  Bicomplex(Complex c1, Complex c2) : z1(c1), z2(c2) {}
  explicit Bicomplex(double r) : z1(r), z2(r) {}
  explicit Bicomplex(Hyperbolic h) : z1(h.x1), z2(h.x2) {}
};

inline Bicomplex e1() { return {1.0, 0.0}; }
inline Bicomplex e2() { return {0.0, 1.0}; }
// The second imaginary unit: j = -i*e1 + i*e2.
inline Bicomplex unit_j() { return {Complex(0.0, -1.0), Complex(0.0, 1.0)}; }

inline Bicomplex operator+(Bicomplex a, Bicomplex b) { return {a.z1 + b.z1, a.z2 + b.z2}; }
inline Bicomplex operator-(Bicomplex a, Bicomplex b) { return {a.z1 - b.z1, a.z2 - b.z2}; }
inline Bicomplex operator-(Bicomplex a) { return {-a.z1, -a.z2}; }
inline Bicomplex operator*(Bicomplex a, Bicomplex b) { return {a.z1 * b.z1, a.z2 * b.z2}; }
inline Bicomplex operator*(double s, Bicomplex a) { return {s * a.z1, s * a.z2}; }
inline Bicomplex operator*(Complex s, Bicomplex a) { return {s * a.z1, s * a.z2}; }

// Z = z + j*w  ->  idempotent components (z - i*w, z + i*w).
inline Bicomplex from_cartesian(Complex z, Complex w) {
  const Complex i(0.0, 1.0);
  return {z - i * w, z + i * w};
}

// Inverse of from_cartesian: z = (z1 + z2)/2, w = i*(z1 - z2)/2.
inline std::pair<Complex, Complex> to_cartesian(Bicomplex a) {
  const Complex i(0.0, 1.0);
  return {(a.z1 + a.z2) / 2.0, i * (a.z1 - a.z2) / 2.0};
}

// The three conjugations. In cartesian form:
//   conj1: z + jw -> conj(z) + j*conj(w)
//   conj2: z + jw -> z - jw
//   conj3: z + jw -> conj(z) - j*conj(w)
// conj1 and conj2 swap the idempotent components, conj3 fixes them; conj3 is
// the componentwise complex conjugation and satisfies conj3 = conj1 . conj2.
inline Bicomplex conj1(Bicomplex a) { return {std::conj(a.z2), std::conj(a.z1)}; }
inline Bicomplex conj2(Bicomplex a) { return {a.z2, a.z1}; }
inline Bicomplex conj3(Bicomplex a) { return {std::conj(a.z1), std::conj(a.z2)}; }

// Squared moduli associated with the conjugations. The j- and i-moduli are
// bicomplex valued and carry no norm axioms; the k-modulus is the hyperbolic
// (componentwise) absolute value, which is multiplicative.
inline Bicomplex modulus_j(Bicomplex a) { return a * conj1(a); }
inline Bicomplex modulus_i(Bicomplex a) { return a * conj2(a); }
inline Hyperbolic modulus_k(Bicomplex a) { return {std::abs(a.z1), std::abs(a.z2)}; }

// Euclidean norm sqrt((|z1|^2 + |z2|^2)/2); submultiplicative only up to a
// factor sqrt(2), with equality of |ZW| = sqrt(2)|Z||W| attained at Z = W = e1.
inline double euclid_norm(Bicomplex a) {
  return std::sqrt((std::norm(a.z1) + std::norm(a.z2)) / 2.0);
}

// Real part of each idempotent component; exact when the value is known to be
// hyperbolic (e.g. <x,x>).
inline Hyperbolic hyperbolic_part(Bicomplex a) { return {a.z1.real(), a.z2.real()}; }

// Zero divisors are exactly the values with a vanishing idempotent component.
inline bool is_null_cone(Bicomplex a, Tolerance tol = kNullConeTol) {
  const double m1 = std::abs(a.z1);
  const double m2 = std::abs(a.z2);
  const double thr = tol.rel * std::max({1.0, m1, m2}) + tol.abs;
  return m1 <= thr || m2 <= thr;
}

inline Bicomplex inverse(Bicomplex a, Tolerance tol = kNullConeTol) {
  if (is_null_cone(a, tol))
    throw NullConeError("inverse: value lies on the null cone");
  return {1.0 / a.z1, 1.0 / a.z2};
}

}  // namespace bcx
