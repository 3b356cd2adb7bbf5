#pragma once

#include <vector>

#include "bcx/duality.hpp"
#include "bcx/hardy.hpp"
#include "bcx/linalg.hpp"
#include "bcx/rng.hpp"

// Deterministic random generators shared by the property suites and the
// tests. Everything is a pure function of the Rng state.
namespace bcx::sampling {

CVector cvector(Rng& rng, Eigen::Index n);
CMatrix cmatrix(Rng& rng, Eigen::Index rows, Eigen::Index cols);

// Haar-ish unitary via QR of a Gaussian matrix with the R-diagonal phases
// normalized.
CMatrix unitary(Rng& rng, Eigen::Index n);

// U D U^H with a complex diagonal D.
CMatrix normal_matrix(Rng& rng, Eigen::Index n);

BCVector bc_vector(Rng& rng, Eigen::Index n);
BCMatrix bc_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols);

// Componentwise U_i D_i U_i^H with independent components.
BCMatrix bc_normal_matrix(Rng& rng, Eigen::Index n);

// A = B + j*C with B, C hermitian and commuting (simultaneously unitarily
// diagonalizable); the class on which normality and the cartesian hermitian
// check provably coincide.
BCMatrix commuting_hermitian_pair(Rng& rng, Eigen::Index n);

// Random submodule from a mixed bag of generators: full bicomplex vectors
// plus e1- and e2-multiples, so unequal component ranks occur routinely.
Submodule submodule(Rng& rng, Eigen::Index n);

// Gaussian coefficients up to the given degree.
PowerSeries series(Rng& rng, int degree);

// Random weight sequence with beta(0) = 1 and the remaining components
// uniform in [lo, hi].
WeightSequence weights(Rng& rng, int degree, double lo = 0.25, double hi = 4.0);

// Origin-fixing self-map z * prod_m b_{alpha_m}(z) (componentwise independent
// Blaschke factors, zeros of modulus <= max_zero), truncated to `degree`.
// Exact coefficient prefix of a genuine self-map with phi(0) = 0.
SelfMap origin_fixing_self_map(Rng& rng, int degree, int max_factors = 3, double max_zero = 0.7);

// T_a composed with an origin-fixing self-map; phi(0) = a with component
// moduli <= max_a.
SelfMap mobius_composite(Rng& rng, int degree, double max_a = 0.9);

}  // namespace bcx::sampling
