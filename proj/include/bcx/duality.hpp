#pragma once

#include <cstdint>
#include <vector>

#include "bcx/linalg.hpp"

namespace bcx {

// Closed submodule M = e1*M1 + e2*M2 of a finite bicomplex module, stored as
// one orthonormal column basis per idempotent component. The component ranks
// may differ (e.g. generators that are e1-multiples contribute nothing to M2).
struct Submodule {
  Eigen::Index ambient = 0;
  CMatrix basis1;  // ambient x rank1, orthonormal columns
  CMatrix basis2;  // ambient x rank2, orthonormal columns

  Eigen::Index rank1() const { return basis1.cols(); }
  Eigen::Index rank2() const { return basis2.cols(); }
};

// Bounded module functional in Riesz form: f(x) = <x, riesz>.
struct Functional {
  BCVector riesz;

  Bicomplex operator()(const BCVector& x) const;
};

struct DualityReport {
  Hyperbolic max_violation_a;
  Hyperbolic max_violation_b;
  int trials = 0;
  std::uint64_t seed = 0;
};

// Rank-revealing orthonormalization of a span (columns of gens); singular
// directions below rel * sigma_0 are dropped.
CMatrix orthonormal_columns(const CMatrix& gens, double rel = 1e-10);

// Orthonormal basis of the orthogonal complement of an orthonormal basis.
CMatrix orthonormal_complement(const CMatrix& basis);

Submodule submodule_from_generators(Eigen::Index ambient_dim, const std::vector<BCVector>& gens,
                                    Tolerance tol = {1e-10, 0.0});

// Componentwise orthogonal projection onto M.
BCVector project(const BCVector& x, const Submodule& M);

// Hyperbolic distance from x to M, i.e. the quotient norm of x + M.
Hyperbolic quotient_norm(const BCVector& x, const Submodule& M);

// The annihilator of M under the Riesz pairing: componentwise orthogonal
// complement. annihilator(annihilator(M)) recovers M.
Submodule annihilator(const Submodule& M);

// Norm-preserving Hahn-Banach extension of a functional on M to the ambient
// module. The representer must lie in M (within tol); the extension keeps the
// same representer, read against the ambient module.
Functional extend_functional(const Functional& f, const Submodule& M, Tolerance tol = {1e-8, 1e-12});

// Randomized check of the two duality isometries:
//   (a) M' = X'/M^perp: the norm of a functional on M equals the quotient
//       norm of its extension's representer modulo M^perp;
//   (b) (X/M)' = M^perp: the norm of a functional on the quotient equals the
//       plain norm of its representer in M^perp.
// Reports the largest componentwise relative violation of each.
DualityReport check_dual_isometries(const Submodule& M, int trials, std::uint64_t seed);

}  // namespace bcx
