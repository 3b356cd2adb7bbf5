#pragma once

#include <vector>

#include "bcx/linalg.hpp"

namespace bcx {

// Truncated power series f(Z) = sum_{n=0}^{N} a_n Z^n with bicomplex
// coefficients; coeffs always holds exactly degree()+1 entries.
struct PowerSeries {
  std::vector<Bicomplex> coeffs;

  PowerSeries() : coeffs(1) {}
  explicit PowerSeries(std::vector<Bicomplex> c);

  static PowerSeries zero(int degree);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Bicomplex coeff(int n) const {
    return (n >= 0 && n <= degree()) ? coeffs[static_cast<std::size_t>(n)] : Bicomplex{};
  }
};

// Hyperbolic weight sequence beta(0..N) for the weighted Hardy space: each
// weight strictly positive componentwise and beta(0) = 1 exactly. The
// asymptotic condition lim beta(n)^{1/n} >= 1 concerns the full infinite
// sequence and cannot be checked on a finite prefix; it is not enforced.
struct WeightSequence {
  std::vector<Hyperbolic> beta;

  explicit WeightSequence(std::vector<Hyperbolic> b);

  static WeightSequence ones(int degree);

  int degree() const { return static_cast<int>(beta.size()) - 1; }
};

// Truncated analytic self-map of the bicomplex discus. Instances come either
// from trusted constructions that are exact coefficient prefixes of genuine
// self-maps (mobius_series, z * Blaschke products, composition with an
// origin-fixing inner map) or through certify_self_map, which samples the
// componentwise modulus on a near-boundary grid.
struct SelfMap {
  PowerSeries series;
};

// Hardy norm sqrt(sum |a_n|^2) componentwise; weighted variant uses
// sum |a_n|^2 beta(n)^2 and requires beta to cover the degree of f.
Hyperbolic hardy_norm(const PowerSeries& f);
Hyperbolic hardy_norm(const PowerSeries& f, const WeightSequence& beta);

// <f, g> = sum a_n conj3(b_n) (times beta(n)^2 when weighted); shorter series
// are zero-padded.
Bicomplex hardy_inner(const PowerSeries& f, const PowerSeries& g);
Bicomplex hardy_inner(const PowerSeries& f, const PowerSeries& g, const WeightSequence& beta);

// Coefficient embedding into the weighted sequence space, and the sequence
// norm computed there. The embedding is the identity on coefficients, so
// seq_norm(seq_embed(f), beta) reproduces hardy_norm(f, beta) exactly.
std::vector<Bicomplex> seq_embed(const PowerSeries& f);
Hyperbolic seq_norm(const std::vector<Bicomplex>& a);
Hyperbolic seq_norm(const std::vector<Bicomplex>& a, const WeightSequence& beta);

// Componentwise Horner evaluation.
Bicomplex evaluate(const PowerSeries& f, Bicomplex Z);

// Truncated composition: the degree-N prefix of f(phi(Z)), computed by
// truncated Horner. Coefficient n of the result depends only on coefficients
// 0..n of phi, so composing with the prefix of a self-map gives the exact
// prefix of the true composition whenever phi(0) = 0 (and in general is the
// composition with the truncated phi).
PowerSeries compose(const PowerSeries& f, const PowerSeries& phi, int N);
PowerSeries compose(const PowerSeries& f, const SelfMap& phi, int N);

// Largest componentwise excess max(|phi_i(z)| - 1) over a grid of `points`
// arguments of modulus `radius`.
double self_map_excess(const PowerSeries& s, int points = 256, double radius = 0.999);

// Gate an arbitrary series through the sampled grid check.
SelfMap certify_self_map(const PowerSeries& s, double tol = 1e-9, int points = 256,
                         double radius = 0.999);

// Degree-N prefix of the Mobius involution T_a(Z) = (a - Z)/(1 - conj3(a) Z):
// c_0 = a, c_k = -(1 - |a_i|^2) conj(a_i)^{k-1} componentwise. Requires
// |a_i| < 1 in both components.
SelfMap mobius_series(Bicomplex a, int N);

// Componentwise coefficients of (a - z)/(1 - conj(a) z) up to degree N.
std::vector<Complex> mobius_component_coeffs(Complex a, int N);

// Cayley transform L(W) = i(1 + W)/(1 - W) componentwise, mapping the discus
// onto the bicomplex upper half plane, and its inverse w = (zeta - i)/(zeta + i).
Bicomplex cayley(Bicomplex W, Tolerance tol = {});
Bicomplex cayley_inverse(Bicomplex Z, Tolerance tol = {});

// Matrix of the composition operator C_phi f = f . phi compressed to the
// monomial basis 1, Z, ..., Z^N: column k holds the coefficients of the
// truncated phi^k. For phi an exact self-map prefix this is the compression
// P_N C_phi P_N, so its hyperbolic operator norm is monotone in N and never
// exceeds the true operator norm.
BCMatrix composition_matrix(const SelfMap& phi, int N);

// Componentwise subordination bound sqrt((1 + |phi_i(0)|)/(1 - |phi_i(0)|)).
Hyperbolic littlewood_bound(const SelfMap& phi);

// Degree-capped coefficient product (convolution up to degree N).
std::vector<Complex> truncated_product(const std::vector<Complex>& a,
                                       const std::vector<Complex>& b, int N);

}  // namespace bcx
