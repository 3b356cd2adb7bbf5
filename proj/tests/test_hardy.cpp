#include "doctest.h"

#include <cmath>

#include "bcx/hardy.hpp"
#include "bcx/sampling.hpp"
#include "test_util.hpp"

using namespace bcx;
using namespace testutil;

namespace {

const Complex I(0.0, 1.0);

PowerSeries series_from(std::initializer_list<Bicomplex> cs) {
  return PowerSeries(std::vector<Bicomplex>(cs));
}

// Z as a series
PowerSeries zee() { return series_from({Bicomplex{}, Bicomplex(1.0)}); }

}  // namespace

TEST_CASE("hardy norms and inner products, frozen values") {
  // f = 1 + Z: norm sqrt(2) in both components
  const PowerSeries f = series_from({Bicomplex(1.0), Bicomplex(1.0)});
  CHECK(hyp_close(hardy_norm(f), {std::sqrt(2.0), std::sqrt(2.0)}));
  CHECK(hyp_close(hardy_norm(series_from({Bicomplex(1.0)})), {1.0, 1.0}));

  // coefficients 3e1+4e2 and j: |j|_k = (1,1)
  const PowerSeries g = series_from({3.0 * e1() + 4.0 * e2(), unit_j()});
  CHECK(hyp_close(hardy_norm(g), {std::sqrt(10.0), std::sqrt(17.0)}));

  // weighted: beta = (1, 2e1+3e2) scales the linear coefficient
  const WeightSequence beta({{1.0, 1.0}, {2.0, 3.0}});
  CHECK(hyp_close(hardy_norm(zee(), beta), {2.0, 3.0}));
  CHECK(bc_close(hardy_inner(zee(), zee(), beta), 4.0 * e1() + 9.0 * e2()));

  // inner product against a different series, unweighted: conj3(1) = 1, so
  // <g, f> = a_0 + a_1 = 3e1 + 4e2 + j
  const Bicomplex ip = hardy_inner(g, f);
  CHECK(bc_close(ip, 3.0 * e1() + 4.0 * e2() + unit_j()));

  CHECK_THROWS_AS((void)hardy_norm(zee(), WeightSequence::ones(0)), DegreeMismatchError);
}

TEST_CASE("weight validation") {
  CHECK_THROWS_AS(WeightSequence({{1.0, 1.0}, {0.0, 1.0}}), InvalidWeightError);
  CHECK_THROWS_AS(WeightSequence({{1.0, 1.0}, {1.0, -2.0}}), InvalidWeightError);
  CHECK_THROWS_AS(WeightSequence({{1.0 + 1e-12, 1.0}}), InvalidWeightError);  // beta(0) != 1
  CHECK_THROWS_AS(WeightSequence({}), InvalidWeightError);
  CHECK(WeightSequence::ones(5).degree() == 5);
}

TEST_CASE("coefficient embedding is an exact isometry") {
  Rng rng(101);
  for (int t = 0; t < 60; ++t) {
    const PowerSeries f = sampling::series(rng, 1 + t % 24);
    const WeightSequence beta = sampling::weights(rng, f.degree(), 0.25, 4.0);
    const std::vector<Bicomplex> a = seq_embed(f);
    const Hyperbolic lhs = seq_norm(a, beta);
    const Hyperbolic rhs = hardy_norm(f, beta);
    CHECK(lhs.x1 == rhs.x1);  // identical arithmetic, bit-exact
    CHECK(lhs.x2 == rhs.x2);
    CHECK(hyp_close(seq_norm(a), hardy_norm(f)));
    // norm from the inner product
    CHECK(hyp_close(hyp_sqrt(hyperbolic_part(hardy_inner(f, f, beta))), rhs, 1e-12));
  }
}

TEST_CASE("evaluation") {
  // f = 2 + 3Z + Z^2 componentwise: f(0) = 2, f(2) = 12
  const PowerSeries f = series_from({Bicomplex(2.0), Bicomplex(3.0), Bicomplex(1.0)});
  const Bicomplex at = evaluate(f, 2.0 * e2());
  CHECK(bc_close(at, 2.0 * e1() + 12.0 * e2()));
  CHECK(bc_close(evaluate(f, Bicomplex{}), Bicomplex(2.0)));

  Rng rng(103);
  for (int t = 0; t < 40; ++t) {
    const PowerSeries g = sampling::series(rng, 1 + t % 12);
    const Bicomplex Z = rng.bc_box(0.8);
    // componentwise Horner against naive power summation
    Bicomplex naive{};
    Bicomplex p(1.0);
    for (int n = 0; n <= g.degree(); ++n) {
      naive = naive + g.coeff(n) * p;
      p = p * Z;
    }
    CHECK(bc_close(evaluate(g, Z), naive, 1e-10));
  }
}

TEST_CASE("truncated composition") {
  // (Z^2) o (Z/2) = Z^2/4
  const PowerSeries half = series_from({Bicomplex{}, Bicomplex(0.5)});
  const PowerSeries sq = series_from({Bicomplex{}, Bicomplex{}, Bicomplex(1.0)});
  const PowerSeries c = compose(sq, half, 2);
  CHECK(c.degree() == 2);
  CHECK(bc_close(c.coeff(0), Bicomplex{}));
  CHECK(bc_close(c.coeff(1), Bicomplex{}));
  CHECK(bc_close(c.coeff(2), Bicomplex(0.25)));

  // evaluate(compose(f, phi)) = evaluate(f, evaluate(phi)) when degrees suffice
  Rng rng(107);
  for (int t = 0; t < 30; ++t) {
    const int df = 1 + t % 5, dp = 1 + t % 4;
    const PowerSeries f = sampling::series(rng, df);
    PowerSeries phi = sampling::series(rng, dp);
    const int N = df * dp;
    const PowerSeries comp = compose(f, phi, N);
    CHECK(comp.degree() == N);
    const Bicomplex Z = rng.bc_box(0.5);
    CHECK(bc_close(evaluate(comp, Z), evaluate(f, evaluate(phi, Z)), 1e-9));
  }

  // prefix exactness for phi(0) = 0: composing prefixes matches the prefix of
  // the full composition
  for (int t = 0; t < 20; ++t) {
    PowerSeries phi = sampling::series(rng, 12);
    phi.coeffs[0] = Bicomplex{};
    const PowerSeries f = sampling::series(rng, 12);
    const int N = 6;
    const PowerSeries full = compose(f, phi, 12);
    PowerSeries phi_cut(std::vector<Bicomplex>(phi.coeffs.begin(), phi.coeffs.begin() + N + 1));
    PowerSeries f_cut(std::vector<Bicomplex>(f.coeffs.begin(), f.coeffs.begin() + N + 1));
    const PowerSeries pre = compose(f_cut, phi_cut, N);
    for (int n = 0; n <= N; ++n) CHECK(bc_close(pre.coeff(n), full.coeff(n), 1e-10));
  }
}

TEST_CASE("truncated coefficient products") {
  const std::vector<Complex> a{1.0, 2.0};
  const std::vector<Complex> b{3.0, 4.0};
  const std::vector<Complex> p = truncated_product(a, b, 2);
  REQUIRE(p.size() == 3);
  CHECK(cclose(p[0], 3.0));
  CHECK(cclose(p[1], 10.0));
  CHECK(cclose(p[2], 8.0));
  const std::vector<Complex> cut = truncated_product(a, b, 1);
  REQUIRE(cut.size() == 2);
  CHECK(cclose(cut[1], 10.0));
}

TEST_CASE("mobius series") {
  // T_0 = -Z exactly
  const SelfMap t0 = mobius_series(Bicomplex{}, 8);
  CHECK(bc_close(t0.series.coeff(0), Bicomplex{}));
  CHECK(bc_close(t0.series.coeff(1), Bicomplex(-1.0)));
  for (int n = 2; n <= 8; ++n) CHECK(euclid_norm(t0.series.coeff(n)) == 0.0);

  // frozen componentwise coefficients for a = 1/2
  const std::vector<Complex> c = mobius_component_coeffs(Complex(0.5), 3);
  CHECK(cclose(c[0], 0.5));
  CHECK(cclose(c[1], -0.75));
  CHECK(cclose(c[2], -0.375));
  CHECK(cclose(c[3], -0.1875));

  // complex a: c_1 = -(1 - |a|^2), c_{k+1} = c_k * conj(a)
  const Complex a(0.3, -0.4);
  const std::vector<Complex> cc = mobius_component_coeffs(a, 4);
  CHECK(cclose(cc[0], a));
  CHECK(cclose(cc[1], Complex(-0.75)));
  CHECK(cclose(cc[2], cc[1] * std::conj(a)));
  CHECK(cclose(cc[3], cc[2] * std::conj(a)));

  // T_a(T_a(Z)) = Z: check through evaluation, allowing the truncation tail
  Rng rng(109);
  for (int t = 0; t < 10; ++t) {
    const Bicomplex av = Bicomplex{rng.disk_point(0.6), rng.disk_point(0.6)};
    const SelfMap T = mobius_series(av, 96);
    CHECK(bc_close(evaluate(T.series, Bicomplex{}), av, 1e-12));
    const Bicomplex Z = Bicomplex{rng.disk_point(0.4), rng.disk_point(0.4)};
    const PowerSeries TT = compose(T.series, T.series, 96);
    // |a_i| <= 0.6 and |z_i| <= 0.4: geometric tails are far below 1e-9
    CHECK(bc_close(evaluate(TT, Z), Z, 1e-9));
  }

  CHECK_THROWS_AS((void)mobius_series(Bicomplex(1.5), 4), NotInDiscusError);
  CHECK_THROWS_AS((void)mobius_series(e1() + 0.5 * e2(), 4), NotInDiscusError);
}

TEST_CASE("self-map certification") {
  // honest self-maps pass
  (void)certify_self_map(mobius_series(Bicomplex{Complex(0.1), Complex(0.1)}, 48).series);
  (void)certify_self_map(series_from({Bicomplex{}, Bicomplex(0.9)}));
  // Z itself and constants inside the discus
  (void)certify_self_map(zee());
  (void)certify_self_map(series_from({0.3 * e1() + 0.2 * e2()}));

  // clear violations throw
  CHECK_THROWS_AS((void)certify_self_map(series_from({Bicomplex{}, Bicomplex(2.0)})),
                  NotSelfMapError);
  CHECK_THROWS_AS((void)certify_self_map(series_from({Bicomplex(1.5)})), NotSelfMapError);

  // excess is continuous-ish: 2Z has excess about 1 at the boundary grid
  const double ex = self_map_excess(series_from({Bicomplex{}, Bicomplex(2.0)}));
  CHECK(ex > 0.9);
  CHECK(self_map_excess(zee()) <= 0.0);
}

TEST_CASE("polynomial self-maps compose into self-maps") {
  // phi = (Z + Z^2)/2 maps the disk to itself; grid-certify, then compose
  const PowerSeries phi = series_from({Bicomplex{}, Bicomplex(0.5), Bicomplex(0.5)});
  const SelfMap sphi = certify_self_map(phi);
  Rng rng(113);
  const SelfMap inner = sampling::origin_fixing_self_map(rng, 24, 3, 0.3);
  const PowerSeries both = compose(sphi.series, inner.series, 24);
  (void)certify_self_map(both, 1e-6);  // truncation dust only, keep headroom
}

TEST_CASE("cayley transform") {
  // L(0) = i (componentwise), and the inverse undoes it
  const Bicomplex Li = cayley(Bicomplex{});
  CHECK(bc_close(Li, from_cartesian(I, Complex{})));
  CHECK(bc_close(cayley_inverse(Li), Bicomplex{}, 1e-14));

  Rng rng(127);
  for (int t = 0; t < 40; ++t) {
    const Bicomplex W = rng.bc_box(0.7);
    const Bicomplex Z = cayley(W);
    // componentwise: the open disk lands strictly in the upper half plane
    if (std::abs(W.z1) < 1.0 && std::abs(W.z2) < 1.0) {
      CHECK(Z.z1.imag() > 0.0);
      CHECK(Z.z2.imag() > 0.0);
    }
    CHECK(bc_close(cayley_inverse(Z), W, 1e-11));
    CHECK(bc_close(cayley(cayley_inverse(Z)), Z, 1e-10));
  }

  // pole at W = 1 in either component
  CHECK_THROWS_AS((void)cayley(Bicomplex(1.0)), PoleAtOneError);
  CHECK_THROWS_AS((void)cayley(e1() + 0.3 * e2()), PoleAtOneError);
  // inverse pole at Z = -i
  CHECK_THROWS_AS((void)cayley_inverse(from_cartesian(-I, Complex{})), PoleAtOneError);
}

TEST_CASE("composition matrix") {
  // C_Z is the identity compression
  const BCMatrix mz = composition_matrix(SelfMap{zee()}, 4);
  CHECK((mz.A1 - CMatrix::Identity(5, 5)).norm() <= 1e-14);
  CHECK((mz.A2 - CMatrix::Identity(5, 5)).norm() <= 1e-14);

  // phi = Z/2: diagonal with powers of 1/2
  const BCMatrix mh = composition_matrix(SelfMap{series_from({Bicomplex{}, Bicomplex(0.5)})}, 4);
  for (int k = 0; k <= 4; ++k) {
    CHECK(cclose(mh.A1(k, k), std::pow(0.5, k)));
  }
  CHECK(std::abs(mh.A1(0, 1)) == 0.0);

  // phi = constant c: first row holds c^k, rest zero
  const Bicomplex cst = 0.25 * e1() + 0.5 * e2();
  const BCMatrix mc = composition_matrix(SelfMap{series_from({cst})}, 3);
  CHECK(cclose(mc.A1(0, 2), 0.0625));
  CHECK(cclose(mc.A2(0, 3), 0.125));
  CHECK(std::abs(mc.A1(1, 1)) == 0.0);
  CHECK(cclose(mc.A1(0, 0), 1.0));

  // columns agree with compose(Z^k, phi)
  Rng rng(131);
  const SelfMap phi = sampling::mobius_composite(rng, 24, 0.8);
  const int N = 24;
  const BCMatrix m = composition_matrix(phi, N);
  for (int k : {0, 1, 2, 7, 24}) {
    PowerSeries mono = PowerSeries::zero(k);
    mono.coeffs[static_cast<std::size_t>(k)] = Bicomplex(1.0);
    const PowerSeries col = compose(mono, phi.series, N);
    for (int r = 0; r <= N; ++r) {
      CHECK(cclose(m.A1(r, k), col.coeff(r).z1, 1e-11));
      CHECK(cclose(m.A2(r, k), col.coeff(r).z2, 1e-11));
    }
  }

  // applying the matrix matches composing a polynomial
  const PowerSeries f = sampling::series(rng, N);
  CVector f1(N + 1), f2(N + 1);
  for (int n = 0; n <= N; ++n) {
    f1[n] = f.coeff(n).z1;
    f2[n] = f.coeff(n).z2;
  }
  const BCVector out = apply(m, BCVector{f1, f2});
  const PowerSeries ref = compose(f, phi.series, N);
  for (int n = 0; n <= N; ++n) {
    CHECK(cclose(out.v1[n], ref.coeff(n).z1, 1e-10));
    CHECK(cclose(out.v2[n], ref.coeff(n).z2, 1e-10));
  }
}

TEST_CASE("littlewood bound frozen values") {
  // phi(0) = 0.6 e1 + 0.8 e2 -> bound (2, 3)
  const SelfMap phi{series_from({0.6 * e1() + 0.8 * e2()})};
  CHECK(hyp_close(littlewood_bound(phi), {2.0, 3.0}));

  // origin-fixing: bound is exactly 1
  const Hyperbolic one = littlewood_bound(SelfMap{zee()});
  CHECK(one.x1 == 1.0);
  CHECK(one.x2 == 1.0);

  CHECK_THROWS_AS((void)littlewood_bound(SelfMap{series_from({Bicomplex(1.0)})}),
                  NotInDiscusError);
}

TEST_CASE("compression norms sit below the littlewood bound and grow in N") {
  Rng rng(137);
  for (int t = 0; t < 6; ++t) {
    const SelfMap phi = sampling::mobius_composite(rng, 64, 0.85);
    const Hyperbolic bound = littlewood_bound(phi);
    Hyperbolic prev{0.0, 0.0};
    for (int N : {4, 8, 16, 32, 64}) {
      PowerSeries cut(std::vector<Bicomplex>(phi.series.coeffs.begin(),
                                             phi.series.coeffs.begin() + N + 1));
      const Hyperbolic nrm = op_dnorm(composition_matrix(SelfMap{cut}, N)).dnorm;
      CHECK(nrm.x1 <= bound.x1 * (1 + 1e-9));
      CHECK(nrm.x2 <= bound.x2 * (1 + 1e-9));
      CHECK(prev.x1 <= nrm.x1 + 1e-11);
      CHECK(prev.x2 <= nrm.x2 + 1e-11);
      prev = nrm;
    }
  }
}

TEST_CASE("mobius factorization moves the base point to the origin") {
  // psi = T_{phi(0)} o phi fixes 0, and phi = T_{phi(0)} o psi recovers phi
  Rng rng(139);
  const int N = 64;
  for (int t = 0; t < 5; ++t) {
    const SelfMap phi = sampling::mobius_composite(rng, N, 0.6);
    const Bicomplex a = phi.series.coeff(0);
    const SelfMap Ta = mobius_series(a, N);
    const PowerSeries psi = compose(Ta.series, phi.series, N);
    CHECK(euclid_norm(psi.coeff(0)) <= 1e-10);

    PowerSeries psi0 = psi;
    psi0.coeffs[0] = Bicomplex{};  // clear the truncation dust before re-composing
    const PowerSeries back = compose(Ta.series, psi0, N);
    // prefix-exact route: compare low-order coefficients where tails are tiny
    for (int n = 0; n <= N / 2; ++n) {
      CHECK(bc_close(back.coeff(n), phi.series.coeff(n), 1e-6));
    }
  }
}
