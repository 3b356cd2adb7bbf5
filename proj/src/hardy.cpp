#include "bcx/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace bcx {

namespace {

std::vector<Complex> component(const PowerSeries& f, int which) {
  std::vector<Complex> c(f.coeffs.size());
  for (std::size_t n = 0; n < f.coeffs.size(); ++n)
    c[n] = (which == 1) ? f.coeffs[n].z1 : f.coeffs[n].z2;
  return c;
}

// Horner composition of one idempotent component, truncated to degree N.
std::vector<Complex> compose_component(const std::vector<Complex>& f,
                                       const std::vector<Complex>& phi, int N) {
  std::vector<Complex> r{f.back()};
  for (int k = static_cast<int>(f.size()) - 2; k >= 0; --k) {
    r = truncated_product(r, phi, N);
    r[0] += f[static_cast<std::size_t>(k)];
  }
  r.resize(static_cast<std::size_t>(N) + 1, Complex{});
  return r;
}

Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex r{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + *it;
  return r;
}

void require_discus(Bicomplex a, const char* what) {
  if (std::abs(a.z1) >= 1.0 || std::abs(a.z2) >= 1.0)
    throw NotInDiscusError(std::string(what) + ": a component has modulus >= 1");
}

}  // namespace

PowerSeries::PowerSeries(std::vector<Bicomplex> c) : coeffs(std::move(c)) {
  if (coeffs.empty()) coeffs.resize(1);
}

PowerSeries PowerSeries::zero(int degree) {
  if (degree < 0) throw InvalidConfigError("PowerSeries::zero: negative degree");
  return PowerSeries(std::vector<Bicomplex>(static_cast<std::size_t>(degree) + 1));
}

WeightSequence::WeightSequence(std::vector<Hyperbolic> b) : beta(std::move(b)) {
  if (beta.empty() || beta[0].x1 != 1.0 || beta[0].x2 != 1.0)
    throw InvalidWeightError("WeightSequence: beta(0) must be 1");
  for (const auto& w : beta)
    if (!w.strictly_positive())
      throw InvalidWeightError("WeightSequence: weights must be strictly positive");
}

WeightSequence WeightSequence::ones(int degree) {
  if (degree < 0) throw InvalidConfigError("WeightSequence::ones: negative degree");
  return WeightSequence(
      std::vector<Hyperbolic>(static_cast<std::size_t>(degree) + 1, Hyperbolic{1.0, 1.0}));
}

Hyperbolic hardy_norm(const PowerSeries& f) {
  double s1 = 0.0, s2 = 0.0;
  for (const auto& a : f.coeffs) {
    s1 += std::norm(a.z1);
    s2 += std::norm(a.z2);
  }
  return {std::sqrt(s1), std::sqrt(s2)};
}

Hyperbolic hardy_norm(const PowerSeries& f, const WeightSequence& beta) {
  if (beta.degree() < f.degree())
    throw DegreeMismatchError("hardy_norm: weight sequence shorter than the series");
  double s1 = 0.0, s2 = 0.0;
  for (std::size_t n = 0; n < f.coeffs.size(); ++n) {
    const auto& a = f.coeffs[n];
    const auto& w = beta.beta[n];
    s1 += std::norm(a.z1) * w.x1 * w.x1;
    s2 += std::norm(a.z2) * w.x2 * w.x2;
  }
  return {std::sqrt(s1), std::sqrt(s2)};
}

Bicomplex hardy_inner(const PowerSeries& f, const PowerSeries& g) {
  Complex s1{}, s2{};
  const int top = std::max(f.degree(), g.degree());
  for (int n = 0; n <= top; ++n) {
    const Bicomplex a = f.coeff(n);
    const Bicomplex b = g.coeff(n);
    s1 += a.z1 * std::conj(b.z1);
    s2 += a.z2 * std::conj(b.z2);
  }
  return {s1, s2};
}

Bicomplex hardy_inner(const PowerSeries& f, const PowerSeries& g, const WeightSequence& beta) {
  const int top = std::max(f.degree(), g.degree());
  if (beta.degree() < top)
    throw DegreeMismatchError("hardy_inner: weight sequence shorter than the series");
  Complex s1{}, s2{};
  for (int n = 0; n <= top; ++n) {
    const Bicomplex a = f.coeff(n);
    const Bicomplex b = g.coeff(n);
    const Hyperbolic w = beta.beta[static_cast<std::size_t>(n)];
    s1 += a.z1 * std::conj(b.z1) * (w.x1 * w.x1);
    s2 += a.z2 * std::conj(b.z2) * (w.x2 * w.x2);
  }
  return {s1, s2};
}

std::vector<Bicomplex> seq_embed(const PowerSeries& f) {
  return f.coeffs;
}

Hyperbolic seq_norm(const std::vector<Bicomplex>& a) {
  double s1 = 0.0, s2 = 0.0;
  for (const auto& c : a) {
    s1 += std::norm(c.z1);
    s2 += std::norm(c.z2);
  }
  return {std::sqrt(s1), std::sqrt(s2)};
}

Hyperbolic seq_norm(const std::vector<Bicomplex>& a, const WeightSequence& beta) {
  if (static_cast<std::size_t>(beta.degree()) + 1 < a.size())
    throw DegreeMismatchError("seq_norm: weight sequence shorter than the sequence");
  double s1 = 0.0, s2 = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    const auto& w = beta.beta[n];
    s1 += std::norm(a[n].z1) * w.x1 * w.x1;
    s2 += std::norm(a[n].z2) * w.x2 * w.x2;
  }
  return {std::sqrt(s1), std::sqrt(s2)};
}

Bicomplex evaluate(const PowerSeries& f, Bicomplex Z) {
  Bicomplex r{};
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) r = r * Z + *it;
  return r;
}

std::vector<Complex> truncated_product(const std::vector<Complex>& a,
                                       const std::vector<Complex>& b, int N) {
  const int da = static_cast<int>(a.size()) - 1;
  const int db = static_cast<int>(b.size()) - 1;
  const int dr = std::min(N, da + db);
  std::vector<Complex> r(static_cast<std::size_t>(std::max(0, dr)) + 1, Complex{});
  for (int i = 0; i <= da; ++i) {
    if (a[static_cast<std::size_t>(i)] == Complex{}) continue;
    const int jmax = std::min(db, dr - i);
    for (int j = 0; j <= jmax; ++j)
      r[static_cast<std::size_t>(i + j)] +=
          a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
  }
  return r;
}

PowerSeries compose(const PowerSeries& f, const PowerSeries& phi, int N) {
  if (N < 0) throw InvalidConfigError("compose: negative truncation degree");
  const auto r1 = compose_component(component(f, 1), component(phi, 1), N);
  const auto r2 = compose_component(component(f, 2), component(phi, 2), N);
  std::vector<Bicomplex> out(static_cast<std::size_t>(N) + 1);
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = {r1[n], r2[n]};
  return PowerSeries(std::move(out));
}

PowerSeries compose(const PowerSeries& f, const SelfMap& phi, int N) {
  return compose(f, phi.series, N);
}

double self_map_excess(const PowerSeries& s, int points, double radius) {
  const auto c1 = component(s, 1);
  const auto c2 = component(s, 2);
  double worst = -1.0;
  for (int k = 0; k < points; ++k) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / points;
    const Complex z{radius * std::cos(t), radius * std::sin(t)};
    worst = std::max({worst, std::abs(horner(c1, z)) - 1.0, std::abs(horner(c2, z)) - 1.0});
  }
  return worst;
}

SelfMap certify_self_map(const PowerSeries& s, double tol, int points, double radius) {
  const double excess = self_map_excess(s, points, radius);
  if (excess > tol)
    throw NotSelfMapError("certify_self_map: componentwise modulus exceeds 1 by " +
                          std::to_string(excess) + " on the sampling grid");
  return SelfMap{s};
}

std::vector<Complex> mobius_component_coeffs(Complex a, int N) {
  std::vector<Complex> c(static_cast<std::size_t>(N) + 1, Complex{});
  c[0] = a;
  if (N >= 1) {
    const Complex head = -(1.0 - std::norm(a));
    Complex pw{1.0};
    for (int k = 1; k <= N; ++k) {
      c[static_cast<std::size_t>(k)] = head * pw;
      pw *= std::conj(a);
    }
  }
  return c;
}

SelfMap mobius_series(Bicomplex a, int N) {
  if (N < 0) throw InvalidConfigError("mobius_series: negative degree");
  require_discus(a, "mobius_series");
  const auto c1 = mobius_component_coeffs(a.z1, N);
  const auto c2 = mobius_component_coeffs(a.z2, N);
  std::vector<Bicomplex> out(static_cast<std::size_t>(N) + 1);
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = {c1[n], c2[n]};
  return SelfMap{PowerSeries(std::move(out))};
}

Bicomplex cayley(Bicomplex W, Tolerance tol) {
  const Complex i(0.0, 1.0);
  auto comp = [&](Complex w) {
    if (std::abs(1.0 - w) <= tol.rel * std::max(1.0, std::abs(w)) + tol.abs)
      throw PoleAtOneError("cayley: component at the pole w = 1");
    return i * (1.0 + w) / (1.0 - w);
  };
  return {comp(W.z1), comp(W.z2)};
}

Bicomplex cayley_inverse(Bicomplex Z, Tolerance tol) {
  const Complex i(0.0, 1.0);
  auto comp = [&](Complex z) {
    if (std::abs(z + i) <= tol.rel * std::max(1.0, std::abs(z)) + tol.abs)
      throw PoleAtOneError("cayley_inverse: component at the pole zeta = -i");
    return (z - i) / (z + i);
  };
  return {comp(Z.z1), comp(Z.z2)};
}

BCMatrix composition_matrix(const SelfMap& phi, int N) {
  if (N < 0) throw InvalidConfigError("composition_matrix: negative degree");
  auto fill = [N](const std::vector<Complex>& c) {
    CMatrix m = CMatrix::Zero(N + 1, N + 1);
    m(0, 0) = Complex{1.0};
    std::vector<Complex> power{Complex{1.0}};
    for (int k = 1; k <= N; ++k) {
      power = truncated_product(power, c, N);
      for (int n = 0; n < static_cast<int>(power.size()); ++n)
        m(n, k) = power[static_cast<std::size_t>(n)];
    }
    return m;
  };
  return {fill(component(phi.series, 1)), fill(component(phi.series, 2))};
}

Hyperbolic littlewood_bound(const SelfMap& phi) {
  const Bicomplex c0 = phi.series.coeff(0);
  require_discus(c0, "littlewood_bound");
  const double m1 = std::abs(c0.z1);
  const double m2 = std::abs(c0.z2);
  return {std::sqrt((1.0 + m1) / (1.0 - m1)), std::sqrt((1.0 + m2) / (1.0 - m2))};
}

}  // namespace bcx
