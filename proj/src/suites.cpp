#include "bcx/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "bcx/json_io.hpp"
#include "bcx/rng.hpp"
#include "bcx/sampling.hpp"

namespace bcx {

namespace {

double relc(Complex a, Complex b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

double reld(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

// Per-idempotent-lane violation accumulator; lane-agnostic checks feed both.
struct Lanes {
  double v1 = 0.0;
  double v2 = 0.0;

  void lane(double a, double b) {
    v1 = std::max(v1, a);
    v2 = std::max(v2, b);
  }
  void both(double x) { lane(x, x); }
  void scalar(Bicomplex a, Bicomplex b) { lane(relc(a.z1, b.z1), relc(a.z2, b.z2)); }
  void hyp(Hyperbolic a, Hyperbolic b) { lane(reld(a.x1, b.x1), reld(a.x2, b.x2)); }
  double max() const { return std::max(v1, v2); }
};

SuiteResult finish(const char* name, const SuiteConfig& cfg, const Lanes& v, bool pass) {
  SuiteResult r;
  r.name = name;
  r.pass = pass;
  r.trials = cfg.trials;
  r.max_violation = {v.v1, v.v2};
  return r;
}

// --- algebra: ring laws, conjugations, moduli and the Euclidean bridge ----

SuiteResult suite_algebra(const SuiteConfig& cfg) {
  Lanes v;
  bool strict_ok = true;
  const Complex i(0.0, 1.0);
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(derive_seed(cfg.seed, "algebra", static_cast<std::uint64_t>(t)));
    const Bicomplex Z = rng.bc_box(10.0);
    const Bicomplex U = rng.bc_box(10.0);
    const Bicomplex W = rng.bc_box(10.0);
    const auto [z, w] = to_cartesian(Z);
    const auto [u, x] = to_cartesian(U);

    // round trips, both directions
    v.scalar(from_cartesian(z, w), Z);
    const Complex cz(rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0));
    const Complex cw(rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0));
    const auto [rz, rw] = to_cartesian(from_cartesian(cz, cw));
    v.both(std::max(relc(rz, cz), relc(rw, cw)));

    // ring laws and the cartesian product formula
    v.scalar((Z + U) + W, Z + (U + W));
    v.scalar(Z * U, U * Z);
    v.scalar((Z * U) * W, Z * (U * W));
    v.scalar(Z * (U + W), Z * U + Z * W);
    v.scalar(Z * U, from_cartesian(z * u - w * x, w * u + z * x));

    // conjugations against their cartesian definitions, involutivity and
    // the composition conj1 . conj2 = conj3
    v.scalar(conj1(Z), from_cartesian(std::conj(z), std::conj(w)));
    v.scalar(conj2(Z), from_cartesian(z, -w));
    v.scalar(conj3(Z), from_cartesian(std::conj(z), -std::conj(w)));
    v.scalar(conj1(conj1(Z)), Z);
    v.scalar(conj2(conj2(Z)), Z);
    v.scalar(conj3(conj3(Z)), Z);
    v.scalar(conj1(conj2(Z)), conj3(Z));
    v.scalar(conj3(Z * U), conj3(Z) * conj3(U));

    // moduli against their cartesian expansions:
    //   Z Z^{t1} = (|z|^2 - |w|^2) + 2j Re(z conj(w)),  Z Z^{t2} = z^2 + w^2
    v.scalar(modulus_j(Z), from_cartesian(Complex(std::norm(z) - std::norm(w), 0.0),
                                          Complex(2.0 * (z * std::conj(w)).real(), 0.0)));
    v.scalar(modulus_i(Z), from_cartesian(z * z + w * w, Complex{}));
    v.hyp(modulus_k(Z * U), modulus_k(Z) * modulus_k(U));
    v.scalar(Bicomplex(modulus_k(Z) * modulus_k(Z)), Z * conj3(Z));

    // Euclidean bridge and sqrt(2)-submultiplicativity (strict)
    v.both(reld(euclid_norm(Z), modulus_k(Z).magnitude()));
    if (euclid_norm(Z * U) > std::sqrt(2.0) * euclid_norm(Z) * euclid_norm(U)) strict_ok = false;
  }

  // attainment of the sqrt(2) constant at e1
  const double lhs = euclid_norm(e1() * e1());
  const double rhs = std::sqrt(2.0) * euclid_norm(e1()) * euclid_norm(e1());
  const bool attain_ok = std::abs(lhs - rhs) <= 1e-15;

  return finish("algebra", cfg, v, v.max() <= cfg.tol.rel && strict_ok && attain_ok);
}

// --- parallelogram: both norms, all dims 1..cfg.dim ------------------------

SuiteResult suite_parallelogram(const SuiteConfig& cfg) {
  Lanes v;
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(derive_seed(cfg.seed, "parallelogram", static_cast<std::uint64_t>(t)));
    const Eigen::Index n = 1 + t % cfg.dim;
    const BCVector x = sampling::bc_vector(rng, n);
    const BCVector y = sampling::bc_vector(rng, n);

    const Hyperbolic s = dnorm_vec(x + y);
    const Hyperbolic d = dnorm_vec(x - y);
    const Hyperbolic a = dnorm_vec(x);
    const Hyperbolic b = dnorm_vec(y);
    v.hyp({s.x1 * s.x1 + d.x1 * d.x1, s.x2 * s.x2 + d.x2 * d.x2},
          {2.0 * (a.x1 * a.x1 + b.x1 * b.x1), 2.0 * (a.x2 * a.x2 + b.x2 * b.x2)});

    const double se = euclid_vec(x + y), de = euclid_vec(x - y);
    const double ae = euclid_vec(x), be = euclid_vec(y);
    v.both(reld(se * se + de * de, 2.0 * (ae * ae + be * be)));

    // norm from inner product
    v.hyp(a, hyp_sqrt(hyperbolic_part(inner_product(x, x))));
  }
  return finish("parallelogram", cfg, v, v.max() <= cfg.tol.rel);
}

// --- normality: predicate vs componentwise oracle vs cartesian check -------

bool component_normal(const CMatrix& m, double rel) {
  const CMatrix c = m * m.adjoint() - m.adjoint() * m;
  return c.norm() <= rel * std::max(1.0, m.squaredNorm());
}

SuiteResult suite_normality(const SuiteConfig& cfg) {
  Lanes v;
  long disagreements = 0;
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(derive_seed(cfg.seed, "normality", static_cast<std::uint64_t>(t)));
    const Eigen::Index n = 2 + t % std::max(1, cfg.dim - 1);
    const bool constructed = (t % 2 == 0);
    const BCMatrix A =
        constructed ? sampling::commuting_hermitian_pair(rng, n) : sampling::bc_matrix(rng, n, n);

    const bool p = is_normal(A);
    const bool oracle = component_normal(A.A1, 1e-9) && component_normal(A.A2, 1e-9);
    const auto [B, C] = to_cartesian_matrix(A);
    const bool cart = cartesian_normal_check(B, C);

    if (p != oracle || p != cart || p != constructed) ++disagreements;
  }
  v.both(static_cast<double>(disagreements));
  return finish("normality", cfg, v, disagreements == 0);
}

// --- normal_norms: ||Ax|| = ||A*x|| iff A is normal ------------------------

SuiteResult suite_normal_norms(const SuiteConfig& cfg) {
  Lanes v;
  long detect_failures = 0;
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(derive_seed(cfg.seed, "normal_norms", static_cast<std::uint64_t>(t)));
    const Eigen::Index n = 2 + t % std::max(1, cfg.dim - 1);

    const BCMatrix A = sampling::bc_normal_matrix(rng, n);
    const BCMatrix As = adjoint(A);
    for (int s = 0; s < 5; ++s) {
      const BCVector x = sampling::bc_vector(rng, n);
      const Hyperbolic a = dnorm_vec(apply(A, x));
      const Hyperbolic b = dnorm_vec(apply(As, x));
      v.hyp(a, b);
    }

    // a generic matrix must reveal the difference on some sample vector
    const BCMatrix G = sampling::bc_matrix(rng, n, n);
    const BCMatrix Gs = adjoint(G);
    bool found1 = false, found2 = false;
    for (int s = 0; s < 64 && !(found1 && found2); ++s) {
      const BCVector x = sampling::bc_vector(rng, n);
      const Hyperbolic a = dnorm_vec(apply(G, x));
      const Hyperbolic b = dnorm_vec(apply(Gs, x));
      if (std::abs(a.x1 - b.x1) / std::max({1.0, a.x1, b.x1}) > 1e-6) found1 = true;
      if (std::abs(a.x2 - b.x2) / std::max({1.0, a.x2, b.x2}) > 1e-6) found2 = true;
    }
    if (!found1 || !found2) ++detect_failures;
  }
  return finish("normal_norms", cfg, v, v.max() <= cfg.tol.rel && detect_failures == 0);
}

// --- adjoint_norms: ||A*|| = ||A|| and ||A*A|| = ||A||^2 (D-norm) ----------

SuiteResult suite_adjoint_norms(const SuiteConfig& cfg) {
  Lanes v;
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(derive_seed(cfg.seed, "adjoint_norms", static_cast<std::uint64_t>(t)));
    const Eigen::Index n = 1 + t % cfg.dim;
    const BCMatrix A = sampling::bc_matrix(rng, n, n);
    const OperatorNormReport r = op_dnorm(A);
    const OperatorNormReport radj = op_dnorm(adjoint(A));
    v.hyp(radj.dnorm, r.dnorm);
    v.both(reld(radj.euclid, r.euclid));
    const Hyperbolic gram = op_dnorm(matmul(adjoint(A), A)).dnorm;
    v.hyp(gram, r.dnorm * r.dnorm);
  }
  return finish("adjoint_norms", cfg, v, v.max() <= cfg.tol.rel);
}

// --- cstar: Euclidean window ||A||^2 <= ||A*A|| <= sqrt(2)||A||^2 ----------

SuiteResult suite_cstar(const SuiteConfig& cfg) {
  Lanes v;
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(derive_seed(cfg.seed, "cstar", static_cast<std::uint64_t>(t)));
    const Eigen::Index n = 1 + t % cfg.dim;
    const BCMatrix A = sampling::bc_matrix(rng, n, n);
    const double a = op_dnorm(A).euclid;
    const double b = op_dnorm(matmul(adjoint(A), A)).euclid;
    const double scale = std::max(1.0, a * a);
    v.both(std::max({0.0, (a * a - b) / scale, (b - std::sqrt(2.0) * a * a) / scale}));
  }
  return finish("cstar", cfg, v, v.max() <= cfg.tol.rel);
}

// --- normal_power: ||A^2|| = ||A||^2 for normal A --------------------------

SuiteResult suite_normal_power(const SuiteConfig& cfg) {
  Lanes v;
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(derive_seed(cfg.seed, "normal_power", static_cast<std::uint64_t>(t)));
    const Eigen::Index n = 1 + t % cfg.dim;
    const BCMatrix A = sampling::bc_normal_matrix(rng, n);
    const OperatorNormReport r = op_dnorm(A);
    const OperatorNormReport r2 = op_dnorm(matmul(A, A));
    v.hyp(r2.dnorm, r.dnorm * r.dnorm);
    // Euclidean sandwich ||A||^2 <= ||A^2|| <= sqrt(2)||A||^2
    const double e = r.euclid, e2 = r2.euclid;
    const double scale = std::max(1.0, e * e);
    v.both(std::max({0.0, (e * e - e2) / scale, (e2 - std::sqrt(2.0) * e * e) / scale}));
  }
  return finish("normal_power", cfg, v, v.max() <= cfg.tol.rel);
}

// --- involution: *-algebra axioms and sqrt(2)-submultiplicativity ----------

SuiteResult suite_involution(const SuiteConfig& cfg) {
  Lanes v;
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(derive_seed(cfg.seed, "involution", static_cast<std::uint64_t>(t)));
    const Eigen::Index n = 1 + t % cfg.dim;
    const BCMatrix A = sampling::bc_matrix(rng, n, n);
    const BCMatrix B = sampling::bc_matrix(rng, n, n);
    const Bicomplex alpha = rng.bc_box(3.0);

    auto lane_frob = [](const BCMatrix& m, double s1, double s2) {
      return Hyperbolic{m.A1.norm() / std::max(1.0, s1), m.A2.norm() / std::max(1.0, s2)};
    };
    const double a1 = A.A1.norm(), a2 = A.A2.norm();
    const double b1 = B.A1.norm(), b2 = B.A2.norm();

    const Hyperbolic invo = lane_frob(adjoint(adjoint(A)) - A, a1, a2);
    v.lane(invo.x1, invo.x2);
    const Hyperbolic anti =
        lane_frob(adjoint(matmul(A, B)) - matmul(adjoint(B), adjoint(A)), a1 * b1, a2 * b2);
    v.lane(anti.x1, anti.x2);
    const Hyperbolic lin = lane_frob(
        adjoint(alpha * A + B) - (conj3(alpha) * adjoint(A) + adjoint(B)),
        std::abs(alpha.z1) * a1 + b1, std::abs(alpha.z2) * a2 + b2);
    v.lane(lin.x1, lin.x2);

    // Banach-algebra inequality in the Euclidean operator norm
    const double pn = op_dnorm(matmul(A, B)).euclid;
    const double bound = std::sqrt(2.0) * op_dnorm(A).euclid * op_dnorm(B).euclid;
    v.both(std::max(0.0, (pn - bound) / std::max(1.0, bound)));
  }
  return finish("involution", cfg, v, v.max() <= cfg.tol.rel);
}

// --- duality: the two quotient/annihilator isometries ----------------------

SuiteResult suite_duality(const SuiteConfig& cfg) {
  Lanes v;
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(derive_seed(cfg.seed, "duality", static_cast<std::uint64_t>(t)));
    const Eigen::Index n = 1 + t % cfg.dim;
    const Submodule M = sampling::submodule(rng, n);
    const DualityReport rep =
        check_dual_isometries(M, 2, derive_seed(cfg.seed, "duality-func", static_cast<std::uint64_t>(t)));
    v.lane(rep.max_violation_a.x1, rep.max_violation_a.x2);
    v.lane(rep.max_violation_b.x1, rep.max_violation_b.x2);

    // double annihilator recovers the submodule
    const Submodule Mpp = annihilator(annihilator(M));
    if (Mpp.rank1() != M.rank1() || Mpp.rank2() != M.rank2()) {
      v.both(1.0);
    } else {
      const double p1 =
          (M.basis1 * M.basis1.adjoint() - Mpp.basis1 * Mpp.basis1.adjoint()).norm();
      const double p2 =
          (M.basis2 * M.basis2.adjoint() - Mpp.basis2 * Mpp.basis2.adjoint()).norm();
      v.lane(p1, p2);
    }
  }
  return finish("duality", cfg, v, v.max() <= cfg.tol.rel);
}

// --- weighted_isometry: coefficient embedding into the sequence space ------

SuiteResult suite_weighted_isometry(const SuiteConfig& cfg) {
  Lanes v;
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(derive_seed(cfg.seed, "weighted_isometry", static_cast<std::uint64_t>(t)));
    const int deg = 1 + t % cfg.degree;
    const PowerSeries f = sampling::series(rng, deg);
    const WeightSequence beta = sampling::weights(rng, deg);
    v.hyp(seq_norm(seq_embed(f), beta), hardy_norm(f, beta));
    if (t % 3 == 0) v.hyp(seq_norm(seq_embed(f)), hardy_norm(f));
    // norm from the weighted inner product
    v.hyp(hyp_sqrt(hyperbolic_part(hardy_inner(f, f, beta))), hardy_norm(f, beta));
  }
  return finish("weighted_isometry", cfg, v, v.max() <= 1e-12);
}

// --- subordination: ||f . phi|| <= ||f|| for origin-fixing self-maps -------

SuiteResult suite_subordination(const SuiteConfig& cfg) {
  Lanes v;
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(derive_seed(cfg.seed, "subordination", static_cast<std::uint64_t>(t)));
    const SelfMap phi = sampling::origin_fixing_self_map(rng, cfg.degree);
    for (int s = 0; s < 20; ++s) {
      const PowerSeries f = sampling::series(rng, cfg.degree);
      const Hyperbolic lhs = hardy_norm(compose(f, phi, cfg.degree));
      const Hyperbolic rhs = hardy_norm(f);
      v.lane(std::max(0.0, (lhs.x1 - rhs.x1) / std::max(1.0, rhs.x1)),
             std::max(0.0, (lhs.x2 - rhs.x2) / std::max(1.0, rhs.x2)));
    }
  }
  return finish("subordination", cfg, v, v.max() <= 1e-12);
}

// --- littlewood: compressed composition operators under the bound ----------

SuiteResult suite_littlewood(const SuiteConfig& cfg) {
  Lanes v;
  bool exact_ok = true;
  const int n1 = cfg.degree;
  const int n2 = 2 * cfg.degree;
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(derive_seed(cfg.seed, "littlewood", static_cast<std::uint64_t>(t)));
    SelfMap phi = sampling::mobius_composite(rng, n2, 0.9);
    if (t == 0) {
      // the centered case: bound must be exactly 1
      const SelfMap inner = sampling::origin_fixing_self_map(rng, n2);
      phi = SelfMap{compose(mobius_series(Bicomplex{}, n2).series, inner.series, n2)};
      const Hyperbolic b0 = littlewood_bound(phi);
      if (b0.x1 != 1.0 || b0.x2 != 1.0) exact_ok = false;
    }
    const Hyperbolic bound = littlewood_bound(phi);
    const Hyperbolic m1 = op_dnorm(composition_matrix(phi, n1)).dnorm;
    const Hyperbolic m2 = op_dnorm(composition_matrix(phi, n2)).dnorm;
    // compressions stay below the subordination bound ...
    v.lane(std::max({0.0, m1.x1 - bound.x1, m2.x1 - bound.x1}),
           std::max({0.0, m1.x2 - bound.x2, m2.x2 - bound.x2}));
    // ... and are nondecreasing in the truncation degree
    v.lane(std::max(0.0, m1.x1 - m2.x1), std::max(0.0, m1.x2 - m2.x2));
  }
  return finish("littlewood", cfg, v, v.max() <= 1e-6 && exact_ok);
}

// --- mobius: T_a(0) = a, T_a(a) = 0, T_a . T_a = id up to truncation -------

SuiteResult suite_mobius(const SuiteConfig& cfg) {
  Lanes v;
  const int N = std::max(64, cfg.degree);
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(derive_seed(cfg.seed, "mobius", static_cast<std::uint64_t>(t)));
    const Bicomplex a = (t == 0) ? Bicomplex{} : Bicomplex{rng.disk_point(0.9), rng.disk_point(0.9)};
    const SelfMap T = mobius_series(a, N);
    const double tail1 = std::pow(std::abs(a.z1), N);
    const double tail2 = std::pow(std::abs(a.z2), N);

    // T_a(0) = a, exactly (Horner at 0 returns the constant coefficient)
    v.scalar(evaluate(T.series, Bicomplex{}), a);

    // T_a(a) = 0 up to the truncation tail
    const Bicomplex at_a = evaluate(T.series, a);
    v.lane(std::max(0.0, std::abs(at_a.z1) - (tail1 + 1e-14)),
           std::max(0.0, std::abs(at_a.z2) - (tail2 + 1e-14)));

    // T_a(T_a(z)) = z on sample points, up to the truncation tail
    const PowerSeries idem = compose(T.series, T.series, N);
    for (int s = 0; s < 4; ++s) {
      const Bicomplex z{rng.disk_point(0.5), rng.disk_point(0.5)};
      const Bicomplex r = evaluate(idem, z);
      v.lane(std::max(0.0, std::abs(r.z1 - z.z1) - (tail1 + 1e-11)),
             std::max(0.0, std::abs(r.z2 - z.z2) - (tail2 + 1e-11)));
    }

    if (t == 0) {
      // T_0 = -Z with exact coefficients
      const PowerSeries& s0 = T.series;
      double worst = std::abs(s0.coeff(1).z1 + 1.0) + std::abs(s0.coeff(1).z2 + 1.0);
      for (int k = 0; k <= s0.degree(); ++k)
        if (k != 1) worst += std::abs(s0.coeff(k).z1) + std::abs(s0.coeff(k).z2);
      v.both(worst);
    }
  }
  return finish("mobius", cfg, v, v.max() <= cfg.tol.rel);
}

// --- registry ---------------------------------------------------------------

using SuiteFn = SuiteResult (*)(const SuiteConfig&);

struct SuiteEntry {
  const char* name;
  SuiteFn fn;
};

// Kept in alphabetical order; reports list suites in this order.
constexpr SuiteEntry kSuites[] = {
    {"adjoint_norms", suite_adjoint_norms},
    {"algebra", suite_algebra},
    {"cstar", suite_cstar},
    {"duality", suite_duality},
    {"involution", suite_involution},
    {"littlewood", suite_littlewood},
    {"mobius", suite_mobius},
    {"normal_norms", suite_normal_norms},
    {"normal_power", suite_normal_power},
    {"normality", suite_normality},
    {"parallelogram", suite_parallelogram},
    {"subordination", suite_subordination},
    {"weighted_isometry", suite_weighted_isometry},
};

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& e : kSuites) names.emplace_back(e.name);
  return names;
}

void validate_config(const SuiteConfig& cfg) {
  if (cfg.trials < 1) throw InvalidConfigError("config: trials must be >= 1");
  if (cfg.dim < 1 || cfg.dim > 16) throw InvalidConfigError("config: dim must be in 1..16");
  if (cfg.degree < 1 || cfg.degree > 128)
    throw InvalidConfigError("config: degree must be in 1..128");
  if (!(cfg.tol.rel > 0.0) || cfg.tol.abs < 0.0)
    throw InvalidConfigError("config: tol.rel must be positive and tol.abs non-negative");
}

Report run_verify(const SuiteConfig& cfg) {
  validate_config(cfg);
  for (const auto& want : cfg.suites) {
    const bool known = std::any_of(std::begin(kSuites), std::end(kSuites),
                                   [&](const SuiteEntry& e) { return want == e.name; });
    if (!known) throw UnknownSuiteError("unknown suite: " + want);
  }

  Report rep;
  rep.config = cfg;
  rep.overall_pass = true;
  for (const auto& e : kSuites) {
    if (!cfg.suites.empty() &&
        std::find(cfg.suites.begin(), cfg.suites.end(), e.name) == cfg.suites.end())
      continue;
    const auto start = std::chrono::steady_clock::now();
    SuiteResult r = e.fn(cfg);
    r.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    rep.overall_pass = rep.overall_pass && r.pass;
    rep.results.push_back(std::move(r));
  }
  return rep;
}

std::string report_to_json(const Report& r) {
  Json suites = Json::array();
  for (const auto& s : r.results) {
    suites.push_back(Json{{"suite", s.name},
                          {"pass", s.pass},
                          {"trials", s.trials},
                          {"max_violation", s.max_violation}});
  }
  Json names = Json::array();
  for (const auto& s : r.results) names.push_back(s.name);
  const Json j{{"config", Json{{"seed", r.config.seed},
                               {"trials", r.config.trials},
                               {"dim", r.config.dim},
                               {"degree", r.config.degree},
                               {"tol", Json{{"rel", r.config.tol.rel}, {"abs", r.config.tol.abs}}},
                               {"suites", std::move(names)}}},
               {"suites", std::move(suites)},
               {"overall_pass", r.overall_pass}};
  return j.dump();
}

std::string report_to_text(const Report& r) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-18s %-5s %8s  %-24s %10s\n", "suite", "pass", "trials",
                "max_violation", "time");
  out << line;
  for (const auto& s : r.results) {
    std::snprintf(line, sizeof(line), "%-18s %-5s %8ld  %-11.3e %-11.3e %8.1f ms\n",
                  s.name.c_str(), s.pass ? "ok" : "FAIL", s.trials,
                  s.max_violation.size() > 0 ? s.max_violation[0] : 0.0,
                  s.max_violation.size() > 1 ? s.max_violation[1] : 0.0, s.wall_ms);
    out << line;
  }
  out << "overall: " << (r.overall_pass ? "PASS" : "FAIL") << " (" << r.results.size()
      << " suites)\n";
  return out.str();
}

}  // namespace bcx
