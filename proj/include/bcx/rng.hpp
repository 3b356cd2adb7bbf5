#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

#include "bcx/bicomplex.hpp"

namespace bcx {

// SplitMix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Counter-based seed derivation: trial k of the sweep labelled `label` under
// a master seed gets mix64(mix64(master ^ fnv1a64(label)) + k). Trials are
// order-independent and reproducible from (master, label, k) alone.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view label, std::uint64_t k) {
  return mix64(mix64(master ^ fnv1a64(label)) + k);
}

// Deterministic PRNG (SplitMix64 stream) with the handful of distributions
// the property suites need. Box-Muller is hand-rolled so the byte-identical
// report guarantee does not depend on the C++ runtime's distribution code.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // Uniform integer in [lo, hi] inclusive.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u = 1.0 - uniform();  // (0, 1]
    const double v = uniform();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double t = 2.0 * std::numbers::pi * v;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

  Complex cnormal() { return {normal(), normal()}; }

  // Uniform over the closed disk of the given radius.
  Complex disk_point(double radius) {
    const double r = radius * std::sqrt(uniform());
    const double t = 2.0 * std::numbers::pi * uniform();
    return {r * std::cos(t), r * std::sin(t)};
  }

  // Idempotent components uniform over the square [-r, r]^2.
  Bicomplex bc_box(double r) {
    return {Complex(uniform(-r, r), uniform(-r, r)), Complex(uniform(-r, r), uniform(-r, r))};
  }

  Bicomplex bc_normal() { return {cnormal(), cnormal()}; }

  Hyperbolic hyp_box(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi)}; }

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace bcx
