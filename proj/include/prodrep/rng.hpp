#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "prodrep/cmatrix.hpp"

namespace prodrep {

// Seeded generator with explicitly constructed distributions, so a given
// seed yields the same stream on every platform (std::mt19937_64 output is
// standardized; std::uniform_real_distribution et al. are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t bits() { return gen_(); }

  // Uniform in [0, 1) with 53 random mantissa bits.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound). The slight modulo bias is irrelevant for
  // fixture generation and keeps the stream consumption fixed.
  std::uint64_t below(std::uint64_t bound) { return gen_() % bound; }

  // Standard normal via Box-Muller.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  algebra::Complex complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace prodrep
