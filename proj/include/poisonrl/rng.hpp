#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>

namespace poisonrl {

// Deterministic random source. All distributions are implemented explicitly
// on top of the raw mt19937_64 stream so that a given seed produces the same
// values on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(mix(seed)) {}

  // Uniform on [0, 1) with 53 bits of precision.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Integer in [0, n).
  int uniform_int(int n);

  // Standard normal via Box-Muller.
  double normal();

  Eigen::VectorXd normal_vector(int dim);

  // Uniform over the closed unit ball in R^dim (volume measure).
  Eigen::VectorXd uniform_ball(int dim);

 private:
  static std::uint64_t mix(std::uint64_t seed);

  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace poisonrl
