#include "poisonrl/rng.hpp"

#include <cmath>

namespace poisonrl {

std::uint64_t Rng::mix(std::uint64_t seed) {
  // splitmix64 step, decorrelates small consecutive seeds
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int Rng::uniform_int(int n) {
  return static_cast<int>(uniform() * n) % n;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  while (u1 == 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Eigen::VectorXd Rng::normal_vector(int dim) {
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = normal();
  return v;
}

Eigen::VectorXd Rng::uniform_ball(int dim) {
  Eigen::VectorXd v = normal_vector(dim);
  double norm = v.norm();
  while (norm == 0.0) {
    v = normal_vector(dim);
    norm = v.norm();
  }
  const double radius = std::pow(uniform(), 1.0 / dim);
  return v * (radius / norm);
}

}  // namespace poisonrl
