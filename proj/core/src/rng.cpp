#include "mazurlab/rng.hpp"

#include <cmath>

namespace mazurlab {

double Rng::log_uniform(double lo, double hi) {
  if (!(lo > 0.0) || !(hi >= lo)) throw DomainError("log_uniform needs 0 < lo <= hi");
  if (lo == hi) return lo;
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = uniform_pos();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 6.283185307179586476925286766559 * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

}  // namespace mazurlab
