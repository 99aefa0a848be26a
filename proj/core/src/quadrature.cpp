#include "mazurlab/quadrature.hpp"

#include <cmath>

namespace mazurlab {

double integrate_log_scalar(const QuadratureScheme& scheme, double theta,
                            const std::function<double(double)>& f) {
  double acc = 0.0;
  for_each_log_node(scheme, [&](double v, double w) {
    const double t = std::exp(v);
    acc += w * std::exp(theta * v) * f(t);
  });
  return acc;
}

}  // namespace mazurlab
