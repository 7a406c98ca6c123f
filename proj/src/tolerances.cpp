#include "choquet/tolerances.hpp"

#include <cmath>

namespace choquet::tol {

namespace {
double g_geo = 1e-9;
}

double geo() { return g_geo; }
void set_geo(double eps) { g_geo = eps; }

double round_coord(double x) {
  double r = std::nearbyint(x * 1e12) / 1e12;
  return r == 0.0 ? 0.0 : r;  // collapse -0.0
}

}  // namespace choquet::tol
