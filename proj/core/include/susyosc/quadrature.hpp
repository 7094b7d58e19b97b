#ifndef SUSYOSC_QUADRATURE_HPP
#define SUSYOSC_QUADRATURE_HPP

#include <functional>
#include <span>
#include <vector>

namespace susyosc {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int panels = 0;
};

// Nodes/weights of the n-point Gauss-Legendre rule on [-1,1], computed by
// Newton iteration on the Legendre recurrence and cached per n.
const std::vector<std::pair<double, double>>& gauss_legendre(int n);

// Adaptive Gauss-Legendre quadrature on [a,b].  Panels are bisected
// worst-error-first; throws QuadratureError once the refinement budget is
// exhausted with the tolerance unmet.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol = 1e-10, int max_refinements = 60);

// Integral over (0, inf) via the rational map t = s/(1-s).
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double rel_tol = 1e-10, int max_refinements = 60);

// Composite rules on uniformly sampled data with spacing h.
double trapezoid(std::span<const double> y, double h);
double simpson(std::span<const double> y, double h); // y.size() must be odd

} // namespace susyosc

#endif
