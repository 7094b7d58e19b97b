#ifndef SUSYOSC_PHASE_SPACE_HPP
#define SUSYOSC_PHASE_SPACE_HPP

#include <complex>
#include <functional>
#include <span>

#include "susyosc/coherent.hpp"
#include "susyosc/grid.hpp"

namespace susyosc::phase_space {

struct WignerGrid {
    Grid xg;
    Grid pg;
    std::vector<double> w; // row-major, w[ix * pg.points + ip]
    double mass = 0.0;     // trapezoid mass over the grid
    double max_imag_residual = 0.0;

    double at(int ix, int ip) const { return w[static_cast<size_t>(ix) * pg.points + ip]; }
    double min_value() const;
};

// W(x,p) = (1/2pi) int psi*(x - y/2) psi(x + y/2) e^{ipy} dy, Simpson rule
// on y in [-Y, Y], Y = 2 max|x| + 12.  The state callable must decay at
// large |x|; defaults match the plotting grids.
WignerGrid wigner(const std::function<std::complex<double>(double)>& psi, const Grid& xg,
                  const Grid& pg, int y_points = 4001);

// Real-valued states (separate name: lambdas would otherwise convert to
// either std::function and make the overload ambiguous).
WignerGrid wigner_real(const std::function<double(double)>& psi, const Grid& xg, const Grid& pg,
                       int y_points = 4001);

struct Marginals {
    std::vector<double> position; // int W dp per x node
    std::vector<double> momentum; // int W dx per p node
};
Marginals wigner_marginals(const WignerGrid& wg);

// Closed form for the oscillator ground state: exp(-x^2 - p^2)/pi.
double wigner_vacuum(double x, double p);

struct NumberMoments {
    double n1;
    double n2;
};

// Occupation moments of a rung-probability vector.
NumberMoments number_moments(std::span<const double> probs);

// Q = (<N^2> - <N>^2)/<N> - 1.  Throws ZeroMeanOccupationError at <N> = 0;
// the z -> 0 limit of the coherent family is 0 (Poissonian).
double mandel_q(std::span<const double> probs);
double mandel_q(const coherent::CoherentState& s);
inline double mandel_q_zero_limit() { return 0.0; }

} // namespace susyosc::phase_space

#endif
