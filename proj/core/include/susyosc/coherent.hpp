#ifndef SUSYOSC_COHERENT_HPP
#define SUSYOSC_COHERENT_HPP

#include <complex>
#include <vector>

#include "susyosc/grid.hpp"
#include "susyosc/ladder.hpp"

namespace susyosc::coherent {

using ladder::LadderPair;
using ladder::Subspace;

struct Pochhammers {
    double a, b, c, d;
};

// Parameter quadruple of the coefficient law for subspace nu:
// a = (2nu - 2eps + 5)/4, b = (2nu - 2eps + 1)/4,
// c = (nu + 4)/2,          d = (nu + 1)/2.
Pochhammers pochhammers(int nu, double eps);

// Annihilation-operator eigenstate of L- with eigenvalue z, expanded in the
// energy basis of subspace nu:
//   c_n = c_0 (z/4)^n / sqrt((a)_n (b)_n (c)_n (d)_n),
//   c_0 = 1F4(1; a,b,c,d; |z|^2/16)^{-1/2}.
struct CoherentState {
    int nu;
    std::complex<double> z;
    double eps, gamma;
    int nmax;
    std::vector<std::complex<double>> coeffs;
    Pochhammers pocha;

    Subspace subspace() const;
    double mean_occupation() const;        // <N>, N = rung index
    double second_occupation_moment() const; // <N^2>
};

// nmax < 0 grows the cutoff adaptively until |c_nmax|^2 < tail_tol.
CoherentState make_coherent(int nu, std::complex<double> z, double eps, double gamma,
                            int nmax = -1, double tail_tol = 1e-16);

double normalization_c0(int nu, double eps, double abs_z);

// <z'|z> = c0(z',z') c0(z,z) / c0^2(z',z) with the bilinear c0 evaluated at
// conj(z') z / 16.
std::complex<double> overlap(const CoherentState& zprime, const CoherentState& zstate);

// Primary route: E = nu + 1/2 + 2 <N> from the coefficient probabilities.
double mean_energy(const CoherentState& s);

// Closed form with the corrected parameter shifts:
//   nu + 1/2 + 8|z|^2 / [(2nu-2eps+5)(2nu-2eps+1)(nu+1)(nu+4)]
//            * 1F4(2; a+1,b+1,c+1,d+1; w) / 1F4(1; a,b,c,d; w).
double mean_energy_closed(int nu, double eps, double abs_z);

// The same closed form as commonly quoted, with first numerator lower
// parameter (2nu-2eps+8)/4 instead of (2nu-2eps+9)/4 and third denominator
// lower parameter (nu+5)/2 instead of (nu+4)/2.  Reported side by side;
// it does not match the direct sum.
double mean_energy_printed(int nu, double eps, double abs_z);

// U(t)|z> = e^{-i(nu+1/2)t} |z e^{-2it}>.
std::complex<double> evolution_phase(const CoherentState& s, double t);
CoherentState evolve(const CoherentState& s, double t);

// Position density of the evolving state on a grid,
// rho(x,t) = |sum_n c_n e^{-2int} b_n(x)|^2.
GridFunction density(const LadderPair& pair, const CoherentState& s, double t, const Grid& grid);

// Fixed-time wavefunction evaluator.  The Darboux map is linear, so the
// superposition costs one oscillator-family sweep plus a single B+
// application per query instead of one per rung; rung weights are frozen at
// construction.  Values include the global phase e^{-i(nu+1/2)t}.
class Snapshot {
  public:
    Snapshot(const LadderPair& pair, const CoherentState& s, double t);
    std::complex<double> operator()(double x) const;

  private:
    const LadderPair* pair_;
    std::complex<double> phase_;
    std::complex<double> missing_weight_ = 0.0; // nu = -2 bottom rung
    std::vector<std::pair<int, std::complex<double>>> osc_weights_; // (fock index, weight)
    int kmax_ = -1;
};

// Complex state amplitude at one point (used by the Wigner transform).
std::complex<double> snapshot_value(const LadderPair& pair, const CoherentState& s, double t,
                                    double x);

// Completeness measure on subspace nu:
//   mu(z) = f(|z|^2) / (16 pi c0^2(z,z) Gamma(a)Gamma(b)Gamma(c)Gamma(d)),
//   f(y)  = G^{4,0}_{0,4}(b1..b4; y/16) with b_i the unit-shifted quadruple.
struct MeasureSpec {
    int nu;
    double eps;
    // Radial cutoff of the z-plane quadrature; 320 puts the slowest radial
    // tail (the m = n = 2 block entry) below 1e-8 of the integral.
    double r_max = 320.0;
    int theta_points = 128;  // trapezoid rule in the angle
    double rel_tol = 1e-6;
};

std::array<double, 4> measure_mellin_params(int nu, double eps);
double measure_f(int nu, double eps, double y, double rel_tol = 1e-6);

struct MomentReport {
    int s;
    double quadrature;
    double gamma_product;
    double rel_error;
};

// Moments int_0^inf (y/16)^{s-1} f(y) dy/16 against Gamma(b1+s)...Gamma(b4+s).
std::vector<MomentReport> measure_moments(int nu, double eps, int s_max = 5,
                                          double rel_tol = 1e-6);

// <m| [ int mu(z) |z><z| d^2 z ] |n> for m,n < size; identity on the subspace.
std::vector<std::vector<double>> identity_block(const MeasureSpec& spec, int size = 3);

} // namespace susyosc::coherent

#endif
