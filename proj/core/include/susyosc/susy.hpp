#ifndef SUSYOSC_SUSY_HPP
#define SUSYOSC_SUSY_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "susyosc/grid.hpp"
#include "susyosc/jet.hpp"
#include "susyosc/oscillator.hpp"

namespace susyosc::susy {

using oscillator::SeedSolution;

enum class Label { H1, H2 };

struct Wronskian2 {
    double w;  // W(u1,u2)
    double w1; // W' = 2 (eps1 - eps2) u1 u2
    double w2; // W''
};

// Second-order Darboux transform of the oscillator built from two seeds.
//
// B+ = (1/2)[d^2 - g d + h], g = W'/W,
// h = g'/2 + g^2/2 - 2V + (eps1 + eps2), V = x^2/2.
// (The additive constant is fixed by the intertwining relation; only the
// full eps1+eps2 reproduces B+ = W(u1,u2,.)/(2 W(u1,u2)) and the
// factorizations B+B, BB+.)
class SusyTransform {
  public:
    SusyTransform(SeedSolution s1, SeedSolution s2, Label label);

    // First family: seeds u1 = e^{-x^2/2}[H_l1(x)+gamma H_l1(-x)] at
    // eps1 in (-3/2,1/2), u2 = phi_1 at -3/2.  Requires gamma > 0 and
    // non-integer l1 = eps1 - 1/2.
    static SusyTransform h1(double eps1, double gamma);

    // Second family: seeds u1 = psi_1 at 3/2, u2 the general solution of
    // degree l2 = l1 + 2 with the same gamma, at eps1 + 2.
    static SusyTransform h2(double eps1, double gamma);

    Label label() const { return label_; }
    const SeedSolution& seed1() const { return seed1_; }
    const SeedSolution& seed2() const { return seed2_; }
    double eps1() const { return eps1_; }
    double eps2() const { return eps2_; }

    // W, W', W'' at x.  Throws ZeroWronskianError when |W| falls below
    // 1e-12 * (|u1 u2'| + |u1' u2|).
    Wronskian2 wronskian(double x) const;

    Jet wronskian_jet(double x0, int order) const;
    Jet g_jet(double x0, int order) const;

    // Everything a value-level B+ application and the missing-state
    // quotients need at one point, from a single fused seed evaluation.
    // Amortizes the seed special functions over superposition sums.
    struct PointOperators {
        double g;      // W'/W
        double h;      // zeroth-order B+ coefficient
        double u1, u2; // seed values
        double w;      // Wronskian value
        // (B+ f)(x) from f, f', f'' at the same point.
        double b_plus_value(double f, double fp, double fpp) const {
            return 0.5 * (fpp - g * fp + h * f);
        }
    };
    PointOperators point_operators(double x) const;

    double g(double x) const;
    double h(double x) const;

    // Partner potential x^2/2 - [ln W]'' in ratio form W''/W - (W'/W)^2.
    // For the second family this equals x^2/2 + 2 - [ln(e^{x^2} W)]'':
    // the +2 lives inside the factored Wronskian form rather than being
    // added after the fact.
    double potential(double x) const;
    Jet potential_jet(double x0, int order) const;

    // B+ f and B f on jets; result has two orders less.
    Jet apply_b_plus(const Jet& f, double x0) const;
    Jet apply_b(const Jet& f, double x0) const;

    // Third-order-Wronskian route W(u1,u2,f)/(2 W(u1,u2)); agrees with
    // apply_b_plus identically, kept as an independent cross-check.
    Jet apply_b_plus_wronskian(const Jet& f, double x0) const;

    // sqrt((E_n - eps1)(E_n - eps2)); throws DeletedLevelError when E_n
    // coincides with a factorization energy removed from the spectrum.
    double eigenstate_norm(int n) const;

    // psi~_n = B+ psi_n / eigenstate_norm(n) as a jet of given order.
    Jet transformed_eigenstate(int n, double x0, int order) const;

    // Missing states: index 0 -> u2/W at eps1, index 1 -> u1/W at eps2
    // (unnormalized jets).  Each seed's quotient lives at the *other*
    // factorization energy.
    Jet missing_state(int index, double x0, int order) const;
    double missing_state_energy(int index) const { return index == 0 ? eps1_ : eps2_; }

  private:
    SeedSolution seed1_, seed2_;
    double eps1_, eps2_;
    Label label_;
};

struct MissingStateInfo {
    double energy;
    bool normalizable;
    double norm_standard; // L2 norm over the standard window
    double norm_extended; // L2 norm over the extended window
};

// Normalizability verdicts via the window-stability test: normalizable iff
// the norm moves by less than 1e-6 relative between the two windows.
std::array<MissingStateInfo, 2> missing_states(const SusyTransform& t);

// Spectrum bookkeeping for the extended Hamiltonians.
struct ExtendedHamiltonian {
    SusyTransform transform;
    std::vector<double> levels; // ordered discrete spectrum (truncated)

    static ExtendedHamiltonian first(double eps1, double gamma, int n_oscillator = 8);
    static ExtendedHamiltonian second(double eps1, double gamma, int n_oscillator = 8);
};

struct EquivalenceReport {
    double sup_potential_diff;   // sup |V2 - V1 - 2|
    double sup_omega_diff;       // sup |Omega - 2x|
    double sup_seed_relation;    // u2^(1) vs sqrt(2 sqrt pi) e^{x^2} u1^(2)
    double sup_lowered_relation; // a- a- u2^(2) vs 2 l2 (l2 - 1) u1^(1)
    std::vector<std::pair<double, double>> omega_samples;
};

// Omega(x) = (W1' W2 - W1 W2')/(W1 W2), the logarithmic derivative of
// W1/W2; equals 2x exactly for matched seed families.
double omega(const SusyTransform& t1, const SusyTransform& t2, double x);

EquivalenceReport equivalence_report(double eps1, double gamma, const Grid& grid);

// CSV rows "x,V1,V2,diff" for the two partner potentials.
std::string potential_csv(double eps1, double gamma, const Grid& grid);

} // namespace susyosc::susy

#endif
