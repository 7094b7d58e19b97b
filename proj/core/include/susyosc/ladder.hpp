#ifndef SUSYOSC_LADDER_HPP
#define SUSYOSC_LADDER_HPP

#include <functional>
#include <map>
#include <vector>

#include "susyosc/grid.hpp"
#include "susyosc/susy.hpp"

namespace susyosc::ladder {

using susy::SusyTransform;

enum class Subspace { nu_minus_2, nu_plus_1, eps_singlet };

inline int nu_of(Subspace s) {
    return s == Subspace::nu_minus_2 ? -2 : 1; // singlet has no nu label
}

struct SpectralState {
    Subspace subspace;
    int n; // rung within the subspace (0 for the singlet)
    double energy;
};

struct LadderApplication {
    double coeff;
    SpectralState state;
};

// Fourth-degree ladder pair L+ = B1+ B2, L- = B2+ B1 built on the two
// equivalent transforms sharing (eps, gamma).  Both shift energies by 2
// inside each invariant subspace and annihilate the eps singlet.
class LadderPair {
  public:
    LadderPair(double eps, double gamma);

    const SusyTransform& first() const { return t1_; }
    const SusyTransform& second() const { return t2_; }
    double eps() const { return eps_; }
    double gamma() const { return gamma_; }

    // Generalized number polynomial: L+ L- = N4(H), L- L+ = N4(H + 2),
    // N4(E) = (E - e1)(E - e2)(E - et1)(E - et2).
    double n4(double energy) const;
    std::array<double, 4> roots() const; // e1, e2, et1, et2

    SpectralState state(Subspace sub, int n) const;

    // Spectral application; coefficients are exact square roots of N4.
    LadderApplication lower(const SpectralState& s) const;
    LadderApplication raise(const SpectralState& s) const;

    // Differential application on jets (order drops by 4).
    Jet l_plus(const Jet& f, double x0) const;
    Jet l_minus(const Jet& f, double x0) const;

    // Normalized basis state of a subspace as a jet; the sign is chosen so
    // the family coincides with the L+-generated chain from the bottom rung.
    Jet basis_state(Subspace sub, int n, double x0, int order) const;
    GridFunction basis_grid(Subspace sub, int n, const Grid& grid) const;
    double basis_sign(Subspace sub, int n) const;

    // Kernel of L-: the three physical bottom states and B1+ u2^(2).
    struct KernelElement {
        std::string name;
        bool physical;
        double tail_ratio; // sup on extended window / sup on standard window
        double annihilation_residual; // sup |L- f| / scale
    };
    std::vector<KernelElement> kernel_basis() const;

    struct CommutatorCheck {
        std::string name;
        double residual; // relative sup-norm residual
    };
    struct PhaReport {
        // [H, L+-] -+ 2 L+- residuals per probed basis state
        std::vector<CommutatorCheck> h_lplus;
        std::vector<CommutatorCheck> h_lminus;
        // [L-, L+] vs N4(H+2) - N4(H) on basis states
        std::vector<CommutatorCheck> closure;
        int degree = 3; // deg N4(x+2) - N4(x)
        double omega = 2.0;
        bool passed(double tol_comm, double tol_closure) const;
    };
    PhaReport pha_check(int states_per_subspace = 3) const;

    // L2 normalization of the two missing states over the standard window.
    double missing_norm(int index) const;

  private:
    double sign_chain(Subspace sub, int n) const;
    double compute_missing_norm(int index) const;

    SusyTransform t1_, t2_;
    double eps_, gamma_;
    double norm_em2_, norm_singlet_; // missing-state normalizations
    mutable std::map<std::pair<int, int>, double> signs_;
};

} // namespace susyosc::ladder

#endif
