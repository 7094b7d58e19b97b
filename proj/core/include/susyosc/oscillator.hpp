#ifndef SUSYOSC_OSCILLATOR_HPP
#define SUSYOSC_OSCILLATOR_HPP

#include <vector>

#include "susyosc/jet.hpp"

namespace susyosc::oscillator {

// H = -d^2/2 + x^2/2, eigenvalues n + 1/2.
inline double energy(int n) { return n + 0.5; }

inline constexpr int kMaxIndex = 200;

// Normalized eigenfunction psi_n(x), stable three-term recurrence on the
// normalized family.  Throws OverflowError for n > kMaxIndex.
double psi(int n, double x);
double psi_derivative(int n, double x);

// psi_0..psi_nmax at one point (single recurrence sweep).
std::vector<double> psi_family(int nmax, double x);

Jet psi_jet(int n, double x0, int order);

// Polynomial solutions at negative energy -(m+1/2):
// phi_m(x) = e^{x^2/2} P_m(x) with P_{m+1} = 2x P_m + 2m P_{m-1}.
// Coefficient tables are precomputed for m <= 10.
double phi(int m, double x);
double phi_derivative(int m, double x);
Jet phi_jet(int m, double x0, int order);

struct FockState {
    int n;
};

enum class LadderDirection { lowering, raising };

struct LadderResult {
    double coeff;
    FockState state;
};

// a- psi_n = sqrt(n) psi_{n-1}, a+ psi_n = sqrt(n+1) psi_{n+1}.
LadderResult ladder_a(LadderDirection dir, FockState s);

// Factorization-energy solution families used as Darboux seeds.
struct SeedSolution {
    enum class Kind { general, fock, phi };

    Kind kind = Kind::general;
    double lambda = 0.0; // degree; fock: n, phi: -(m+1)
    double gamma = 0.0;  // mixing weight, general kind only

    static SeedSolution general(double lambda, double gamma);
    static SeedSolution fock(int n);
    static SeedSolution phi(int m);

    // u'' = (x^2 - 2 E) u with E = lambda + 1/2.
    double energy() const { return lambda + 0.5; }

    double value(double x) const;
    double derivative(double x) const;
    // Fused value + derivative: the general kind shares the Kummer series
    // between the +-x evaluations, the fock kind runs one family sweep.
    struct ValueDerivative {
        double value;
        double derivative;
    };
    ValueDerivative eval(double x) const;
    Jet jet(double x0, int order) const;
};

// e^{-x^2/2} [H_lambda(x) + gamma H_lambda(-x)] and its x-derivative.
double seed_value(double lambda, double gamma, double x);
double seed_derivative(double lambda, double gamma, double x);

} // namespace susyosc::oscillator

#endif
