#include "susyosc/oscillator.hpp"

#include <cmath>

#include "susyosc/errors.hpp"
#include "susyosc/specfun.hpp"

namespace susyosc::oscillator {

namespace {

constexpr double kPiQuarter = 0.75112554446494251;  // pi^{-1/4}

void check_index(int n) {
    if (n < 0) throw DomainError("oscillator index must be non-negative");
    if (n > kMaxIndex) throw OverflowError("oscillator index above supported range");
}

} // namespace

std::vector<double> psi_family(int nmax, double x) {
    check_index(nmax);
    std::vector<double> out(static_cast<size_t>(nmax) + 1);
    double prev = 0.0;
    double cur = kPiQuarter * std::exp(-0.5 * x * x);
    out[0] = cur;
    for (int n = 0; n < nmax; ++n) {
        double next = std::sqrt(2.0 / (n + 1.0)) * x * cur -
                      std::sqrt(n / (n + 1.0)) * prev;
        prev = cur;
        cur = next;
        out[static_cast<size_t>(n) + 1] = cur;
    }
    return out;
}

double psi(int n, double x) { return psi_family(n, x).back(); }

double psi_derivative(int n, double x) {
    auto fam = psi_family(n, x);
    double lower = n > 0 ? std::sqrt(2.0 * n) * fam[static_cast<size_t>(n) - 1] : 0.0;
    return lower - x * fam.back();
}

Jet psi_jet(int n, double x0, int order) {
    auto fam = psi_family(n, x0);
    double v = fam.back();
    double d = (n > 0 ? std::sqrt(2.0 * n) * fam[static_cast<size_t>(n) - 1] : 0.0) - x0 * v;
    return schrodinger_jet(v, d, energy(n), x0, order);
}

namespace {

// P_m(x) with phi_m = e^{x^2/2} P_m; P_{m+1} = 2x P_m + 2m P_{m-1}.
// All coefficients are positive integers; table up to m = 10.
const std::vector<std::vector<double>>& phi_coefficients() {
    static const std::vector<std::vector<double>> table = [] {
        std::vector<std::vector<double>> t;
        t.push_back({1.0});      // P_0
        t.push_back({0.0, 2.0}); // P_1 = 2x
        for (int m = 1; m < 10; ++m) {
            const auto& pm = t[static_cast<size_t>(m)];
            const auto& pm1 = t[static_cast<size_t>(m) - 1];
            std::vector<double> next(static_cast<size_t>(m) + 2, 0.0);
            for (size_t k = 0; k < pm.size(); ++k) next[k + 1] += 2.0 * pm[k];
            for (size_t k = 0; k < pm1.size(); ++k) next[k] += 2.0 * m * pm1[k];
            t.push_back(std::move(next));
        }
        return t;
    }();
    return table;
}

double poly_eval(const std::vector<double>& c, double x) {
    double v = 0.0;
    for (size_t k = c.size(); k-- > 0;) v = v * x + c[k];
    return v;
}

double poly_eval_derivative(const std::vector<double>& c, double x) {
    double v = 0.0;
    for (size_t k = c.size(); k-- > 1;) v = v * x + k * c[k];
    return v;
}

} // namespace

double phi(int m, double x) {
    if (m < 0 || m > 10) throw DomainError("phi index supported for 0 <= m <= 10");
    return std::exp(0.5 * x * x) * poly_eval(phi_coefficients()[static_cast<size_t>(m)], x);
}

double phi_derivative(int m, double x) {
    if (m < 0 || m > 10) throw DomainError("phi index supported for 0 <= m <= 10");
    const auto& c = phi_coefficients()[static_cast<size_t>(m)];
    return std::exp(0.5 * x * x) * (x * poly_eval(c, x) + poly_eval_derivative(c, x));
}

Jet phi_jet(int m, double x0, int order) {
    return schrodinger_jet(phi(m, x0), phi_derivative(m, x0), -(m + 0.5), x0, order);
}

LadderResult ladder_a(LadderDirection dir, FockState s) {
    check_index(s.n);
    if (dir == LadderDirection::lowering) {
        if (s.n == 0) return {0.0, FockState{0}};
        return {std::sqrt(static_cast<double>(s.n)), FockState{s.n - 1}};
    }
    return {std::sqrt(s.n + 1.0), FockState{s.n + 1}};
}

double seed_value(double lambda, double gamma, double x) {
    using specfun::hermite_fn;
    return std::exp(-0.5 * x * x) * (hermite_fn(lambda, x) + gamma * hermite_fn(lambda, -x));
}

double seed_derivative(double lambda, double gamma, double x) {
    using specfun::hermite_fn;
    double s = hermite_fn(lambda, x) + gamma * hermite_fn(lambda, -x);
    double sp = 2.0 * lambda * (hermite_fn(lambda - 1.0, x) - gamma * hermite_fn(lambda - 1.0, -x));
    return std::exp(-0.5 * x * x) * (sp - x * s);
}

SeedSolution SeedSolution::general(double lambda, double gamma) {
    SeedSolution s;
    s.kind = Kind::general;
    s.lambda = lambda;
    s.gamma = gamma;
    return s;
}

SeedSolution SeedSolution::fock(int n) {
    check_index(n);
    SeedSolution s;
    s.kind = Kind::fock;
    s.lambda = n;
    return s;
}

SeedSolution SeedSolution::phi(int m) {
    if (m < 0 || m > 10) throw DomainError("phi index supported for 0 <= m <= 10");
    SeedSolution s;
    s.kind = Kind::phi;
    s.lambda = -(m + 1.0);
    return s;
}

double SeedSolution::value(double x) const {
    switch (kind) {
        case Kind::general: return seed_value(lambda, gamma, x);
        case Kind::fock: return psi(static_cast<int>(lambda), x);
        case Kind::phi: return oscillator::phi(static_cast<int>(-lambda) - 1, x);
    }
    return 0.0;
}

double SeedSolution::derivative(double x) const {
    switch (kind) {
        case Kind::general: return seed_derivative(lambda, gamma, x);
        case Kind::fock: return psi_derivative(static_cast<int>(lambda), x);
        case Kind::phi: return phi_derivative(static_cast<int>(-lambda) - 1, x);
    }
    return 0.0;
}

SeedSolution::ValueDerivative SeedSolution::eval(double x) const {
    switch (kind) {
        case Kind::general: {
            auto [hp, hm] = specfun::hermite_fn_pair(lambda, x);
            auto [dp, dm] = specfun::hermite_fn_pair(lambda - 1.0, x);
            double e = std::exp(-0.5 * x * x);
            double s = hp + gamma * hm;
            double sp = 2.0 * lambda * (dp - gamma * dm);
            return {e * s, e * (sp - x * s)};
        }
        case Kind::fock: {
            int n = static_cast<int>(lambda);
            std::vector<double> fam = psi_family(n, x);
            double v = fam[static_cast<size_t>(n)];
            double d = (n > 0 ? std::sqrt(2.0 * n) * fam[static_cast<size_t>(n) - 1] : 0.0) - x * v;
            return {v, d};
        }
        case Kind::phi: {
            int m = static_cast<int>(-lambda) - 1;
            return {oscillator::phi(m, x), phi_derivative(m, x)};
        }
    }
    return {0.0, 0.0};
}

Jet SeedSolution::jet(double x0, int order) const {
    ValueDerivative vd = eval(x0);
    return schrodinger_jet(vd.value, vd.derivative, energy(), x0, order);
}

} // namespace susyosc::oscillator
