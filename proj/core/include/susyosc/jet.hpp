#ifndef SUSYOSC_JET_HPP
#define SUSYOSC_JET_HPP

#include <cassert>
#include <cstddef>
#include <vector>

#include "susyosc/errors.hpp"

namespace susyosc {

// Truncated Taylor expansion of a function about a fixed point x0.
// Coefficient k stores f^(k)(x0)/k!.  All operator compositions in the
// transform machinery run on jets, so derivatives of any order come out
// analytically instead of via finite differences.
class Jet {
  public:
    explicit Jet(int order) : c_(static_cast<size_t>(order) + 1, 0.0) {
        assert(order >= 0);
    }

    static Jet constant(double v, int order) {
        Jet j(order);
        j.c_[0] = v;
        return j;
    }

    // The identity function x about x0.
    static Jet variable(double x0, int order) {
        Jet j(order);
        j.c_[0] = x0;
        if (order >= 1) j.c_[1] = 1.0;
        return j;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    double operator[](int k) const { return c_[static_cast<size_t>(k)]; }
    double& operator[](int k) { return c_[static_cast<size_t>(k)]; }
    double value() const { return c_[0]; }

    // f^(k)(x0) = k! * c_k
    double derivative(int k) const {
        double fact = 1.0;
        for (int i = 2; i <= k; ++i) fact *= i;
        return c_[static_cast<size_t>(k)] * fact;
    }

    Jet truncated(int order) const {
        assert(order <= this->order());
        Jet j(order);
        for (int k = 0; k <= order; ++k) j.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)];
        return j;
    }

    // d/dx, dropping one order.
    Jet differentiate() const {
        assert(order() >= 1);
        Jet j(order() - 1);
        for (int k = 0; k < order(); ++k)
            j.c_[static_cast<size_t>(k)] = (k + 1) * c_[static_cast<size_t>(k) + 1];
        return j;
    }

    friend Jet operator+(const Jet& a, const Jet& b) {
        int n = a.order() < b.order() ? a.order() : b.order();
        Jet r(n);
        for (int k = 0; k <= n; ++k) r[k] = a[k] + b[k];
        return r;
    }
    friend Jet operator-(const Jet& a, const Jet& b) {
        int n = a.order() < b.order() ? a.order() : b.order();
        Jet r(n);
        for (int k = 0; k <= n; ++k) r[k] = a[k] - b[k];
        return r;
    }
    friend Jet operator*(const Jet& a, const Jet& b) {
        int n = a.order() < b.order() ? a.order() : b.order();
        Jet r(n);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j + i <= n; ++j) r[i + j] += a[i] * b[j];
        return r;
    }
    // Cauchy division; requires b[0] != 0.
    friend Jet operator/(const Jet& a, const Jet& b) {
        int n = a.order() < b.order() ? a.order() : b.order();
        if (b[0] == 0.0) throw DomainError("jet division by zero constant term");
        Jet r(n);
        for (int k = 0; k <= n; ++k) {
            double s = a[k];
            for (int j = 1; j <= k; ++j) s -= b[j] * r[k - j];
            r[k] = s / b[0];
        }
        return r;
    }
    friend Jet operator*(double s, const Jet& a) {
        Jet r(a);
        for (int k = 0; k <= r.order(); ++k) r[k] *= s;
        return r;
    }
    friend Jet operator*(const Jet& a, double s) { return s * a; }
    friend Jet operator+(const Jet& a, double s) {
        Jet r(a);
        r[0] += s;
        return r;
    }
    friend Jet operator-(const Jet& a, double s) { return a + (-s); }
    friend Jet operator-(const Jet& a) { return -1.0 * a; }

  private:
    std::vector<double> c_;
};

// Taylor coefficients of a solution of u'' = (x^2 - 2E) u from initial data
// (u, u') at x0.  Every seed and oscillator eigenfunction satisfies such an
// equation, so jets of arbitrary order reduce to two analytic evaluations.
inline Jet schrodinger_jet(double u0, double u1, double energy, double x0, int order) {
    Jet j(order);
    j[0] = u0;
    if (order >= 1) j[1] = u1;
    const double p0 = x0 * x0 - 2.0 * energy;
    const double p1 = 2.0 * x0;
    for (int k = 0; k + 2 <= order; ++k) {
        double s = p0 * j[k];
        if (k >= 1) s += p1 * j[k - 1];
        if (k >= 2) s += j[k - 2];
        j[k + 2] = s / ((k + 1) * (k + 2));
    }
    return j;
}

} // namespace susyosc

#endif
