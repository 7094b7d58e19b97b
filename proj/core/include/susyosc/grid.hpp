#ifndef SUSYOSC_GRID_HPP
#define SUSYOSC_GRID_HPP

#include <cmath>
#include <cstdlib>
#include <vector>

#include "susyosc/quadrature.hpp"

namespace susyosc {

struct Grid {
    double xmin = -10.0;
    double xmax = 10.0;
    int points = 2001;

    double h() const { return (xmax - xmin) / (points - 1); }
    double x(int i) const { return xmin + i * h(); }

    static Grid standard() { return Grid{-10.0, 10.0, 2001}; }
    // Wider window used by the normalizability verdicts.
    static Grid extended() { return Grid{-14.0, 14.0, 2801}; }
};

struct GridFunction {
    Grid grid;
    std::vector<double> values;

    GridFunction() = default;
    explicit GridFunction(const Grid& g) : grid(g), values(static_cast<size_t>(g.points), 0.0) {}

    double norm2() const {
        std::vector<double> sq(values.size());
        for (size_t i = 0; i < values.size(); ++i) sq[i] = values[i] * values[i];
        return trapezoid(sq, grid.h());
    }
    double norm() const { return std::sqrt(norm2()); }

    double sup_abs() const {
        double m = 0.0;
        for (double v : values) m = std::max(m, std::fabs(v));
        return m;
    }

    GridFunction& normalize() {
        double n = norm();
        for (double& v : values) v /= n;
        return *this;
    }

    // Sign changes of the sampled values, ignoring entries below
    // floor_rel * sup|f| (keeps numerically-zero tails from flickering).
    int count_sign_changes(double floor_rel = 1e-9) const {
        const double floor = floor_rel * sup_abs();
        int changes = 0;
        int last = 0;
        for (double v : values) {
            if (std::fabs(v) <= floor) continue;
            int s = v > 0 ? 1 : -1;
            if (last != 0 && s != last) ++changes;
            last = s;
        }
        return changes;
    }

    static double inner(const GridFunction& a, const GridFunction& b) {
        std::vector<double> prod(a.values.size());
        for (size_t i = 0; i < prod.size(); ++i) prod[i] = a.values[i] * b.values[i];
        return trapezoid(prod, a.grid.h());
    }
};

template <class F>
GridFunction sample(const Grid& g, F&& f) {
    GridFunction out(g);
    for (int i = 0; i < g.points; ++i) out.values[static_cast<size_t>(i)] = f(g.x(i));
    return out;
}

} // namespace susyosc

#endif
