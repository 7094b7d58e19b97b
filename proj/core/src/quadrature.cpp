#include "susyosc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "susyosc/errors.hpp"

namespace susyosc {

namespace {

std::vector<std::pair<double, double>> compute_gauss_legendre(int n) {
    std::vector<std::pair<double, double>> nw(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        nw[static_cast<size_t>(i)] = {x, 2.0 / ((1.0 - x * x) * dp * dp)};
    }
    return nw;
}

} // namespace

const std::vector<std::pair<double, double>>& gauss_legendre(int n) {
    static std::map<int, std::vector<std::pair<double, double>>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
    return it->second;
}

namespace {

double panel_gl(const std::function<double(double)>& f, double a, double b, int n) {
    const auto& nw = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (const auto& [x, w] : nw) s += w * f(mid + half * x);
    return s * half;
}

struct Panel {
    double a, b, coarse, fine, err;
};

} // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol, int max_refinements) {
    auto make_panel = [&](double lo, double hi) {
        Panel p{lo, hi, panel_gl(f, lo, hi, 12), panel_gl(f, lo, hi, 25), 0.0};
        p.err = std::fabs(p.fine - p.coarse);
        return p;
    };

    std::vector<Panel> panels{make_panel(a, b)};
    const int max_panels = 1 << 14;
    int refinements = 0;

    auto total = [&] {
        double v = 0.0;
        for (const auto& p : panels) v += p.fine;
        return v;
    };
    auto total_err = [&] {
        double e = 0.0;
        for (const auto& p : panels) e += p.err;
        return e;
    };

    while (true) {
        double v = total(), e = total_err();
        double scale = std::max(std::fabs(v), 1e-300);
        if (e <= rel_tol * scale) break;
        if (refinements >= max_refinements * 64 || static_cast<int>(panels.size()) >= max_panels)
            throw QuadratureError("adaptive quadrature refinement budget exhausted");
        // split the worst panel
        size_t worst = 0;
        for (size_t i = 1; i < panels.size(); ++i)
            if (panels[i].err > panels[worst].err) worst = i;
        Panel p = panels[worst];
        double mid = 0.5 * (p.a + p.b);
        if (mid <= p.a || mid >= p.b)
            throw QuadratureError("adaptive quadrature interval collapsed");
        panels[worst] = make_panel(p.a, mid);
        panels.push_back(make_panel(mid, p.b));
        ++refinements;
    }

    QuadratureResult r;
    r.value = total();
    r.error_estimate = total_err();
    r.panels = static_cast<int>(panels.size());
    return r;
}

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f, double rel_tol,
                                         int max_refinements) {
    auto mapped = [&f](double s) {
        const double t = s / (1.0 - s);
        const double jac = 1.0 / ((1.0 - s) * (1.0 - s));
        return f(t) * jac;
    };
    return integrate(mapped, 0.0, 1.0, rel_tol, max_refinements);
}

double trapezoid(std::span<const double> y, double h) {
    if (y.size() < 2) return 0.0;
    double s = 0.5 * (y.front() + y.back());
    for (size_t i = 1; i + 1 < y.size(); ++i) s += y[i];
    return s * h;
}

double simpson(std::span<const double> y, double h) {
    if (y.size() < 3 || y.size() % 2 == 0)
        throw DomainError("simpson rule needs an odd number of samples >= 3");
    double s = y.front() + y.back();
    for (size_t i = 1; i + 1 < y.size(); ++i) s += y[i] * (i % 2 == 1 ? 4.0 : 2.0);
    return s * h / 3.0;
}

} // namespace susyosc
