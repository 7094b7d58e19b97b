#include "susyosc/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "susyosc/errors.hpp"

namespace susyosc::phase_space {

double WignerGrid::min_value() const {
    return *std::min_element(w.begin(), w.end());
}

WignerGrid wigner(const std::function<std::complex<double>(double)>& psi, const Grid& xg,
                  const Grid& pg, int y_points) {
    if (y_points < 3 || y_points % 2 == 0)
        throw DomainError("wigner needs an odd y_points >= 3");

    const double xabs = std::max(std::fabs(xg.xmin), std::fabs(xg.xmax));
    const double Y = 2.0 * xabs + 12.0;
    const double hy = 2.0 * Y / (y_points - 1);

    WignerGrid out;
    out.xg = xg;
    out.pg = pg;
    out.w.assign(static_cast<size_t>(xg.points) * pg.points, 0.0);

    std::vector<double> max_imag(static_cast<size_t>(xg.points), 0.0);

    auto run_rows = [&](int begin, int end) {
        std::vector<std::complex<double>> f(static_cast<size_t>(y_points));
        std::vector<double> simpson_w(static_cast<size_t>(y_points));
        for (int j = 0; j < y_points; ++j)
            simpson_w[static_cast<size_t>(j)] =
                (j == 0 || j == y_points - 1) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);

        for (int ix = begin; ix < end; ++ix) {
            const double x = xg.x(ix);
            for (int j = 0; j < y_points; ++j) {
                double y = -Y + j * hy;
                f[static_cast<size_t>(j)] = std::conj(psi(x - 0.5 * y)) * psi(x + 0.5 * y);
            }
            for (int ip = 0; ip < pg.points; ++ip) {
                const double p = pg.x(ip);
                std::complex<double> acc = 0.0;
                for (int j = 0; j < y_points; ++j) {
                    double y = -Y + j * hy;
                    acc += simpson_w[static_cast<size_t>(j)] * f[static_cast<size_t>(j)] *
                           std::polar(1.0, p * y);
                }
                acc *= hy / 3.0 / (2.0 * M_PI);
                out.w[static_cast<size_t>(ix) * pg.points + ip] = acc.real();
                max_imag[static_cast<size_t>(ix)] =
                    std::max(max_imag[static_cast<size_t>(ix)], std::fabs(acc.imag()));
            }
        }
    };

    unsigned hw = std::thread::hardware_concurrency();
    int n_threads = static_cast<int>(std::max(1u, std::min(hw, 16u)));
    n_threads = std::min(n_threads, xg.points);
    if (n_threads <= 1) {
        run_rows(0, xg.points);
    } else {
        // Deterministic row partition: identical results at any thread count.
        std::vector<std::thread> pool;
        int chunk = (xg.points + n_threads - 1) / n_threads;
        for (int t = 0; t < n_threads; ++t) {
            int begin = t * chunk;
            int end = std::min(xg.points, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(run_rows, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    for (double m : max_imag) out.max_imag_residual = std::max(out.max_imag_residual, m);

    // Trapezoid mass over the phase-space rectangle.
    double mass = 0.0;
    for (int ix = 0; ix < xg.points; ++ix) {
        double row = 0.0;
        for (int ip = 0; ip < pg.points; ++ip) {
            double wx = (ip == 0 || ip == pg.points - 1) ? 0.5 : 1.0;
            row += wx * out.at(ix, ip);
        }
        double wy = (ix == 0 || ix == xg.points - 1) ? 0.5 : 1.0;
        mass += wy * row;
    }
    out.mass = mass * xg.h() * pg.h();
    return out;
}

WignerGrid wigner_real(const std::function<double(double)>& psi, const Grid& xg, const Grid& pg,
                       int y_points) {
    return wigner(
        [&psi](double x) { return std::complex<double>(psi(x), 0.0); }, xg, pg, y_points);
}

Marginals wigner_marginals(const WignerGrid& wg) {
    Marginals m;
    m.position.assign(static_cast<size_t>(wg.xg.points), 0.0);
    m.momentum.assign(static_cast<size_t>(wg.pg.points), 0.0);
    for (int ix = 0; ix < wg.xg.points; ++ix) {
        double acc = 0.0;
        for (int ip = 0; ip < wg.pg.points; ++ip) {
            double wx = (ip == 0 || ip == wg.pg.points - 1) ? 0.5 : 1.0;
            acc += wx * wg.at(ix, ip);
        }
        m.position[static_cast<size_t>(ix)] = acc * wg.pg.h();
    }
    for (int ip = 0; ip < wg.pg.points; ++ip) {
        double acc = 0.0;
        for (int ix = 0; ix < wg.xg.points; ++ix) {
            double wx = (ix == 0 || ix == wg.xg.points - 1) ? 0.5 : 1.0;
            acc += wx * wg.at(ix, ip);
        }
        m.momentum[static_cast<size_t>(ip)] = acc * wg.xg.h();
    }
    return m;
}

double wigner_vacuum(double x, double p) {
    return std::exp(-x * x - p * p) / M_PI;
}

NumberMoments number_moments(std::span<const double> probs) {
    NumberMoments m{0.0, 0.0};
    for (size_t n = 0; n < probs.size(); ++n) {
        m.n1 += static_cast<double>(n) * probs[n];
        m.n2 += static_cast<double>(n) * static_cast<double>(n) * probs[n];
    }
    return m;
}

double mandel_q(std::span<const double> probs) {
    // <N(N-1)> summed directly so near-Poissonian cancellation stays exact.
    double n1 = 0.0, nn1 = 0.0;
    for (size_t n = 0; n < probs.size(); ++n) {
        n1 += static_cast<double>(n) * probs[n];
        nn1 += static_cast<double>(n) * (static_cast<double>(n) - 1.0) * probs[n];
    }
    if (n1 == 0.0) throw ZeroMeanOccupationError("Mandel Q undefined at zero mean occupation");
    return nn1 / n1 - n1;
}

double mandel_q(const coherent::CoherentState& s) {
    std::vector<double> probs(s.coeffs.size());
    for (size_t n = 0; n < probs.size(); ++n) probs[n] = std::norm(s.coeffs[n]);
    return mandel_q(probs);
}

} // namespace susyosc::phase_space
