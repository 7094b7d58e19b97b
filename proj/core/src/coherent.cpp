#include "susyosc/coherent.hpp"

#include <cmath>

#include "susyosc/errors.hpp"
#include "susyosc/oscillator.hpp"
#include "susyosc/specfun.hpp"

namespace susyosc::coherent {

namespace {

constexpr int kMaxCoefficients = 500;

Subspace subspace_of(int nu) {
    if (nu == -2) return Subspace::nu_minus_2;
    if (nu == 1) return Subspace::nu_plus_1;
    throw SubspaceMismatchError("coherent states live on the nu = -2 or nu = 1 subspaces");
}

} // namespace

Pochhammers pochhammers(int nu, double eps) {
    return {0.25 * (2.0 * nu - 2.0 * eps + 5.0), 0.25 * (2.0 * nu - 2.0 * eps + 1.0),
            0.5 * (nu + 4.0), 0.5 * (nu + 1.0)};
}

Subspace CoherentState::subspace() const { return subspace_of(nu); }

double CoherentState::mean_occupation() const {
    double s = 0.0;
    for (size_t n = 0; n < coeffs.size(); ++n) s += static_cast<double>(n) * std::norm(coeffs[n]);
    return s;
}

double CoherentState::second_occupation_moment() const {
    double s = 0.0;
    for (size_t n = 0; n < coeffs.size(); ++n)
        s += static_cast<double>(n) * static_cast<double>(n) * std::norm(coeffs[n]);
    return s;
}

CoherentState make_coherent(int nu, std::complex<double> z, double eps, double gamma, int nmax,
                            double tail_tol) {
    subspace_of(nu);
    Pochhammers p = pochhammers(nu, eps);

    std::vector<std::complex<double>> raw{1.0};
    std::complex<double> cur = 1.0;
    double total = 1.0;
    int limit = nmax >= 0 ? nmax : kMaxCoefficients;
    for (int n = 1; n <= limit; ++n) {
        double step = (p.a + n - 1.0) * (p.b + n - 1.0) * (p.c + n - 1.0) * (p.d + n - 1.0);
        if (step <= 0.0)
            throw DomainError("coefficient recurrence left the positive-product regime");
        cur *= (z / 4.0) / std::sqrt(step);
        raw.push_back(cur);
        total += std::norm(cur);
        if (nmax < 0 && n >= 4 && std::norm(cur) < tail_tol * total) break;
    }
    if (nmax < 0 && std::norm(cur) >= tail_tol * total && std::abs(z) > 0.0)
        throw NonConvergentError("coherent coefficient tail failed to fall below tolerance");

    double inv = 1.0 / std::sqrt(total);
    for (auto& c : raw) c *= inv;
    return CoherentState{nu, z, eps, gamma, static_cast<int>(raw.size()) - 1, std::move(raw), p};
}

double normalization_c0(int nu, double eps, double abs_z) {
    Pochhammers p = pochhammers(nu, eps);
    double w = abs_z * abs_z / 16.0;
    return 1.0 / std::sqrt(specfun::hyp_1f4(1.0, p.a, p.b, p.c, p.d, w).value);
}

std::complex<double> overlap(const CoherentState& zprime, const CoherentState& zstate) {
    if (zprime.nu != zstate.nu || zprime.eps != zstate.eps)
        throw SubspaceMismatchError("overlap requires states on the same subspace");
    const Pochhammers& p = zstate.pocha;
    double c0p = normalization_c0(zprime.nu, zprime.eps, std::abs(zprime.z));
    double c0z = normalization_c0(zstate.nu, zstate.eps, std::abs(zstate.z));
    std::complex<double> w = std::conj(zprime.z) * zstate.z / 16.0;
    return c0p * c0z * specfun::hyp_1f4_complex(1.0, p.a, p.b, p.c, p.d, w);
}

double mean_energy(const CoherentState& s) { return s.nu + 0.5 + 2.0 * s.mean_occupation(); }

double mean_energy_closed(int nu, double eps, double abs_z) {
    Pochhammers p = pochhammers(nu, eps);
    double w = abs_z * abs_z / 16.0;
    double top = specfun::hyp_1f4(2.0, p.a + 1.0, p.b + 1.0, p.c + 1.0, p.d + 1.0, w).value;
    double bottom = specfun::hyp_1f4(1.0, p.a, p.b, p.c, p.d, w).value;
    double pref = 8.0 * abs_z * abs_z /
                  ((2.0 * nu - 2.0 * eps + 5.0) * (2.0 * nu - 2.0 * eps + 1.0) * (nu + 1.0) *
                   (nu + 4.0));
    return nu + 0.5 + pref * top / bottom;
}

double mean_energy_printed(int nu, double eps, double abs_z) {
    double w = abs_z * abs_z / 16.0;
    double top = specfun::hyp_1f4(2.0, 0.25 * (2.0 * nu - 2.0 * eps + 8.0),
                                  0.25 * (2.0 * nu - 2.0 * eps + 5.0), 0.5 * (nu + 6.0),
                                  0.5 * (nu + 3.0), w)
                     .value;
    double bottom = specfun::hyp_1f4(1.0, 0.25 * (2.0 * nu - 2.0 * eps + 5.0),
                                     0.25 * (2.0 * nu - 2.0 * eps + 1.0), 0.5 * (nu + 5.0),
                                     0.5 * (nu + 1.0), w)
                        .value;
    double pref = 8.0 * abs_z * abs_z /
                  ((2.0 * nu - 2.0 * eps + 5.0) * (2.0 * nu - 2.0 * eps + 1.0) * (nu + 1.0) *
                   (nu + 4.0));
    return nu + 0.5 + pref * top / bottom;
}

std::complex<double> evolution_phase(const CoherentState& s, double t) {
    return std::exp(std::complex<double>(0.0, -(s.nu + 0.5) * t));
}

CoherentState evolve(const CoherentState& s, double t) {
    std::complex<double> rot = std::exp(std::complex<double>(0.0, -2.0 * t));
    return make_coherent(s.nu, s.z * rot, s.eps, s.gamma, s.nmax);
}

Snapshot::Snapshot(const LadderPair& pair, const CoherentState& s, double t)
    : pair_(&pair), phase_(evolution_phase(s, t)) {
    Subspace sub = s.subspace();
    for (size_t n = 0; n < s.coeffs.size(); ++n) {
        std::complex<double> w =
            s.coeffs[n] * std::exp(std::complex<double>(0.0, -2.0 * static_cast<double>(n) * t)) *
            pair.basis_sign(sub, static_cast<int>(n));
        if (sub == Subspace::nu_minus_2 && n == 0) {
            missing_weight_ = w / pair.missing_norm(1);
            continue;
        }
        int k = sub == Subspace::nu_minus_2 ? 2 * (static_cast<int>(n) - 1)
                                            : 2 * static_cast<int>(n) + 1;
        osc_weights_.emplace_back(k, w / pair.first().eigenstate_norm(k));
        kmax_ = std::max(kmax_, k);
    }
}

std::complex<double> Snapshot::operator()(double x) const {
    const susy::SusyTransform::PointOperators ops = pair_->first().point_operators(x);
    std::complex<double> amp = 0.0;
    if (kmax_ >= 0) {
        std::vector<double> fam = oscillator::psi_family(kmax_, x);
        std::complex<double> f = 0.0, fp = 0.0, fpp = 0.0;
        for (const auto& [k, w] : osc_weights_) {
            double v = fam[static_cast<size_t>(k)];
            double d =
                (k > 0 ? std::sqrt(2.0 * k) * fam[static_cast<size_t>(k) - 1] : 0.0) - x * v;
            f += w * v;
            fp += w * d;
            fpp += w * ((x * x - 2.0 * (k + 0.5)) * v); // Schrodinger turns E into f''
        }
        amp = {ops.b_plus_value(f.real(), fp.real(), fpp.real()),
               ops.b_plus_value(f.imag(), fp.imag(), fpp.imag())};
    }
    // The nu = -2 bottom rung is the missing state u1/W.
    if (missing_weight_ != 0.0) amp += missing_weight_ * (ops.u1 / ops.w);
    return phase_ * amp;
}

GridFunction density(const LadderPair& pair, const CoherentState& s, double t,
                     const Grid& grid) {
    Snapshot snap(pair, s, t);
    GridFunction out(grid);
    for (int i = 0; i < grid.points; ++i)
        out.values[static_cast<size_t>(i)] = std::norm(snap(grid.x(i)));
    return out;
}

std::complex<double> snapshot_value(const LadderPair& pair, const CoherentState& s, double t,
                                    double x) {
    return Snapshot(pair, s, t)(x);
}

std::array<double, 4> measure_mellin_params(int nu, double eps) {
    return {0.25 * (2.0 * nu - 2.0 * eps + 1.0), 0.25 * (2.0 * nu - 2.0 * eps - 3.0),
            0.5 * (nu + 2.0), 0.5 * (nu - 1.0)};
}

double measure_f(int nu, double eps, double y, double rel_tol) {
    return specfun::meijer_g4004(measure_mellin_params(nu, eps), y / 16.0, rel_tol);
}

namespace {

// int_0^inf w^{s-1} G4(w) dw via w = v^4, which flattens the w^{b_min}
// endpoint behavior and compresses the exp(-4 w^{1/4}) tail.
double mellin_moment(const std::array<double, 4>& b, double s, double w_cut, double rel_tol) {
    double b_min = std::min({b[0], b[1], b[2], b[3]});
    if (s + b_min <= 0.0) throw DomainError("moment lies outside the Mellin convergence strip");
    double v_cut = std::pow(w_cut, 0.25);
    auto integrand = [&](double v) {
        if (v <= 0.0) return 0.0;
        double w = v * v * v * v;
        return 4.0 * std::pow(v, 4.0 * s - 1.0) * specfun::meijer_g4004(b, w, rel_tol * 0.1);
    };
    return integrate(integrand, 0.0, v_cut, rel_tol).value;
}

} // namespace

std::vector<MomentReport> measure_moments(int nu, double eps, int s_max, double rel_tol) {
    auto b = measure_mellin_params(nu, eps);
    std::vector<MomentReport> out;
    for (int s = 1; s <= s_max; ++s) {
        double quad = mellin_moment(b, s, 1.0e5, rel_tol);
        double exact = std::tgamma(b[0] + s) * std::tgamma(b[1] + s) * std::tgamma(b[2] + s) *
                       std::tgamma(b[3] + s);
        out.push_back(MomentReport{s, quad, exact, quad / exact - 1.0});
    }
    return out;
}

std::vector<std::vector<double>> identity_block(const MeasureSpec& spec, int size) {
    auto b = measure_mellin_params(spec.nu, spec.eps);
    Pochhammers p = pochhammers(spec.nu, spec.eps);
    double gamma_product =
        std::tgamma(p.a) * std::tgamma(p.b) * std::tgamma(p.c) * std::tgamma(p.d);

    // Pochhammer products (a)_n (b)_n (c)_n (d)_n
    std::vector<double> pn(static_cast<size_t>(size), 1.0);
    for (int n = 1; n < size; ++n)
        pn[static_cast<size_t>(n)] = pn[static_cast<size_t>(n) - 1] * (p.a + n - 1.0) *
                                     (p.b + n - 1.0) * (p.c + n - 1.0) * (p.d + n - 1.0);

    // Radial factors: 8 int_0^{wmax} w^{(m+n)/2} G4(w) dw per anti-diagonal.
    double w_cut = spec.r_max * spec.r_max / 16.0;
    std::vector<double> radial(static_cast<size_t>(2 * size - 1));
    for (int k = 0; k <= 2 * (size - 1); ++k)
        radial[static_cast<size_t>(k)] =
            8.0 * mellin_moment(b, 0.5 * k + 1.0, w_cut, spec.rel_tol);

    // Angular trapezoid sum (2 pi / K) sum_j cos((m - n) theta_j).
    std::vector<std::vector<double>> block(static_cast<size_t>(size),
                                           std::vector<double>(static_cast<size_t>(size), 0.0));
    for (int m = 0; m < size; ++m) {
        for (int n = 0; n < size; ++n) {
            double theta_sum = 0.0;
            for (int j = 0; j < spec.theta_points; ++j) {
                double theta = 2.0 * M_PI * j / spec.theta_points;
                theta_sum += std::cos((m - n) * theta);
            }
            theta_sum *= 2.0 * M_PI / spec.theta_points;
            double rad = radial[static_cast<size_t>(m + n)];
            block[static_cast<size_t>(m)][static_cast<size_t>(n)] =
                theta_sum * rad /
                (16.0 * M_PI * gamma_product *
                 std::sqrt(pn[static_cast<size_t>(m)] * pn[static_cast<size_t>(n)]));
        }
    }
    return block;
}

} // namespace susyosc::coherent
