#include "susyosc/susy.hpp"

#include <cmath>

#include "susyosc/csv.hpp"
#include "susyosc/errors.hpp"

namespace susyosc::susy {

namespace {

constexpr double kSqrt2SqrtPi = 1.8827925275534296;  // sqrt(2 sqrt(pi))

void validate_first_energy(double eps1, double gamma) {
    if (!(gamma > 0.0)) throw DomainError("seed mixing weight gamma must be positive");
    if (!(eps1 > -1.5 && eps1 < 0.5))
        throw DomainError("first factorization energy must lie in (-3/2, 1/2)");
    double lambda1 = eps1 - 0.5;
    if (lambda1 == std::rint(lambda1))
        throw DomainError("integer seed degree makes the two seed branches collapse");
}

double relative_gap(double a, double b) {
    double scale = std::max({std::fabs(a), std::fabs(b), 1.0});
    return std::fabs(a - b) / scale;
}

} // namespace

SusyTransform::SusyTransform(SeedSolution s1, SeedSolution s2, Label label)
    : seed1_(s1), seed2_(s2), eps1_(s1.energy()), eps2_(s2.energy()), label_(label) {}

SusyTransform SusyTransform::h1(double eps1, double gamma) {
    validate_first_energy(eps1, gamma);
    return SusyTransform(SeedSolution::general(eps1 - 0.5, gamma), SeedSolution::phi(1),
                         Label::H1);
}

SusyTransform SusyTransform::h2(double eps1, double gamma) {
    validate_first_energy(eps1, gamma);
    return SusyTransform(SeedSolution::fock(1), SeedSolution::general(eps1 + 1.5, gamma),
                         Label::H2);
}

Wronskian2 SusyTransform::wronskian(double x) const {
    auto [u1, d1] = seed1_.eval(x);
    auto [u2, d2] = seed2_.eval(x);
    double w = u1 * d2 - d1 * u2;
    double scale = std::fabs(u1 * d2) + std::fabs(d1 * u2);
    if (std::fabs(w) < 1e-12 * scale)
        throw ZeroWronskianError("seed Wronskian vanishes at the requested point");
    double w1 = 2.0 * (eps1_ - eps2_) * u1 * u2;
    double w2 = 2.0 * (eps1_ - eps2_) * (d1 * u2 + u1 * d2);
    return {w, w1, w2};
}

SusyTransform::PointOperators SusyTransform::point_operators(double x) const {
    auto [u1, d1] = seed1_.eval(x);
    auto [u2, d2] = seed2_.eval(x);
    double w = u1 * d2 - d1 * u2;
    double scale = std::fabs(u1 * d2) + std::fabs(d1 * u2);
    if (std::fabs(w) < 1e-12 * scale)
        throw ZeroWronskianError("seed Wronskian vanishes at the requested point");
    double g = 2.0 * (eps1_ - eps2_) * u1 * u2 / w;
    double gp = 2.0 * (eps1_ - eps2_) * (d1 * u2 + u1 * d2) / w - g * g;
    double h = 0.5 * gp + 0.5 * g * g - x * x + (eps1_ + eps2_);
    return {g, h, u1, u2, w};
}

Jet SusyTransform::wronskian_jet(double x0, int order) const {
    Jet j1 = seed1_.jet(x0, order + 1);
    Jet j2 = seed2_.jet(x0, order + 1);
    return j1 * j2.differentiate() - j1.differentiate() * j2;
}

Jet SusyTransform::g_jet(double x0, int order) const {
    wronskian(x0); // zero-Wronskian guard
    Jet w = wronskian_jet(x0, order + 1);
    return w.differentiate() / w.truncated(order);
}

double SusyTransform::g(double x) const {
    auto w = wronskian(x);
    return w.w1 / w.w;
}

double SusyTransform::h(double x) const {
    Jet gj = g_jet(x, 1);
    double g0 = gj.value();
    return 0.5 * gj.derivative(1) + 0.5 * g0 * g0 - x * x + (eps1_ + eps2_);
}

double SusyTransform::potential(double x) const {
    auto w = wronskian(x);
    double r1 = w.w1 / w.w;
    return 0.5 * x * x - (w.w2 / w.w - r1 * r1);
}

Jet SusyTransform::potential_jet(double x0, int order) const {
    wronskian(x0);
    Jet w = wronskian_jet(x0, order + 2);
    Jet logw1 = w.differentiate() / w.truncated(order + 1);
    Jet xv = Jet::variable(x0, order);
    return 0.5 * (xv * xv) - logw1.differentiate();
}

Jet SusyTransform::apply_b_plus(const Jet& f, double x0) const {
    if (f.order() < 2) throw DomainError("jet order too low for a second-order operator");
    int n = f.order() - 2;
    Jet g = g_jet(x0, n + 1);
    Jet gd = g.differentiate();
    Jet xv = Jet::variable(x0, n);
    Jet h = 0.5 * gd + 0.5 * (g * g).truncated(n) - xv * xv + (eps1_ + eps2_);
    Jet f1 = f.differentiate();
    Jet f2 = f1.differentiate();
    return 0.5 * (f2 - g.truncated(n) * f1.truncated(n) + h * f.truncated(n));
}

Jet SusyTransform::apply_b(const Jet& f, double x0) const {
    if (f.order() < 2) throw DomainError("jet order too low for a second-order operator");
    int n = f.order() - 2;
    Jet g = g_jet(x0, n + 1);
    Jet gd = g.differentiate();
    Jet xv = Jet::variable(x0, n);
    Jet h = 0.5 * gd + 0.5 * (g * g).truncated(n) - xv * xv + (eps1_ + eps2_);
    Jet f1 = f.differentiate();
    Jet f2 = f1.differentiate();
    return 0.5 * (f2 + g.truncated(n) * f1.truncated(n) + (gd + h) * f.truncated(n));
}

Jet SusyTransform::apply_b_plus_wronskian(const Jet& f, double x0) const {
    if (f.order() < 2) throw DomainError("jet order too low for a second-order operator");
    int n = f.order();
    Jet a = seed1_.jet(x0, n);
    Jet b = seed2_.jet(x0, n);
    Jet a1 = a.differentiate();
    Jet b1 = b.differentiate();
    Jet a2 = a1.differentiate();
    Jet b2 = b1.differentiate();
    Jet f1 = f.differentiate();
    Jet f2 = f1.differentiate();
    // 3x3 Wronskian of (u1, u2, f), expanded along the third column.
    Jet det = (a1 * b2 - a2 * b1) * f - (a * b2 - a2 * b) * f1 + (a * b1 - a1 * b) * f2;
    Jet w = a * b1 - a1 * b;
    return det / (2.0 * w);
}

double SusyTransform::eigenstate_norm(int n) const {
    double en = oscillator::energy(n);
    if (en == eps1_ || en == eps2_)
        throw DeletedLevelError("level removed from the transformed spectrum");
    double prod = (en - eps1_) * (en - eps2_);
    if (prod <= 0.0) throw DomainError("factorization energies bracket an oscillator level");
    return std::sqrt(prod);
}

Jet SusyTransform::transformed_eigenstate(int n, double x0, int order) const {
    double norm = eigenstate_norm(n);
    Jet psi = oscillator::psi_jet(n, x0, order + 2);
    return (1.0 / norm) * apply_b_plus(psi, x0);
}

Jet SusyTransform::missing_state(int index, double x0, int order) const {
    if (index != 0 && index != 1) throw DomainError("missing-state index must be 0 or 1");
    wronskian(x0);
    Jet w = wronskian_jet(x0, order);
    Jet u = (index == 0 ? seed2_ : seed1_).jet(x0, order);
    return u / w;
}

std::array<MissingStateInfo, 2> missing_states(const SusyTransform& t) {
    std::array<MissingStateInfo, 2> out{};
    for (int idx = 0; idx < 2; ++idx) {
        auto value = [&](double x) {
            const auto& u = idx == 0 ? t.seed2() : t.seed1();
            return u.value(x) / t.wronskian(x).w;
        };
        GridFunction std_fn = sample(Grid::standard(), value);
        GridFunction ext_fn = sample(Grid::extended(), value);
        double ns = std_fn.norm();
        double ne = ext_fn.norm();
        bool normalizable = std::fabs(ne - ns) < 1e-6 * ns;
        out[static_cast<size_t>(idx)] =
            MissingStateInfo{t.missing_state_energy(idx), normalizable, ns, ne};
    }
    return out;
}

ExtendedHamiltonian ExtendedHamiltonian::first(double eps1, double gamma, int n_oscillator) {
    ExtendedHamiltonian h{SusyTransform::h1(eps1, gamma), {}};
    h.levels.push_back(-1.5);
    h.levels.push_back(eps1);
    for (int n = 0; n <= n_oscillator; ++n) h.levels.push_back(oscillator::energy(n));
    return h;
}

ExtendedHamiltonian ExtendedHamiltonian::second(double eps1, double gamma, int n_oscillator) {
    ExtendedHamiltonian h{SusyTransform::h2(eps1, gamma), {}};
    h.levels.push_back(0.5);
    h.levels.push_back(eps1 + 2.0);
    for (int n = 2; n <= n_oscillator; ++n) h.levels.push_back(oscillator::energy(n));
    return h;
}

double omega(const SusyTransform& t1, const SusyTransform& t2, double x) {
    auto a = t1.wronskian(x);
    auto b = t2.wronskian(x);
    return (a.w1 * b.w - a.w * b.w1) / (a.w * b.w);
}

EquivalenceReport equivalence_report(double eps1, double gamma, const Grid& grid) {
    SusyTransform t1 = SusyTransform::h1(eps1, gamma);
    SusyTransform t2 = SusyTransform::h2(eps1, gamma);
    const double lambda2 = eps1 + 1.5;

    EquivalenceReport r{0.0, 0.0, 0.0, 0.0, {}};
    int sample_stride = std::max(1, grid.points / 20);
    for (int i = 0; i < grid.points; ++i) {
        double x = grid.x(i);
        double dv = t2.potential(x) - t1.potential(x);
        r.sup_potential_diff = std::max(r.sup_potential_diff, std::fabs(dv - 2.0));

        double om = omega(t1, t2, x);
        r.sup_omega_diff = std::max(r.sup_omega_diff, std::fabs(om - 2.0 * x));
        if (i % sample_stride == 0) r.omega_samples.emplace_back(x, om);

        // u2 of the first family equals sqrt(2 sqrt pi) e^{x^2} u1 of the second.
        double lhs_seed = t1.seed2().value(x);
        double rhs_seed = kSqrt2SqrtPi * std::exp(x * x) * t2.seed1().value(x);
        r.sup_seed_relation = std::max(r.sup_seed_relation, relative_gap(lhs_seed, rhs_seed));

        // a- a- u2^(2) = 2 l2 (l2 - 1) u1^(1), with a-a- = (x^2 - l2) + x d/dx
        // on solutions of u'' = (x^2 - 2 l2 - 1) u.
        double u = t2.seed2().value(x);
        double du = t2.seed2().derivative(x);
        double lowered = (x * x - lambda2) * u + x * du;
        double target = 2.0 * lambda2 * (lambda2 - 1.0) * t1.seed1().value(x);
        r.sup_lowered_relation = std::max(r.sup_lowered_relation, relative_gap(lowered, target));
    }
    return r;
}

std::string potential_csv(double eps1, double gamma, const Grid& grid) {
    SusyTransform t1 = SusyTransform::h1(eps1, gamma);
    SusyTransform t2 = SusyTransform::h2(eps1, gamma);
    csv::Writer w({"x", "V1", "V2", "diff"});
    for (int i = 0; i < grid.points; ++i) {
        double x = grid.x(i);
        double v1 = t1.potential(x);
        double v2 = t2.potential(x);
        w.row({x, v1, v2, v2 - v1});
    }
    return w.str();
}

} // namespace susyosc::susy
