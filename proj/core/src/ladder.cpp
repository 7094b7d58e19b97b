#include "susyosc/ladder.hpp"

#include <cmath>

#include "susyosc/errors.hpp"

namespace susyosc::ladder {

namespace {

// Coarse window used for operator residuals and chain-orientation inner
// products; smooth integrands make a 321-point trapezoid plenty.
Grid operator_grid() { return Grid{-8.0, 8.0, 321}; }

// H f = -f''/2 + V f on jets (order drops by 2).
Jet apply_h(const SusyTransform& t, const Jet& f, double x0) {
    int n = f.order() - 2;
    Jet v = t.potential_jet(x0, n);
    return -0.5 * f.differentiate().differentiate() + v * f.truncated(n);
}

} // namespace

LadderPair::LadderPair(double eps, double gamma)
    : t1_(SusyTransform::h1(eps, gamma)),
      t2_(SusyTransform::h2(eps, gamma)),
      eps_(eps),
      gamma_(gamma),
      norm_em2_(compute_missing_norm(1)),
      norm_singlet_(compute_missing_norm(0)) {}

double LadderPair::compute_missing_norm(int index) const {
    auto value = [&](double x) {
        const auto& u = index == 0 ? t1_.seed2() : t1_.seed1();
        return u.value(x) / t1_.wronskian(x).w;
    };
    return sample(Grid::standard(), value).norm();
}

double LadderPair::missing_norm(int index) const {
    return index == 0 ? norm_singlet_ : norm_em2_;
}

std::array<double, 4> LadderPair::roots() const {
    return {eps_, -1.5, 1.5, eps_ + 2.0};
}

double LadderPair::n4(double energy) const {
    auto r = roots();
    return (energy - r[0]) * (energy - r[1]) * (energy - r[2]) * (energy - r[3]);
}

SpectralState LadderPair::state(Subspace sub, int n) const {
    if (n < 0) throw SubspaceMismatchError("rung index must be non-negative");
    switch (sub) {
        case Subspace::nu_minus_2: return {sub, n, -1.5 + 2.0 * n};
        case Subspace::nu_plus_1: return {sub, n, 1.5 + 2.0 * n};
        case Subspace::eps_singlet:
            if (n != 0) throw SubspaceMismatchError("the singlet has a single rung");
            return {sub, 0, eps_};
    }
    throw SubspaceMismatchError("unknown subspace");
}

LadderApplication LadderPair::lower(const SpectralState& s) const {
    double c2 = n4(s.energy);
    if (s.subspace == Subspace::eps_singlet || s.n == 0 || c2 <= 0.0)
        return {0.0, state(s.subspace, s.n)};
    return {std::sqrt(c2), state(s.subspace, s.n - 1)};
}

LadderApplication LadderPair::raise(const SpectralState& s) const {
    double c2 = n4(s.energy + 2.0);
    if (s.subspace == Subspace::eps_singlet || c2 <= 0.0)
        return {0.0, state(s.subspace, s.n)};
    return {std::sqrt(c2), state(s.subspace, s.n + 1)};
}

Jet LadderPair::l_plus(const Jet& f, double x0) const {
    return t1_.apply_b_plus(t2_.apply_b(f, x0), x0);
}

Jet LadderPair::l_minus(const Jet& f, double x0) const {
    return t2_.apply_b_plus(t1_.apply_b(f, x0), x0);
}

namespace {

// Positively-normalized rung jets before the chain-orientation sign.
Jet positive_state_jet(const SusyTransform& t1, double norm_em2, double norm_singlet,
                       Subspace sub, int n, double x0, int order) {
    switch (sub) {
        case Subspace::nu_minus_2:
            if (n == 0) return (1.0 / norm_em2) * t1.missing_state(1, x0, order);
            return t1.transformed_eigenstate(2 * (n - 1), x0, order);
        case Subspace::nu_plus_1:
            return t1.transformed_eigenstate(2 * n + 1, x0, order);
        case Subspace::eps_singlet:
            return (1.0 / norm_singlet) * t1.missing_state(0, x0, order);
    }
    throw SubspaceMismatchError("unknown subspace");
}

} // namespace

double LadderPair::sign_chain(Subspace sub, int n) const {
    if (sub == Subspace::eps_singlet || n == 0) return 1.0;
    auto key = std::make_pair(static_cast<int>(sub), n);
    auto it = signs_.find(key);
    if (it != signs_.end()) return it->second;

    double prev = sign_chain(sub, n - 1);
    Grid g = operator_grid();
    GridFunction lifted(g), candidate(g);
    for (int i = 0; i < g.points; ++i) {
        double x = g.x(i);
        Jet f = positive_state_jet(t1_, norm_em2_, norm_singlet_, sub, n - 1, x, 4);
        lifted.values[static_cast<size_t>(i)] = l_plus(f, x).value();
        candidate.values[static_cast<size_t>(i)] =
            positive_state_jet(t1_, norm_em2_, norm_singlet_, sub, n, x, 0).value();
    }
    double ip = GridFunction::inner(lifted, candidate);
    double s = prev * (ip >= 0.0 ? 1.0 : -1.0);
    signs_[key] = s;
    return s;
}

double LadderPair::basis_sign(Subspace sub, int n) const { return sign_chain(sub, n); }

Jet LadderPair::basis_state(Subspace sub, int n, double x0, int order) const {
    state(sub, n); // validates the rung
    return sign_chain(sub, n) *
           positive_state_jet(t1_, norm_em2_, norm_singlet_, sub, n, x0, order);
}

GridFunction LadderPair::basis_grid(Subspace sub, int n, const Grid& grid) const {
    double s = sign_chain(sub, n);
    GridFunction out(grid);
    for (int i = 0; i < grid.points; ++i)
        out.values[static_cast<size_t>(i)] =
            s * positive_state_jet(t1_, norm_em2_, norm_singlet_, sub, n, grid.x(i), 0).value();
    return out;
}

std::vector<LadderPair::KernelElement> LadderPair::kernel_basis() const {
    struct Probe {
        std::string name;
        bool physical;
        std::function<Jet(double, int)> jet;
    };
    std::vector<Probe> probes;
    probes.push_back({"nu=-2 bottom", true, [&](double x, int o) {
                          return positive_state_jet(t1_, norm_em2_, norm_singlet_,
                                                    Subspace::nu_minus_2, 0, x, o);
                      }});
    probes.push_back({"nu=+1 bottom", true, [&](double x, int o) {
                          return positive_state_jet(t1_, norm_em2_, norm_singlet_,
                                                    Subspace::nu_plus_1, 0, x, o);
                      }});
    probes.push_back({"eps singlet", true, [&](double x, int o) {
                          return positive_state_jet(t1_, norm_em2_, norm_singlet_,
                                                    Subspace::eps_singlet, 0, x, o);
                      }});
    // Fourth formal kernel element: B1+ applied to the second transform's
    // general seed.  Grows at the tails, so it never joins the basis.
    probes.push_back({"b1+ second-seed", false, [&](double x, int o) {
                          Jet u = t2_.seed2().jet(x, o + 2);
                          return t1_.apply_b_plus(u, x);
                      }});

    std::vector<KernelElement> out;
    Grid g = operator_grid();
    for (const auto& p : probes) {
        double sup_std = 0.0, sup_res = 0.0;
        for (int i = 0; i < g.points; ++i) {
            double x = g.x(i);
            sup_std = std::max(sup_std, std::fabs(p.jet(x, 0).value()));
            Jet f = p.jet(x, 4);
            sup_res = std::max(sup_res, std::fabs(l_minus(f, x).value()));
        }
        double sup_ext = 0.0;
        Grid ext = Grid::extended();
        for (int i = 0; i < ext.points; ++i)
            sup_ext = std::max(sup_ext, std::fabs(p.jet(ext.x(i), 0).value()));
        out.push_back(KernelElement{p.name, p.physical, sup_ext / sup_std,
                                    sup_res / std::max(1.0, sup_std)});
    }
    return out;
}

bool LadderPair::PhaReport::passed(double tol_comm, double tol_closure) const {
    for (const auto& c : h_lplus)
        if (!(c.residual < tol_comm)) return false;
    for (const auto& c : h_lminus)
        if (!(c.residual < tol_comm)) return false;
    for (const auto& c : closure)
        if (!(c.residual < tol_closure)) return false;
    return !h_lplus.empty();
}

LadderPair::PhaReport LadderPair::pha_check(int states_per_subspace) const {
    PhaReport report;
    Grid g = operator_grid();

    std::vector<std::pair<Subspace, int>> probes;
    for (int n = 0; n < states_per_subspace; ++n) {
        probes.emplace_back(Subspace::nu_minus_2, n);
        probes.emplace_back(Subspace::nu_plus_1, n);
    }
    probes.emplace_back(Subspace::eps_singlet, 0);

    for (auto [sub, n] : probes) {
        SpectralState st = state(sub, n);
        std::string name = (sub == Subspace::eps_singlet ? "singlet"
                            : sub == Subspace::nu_minus_2 ? "nu=-2 rung " + std::to_string(n)
                                                          : "nu=+1 rung " + std::to_string(n));
        double sup_plus = 0.0, sup_minus = 0.0, sup_close = 0.0;
        double scale_plus = 1.0, scale_minus = 1.0;
        const double d4 = n4(st.energy + 2.0) - n4(st.energy);
        for (int i = 0; i < g.points; ++i) {
            double x = g.x(i);
            // [H, L+] - 2 L+ and [H, L-] + 2 L- on the state
            Jet f6 = basis_state(sub, n, x, 6);
            Jet hf = apply_h(t1_, f6, x);
            Jet lp6 = l_plus(f6, x);
            Jet lm6 = l_minus(f6, x);
            Jet hl = apply_h(t1_, lp6, x);
            Jet lh = l_plus(hf, x);
            double comm_p = hl.value() - lh.value() - 2.0 * lp6.value();
            Jet hm = apply_h(t1_, lm6, x);
            Jet mh = l_minus(hf, x);
            double comm_m = hm.value() - mh.value() + 2.0 * lm6.value();
            sup_plus = std::max(sup_plus, std::fabs(comm_p));
            sup_minus = std::max(sup_minus, std::fabs(comm_m));
            scale_plus = std::max({scale_plus, std::fabs(hl.value()), std::fabs(lh.value())});
            scale_minus = std::max({scale_minus, std::fabs(hm.value()), std::fabs(mh.value())});

            // [L-, L+] f = (N4(E+2) - N4(E)) f for the eigenstate at E
            Jet f8 = basis_state(sub, n, x, 8);
            double lhs = l_minus(l_plus(f8, x), x).value() - l_plus(l_minus(f8, x), x).value();
            double rhs = d4 * f8.value();
            sup_close = std::max(sup_close, std::fabs(lhs - rhs));
        }
        report.h_lplus.push_back({name, sup_plus / scale_plus});
        report.h_lminus.push_back({name, sup_minus / scale_minus});
        report.closure.push_back({name, sup_close / std::max(1.0, std::fabs(d4))});
    }
    return report;
}

} // namespace susyosc::ladder
