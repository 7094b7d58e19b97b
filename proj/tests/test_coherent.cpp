#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_util.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "susyosc/coherent.hpp"
#include "susyosc/errors.hpp"
#include "susyosc/ladder.hpp"

using namespace susyosc;
using namespace susyosc::coherent;
using ladder::LadderPair;
using testutil::load_golden;
using testutil::rel_diff;

namespace {
const double kGamma = 2.0;

const LadderPair& pair_fixture() {
    static LadderPair pair(-0.25, kGamma);
    return pair;
}
} // namespace

TEST_CASE("coefficient law: parameter quadruple and zero-label state") {
    auto p = pochhammers(-2, 0.0);
    CHECK(p.a == doctest::Approx(0.25));
    CHECK(p.b == doctest::Approx(-0.75));
    CHECK(p.c == doctest::Approx(1.0));
    CHECK(p.d == doctest::Approx(-0.5));

    for (int nu : {-2, 1}) {
        auto s = make_coherent(nu, 0.0, -0.25, kGamma);
        CHECK(std::abs(s.coeffs[0]) == doctest::Approx(1.0));
        CHECK(mean_energy(s) == doctest::Approx(nu + 0.5));
        CHECK(normalization_c0(nu, -0.25, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    }

    CHECK_THROWS_AS(make_coherent(0, 1.0, 0.0, kGamma), SubspaceMismatchError);
    // A label outside the admissible window flips a recurrence factor's sign.
    CHECK_THROWS_AS(make_coherent(1, 1.0, 3.0, kGamma), DomainError);
}

TEST_CASE("coefficients: unit norm and recurrence-vs-series normalization") {
    auto golden = load_golden("coherent.json");
    for (const auto& row : golden["c0"]) {
        int nu = row["nu"].get<int>();
        double eps = row["eps"].get<double>();
        double az = row["abs_z"].get<double>();
        CHECK_MESSAGE(rel_diff(normalization_c0(nu, eps, az), row["value"].get<double>()) < 1e-10,
                      "nu=", nu, " |z|=", az);

        auto s = make_coherent(nu, az, eps, kGamma);
        double total = 0.0;
        for (auto c : s.coeffs) total += std::norm(c);
        CHECK(std::fabs(total - 1.0) < 1e-12);
        CHECK(rel_diff(std::abs(s.coeffs[0]), row["value"].get<double>()) < 1e-10);
    }

    // Pinned-cutoff variant keeps the tail below the adaptive tolerance.
    auto pinned = make_coherent(1, 10.0, 0.0, kGamma, 40);
    CHECK(pinned.nmax == 40);
    double total = 0.0;
    for (auto c : pinned.coeffs) total += std::norm(c);
    CHECK(std::fabs(total - 1.0) < 1e-10);
    CHECK(std::norm(pinned.coeffs.back()) < 1e-14);
}

TEST_CASE("eigenvector property: spectral lowering reproduces z times the state") {
    const auto& pair = pair_fixture();
    for (int nu : {-2, 1}) {
        for (std::complex<double> z : {std::complex<double>(10.0, 0.0),
                                       std::complex<double>(3.0, 4.0)}) {
            auto s = make_coherent(nu, z, pair.eps(), kGamma, 40);
            auto sub = s.subspace();
            for (int n = 1; n <= 25; ++n) {
                double ln = pair.lower(pair.state(sub, n)).coeff;
                std::complex<double> lhs = s.coeffs[static_cast<size_t>(n)] * ln;
                std::complex<double> rhs = z * s.coeffs[static_cast<size_t>(n) - 1];
                CHECK(std::abs(lhs - rhs) <= 1e-8 * std::max(1.0, std::abs(rhs)));
            }
        }
    }
}

TEST_CASE("overlaps: reproducing-kernel properties and golden value") {
    auto golden = load_golden("coherent.json")["overlap"];
    auto a = make_coherent(1, golden["z_left"].get<double>(), 0.0, kGamma);
    auto b = make_coherent(1, golden["z_right"].get<double>(), 0.0, kGamma);
    CHECK(rel_diff(overlap(a, b).real(), golden["value"].get<double>()) < 1e-10);
    CHECK(std::fabs(overlap(a, b).imag()) < 1e-12);

    // unit self-overlap, Hermitian symmetry, strict contraction elsewhere
    auto zc = make_coherent(-2, {3.0, 4.0}, -0.25, kGamma);
    CHECK(std::abs(overlap(zc, zc) - 1.0) < 1e-12);
    auto wc = make_coherent(-2, {-2.0, 1.0}, -0.25, kGamma);
    auto ab = overlap(zc, wc);
    auto ba = overlap(wc, zc);
    CHECK(std::abs(ab - std::conj(ba)) < 1e-12);
    CHECK(std::abs(ab) < 1.0);

    for (int k = 1; k <= 20; ++k) {
        auto other = make_coherent(-2, {3.0 + 0.45 * k, 4.0 - 0.3 * k}, -0.25, kGamma);
        CHECK(std::abs(overlap(zc, other)) < 1.0);
    }

    // continuity in the label
    auto near = make_coherent(-2, {3.001, 4.0}, -0.25, kGamma);
    CHECK(std::abs(overlap(zc, near)) > 1.0 - 1e-4);

    CHECK_THROWS_AS(overlap(zc, make_coherent(1, 3.0, -0.25, kGamma)), SubspaceMismatchError);
}

TEST_CASE("mean energy: direct sum, closed form, golden values") {
    auto golden = load_golden("coherent.json");
    for (const auto& row : golden["mean_energy"]) {
        int nu = row["nu"].get<int>();
        double eps = row["eps"].get<double>();
        double az = row["abs_z"].get<double>();
        auto s = make_coherent(nu, az, eps, kGamma);
        CHECK(rel_diff(mean_energy(s), row["value"].get<double>()) < 1e-10);
        CHECK(rel_diff(mean_energy_closed(nu, eps, az), row["value"].get<double>()) < 1e-10);
    }

    for (auto [nu, eps, az] : std::vector<std::tuple<int, double, double>>{
             {1, 0.0, 10.0}, {-2, -0.25, 5.0}, {1, -0.75, 50.0}}) {
        auto s = make_coherent(nu, az, eps, kGamma);
        CHECK(rel_diff(mean_energy(s), mean_energy_closed(nu, eps, az)) < 1e-10);
    }

    // The commonly-quoted parameter shifts do not reproduce the direct sum.
    CHECK(rel_diff(mean_energy_printed(1, 0.0, 10.0), mean_energy_closed(1, 0.0, 10.0)) > 1e-3);
}

TEST_CASE("mean energy: zero-label limit, monotone sweeps, sub-quadratic growth") {
    for (int nu : {-2, 1}) {
        CHECK(std::fabs(mean_energy_closed(nu, -0.25, 1e-4) - (nu + 0.5)) < 2e-8);
    }

    for (double eps : {-0.25, -0.75}) {
        double prev = -1e300;
        for (double az = 0.0; az <= 100.0; az += 10.0) {
            double e = mean_energy_closed(-2, eps, az);
            CHECK(e > prev);
            prev = e;
        }
        // far below the quadratic growth of the standard oscillator family
        CHECK(prev < -2.0 + 0.5 + 100.0 * 100.0);
        CHECK(prev < 60.0);
    }
}

TEST_CASE("mean energy is invariant under cutoff growth") {
    auto a = make_coherent(1, 50.0, 0.0, kGamma, 40);
    auto b = make_coherent(1, 50.0, 0.0, kGamma, 80);
    CHECK(std::fabs(mean_energy(a) - mean_energy(b)) < 1e-10);
}

TEST_CASE("time evolution: rotating label and global phase") {
    const double pi = std::numbers::pi;
    auto s = make_coherent(-2, {3.0, 1.0}, -0.25, kGamma);

    auto full = evolve(s, pi); // one density period: label returns to itself
    CHECK(std::abs(full.z - s.z) < 1e-12 * std::abs(s.z));

    auto phase = evolution_phase(s, 0.7);
    CHECK(std::fabs(std::abs(phase) - 1.0) < 1e-15);
    CHECK(std::fabs(std::arg(phase) - (-(-2 + 0.5) * 0.7)) < 1e-12);

    auto half = evolve(s, 0.25 * pi);
    auto again = evolve(half, 0.75 * pi);
    CHECK(std::abs(again.z - s.z) < 1e-12 * std::abs(s.z));
}

TEST_CASE("snapshot evaluator matches the explicit rung superposition") {
    const auto& pair = pair_fixture();
    auto s = make_coherent(-2, {3.0, 2.0}, pair.eps(), kGamma);
    const double t = 0.6;
    auto sub = s.subspace();
    for (double x : {-1.3, 0.7, 2.2}) {
        std::complex<double> direct = 0.0;
        for (size_t n = 0; n < s.coeffs.size(); ++n) {
            std::complex<double> rot =
                std::exp(std::complex<double>(0.0, -2.0 * static_cast<double>(n) * t));
            direct += s.coeffs[n] * rot *
                      pair.basis_state(sub, static_cast<int>(n), x, 0).value();
        }
        direct *= evolution_phase(s, t);
        std::complex<double> fast = snapshot_value(pair, s, t, x);
        CHECK(std::abs(fast - direct) <= 1e-9 * std::max(1.0, std::abs(direct)));
    }
}

TEST_CASE("position density: normalization, period, evolve-consistency") {
    const auto& pair = pair_fixture();
    const double pi = std::numbers::pi;
    auto s = make_coherent(-2, 10.0, pair.eps(), kGamma);

    auto rho = density(pair, s, 0.0, Grid::standard());
    double mass = 0.0;
    for (double v : rho.values) mass += v;
    mass *= rho.grid.h();
    CHECK(std::fabs(mass - 1.0) < 1e-6);

    const Grid g{-8.0, 8.0, 401};
    auto rho_t = density(pair, s, 0.4, g);
    auto rho_tp = density(pair, s, 0.4 + pi, g);
    auto rho_ev = density(pair, evolve(s, 0.4), 0.0, g);
    double worst_period = 0.0, worst_evolve = 0.0;
    for (size_t i = 0; i < rho_t.values.size(); ++i) {
        worst_period = std::max(worst_period, std::fabs(rho_tp.values[i] - rho_t.values[i]));
        worst_evolve = std::max(worst_evolve, std::fabs(rho_ev.values[i] - rho_t.values[i]));
    }
    CHECK(worst_period < 1e-10);
    CHECK(worst_evolve < 1e-9);

    // zero label: the density is a stationary eigenstate density
    auto s0 = make_coherent(-2, 0.0, pair.eps(), kGamma);
    auto a = density(pair, s0, 0.0, g);
    auto b = density(pair, s0, 0.7, g);
    for (size_t i = 0; i < a.values.size(); ++i)
        CHECK(std::fabs(a.values[i] - b.values[i]) < 1e-12);
}

TEST_CASE("completeness measure: Mellin moments against the gamma products") {
    auto golden = load_golden("coherent.json")["measure_moments"];
    auto params = measure_mellin_params(1, 0.0);
    CHECK(params[0] == doctest::Approx(0.75));
    CHECK(params[1] == doctest::Approx(-0.25));
    CHECK(params[2] == doctest::Approx(1.5));
    CHECK(params[3] == doctest::Approx(0.0));

    auto reports = measure_moments(1, 0.0);
    REQUIRE(reports.size() == 5);
    auto expected = golden["gamma_products"].get<std::vector<double>>();
    for (size_t i = 0; i < reports.size(); ++i) {
        CHECK(reports[i].s == static_cast<int>(i) + 1);
        CHECK(rel_diff(reports[i].gamma_product, expected[i]) < 1e-12);
        CHECK_MESSAGE(std::fabs(reports[i].rel_error) < 1e-4, "s=", reports[i].s);
    }

    // The lowest moment diverges on the nu = -2 branch.
    CHECK_THROWS_AS(measure_moments(-2, 0.0, 1), DomainError);
}

TEST_CASE("completeness measure: density positivity") {
    for (int k = 0; k < 50; ++k) {
        double y = std::pow(10.0, -3.0 + 6.0 * k / 49.0);
        CHECK_MESSAGE(measure_f(1, 0.0, y) > 0.0, "y=", y);
    }
}

TEST_CASE("completeness measure: identity block on the lowest rungs") {
    MeasureSpec spec{1, 0.0};
    auto block = identity_block(spec, 3);
    for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n) {
            double expect = m == n ? 1.0 : 0.0;
            CHECK_MESSAGE(std::fabs(block[static_cast<size_t>(m)][static_cast<size_t>(n)] -
                                    expect) < 1e-3,
                          "entry ", m, ",", n);
        }
}

TEST_CASE("large labels stay numerically stable") {
    auto s = make_coherent(-2, 200.0, -0.25, kGamma);
    double total = 0.0;
    for (auto c : s.coeffs) total += std::norm(c);
    CHECK(std::fabs(total - 1.0) < 1e-12);
    CHECK(normalization_c0(-2, -0.25, 200.0) > 0.0);
    CHECK(mean_energy(s) > mean_energy(make_coherent(-2, 100.0, -0.25, kGamma)));
}
