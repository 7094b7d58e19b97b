#include "susyosc/specfun.hpp"

#include <cmath>
#include <limits>

#include "susyosc/quadrature.hpp"

namespace susyosc::specfun {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

} // namespace

double recip_gamma(double x) {
    if (is_nonpositive_integer(x)) return 0.0;
    if (std::fabs(x) < 170.0) return 1.0 / std::tgamma(x);
    if (x > 0.0) return std::exp(-std::lgamma(x));
    // reflection keeps lgamma in range for large negative x
    int sign = 0;
    double lg = 0.0;
#if defined(__GLIBC__) || defined(__APPLE__)
    lg = lgamma_r(x, &sign);
#else
    lg = std::lgamma(x);
    sign = (std::fmod(std::floor(-x), 2.0) == 0.0) ? -1 : 1;
#endif
    return sign * std::exp(-lg);
}

namespace {

// Plain Maclaurin sum of 1F1; argument assumed >= 0 unless terminating.
SeriesResult kummer_series(double a, double b, double x, const SeriesControl& ctl) {
    SeriesResult r;
    double term = 1.0, sum = 1.0;
    for (int n = 0; n < ctl.max_terms; ++n) {
        if (a + n == 0.0) { // terminating numerator
            r.value = sum;
            r.terms_used = n + 1;
            r.truncation_estimate = 0.0;
            return r;
        }
        if (b + n == 0.0)
            throw PoleError("1F1 lower parameter hit a non-positive integer");
        term *= (a + n) * x / ((b + n) * (n + 1.0));
        sum += term;
        if (std::fabs(term) <= 1e-17 * std::fabs(sum) && n > 2) {
            r.value = sum;
            r.terms_used = n + 2;
            r.truncation_estimate = std::fabs(term);
            return r;
        }
    }
    throw NonConvergentError("1F1 series exhausted its term budget");
}

// Large-x expansion: 1F1(a;b;x) ~ Gamma(b)/Gamma(a) e^x x^{a-b}
//   * sum_k (b-a)_k (1-a)_k / (k! x^k), x >> 1.
SeriesResult kummer_asymptotic(double a, double b, double x, const SeriesControl& ctl) {
    const double rg_a = recip_gamma(a);
    double term = 1.0, sum = 1.0, best = std::numeric_limits<double>::max();
    int n = 0;
    for (; n < 400; ++n) {
        double next = term * (b - a + n) * (1.0 - a + n) / ((n + 1.0) * x);
        if (std::fabs(next) >= std::fabs(term)) break; // divergent tail reached
        term = next;
        sum += term;
        best = std::fabs(term);
        if (best <= 1e-17 * std::fabs(sum)) break;
    }
    (void)ctl;
    SeriesResult r;
    double lead = std::tgamma(b) * rg_a * std::exp(x) * std::pow(x, a - b);
    r.value = lead * sum;
    r.terms_used = n + 1;
    r.truncation_estimate = std::fabs(lead) * best;
    return r;
}

} // namespace

SeriesResult kummer_1f1(double a, double b, double x, const SeriesControl& ctl) {
    if (is_nonpositive_integer(b) && !(is_nonpositive_integer(a) && a >= b))
        throw PoleError("1F1 undefined: lower parameter non-positive integer");
    const bool terminating = is_nonpositive_integer(a);
    if (x < 0.0) {
        if (terminating) return kummer_series(a, b, x, ctl);
        // Kummer transform to positive argument
        SeriesResult r = kummer_1f1(b - a, b, -x, ctl);
        double e = std::exp(x);
        r.value *= e;
        r.truncation_estimate *= e;
        return r;
    }
    if (!terminating && x > ctl.asymptotic_threshold) return kummer_asymptotic(a, b, x, ctl);
    return kummer_series(a, b, x, ctl);
}

std::array<double, 2> hermite_fn_pair(double lambda, double x) {
    // Both series depend on x only through x^2, so H(x) and H(-x) share the
    // two Kummer evaluations and differ in the sign of the odd part.
    const double pre = std::pow(2.0, lambda) * kSqrtPi;
    const double c_even = pre * recip_gamma(0.5 * (1.0 - lambda));
    const double c_odd = -2.0 * pre * recip_gamma(-0.5 * lambda);
    const double x2 = x * x;
    double even = c_even == 0.0 ? 0.0 : c_even * kummer_1f1(-0.5 * lambda, 0.5, x2).value;
    double odd = c_odd == 0.0 ? 0.0 : c_odd * x * kummer_1f1(0.5 * (1.0 - lambda), 1.5, x2).value;
    return {even + odd, even - odd};
}

double hermite_fn(double lambda, double x) {
    // Exact Gamma(1/2), Gamma(-1/2); reciprocal gammas handle the poles at
    // even/odd integer lambda where one branch drops out.
    const double pre = std::pow(2.0, lambda) * kSqrtPi;
    const double c_even = pre * recip_gamma(0.5 * (1.0 - lambda));
    const double c_odd = -2.0 * pre * recip_gamma(-0.5 * lambda);
    const double x2 = x * x;
    double even = c_even == 0.0 ? 0.0 : c_even * kummer_1f1(-0.5 * lambda, 0.5, x2).value;
    double odd = c_odd == 0.0 ? 0.0 : c_odd * x * kummer_1f1(0.5 * (1.0 - lambda), 1.5, x2).value;
    return even + odd;
}

double hermite_fn_derivative(double lambda, double x) {
    return 2.0 * lambda * hermite_fn(lambda - 1.0, x);
}

namespace {

template <class T>
T hyp_1f4_impl(double p, double a, double b, double c, double d, T w, const SeriesControl& ctl,
               int* terms, double* trunc) {
    T term(1.0), sum(1.0);
    for (int n = 0; n < ctl.max_terms; ++n) {
        if (p + n == 0.0) {
            if (terms) *terms = n + 1;
            if (trunc) *trunc = 0.0;
            return sum;
        }
        if (a + n == 0.0 || b + n == 0.0 || c + n == 0.0 || d + n == 0.0)
            throw PoleError("1F4 lower parameter hit a non-positive integer");
        term *= (p + n) * w / ((a + n) * (b + n) * (c + n) * (d + n) * (n + 1.0));
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum) && n > 2) {
            if (terms) *terms = n + 2;
            if (trunc) *trunc = std::abs(term);
            return sum;
        }
    }
    throw NonConvergentError("1F4 series exhausted its term budget");
}

} // namespace

SeriesResult hyp_1f4(double p, double a, double b, double c, double d, double w,
                     const SeriesControl& ctl) {
    SeriesResult r;
    r.value = hyp_1f4_impl<double>(p, a, b, c, d, w, ctl, &r.terms_used, &r.truncation_estimate);
    return r;
}

std::complex<double> hyp_1f4_complex(double p, double a, double b, double c, double d,
                                     std::complex<double> w, const SeriesControl& ctl) {
    return hyp_1f4_impl<std::complex<double>>(p, a, b, c, d, w, ctl, nullptr, nullptr);
}

namespace {

bool is_half_integer(double tau) {
    double two = 2.0 * tau;
    return two == std::floor(two) && std::fmod(std::fabs(two), 2.0) == 1.0;
}

// K_{m+1/2}(z) = sqrt(pi/2z) e^{-z} sum_{k<=m} (m+k)! / ((m-k)! k! (2z)^k)
double bessel_k_half_integer(int m, double z) {
    double sum = 0.0, term = 1.0;
    for (int k = 0; k <= m; ++k) {
        if (k > 0) term *= static_cast<double>((m + k) * (m - k + 1)) / (k * 2.0 * z);
        sum += term;
    }
    return std::sqrt(M_PI / (2.0 * z)) * std::exp(-z) * sum;
}

constexpr double kEulerGamma = 0.57721566490153286;

// Ascending series for K_0 and K_1 (accurate for z <= 6; the log and power
// parts cancel at most ~5 digits there).
double bessel_k_integer_series(int n, double z) {
    const double q = 0.25 * z * z;
    const double lg = std::log(0.5 * z);
    double ibes = 0.0, ksum = 0.0;
    if (n == 0) {
        // I_0 and sum_k H_k (z^2/4)^k / (k!)^2
        double term = 1.0, h = 0.0;
        ibes = 1.0;
        for (int k = 1; k < 400; ++k) {
            term *= q / (static_cast<double>(k) * k);
            h += 1.0 / k;
            ibes += term;
            ksum += term * h;
            if (term < 1e-18 * ibes) break;
        }
        return -(lg + kEulerGamma) * ibes + ksum;
    }
    // K_1 = 1/z + log(z/2) I_1 - (z/4) sum_k [psi(k+1)+psi(k+2)] q^k/(k!(k+1)!)
    double term = 1.0, psi_a = -kEulerGamma, psi_b = 1.0 - kEulerGamma;
    ibes = term;
    ksum = term * (psi_a + psi_b);
    for (int k = 1; k < 400; ++k) {
        term *= q / (static_cast<double>(k) * (k + 1.0));
        psi_a += 1.0 / k;
        psi_b += 1.0 / (k + 1.0);
        ibes += term;
        ksum += term * (psi_a + psi_b);
        if (term < 1e-18 * ibes) break;
    }
    return 1.0 / z + lg * (0.5 * z * ibes) - 0.25 * z * ksum;
}

// Large-argument expansion; optimal truncation error ~ e^{-2z}, so only
// used for z >= 14 where that sits below 1e-12 relative.
double bessel_k_asymptotic(double tau, double z) {
    const double mu = 4.0 * tau * tau;
    double sum = 1.0, term = 1.0;
    for (int k = 0; k < 200; ++k) {
        double next = term * (mu - (2.0 * k + 1.0) * (2.0 * k + 1.0)) / (8.0 * z * (k + 1.0));
        if (std::fabs(next) >= std::fabs(term)) break;
        term = next;
        sum += term;
        if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
    }
    return std::sqrt(M_PI / (2.0 * z)) * std::exp(-z) * sum;
}

} // namespace

double bessel_k(double tau, double z) {
    if (!(z > 0.0)) throw DomainError("bessel_k requires z > 0");
    tau = std::fabs(tau); // K_{-tau} = K_tau
    if (z > 745.0) return 0.0; // e^{-z} underflows; avoids inf*0 downstream
    if (is_half_integer(tau)) return bessel_k_half_integer(static_cast<int>(tau), z);
    if (tau == std::rint(tau) && tau <= 1.0) {
        int n = static_cast<int>(tau);
        if (z <= 6.0) return bessel_k_integer_series(n, z);
        if (z >= 14.0) return bessel_k_asymptotic(tau, z);
    }

    // K_tau(z) = int_0^inf e^{-z cosh t} cosh(tau t) dt; truncate where the
    // integrand falls 1e-20 below its t=0 value.
    double T = 1.0;
    while (z * (std::cosh(T) - 1.0) - tau * T < 47.0 && T < 500.0) T *= 1.25;
    auto integrand = [=](double t) { return std::exp(-z * std::cosh(t)) * std::cosh(tau * t); };
    return integrate(integrand, 0.0, T, 1e-12).value;
}

double meijer_g2002(double b1, double b2, double y) {
    if (!(y > 0.0)) throw DomainError("meijer_g2002 requires y > 0");
    if (!std::isfinite(y) || y > 1.4e5) return 0.0; // K(2 sqrt y) underflows
    return 2.0 * std::pow(y, 0.5 * (b1 + b2)) * bessel_k(b1 - b2, 2.0 * std::sqrt(y));
}

double meijer_g4004(const std::array<double, 4>& b, double y, double rel_tol) {
    if (!(y > 0.0)) throw DomainError("meijer_g4004 requires y > 0");
    auto integrand = [&](double t) {
        if (t <= 0.0 || y / t <= 0.0) return 0.0;
        return meijer_g2002(b[0], b[1], y / t) * meijer_g2002(b[2], b[3], t) / t;
    };
    return integrate_semi_infinite(integrand, rel_tol).value;
}

} // namespace susyosc::specfun
