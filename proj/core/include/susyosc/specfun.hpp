#ifndef SUSYOSC_SPECFUN_HPP
#define SUSYOSC_SPECFUN_HPP

#include <array>
#include <complex>

#include "susyosc/errors.hpp"

namespace susyosc::specfun {

struct SeriesResult {
    double value = 0.0;
    int terms_used = 0;
    double truncation_estimate = 0.0;
};

struct SeriesControl {
    int max_terms = 10000;
    // |x| beyond which kummer_1f1 switches to the large-argument expansion.
    double asymptotic_threshold = 30.0;
};

// 1/Gamma(x), entire; exactly zero at non-positive integers.
double recip_gamma(double x);

// Confluent hypergeometric 1F1(a;b;x).  Maclaurin series for small |x|,
// Kummer transform for x < 0, large-x expansion beyond the threshold.
// Throws PoleError when b is a non-positive integer the series reaches,
// NonConvergentError when the term budget runs out.
SeriesResult kummer_1f1(double a, double b, double x, const SeriesControl& ctl = {});

// Hermite function of real degree lambda:
//   H_lambda(x) = 2^l sqrt(pi) [ 1F1(-l/2;1/2;x^2)/Gamma((1-l)/2)
//                 - 2 x 1F1((1-l)/2;3/2;x^2)/Gamma(-l/2) ].
// Reduces to the Hermite polynomial at non-negative integer lambda.
double hermite_fn(double lambda, double x);

// {H_lambda(x), H_lambda(-x)} sharing one pair of Kummer series.
std::array<double, 2> hermite_fn_pair(double lambda, double x);

// d/dx H_lambda = 2 lambda H_{lambda-1}.
double hermite_fn_derivative(double lambda, double x);

// Generalized hypergeometric 1F4(p; a,b,c,d; w).
SeriesResult hyp_1f4(double p, double a, double b, double c, double d, double w,
                     const SeriesControl& ctl = {});

// Same series with a complex argument (overlap kernels need it).
std::complex<double> hyp_1f4_complex(double p, double a, double b, double c, double d,
                                     std::complex<double> w, const SeriesControl& ctl = {});

// Modified Bessel function of the second kind, real order tau, z > 0.
// Half-integer orders use the closed forms; orders 0 and 1 use the
// ascending series / large-argument expansion where those are accurate;
// everything else integrates exp(-z cosh t) cosh(tau t) adaptively.
double bessel_k(double tau, double z);

// G^{2,0}_{0,2}(b1,b2; y) = 2 y^{(b1+b2)/2} K_{b1-b2}(2 sqrt y), y > 0.
double meijer_g2002(double b1, double b2, double y);

// G^{4,0}_{0,4}(b1..b4; y) with b1-b2 and b3-b4 fixed by the measure family,
// evaluated as the Mellin convolution of two G^{2,0}_{0,2} kernels:
//   G4(y) = int_0^inf G2(b1,b2; y/t) G2(b3,b4; t) dt/t.
double meijer_g4004(const std::array<double, 4>& b, double y, double rel_tol = 1e-6);

} // namespace susyosc::specfun

#endif
