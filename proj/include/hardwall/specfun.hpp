#ifndef HARDWALL_SPECFUN_HPP
#define HARDWALL_SPECFUN_HPP

namespace hardwall::specfun {

// Scaled complementary error function e^{x^2} erfc(x). Finite for all
// x >= -26.5; below that e^{x^2} overflows and a numerical_error is thrown
// (callers needing the log should use log_half_erfc instead).
double erfcx(double x);

// Phi(x) = log(erfc(x)/2), evaluated without cancellation on either side of 0.
double log_half_erfc(double x);

// Phi'(x) = -2 e^{-x^2} / (sqrt(pi) erfc(x)); always negative, never overflows.
double phi_prime(double x);

// log Gamma(x) for x > 0.
double log_gamma(double x);

// log n!
double log_factorial(long long n);

// log of the lower incomplete gamma function gamma(a; z) = int_0^z t^{a-1} e^{-t} dt,
// for a > 0, z >= 0. Returns -inf for z = 0.
double log_lower_gamma(double a, double z);

// Regularized lower incomplete gamma P(a, z) = gamma(a; z)/Gamma(a).
double regularized_gamma_p(double a, double z);

// The constant zeta'(-1).
double zeta_prime_minus_one();

namespace detail {
// Series evaluation of log gamma(a; z); accurate for z < a + 1.
double log_lower_gamma_series(double a, double z);
// Continued-fraction evaluation of log Q(a, z) = log(Gamma(a;z)/Gamma(a));
// accurate for z >= a + 1.
double log_regularized_q_cf(double a, double z);
// erfcx in extended precision for cancellation-heavy integrands.
long double erfcx_ld(long double x);
}  // namespace detail

}  // namespace hardwall::specfun

#endif
