#include "hardwall/specfun.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "hardwall/error.hpp"

namespace hardwall::specfun {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

// Continued fraction sqrt(pi) e^{x^2} erfc(x) = 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
// evaluated by the modified Lentz algorithm. Good for x >= ~2.
template <typename T>
T erfcx_cf(T x) {
  const T tiny = static_cast<T>(1e-300);
  T f = tiny, c = tiny, d = 0;
  for (int n = 1; n <= 300; ++n) {
    const T a = n == 1 ? T(1) : T(n - 1) / T(2);
    d = x + a * d;
    if (d == T(0)) d = tiny;
    c = x + a / c;
    if (c == T(0)) c = tiny;
    d = T(1) / d;
    const T delta = c * d;
    f *= delta;
    if (std::abs(delta - T(1)) < std::numeric_limits<T>::epsilon()) break;
  }
  return f / static_cast<T>(kSqrtPi);
}

double erfcx_nonneg(double x) {
  if (x < 2.5) return std::exp(x * x) * std::erfc(x);
  return erfcx_cf(x);
}

}  // namespace

double erfcx(double x) {
  if (std::isnan(x)) throw std::invalid_argument("erfcx: NaN argument");
  if (x >= 0.0) return erfcx_nonneg(x);
  if (x < -26.5) {
    std::ostringstream msg;
    msg << "erfcx overflows for x = " << x << " (x < -26.5)";
    throw numerical_error("erfcx_overflow", msg.str());
  }
  // erfc(x) = 2 - erfc(-x)
  return 2.0 * std::exp(x * x) - erfcx_nonneg(-x);
}

double log_half_erfc(double x) {
  if (std::isnan(x)) throw std::invalid_argument("log_half_erfc: NaN argument");
  if (x >= 0.0) return std::log(0.5 * erfcx_nonneg(x)) - x * x;
  // Phi(x) = log(1 - erfc(-x)/2) with erfc(-x) = e^{-x^2} erfcx(-x).
  return std::log1p(-0.5 * std::exp(-x * x) * erfcx_nonneg(-x));
}

double phi_prime(double x) {
  if (std::isnan(x)) throw std::invalid_argument("phi_prime: NaN argument");
  if (x >= 0.0) return -2.0 / (kSqrtPi * erfcx_nonneg(x));
  // -2 e^{-x^2} / (sqrt(pi) (2 - erfc(-x))): every factor stays in range.
  const double e = std::exp(-x * x);
  return -2.0 * e / (kSqrtPi * (2.0 - e * erfcx_nonneg(-x)));
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("log_gamma: requires x > 0");
  return std::lgamma(x);
}

double log_factorial(long long n) {
  if (n < 0) throw std::invalid_argument("log_factorial: requires n >= 0");
  return std::lgamma(static_cast<double>(n) + 1.0);
}

namespace detail {

double log_lower_gamma_series(double a, double z) {
  // gamma(a;z) = z^a e^{-z} sum_{k>=0} z^k / (a (a+1) ... (a+k))
  double term = 1.0 / a;
  double sum = term;
  for (long long k = 1; k < 100000000LL; ++k) {
    term *= z / (a + static_cast<double>(k));
    sum += term;
    if (term < sum * 1e-18) {
      return a * std::log(z) - z + std::log(sum);
    }
  }
  throw numerical_error("incomplete_gamma_nonconvergence",
                        "lower incomplete gamma series did not converge");
}

double log_regularized_q_cf(double a, double z) {
  // Gamma(a;z) = e^{-z} z^a / (z+1-a - 1(1-a)/(z+3-a - 2(2-a)/(z+5-a - ...)))
  const double tiny = 1e-300;
  double b = z + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / (b == 0.0 ? tiny : b);
  double f = d;
  for (int n = 1; n <= 100000; ++n) {
    const double an = -static_cast<double>(n) * (static_cast<double>(n) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) {
      return -z + a * std::log(z) - std::lgamma(a) + std::log(f);
    }
  }
  throw numerical_error("incomplete_gamma_nonconvergence",
                        "upper incomplete gamma continued fraction did not converge");
}

long double erfcx_ld(long double x) {
  if (x < 2.5L) return std::exp(x * x) * std::erfc(x);
  return erfcx_cf(x);
}

}  // namespace detail

double log_lower_gamma(double a, double z) {
  if (!(a > 0.0)) throw std::invalid_argument("log_lower_gamma: requires a > 0");
  if (z < 0.0) throw std::invalid_argument("log_lower_gamma: requires z >= 0");
  if (z == 0.0) return -std::numeric_limits<double>::infinity();
  if (z < a + 1.0) return detail::log_lower_gamma_series(a, z);
  const double log_q = detail::log_regularized_q_cf(a, z);
  return std::lgamma(a) + std::log1p(-std::exp(log_q));
}

double regularized_gamma_p(double a, double z) {
  if (!(a > 0.0)) throw std::invalid_argument("regularized_gamma_p: requires a > 0");
  if (z < 0.0) throw std::invalid_argument("regularized_gamma_p: requires z >= 0");
  if (z == 0.0) return 0.0;
  if (z < a + 1.0)
    return std::exp(detail::log_lower_gamma_series(a, z) - std::lgamma(a));
  return -std::expm1(detail::log_regularized_q_cf(a, z));
}

double zeta_prime_minus_one() { return -0.16542114370045092921; }

}  // namespace hardwall::specfun
