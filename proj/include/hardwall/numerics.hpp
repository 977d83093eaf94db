#ifndef HARDWALL_NUMERICS_HPP
#define HARDWALL_NUMERICS_HPP

#include <functional>
#include <optional>
#include <vector>

namespace hardwall::numerics {

struct QuadratureConfig {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  int max_subdivisions = 2000;
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions_used = 0;
};

using RealFn = std::function<double(double)>;

// Adaptive Gauss-Kronrod quadrature of f over [a,b]. Semi-infinite ranges are
// accepted (b = +inf, or a = -inf with finite b) and handled by the
// substitution x = a + t/(1-t) resp. x = b - t/(1-t).
QuadResult integrate(const RealFn& f, double a, double b,
                     const QuadratureConfig& cfg = {});

// log of \int_a^b e^{g(x)} dx, computed as M + log \int e^{g-M} with M the
// largest sampled value of g (65-point prescan, plus an optional caller hint
// for an interior maximum; the interval is split there so the peak sits on a
// panel boundary).
double log_integrate_exp(const RealFn& g, double a, double b,
                         const QuadratureConfig& cfg = {},
                         std::optional<double> peak_hint = std::nullopt);

// Root of a strictly monotone continuous f on [lo,hi] with a sign change.
// Bisection/secant hybrid; the iterate never leaves the bracket.
double find_root_monotone(const RealFn& f, double lo, double hi,
                          double tol = 1e-14);

// Euler-Maclaurin evaluation of sum_{i=p}^{q} f(i) (endpoints included):
//   \int_p^q f + (f(p)+f(q))/2
//     + sum_{j=1}^{k} B_{2j}/(2j)! (f^{(2j-1)}(q) - f^{(2j-1)}(p)).
// odd_derivs[m] must evaluate f^{(2m+1)}; k of them are used.
double euler_maclaurin_sum(const RealFn& f,
                           const std::vector<RealFn>& odd_derivs,
                           long long p, long long q, int k,
                           const QuadratureConfig& cfg = {});

// Compensated (Kahan) accumulation in the order given.
double kahan_sum(const std::vector<double>& terms);

}  // namespace hardwall::numerics

#endif
