#include "hardwall/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

#include "hardwall/error.hpp"

namespace hardwall::numerics {

namespace {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule,
// on [-1,1]. Nodes are symmetric; only the non-negative half is stored.
constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEstimate {
  double integral;
  double error;
};

PanelEstimate gk15(const RealFn& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kKronrodNodes[i]);
    fv[14 - i] = f(c + h * kKronrodNodes[i]);
  }
  fv[7] = f(c);
  for (int i = 0; i < 15; ++i) {
    if (std::isnan(fv[i])) {
      const int k = i <= 7 ? i : 14 - i;
      const double x = i < 7 ? c - h * kKronrodNodes[k]
                             : c + h * kKronrodNodes[k];
      std::ostringstream msg;
      msg << "integrand returned NaN at x = " << x;
      throw numerical_error("integrand_nan", msg.str());
    }
  }
  double kron = 0.0, gauss = 0.0, resabs = 0.0;
  for (int i = 0; i < 7; ++i) {
    kron += kKronrodWeights[i] * (fv[i] + fv[14 - i]);
    resabs += kKronrodWeights[i] * (std::abs(fv[i]) + std::abs(fv[14 - i]));
  }
  kron += kKronrodWeights[7] * fv[7];
  resabs += kKronrodWeights[7] * std::abs(fv[7]);
  // Gauss points are the odd-indexed Kronrod nodes.
  for (int i = 0; i < 3; ++i)
    gauss += kGaussWeights[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
  gauss += kGaussWeights[3] * fv[7];
  // QUADPACK dqk15 error estimate.
  const double reskh = 0.5 * kron;
  double resasc = kKronrodWeights[7] * std::abs(fv[7] - reskh);
  for (int i = 0; i < 7; ++i)
    resasc += kKronrodWeights[i] *
              (std::abs(fv[i] - reskh) + std::abs(fv[14 - i] - reskh));
  resasc *= std::abs(h);
  resabs *= std::abs(h);
  double err = std::abs((kron - gauss) * h);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double eps = std::numeric_limits<double>::epsilon();
  const double uflow = std::numeric_limits<double>::min();
  if (resabs > uflow / (50.0 * eps)) err = std::max(err, 50.0 * eps * resabs);
  return {kron * h, err};
}

struct Panel {
  double a, b, integral, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

QuadResult integrate_finite(const RealFn& f, double a, double b,
                            const QuadratureConfig& cfg) {
  std::priority_queue<Panel> panels;
  PanelEstimate e0 = gk15(f, a, b);
  double total = e0.integral;
  double total_err = e0.error;
  panels.push({a, b, e0.integral, e0.error});
  int used = 1;
  while (total_err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
    if (panels.empty()) break;
    if (used >= cfg.max_subdivisions) {
      std::ostringstream msg;
      msg << "quadrature did not converge after " << used
          << " subdivisions (estimate " << total << ", error " << total_err
          << ")";
      throw numerical_error("quadrature_nonconvergence", msg.str(), total);
    }
    Panel worst = panels.top();
    panels.pop();
    const double m = 0.5 * (worst.a + worst.b);
    if (m <= worst.a || m >= worst.b) {
      // Interval at machine resolution; accept its estimate as-is.
      total_err -= worst.error;
      continue;
    }
    PanelEstimate l = gk15(f, worst.a, m);
    PanelEstimate r = gk15(f, m, worst.b);
    total += l.integral + r.integral - worst.integral;
    total_err += l.error + r.error - worst.error;
    panels.push({worst.a, m, l.integral, l.error});
    panels.push({m, worst.b, r.integral, r.error});
    ++used;
  }
  return {total, total_err, used};
}

}  // namespace

QuadResult integrate(const RealFn& f, double a, double b,
                     const QuadratureConfig& cfg) {
  if (!(a < b)) throw std::invalid_argument("integrate: requires a < b");
  if (cfg.rel_tol <= 0.0 || cfg.abs_tol < 0.0 || cfg.max_subdivisions < 1)
    throw std::invalid_argument("integrate: invalid QuadratureConfig");
  const bool inf_lo = std::isinf(a);
  const bool inf_hi = std::isinf(b);
  if (inf_lo && inf_hi) {
    QuadratureConfig half = cfg;
    half.rel_tol *= 0.5;
    half.abs_tol *= 0.5;
    QuadResult lo = integrate(f, a, 0.0, half);
    QuadResult hi = integrate(f, 0.0, b, half);
    return {lo.value + hi.value, lo.error_estimate + hi.error_estimate,
            lo.subdivisions_used + hi.subdivisions_used};
  }
  if (inf_hi) {
    // x = a + t/(1-t), dx = dt/(1-t)^2, t in [0,1)
    auto g = [&](double t) {
      const double w = 1.0 - t;
      const double x = a + t / w;
      return f(x) / (w * w);
    };
    return integrate_finite(g, 0.0, 1.0, cfg);
  }
  if (inf_lo) {
    // x = b - t/(1-t)
    auto g = [&](double t) {
      const double w = 1.0 - t;
      const double x = b - t / w;
      return f(x) / (w * w);
    };
    return integrate_finite(g, 0.0, 1.0, cfg);
  }
  return integrate_finite(f, a, b, cfg);
}

double log_integrate_exp(const RealFn& g, double a, double b,
                         const QuadratureConfig& cfg,
                         std::optional<double> peak_hint) {
  if (!(a < b) || std::isinf(a) || std::isinf(b))
    throw std::invalid_argument("log_integrate_exp: requires finite a < b");
  double m = -std::numeric_limits<double>::infinity();
  const int kPrescan = 65;
  for (int i = 0; i < kPrescan; ++i) {
    const double x = a + (b - a) * (i + 0.5) / kPrescan;
    m = std::max(m, g(x));
  }
  if (peak_hint && *peak_hint > a && *peak_hint < b)
    m = std::max(m, g(*peak_hint));
  if (std::isinf(m) || std::isnan(m))
    throw numerical_error("bad_exponent", "log_integrate_exp: exponent not finite at sampled points");
  auto shifted = [&](double x) {
    const double v = g(x);
    if (v == -std::numeric_limits<double>::infinity()) return 0.0;
    return std::exp(v - m);
  };
  double value, err;
  int used;
  if (peak_hint && *peak_hint > a && *peak_hint < b) {
    QuadratureConfig half = cfg;
    half.rel_tol *= 0.5;
    half.abs_tol *= 0.5;
    QuadResult lo = integrate(shifted, a, *peak_hint, half);
    QuadResult hi = integrate(shifted, *peak_hint, b, half);
    value = lo.value + hi.value;
    err = lo.error_estimate + hi.error_estimate;
    used = lo.subdivisions_used + hi.subdivisions_used;
  } else {
    QuadResult r = integrate(shifted, a, b, cfg);
    value = r.value;
    err = r.error_estimate;
    used = r.subdivisions_used;
  }
  (void)err;
  (void)used;
  if (!(value > 0.0))
    throw numerical_error("total_underflow",
                          "log_integrate_exp: integral underflowed to zero after shifting",
                          value);
  return m + std::log(value);
}

double find_root_monotone(const RealFn& f, double lo, double hi, double tol) {
  if (!(lo < hi)) throw std::invalid_argument("find_root_monotone: lo < hi required");
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw numerical_error("no_sign_change",
                          "find_root_monotone: no sign change on bracket");
  double prev_width = hi - lo;
  for (int it = 0; it < 200; ++it) {
    const double width = hi - lo;
    if (width <= tol || width <= 4e-16 * std::max(std::abs(lo), std::abs(hi)))
      break;
    // Secant proposal; bisect when it falls outside the open bracket or the
    // bracket stopped shrinking (one-sided secant convergence).
    double x = lo - flo * (hi - lo) / (fhi - flo);
    const bool stalled = (it % 2 == 1) && width > 0.5 * prev_width;
    if (stalled || !(x > lo && x < hi)) x = 0.5 * (lo + hi);
    if (it % 2 == 1) prev_width = width;
    const double fx = f(x);
    if (fx == 0.0) return x;
    if ((fx > 0.0) == (flo > 0.0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
  }
  return 0.5 * (lo + hi);
}

namespace {
// B_{2j} for j = 1..10.
constexpr double kBernoulliEven[10] = {
    1.0 / 6.0,        -1.0 / 30.0,      1.0 / 42.0,      -1.0 / 30.0,
    5.0 / 66.0,       -691.0 / 2730.0,  7.0 / 6.0,       -3617.0 / 510.0,
    43867.0 / 798.0,  -174611.0 / 330.0};
}  // namespace

double euler_maclaurin_sum(const RealFn& f,
                           const std::vector<RealFn>& odd_derivs,
                           long long p, long long q, int k,
                           const QuadratureConfig& cfg) {
  if (k < 1) throw std::invalid_argument("euler_maclaurin_sum: k >= 1 required");
  if (k > 10)
    throw std::invalid_argument("euler_maclaurin_sum: k > 10 unsupported");
  if (static_cast<int>(odd_derivs.size()) < k)
    throw std::invalid_argument(
        "euler_maclaurin_sum: need derivatives of orders 1,3,...,2k-1");
  if (p > q) throw std::invalid_argument("euler_maclaurin_sum: p <= q required");
  const double pd = static_cast<double>(p);
  const double qd = static_cast<double>(q);
  if (p == q) return f(pd);
  double result = integrate(f, pd, qd, cfg).value;
  result += 0.5 * (f(pd) + f(qd));
  double fact = 1.0;  // (2j)!
  for (int j = 1; j <= k; ++j) {
    fact *= (2.0 * j - 1.0) * (2.0 * j);
    const RealFn& d = odd_derivs[j - 1];
    result += kBernoulliEven[j - 1] / fact * (d(qd) - d(pd));
  }
  return result;
}

double kahan_sum(const std::vector<double>& terms) {
  double sum = 0.0, c = 0.0;
  for (double t : terms) {
    const double y = t - c;
    const double s = sum + y;
    c = (s - sum) - y;
    sum = s;
  }
  return sum;
}

}  // namespace hardwall::numerics
