#include "hardwall/potential.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "hardwall/error.hpp"
#include "hardwall/numerics.hpp"

namespace hardwall::potential {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kBoundaryTol = 1e-9;  // |r - 1| below this counts as "at the wall"
constexpr double kRMax = 1e8;          // beyond this, r1 is reported as +inf

double polylog_q(const PolyLogParams& p, double r, int order) {
  double acc = 0.0;
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    const double k2 = 2.0 * static_cast<double>(i + 1);  // exponent 2k
    double fac = 1.0;
    for (int d = 0; d < order; ++d) fac *= k2 - d;
    acc += p.coeffs[i] * fac * std::pow(r, k2 - order);
  }
  if (p.a != 0.0) {
    switch (order) {
      case 0: acc -= 2.0 * p.a * std::log(r); break;
      case 1: acc -= 2.0 * p.a / r; break;
      case 2: acc += 2.0 * p.a / (r * r); break;
      case 3: acc -= 4.0 * p.a / (r * r * r); break;
      case 4: acc += 12.0 * p.a / (r * r * r * r); break;
    }
  }
  return acc;
}

double mittag_q(const MittagParams& p, double r, int order) {
  const double e = 2.0 * (1.0 + p.mu);
  double fac = 1.0;
  for (int d = 0; d < order; ++d) fac *= e - d;
  double acc = fac * std::pow(r, e - order);
  if (p.a != 0.0) {
    switch (order) {
      case 0: acc -= 2.0 * p.a * std::log(r); break;
      case 1: acc -= 2.0 * p.a / r; break;
      case 2: acc += 2.0 * p.a / (r * r); break;
      case 3: acc -= 4.0 * p.a / (r * r * r); break;
      case 4: acc += 12.0 * p.a / (r * r * r * r); break;
    }
  }
  return acc;
}

double generic_q(const GenericParams& p, double r, int order) {
  switch (order) {
    case 0: return p.q(r);
    case 1: return p.qp(r);
    default: break;
  }
  if (order == 2 && p.q2) return p.q2(r);
  if (order == 3 && p.q3) return p.q3(r);
  if (order == 4 && p.q4) return p.q4(r);
  // Richardson-extrapolated central differences of qp.
  const double h = 1e-4 * std::max(1.0, r);
  auto diff = [&](int m, double step) {
    switch (m) {
      case 2:  // first derivative of qp
        return (p.qp(r + step) - p.qp(r - step)) / (2.0 * step);
      case 3:  // second derivative of qp
        return (p.qp(r + step) - 2.0 * p.qp(r) + p.qp(r - step)) / (step * step);
      default:  // third derivative of qp
        return (p.qp(r + 2.0 * step) - 2.0 * p.qp(r + step) +
                2.0 * p.qp(r - step) - p.qp(r - 2.0 * step)) /
               (2.0 * step * step * step);
    }
  };
  const double d1 = diff(order, h);
  const double d2 = diff(order, 0.5 * h);
  return (4.0 * d2 - d1) / 3.0;
}

}  // namespace

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::InOutAnnulusInterior: return "InOutAnnulus_Interior";
    case Regime::InOutAnnulusBoundary: return "InOutAnnulus_Boundary";
    case Regime::InOutDiskInterior: return "InOutDisk_Interior";
    case Regime::InOutDiskBoundary: return "InOutDisk_Boundary";
    case Regime::OutAnnulusInterior: return "OutAnnulus_Interior";
    case Regime::OutAnnulusBoundary: return "OutAnnulus_Boundary";
    case Regime::NoWall: return "NoWall";
  }
  return "?";
}

double RadialPotential::q(double r, int order) const {
  if (!(r > 0.0)) throw std::invalid_argument("RadialPotential::q: requires r > 0");
  if (order < 0 || order > 4)
    throw std::invalid_argument("RadialPotential::q: order in 0..4");
  if (const auto* p = std::get_if<PolyLogParams>(&params_)) return polylog_q(*p, r, order);
  if (const auto* p = std::get_if<MittagParams>(&params_)) return mittag_q(*p, r, order);
  return generic_q(std::get<GenericParams>(params_), r, order);
}

double RadialPotential::laplacian(double r, int order) const {
  if (!(r > 0.0)) throw std::invalid_argument("laplacian: requires r > 0");
  switch (order) {
    case 0: return q(r, 2) + q(r, 1) / r;
    case 1: return q(r, 3) + q(r, 2) / r - q(r, 1) / (r * r);
    case 2:
      return q(r, 4) + q(r, 3) / r - 2.0 * q(r, 2) / (r * r) +
             2.0 * q(r, 1) / (r * r * r);
    default:
      throw std::invalid_argument("laplacian: order in 0..2");
  }
}

double RadialPotential::v_tau(double tau, double r, int order) const {
  if (!(r > 0.0)) throw std::invalid_argument("v_tau: requires r > 0");
  switch (order) {
    case 0: return q(r, 0) - 2.0 * tau * std::log(r);
    case 1: return q(r, 1) - 2.0 * tau / r;
    case 2: return laplacian(r, 0) - v_tau(tau, r, 1) / r;
    case 3:
      return laplacian(r, 1) - laplacian(r, 0) / r +
             2.0 * v_tau(tau, r, 1) / (r * r);
    case 4:
      return laplacian(r, 2) + 3.0 * laplacian(r, 0) / (r * r) -
             laplacian(r, 1) / r - 6.0 * v_tau(tau, r, 1) / (r * r * r);
    default:
      throw std::invalid_argument("v_tau: order in 0..4");
  }
}

double RadialPotential::q_at_origin() const {
  if (const auto* p = std::get_if<PolyLogParams>(&params_)) {
    if (p->a != 0.0)
      throw numerical_error("origin_undefined", "q(0) diverges for a > 0");
    return 0.0;
  }
  if (std::get_if<MittagParams>(&params_) != nullptr)
    throw numerical_error("origin_undefined", "q(0) undefined for this preset");
  return q(1e-8);
}

double RadialPotential::q2_at_origin() const {
  if (const auto* p = std::get_if<PolyLogParams>(&params_)) {
    if (p->a != 0.0)
      throw numerical_error("origin_undefined", "q''(0) diverges for a > 0");
    return p->coeffs.empty() ? 0.0 : 2.0 * p->coeffs[0];
  }
  if (std::get_if<MittagParams>(&params_) != nullptr)
    throw numerical_error("origin_undefined", "q''(0) undefined for this preset");
  return q(1e-8, 2);
}

namespace {

// r q'(r) is strictly increasing on (0, inf) for subharmonic q; every droplet
// radius is a level crossing of it.
double solve_rqp(const RadialPotential& pot, double level, double lo_hint) {
  auto f = [&](double r) { return r * pot.q(r, 1) - level; };
  double lo = lo_hint;
  while (f(lo) > 0.0) {
    lo *= 0.5;
    if (lo < 1e-14)
      throw numerical_error("bracket_failure", "no lower bracket for r q'(r) level");
  }
  double hi = std::max(1.0, 2.0 * lo);
  while (f(hi) < 0.0) {
    hi *= 2.0;
    if (hi > kRMax) return kInf;
  }
  return numerics::find_root_monotone(f, lo, hi, 1e-13);
}

DropletGeometry compute_geometry(const RadialPotential& pot, double qp0_limit_sign) {
  DropletGeometry g;
  // r0: smallest non-negative solution of q'(r) = 0, i.e. of r q'(r) = 0.
  if (qp0_limit_sign < 0.0) {
    g.r0 = solve_rqp(pot, 0.0, 1.0);
  } else {
    g.r0 = 0.0;  // pure even polynomial part: q'(0+) = 0
  }
  g.r1 = solve_rqp(pot, 2.0, std::max(1.0, g.r0));
  const double qp1 = pot.q(1.0, 1);
  g.eta = 1.0 - qp1 / 2.0;
  g.tau0 = std::min(1.0, std::max(0.0, qp1 / 2.0));
  if (std::isfinite(g.r1) && g.r1 < 1.0 - kBoundaryTol) {
    g.regime = Regime::NoWall;
  } else if (std::abs(g.r0 - 1.0) <= kBoundaryTol) {
    g.regime = Regime::OutAnnulusBoundary;
  } else if (g.r0 > 1.0) {
    g.regime = Regime::OutAnnulusInterior;
  } else if (g.r0 == 0.0) {
    g.regime = (std::isfinite(g.r1) && std::abs(g.r1 - 1.0) <= kBoundaryTol)
                   ? Regime::InOutDiskBoundary
                   : Regime::InOutDiskInterior;
  } else {
    g.regime = (std::isfinite(g.r1) && std::abs(g.r1 - 1.0) <= kBoundaryTol)
                   ? Regime::InOutAnnulusBoundary
                   : Regime::InOutAnnulusInterior;
  }
  // Cross-check the classification against eta: eta > 1 forces r0 >= 1 for a
  // subharmonic potential, eta < 0 forces r1 < 1. A mismatch means the
  // root-finding and q'(1) disagree about the geometry.
  const bool out = g.regime == Regime::OutAnnulusInterior ||
                   g.regime == Regime::OutAnnulusBoundary;
  if ((g.eta > 1.0 + kBoundaryTol && !out) ||
      (g.eta < -kBoundaryTol && g.regime != Regime::NoWall)) {
    std::ostringstream msg;
    msg << "contradictory droplet geometry: r0 = " << g.r0 << ", r1 = " << g.r1
        << ", eta = " << g.eta;
    throw numerical_error("geometry_inconsistent", msg.str());
  }
  return g;
}

}  // namespace

RadialPotential::RadialPotential(
    Preset preset, std::string descriptor,
    std::variant<PolyLogParams, MittagParams, GenericParams> params)
    : preset_(preset), descriptor_(std::move(descriptor)), params_(std::move(params)) {
  double qp0_sign;
  if (const auto* p = std::get_if<PolyLogParams>(&params_)) {
    if (p->a < 0.0) throw std::invalid_argument("poly-log potential: a >= 0 required");
    if (p->coeffs.empty())
      throw std::invalid_argument("poly-log potential: at least one r^{2k} coefficient");
    qp0_sign = p->a > 0.0 ? -1.0 : 1.0;
  } else if (const auto* p = std::get_if<MittagParams>(&params_)) {
    if (p->a < 0.0 || p->mu <= -1.0)
      throw std::invalid_argument("mittag potential: a >= 0 and mu > -1 required");
    qp0_sign = p->a > 0.0 ? -1.0 : 1.0;
  } else {
    const auto& p = std::get<GenericParams>(params_);
    if (!p.q || !p.qp)
      throw std::invalid_argument("generic potential: q and q' evaluators required");
    qp0_sign = p.qp(1e-9) < 0.0 ? -1.0 : 1.0;
  }
  geom_ = compute_geometry(*this, qp0_sign);
  // Strict subharmonicity on the droplet (through the wall).
  const double lo = geom_.r0;
  const double hi = std::max(1.0, std::isfinite(geom_.r1) ? geom_.r1 : 1.0);
  const int kGrid = 64;
  for (int i = 0; i < kGrid; ++i) {
    const double r = lo + (hi - lo) * (i + 0.5) / kGrid;
    if (r <= 0.0) continue;
    if (!(laplacian(r) > 0.0)) {
      std::ostringstream msg;
      msg << "potential is not strictly subharmonic at r = " << r;
      throw numerical_error("not_subharmonic", msg.str());
    }
  }
}

RadialPotential RadialPotential::annulus_log(double a) {
  std::ostringstream d;
  d << "annulus-log a=" << a;
  return RadialPotential(Preset::AnnulusLog, d.str(), PolyLogParams{a, {1.0}});
}

RadialPotential RadialPotential::pinned(double c) {
  if (!(c > 1.0)) throw std::invalid_argument("pinned potential: c > 1 required");
  std::ostringstream d;
  d << "pinned c=" << c;
  return RadialPotential(Preset::Pinned, d.str(), PolyLogParams{c - 1.0, {c}});
}

RadialPotential RadialPotential::gauss_scaled(double s) {
  if (!(s > 0.0)) throw std::invalid_argument("gauss-scaled potential: s > 0 required");
  std::ostringstream d;
  d << "gauss-scaled s=" << s;
  return RadialPotential(Preset::GaussScaled, d.str(), PolyLogParams{0.0, {s * s}});
}

RadialPotential RadialPotential::mittag_leffler(double mu, double a) {
  std::ostringstream d;
  d << "mittag mu=" << mu << " a=" << a;
  return RadialPotential(Preset::Mittag, d.str(), MittagParams{mu, a});
}

RadialPotential RadialPotential::poly_log(double a, std::vector<double> coeffs) {
  std::ostringstream d;
  d << "polylog a=" << a;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    d << " c" << (i + 1) << "=" << coeffs[i];
  return RadialPotential(Preset::PolyLog, d.str(), PolyLogParams{a, std::move(coeffs)});
}

RadialPotential RadialPotential::generic(GenericParams params, std::string name) {
  return RadialPotential(Preset::Generic, std::move(name), std::move(params));
}

RadialPotential parse_potential(const std::string& descriptor) {
  std::istringstream in(descriptor);
  std::string head;
  if (!(in >> head))
    throw std::invalid_argument("empty potential descriptor");
  auto parse_kv = [&](const std::string& tok, const std::string& key) {
    if (tok.rfind(key + "=", 0) != 0)
      throw std::invalid_argument("expected '" + key + "=<value>' in potential descriptor, got '" + tok + "'");
    const std::string num = tok.substr(key.size() + 1);
    std::size_t pos = 0;
    double v;
    try {
      v = std::stod(num, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed number '" + num + "' in potential descriptor");
    }
    if (pos != num.size())
      throw std::invalid_argument("malformed number '" + num + "' in potential descriptor");
    return v;
  };
  std::string tok;
  if (head == "annulus-log") {
    if (!(in >> tok)) throw std::invalid_argument("annulus-log: missing a=<f>");
    return RadialPotential::annulus_log(parse_kv(tok, "a"));
  }
  if (head == "pinned") {
    if (!(in >> tok)) throw std::invalid_argument("pinned: missing c=<f>");
    return RadialPotential::pinned(parse_kv(tok, "c"));
  }
  if (head == "gauss-scaled") {
    if (!(in >> tok)) throw std::invalid_argument("gauss-scaled: missing s=<f>");
    return RadialPotential::gauss_scaled(parse_kv(tok, "s"));
  }
  if (head == "mittag") {
    if (!(in >> tok)) throw std::invalid_argument("mittag: missing mu=<f>");
    const double mu = parse_kv(tok, "mu");
    if (!(in >> tok)) throw std::invalid_argument("mittag: missing a=<f>");
    return RadialPotential::mittag_leffler(mu, parse_kv(tok, "a"));
  }
  if (head == "polylog") {
    if (!(in >> tok)) throw std::invalid_argument("polylog: missing a=<f>");
    const double a = parse_kv(tok, "a");
    std::vector<double> coeffs;
    while (in >> tok) {
      std::ostringstream key;
      key << "c" << (coeffs.size() + 1);
      coeffs.push_back(parse_kv(tok, key.str()));
    }
    if (coeffs.empty()) throw std::invalid_argument("polylog: at least c1=<f> required");
    return RadialPotential::poly_log(a, std::move(coeffs));
  }
  throw std::invalid_argument("unknown potential preset '" + head + "'");
}

const DropletGeometry& droplet_geometry(const RadialPotential& pot) {
  return pot.geometry();
}

double critical_radius(const RadialPotential& pot, double tau) {
  if (!(tau > 0.0 && tau <= 1.0))
    throw std::invalid_argument("critical_radius: requires 0 < tau <= 1");
  const double r = solve_rqp(pot, 2.0 * tau, std::max(1e-6, pot.geometry().r0));
  if (!std::isfinite(r))
    throw numerical_error("bracket_failure", "critical radius escaped the search range");
  return r;
}

}  // namespace hardwall::potential
