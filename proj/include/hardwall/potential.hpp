#ifndef HARDWALL_POTENTIAL_HPP
#define HARDWALL_POTENTIAL_HPP

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hardwall::potential {

enum class Regime {
  InOutAnnulusInterior,  // 0 < r0 < 1 < r1
  InOutAnnulusBoundary,  // 0 < r0 < 1 = r1
  InOutDiskInterior,     // r0 = 0, r1 > 1
  InOutDiskBoundary,     // r0 = 0, r1 = 1
  OutAnnulusInterior,    // r0 > 1
  OutAnnulusBoundary,    // r0 = 1
  NoWall,                // r1 < 1
};

const char* regime_name(Regime r);

struct DropletGeometry {
  double r0 = 0.0;   // inner droplet radius
  double r1 = 0.0;   // outer droplet radius; +inf when r q'(r) < 2 everywhere
  double tau0 = 0.0; // q'(1)/2 clamped to [0,1]
  double eta = 0.0;  // surface mass 1 - q'(1)/2 (may exceed 1, or be < 0 for NoWall)
  Regime regime = Regime::NoWall;
};

// Identifies the closed-form family a potential belongs to (used by the
// incomplete-gamma oracles).
enum class Preset { AnnulusLog, Pinned, GaussScaled, Mittag, PolyLog, Generic };

// q(r) = sum_k coeffs[k-1] r^{2k} - 2 a log r, a >= 0.
struct PolyLogParams {
  double a = 0.0;
  std::vector<double> coeffs;
};

// q(r) = r^{2(1+mu)} - 2 a log r.
struct MittagParams {
  double mu = 0.0;
  double a = 0.0;
};

struct GenericParams {
  std::function<double(double)> q;
  std::function<double(double)> qp;
  // Optional analytic higher derivatives; otherwise Richardson-extrapolated
  // finite differences of qp with step h = 1e-4 max(1, r).
  std::function<double(double)> q2, q3, q4;
};

// Radially symmetric potential q(r) with derivatives to order 4. Immutable
// after construction; construction verifies strict subharmonicity
// (Delta Q > 0) on a sampling grid over the droplet.
class RadialPotential {
 public:
  // q and radial derivatives, order 0..4.
  double q(double r, int order = 0) const;

  // Delta Q = q'' + q'/r and its radial derivatives, order 0..2.
  double laplacian(double r, int order = 0) const;

  // V_tau(r) = q(r) - 2 tau log r and derivatives to order 4. Orders 2..4 are
  // assembled from Delta Q so that the two evaluation routes can be
  // cross-checked.
  double v_tau(double tau, double r, int order = 0) const;

  const DropletGeometry& geometry() const { return geom_; }
  Preset preset() const { return preset_; }
  const std::string& descriptor() const { return descriptor_; }

  const PolyLogParams* polylog() const { return std::get_if<PolyLogParams>(&params_); }
  const MittagParams* mittag() const { return std::get_if<MittagParams>(&params_); }

  // q and q'' at the origin (defined when the droplet is a disk).
  double q_at_origin() const;
  double q2_at_origin() const;

  static RadialPotential annulus_log(double a);
  static RadialPotential pinned(double c);
  static RadialPotential gauss_scaled(double s);
  static RadialPotential mittag_leffler(double mu, double a);
  static RadialPotential poly_log(double a, std::vector<double> coeffs);
  static RadialPotential generic(GenericParams params, std::string name = "generic");

 private:
  RadialPotential(Preset preset, std::string descriptor,
                  std::variant<PolyLogParams, MittagParams, GenericParams> params);

  Preset preset_;
  std::string descriptor_;
  std::variant<PolyLogParams, MittagParams, GenericParams> params_;
  DropletGeometry geom_;
};

// Parses the descriptor grammar used by the CLI and config files:
//   "annulus-log a=<f>" | "pinned c=<f>" | "gauss-scaled s=<f>"
//   | "mittag mu=<f> a=<f>" | "polylog a=<f> c1=<f> c2=<f> ..."
RadialPotential parse_potential(const std::string& descriptor);

const DropletGeometry& droplet_geometry(const RadialPotential& pot);

// Unique r with r q'(r) = 2 tau, for tau in (0, 1].
double critical_radius(const RadialPotential& pot, double tau);

}  // namespace hardwall::potential

#endif
