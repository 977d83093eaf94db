#ifndef HARDWALL_EXACT_HPP
#define HARDWALL_EXACT_HPP

#include <vector>

#include "hardwall/numerics.hpp"
#include "hardwall/potential.hpp"

namespace hardwall::exact {

enum class Method { Quadrature, GammaOracle };

struct PartitionResult {
  double log_z_over_2pi_pow_n = 0.0;
  std::vector<double> per_term_logs;
  int n = 0;
  Method method = Method::Quadrature;
};

// log u_j with u_j = int_0^1 r^{2j+1} e^{-n q(r)} dr, by stabilized
// log-domain quadrature. The exponent is re-centered at its maximum, located
// through the critical-radius solve when it lies inside (0,1).
double log_uj_quadrature(const potential::RadialPotential& pot, int n, int j,
                         const numerics::QuadratureConfig& cfg = {});

// Closed incomplete-gamma forms of log u_j for the preset families.
double log_uj_gamma_oracle(const potential::RadialPotential& pot, int n, int j);

PartitionResult log_partition_hard(const potential::RadialPotential& pot, int n,
                                   Method method = Method::Quadrature,
                                   unsigned threads = 1,
                                   const numerics::QuadratureConfig& cfg = {});

// Soft (no wall) partition function for q(r) = (s r)^2:
// sum_j [log j! - (j+1) log(n s^2) - log 2].
double log_partition_soft_gauss(double s, int n);

// log E_n(n; |z|<1) = log Z^h - log Z^s for the gauss-scaled potential.
double log_gap_probability(double s, int n);

}  // namespace hardwall::exact

#endif
