#ifndef CRN_SIM_HPP
#define CRN_SIM_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "crn/network.hpp"
#include "crn/wdne.hpp"

namespace crn {

struct Trajectory {
  std::vector<double> times;                 // strictly increasing
  std::vector<std::vector<double>> states;   // one m-vector per time
  double min_species = 0;                    // min over species and time
  double max_norm = 0;                       // max Euclidean norm over time
};

struct IntegrateOptions {
  double t_final = 50.0;
  double tol = 1e-9;
  const std::vector<double>* k_override = nullptr;  // per-reaction rate constants
};

/// Adaptive embedded Runge-Kutta 4(5) (Dormand-Prince) on dx/dt = Gamma R(x).
/// Steps producing a component below -tol are rejected; components in
/// [-tol, 0) after an accepted step are clipped to exactly 0. Throws
/// std::runtime_error on step-size underflow.
Trajectory integrate(const Network& net, std::span<const double> x0,
                     const IntegrateOptions& options = {});

/// Conservation drift max_t |c^T x(t) - c^T x(0)| for a conservation vector.
double conservation_drift(const Trajectory& traj, std::span<const double> c);

struct ProbeReport {
  std::size_t samples = 0;
  std::size_t premise_satisfied = 0;   // samples where all J-pair rate dominances hold
  std::size_t descent_satisfied = 0;   // premise samples with <alpha, f(x)> <= slack
  double max_alpha_dot = 0;            // max <alpha, f(x)> over premise samples
};

/// Samples states near L_I (coordinates in I pinned to small eta, the rest
/// uniform in [0.1, 10]) and checks the certificate's descent inequality
/// wherever the epsilon-dominance premise holds numerically.
ProbeReport certificate_probe(const Network& net, const WdneCertificate& cert,
                              std::size_t samples, std::uint64_t seed = 20110817);

/// CSV with header t,x_1..x_m.
std::string trajectory_csv(const Trajectory& traj);

}  // namespace crn

#endif
