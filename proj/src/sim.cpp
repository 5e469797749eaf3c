#include "crn/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace crn {

namespace {

// Dormand-Prince 5(4) coefficients.
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
constexpr double kB5[7] = {35.0 / 384,      0.0,  500.0 / 1113, 125.0 / 192,
                           -2187.0 / 6784,  11.0 / 84, 0.0};
constexpr double kB4[7] = {5179.0 / 57600,  0.0,        7571.0 / 16695, 393.0 / 640,
                           -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

struct Rhs {
  const Network& net;
  std::vector<std::vector<long long>> gamma;
  std::vector<double> rates;

  explicit Rhs(const Network& n, const std::vector<double>* k_override)
      : net(n), gamma(stoichiometric_matrix(n).entries) {
    if (k_override) {
      if (k_override->size() != n.reaction_count())
        throw std::invalid_argument("k_override size mismatch");
      rates = *k_override;
    } else {
      for (const auto& rx : n.reactions()) rates.push_back(rx.rate_value);
    }
  }

  void operator()(const std::vector<double>& x, std::vector<double>& dx) const {
    std::fill(dx.begin(), dx.end(), 0.0);
    for (std::size_t i = 0; i < net.reaction_count(); ++i) {
      double rate = rates[i];
      for (const auto& [id, coeff] : net.reactions()[i].reactant.coefficients())
        for (long long p = 0; p < coeff; ++p) rate *= std::max(x[id], 0.0);
      for (std::size_t j = 0; j < dx.size(); ++j)
        dx[j] += static_cast<double>(gamma[j][i]) * rate;
    }
  }
};

}  // namespace

Trajectory integrate(const Network& net, std::span<const double> x0,
                     const IntegrateOptions& options) {
  const std::size_t m = net.species_count();
  if (x0.size() != m) throw std::invalid_argument("x0 size mismatch");
  for (double v : x0)
    if (v < 0) throw std::invalid_argument("negative initial concentration");
  if (options.t_final <= 0 || options.tol <= 0)
    throw std::invalid_argument("t_final and tol must be positive");

  const Rhs rhs(net, options.k_override);
  std::vector<double> x(x0.begin(), x0.end());
  double t = 0.0;
  double h = options.t_final / 100.0;

  Trajectory traj;
  traj.times.push_back(t);
  traj.states.push_back(x);

  std::vector<std::vector<double>> k(7, std::vector<double>(m));
  std::vector<double> stage(m), x5(m), x4(m);

  const double h_min = options.t_final * 1e-14;
  while (t < options.t_final) {
    h = std::min(h, options.t_final - t);
    if (h < h_min)
      throw std::runtime_error("integrate: step-size underflow at t = " + std::to_string(t));

    rhs(x, k[0]);
    for (std::size_t s = 1; s < 7; ++s) {
      for (std::size_t j = 0; j < m; ++j) {
        double acc = x[j];
        for (std::size_t q = 0; q < s; ++q) acc += h * kA[s][q] * k[q][j];
        stage[j] = acc;
      }
      rhs(stage, k[s]);
    }

    double err = 0.0;
    bool negative = false;
    for (std::size_t j = 0; j < m; ++j) {
      double v5 = x[j], v4 = x[j];
      for (std::size_t s = 0; s < 7; ++s) {
        v5 += h * kB5[s] * k[s][j];
        v4 += h * kB4[s] * k[s][j];
      }
      x5[j] = v5;
      x4[j] = v4;
      const double scale = options.tol * (1.0 + std::abs(x[j]));
      err = std::max(err, std::abs(v5 - v4) / scale);
      if (v5 < -options.tol) negative = true;
    }

    if (err <= 1.0 && !negative) {
      t += h;
      for (std::size_t j = 0; j < m; ++j) x[j] = x5[j] < 0 ? 0.0 : x5[j];
      traj.times.push_back(t);
      traj.states.push_back(x);
      const double growth = err == 0.0 ? 5.0 : 0.9 * std::pow(err, -0.2);
      h *= std::clamp(growth, 0.2, 5.0);
    } else {
      const double shrink = negative ? 0.5 : std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.5);
      h *= shrink;
    }
  }

  traj.min_species = std::numeric_limits<double>::infinity();
  for (const auto& state : traj.states) {
    double norm_sq = 0.0;
    for (double v : state) {
      traj.min_species = std::min(traj.min_species, v);
      norm_sq += v * v;
    }
    traj.max_norm = std::max(traj.max_norm, std::sqrt(norm_sq));
  }
  return traj;
}

double conservation_drift(const Trajectory& traj, std::span<const double> c) {
  if (traj.states.empty()) return 0.0;
  auto dot = [&](const std::vector<double>& x) {
    double acc = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) acc += c[j] * x[j];
    return acc;
  };
  const double reference = dot(traj.states.front());
  double drift = 0.0;
  for (const auto& state : traj.states) drift = std::max(drift, std::abs(dot(state) - reference));
  return drift;
}

ProbeReport certificate_probe(const Network& net, const WdneCertificate& cert,
                              std::size_t samples, std::uint64_t seed) {
  if (!verify_certificate(net, cert))
    throw std::invalid_argument("certificate_probe: invalid certificate");

  const std::size_t m = net.species_count();
  const double eps = to_double(cert.epsilon);
  std::vector<double> alpha(m);
  for (std::size_t j = 0; j < m; ++j) alpha[j] = to_double(cert.alpha[j]);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> off_face(0.1, 10.0);
  const double etas[2] = {1e-3, 1e-6};

  ProbeReport report;
  report.max_alpha_dot = -std::numeric_limits<double>::infinity();
  std::vector<double> x(m);
  for (std::size_t n = 0; n < samples; ++n) {
    const double eta = etas[n % 2];
    for (std::size_t j = 0; j < m; ++j)
      x[j] = cert.members.count(j) ? eta : off_face(rng);
    ++report.samples;

    const std::vector<double> rates = rate_vector(net, x);
    bool premise = true;
    for (const auto& p : cert.pairs)
      if (rates[p.dominated] > eps * rates[p.dominating]) premise = false;
    if (!premise) continue;
    ++report.premise_satisfied;

    const std::vector<double> f = ode_rhs(net, x);
    double alpha_dot = 0.0;
    for (std::size_t j = 0; j < m; ++j) alpha_dot += alpha[j] * f[j];
    report.max_alpha_dot = std::max(report.max_alpha_dot, alpha_dot);
    if (alpha_dot <= 1e-12) ++report.descent_satisfied;
  }
  return report;
}

std::string trajectory_csv(const Trajectory& traj) {
  std::ostringstream os;
  os.precision(15);
  const std::size_t m = traj.states.empty() ? 0 : traj.states.front().size();
  os << "t";
  for (std::size_t j = 1; j <= m; ++j) os << ",x_" << j;
  os << "\n";
  for (std::size_t n = 0; n < traj.times.size(); ++n) {
    os << traj.times[n];
    for (double v : traj.states[n]) os << "," << v;
    os << "\n";
  }
  return os.str();
}

}  // namespace crn
