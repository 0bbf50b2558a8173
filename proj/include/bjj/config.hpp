#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace bjj {

inline constexpr double pi = 3.14159265358979323846;

/// Invalid user input (particle number, schedule parameters, file contents).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Numerical iteration failed to reach its tolerance.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// z-grid construction or resolution problem.
struct GridError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two-mode junction of N particles with one dimensionless control knob
/// lambda = U N / (hbar Omega).  All internal times are the dimensionless
/// tau with t = 2 tau / Omega; one Rabi period t_R = 2 pi / Omega is
/// tau = pi, so t_f / t_R = tau_f / pi.
class JunctionConfig {
 public:
  JunctionConfig(int n_particles, double lambda_initial, double lambda_final,
                 double tau_final)
      : n_(n_particles),
        lambda_i_(lambda_initial),
        lambda_f_(lambda_final),
        tau_f_(tau_final) {
    if (n_ < 2 || n_ % 2 != 0)
      throw ConfigError("n_particles must be even and >= 2, got " +
                        std::to_string(n_));
    if (!(std::isfinite(lambda_i_) && lambda_i_ >= 0.0))
      throw ConfigError("lambda_initial must be finite and >= 0");
    if (!(std::isfinite(lambda_f_) && lambda_f_ >= 0.0))
      throw ConfigError("lambda_final must be finite and >= 0");
    if (!(std::isfinite(tau_f_) && tau_f_ > 0.0))
      throw ConfigError("tau_final must be finite and > 0");
  }

  static JunctionConfig from_rabi_time(int n_particles, double lambda_initial,
                                       double lambda_final,
                                       double tf_over_tr) {
    return JunctionConfig(n_particles, lambda_initial, lambda_final,
                          pi * tf_over_tr);
  }

  int n() const { return n_; }
  int dim() const { return n_ + 1; }
  double lambda_initial() const { return lambda_i_; }
  double lambda_final() const { return lambda_f_; }
  double tau_final() const { return tau_f_; }
  double tf_over_tr() const { return tau_f_ / pi; }

  /// Effective Planck constant of the Fock-space continuum mapping.
  double h() const { return 2.0 / n_; }

 private:
  int n_;
  double lambda_i_;
  double lambda_f_;
  double tau_f_;
};

}  // namespace bjj
