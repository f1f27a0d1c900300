#pragma once

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <vector>

namespace mzr {

/// Domain length used for the chaotic K-S regime: 2*pi/sqrt(0.085).
inline const double kKsLength = 2.0 * std::numbers::pi / std::sqrt(0.085);

/// Periodic 1D domain: length, grid size (even), and DNS time step.
struct DomainParams {
  double length = kKsLength;
  int n_modes = 256;
  double dt = 1e-3;

  void validate() const;

  /// k1 = 2*pi/L.
  double fundamental() const { return 2.0 * std::numbers::pi / length; }
  /// One-sided coefficient count N/2 + 1.
  Eigen::Index n_coeffs() const { return n_modes / 2 + 1; }
  double wavenumber(Eigen::Index j) const { return fundamental() * static_cast<double>(j); }
  /// Physical wavenumbers k_j for j = 0..N/2.
  Eigen::VectorXd wavenumbers() const;
  /// Diagonal of the K-S linear operator, k^2 - k^4, one-sided.
  Eigen::VectorXd linear_operator() const;

  /// Same length and dt on a different grid size.
  DomainParams with_modes(int n) const { return {length, n, dt}; }

  bool operator==(const DomainParams&) const = default;
};

/// One-sided Fourier coefficients u_hat_j, j = 0..N/2, normalised so that
/// u_hat_0 is the mean. The field is real: u_hat_{-j} = conj(u_hat_j).
struct SpectralField {
  DomainParams domain;
  Eigen::VectorXcd coeffs;

  static SpectralField zeros(const DomainParams& domain);
  /// Throws DomainError on wrong size, non-finite entries, or imag(u_hat_0) != 0.
  void validate() const;
  bool all_finite() const;
};

/// Real samples on x_i = i*L/N.
struct PhysicalField {
  DomainParams domain;
  Eigen::VectorXd values;

  static PhysicalField zeros(const DomainParams& domain);
};

// Raw transforms on coefficient vectors (n = grid size).
Eigen::VectorXcd forward_transform(const Eigen::Ref<const Eigen::VectorXd>& values);
Eigen::VectorXd inverse_transform(const Eigen::Ref<const Eigen::VectorXcd>& coeffs, Eigen::Index n);

SpectralField to_spectral(const PhysicalField& u);
PhysicalField to_physical(const SpectralField& f);

/// Coefficients of u*u for j = 0..N/2-1, computed on a 3N/2 grid so the
/// result equals the exact truncated convolution. The Nyquist input is
/// treated as zero and the Nyquist output is zero.
Eigen::VectorXcd dealiased_square(const Eigen::Ref<const Eigen::VectorXcd>& coeffs, int n_modes);

/// Nonlinear K-S term -(ik/2) (u*u)_k, dealiased, written into `out`.
void ks_nonlinear(const Eigen::VectorXcd& coeffs, const DomainParams& domain, Eigen::VectorXcd& out);

/// Full K-S right-hand side (k^2 - k^4) u_k - (ik/2)(u*u)_k.
SpectralField ks_rhs(const SpectralField& f);

/// Spectral derivative ik u_k (Nyquist zeroed).
SpectralField spectral_derivative(const SpectralField& f);

/// Integrating-factor RK3 for du/dt = diag(lambda) u + N(u).
///
/// The linear part is integrated exactly through exp(lambda h); the nonlinear
/// part uses Kutta's third-order scheme (abscissae 0, 1/2, 1; weights 1/6,
/// 2/3, 1/6). With v = exp(-lambda t) u the stages are
///
///   U2 = E(h/2) (u + h/2 N1)
///   U3 = E(h) (u - h N1) + 2h E(h/2) N2
///   u' = E(h) (u + h/6 N1) + 2h/3 E(h/2) N2 + h/6 N3
///
/// so only forward-in-time exponentials appear and stiff modes stay bounded.
class IfRk3Stepper {
 public:
  IfRk3Stepper(const Eigen::VectorXd& linear, double dt);

  double dt() const { return dt_; }
  const Eigen::VectorXd& full_factor() const { return full_; }
  const Eigen::VectorXd& half_factor() const { return half_; }

  /// `nonlinear(u, out)` must write N(u) into out (same size as u).
  template <typename Nonlinear>
  Eigen::VectorXcd step(const Eigen::VectorXcd& u, Nonlinear&& nonlinear) const {
    const double h = dt_;
    Eigen::VectorXcd n1(u.size()), n2(u.size()), n3(u.size());
    nonlinear(u, n1);
    const Eigen::VectorXcd u2 = half_.cwiseProduct(u + (0.5 * h) * n1);
    nonlinear(u2, n2);
    const Eigen::VectorXcd u3 = full_.cwiseProduct(u - h * n1) + (2.0 * h) * half_.cwiseProduct(n2);
    nonlinear(u3, n3);
    return full_.cwiseProduct(u + (h / 6.0) * n1) + (2.0 * h / 3.0) * half_.cwiseProduct(n2) +
           (h / 6.0) * n3;
  }

  /// Pure linear step, exact: E(h) u.
  Eigen::VectorXcd step_linear(const Eigen::VectorXcd& u) const { return full_.cwiseProduct(u); }

 private:
  double dt_;
  Eigen::VectorXd full_;
  Eigen::VectorXd half_;
};

enum class NonlinearTerm { kEnabled, kDisabled };

/// One integrating-factor RK3 step of the K-S equation. Throws
/// InstabilityError (step 0) when the result is non-finite.
SpectralField step_if_rk3(const SpectralField& f, double dt,
                          NonlinearTerm nonlinear = NonlinearTerm::kEnabled);

/// Time-ordered full-resolution fields.
struct Trajectory {
  std::vector<SpectralField> frames;
  std::vector<double> times;
  std::int64_t save_stride = 1;
};

/// Called for every saved frame with the step index and time.
using FrameSink = std::function<void(std::int64_t step, double time, const SpectralField& field)>;

/// Integrates for round(T/dt) steps, calling `sink` on step 0 and every
/// `save_stride` steps. Returns the final state. Throws InstabilityError when
/// a saved (or the final) field is non-finite.
SpectralField simulate_dns(const SpectralField& initial, double duration, std::int64_t save_stride,
                           const FrameSink& sink);

Trajectory simulate_dns(const PhysicalField& initial, const DomainParams& params, double duration,
                        std::int64_t save_stride);

/// Random superposition of modes 1..max_mode with cos/sin amplitudes
/// uniform in [-amplitude, amplitude], drawn from a seeded mt19937_64.
PhysicalField random_initial_condition(const DomainParams& domain, std::uint64_t seed,
                                       int max_mode = 4, double amplitude = 0.6);

/// Number of steps for a duration; throws DomainError unless duration is a
/// whole multiple of dt (to 1e-9 relative).
std::int64_t step_count(double duration, double dt);

}  // namespace mzr
