#include "gravicat/physics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "gravicat/constants.hpp"

namespace gravicat {

namespace {
constexpr double kPi = std::numbers::pi;

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}
}  // namespace

BallSuperposition::BallSuperposition(double mass, double radius,
                                     double separation)
    : m(mass), R(radius), dx(separation) {
  require(m >= 0.0 && std::isfinite(m), "ball mass must be nonnegative");
  require(R > 0.0 && std::isfinite(R), "ball radius must be positive");
  require(dx >= 0.0, "ball separation must be nonnegative");
}

bool BallSuperposition::weak_field_ok() const {
  const auto& k = constants();
  return m < 1e-3 * R * k.c * k.c / k.G;
}

OscillatorMode::OscillatorMode(double f, double mass, double quality,
                               double bath_temp)
    : f_m(f),
      omega_m(2.0 * kPi * f),
      m(mass),
      Q(quality),
      gamma_m(omega_m / quality),
      T(bath_temp) {
  require(f_m > 0.0 && std::isfinite(f_m), "mode frequency must be positive");
  require(m > 0.0 && std::isfinite(m), "mode mass must be positive");
  require(Q > 0.0 && std::isfinite(Q), "quality factor must be positive");
  require(T >= 0.0, "bath temperature must be nonnegative");
}

TimeDilation time_dilation_factor(double m, double r) {
  require(r > 0.0, "distance must be positive");
  require(m >= 0.0, "mass must be nonnegative");
  const auto& k = constants();
  const double compactness = m * k.G / (r * k.c * k.c);
  if (2.0 * compactness >= 1.0)
    throw std::domain_error(
        "clock inside the Schwarzschild radius: 2 m G / (r c^2) >= 1");
  return {std::sqrt(1.0 - 2.0 * compactness), 1.0 - compactness};
}

double time_uncertainty(const BallSuperposition& ball, double t_far) {
  if (ball.dx < 2.0 * ball.R)
    throw separation_error(
        "separation too small for point-mass approximation (dx < 2R)");
  const auto& k = constants();
  return t_far * k.G * ball.m / (ball.R * k.c * k.c);
}

double phase_uncertainty(const BallSuperposition& ball, double t_far) {
  const auto& k = constants();
  return time_uncertainty(ball, t_far) * ball.m * k.c * k.c / k.hbar;
}

double heuristic_gr_time(const BallSuperposition& ball) {
  require(ball.m > 0.0, "heuristic time requires positive mass");
  const auto& k = constants();
  return k.h * ball.R / (k.G * ball.m * ball.m);
}

double sphere_delta_E(double m, double R, double dx) {
  require(m >= 0.0, "mass must be nonnegative");
  require(R > 0.0, "radius must be positive");
  if (dx < 2.0 * R)
    throw separation_error(
        "sphere self-energy difference undefined for overlapping spheres "
        "(dx < 2R)");
  const auto& k = constants();
  const double inv_dx = std::isinf(dx) ? 0.0 : 1.0 / dx;
  return 8.0 * kPi * k.G * m * m * (6.0 / (5.0 * R) - inv_dx);
}

double penrose_gr_time(double delta_E) {
  require(delta_E > 0.0, "self-energy difference must be positive");
  return constants().hbar / delta_E;
}

NucleusModel nucleus_model(int A) {
  require(A >= 1, "mass number must be >= 1");
  const auto& k = constants();
  return {A, std::cbrt(static_cast<double>(A)) * k.R0, A * k.m_u};
}

double gr_time_grains(double total_mass, const NucleusModel& nucleus,
                      double characteristic_size) {
  require(total_mass > 0.0, "total mass must be positive");
  require(characteristic_size > 0.0, "characteristic size must be positive");
  const double per_nucleus =
      sphere_delta_E(nucleus.m_a, characteristic_size,
                     std::numeric_limits<double>::infinity());
  const double count = total_mass / nucleus.m_a;
  return penrose_gr_time(per_nucleus * count);
}

double gr_time_nuclei(double total_mass, const NucleusModel& nucleus) {
  return gr_time_grains(total_mass, nucleus, nucleus.a);
}

double zero_point_fluctuation(const OscillatorMode& mode) {
  return std::sqrt(constants().hbar / (2.0 * mode.omega_m * mode.m));
}

double thermal_occupation(const OscillatorMode& mode) {
  if (mode.T == 0.0) return 0.0;
  const auto& k = constants();
  return 1.0 / std::expm1(k.hbar * mode.omega_m / (k.k_B * mode.T));
}

double cat_coherence_time(long long n, const OscillatorMode& mode) {
  require(n >= 1, "cat size must be >= 1 (ground state handled by caller)");
  const double n_th = thermal_occupation(mode);
  return 1.0 / (2.0 * (2.0 * n_th + 1.0) * static_cast<double>(n) *
                mode.gamma_m);
}

double cat_separation(long long n, double x_zpf) {
  require(n >= 0, "phonon count must be nonnegative");
  require(x_zpf >= 0.0, "zero-point fluctuation must be nonnegative");
  return 2.0 * std::sqrt(static_cast<double>(n)) * x_zpf;
}

}  // namespace gravicat
