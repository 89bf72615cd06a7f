#pragma once

#include <stdexcept>

// Closed-form estimates for gravitationally induced decoherence of a
// massive object held in a spatial quantum superposition:
//
//  * Schwarzschild time dilation around a small ball, and the heuristic
//    time-scale over which the resulting phase uncertainty of a
//    two-branch superposition reaches 2*pi (with the branch energy taken
//    as the rest energy m c^2).
//  * The Penrose time-scale hbar/dE, with dE the gravitational
//    self-energy difference between the two branch mass distributions,
//    evaluated in closed form for displaced uniform spheres.
//  * Harmonic-oscillator quantities: zero-point fluctuations, thermal
//    occupation, and the thermal-bath coherence time of a cat state.
//
// All functions are pure and operate on SI doubles.

namespace gravicat {

/// Thrown when a separation is too small for the point-mass / disjoint
/// sphere approximations behind the closed forms.
struct separation_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// An incompressible ball of mass m and radius R whose center of mass is
/// split over a separation dx. Mass may be zero (flat-spacetime limit).
struct BallSuperposition {
  double m;   // kg
  double R;   // m
  double dx;  // m

  BallSuperposition(double mass, double radius, double separation);

  /// Weak-field validity: m well below R c^2 / G (factor 1e-3).
  bool weak_field_ok() const;
};

/// A nucleus modeled as a uniform ball: radius a = A^(1/3) R0 and mass
/// m_a = A m_u, both derived from the mass number.
struct NucleusModel {
  int A;       // mass number
  double a;    // m
  double m_a;  // kg
};

/// One mechanical mode: frequency, mass, quality factor and the bath it
/// thermalizes with. Derived rates are kept consistent on construction.
struct OscillatorMode {
  double f_m;      // Hz
  double omega_m;  // rad s^-1
  double m;        // kg
  double Q;        // dimensionless
  double gamma_m;  // rad s^-1
  double T;        // K

  OscillatorMode(double f_m, double mass, double quality, double bath_temp);
};

struct TimeDilation {
  double exact;       // sqrt(1 - 2 m G / (r c^2))
  double linearized;  // 1 - m G / (r c^2)
};

/// Ratio of proper time at distance r from a ball of mass m to the time
/// measured infinitely far away. Throws std::domain_error inside the
/// Schwarzschild radius.
TimeDilation time_dilation_factor(double m, double r);

/// Uncertainty dt = t_far G m / (R c^2) in the elapsed time near one
/// branch of the superposition. Requires dx >= 2R so that the other
/// branch can be treated as a far point mass; throws separation_error
/// otherwise.
double time_uncertainty(const BallSuperposition& ball, double t_far);

/// Phase uncertainty dtheta = dt m c^2 / hbar accumulated over t_far,
/// taking the branch energy to be the rest energy.
double phase_uncertainty(const BallSuperposition& ball, double t_far);

/// Heuristic time-scale h R / (G m^2) at which phase_uncertainty
/// reaches 2*pi.
double heuristic_gr_time(const BallSuperposition& ball);

/// Gravitational self-energy difference of a uniform ball displaced by
/// dx >= 2R:  8 pi G m^2 (6/(5R) - 1/dx). dx may be infinite.
double sphere_delta_E(double m, double R, double dx);

/// Penrose time-scale hbar / delta_E.
double penrose_gr_time(double delta_E);

NucleusModel nucleus_model(int A);

/// GR time-scale of an oscillator of the given total mass, obtained by
/// summing the asymptotic per-nucleus self-energy difference over all
/// nuclei:  (1/m) 5 hbar a / (48 pi G m_a).
double gr_time_nuclei(double total_mass, const NucleusModel& nucleus);

/// Same summation with the per-grain ball radius replaced by an
/// arbitrary characteristic size.
double gr_time_grains(double total_mass, const NucleusModel& nucleus,
                      double characteristic_size);

/// x_zpf = sqrt(hbar / (2 omega_m m)).
double zero_point_fluctuation(const OscillatorMode& mode);

/// Bose-Einstein occupation of the mode at its bath temperature;
/// 0 at T = 0.
double thermal_occupation(const OscillatorMode& mode);

/// Coherence time 1 / (2 (2 n_th + 1) n gamma_m) of a cat state of n
/// phonons against the thermal bath. n >= 1; the ground-state case is a
/// policy of the feasibility engine, not of this formula.
double cat_coherence_time(long long n, const OscillatorMode& mode);

/// Branch separation 2 sqrt(n) x_zpf of a cat state at maximum
/// displacement.
double cat_separation(long long n, double x_zpf);

}  // namespace gravicat
