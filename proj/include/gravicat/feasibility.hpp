#pragma once

#include <string>
#include <vector>

#include "gravicat/catalog.hpp"
#include "gravicat/physics.hpp"

// Evaluation pipeline for one oscillator:
//   x_zpf -> smallest cat size n with dx >= 2 R_char -> n_th -> t_coh
//   -> t_GR -> verdict,
// plus the two-sided feasibility window in n/m (separation condition vs
// coherence condition), minimum quality factors, and parameter sweeps.

namespace gravicat {

enum class Verdict { favorable, marginal, unfavorable };

std::string_view to_string(Verdict v);

/// Superposition plan for an entry: the smallest phonon number whose
/// branch separation reaches twice the characteristic size. n = 0 uses
/// the ground-state wavepacket extent dx = x_zpf instead of a cat.
struct SuperpositionPlan {
  long long n = 0;
  double dx = 0.0;           // m
  double required_dx = 0.0;  // 2 R_char, m
  RModel r_model = RModel::nucleus();

  /// Display convention: small cat or Fock states (n <= 1) and the
  /// ground state are written "0/1".
  std::string display() const;
};

struct InequalityMargins {
  /// Which printed form of the feasibility window applies: the
  /// zero-thermal-occupation limit (n_th < 0.1), the thermal limit
  /// (n_th > 10), or the exact expression in between.
  enum class Regime { zero_thermal, thermal, exact };

  Regime regime = Regime::exact;
  double n_term = 0.0;        // n/m or (n + 1/4)/m, kg^-1
  double lower_bound = 0.0;   // separation condition on n_term, kg^-1
  double upper_bound = 0.0;   // coherence condition on n_term, kg^-1
  double lower_margin = 0.0;  // n_term / lower_bound
  double upper_margin = 0.0;  // upper_bound / n_term
  bool window_exists = false; // lower_bound < upper_bound
};

struct FeasibilityReport {
  std::string id;
  // Echo of the evaluated parameters (sweeps synthesize these).
  double f_m_hz = 0.0;
  double mass_kg = 0.0;
  double q_factor = 0.0;
  double t_bath_k = 0.0;
  Material material = Material::si();

  double x_zpf = 0.0;   // m
  double a = 0.0;       // nucleus radius of the material, m
  double r_char = 0.0;  // characteristic size under the R model, m
  SuperpositionPlan plan;
  double n_th = 0.0;
  double t_coh = 0.0;  // s; +inf for an undamped ground state
  double t_gr = 0.0;   // s
  double ratio = 0.0;  // t_coh / t_gr; may be +inf
  Verdict verdict = Verdict::unfavorable;
  InequalityMargins margins;
};

struct EngineConfig {
  RModel r_model = RModel::nucleus();
  double threshold = 1.0;  // ratio needed for a favorable verdict
};

SuperpositionPlan required_cat_size(const CatalogEntry& entry,
                                    const RModel& model);

FeasibilityReport evaluate(const CatalogEntry& entry,
                           const EngineConfig& config = {});

InequalityMargins inequality_margins(const CatalogEntry& entry, long long n);

/// Numeric prefactors of the printed feasibility window for a nucleus of
/// mass number A, regenerated from first principles.
struct WindowCoefficients {
  double separation_per_hz;       // lower bound / f_m, s kg^-1
  double coherence_cold_per_q;    // n_th = 0 upper bound * f_m / Q, Hz kg^-1
  double coherence_thermal_per_q; // 10 mK thermal upper bound / Q, kg^-1
};
WindowCoefficients window_coefficients(int A);

/// Smallest quality factor for which the feasibility window is
/// nonempty at the given frequency and temperature (mass-independent).
double min_quality_factor(double f_m_hz, double t_k, int A = 27);

struct SweepAxis {
  double start = 0.0;
  double stop = 0.0;
  int points = 1;
  bool log_scale = true;

  std::vector<double> values() const;
};

struct SweepRequest {
  SweepAxis f_m_hz;
  SweepAxis mass_kg;
  SweepAxis q_factor;
  SweepAxis t_bath_k;
  Material material = Material::al();
  EngineConfig engine;
  int workers = 1;
  long long max_points = 1'000'000;
};

struct SweepResult {
  std::vector<FeasibilityReport> rows;  // lexicographic over (f, m, Q, T)
  double favorable_fraction = 0.0;
};

/// Dense evaluation over the axis product. Throws std::invalid_argument
/// before computing anything if the grid exceeds max_points. Row order
/// and content are independent of the worker count.
SweepResult sweep(const SweepRequest& request);

}  // namespace gravicat
