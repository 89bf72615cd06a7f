#include "gravicat/feasibility.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "gravicat/constants.hpp"
#include "parallel.hpp"

namespace gravicat {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Regime cuts bracketing the "no thermal occupation" and "k_B T >> hbar
// omega" limits of the printed window.
constexpr double kZeroThermalCut = 0.1;
constexpr double kThermalCut = 10.0;

/// t_GR * m for grains of mass m_a and radius R: 5 hbar R / (48 pi G m_a).
double gr_mass_coefficient(const NucleusModel& nuc, double r_char) {
  const auto& k = constants();
  return 5.0 * k.hbar * r_char / (48.0 * kPi * k.G * nuc.m_a);
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::favorable: return "favorable";
    case Verdict::marginal: return "marginal";
    case Verdict::unfavorable: return "unfavorable";
  }
  return "?";
}

std::string SuperpositionPlan::display() const {
  return n <= 1 ? "0/1" : std::to_string(n);
}

SuperpositionPlan required_cat_size(const CatalogEntry& entry,
                                    const RModel& model) {
  const double x_zpf = zero_point_fluctuation(entry.mode());
  const double r_char = characteristic_size(entry, model);

  SuperpositionPlan plan;
  plan.r_model = model;
  plan.required_dx = 2.0 * r_char;
  if (x_zpf >= plan.required_dx) {
    plan.n = 0;  // ground-state wavepacket already spans 2 R_char
    plan.dx = x_zpf;
  } else {
    plan.n = x_zpf >= r_char
                 ? 1
                 : static_cast<long long>(std::ceil((r_char / x_zpf) *
                                                    (r_char / x_zpf)));
    plan.dx = cat_separation(plan.n, x_zpf);
  }
  return plan;
}

InequalityMargins inequality_margins(const CatalogEntry& entry, long long n) {
  const auto& k = constants();
  const OscillatorMode mode = entry.mode();
  const NucleusModel nuc = entry.nucleus();
  const double a = nuc.a;
  const double n_th = thermal_occupation(mode);
  const double kappa = gr_mass_coefficient(nuc, a);

  InequalityMargins m;
  m.lower_bound = mode.f_m * 4.0 * kPi * a * a / k.hbar;
  if (n_th < kZeroThermalCut) {
    m.regime = InequalityMargins::Regime::zero_thermal;
    m.n_term = static_cast<double>(n) / mode.m;
    m.upper_bound = mode.Q / mode.f_m * 12.0 * k.G * nuc.m_a / (5.0 * k.hbar * a);
  } else if (n_th > kThermalCut) {
    m.regime = InequalityMargins::Regime::thermal;
    m.n_term = (static_cast<double>(n) + 0.25) / mode.m;
    m.upper_bound = mode.Q * k.hbar / (4.0 * k.k_B * mode.T * kappa);
  } else {
    m.regime = InequalityMargins::Regime::exact;
    m.n_term = (static_cast<double>(n) + 0.25) / mode.m;
    m.upper_bound =
        mode.Q / (4.0 * kPi * mode.f_m * (2.0 * n_th + 1.0) * kappa);
  }
  m.lower_margin = m.n_term / m.lower_bound;
  m.upper_margin = m.n_term > 0.0 ? m.upper_bound / m.n_term : kInf;
  m.window_exists = m.lower_bound < m.upper_bound;
  return m;
}

WindowCoefficients window_coefficients(int A) {
  const auto& k = constants();
  const NucleusModel nuc = nucleus_model(A);
  const double kappa = gr_mass_coefficient(nuc, nuc.a);
  return {
      4.0 * kPi * nuc.a * nuc.a / k.hbar,
      12.0 * k.G * nuc.m_a / (5.0 * k.hbar * nuc.a),
      k.hbar / (4.0 * k.k_B * 0.01 * kappa),
  };
}

double min_quality_factor(double f_m_hz, double t_k, int A) {
  if (!(f_m_hz > 0.0)) throw std::invalid_argument("frequency must be positive");
  if (t_k < 0.0) throw std::invalid_argument("temperature must be nonnegative");
  const auto& k = constants();
  const NucleusModel nuc = nucleus_model(A);
  const double kappa = gr_mass_coefficient(nuc, nuc.a);
  const double n_th =
      thermal_occupation(OscillatorMode(f_m_hz, 1.0, 1.0, t_k));
  // Window nonempty iff the separation bound sits below the coherence
  // bound; mass cancels:
  //   f 4 pi a^2/hbar  <  Q / (4 pi f (2 n_th + 1) kappa).
  return 16.0 * kPi * kPi * f_m_hz * f_m_hz * (2.0 * n_th + 1.0) * nuc.a *
         nuc.a * kappa / k.hbar;
}

FeasibilityReport evaluate(const CatalogEntry& entry,
                           const EngineConfig& config) {
  const OscillatorMode mode = entry.mode();
  const NucleusModel nuc = entry.nucleus();

  FeasibilityReport rep;
  rep.id = entry.id;
  rep.f_m_hz = entry.f_m_hz;
  rep.mass_kg = entry.mass_kg;
  rep.q_factor = entry.q_factor;
  rep.t_bath_k = entry.t_bath_k;
  rep.material = entry.material;

  rep.x_zpf = zero_point_fluctuation(mode);
  rep.a = nuc.a;
  rep.r_char = characteristic_size(entry, config.r_model);
  rep.plan = required_cat_size(entry, config.r_model);
  rep.n_th = thermal_occupation(mode);

  if (rep.plan.n == 0) {
    // Ground state: no cat decoherence channel; limited by thermal
    // excitation out of the ground state, unbounded at n_th = 0.
    rep.t_coh = rep.n_th > 0.0 ? 1.0 / (mode.gamma_m * rep.n_th) : kInf;
  } else {
    rep.t_coh = cat_coherence_time(rep.plan.n, mode);
  }

  rep.t_gr = gr_time_grains(mode.m, nuc, rep.r_char);
  rep.ratio = rep.t_coh / rep.t_gr;

  const bool separated = rep.plan.dx >= rep.plan.required_dx;
  if (rep.ratio >= config.threshold && separated)
    rep.verdict = Verdict::favorable;
  else if (rep.ratio >= config.threshold / 10.0)
    rep.verdict = Verdict::marginal;
  else
    rep.verdict = Verdict::unfavorable;

  rep.margins = inequality_margins(entry, rep.plan.n);
  return rep;
}

std::vector<double> SweepAxis::values() const {
  if (!(start > 0.0) || !(stop > 0.0))
    throw std::invalid_argument("sweep axis bounds must be positive");
  if (stop < start)
    throw std::invalid_argument("sweep axis must be monotone (stop >= start)");
  if (points < 1) throw std::invalid_argument("sweep axis needs >= 1 point");
  std::vector<double> out;
  out.reserve(points);
  if (points == 1) {
    out.push_back(start);
    return out;
  }
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / (points - 1);
    out.push_back(log_scale
                      ? start * std::pow(stop / start, t)
                      : start + (stop - start) * t);
  }
  return out;
}

SweepResult sweep(const SweepRequest& request) {
  const std::vector<double> fs = request.f_m_hz.values();
  const std::vector<double> ms = request.mass_kg.values();
  const std::vector<double> qs = request.q_factor.values();
  const std::vector<double> ts = request.t_bath_k.values();

  const long long total = static_cast<long long>(fs.size()) * ms.size() *
                          qs.size() * ts.size();
  if (total > request.max_points)
    throw std::invalid_argument("sweep grid of " + std::to_string(total) +
                                " points exceeds the cap of " +
                                std::to_string(request.max_points));

  SweepResult result;
  result.rows.resize(total);

  const long long per_f = total / static_cast<long long>(fs.size());
  detail::run_chunks(
      static_cast<int>(fs.size()), request.workers, [&](int fi) {
        long long row = per_f * fi;
        for (double m : ms)
          for (double q : qs)
            for (double t : ts) {
              CatalogEntry entry;
              entry.id = "sweep-" + std::to_string(row);
              entry.label = entry.id;
              entry.f_m_hz = fs[fi];
              entry.mass_kg = m;
              entry.q_factor = q;
              entry.t_bath_k = t;
              entry.material = request.material;
              result.rows[row] = evaluate(entry, request.engine);
              ++row;
            }
      });

  long long favorable = 0;
  for (const FeasibilityReport& r : result.rows)
    if (r.verdict == Verdict::favorable) ++favorable;
  result.favorable_fraction =
      total > 0 ? static_cast<double>(favorable) / static_cast<double>(total)
                : 0.0;
  return result;
}

}  // namespace gravicat
