#include "gravicat/self_energy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "gravicat/constants.hpp"
#include "gravicat/physics.hpp"
#include "parallel.hpp"

namespace gravicat {

namespace {

using detail::run_chunks;

constexpr double kPi = std::numbers::pi;
constexpr long long kMaxLatticePairs = 100'000'000;

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

double sq(double v) { return v * v; }

Vec3 spherical_point(double r, double cos_theta, double phi) {
  const double sin_theta = std::sqrt(std::max(0.0, 1.0 - sq(cos_theta)));
  return {r * sin_theta * std::cos(phi), r * sin_theta * std::sin(phi),
          r * cos_theta};
}

}  // namespace

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

double lattice_spacing_for_density(double bulk_density, int A) {
  require(bulk_density > 0.0, "bulk density must be positive");
  return std::cbrt(nucleus_model(A).m_a / bulk_density);
}

NucleusLattice cubic_lattice(int A, int n_side, double spacing,
                             Vec3 displacement) {
  require(n_side >= 1, "lattice side must be >= 1");
  require(spacing > 0.0, "lattice spacing must be positive");
  NucleusLattice lat;
  lat.mass_number = A;
  lat.displacement = displacement;
  lat.sites.reserve(static_cast<std::size_t>(n_side) * n_side * n_side);
  for (int i = 0; i < n_side; ++i)
    for (int j = 0; j < n_side; ++j)
      for (int k = 0; k < n_side; ++k)
        lat.sites.push_back({i * spacing, j * spacing, k * spacing});
  return lat;
}

MassDistribution::MassDistribution(Variant v) : body_(std::move(v)) {}

MassDistribution MassDistribution::uniform_sphere(Vec3 center, double radius,
                                                  double mass) {
  require(radius > 0.0 && std::isfinite(radius),
          "sphere radius must be positive");
  require(mass >= 0.0 && std::isfinite(mass), "sphere mass must be nonnegative");
  return MassDistribution{UniformSphere{center, radius, mass}};
}

MassDistribution MassDistribution::uniform_slab(Vec3 center, Vec3 half_extent,
                                                double mass) {
  require(half_extent.x > 0.0 && half_extent.y > 0.0 && half_extent.z > 0.0,
          "slab half extents must be positive");
  require(mass >= 0.0 && std::isfinite(mass), "slab mass must be nonnegative");
  return MassDistribution{UniformSlab{center, half_extent, mass}};
}

MassDistribution MassDistribution::nucleus_lattice(NucleusLattice lattice) {
  require(!lattice.sites.empty(), "lattice needs at least one site");
  nucleus_model(lattice.mass_number);  // validates A
  return MassDistribution{std::move(lattice)};
}

const UniformSphere* MassDistribution::as_sphere() const {
  return std::get_if<UniformSphere>(&body_);
}
const UniformSlab* MassDistribution::as_slab() const {
  return std::get_if<UniformSlab>(&body_);
}
const NucleusLattice* MassDistribution::as_lattice() const {
  return std::get_if<NucleusLattice>(&body_);
}

double MassDistribution::total_mass() const {
  if (const auto* s = as_sphere()) return s->mass;
  if (const auto* s = as_slab()) return s->mass;
  const auto* lat = as_lattice();
  return static_cast<double>(lat->sites.size()) *
         nucleus_model(lat->mass_number).m_a;
}

double MassDistribution::density(const Vec3& p) const {
  if (const auto* s = as_sphere()) {
    return (p - s->center).norm() <= s->radius
               ? s->mass / (4.0 / 3.0 * kPi * s->radius * s->radius * s->radius)
               : 0.0;
  }
  if (const auto* s = as_slab()) {
    const Vec3 q = p - s->center;
    const bool inside = std::abs(q.x) <= s->half_extent.x &&
                        std::abs(q.y) <= s->half_extent.y &&
                        std::abs(q.z) <= s->half_extent.z;
    return inside ? s->mass / (8.0 * s->half_extent.x * s->half_extent.y *
                               s->half_extent.z)
                  : 0.0;
  }
  const auto* lat = as_lattice();
  const NucleusModel nuc = nucleus_model(lat->mass_number);
  const double rho_ball = nuc.m_a / (4.0 / 3.0 * kPi * nuc.a * nuc.a * nuc.a);
  for (const Vec3& s : lat->sites)
    if ((p - s - lat->displacement).norm() <= nuc.a) return rho_ball;
  return 0.0;
}

std::pair<Vec3, double> MassDistribution::bounding_sphere() const {
  if (const auto* s = as_sphere()) return {s->center, s->radius};
  if (const auto* s = as_slab()) return {s->center, s->half_extent.norm()};
  const auto* lat = as_lattice();
  Vec3 centroid{};
  for (const Vec3& s : lat->sites) centroid = centroid + s;
  centroid =
      centroid * (1.0 / static_cast<double>(lat->sites.size())) +
      lat->displacement;
  double r = 0.0;
  for (const Vec3& s : lat->sites)
    r = std::max(r, (s + lat->displacement - centroid).norm());
  return {centroid, r + nucleus_model(lat->mass_number).a};
}

Vec3 MassDistribution::sample(UniformStream& u) const {
  if (const auto* s = as_sphere()) {
    const double r = s->radius * std::cbrt(u.next());
    return s->center +
           spherical_point(r, 2.0 * u.next() - 1.0, 2.0 * kPi * u.next());
  }
  if (const auto* s = as_slab()) {
    return s->center + Vec3{s->half_extent.x * (2.0 * u.next() - 1.0),
                            s->half_extent.y * (2.0 * u.next() - 1.0),
                            s->half_extent.z * (2.0 * u.next() - 1.0)};
  }
  const auto* lat = as_lattice();
  const auto n = static_cast<double>(lat->sites.size());
  const auto idx =
      std::min(lat->sites.size() - 1, static_cast<std::size_t>(u.next() * n));
  const NucleusModel nuc = nucleus_model(lat->mass_number);
  const double r = nuc.a * std::cbrt(u.next());
  return lat->sites[idx] + lat->displacement +
         spherical_point(r, 2.0 * u.next() - 1.0, 2.0 * kPi * u.next());
}

double ball_pair_kernel(double m1, double m2, double R, double d) {
  if (d >= 2.0 * R) return m1 * m2 / d;
  const double R2 = R * R;
  const double R3 = R2 * R;
  const double poly = 192.0 * R3 * R2 - 80.0 * R3 * d * d +
                      30.0 * R2 * d * d * d - d * d * d * d * d;
  return m1 * m2 * poly / (160.0 * R3 * R3);
}

// ---------------------------------------------------------------------------
// Monte-Carlo paths
// ---------------------------------------------------------------------------

namespace {

struct ChunkStats {
  double s1 = 0.0;
  double s2 = 0.0;
  long long n = 0;
};

struct McResult {
  double mean = 0.0;
  double se = 0.0;
};

int chunk_count(long long samples) {
  return static_cast<int>(std::clamp<long long>(samples / 50, 1, 256));
}

void validate(const IntegrationConfig& cfg) {
  require(cfg.sample_count >= 1000, "sample_count must be >= 1000");
  require(cfg.target_rel_error > 0.0 && cfg.target_rel_error < 0.5,
          "target_rel_error must lie in (0, 0.5)");
  require(cfg.workers >= 1, "workers must be >= 1");
}

/// Chunked mean and standard error of one_sample over cfg.sample_count
/// draws. Stratified mode slices the first variate of each draw into one
/// equal bin per chunk.
template <typename SampleFn>
McResult run_mc(const IntegrationConfig& cfg, SampleFn&& one_sample) {
  const int K = chunk_count(cfg.sample_count);
  const long long base = cfg.sample_count / K;
  const long long rem = cfg.sample_count % K;
  const bool stratified = cfg.strategy == Strategy::stratified_mc;

  std::vector<ChunkStats> stats(K);
  run_chunks(K, cfg.workers, [&](int k) {
    UniformStream rng(mix64(cfg.seed + 0x9d2c5680ULL * (k + 1)));
    ChunkStats st;
    st.n = base + (k < rem ? 1 : 0);
    for (long long i = 0; i < st.n; ++i) {
      if (stratified) rng.push_override((k + rng.next()) / K);
      const double v = one_sample(rng);
      st.s1 += v;
      st.s2 += v * v;
    }
    stats[k] = st;
  });

  McResult out;
  if (stratified) {
    double var_acc = 0.0;
    for (const ChunkStats& st : stats) {
      const double nk = static_cast<double>(st.n);
      out.mean += st.s1 / nk / K;
      if (st.n > 1) {
        const double var_k = std::max(0.0, (st.s2 - st.s1 * st.s1 / nk) / (nk - 1.0));
        var_acc += var_k / (static_cast<double>(K) * K * nk);
      }
    }
    out.se = std::sqrt(var_acc);
  } else {
    double s1 = 0.0, s2 = 0.0;
    long long n = 0;
    for (const ChunkStats& st : stats) {
      s1 += st.s1;
      s2 += st.s2;
      n += st.n;
    }
    const double nn = static_cast<double>(n);
    out.mean = s1 / nn;
    const double var = std::max(0.0, (s2 - s1 * s1 / nn) / (nn - 1.0));
    out.se = std::sqrt(var / nn);
  }
  return out;
}

/// Disjoint supports: draw a point from each distribution and average
/// m_i m_j / |r1 - r2|.
McResult mc_product(const MassDistribution& rho_i,
                    const MassDistribution& rho_j,
                    const IntegrationConfig& cfg) {
  const double mm = rho_i.total_mass() * rho_j.total_mass();
  return run_mc(cfg, [&](UniformStream& rng) {
    const Vec3 r1 = rho_i.sample(rng);
    const Vec3 r2 = rho_j.sample(rng);
    return mm / (r1 - r2).norm();
  });
}

/// Overlapping supports: the displacement between the two points is
/// importance-sampled proportionally to the 1/s kernel inside a ball of
/// radius s_max, which cancels the singularity exactly:
///   I = E[ 2 pi s_max^2 m_i rho_j(r1 + s) ],  s = s_max sqrt(u).
McResult mc_kernel_importance(const MassDistribution& rho_i,
                              const MassDistribution& rho_j, double s_max,
                              const IntegrationConfig& cfg) {
  const double scale = 2.0 * kPi * s_max * s_max * rho_i.total_mass();
  return run_mc(cfg, [&](UniformStream& rng) {
    const double s = s_max * std::sqrt(rng.next());
    const Vec3 step =
        spherical_point(s, 2.0 * rng.next() - 1.0, 2.0 * kPi * rng.next());
    const Vec3 r1 = rho_i.sample(rng);
    return scale * rho_j.density(r1 + step);
  });
}

IntegralEstimate mc_pair(const MassDistribution& rho_i,
                         const MassDistribution& rho_j,
                         const IntegrationConfig& cfg) {
  const auto [ci, ri] = rho_i.bounding_sphere();
  const auto [cj, rj] = rho_j.bounding_sphere();
  const double center_dist = (ci - cj).norm();
  const bool overlapping = center_dist < ri + rj;

  const McResult mc =
      overlapping
          ? mc_kernel_importance(rho_i, rho_j, center_dist + ri + rj, cfg)
          : mc_product(rho_i, rho_j, cfg);

  const double four_pi_g = 4.0 * kPi * constants().G;
  IntegralEstimate out;
  out.value = four_pi_g * mc.mean;
  out.error = four_pi_g * mc.se;
  out.samples = cfg.sample_count;
  out.converged = out.error <= cfg.target_rel_error * std::abs(out.value);
  return out;
}

// ---------------------------------------------------------------------------
// Grid path
// ---------------------------------------------------------------------------

struct Cell {
  Vec3 p;
  double mass;
  double r_eq;  // radius of the volume-equivalent ball
};

std::vector<Cell> decompose_sphere(const UniformSphere& s, long long target) {
  const int kr = std::max(1, static_cast<int>(std::cbrt(target / 8.0)));
  const int kt = 2 * kr;
  const int kp = 4 * kr;
  const long long total = static_cast<long long>(kr) * kt * kp;
  const double cell_mass = s.mass / static_cast<double>(total);
  const double r_eq = s.radius / std::cbrt(static_cast<double>(total));
  std::vector<Cell> cells;
  cells.reserve(total);
  for (int i = 0; i < kr; ++i) {
    const double r = s.radius * std::cbrt((i + 0.5) / kr);
    for (int j = 0; j < kt; ++j) {
      const double ct = -1.0 + 2.0 * (j + 0.5) / kt;
      for (int l = 0; l < kp; ++l) {
        const double phi = 2.0 * kPi * (l + 0.5) / kp;
        cells.push_back(
            {s.center + spherical_point(r, ct, phi), cell_mass, r_eq});
      }
    }
  }
  return cells;
}

std::vector<Cell> decompose_slab(const UniformSlab& s, long long target) {
  const double ex = 2.0 * s.half_extent.x;
  const double ey = 2.0 * s.half_extent.y;
  const double ez = 2.0 * s.half_extent.z;
  const double scale = std::cbrt(static_cast<double>(target) / (ex * ey * ez));
  const int nx = std::max(1, static_cast<int>(std::lround(ex * scale)));
  const int ny = std::max(1, static_cast<int>(std::lround(ey * scale)));
  const int nz = std::max(1, static_cast<int>(std::lround(ez * scale)));
  const long long total = static_cast<long long>(nx) * ny * nz;
  const double cell_mass = s.mass / static_cast<double>(total);
  const double cell_vol = ex * ey * ez / static_cast<double>(total);
  const double r_eq = std::cbrt(3.0 * cell_vol / (4.0 * kPi));
  std::vector<Cell> cells;
  cells.reserve(total);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      for (int k = 0; k < nz; ++k)
        cells.push_back({s.center + Vec3{ex * ((i + 0.5) / nx - 0.5),
                                         ey * ((j + 0.5) / ny - 0.5),
                                         ez * ((k + 0.5) / nz - 0.5)},
                         cell_mass, r_eq});
  return cells;
}

std::vector<Cell> decompose(const MassDistribution& rho, long long target) {
  target = std::max<long long>(8, target);
  if (const auto* s = rho.as_sphere()) return decompose_sphere(*s, target);
  if (const auto* s = rho.as_slab()) return decompose_slab(*s, target);
  throw std::invalid_argument(
      "grid strategy does not support nucleus-lattice distributions");
}

/// Cell-pair sum; pairs closer than the sum of their equivalent-ball
/// radii (including identical cells at d = 0) use the exact interaction
/// of two volume-equivalent uniform balls instead of the point kernel.
double grid_pair_sum(const std::vector<Cell>& a, const std::vector<Cell>& b,
                     int workers) {
  const int n_chunks = static_cast<int>(std::min<std::size_t>(64, a.size()));
  std::vector<double> partial(n_chunks, 0.0);
  run_chunks(n_chunks, workers, [&](int k) {
    double acc = 0.0;
    for (std::size_t i = k; i < a.size(); i += n_chunks) {
      const Cell& ca = a[i];
      for (const Cell& cb : b) {
        const double d = (ca.p - cb.p).norm();
        const double touch = ca.r_eq + cb.r_eq;
        acc += d >= touch ? ca.mass * cb.mass / d
                          : ball_pair_kernel(ca.mass, cb.mass, 0.5 * touch, d);
      }
    }
    partial[k] = acc;
  });
  double sum = 0.0;
  for (double v : partial) sum += v;
  return sum;
}

IntegralEstimate grid_pair(const MassDistribution& rho_i,
                           const MassDistribution& rho_j,
                           const IntegrationConfig& cfg) {
  const auto cells_target =
      static_cast<long long>(std::sqrt(static_cast<double>(cfg.sample_count)));
  const std::vector<Cell> fine_i = decompose(rho_i, cells_target);
  const std::vector<Cell> fine_j = decompose(rho_j, cells_target);
  const std::vector<Cell> coarse_i = decompose(rho_i, cells_target / 8);
  const std::vector<Cell> coarse_j = decompose(rho_j, cells_target / 8);

  const double fine = grid_pair_sum(fine_i, fine_j, cfg.workers);
  const double coarse = grid_pair_sum(coarse_i, coarse_j, cfg.workers);

  const double four_pi_g = 4.0 * kPi * constants().G;
  IntegralEstimate out;
  out.value = four_pi_g * fine;
  out.error = four_pi_g * std::abs(fine - coarse);
  out.samples = static_cast<long long>(fine_i.size() * fine_j.size());
  out.converged = out.error <= cfg.target_rel_error * std::abs(out.value);
  return out;
}

// ---------------------------------------------------------------------------
// Nucleus-lattice paths
// ---------------------------------------------------------------------------

/// Lattice-lattice pair energies reduce to sums of equal-ball pair
/// kernels, which are known in closed form at every separation. Within
/// the pair budget the sum is exact; beyond it, cross terms farther than
/// a cutoff are dropped and bounded by count/r_cut (the bound lands in
/// `error`).
IntegralEstimate lattice_pair(const NucleusLattice& la,
                              const NucleusLattice& lb,
                              const IntegrationConfig& cfg) {
  require(la.mass_number == lb.mass_number,
          "lattice pair energies require a common mass number");
  const NucleusModel nuc = nucleus_model(la.mass_number);
  const long long na = static_cast<long long>(la.sites.size());
  const long long nb = static_cast<long long>(lb.sites.size());
  const long long total_pairs = na * nb;
  require(total_pairs <= kMaxLatticePairs, "lattice pair count too large");

  double r_cut = std::numeric_limits<double>::infinity();
  if (total_pairs > cfg.sample_count) {
    const auto [ca, ra] = MassDistribution::nucleus_lattice(la).bounding_sphere();
    const auto [cb, rb] = MassDistribution::nucleus_lattice(lb).bounding_sphere();
    const double extent = (ca - cb).norm() + ra + rb;
    const double frac =
        static_cast<double>(cfg.sample_count) / static_cast<double>(total_pairs);
    r_cut = std::max(extent * std::cbrt(frac), 4.0 * nuc.a);
  }

  const int n_chunks = static_cast<int>(std::min<long long>(64, na));
  std::vector<double> partial(n_chunks, 0.0);
  std::vector<double> bound(n_chunks, 0.0);
  std::vector<long long> used(n_chunks, 0);
  run_chunks(n_chunks, cfg.workers, [&](int k) {
    double acc = 0.0, tail = 0.0;
    long long cnt = 0;
    for (long long i = k; i < na; i += n_chunks) {
      const Vec3 pa = la.sites[i] + la.displacement;
      for (long long j = 0; j < nb; ++j) {
        const Vec3 pb = lb.sites[j] + lb.displacement;
        const double d = (pa - pb).norm();
        if (d <= r_cut) {
          acc += ball_pair_kernel(nuc.m_a, nuc.m_a, nuc.a, d);
          ++cnt;
        } else {
          tail += nuc.m_a * nuc.m_a / r_cut;
        }
      }
    }
    partial[k] = acc;
    bound[k] = tail;
    used[k] = cnt;
  });

  double sum = 0.0, tail_bound = 0.0;
  long long evaluated = 0;
  for (int k = 0; k < n_chunks; ++k) {
    sum += partial[k];
    tail_bound += bound[k];
    evaluated += used[k];
  }

  const double four_pi_g = 4.0 * kPi * constants().G;
  IntegralEstimate out;
  out.value = four_pi_g * sum;
  out.error = four_pi_g * tail_bound;
  out.samples = evaluated;
  out.converged = out.error <= cfg.target_rel_error * std::abs(out.value);
  return out;
}

bool congruent(const NucleusLattice& a, const NucleusLattice& b) {
  if (a.mass_number != b.mass_number || a.sites.size() != b.sites.size())
    return false;
  for (std::size_t i = 0; i < a.sites.size(); ++i) {
    const Vec3 d = a.sites[i] - b.sites[i];
    if (d.x != 0.0 || d.y != 0.0 || d.z != 0.0) return false;
  }
  return true;
}

/// Self-energy difference of a lattice against a rigidly displaced copy
/// of itself. Grouping by site pair makes the per-nucleus contribution
/// exact and lets distant cross terms cancel before truncation:
///   dE = 2 sum_{k,l} [ K(|r_kl|) - K(|r_kl - D|) ],  D the relative
/// displacement. Dropped far pairs obey |1/r - 1/|r-D|| <= D/(r(r-D)).
IntegralEstimate lattice_delta_E(const NucleusLattice& la,
                                 const NucleusLattice& lb,
                                 const IntegrationConfig& cfg) {
  const NucleusModel nuc = nucleus_model(la.mass_number);
  const Vec3 displacement = lb.displacement - la.displacement;
  const double dmag = displacement.norm();
  const long long n = static_cast<long long>(la.sites.size());
  require(n * n <= kMaxLatticePairs, "lattice pair count too large");

  double r_cut = std::numeric_limits<double>::infinity();
  if (n * n > cfg.sample_count) {
    const auto [c, r] = MassDistribution::nucleus_lattice(la).bounding_sphere();
    (void)c;
    const double frac =
        static_cast<double>(cfg.sample_count) / (static_cast<double>(n) * n);
    r_cut = std::max(2.0 * r * std::cbrt(frac), 4.0 * dmag + 4.0 * nuc.a);
  }

  const int n_chunks = static_cast<int>(std::min<long long>(64, n));
  std::vector<double> partial(n_chunks, 0.0);
  std::vector<double> bound(n_chunks, 0.0);
  std::vector<long long> used(n_chunks, 0);
  run_chunks(n_chunks, cfg.workers, [&](int k) {
    double acc = 0.0, tail = 0.0;
    long long cnt = 0;
    for (long long i = k; i < n; i += n_chunks) {
      for (long long j = 0; j < n; ++j) {
        const Vec3 r_kl = la.sites[i] - la.sites[j];
        const double d_same = r_kl.norm();
        if (d_same <= r_cut) {
          const double d_cross = (r_kl - displacement).norm();
          acc += ball_pair_kernel(nuc.m_a, nuc.m_a, nuc.a, d_same) -
                 ball_pair_kernel(nuc.m_a, nuc.m_a, nuc.a, d_cross);
          ++cnt;
        } else {
          tail += nuc.m_a * nuc.m_a * dmag / (d_same * (d_same - dmag));
        }
      }
    }
    partial[k] = acc;
    bound[k] = tail;
    used[k] = cnt;
  });

  double sum = 0.0, tail_bound = 0.0;
  long long evaluated = 0;
  for (int k = 0; k < n_chunks; ++k) {
    sum += partial[k];
    tail_bound += bound[k];
    evaluated += used[k];
  }

  const double four_pi_g = 4.0 * kPi * constants().G;
  IntegralEstimate out;
  out.value = four_pi_g * std::abs(2.0 * sum);
  out.error = four_pi_g * 2.0 * tail_bound;
  out.samples = evaluated;
  out.converged = out.error <= cfg.target_rel_error * std::abs(out.value);
  return out;
}

IntegrationConfig derived(const IntegrationConfig& cfg, std::uint64_t salt) {
  IntegrationConfig sub = cfg;
  sub.seed = mix64(cfg.seed + salt);
  return sub;
}

}  // namespace

IntegralEstimate pair_energy(const MassDistribution& rho_i,
                             const MassDistribution& rho_j,
                             const IntegrationConfig& cfg) {
  validate(cfg);
  const auto* lat_i = rho_i.as_lattice();
  const auto* lat_j = rho_j.as_lattice();
  if (lat_i && lat_j) return lattice_pair(*lat_i, *lat_j, cfg);
  if (lat_i || lat_j)
    throw std::invalid_argument(
        "unsupported distribution pair: nucleus-lattice can only be paired "
        "with another nucleus-lattice");
  if (cfg.strategy == Strategy::grid) return grid_pair(rho_i, rho_j, cfg);
  return mc_pair(rho_i, rho_j, cfg);
}

IntegralEstimate delta_E(const MassDistribution& rho_1,
                         const MassDistribution& rho_2,
                         const IntegrationConfig& cfg) {
  validate(cfg);
  const auto* lat_1 = rho_1.as_lattice();
  const auto* lat_2 = rho_2.as_lattice();
  if (lat_1 && lat_2 && congruent(*lat_1, *lat_2))
    return lattice_delta_E(*lat_1, *lat_2, cfg);

  const IntegralEstimate e1 = pair_energy(rho_1, rho_1, derived(cfg, 1));
  const IntegralEstimate e2 = pair_energy(rho_2, rho_2, derived(cfg, 2));
  const IntegralEstimate e12 = pair_energy(rho_1, rho_2, derived(cfg, 3));

  IntegralEstimate out;
  out.value = std::abs(e1.value + e2.value - 2.0 * e12.value);
  out.error = std::sqrt(sq(e1.error) + sq(e2.error) + 4.0 * sq(e12.error));
  out.samples = e1.samples + e2.samples + e12.samples;
  out.converged = out.error <= cfg.target_rel_error * std::abs(out.value);
  return out;
}

}  // namespace gravicat
