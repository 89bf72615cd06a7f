#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "gravicat/rng.hpp"

// Brute-force evaluation of the pair self-energy functional
//
//   E_{i,j} = 4 pi G  int int  rho_i(r1) rho_j(r2) / |r1 - r2|  dr1 dr2
//
// for bounded mass distributions, and of the branch difference
// |E_1 + E_2 - 2 E_{1,2}|. This is the numerical oracle behind the
// closed-form displaced-sphere expression and the per-nucleus additivity
// used for whole oscillators.
//
// Monte-Carlo estimates are deterministic functions of
// (inputs, seed, strategy, sample_count): work is split into a fixed
// number of chunks with per-chunk RNG streams and the partial sums are
// combined in chunk order, so the worker count never changes the result.

namespace gravicat {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  double norm() const;
};

struct UniformSphere {
  Vec3 center;
  double radius;  // m
  double mass;    // kg
};

struct UniformSlab {
  Vec3 center;
  Vec3 half_extent;  // m, per axis
  double mass;       // kg
};

/// A set of identical nuclei, each a uniform ball of radius a(A) and
/// mass A m_u centered on site + displacement. Balls, never points: a
/// point nucleus would make its own pair self-energy divergent.
struct NucleusLattice {
  std::vector<Vec3> sites;
  int mass_number;
  Vec3 displacement;
};

/// Material bulk density -> cubic lattice spacing that reproduces it
/// with one nucleus of mass number A per cell.
double lattice_spacing_for_density(double bulk_density, int A);

/// n_side^3 cubic lattice of nuclei at the given spacing, displaced as a
/// whole by `displacement`.
NucleusLattice cubic_lattice(int A, int n_side, double spacing,
                             Vec3 displacement = {});

class MassDistribution {
 public:
  static MassDistribution uniform_sphere(Vec3 center, double radius,
                                         double mass);
  static MassDistribution uniform_slab(Vec3 center, Vec3 half_extent,
                                       double mass);
  static MassDistribution nucleus_lattice(NucleusLattice lattice);

  double total_mass() const;

  /// Point evaluation of the density field, kg m^-3.
  double density(const Vec3& p) const;

  /// Bounding sphere (center, radius) of the support.
  std::pair<Vec3, double> bounding_sphere() const;

  /// Typed views; nullptr when the distribution is another kind.
  const UniformSphere* as_sphere() const;
  const UniformSlab* as_slab() const;
  const NucleusLattice* as_lattice() const;

  /// Draws a point distributed proportionally to the density. The first
  /// variate consumed is the stratification axis (radial fraction for
  /// spheres, first coordinate for slabs, site index for lattices).
  Vec3 sample(UniformStream& uniform) const;

 private:
  using Variant = std::variant<UniformSphere, UniformSlab, NucleusLattice>;
  explicit MassDistribution(Variant v);
  Variant body_;
};

enum class Strategy { plain_mc, stratified_mc, grid };

struct IntegrationConfig {
  long long sample_count = 100000;  // >= 1000
  std::uint64_t seed = 1;
  Strategy strategy = Strategy::plain_mc;
  double target_rel_error = 0.01;  // in (0, 0.5)
  int workers = 1;
};

struct IntegralEstimate {
  double value = 0.0;  // J
  double error = 0.0;  // one-sigma statistical / bound, J
  bool converged = true;
  long long samples = 0;
};

/// Pair energy E_{i,j} with a statistical error estimate. Lattice
/// operands are reduced to exact ball-pair sums (possibly truncated by
/// the sample budget, in which case the tail bound lands in `error`).
IntegralEstimate pair_energy(const MassDistribution& rho_i,
                             const MassDistribution& rho_j,
                             const IntegrationConfig& cfg);

/// |E_1 + E_2 - 2 E_{1,2}|, the self-energy difference between two
/// branch distributions.
IntegralEstimate delta_E(const MassDistribution& rho_1,
                         const MassDistribution& rho_2,
                         const IntegrationConfig& cfg);

/// Kernel integral int int rho1 rho2 / |r1-r2| for two equal uniform
/// balls (radius R, masses m1, m2) at center distance d, exact for all
/// d >= 0. Multiply by 4 pi G for the pair energy.
double ball_pair_kernel(double m1, double m2, double R, double d);

}  // namespace gravicat
