#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ergoflow/systems.hpp"

namespace ergoflow {

// ---------------------------------------------------------------------------
// Families of cross-sections on the height-0 slice of a unit-roof suspension.
//
// The slice is partitioned into half-open tiles (the inner patches T_i);
// each S_i is the concentric closed cell enlarged by s_ratio/t_ratio, so the
// T_i are the S_i shrunk by factor t_ratio/s_ratio. Every slice point lies in
// some T_i, which makes the four covering identities hold with section time
// eps = 1, and forces first-return time exactly 1.
//
// For symbol systems, patches are cylinders: T_i fixes the window
// [-t_radius, t_radius] and S_i its [-s_radius, s_radius] truncation.

struct SectionGeometry {
  enum class Kind { torus_grid, word_cylinders };
  Kind kind = Kind::torus_grid;
  // torus_grid
  int m = 1;              // tiles per axis, pitch 1/m
  double t_ratio = 1.0;   // patch half-width in tile multiples
  double s_ratio = 1.25;
  // word_cylinders
  int t_radius = 3;
  int s_radius = 2;
};

struct CoveringReport {
  bool forward_T = false, backward_T = false;
  bool forward_S = false, backward_S = false;
  bool cross_section = false;
  bool eps0_compat = false;
  double max_first_hit = 0.0;   // sup over samples of the first slice-hit time
  double theta_sampled = 0.0;   // min over samples of the first return to the slice
  std::string lattice;
  bool all_ok() const {
    return forward_T && backward_T && forward_S && backward_S && cross_section &&
           eps0_compat;
  }
};

struct BuildOptions {
  int lattice_res = 48;      // per-axis samples for covering validation
  int height_levels = 5;
  double mesh_divisor = 32;  // return-image mesh bound = eps0 / mesh_divisor
};

class SectionFamilyPair {
 public:
  Flow flow;
  SectionGeometry geo;
  double eps = 1.0;     // section time
  double delta = 0.0;   // diameter bound the pair was built for
  double theta = 1.0;   // smallest positive slice-return time
  double rho = 0.125;   // projection half-width, 5*rho < eps and 2*rho < theta
  double eps0 = 0.0;    // shadowing compatibility constant, < theta/2
  double mesh_bound = 0.0;
  long long patch_count = 0;
  CoveringReport report;

  int locate_tile(const BasePoint& b) const;    // canonical patch through b
  bool in_T(int idx, const BasePoint& b) const;
  bool in_S(int idx, const BasePoint& b) const;
  BasePoint tile_center(int idx) const;         // torus grids only
  double patch_diameter_T() const;
  double patch_diameter_S() const;
};

/// Build a delta-adequate pair for a suspension flow. Grid pitch is derived
/// from delta; constants eps, theta, rho, eps0 are derived and then certified
/// on a sample lattice.
SectionFamilyPair build_pair(const Flow& flow, double delta, const BuildOptions& = {});

/// Same, but pinning the torus grid resolution directly.
SectionFamilyPair build_pair_with_grid(const Flow& flow, int m, const BuildOptions& = {});

/// Three nested families sharing one grid pitch:
///   T1 = T2 (tiles), T3 = S2, S1 = S3, hence T1 c S2 c S1.
struct TripleFamilies {
  SectionFamilyPair p1, p2, p3;
  double theta_prime = 1.0;  // smallest sampled first-hit time from U S2 to U T1
  int hop_bound = 1;         // floor(eps / theta_prime)
  double eps1 = 0.0;         // shadowing constant for the composite return
};

TripleFamilies build_triple(const Flow& flow, double delta, const BuildOptions& = {});

// ---------------------------------------------------------------------------
// First-return dynamics.

struct ReturnStep {
  SuspensionPoint point;
  double time = 0.0;
  int patch = 0;
};

/// First return to U T_i. The returned time lies in [theta, eps].
ReturnStep first_return(const SectionFamilyPair& pair, const SuspensionPoint& x);

/// Projection along the flow onto S_i within time (-rho, rho).
/// Idempotent on S_i; domain error outside X^(-rho,rho)(S_i).
struct Projection {
  SuspensionPoint point;
  double time = 0.0;
};
Projection project_P_rho(const SectionFamilyPair& pair, const SuspensionPoint& x, int i);

/// Companion-orbit shadow of y along the return orbit of x. Construction
/// stops at the first index where the companion distance reaches eps0 or the
/// projection leaves its cell; that index is recorded as diverged_at.
struct ReturnOrbit {
  struct Entry {
    int index = 0;
    BasePoint point;
    double time = 0.0;  // cumulative flow time
    double dist = 0.0;  // d(phi^i(x), y_i)
  };
  std::vector<Entry> entries;
  bool complete = true;
  int diverged_at = 0;  // meaningful when !complete
};
ReturnOrbit shadow_sequence(const SectionFamilyPair& pair, const SuspensionPoint& x,
                            const SuspensionPoint& y, int n);

/// Image of a continuum on a section under n first returns, projected back
/// into the sections of the anchor orbit. Soft-fails with the step index when
/// an intermediate diameter reaches the cap (eps0 unless overridden).
struct ReturnImage {
  Arc arc;                          // image at the last computed step
  std::size_t anchor = 0;
  int steps_done = 0;               // completed steps within the cap
  std::optional<int> overflow_at;   // signed step index where the cap was hit
  std::vector<double> diam_trace;   // diameters at steps 1..|n| (as computed)
};
ReturnImage return_continuum(const SectionFamilyPair& pair, const Arc& a,
                             std::size_t anchor, int n,
                             std::optional<double> cap = std::nullopt);

/// Membership of an arc in the local stable/unstable sets of the pair.
enum class Membership { both, stable_only, unstable_only, neither };
struct MembershipReport {
  Membership verdict = Membership::neither;
  std::vector<double> forward_trace;
  std::vector<double> backward_trace;
  std::optional<int> forward_overflow;
  std::optional<int> backward_overflow;
};
MembershipReport stable_membership(const SectionFamilyPair& pair, const Arc& a,
                                   double eta, int n_max);

/// Composite return from U S2 to U T1 through the triple. Reports the number
/// of intermediate T3 crossings (the hop count).
struct VarphiStep {
  SuspensionPoint point;
  double time = 0.0;
  int hops = 0;
  int patch = 0;
};
VarphiStep varphi_return(const TripleFamilies& triple, const SuspensionPoint& x);

/// n composite returns applied to a continuum (the tree-growing map).
ReturnImage varphi_continuum(const TripleFamilies& triple, const Arc& a,
                             std::size_t anchor, int n);

}  // namespace ergoflow
