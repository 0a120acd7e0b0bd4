#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ergoflow/systems.hpp"

namespace ergoflow {

// ---------------------------------------------------------------------------
// Time changes and reparametrization families.

/// Monotone piecewise-linear homeomorphism of the reals fixing 0, stored by
/// its breakpoints. Outside the stored range it extends with the boundary
/// slope.
struct TimeChange {
  std::vector<double> knots;   // strictly increasing, contains 0
  std::vector<double> values;  // strictly increasing, value 0 at the 0-knot

  static TimeChange identity(double span = 64.0);
  double operator()(double t) const;
  bool is_identity() const;
  double span() const { return knots.empty() ? 0.0 : knots.back(); }
  void validate() const;
};

/// One time change per arc sample; the guide sample's change is the identity.
/// Adjacent samples' values may differ by at most lipschitz * mesh at every
/// breakpoint (the continuity surrogate).
struct ReparamFamily {
  std::vector<TimeChange> changes;
  std::size_t guide = 0;
  double lipschitz = 64.0;

  static ReparamFamily identity(std::size_t samples, double span = 64.0);
  void validate(const Arc& a) const;
};

/// diam of { X^{alpha_i(t)}(x_i) : i } at a given t.
double reparam_orbit_diameter(const Flow& flow, const Arc& a,
                              const ReparamFamily& alpha, double t);

// ---------------------------------------------------------------------------
// Discrete reparametrizations (increasing sequences through 0).

struct DiscreteReparam {
  // seq[k][i - index_min] = beta(sample k)_i, with beta(.)_0 = 0
  std::vector<std::vector<double>> seq;
  int index_min = 0;
  int index_max = 0;
  std::size_t guide = 0;

  double value(std::size_t sample, int i) const;
};

/// Sample alpha along an adaptive time grid so that every per-sample
/// increment stays below delta. The grid step targets 0.8 * delta for the
/// guide and shrinks while any companion increment would reach delta.
DiscreteReparam alpha_to_beta(const Arc& a, const ReparamFamily& alpha, double delta);

// ---------------------------------------------------------------------------
// Search verdicts.

struct Counterexample {
  Arc arc;
  ReparamFamily alpha;
  double sup_diam = 0.0;   // over the sampled window
  double window = 0.0;
};

struct CwVerdict {
  bool counterexample_found = false;
  std::optional<Counterexample> witness;
  long long seeds_tested = 0;
  long long reparams_tested = 0;
  long long candidates_tested = 0;
  double eps = 0.0, delta = 0.0, window = 0.0;
  std::string system;
};

struct SearchBudget {
  long long candidates = 10000;
};

struct SeedOptions {
  std::uint64_t rng_seed = 1;
  int anchors = 4;                 // anchors per axis on the slice
  std::vector<double> arc_lengths; // defaults to dyadic fractions of delta
  std::vector<double> orbit_lengths{0.5, 1.0};
  double time_step = 0.25;         // window sampling step
};

/// Search for a continuum and a reparametrization whose displaced images stay
/// delta-small across the window while the continuum escapes the eps-orbit
/// segment of its guide. Any counterexample is re-verified before being
/// returned.
CwVerdict cw_search(const Flow& flow, double eps, double delta, double window,
                    const SearchBudget& budget, const SeedOptions& seeds = {});

/// Explicit non-expansivity construction at a fixed point: an orbit segment
/// A = X^[0,1](x) near the fixed point together with the convex family of
/// time changes built from
///   h(t) = t+1 off (-2,1),  2t on [0,1),  t/2 on (-2,0).
/// The guide is the endpoint sample X^1(x); with that pairing the displaced
/// sets collapse to single points for times outside (-2,1).
std::pair<Arc, ReparamFamily> fixed_point_witness(const Flow& flow, const Point& p,
                                                  double delta, double window = 50.0,
                                                  double eps = 0.25);

/// The h above, exposed for tests.
double lemma_h(double t);

/// Discrete continuum-wise expansivity probe for a base map: searches seeds
/// for a nondegenerate arc whose iterates stay delta-small for |n| <= n_max.
CwVerdict discrete_cw_check(const BaseMap& map, double delta, int n_max,
                            const std::vector<Arc>& seeds);

/// Default seed arcs in the base space of a map.
std::vector<Arc> default_map_seeds(const BaseMap& map, double delta);

/// Transport a verdict through a conjugacy induced by a base chart change.
/// Counterexamples move to the conjugated system with delta scaled by the
/// forward modulus and are re-verified; absence transports with delta scaled
/// by the inverse modulus.
CwVerdict conjugacy_transport(const CwVerdict& verdict, const Flow& original,
                              const SineShear& chart, double lip_forward,
                              double lip_backward);

/// Recheck a counterexample from scratch: sup over the sampled window of the
/// displaced diameter stays below delta, and the arc is not inside the
/// eps-orbit segment of its guide.
bool verify_counterexample(const Flow& flow, const Counterexample& c, double eps,
                           double delta, double time_step = 0.25);

}  // namespace ergoflow
