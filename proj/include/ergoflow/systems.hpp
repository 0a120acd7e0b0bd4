#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "ergoflow/spaces.hpp"

namespace ergoflow {

// ---------------------------------------------------------------------------
// Base homeomorphisms.

enum class MapKind { cat, inverse_cat, full_shift, rotation, conjugated };

/// Invertible torus chart change (x,y) -> (x + a*sin(2*pi*y)/(2*pi), y).
/// |amplitude| < 1 keeps the x-section monotone, so the inverse is exact.
struct SineShear {
  double amplitude = 0.0;
  TorusPoint forward(const TorusPoint& p) const;
  TorusPoint inverse(const TorusPoint& p) const;
  double lipschitz() const { return 1.0 + std::abs(amplitude); }
  double inverse_lipschitz() const { return 1.0 / (1.0 - std::abs(amplitude)); }
};

/// A homeomorphism of one of the base spaces:
///   cat          (x,y) -> (2x+y, x+y) mod 1
///   inverse_cat  (x,y) -> (x-y, -x+2y) mod 1
///   full_shift   left shift on symbol windows (alphabet k)
///   rotation     torus translation by (a, frac(a*phi)); an isometry
///   conjugated   h o f o h^-1 for a stored chart change h
class BaseMap {
 public:
  static BaseMap cat();
  static BaseMap inverse_cat();
  static BaseMap full_shift(int alphabet);
  static BaseMap rotation(double angle);
  static BaseMap conjugated(const BaseMap& inner, const SineShear& chart);

  BasePoint apply(const BasePoint& p, long long power = 1) const;
  MapKind kind() const { return kind_; }
  int alphabet() const { return alphabet_; }
  double angle() const { return angle_; }
  const std::string& descriptor() const { return descriptor_; }
  bool is_isometry() const;

 private:
  BaseMap() = default;
  MapKind kind_ = MapKind::cat;
  int alphabet_ = 2;
  double angle_ = 0.0;
  std::shared_ptr<const BaseMap> inner_;
  SineShear chart_;
  std::string descriptor_;
};

/// Spectral data of the cat matrix [[2,1],[1,1]].
double cat_lambda();                       // (3+sqrt(5))/2
std::array<double, 2> cat_unstable_dir();  // unit eigenvector for lambda
std::array<double, 2> cat_stable_dir();    // unit eigenvector for 1/lambda

// ---------------------------------------------------------------------------
// Flows.

/// Either the unit-roof suspension of a base map or the interval logistic
/// flow x' = x(1-x) (closed form; fixed points exactly {0,1}).
struct Flow {
  enum class Kind { suspension, interval_logistic };

  Kind kind = Kind::suspension;
  std::shared_ptr<const BaseMap> base;  // suspension only
  double tolerance = 1e-9;
  std::string descriptor;

  static Flow suspension(const BaseMap& f);
  static Flow interval_logistic();

  bool has_fixed_points() const { return kind == Kind::interval_logistic; }
};

/// Canonical suspension point: the height is reduced into [0,1) through the
/// gluing before storing.
SuspensionPoint make_suspension(const Flow& flow, const BasePoint& base, double height);

SuspensionPoint suspension_flow(const Flow& flow, const SuspensionPoint& p, double t);
IntervalPoint interval_flow(const IntervalPoint& p, double t);
Point flow_point(const Flow& flow, const Point& p, double t);

/// Horizontal metric on the slice at `level`:
/// d_t(y,z) = (1-t) d(y,z) + t d(f(y), f(z)).
double horizontal_metric(const BaseMap& f, double level, const BasePoint& y,
                         const BasePoint& z);

/// Chain metric on the mapping torus, evaluated over a finite family of
/// chains: same-orbit vertical segments, and vertical-horizontal-vertical
/// chains through `chain_levels` grid levels plus the heights of the two
/// points and level 0, each with an optional roof wrap on either side.
/// This is an upper bound for the infimum over all chains; its slack is
/// exercised by tests, not assumed.
double suspension_distance(const SuspensionPoint& p, const SuspensionPoint& q,
                           int chain_levels = 32);

}  // namespace ergoflow
