#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ergoflow/errors.hpp"

namespace ergoflow {

class BaseMap;  // systems.hpp

// ---------------------------------------------------------------------------
// Coordinate helpers for the flat torus [0,1)^2 with the quotient metric.

/// Reduce a coordinate to [0,1).
inline double wrap_unit(double x) {
  double r = x - std::floor(x);
  if (r >= 1.0) r -= 1.0;  // guards the x = -1e-18 rounding case
  if (r < 0.0) r += 1.0;
  return r;
}

/// Signed coordinate difference reduced to [-1/2, 1/2].
inline double wrap_delta(double d) {
  double r = std::remainder(d, 1.0);
  return r;
}

// ---------------------------------------------------------------------------
// Point kinds.

/// Point on the 2-torus, coordinates always reduced mod 1 into [0,1).
/// Quotient Euclidean metric; the diameter of the torus is sqrt(2)/2 < 1.
struct TorusPoint {
  double x = 0.0;
  double y = 0.0;
  TorusPoint() = default;
  TorusPoint(double px, double py) : x(wrap_unit(px)), y(wrap_unit(py)) {}
};

inline double torus_distance(const TorusPoint& a, const TorusPoint& b) {
  const double dx = wrap_delta(a.x - b.x);
  const double dy = wrap_delta(a.y - b.y);
  return std::hypot(dx, dy);
}

/// Point of the closed unit interval.
struct IntervalPoint {
  double x = 0.0;
  IntervalPoint() = default;
  explicit IntervalPoint(double px) : x(px) {
    if (!(px >= 0.0 && px <= 1.0))
      fail(ErrorCode::parameter, "interval point outside [0,1]");
  }
};

inline double interval_distance(const IntervalPoint& a, const IntervalPoint& b) {
  return std::abs(a.x - b.x);
}

/// Finite window of a bi-infinite symbol sequence over {0,...,alphabet-1}.
/// Symbols are stored on [-radius, radius]; only indices within `reliable`
/// may be read. Shifting loses one unit of reliable radius per step.
struct SymbolWord {
  int alphabet = 2;
  int radius = 0;
  int reliable = 0;
  std::vector<std::uint8_t> cells;  // index i stored at cells[i + radius]

  static SymbolWord zero(int alphabet, int radius);
  static SymbolWord from_window(int alphabet, const std::vector<std::uint8_t>& window);

  std::uint8_t at(int i) const {
    if (std::abs(i) > reliable)
      fail(ErrorCode::precision, "symbol index beyond reliable radius");
    return cells[static_cast<std::size_t>(i + radius)];
  }
  void set(int i, std::uint8_t s);
  SymbolWord shifted(long long power) const;
};

/// d(x,y) = 2^(-min{|i| : x_i != y_i}) on the common reliable window;
/// equal windows give 0.
double word_distance(const SymbolWord& a, const SymbolWord& b);

using BasePoint = std::variant<TorusPoint, IntervalPoint, SymbolWord>;

double base_distance(const BasePoint& a, const BasePoint& b);
bool base_same_kind(const BasePoint& a, const BasePoint& b);

/// Point of a mapping torus: a base point plus a height in [0,1).
/// (b, 1) is identified with (f(b), 0); heights are reduced eagerly so the
/// stored form is canonical. The gluing map travels with the point so the
/// chain metric is self-contained.
struct SuspensionPoint {
  BasePoint base;
  double height = 0.0;
  std::shared_ptr<const BaseMap> map;
};

using Point = std::variant<TorusPoint, IntervalPoint, SymbolWord, SuspensionPoint>;

/// Metric dispatch across point kinds. Mixing kinds (or suspension points of
/// different systems) raises kind_mismatch.
double distance(const Point& p, const Point& q);
bool same_kind(const Point& p, const Point& q);
std::string point_kind_name(const Point& p);

// ---------------------------------------------------------------------------
// Arc: a sampled continuum, stored as an ordered polyline in a fixed chart.

class Arc {
 public:
  /// Validates: at least one sample, uniform point kind, consecutive samples
  /// within `mesh`, arclength parameters derived from chord lengths.
  static Arc from_samples(std::vector<Point> samples, double mesh);

  /// Geodesic segment between two points of the same kind, sampled at the
  /// requested mesh. Torus segments take the shortest representative.
  static Arc segment(const Point& a, const Point& b, double mesh);

  /// Singleton continuum.
  static Arc singleton(const Point& p);

  std::size_t size() const { return samples_.size(); }
  const Point& sample(std::size_t i) const;
  const std::vector<Point>& samples() const { return samples_; }
  double mesh() const { return mesh_; }
  const std::vector<double>& arclen_params() const { return arclen_; }
  bool degenerate() const { return samples_.size() == 1; }

 private:
  Arc() = default;
  std::vector<Point> samples_;
  double mesh_ = 0.0;
  std::vector<double> arclen_;  // increasing, in [0,1], one per sample
  friend Arc refine_arc(const Arc&, double);
  friend Arc sub_arc(const Arc&, double, std::size_t);
};

/// Max pairwise sample distance; 0 for a singleton.
double arc_diameter(const Arc& a);

/// True as soon as some sample pair is at distance >= threshold (early exit).
bool arc_diameter_at_least(const Arc& a, double threshold);

/// Re-sample so the mesh is at most target_mesh. Keeps every original sample
/// and interpolates between consecutive ones in the local chart, so the
/// underlying polyline is unchanged.
Arc refine_arc(const Arc& a, double target_mesh);

/// Sub-polyline of arclength fraction r containing the anchor sample.
/// r=0 gives the singleton {anchor}; r=1 gives the whole arc; the selected
/// sample set is monotone in r.
Arc sub_arc(const Arc& a, double r, std::size_t anchor);

/// Chart interpolation between two points of the same kind (s in [0,1]).
Point interpolate(const Point& a, const Point& b, double s);

}  // namespace ergoflow
