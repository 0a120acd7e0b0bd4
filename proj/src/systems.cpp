#include "ergoflow/systems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace ergoflow {

namespace {
constexpr double kGolden = 1.6180339887498948482;
}

// ---------------------------------------------------------------------------
// SineShear

TorusPoint SineShear::forward(const TorusPoint& p) const {
  const double twopi = 2.0 * std::numbers::pi;
  return TorusPoint(p.x + amplitude * std::sin(twopi * p.y) / twopi, p.y);
}

TorusPoint SineShear::inverse(const TorusPoint& p) const {
  const double twopi = 2.0 * std::numbers::pi;
  return TorusPoint(p.x - amplitude * std::sin(twopi * p.y) / twopi, p.y);
}

// ---------------------------------------------------------------------------
// BaseMap

BaseMap BaseMap::cat() {
  BaseMap m;
  m.kind_ = MapKind::cat;
  m.descriptor_ = "cat";
  return m;
}

BaseMap BaseMap::inverse_cat() {
  BaseMap m;
  m.kind_ = MapKind::inverse_cat;
  m.descriptor_ = "inverse-cat";
  return m;
}

BaseMap BaseMap::full_shift(int alphabet) {
  if (alphabet < 2) fail(ErrorCode::parameter, "full shift needs alphabet >= 2");
  BaseMap m;
  m.kind_ = MapKind::full_shift;
  m.alphabet_ = alphabet;
  m.descriptor_ = "full-shift(" + std::to_string(alphabet) + ")";
  return m;
}

BaseMap BaseMap::rotation(double angle) {
  BaseMap m;
  m.kind_ = MapKind::rotation;
  m.angle_ = angle;
  m.descriptor_ = "rotation(" + std::to_string(angle) + ")";
  return m;
}

BaseMap BaseMap::conjugated(const BaseMap& inner, const SineShear& chart) {
  if (std::abs(chart.amplitude) >= 1.0)
    fail(ErrorCode::parameter, "chart change amplitude must satisfy |a| < 1");
  BaseMap m;
  m.kind_ = MapKind::conjugated;
  m.inner_ = std::make_shared<BaseMap>(inner);
  m.chart_ = chart;
  m.descriptor_ =
      "conjugated(" + inner.descriptor() + ",a=" + std::to_string(chart.amplitude) + ")";
  return m;
}

bool BaseMap::is_isometry() const {
  return kind_ == MapKind::rotation || kind_ == MapKind::full_shift;
}

namespace {

TorusPoint cat_step(const TorusPoint& p, bool forward) {
  if (forward) return TorusPoint(2.0 * p.x + p.y, p.x + p.y);
  return TorusPoint(p.x - p.y, -p.x + 2.0 * p.y);
}

}  // namespace

BasePoint BaseMap::apply(const BasePoint& p, long long power) const {
  switch (kind_) {
    case MapKind::cat:
    case MapKind::inverse_cat: {
      if (!std::holds_alternative<TorusPoint>(p))
        fail(ErrorCode::kind_mismatch, "cat map acts on torus points");
      const bool fwd = (kind_ == MapKind::cat) == (power >= 0);
      TorusPoint q = std::get<TorusPoint>(p);
      for (long long i = 0; i < std::llabs(power); ++i) q = cat_step(q, fwd);
      return q;
    }
    case MapKind::rotation: {
      if (!std::holds_alternative<TorusPoint>(p))
        fail(ErrorCode::kind_mismatch, "rotation acts on torus points");
      const TorusPoint q = std::get<TorusPoint>(p);
      const double k = static_cast<double>(power);
      return TorusPoint(q.x + k * angle_, q.y + k * wrap_unit(angle_ * kGolden));
    }
    case MapKind::full_shift: {
      if (!std::holds_alternative<SymbolWord>(p))
        fail(ErrorCode::kind_mismatch, "shift acts on symbol words");
      return std::get<SymbolWord>(p).shifted(power);
    }
    case MapKind::conjugated: {
      if (!std::holds_alternative<TorusPoint>(p))
        fail(ErrorCode::kind_mismatch, "conjugated map acts on torus points");
      const TorusPoint q = chart_.inverse(std::get<TorusPoint>(p));
      const BasePoint mid = inner_->apply(q, power);
      return chart_.forward(std::get<TorusPoint>(mid));
    }
  }
  fail(ErrorCode::internal, "unreachable map kind");
}

double cat_lambda() { return (3.0 + std::sqrt(5.0)) / 2.0; }

std::array<double, 2> cat_unstable_dir() {
  const double mu = cat_lambda() - 2.0;  // (sqrt(5)-1)/2
  const double n = std::hypot(1.0, mu);
  return {1.0 / n, mu / n};
}

std::array<double, 2> cat_stable_dir() {
  const double mu = (3.0 - std::sqrt(5.0)) / 2.0 - 2.0;  // -(1+sqrt(5))/2
  const double n = std::hypot(1.0, mu);
  return {1.0 / n, mu / n};
}

// ---------------------------------------------------------------------------
// Flows

Flow Flow::suspension(const BaseMap& f) {
  Flow flow;
  flow.kind = Kind::suspension;
  flow.base = std::make_shared<BaseMap>(f);
  flow.descriptor = f.descriptor() + "-suspension";
  return flow;
}

Flow Flow::interval_logistic() {
  Flow flow;
  flow.kind = Kind::interval_logistic;
  flow.descriptor = "interval-logistic";
  return flow;
}

SuspensionPoint make_suspension(const Flow& flow, const BasePoint& base, double height) {
  if (flow.kind != Flow::Kind::suspension)
    fail(ErrorCode::unsupported_system, "suspension point of a non-suspension flow");
  SuspensionPoint p;
  p.map = flow.base;
  const double k = std::floor(height);
  p.base = (k == 0.0) ? base : flow.base->apply(base, static_cast<long long>(k));
  p.height = height - k;
  if (p.height >= 1.0) {  // rounding at the roof
    p.base = flow.base->apply(p.base, 1);
    p.height = 0.0;
  }
  return p;
}

SuspensionPoint suspension_flow(const Flow& flow, const SuspensionPoint& p, double t) {
  return make_suspension(flow, p.base, p.height + t);
}

IntervalPoint interval_flow(const IntervalPoint& p, double t) {
  if (p.x <= 0.0) return IntervalPoint(0.0);
  if (p.x >= 1.0) return IntervalPoint(1.0);
  // closed form of x' = x(1-x) through the logit chart, stable at large |t|
  const double u = std::log(p.x / (1.0 - p.x)) + t;
  if (u > 500.0) return IntervalPoint(1.0);
  if (u < -500.0) return IntervalPoint(0.0);
  return IntervalPoint(1.0 / (1.0 + std::exp(-u)));
}

Point flow_point(const Flow& flow, const Point& p, double t) {
  if (flow.kind == Flow::Kind::interval_logistic) {
    if (!std::holds_alternative<IntervalPoint>(p))
      fail(ErrorCode::kind_mismatch, "interval flow acts on interval points");
    return interval_flow(std::get<IntervalPoint>(p), t);
  }
  if (!std::holds_alternative<SuspensionPoint>(p))
    fail(ErrorCode::kind_mismatch, "suspension flow acts on suspension points");
  return suspension_flow(flow, std::get<SuspensionPoint>(p), t);
}

// ---------------------------------------------------------------------------
// Chain metric

double horizontal_metric(const BaseMap& f, double level, const BasePoint& y,
                         const BasePoint& z) {
  return (1.0 - level) * base_distance(y, z) +
         level * base_distance(f.apply(y, 1), f.apply(z, 1));
}

namespace {

// Vertical routes from (b, h) to a target level u:
//   0: stay on the fiber            cost |h - u|,    base unchanged
//   1: up through the roof          cost (1-h) + u,  base -> f(b)
//   2: down through the floor       cost h + (1-u),  base -> f^-1(b)
struct RoutedBase {
  double cost;
  int shift;  // f-power applied
};

inline RoutedBase route(double h, double u, int which) {
  switch (which) {
    case 0: return {std::abs(h - u), 0};
    case 1: return {(1.0 - h) + u, 1};
    default: return {h + (1.0 - u), -1};
  }
}

}  // namespace

double suspension_distance(const SuspensionPoint& p, const SuspensionPoint& q,
                           int chain_levels) {
  if (!p.map || !q.map) fail(ErrorCode::parameter, "suspension point without a gluing map");
  if (p.map->descriptor() != q.map->descriptor())
    fail(ErrorCode::kind_mismatch, "suspension points of different systems");
  if (!base_same_kind(p.base, q.base))
    fail(ErrorCode::kind_mismatch, "suspension points over different base kinds");
  const BaseMap& f = *p.map;

  double best = std::numeric_limits<double>::infinity();

  // same-orbit vertical segment
  for (int k = -3; k <= 3; ++k) {
    const BasePoint moved = (k == 0) ? p.base : f.apply(p.base, k);
    if (base_distance(moved, q.base) < 1e-12) {
      best = std::min(best, std::abs(static_cast<double>(k) + q.height - p.height));
    }
  }

  // bases shifted by f-powers -1..2, shared across all level/route combinations
  std::array<BasePoint, 4> pb = {f.apply(p.base, -1), p.base, f.apply(p.base, 1),
                                 f.apply(p.base, 2)};
  std::array<BasePoint, 4> qb = {f.apply(q.base, -1), q.base, f.apply(q.base, 1),
                                 f.apply(q.base, 2)};
  auto shifted = [](const std::array<BasePoint, 4>& arr, int s) -> const BasePoint& {
    return arr[static_cast<std::size_t>(s + 1)];
  };

  std::vector<double> levels = {p.height, q.height, 0.0};
  for (int j = 1; j < chain_levels; ++j)
    levels.push_back(static_cast<double>(j) / chain_levels);

  for (const double u : levels) {
    for (int rp = 0; rp < 3; ++rp) {
      const RoutedBase a = route(p.height, u, rp);
      if (a.cost >= best) continue;
      for (int rq = 0; rq < 3; ++rq) {
        const RoutedBase b = route(q.height, u, rq);
        if (a.cost + b.cost >= best) continue;
        const BasePoint& y = shifted(pb, a.shift);
        const BasePoint& z = shifted(qb, b.shift);
        const double horiz = (1.0 - u) * base_distance(y, z) +
                             u * base_distance(shifted(pb, a.shift + 1),
                                               shifted(qb, b.shift + 1));
        best = std::min(best, a.cost + b.cost + horiz);
      }
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Point metric dispatch (declared in spaces.hpp)

double distance(const Point& p, const Point& q) {
  if (!same_kind(p, q))
    fail(ErrorCode::kind_mismatch, "distance between different point kinds");
  if (std::holds_alternative<TorusPoint>(p))
    return torus_distance(std::get<TorusPoint>(p), std::get<TorusPoint>(q));
  if (std::holds_alternative<IntervalPoint>(p))
    return interval_distance(std::get<IntervalPoint>(p), std::get<IntervalPoint>(q));
  if (std::holds_alternative<SymbolWord>(p))
    return word_distance(std::get<SymbolWord>(p), std::get<SymbolWord>(q));
  return suspension_distance(std::get<SuspensionPoint>(p), std::get<SuspensionPoint>(q));
}

}  // namespace ergoflow
