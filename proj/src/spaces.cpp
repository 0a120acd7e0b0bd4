#include "ergoflow/spaces.hpp"

#include <algorithm>
#include <cmath>

namespace ergoflow {

// ---------------------------------------------------------------------------
// SymbolWord

SymbolWord SymbolWord::zero(int alphabet, int radius) {
  if (alphabet < 2 || radius < 0)
    fail(ErrorCode::parameter, "symbol word needs alphabet >= 2, radius >= 0");
  SymbolWord w;
  w.alphabet = alphabet;
  w.radius = radius;
  w.reliable = radius;
  w.cells.assign(static_cast<std::size_t>(2 * radius + 1), 0);
  return w;
}

SymbolWord SymbolWord::from_window(int alphabet, const std::vector<std::uint8_t>& window) {
  if (window.empty() || window.size() % 2 == 0)
    fail(ErrorCode::parameter, "symbol window must have odd length");
  SymbolWord w = zero(alphabet, static_cast<int>(window.size() / 2));
  for (std::size_t i = 0; i < window.size(); ++i) {
    if (window[i] >= alphabet)
      fail(ErrorCode::parameter, "symbol outside alphabet");
    w.cells[i] = window[i];
  }
  return w;
}

void SymbolWord::set(int i, std::uint8_t s) {
  if (std::abs(i) > radius) fail(ErrorCode::index, "symbol index outside window");
  if (s >= alphabet) fail(ErrorCode::parameter, "symbol outside alphabet");
  cells[static_cast<std::size_t>(i + radius)] = s;
}

SymbolWord SymbolWord::shifted(long long power) const {
  if (std::llabs(power) > reliable)
    fail(ErrorCode::precision, "shift power exceeds reliable radius");
  SymbolWord out = *this;
  out.reliable = reliable - static_cast<int>(std::llabs(power));
  for (int i = -radius; i <= radius; ++i) {
    const long long src = i + power;
    out.cells[static_cast<std::size_t>(i + radius)] =
        (std::llabs(src) <= radius) ? cells[static_cast<std::size_t>(src + radius)]
                                    : std::uint8_t{0};
  }
  return out;
}

double word_distance(const SymbolWord& a, const SymbolWord& b) {
  if (a.alphabet != b.alphabet)
    fail(ErrorCode::kind_mismatch, "words over different alphabets");
  const int common = std::min(a.reliable, b.reliable);
  for (int i = 0; i <= common; ++i) {
    if (a.at(i) != b.at(i) || a.at(-i) != b.at(-i))
      return std::pow(2.0, -i);
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// Base point dispatch

bool base_same_kind(const BasePoint& a, const BasePoint& b) {
  return a.index() == b.index();
}

double base_distance(const BasePoint& a, const BasePoint& b) {
  if (!base_same_kind(a, b))
    fail(ErrorCode::kind_mismatch, "distance between different point kinds");
  if (std::holds_alternative<TorusPoint>(a))
    return torus_distance(std::get<TorusPoint>(a), std::get<TorusPoint>(b));
  if (std::holds_alternative<IntervalPoint>(a))
    return interval_distance(std::get<IntervalPoint>(a), std::get<IntervalPoint>(b));
  return word_distance(std::get<SymbolWord>(a), std::get<SymbolWord>(b));
}

bool same_kind(const Point& p, const Point& q) { return p.index() == q.index(); }

std::string point_kind_name(const Point& p) {
  switch (p.index()) {
    case 0: return "torus";
    case 1: return "interval";
    case 2: return "word";
    default: return "suspension";
  }
}

// distance() for suspension points needs the chain metric; the dispatch body
// lives in systems.cpp.

// ---------------------------------------------------------------------------
// Arc

const Point& Arc::sample(std::size_t i) const {
  if (i >= samples_.size()) fail(ErrorCode::index, "arc sample index out of range");
  return samples_[i];
}

namespace {

std::vector<double> derive_arclen(const std::vector<Point>& samples) {
  std::vector<double> acc(samples.size(), 0.0);
  double total = 0.0;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    total += distance(samples[i - 1], samples[i]);
    acc[i] = total;
  }
  if (total > 0.0) {
    for (auto& v : acc) v /= total;
    acc.back() = 1.0;
  } else {
    // all samples coincide: spread parameters uniformly so they stay increasing
    const std::size_t n = samples.size();
    for (std::size_t i = 0; i < n; ++i)
      acc[i] = (n == 1) ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return acc;
}

}  // namespace

Arc Arc::from_samples(std::vector<Point> samples, double mesh) {
  if (samples.empty()) fail(ErrorCode::parameter, "arc needs at least one sample");
  if (!(mesh > 0.0)) fail(ErrorCode::parameter, "arc mesh must be positive");
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (!same_kind(samples[0], samples[i]))
      fail(ErrorCode::kind_mismatch, "arc samples must share a point kind");
    const double gap = distance(samples[i - 1], samples[i]);
    if (gap > mesh * (1.0 + 1e-9))
      fail(ErrorCode::validation, "consecutive arc samples exceed the mesh");
  }
  Arc a;
  a.samples_ = std::move(samples);
  a.mesh_ = mesh;
  a.arclen_ = derive_arclen(a.samples_);
  return a;
}

Arc Arc::singleton(const Point& p) {
  Arc a;
  a.samples_ = {p};
  a.mesh_ = 1.0;
  a.arclen_ = {0.0};
  return a;
}

Point interpolate(const Point& a, const Point& b, double s) {
  if (!same_kind(a, b)) fail(ErrorCode::kind_mismatch, "interpolating mixed kinds");
  if (std::holds_alternative<TorusPoint>(a)) {
    const auto& p = std::get<TorusPoint>(a);
    const auto& q = std::get<TorusPoint>(b);
    // shortest representative: lift q next to p, interpolate, reduce
    const double dx = wrap_delta(q.x - p.x);
    const double dy = wrap_delta(q.y - p.y);
    return TorusPoint(p.x + s * dx, p.y + s * dy);
  }
  if (std::holds_alternative<IntervalPoint>(a)) {
    const auto& p = std::get<IntervalPoint>(a);
    const auto& q = std::get<IntervalPoint>(b);
    return IntervalPoint(p.x + s * (q.x - p.x));
  }
  if (std::holds_alternative<SymbolWord>(a)) {
    // the word space is totally disconnected; only trivial interpolation exists
    if (word_distance(std::get<SymbolWord>(a), std::get<SymbolWord>(b)) > 0.0)
      fail(ErrorCode::unsupported_system, "cannot interpolate distinct symbol words");
    return a;
  }
  const auto& p = std::get<SuspensionPoint>(a);
  const auto& q = std::get<SuspensionPoint>(b);
  const double dh = q.height - p.height;
  if (std::abs(dh) > 0.5)
    fail(ErrorCode::unsupported_system,
         "suspension interpolation across the roof is ambiguous; sample the flow instead");
  SuspensionPoint r;
  r.map = p.map;
  r.height = p.height + s * dh;
  BasePoint pb = p.base;
  BasePoint qb = q.base;
  if (std::holds_alternative<TorusPoint>(pb)) {
    const auto& bp = std::get<TorusPoint>(pb);
    const auto& bq = std::get<TorusPoint>(qb);
    r.base = TorusPoint(bp.x + s * wrap_delta(bq.x - bp.x), bp.y + s * wrap_delta(bq.y - bp.y));
  } else if (std::holds_alternative<IntervalPoint>(pb)) {
    const auto& bp = std::get<IntervalPoint>(pb);
    const auto& bq = std::get<IntervalPoint>(qb);
    r.base = IntervalPoint(bp.x + s * (bq.x - bp.x));
  } else {
    if (base_distance(pb, qb) > 0.0)
      fail(ErrorCode::unsupported_system, "cannot interpolate distinct symbol words");
    r.base = pb;
  }
  return Point(r);
}

Arc Arc::segment(const Point& a, const Point& b, double mesh) {
  if (!(mesh > 0.0)) fail(ErrorCode::parameter, "segment mesh must be positive");
  const double len = distance(a, b);
  const int pieces = std::max(1, static_cast<int>(std::ceil(len / mesh)));
  std::vector<Point> samples;
  samples.reserve(static_cast<std::size_t>(pieces) + 1);
  for (int i = 0; i <= pieces; ++i)
    samples.push_back(interpolate(a, b, static_cast<double>(i) / pieces));
  return from_samples(std::move(samples), mesh);
}

double arc_diameter(const Arc& a) {
  double best = 0.0;
  const auto& s = a.samples();
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      best = std::max(best, distance(s[i], s[j]));
  return best;
}

bool arc_diameter_at_least(const Arc& a, double threshold) {
  const auto& s = a.samples();
  if (s.size() >= 2 && distance(s.front(), s.back()) >= threshold) return true;
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (distance(s[i], s[j]) >= threshold) return true;
  return false;
}

Arc refine_arc(const Arc& a, double target_mesh) {
  if (!(target_mesh > 0.0)) fail(ErrorCode::parameter, "target mesh must be positive");
  std::vector<Point> out;
  out.push_back(a.samples()[0]);
  for (std::size_t i = 1; i < a.size(); ++i) {
    const Point& prev = a.samples()[i - 1];
    const Point& next = a.samples()[i];
    const double gap = distance(prev, next);
    const int pieces = std::max(1, static_cast<int>(std::ceil(gap / target_mesh)));
    for (int k = 1; k <= pieces; ++k)
      out.push_back(k == pieces ? next
                                : interpolate(prev, next, static_cast<double>(k) / pieces));
  }
  return Arc::from_samples(std::move(out), std::min(target_mesh, a.mesh()));
}

Arc sub_arc(const Arc& a, double r, std::size_t anchor) {
  if (anchor >= a.size()) fail(ErrorCode::index, "sub_arc anchor out of range");
  if (!(r >= 0.0 && r <= 1.0)) fail(ErrorCode::parameter, "sub_arc fraction outside [0,1]");
  if (r == 0.0) return Arc::singleton(a.sample(anchor));
  if (r == 1.0) return a;

  // arclength interval of measure r containing the anchor: grow symmetrically,
  // spill over at the ends
  const double pos = a.arclen_params()[anchor];
  double lo = pos - r / 2.0;
  double hi = pos + r / 2.0;
  if (lo < 0.0) { hi -= lo; lo = 0.0; }
  if (hi > 1.0) { lo -= hi - 1.0; hi = 1.0; }
  lo = std::max(lo, 0.0);

  const double eps = 1e-12;
  std::vector<Point> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double t = a.arclen_params()[i];
    if (t >= lo - eps && t <= hi + eps) out.push_back(a.sample(i));
  }
  if (out.empty()) out.push_back(a.sample(anchor));
  return Arc::from_samples(std::move(out), a.mesh());
}

}  // namespace ergoflow
