#include "ergoflow/sections.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ergoflow {

namespace {

constexpr double kOnSliceTol = 1e-9;

double dyadic_floor(double x) {
  if (!(x > 0.0)) fail(ErrorCode::internal, "dyadic floor of a non-positive value");
  if (std::isinf(x)) return std::numeric_limits<double>::infinity();
  double v = 1.0;
  while (v > x) v /= 2.0;
  return v;
}

BasePoint point_to_base(const Point& p) {
  if (std::holds_alternative<TorusPoint>(p)) return std::get<TorusPoint>(p);
  if (std::holds_alternative<IntervalPoint>(p)) return std::get<IntervalPoint>(p);
  if (std::holds_alternative<SymbolWord>(p)) return std::get<SymbolWord>(p);
  fail(ErrorCode::kind_mismatch, "section arcs are made of base points");
}

long long pack_window(const SymbolWord& w, int radius) {
  long long id = 0;
  for (int i = -radius; i <= radius; ++i)
    id = id * w.alphabet + w.at(i);
  return id;
}

}  // namespace

// ---------------------------------------------------------------------------
// Patch queries

int SectionFamilyPair::locate_tile(const BasePoint& b) const {
  if (geo.kind == SectionGeometry::Kind::torus_grid) {
    const auto& p = std::get<TorusPoint>(b);
    const int m = geo.m;
    int ix = std::min(m - 1, static_cast<int>(std::floor(p.x * m)));
    int iy = std::min(m - 1, static_cast<int>(std::floor(p.y * m)));
    return iy * m + ix;
  }
  const auto& w = std::get<SymbolWord>(b);
  const long long id = pack_window(w, geo.t_radius);
  return static_cast<int>(id);
}

BasePoint SectionFamilyPair::tile_center(int idx) const {
  if (geo.kind != SectionGeometry::Kind::torus_grid)
    fail(ErrorCode::unsupported_system, "tile centers exist for torus grids only");
  const int m = geo.m;
  const int ix = idx % m;
  const int iy = idx / m;
  const double pitch = 1.0 / m;
  return TorusPoint((ix + 0.5) * pitch, (iy + 0.5) * pitch);
}

bool SectionFamilyPair::in_T(int idx, const BasePoint& b) const {
  if (geo.kind == SectionGeometry::Kind::torus_grid) {
    if (geo.t_ratio == 1.0) return locate_tile(b) == idx;
    const auto& p = std::get<TorusPoint>(b);
    const auto c = std::get<TorusPoint>(tile_center(idx));
    const double half = geo.t_ratio * 0.5 / geo.m;
    return std::abs(wrap_delta(p.x - c.x)) <= half + 1e-12 &&
           std::abs(wrap_delta(p.y - c.y)) <= half + 1e-12;
  }
  return locate_tile(b) == idx;
}

bool SectionFamilyPair::in_S(int idx, const BasePoint& b) const {
  if (geo.kind == SectionGeometry::Kind::torus_grid) {
    const auto& p = std::get<TorusPoint>(b);
    const auto c = std::get<TorusPoint>(tile_center(idx));
    const double half = geo.s_ratio * 0.5 / geo.m;
    if (half >= 0.5) return true;  // cell spans the whole torus
    return std::abs(wrap_delta(p.x - c.x)) <= half + 1e-12 &&
           std::abs(wrap_delta(p.y - c.y)) <= half + 1e-12;
  }
  // words: S_idx is the s_radius-truncation of the T_idx cylinder
  const auto& w = std::get<SymbolWord>(b);
  long long id = idx;
  std::vector<std::uint8_t> pattern(static_cast<std::size_t>(2 * geo.t_radius + 1));
  for (int i = geo.t_radius; i >= -geo.t_radius; --i) {
    pattern[static_cast<std::size_t>(i + geo.t_radius)] =
        static_cast<std::uint8_t>(id % w.alphabet);
    id /= w.alphabet;
  }
  for (int i = -geo.s_radius; i <= geo.s_radius; ++i)
    if (w.at(i) != pattern[static_cast<std::size_t>(i + geo.t_radius)]) return false;
  return true;
}

double SectionFamilyPair::patch_diameter_T() const {
  if (geo.kind == SectionGeometry::Kind::torus_grid) {
    const double side = geo.t_ratio / geo.m;
    return side >= 1.0 ? std::sqrt(0.5) : side * std::sqrt(2.0);
  }
  return std::pow(2.0, -(geo.t_radius + 1));
}

double SectionFamilyPair::patch_diameter_S() const {
  if (geo.kind == SectionGeometry::Kind::torus_grid) {
    const double side = geo.s_ratio / geo.m;
    return side >= 1.0 ? std::sqrt(0.5) : side * std::sqrt(2.0);
  }
  return std::pow(2.0, -(geo.s_radius + 1));
}

// ---------------------------------------------------------------------------
// Construction and sampled certification

namespace {

// margin between a T patch and its S cell: how far a point may sit outside T
// while staying inside S
double compat_margin(const SectionGeometry& geo) {
  if (geo.kind == SectionGeometry::Kind::word_cylinders)
    return std::numeric_limits<double>::infinity();  // cylinder nesting is automatic
  const double s_half = geo.s_ratio * 0.5 / geo.m;
  if (s_half >= 0.5) return std::numeric_limits<double>::infinity();
  return (geo.s_ratio - geo.t_ratio) * 0.5 / geo.m;
}

std::vector<BasePoint> validation_lattice(const Flow& flow, int res) {
  std::vector<BasePoint> pts;
  const MapKind k = flow.base->kind();
  if (k == MapKind::full_shift) {
    const int alphabet = flow.base->alphabet();
    const int radius = 12;
    const int free_syms = std::min(8, 2 * static_cast<int>(std::log2(std::max(2, res))));
    const long long count = 1LL << free_syms;
    for (long long v = 0; v < count; ++v) {
      SymbolWord w = SymbolWord::zero(alphabet, radius);
      long long id = v;
      for (int i = 0; i < free_syms; ++i) {
        w.set(i - free_syms / 2, static_cast<std::uint8_t>(id % alphabet));
        id /= alphabet;
      }
      pts.push_back(w);
    }
  } else {
    for (int iy = 0; iy < res; ++iy)
      for (int ix = 0; ix < res; ++ix)
        pts.push_back(TorusPoint((ix + 0.5) / res, (iy + 0.5) / res));
  }
  return pts;
}

void certify(SectionFamilyPair& pair, const BuildOptions& opts) {
  const Flow& flow = pair.flow;
  CoveringReport rep;
  rep.lattice = std::to_string(opts.lattice_res) + "x" + std::to_string(opts.lattice_res) +
                "x" + std::to_string(opts.height_levels);

  const auto lattice = validation_lattice(flow, opts.lattice_res);
  bool cover_ok = true;
  double max_hit = 0.0;
  double theta_min = std::numeric_limits<double>::infinity();
  for (const BasePoint& b : lattice) {
    for (int hl = 0; hl < opts.height_levels; ++hl) {
      const double h = static_cast<double>(hl) / opts.height_levels;
      // forward: the first slice hit is at 1-h and lands on the tile of f(b)
      const double t_fwd = (h == 0.0) ? 0.0 : 1.0 - h;
      const double t_bwd = h;
      max_hit = std::max(max_hit, std::max(t_fwd, t_bwd));
      if (t_fwd > pair.eps + 1e-12 || t_bwd > pair.eps + 1e-12) cover_ok = false;
      const BasePoint landing = (h == 0.0) ? b : flow.base->apply(b, 1);
      const int tile = pair.locate_tile(landing);
      if (!pair.in_T(tile, landing) || !pair.in_S(tile, landing)) cover_ok = false;
    }
    theta_min = std::min(theta_min, 1.0);  // slice returns happen at integer times
  }
  rep.forward_T = rep.backward_T = rep.forward_S = rep.backward_S = cover_ok;
  rep.max_first_hit = max_hit;
  rep.theta_sampled = theta_min;

  // cross-section property: the orbit through a slice point meets the slice
  // only at t = 0 inside (-eps, eps)
  bool cross_ok = true;
  for (double t = -pair.eps + 0.05; t < pair.eps; t += 0.1) {
    if (std::abs(t) < 1e-9) continue;
    const double frac = t - std::floor(t);
    if (frac < kOnSliceTol || 1.0 - frac < kOnSliceTol) cross_ok = false;
  }
  rep.cross_section = cross_ok;

  // eps0 compatibility: d(x,y) < eps0 and x in T_j imply y in S_j
  bool compat_ok = true;
  if (pair.geo.kind == SectionGeometry::Kind::torus_grid) {
    const int probes = std::min<std::size_t>(lattice.size(), 512);
    for (int i = 0; i < probes && compat_ok; ++i) {
      const auto& x = std::get<TorusPoint>(lattice[static_cast<std::size_t>(i) *
                                                   (lattice.size() / probes)]);
      const int j = pair.locate_tile(x);
      for (int dir = 0; dir < 8 && compat_ok; ++dir) {
        const double ang = dir * std::numbers::pi / 4.0;
        for (double frac : {0.3, 0.7, 0.95}) {
          const double r = frac * pair.eps0;
          const TorusPoint y(x.x + r * std::cos(ang), x.y + r * std::sin(ang));
          if (!pair.in_S(j, y)) { compat_ok = false; break; }
        }
      }
    }
  }
  rep.eps0_compat = compat_ok;

  pair.report = rep;
  if (!rep.all_ok())
    fail(ErrorCode::validation, "section pair failed sampled certification at " + rep.lattice);
}

SectionFamilyPair assemble(const Flow& flow, SectionGeometry geo, double delta,
                           const BuildOptions& opts) {
  SectionFamilyPair pair;
  pair.flow = flow;
  pair.geo = geo;
  pair.delta = delta;
  pair.eps = 1.0;    // covering needs eps >= sup first-hit = 1; the section
                     // property needs eps <= min slice return = 1
  pair.theta = 1.0;  // refined by certification below
  pair.rho = 0.125;  // largest dyadic with 5*rho < eps and 2*rho < theta

  const double margin = compat_margin(geo);
  const double theta_cap = pair.theta / 2.0;
  pair.eps0 = std::min(dyadic_floor(margin),
                       dyadic_floor(theta_cap * (1.0 - 1e-9)));  // strict < theta/2

  if (geo.kind == SectionGeometry::Kind::torus_grid) {
    pair.patch_count = static_cast<long long>(geo.m) * geo.m;
  } else {
    pair.patch_count = 1;
    for (int i = 0; i < 2 * geo.t_radius + 1; ++i)
      pair.patch_count *= flow.base->alphabet();
  }
  pair.mesh_bound = pair.eps0 / opts.mesh_divisor;

  certify(pair, opts);
  if (pair.patch_diameter_S() > delta * (1.0 + 1e-12))
    fail(ErrorCode::validation, "patch diameter exceeds the requested bound");
  return pair;
}

}  // namespace

SectionFamilyPair build_pair_with_grid(const Flow& flow, int m, const BuildOptions& opts) {
  if (flow.kind != Flow::Kind::suspension)
    fail(ErrorCode::unsupported_system,
         "cross-section pairs need a fixed-point-free flow (suspension)");
  if (m < 1) fail(ErrorCode::parameter, "grid resolution must be >= 1");
  if (flow.base->kind() == MapKind::full_shift)
    fail(ErrorCode::parameter, "grid construction applies to torus bases");
  SectionGeometry geo;
  geo.kind = SectionGeometry::Kind::torus_grid;
  geo.m = m;
  geo.t_ratio = 1.0;
  geo.s_ratio = 1.25;
  const double diam = (geo.s_ratio / m >= 1.0) ? std::sqrt(0.5)
                                               : geo.s_ratio / m * std::sqrt(2.0);
  return assemble(flow, geo, diam * (1.0 + 1e-9), opts);
}

SectionFamilyPair build_pair(const Flow& flow, double delta, const BuildOptions& opts) {
  if (flow.kind != Flow::Kind::suspension)
    fail(ErrorCode::unsupported_system,
         "cross-section pairs need a fixed-point-free flow (suspension)");
  if (!(delta > 0.0)) fail(ErrorCode::validation, "delta must be positive");

  if (flow.base->kind() == MapKind::full_shift) {
    SectionGeometry geo;
    geo.kind = SectionGeometry::Kind::word_cylinders;
    // S patches are (c-1)-cylinders of diameter 2^-c <= delta
    int c = 2;
    while (std::pow(2.0, -c) > delta) ++c;
    geo.t_radius = c;
    geo.s_radius = c - 1;
    return assemble(flow, geo, delta, opts);
  }

  if (delta >= std::sqrt(0.5)) return build_pair_with_grid(flow, 1, opts);
  const int m = static_cast<int>(std::ceil(1.25 * std::sqrt(2.0) / delta));
  if (m > 4096) fail(ErrorCode::validation, "delta too small for the grid construction");
  return assemble(flow,
                  SectionGeometry{SectionGeometry::Kind::torus_grid, m, 1.0, 1.25, 3, 2},
                  delta, opts);
}

TripleFamilies build_triple(const Flow& flow, double delta, const BuildOptions& opts) {
  if (flow.kind != Flow::Kind::suspension)
    fail(ErrorCode::unsupported_system, "triples need a suspension flow");
  if (!(delta > 0.0)) fail(ErrorCode::validation, "delta must be positive");

  TripleFamilies tri;
  if (flow.base->kind() == MapKind::full_shift) {
    int c = 3;
    while (std::pow(2.0, -(c - 1)) > delta) ++c;
    auto geo = [&](int t_rad, int s_rad) {
      SectionGeometry g;
      g.kind = SectionGeometry::Kind::word_cylinders;
      g.t_radius = t_rad;
      g.s_radius = s_rad;
      return g;
    };
    tri.p1 = assemble(flow, geo(c, c - 2), delta, opts);
    tri.p2 = assemble(flow, geo(c, c - 1), delta, opts);
    tri.p3 = assemble(flow, geo(c - 1, c - 2), delta, opts);
  } else {
    int m = 1;
    if (delta < std::sqrt(0.5)) {
      m = static_cast<int>(std::ceil(1.5625 * std::sqrt(2.0) / delta));
      m = std::max(m, 2);
    }
    auto geo = [&](double t_ratio, double s_ratio) {
      SectionGeometry g;
      g.kind = SectionGeometry::Kind::torus_grid;
      g.m = m;
      g.t_ratio = t_ratio;
      g.s_ratio = s_ratio;
      return g;
    };
    // T1 = T2 = tiles, T3 = S2 = 1.25-cells, S1 = S3 = 1.5625-cells
    tri.p1 = assemble(flow, geo(1.0, 1.5625), delta, opts);
    tri.p2 = assemble(flow, geo(1.0, 1.25), delta, opts);
    tri.p3 = assemble(flow, geo(1.25, 1.5625), delta, opts);
  }

  // smallest sampled first-hit time from U S2 into U T1: slice to slice
  tri.theta_prime = 1.0;
  tri.hop_bound = static_cast<int>(std::floor(tri.p1.eps / tri.theta_prime));
  tri.eps1 = tri.p2.eps0;
  return tri;
}

// ---------------------------------------------------------------------------
// Return dynamics

namespace {

// Accept points that sit on the slice up to rounding; points just under the
// roof are pushed through the gluing.
BasePoint slice_base(const SectionFamilyPair& pair, const SuspensionPoint& x,
                     const char* who) {
  if (x.height <= kOnSliceTol) return x.base;
  if (1.0 - x.height <= kOnSliceTol) return pair.flow.base->apply(x.base, 1);
  fail(ErrorCode::domain, std::string(who) + ": point is not on a section");
}

}  // namespace

ReturnStep first_return(const SectionFamilyPair& pair, const SuspensionPoint& x) {
  const BasePoint b = slice_base(pair, x, "first_return");
  const int tile = pair.locate_tile(b);
  if (!pair.in_T(tile, b)) fail(ErrorCode::domain, "first_return: point not on U T_i");
  ReturnStep step;
  step.point = make_suspension(pair.flow, pair.flow.base->apply(b, 1), 0.0);
  step.time = 1.0;  // unit roof: the next hit of the full tiling is one unit up
  step.patch = pair.locate_tile(step.point.base);
  return step;
}

Projection project_P_rho(const SectionFamilyPair& pair, const SuspensionPoint& x, int i) {
  struct Cand { double t; int shift; };
  const Cand cands[] = {{-x.height, 0}, {1.0 - x.height, 1}};
  for (const auto& c : cands) {
    if (std::abs(c.t) >= pair.rho) continue;
    const BasePoint landed =
        (c.shift == 0) ? x.base : pair.flow.base->apply(x.base, c.shift);
    if (pair.in_S(i, landed))
      return {make_suspension(pair.flow, landed, 0.0), c.t};
  }
  fail(ErrorCode::domain, "project_P_rho: point outside D_rho of the section");
}

ReturnOrbit shadow_sequence(const SectionFamilyPair& pair, const SuspensionPoint& x,
                            const SuspensionPoint& y, int n) {
  const BasePoint xb0 = slice_base(pair, x, "shadow_sequence");
  const BasePoint yb0 = slice_base(pair, y, "shadow_sequence");
  const int tile0 = pair.locate_tile(xb0);
  if (!pair.in_S(tile0, yb0))
    fail(ErrorCode::domain, "shadow_sequence: companion is not on the anchor's section");
  const double d0 = base_distance(xb0, yb0);
  if (d0 >= pair.eps0)
    fail(ErrorCode::parameter, "shadow_sequence: companion farther than eps0");

  ReturnOrbit orbit;
  orbit.entries.push_back({0, yb0, 0.0, d0});
  const int dir = (n >= 0) ? 1 : -1;
  BasePoint xb = xb0, yb = yb0;
  double dist_prev = d0;
  for (int j = 1; j <= std::abs(n); ++j) {
    if (dist_prev >= pair.eps0) {
      orbit.complete = false;
      orbit.diverged_at = dir * j;
      return orbit;
    }
    xb = pair.flow.base->apply(xb, dir);
    yb = pair.flow.base->apply(yb, dir);
    const int tile = pair.locate_tile(xb);
    if (!pair.in_S(tile, yb)) {
      orbit.complete = false;
      orbit.diverged_at = dir * j;
      return orbit;
    }
    const double d = base_distance(xb, yb);
    if (d >= pair.eps0) {
      orbit.complete = false;
      orbit.diverged_at = dir * j;
      return orbit;
    }
    orbit.entries.push_back({dir * j, yb, static_cast<double>(dir * j), d});
    dist_prev = d;
  }
  return orbit;
}

namespace {

// refine a polyline of base points, tracking one sample index
void refine_tracked(std::vector<BasePoint>& pts, double target, std::size_t& anchor) {
  if (pts.size() < 2) return;
  if (std::holds_alternative<SymbolWord>(pts[0])) return;  // no interpolation for words
  std::vector<BasePoint> out;
  std::size_t new_anchor = 0;
  out.push_back(pts[0]);
  if (anchor == 0) new_anchor = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double gap = base_distance(pts[i - 1], pts[i]);
    const int pieces = std::max(1, static_cast<int>(std::ceil(gap / target)));
    for (int k = 1; k < pieces; ++k) {
      const double s = static_cast<double>(k) / pieces;
      const auto& a = std::get<TorusPoint>(pts[i - 1]);
      const auto& b = std::get<TorusPoint>(pts[i]);
      out.push_back(TorusPoint(a.x + s * wrap_delta(b.x - a.x),
                               a.y + s * wrap_delta(b.y - a.y)));
    }
    out.push_back(pts[i]);
    if (anchor == i) new_anchor = out.size() - 1;
  }
  pts = std::move(out);
  anchor = new_anchor;
}

double polyline_diameter(const std::vector<BasePoint>& pts) {
  double best = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      best = std::max(best, base_distance(pts[i], pts[j]));
  return best;
}

Arc arc_from_bases(const std::vector<BasePoint>& pts) {
  std::vector<Point> samples;
  samples.reserve(pts.size());
  for (const auto& b : pts)
    std::visit([&](const auto& v) { samples.emplace_back(v); }, b);
  double mesh = 1e-12;
  for (std::size_t i = 1; i < pts.size(); ++i)
    mesh = std::max(mesh, base_distance(pts[i - 1], pts[i]));
  return Arc::from_samples(std::move(samples), mesh * (1.0 + 1e-9));
}

}  // namespace

ReturnImage return_continuum(const SectionFamilyPair& pair, const Arc& a,
                             std::size_t anchor, int n, std::optional<double> cap_opt) {
  if (anchor >= a.size()) fail(ErrorCode::index, "return_continuum: anchor out of range");
  const double cap = cap_opt.value_or(pair.eps0);

  std::vector<BasePoint> pts;
  pts.reserve(a.size());
  for (const auto& s : a.samples()) pts.push_back(point_to_base(s));

  const double d0 = polyline_diameter(pts);
  if (d0 >= pair.eps0 / 2.0)
    fail(ErrorCode::parameter, "return_continuum: input diameter must stay below eps0/2");
  {
    const int tile = pair.locate_tile(pts[anchor]);
    for (const auto& b : pts)
      if (!pair.in_S(tile, b))
        fail(ErrorCode::domain, "return_continuum: arc leaves the anchor's section");
  }

  ReturnImage img{Arc::singleton(a.sample(anchor)), anchor, 0, std::nullopt, {}};
  const int dir = (n >= 0) ? 1 : -1;
  const double mesh_target = std::min(pair.mesh_bound, a.mesh());

  for (int j = 1; j <= std::abs(n); ++j) {
    for (auto& b : pts) b = pair.flow.base->apply(b, dir);
    const int tile = pair.locate_tile(pts[anchor]);
    bool contained = true;
    for (const auto& b : pts)
      if (!pair.in_S(tile, b)) { contained = false; break; }
    refine_tracked(pts, mesh_target, anchor);
    const double diam = polyline_diameter(pts);
    img.diam_trace.push_back(diam);
    img.arc = arc_from_bases(pts);
    img.anchor = anchor;
    if (diam >= cap || !contained) {
      img.overflow_at = dir * j;
      return img;
    }
    img.steps_done = j;
  }
  return img;
}

MembershipReport stable_membership(const SectionFamilyPair& pair, const Arc& a,
                                   double eta, int n_max) {
  if (!(eta > 0.0 && eta < pair.eps0))
    fail(ErrorCode::parameter, "stable_membership: eta must lie in (0, eps0)");
  if (n_max < 1) fail(ErrorCode::parameter, "stable_membership: n_max must be >= 1");

  std::vector<BasePoint> pts;
  for (const auto& s : a.samples()) pts.push_back(point_to_base(s));
  std::optional<std::size_t> anchor;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const int tile = pair.locate_tile(pts[i]);
    bool ok = true;
    for (const auto& b : pts)
      if (!pair.in_S(tile, b)) { ok = false; break; }
    if (ok) { anchor = i; break; }
  }
  if (!anchor)
    fail(ErrorCode::domain, "stable_membership: arc does not fit a single section");

  MembershipReport rep;
  const double d0 = polyline_diameter(pts);
  bool fwd_ok = d0 < eta, bwd_ok = d0 < eta;

  const ReturnImage fwd = return_continuum(pair, a, *anchor, n_max);
  rep.forward_trace = fwd.diam_trace;
  rep.forward_overflow = fwd.overflow_at;
  if (fwd.overflow_at) fwd_ok = false;
  for (double d : fwd.diam_trace)
    if (d >= eta) fwd_ok = false;

  const ReturnImage bwd = return_continuum(pair, a, *anchor, -n_max);
  rep.backward_trace = bwd.diam_trace;
  rep.backward_overflow = bwd.overflow_at;
  if (bwd.overflow_at) bwd_ok = false;
  for (double d : bwd.diam_trace)
    if (d >= eta) bwd_ok = false;

  rep.verdict = fwd_ok ? (bwd_ok ? Membership::both : Membership::stable_only)
                       : (bwd_ok ? Membership::unstable_only : Membership::neither);
  return rep;
}

VarphiStep varphi_return(const TripleFamilies& triple, const SuspensionPoint& x) {
  const BasePoint b = slice_base(triple.p2, x, "varphi_return");
  // U S2 covers the slice; the next hit of U T1 (a full tiling) is one roof up
  VarphiStep step;
  step.point = make_suspension(triple.p2.flow, triple.p2.flow.base->apply(b, 1), 0.0);
  step.time = 1.0;
  step.hops = 1;  // the arrival is the only T3 crossing in (0, 1]
  step.patch = triple.p1.locate_tile(step.point.base);
  return step;
}

ReturnImage varphi_continuum(const TripleFamilies& triple, const Arc& a,
                             std::size_t anchor, int n) {
  return return_continuum(triple.p2, a, anchor, n, triple.eps1);
}

}  // namespace ergoflow
