#include "geodlab/thick.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "geodlab/error.hpp"

namespace geodlab {

namespace {

// Arc length along the axis of a class, 0 at the foot of the base point.
struct AxisParam {
  GeodesicLined line;
  Isometryd frame;
  double length = 0;

  double t(const Pointd& z) const { return std::log(frame.apply(z).y); }
  Pointd at(double t) const { return frame.inverse().apply(Pointd(0, std::exp(t))); }
};

AxisParam axis_param(const SurfaceModel& s, const CyclicWord& c) {
  const auto g = s.evaluate(c);
  const auto cls = classify(g);
  if (cls.type != IsometryType::Hyperbolic)
    throw Error(ErrorCode::NotGeodesic, "class " + c.letters() + " is not hyperbolic");
  AxisParam a;
  a.line = axis(g);
  a.length = cls.length;
  auto f = standard_frame(a.line);
  const auto b = f.apply(s.base_point());
  const double r = std::sqrt(std::hypot(b.x, b.y));
  a.frame = Isometryd(1 / r, 0, 0, r) * f;
  return a;
}

struct Region {
  double a, b;  // axis parameters, a < b
  Chord chord;
};

// Group elements whose tiles may meet σ = [−ℓ/2, ℓ/2].
std::vector<Isometryd> tiles_near(const SurfaceModel& s, const AxisParam& a) {
  std::vector<Isometryd> out;
  EnumBudget b;
  b.workers = 1;
  const auto st = for_each_tile(s, a.at(0), a.length / 2 + 1e-6, b,
                                [&](std::size_t, const Isometryd& h, const std::string&) { out.push_back(h); });
  if (!st.complete) throw Error(ErrorCode::BudgetExceeded, "tile search along the axis exceeded its budget");
  return out;
}

bool same_base(const BoundaryPointd& x, const BoundaryPointd& y) {
  if (x.is_infinite() || y.is_infinite()) return x.is_infinite() && y.is_infinite();
  return std::abs(x.value() - y.value()) <= 1e-9 * std::max(1.0, std::abs(x.value()));
}

// Chords of the axis through cusp horoballs bounded by horocycles of the
// given length, for every tile meeting σ.
std::vector<Region> cusp_regions(const SurfaceModel& s, const AxisParam& a, double horocycle_length) {
  std::vector<Region> out;
  std::vector<BoundaryPointd> seen;
  for (const auto& h : tiles_near(s, a)) {
    for (const auto& v : s.cusp_vertices()) {
      const double H = horocycle_height(v, horocycle_length);
      const auto ball = h * (v.normalizer.inverse() * Horoballd(BoundaryPointd::infinity(), H));
      if (std::any_of(seen.begin(), seen.end(), [&](const auto& x) { return same_base(x, ball.base); })) continue;
      seen.push_back(ball.base);
      const auto meet = horoball_meet(a.line, ball);
      if (!meet) continue;
      if (meet->unbounded) throw Error(ErrorCode::NotGeodesic, "axis ends at a cusp");
      double t1 = a.t(meet->entry), t2 = a.t(meet->exit);
      if (t1 > t2) std::swap(t1, t2);
      if (t2 < -a.length / 2 || t1 > a.length / 2) continue;
      // depth: the chord's apex in the cusp frame of this horoball
      const auto back = v.normalizer * h.inverse();
      const auto l = back * a.line;
      Chord c;
      c.kind = Chord::Kind::Cusp;
      c.id = v.cusp;
      c.length = meet->length;
      c.depth = std::log(l.radius() / H);
      out.push_back({t1, t2, c});
    }
  }
  return out;
}

// Axis interval within distance r of a line, in axis parameters.
std::optional<std::pair<double, double>> near_line(const AxisParam& a, const GeodesicLined& L, double r,
                                                   double* min_dist) {
  const auto l = a.frame * L;
  const double S = std::sinh(r);
  if (l.is_vertical()) {
    // sinh d = |x0| / u
    const double x0 = std::abs(l.foot());
    *min_dist = 0;
    if (x0 == 0) return std::pair{-1e300, 1e300};
    return std::pair{std::log(x0 / S), 1e300};
  }
  // sinh d = |u² + k| / (2Ru) at the point i·u
  const double c0 = l.center(), R = l.radius(), k = c0 * c0 - R * R;
  *min_dist = k <= 0 ? 0.0 : std::asinh(std::sqrt(k) / R);
  const double disc = R * R * S * S - k;
  if (disc < 0) return std::nullopt;
  const double q = std::sqrt(disc);
  double lo = R * S - q, hi = R * S + q;
  lo = std::max(lo, -R * S + q);
  if (!(hi > lo) || hi <= 0) return std::nullopt;
  return std::pair{lo > 0 ? std::log(lo) : -1e300, std::log(hi)};
}

// Collars {inj < ε} of classes shorter than 2ε: points within r of a lift,
// with cosh² r = (cosh 2ε − 1)/(cosh λ − 1) from the displacement of δ.
std::vector<Region> collar_regions(const SurfaceModel& s, const AxisParam& a, double eps) {
  std::vector<Region> out;
  const auto shorts = enumerate_classes(s, 2 * eps);
  int id = 0;
  for (const auto& row : shorts.rows) {
    const double lambda = row.length;
    const double r = std::acosh(std::sqrt((std::cosh(2 * eps) - 1) / (std::cosh(lambda) - 1)));
    const auto g = s.evaluate(row.word);
    const auto L = axis(g);
    const auto foot = standard_frame(L).inverse().apply(Pointd(0, 1));
    auto els = ball_elements(s, a.at(0), foot, a.length / 2 + r + lambda / 2);
    els.insert(els.begin(), Isometryd());
    std::vector<GeodesicLined> lines;
    for (const auto& h : els) {
      const auto hl = h * L;
      const auto same = [&](const GeodesicLined& x) {
        return (same_base(x.u, hl.u) && same_base(x.v, hl.v)) || (same_base(x.u, hl.v) && same_base(x.v, hl.u));
      };
      if (std::any_of(lines.begin(), lines.end(), same)) continue;
      lines.push_back(hl);
      double dmin = 0;
      const auto iv = near_line(a, hl, r, &dmin);
      if (!iv || iv->second < -a.length / 2 || iv->first > a.length / 2) continue;
      Chord c;
      c.kind = Chord::Kind::Collar;
      c.id = id;
      c.depth = r - dmin;
      c.length = std::min(iv->second, 1e300) - std::max(iv->first, -1e300);
      out.push_back({iv->first, iv->second, c});
    }
    ++id;
  }
  return out;
}

// Union of periodic intervals, as disjoint sorted intervals covering
// [−3ℓ/2, 3ℓ/2].
std::vector<std::pair<double, double>> periodic_union(const std::vector<Region>& regions, double len) {
  std::vector<std::pair<double, double>> iv;
  for (const auto& r : regions)
    for (int k = -1; k <= 1; ++k) iv.emplace_back(r.a + k * len, r.b + k * len);
  std::sort(iv.begin(), iv.end());
  std::vector<std::pair<double, double>> out;
  for (const auto& x : iv) {
    if (!out.empty() && x.first <= out.back().second)
      out.back().second = std::max(out.back().second, x.second);
    else
      out.push_back(x);
  }
  return out;
}

double wrap(double t, double len) {
  double r = std::fmod(t, len);
  if (r < 0) r += len;
  return r;
}

struct ThinPart {
  AxisParam axis;
  std::vector<Region> regions;
  std::vector<std::pair<double, double>> merged;
  double origin = 0;
  bool all_thin = false;
};

ThinPart thin_part(const SurfaceModel& s, const CyclicWord& c, double eps) {
  ThinPart tp;
  tp.axis = axis_param(s, c);
  const double len = tp.axis.length;
  // inj < ε in a cusp below the horocycle of length 2·sinh ε
  tp.regions = cusp_regions(s, tp.axis, 2 * std::sinh(eps));
  for (auto& r : collar_regions(s, tp.axis, eps)) tp.regions.push_back(r);
  tp.merged = periodic_union(tp.regions, len);
  tp.origin = -len / 2;
  for (const auto& m : tp.merged) {
    if (m.second - m.first >= len) {
      tp.all_thin = true;
      break;
    }
    if (m.second >= -len / 2 && m.second < len / 2) {
      tp.origin = m.second;
      break;
    }
  }
  return tp;
}

bool thin_at(const ThinPart& tp, double t) {
  const double len = tp.axis.length;
  if (tp.all_thin) return true;
  const double x = wrap(t - tp.origin, len) + tp.origin;
  for (const auto& m : tp.merged)
    if (m.first < x && x < m.second) return true;
  return false;
}

}  // namespace

double injectivity_radius(const SurfaceModel& s, const Pointd& p, const EnumBudget& budget) {
  for (double D = 0.25; D <= 40; D *= 2) {
    const auto els = ball_elements(s, p, D, budget);
    if (els.empty()) continue;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& h : els) best = std::min(best, distance(p, h.apply(p)));
    return best / 2;
  }
  throw Error(ErrorCode::BudgetExceeded, "no group element moves the point less than 40");
}

double cusp_injectivity(const CuspVertex& v, const Pointd& p) {
  const auto q = v.normalizer.apply(p);
  return std::asinh(v.width / (2 * q.y));
}

ThickDecomposition thick_decompose(const SurfaceModel& s, const CyclicWord& c, double eps,
                                   const IntersectionOptions& opt) {
  if (eps > 0.5) throw Error(ErrorCode::EpsilonTooLarge, "thick part needs eps <= 1/2");
  return thick_decompose(s, c, eps, self_intersections(s, c, opt));
}

ThickDecomposition thick_decompose(const SurfaceModel& s, const CyclicWord& c, double eps,
                                   const SelfIntersections& si) {
  if (eps > 0.5) throw Error(ErrorCode::EpsilonTooLarge, "thick part needs eps <= 1/2");
  if (!(eps > 0)) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  const auto tp = thin_part(s, c, eps);
  const double len = tp.axis.length;
  ThickDecomposition d;
  d.eps = eps;
  d.length = len;
  d.origin = tp.origin;

  // strands are the gaps between thin intervals in [origin, origin + ℓ)
  if (!tp.all_thin) {
    const double lo = tp.origin, hi = tp.origin + len;
    double cursor = lo;
    for (const auto& m : tp.merged) {
      if (m.second <= lo || m.first >= hi) continue;
      if (m.first > cursor) d.strands.emplace_back(cursor - lo, m.first - lo);
      cursor = std::max(cursor, m.second);
    }
    if (cursor < hi) d.strands.emplace_back(cursor - lo, len);
  }
  for (const auto& st : d.strands) d.thick_length += st.second - st.first;

  for (const auto& r : tp.regions) {
    Chord ch = r.chord;
    ch.t_in = wrap(r.a - tp.origin, len);
    ch.t_out = ch.t_in + (r.b - r.a);
    const bool dup = std::any_of(d.thin_visits.begin(), d.thin_visits.end(), [&](const Chord& x) {
      return x.kind == ch.kind && x.id == ch.id && std::abs(x.t_in - ch.t_in) < 1e-7 * std::max(1.0, len);
    });
    if (!dup) d.thin_visits.push_back(ch);
  }
  std::sort(d.thin_visits.begin(), d.thin_visits.end(), [](const Chord& x, const Chord& y) { return x.t_in < y.t_in; });

  // each double point appears as two records; count the one whose own
  // branch comes first
  d.crossings = si.count;
  for (const auto& x : si.crossings)
    if (x.t < x.partner_t && !thin_at(tp, tp.axis.t(x.location))) ++d.thick_crossings;
  return d;
}

bool in_thin_part(const SurfaceModel& s, const CyclicWord& c, const ThickDecomposition& d, const Pointd& on_axis) {
  const auto tp = thin_part(s, c, d.eps);
  return thin_at(tp, tp.axis.t(on_axis));
}

ThickReport verify_thm_thick(const SurfaceModel& s, const CyclicWord& c, double eps, const IntersectionOptions& opt) {
  return verify_thm_thick(thick_decompose(s, c, eps, opt));
}

ThickReport verify_thm_thick(const ThickDecomposition& d) {
  const double eps = d.eps;
  ThickReport r;
  r.thick_length = d.thick_length;
  r.thick_crossings = d.thick_crossings;
  r.rhs = eps / 12 * std::sqrt(static_cast<double>(d.thick_crossings));
  r.margin = r.thick_length - r.rhs;
  r.theorem_ok = r.thick_length > r.rhs;
  // with a thin part every strand runs from boundary to boundary
  if (!d.thin_visits.empty()) {
    r.min_strand = std::numeric_limits<double>::infinity();
    for (const auto& st : d.strands) {
      ++r.bounded_strands;
      r.min_strand = std::min(r.min_strand, st.second - st.first);
    }
    if (r.bounded_strands == 0) r.min_strand = 0;
    r.strands_ok = r.bounded_strands == 0 || r.min_strand >= 0.75 - 1e-9;
  }
  return r;
}

std::vector<Chord> horoball_chords(const SurfaceModel& s, const CyclicWord& c, double horocycle_length) {
  const auto a = axis_param(s, c);
  std::vector<Chord> out;
  for (const auto& r : cusp_regions(s, a, horocycle_length)) {
    Chord ch = r.chord;
    ch.t_in = r.a;
    ch.t_out = r.b;
    out.push_back(ch);
  }
  std::sort(out.begin(), out.end(), [](const Chord& x, const Chord& y) { return x.t_in < y.t_in; });
  return out;
}

HoroballStrandReport horoball_strand_check(const SurfaceModel& s, const CyclicWord& c, double horocycle_length) {
  if (!(horocycle_length > 0 && horocycle_length < 2))
    throw Error(ErrorCode::InvalidArgument, "inner horocycle length must lie in (0, 2)");
  HoroballStrandReport r;
  r.horocycle_length = horocycle_length;
  r.min_chord = 2 * std::log(2 / horocycle_length);
  const double len = s.class_length(c);
  const auto outer = horoball_chords(s, c, 2);
  const auto inner = horoball_chords(s, c, horocycle_length);
  std::vector<double> starts;
  for (const auto& o : outer) {
    const bool reaches = std::any_of(inner.begin(), inner.end(), [&](const Chord& i) {
      return i.id == o.id && i.t_in >= o.t_in - 1e-9 && i.t_out <= o.t_out + 1e-9;
    });
    if (!reaches) continue;
    // the same surface strand can show up once at each end of σ
    const double key = wrap(o.t_in, len);
    if (std::any_of(starts.begin(), starts.end(), [&](double k) {
          return std::abs(k - key) < 1e-7 * std::max(1.0, len) ||
                 std::abs(std::abs(k - key) - len) < 1e-7 * std::max(1.0, len);
        }))
      continue;
    starts.push_back(key);
    r.strands.push_back(o);
  }
  r.shortest = r.strands.empty() ? 0 : std::numeric_limits<double>::infinity();
  for (const auto& st : r.strands) {
    r.shortest = std::min(r.shortest, st.length);
    if (st.length < r.min_chord - 1e-9) r.lengths_ok = false;
  }
  r.count_ok = static_cast<double>(r.strands.size()) < len / r.min_chord;
  return r;
}

double cusp_self_distance(const SurfaceModel& s, int vertex, const EnumBudget& budget) {
  const auto& v = s.cusp_vertices().at(static_cast<std::size_t>(vertex));
  const auto& N = v.normalizer;
  const auto Ninv = N.inverse();
  const double w = v.width;
  // Nearest translates touch the horocycle within one period of this point.
  const auto m = Ninv.apply(Pointd(w / 2, horocycle_height(v, 1)));
  for (double D = 2; D <= 38; D *= 2) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& h : ball_elements(s, m, D + 1, budget)) {
      const auto conj = N * h * Ninv;
      const double c = std::abs(conj(1, 0));
      if (c < 1e-9) continue;  // stabilizer of the cusp
      best = std::min(best, 2 * std::log(c * w));
    }
    if (best <= D) return best;
  }
  throw Error(ErrorCode::BudgetExceeded, "no horoball translate found within distance 38");
}

double cusp_C(const CuspConstants& k, double kk) { return 2 * std::asinh(kk) + k.d_X + 1; }

CuspConstants cusp_constants(const SurfaceModel& s, const ScanOptions& opt) {
  if (s.cusps().empty()) throw Error(ErrorCode::NoCusp, "surface " + s.name() + " has no cusp");
  CuspConstants k;
  k.d_X = std::numeric_limits<double>::infinity();
  for (const auto& c : s.cusps()) {
    k.d_per_cusp.push_back(cusp_self_distance(s, c.vertex, opt.budget));
    k.d_X = std::min(k.d_X, k.d_per_cusp.back());
  }

  // s: shortest class that never enters the ε′-thin part
  std::vector<std::string> checked;
  for (double L = opt.start; !k.s_witness; L += opt.step) {
    if (L > opt.budget.max_length) throw Error(ErrorCode::SearchExhausted, "no class stays in the thick part");
    const auto t = cached_classes(s, L, opt.budget, opt.cache_dir);
    if (t.completeness == Completeness::Heuristic) k.completeness = Completeness::Heuristic;
    for (const auto& row : t.rows) {
      const auto tp = thin_part(s, row.word, k.eps_prime);
      if (!tp.regions.empty()) continue;
      k.s = row.length;
      k.s_witness = row.word;
      break;
    }
  }
  k.eps = std::min(0.25, k.s / 2);

  // f(k) = (ε/12)√k − C(k) decreases, then increases for good once
  // ε·√(k²+1) > 48·√k
  const auto f = [&](double x) { return k.eps / 12 * std::sqrt(x) - cusp_C(k, x); };
  const auto rising = [&](double x) { return k.eps * std::sqrt(x * x + 1) > 48 * std::sqrt(x); };
  double km = 2;
  while (!rising(km)) km *= 2;
  if (f(km) > 0) {
    k.K = 2;
  } else {
    long lo = static_cast<long>(km), hi = lo;
    while (f(static_cast<double>(hi)) <= 0) hi *= 2;
    // largest n with f(n) <= 0 lies in [lo, hi)
    while (hi - lo > 1) {
      const long mid = lo + (hi - lo) / 2;
      (f(static_cast<double>(mid)) <= 0 ? lo : hi) = mid;
    }
    k.K = std::max(2L, lo);
  }
  const double K1 = static_cast<double>(k.K + 1);
  k.D = (cusp_C(k, K1) / std::log(2.0) - 1) / std::log(K1);
  return k;
}

}  // namespace geodlab
