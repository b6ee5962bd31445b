#include "geodlab/cylinder.hpp"

#include <cmath>
#include <optional>
#include <random>

#include "geodlab/error.hpp"

namespace geodlab {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Boundary parameter of a point: log|z| on a hyperbolic cylinder, x on a
// parabolic one.
double param(const CylinderModel& c, const Pointd& z) {
  return c.core() == CylinderModel::Core::Hyperbolic ? std::log(std::hypot(z.x, z.y)) : z.x;
}

// Whether the open segments [p1,q1] ⊂ l1 and [p2,q2] ⊂ l2 meet.
bool segments_cross(const GeodesicLined& l1, const Pointd& p1, const Pointd& q1, const GeodesicLined& l2,
                    const Pointd& p2, const Pointd& q2) {
  switch (cross_test(l1, l2)) {
    case CrossResult::Disjoint:
    case CrossResult::Degenerate:  // asymptotic lines never meet inside
      return false;
    case CrossResult::Equal:
      throw Error(ErrorCode::DegenerateCrossing, "strands lie on one geodesic");
    case CrossResult::Cross: break;
  }
  const auto x = crossing_point(l1, l2);
  const auto inside = [&x](const GeodesicLined& l, const Pointd& p, const Pointd& q) {
    const auto f = standard_frame(l);
    const double a = std::log(f.apply(p).y), b = std::log(f.apply(q).y), s = std::log(f.apply(x).y);
    constexpr double eps = 1e-10;
    if (std::abs(s - a) < eps || std::abs(s - b) < eps)
      throw Error(ErrorCode::DegenerateCrossing, "strands cross at an endpoint");
    return (s - a) * (s - b) < 0;
  };
  // evaluate both so an endpoint touch on either side is reported
  const bool in1 = inside(l1, p1, q1);
  const bool in2 = inside(l2, p2, q2);
  return in1 && in2;
}

int raw_crossings(const CylinderModel& c, const Strand& s1, const Strand& s2, bool self) {
  const double a1 = param(c, s1.p), b1 = param(c, s1.q), a2 = param(c, s2.p), b2 = param(c, s2.q);
  const double lo1 = std::min(a1, b1), hi1 = std::max(a1, b1), lo2 = std::min(a2, b2), hi2 = std::max(a2, b2);
  const double T = c.period();
  const int n0 = static_cast<int>(std::ceil((lo1 - hi2) / T)) - 1;
  const int n1 = static_cast<int>(std::floor((hi1 - lo2) / T)) + 1;
  int count = 0;
  for (int n = n0; n <= n1; ++n) {
    if (self && n == 0) continue;
    const auto d = c.deck(n);
    if (segments_cross(s1.line, s1.p, s1.q, d * s2.line, d.apply(s2.p), d.apply(s2.q))) ++count;
  }
  return count;
}

}  // namespace

CylinderModel CylinderModel::hyperbolic(double length, double d_minus, double d_plus) {
  if (!(length > 0) || !(d_minus > 0) || !(d_plus > 0))
    throw Error(ErrorCode::InvalidArgument, "cylinder core length and boundary offsets must be positive");
  CylinderModel c;
  c.core_ = Core::Hyperbolic;
  c.period_ = length;
  c.minus_ = d_minus;
  c.plus_ = d_plus;
  return c;
}

CylinderModel CylinderModel::parabolic(double height) {
  if (!(height > 0)) throw Error(ErrorCode::InvalidArgument, "horocycle height must be positive");
  CylinderModel c;
  c.core_ = Core::Parabolic;
  c.period_ = 1;
  c.minus_ = height;
  c.plus_ = 0;
  return c;
}

Isometryd CylinderModel::deck(int n) const {
  if (core_ == Core::Parabolic) return Isometryd(1, n, 0, 1);
  const double h = n * period_ / 2;
  return Isometryd(std::exp(h), 0, 0, std::exp(-h));
}

Pointd CylinderModel::boundary_point(Side s, double t) const {
  if (core_ == Core::Parabolic) {
    if (s == Side::Plus) throw Error(ErrorCode::NotInCylinder, "a cusp region has one boundary horocycle");
    return {t, minus_};
  }
  const double d = offset(s), r = std::exp(t);
  const double x = r * std::tanh(d);
  return {s == Side::Minus ? -x : x, r / std::cosh(d)};
}

bool CylinderModel::on_boundary(const Pointd& p, Side s, double tol) const {
  if (core_ == Core::Parabolic) return s == Side::Minus && std::abs(p.y - minus_) <= tol * std::max(1.0, minus_);
  const double want = (s == Side::Minus ? -1 : 1) * std::sinh(offset(s));
  return std::abs(p.x / p.y - want) <= tol * std::max(1.0, std::abs(want));
}

Strand make_strand(const CylinderModel& c, Side from, double t_from, Side to, double t_to) {
  Strand s;
  s.from = from;
  s.to = to;
  s.t_from = t_from;
  s.t_to = t_to;
  s.p = c.boundary_point(from, t_from);
  s.q = c.boundary_point(to, t_to);
  if (from == to && t_from == t_to) throw Error(ErrorCode::NotInCylinder, "strand endpoints coincide");
  s.line = line_through(s.p, s.q);
  s.kind = from == to ? StrandKind::Returning : StrandKind::Crossing;
  return s;
}

double winding_number(const CylinderModel& c, const Strand& s) {
  if (!c.on_boundary(s.p, s.from) || !c.on_boundary(s.q, s.to))
    throw Error(ErrorCode::NotInCylinder, "strand endpoints are not on the cylinder boundary");
  return std::abs(param(c, s.q) - param(c, s.p)) / c.period();
}

int strand_intersections(const CylinderModel& c, const Strand& s1, const Strand& s2) {
  return raw_crossings(c, s1, s2, false);
}

int strand_intersections(const CylinderModel& c, const Strand& s) {
  const int raw = raw_crossings(c, s, s, true);
  if (raw % 2 != 0) throw Error(ErrorCode::OddCrossingParity, "odd raw self-crossing count of a strand");
  return raw / 2;
}

StrandConfig random_config(const CylinderModel& c, std::uint64_t seed) {
  if (c.core() != CylinderModel::Core::Hyperbolic)
    throw Error(ErrorCode::InvalidArgument, "random strand configurations need a hyperbolic core");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> start(0, c.period());
  std::uniform_real_distribution<double> wind(0, 3.5);
  std::uniform_real_distribution<double> wind_returning(0.01, 3.5);
  std::bernoulli_distribution coin;
  const auto sign = [&] { return coin(rng) ? 1.0 : -1.0; };
  const auto crossing = [&] {
    const double t = start(rng);
    return make_strand(c, Side::Minus, t, Side::Plus, t + sign() * wind(rng) * c.period());
  };
  const auto returning = [&] {
    const Side side = coin(rng) ? Side::Minus : Side::Plus;
    const double t = start(rng);
    return make_strand(c, side, t, side, t + sign() * wind_returning(rng) * c.period());
  };
  StrandConfig k;
  k.seed = seed;
  k.s1 = crossing();
  k.s2 = crossing();
  k.r1 = returning();
  k.r2 = returning();
  if (winding_number(c, k.s2) < winding_number(c, k.s1)) std::swap(k.s1, k.s2);
  if (winding_number(c, k.r2) < winding_number(c, k.r1)) std::swap(k.r1, k.r2);
  return k;
}

Lemma31Report verify_lemma31(const CylinderModel& c, int samples, std::uint64_t seed) {
  Lemma31Report rep;
  rep.core_length = c.period();
  rep.samples = std::max(samples, 0);
  rep.seed = seed;
  for (int i = 0; i < rep.samples; ++i) {
    std::uint64_t sub = splitmix(seed + static_cast<std::uint64_t>(i));
    for (;;) {
      const auto k = random_config(c, sub);
      const auto w = [&](const Strand& s) { return winding_number(c, s); };
      struct Result {
        int check;
        int count;
        double bound;
      };
      std::vector<Result> results;
      std::optional<std::pair<int, double>> sum_bound;
      try {
        results.push_back({0, strand_intersections(c, k.s1, k.r1), std::ceil(w(k.r1))});
        const int self1 = strand_intersections(c, k.r1), self2 = strand_intersections(c, k.r2);
        results.push_back({1, self1, std::ceil(w(k.r1))});
        results.push_back({1, self2, std::ceil(w(k.r2))});
        const int r12 = strand_intersections(c, k.r1, k.r2);
        results.push_back({2, r12, 2 * std::ceil(w(k.r1))});
        const int s12 = strand_intersections(c, k.s1, k.s2);
        results.push_back({3, s12, std::ceil(w(k.s1))});
        sum_bound = {s12, std::ceil(w(k.s1) + w(k.s2))};
        // crossing strands are simple, so only returning strands can be α-type
        const std::array<std::pair<const Strand*, int>, 2> returning{{{&k.r1, self1}, {&k.r2, self2}}};
        for (std::size_t a = 0; a < 2; ++a) {
          if (returning[a].second != 1) continue;
          const Strand& r = *returning[a].first;
          results.push_back({4, strand_intersections(c, r, k.s1), 4});
          results.push_back({4, strand_intersections(c, r, k.s2), 4});
          const auto& other = returning[1 - a];
          if (other.second <= 1) results.push_back({4, strand_intersections(c, r, *other.first), 4});
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DegenerateCrossing) throw;
        ++rep.resampled;
        sub = splitmix(sub);
        continue;
      }
      for (const auto& r : results) {
        ++rep.checked[static_cast<std::size_t>(r.check)];
        if (r.count <= r.bound) continue;
        ++rep.violated[static_cast<std::size_t>(r.check)];
        rep.violations.push_back({Lemma31Report::kChecks[static_cast<std::size_t>(r.check)], i, sub, r.count, r.bound});
      }
      ++rep.sum_bound_checked;
      if (sum_bound->first > sum_bound->second) ++rep.sum_bound_violated;
      break;
    }
  }
  return rep;
}

}  // namespace geodlab
