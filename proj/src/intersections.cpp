#include "geodlab/intersections.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "geodlab/error.hpp"

namespace geodlab {

namespace {

template <typename S>
struct AxisFrame {
  Isometry<S> g;
  S length{0};
  Isometry<S> frame;  // axis -> (0, ∞), g -> z ↦ e^ℓ z
  Isometry<S> frame_inv;
  std::string word;
};

template <typename S>
AxisFrame<S> axis_frame(const SurfaceModel& s, const CyclicWord& c) {
  auto g = evaluate_as<S>(s, c.letters());
  const auto cls = classify(g);
  if (cls.type != IsometryType::Hyperbolic)
    throw Error(ErrorCode::NotGeodesic, "class " + c.letters() + " is not hyperbolic");
  // Scale so that t = 0 is the foot of the perpendicular from the base
  // point; the canonical word's axis passes through F, so the segment near
  // t = 0 is well conditioned.
  auto f = standard_frame(axis(g));
  const auto b = f.apply(s.base_point().cast<S>());
  const S r = std::sqrt(std::hypot(b.x, b.y));
  f = Isometry<S>(S(1) / r, S(0), S(0), r) * f;
  return {g, cls.length, f, f.inverse(), c.letters()};
}

template <typename S>
S tolerance(Precision p, S length) {
  return (p == Precision::Extended ? S(1e-10) : S(1e-7)) * std::max(S(1), length);
}

// A lift of the partner axis, in the frame of the first axis.
template <typename S>
struct Lift {
  S p, q, t;
  Isometryd h;
};

// Endpoints (conj(0), conj(∞)) of conj = frame1 · h · frame2⁻¹; false when
// either is ∞ (the lift shares an endpoint with the first axis).
template <typename S>
bool lift_endpoints(const Isometry<S>& conj, S& p, S& q) {
  const S a = conj(0, 0), b = conj(0, 1), c = conj(1, 0), d = conj(1, 1);
  if (c == S(0) || d == S(0)) return false;
  p = b / d;
  q = a / c;
  return true;
}

std::string word_power(const std::string& w, long n) {
  std::string unit = n >= 0 ? w : inverse_word(w);
  std::string out;
  for (long i = 0; i < std::abs(n); ++i) out += unit;
  return out;
}

// For a cyclically reduced g the reduced words of ⟨g⟩ are exactly the
// powers of its word.
bool in_cyclic_subgroup(const std::string& h, const std::string& g) {
  if (h.empty()) return true;
  if (h.size() % g.size() != 0) return false;
  const long k = static_cast<long>(h.size() / g.size());
  return h == word_power(g, k) || h == word_power(g, -k);
}

struct Attempt {
  bool degenerate = false;
};

// Crossings of lifts of c2 (via frame2) with σ = [t0, t0 + ℓ1) on axis 1.
template <typename S>
Attempt collect_crossings(const SurfaceModel& s, const AxisFrame<S>& a1, const AxisFrame<S>& a2, double t0,
                          double radius, const Pointd& center, const Pointd& anchor, const IntersectionOptions& opt,
                          double partner_t0, std::vector<Crossing>& out) {
  const S tau = tolerance(opt.precision, a1.length);
  const S lo = S(t0), hi = S(t0) + a1.length;
  std::vector<Lift<S>> lifts;
  auto elements = ball_elements(s, center, anchor, radius, opt.budget);
  // for two distinct classes the untranslated partner axis counts too
  if (a1.word != a2.word) elements.insert(elements.begin(), Isometryd(Eigen::Matrix2d::Identity(), ""));
  for (const auto& h : elements) {
    if (a1.word == a2.word && in_cyclic_subgroup(h.word(), a1.word)) continue;
    const auto H = evaluate_as<S>(s, h.word());
    S p{0}, q{0};
    if (!lift_endpoints(a1.frame * H * a2.frame_inv, p, q)) continue;
    if (!(p * q < S(0))) continue;
    const S t = std::log(-p * q) / S(2);
    if (std::abs(t - lo) < tau || std::abs(t - hi) < tau) return {true};
    if (t < lo || t >= hi) continue;
    lifts.push_back({p, q, t, h});
  }
  std::sort(lifts.begin(), lifts.end(), [](const Lift<S>& x, const Lift<S>& y) { return x.t < y.t; });
  out.clear();
  // h and h·g^n give the same line; the normalized coset word is an exact key
  std::set<std::string> seen;
  for (const auto& l : lifts) {
    const auto H = evaluate_as<S>(s, l.h.word());
    const auto back = a2.frame * H.inverse() * a1.frame_inv;
    const auto z = back.apply(Point<S>(S(0), std::exp(l.t)));
    const S u = std::log(std::hypot(z.x, z.y));
    const S shift = std::floor((u - S(partner_t0)) / a2.length);
    const S partner_t = u - shift * a2.length;
    const long n = static_cast<long>(shift);
    auto word = free_reduce(l.h.word() + word_power(a2.word, n));
    if (!seen.insert(word).second) continue;
    Crossing c;
    c.t = static_cast<double>(l.t - lo);
    c.partner = evaluate_as<double>(s, word);
    c.location = a1.frame_inv.template cast<double>().apply(Pointd(0, std::exp(static_cast<double>(l.t))));
    c.partner_t = static_cast<double>(partner_t - S(partner_t0));
    out.push_back(std::move(c));
  }
  return {};
}

template <typename S>
SelfIntersections self_impl(const SurfaceModel& s, const CyclicWord& c, const IntersectionOptions& opt) {
  if (!c.is_primitive()) throw Error(ErrorCode::PreconditionFailed, "class " + c.letters() + " is not primitive");
  const auto a = axis_frame<S>(s, c);
  const double len = static_cast<double>(a.length);
  const auto frame_inv = a.frame_inv.template cast<double>();
  std::mt19937_64 rng(class_seed(opt.seed, c.letters()));
  std::uniform_real_distribution<double> offset(-len / 2 - 0.5, -len / 2 + 0.5);
  bool odd = false;
  for (int attempt = 1; attempt <= opt.retries + 1; ++attempt) {
    SelfIntersections r;
    r.t0 = offset(rng);
    r.attempts = attempt;
    const auto mid = frame_inv.apply(Pointd(0, std::exp(r.t0 + len / 2)));
    const auto res = collect_crossings(s, a, a, r.t0, len + opt.margin, mid, mid, opt, r.t0, r.crossings);
    if (res.degenerate) continue;
    // each surface point appears once per branch: partner parameters are a
    // permutation of the crossing parameters
    std::vector<double> ts, us;
    for (const auto& x : r.crossings) {
      ts.push_back(x.t);
      us.push_back(x.partner_t);
    }
    std::sort(us.begin(), us.end());
    bool paired = true;
    for (std::size_t i = 0; i < ts.size(); ++i)
      if (std::abs(ts[i] - us[i]) > 1e-6 * std::max(1.0, len)) paired = false;
    if (ts.size() % 2 != 0) {
      odd = true;
      continue;
    }
    if (!paired) continue;
    r.count = static_cast<int>(r.crossings.size() / 2);
    return r;
  }
  if (odd) throw Error(ErrorCode::OddCrossingParity, "odd crossing count for " + c.letters());
  throw Error(ErrorCode::DegenerateCrossing,
              "degenerate crossings for " + c.letters() + " after retries; try --precision high");
}

template <typename S>
int linking_impl(const SurfaceModel& s, const CyclicWord& c, const IntersectionOptions& opt) {
  if (!c.is_primitive()) throw Error(ErrorCode::PreconditionFailed, "class " + c.letters() + " is not primitive");
  const auto a = axis_frame<S>(s, c);
  const auto line = axis(a.g);
  const double len = static_cast<double>(a.length);
  const S tau = tolerance(opt.precision, a.length);
  std::mt19937_64 rng(class_seed(opt.seed, c.letters()));
  std::uniform_real_distribution<double> offset(-len / 2 - 0.5, -len / 2 + 0.5);
  bool odd = false;
  for (int attempt = 1; attempt <= opt.retries + 1; ++attempt) {
    const double t0 = offset(rng);
    const auto start = a.frame_inv.template cast<double>().apply(Pointd(0, std::exp(t0)));
    std::set<std::string> keys;
    bool degenerate = false;
    for (const auto& h : ball_elements(s, start, len + opt.margin, opt.budget)) {
      if (in_cyclic_subgroup(h.word(), a.word)) continue;
      const auto H = evaluate_as<S>(s, h.word());
      const auto image = H * line;
      const auto r = cross_test(line, image);
      if (r == CrossResult::Degenerate) {
        degenerate = true;
        break;
      }
      if (r != CrossResult::Cross) continue;
      const auto e1 = a.frame.apply(image.u), e2 = a.frame.apply(image.v);
      const S t = std::log(-e1.value() * e2.value()) / S(2);
      const S n = std::floor((t - S(t0)) / a.length);
      const S tn = t - n * a.length;
      if (std::abs(tn - S(t0)) < tau || std::abs(tn - S(t0) - a.length) < tau) {
        degenerate = true;
        break;
      }
      // The orbit of a line under <g> is keyed exactly by g^-n·h·g^m, with
      // m bringing the preimage of the crossing into σ as well. Endpoints of
      // lines that fellow-travel the axis are too inaccurate to compare.
      const auto x = a.frame_inv.apply(Point<S>(S(0), std::exp(t)));
      const S u = std::log(a.frame.apply(H.inverse().apply(x)).y);
      const S m = std::floor((u - S(t0)) / a.length);
      const S um = u - m * a.length;
      if (std::abs(um - S(t0)) < tau || std::abs(um - S(t0) - a.length) < tau) {
        degenerate = true;
        break;
      }
      keys.insert(free_reduce(word_power(a.word, -static_cast<long>(n)) + h.word() +
                              word_power(a.word, static_cast<long>(m))));
    }
    if (degenerate) continue;
    if (keys.size() % 2 != 0) {
      odd = true;
      continue;
    }
    return static_cast<int>(keys.size() / 2);
  }
  if (odd) throw Error(ErrorCode::OddCrossingParity, "odd linking count for " + c.letters());
  throw Error(ErrorCode::DegenerateCrossing, "degenerate linking for " + c.letters() + " after retries");
}

template <typename S>
PairIntersections pair_impl(const SurfaceModel& s, const CyclicWord& c1, const CyclicWord& c2,
                            const IntersectionOptions& opt) {
  if (c1 == c2) throw Error(ErrorCode::PreconditionFailed, "pair intersection needs two distinct classes");
  const auto a1 = axis_frame<S>(s, c1);
  const auto a2 = axis_frame<S>(s, c2);
  const double l1 = static_cast<double>(a1.length), l2 = static_cast<double>(a2.length);
  const auto anchor = a2.frame_inv.template cast<double>().apply(Pointd(0, 1));
  std::mt19937_64 rng(class_seed(opt.seed, c1.letters() + "|" + c2.letters()));
  std::uniform_real_distribution<double> offset(-l1 / 2 - 0.5, -l1 / 2 + 0.5);
  std::uniform_real_distribution<double> jitter(-0.5, 0.5);
  for (int attempt = 1; attempt <= opt.retries + 1; ++attempt) {
    PairIntersections r;
    r.t0 = offset(rng);
    const auto mid = a1.frame_inv.template cast<double>().apply(Pointd(0, std::exp(r.t0 + l1 / 2)));
    const auto res =
        collect_crossings(s, a1, a2, r.t0, (l1 + l2) / 2 + opt.margin + 0.5, mid, anchor, opt, -l2 / 2 + jitter(rng), r.crossings);
    if (res.degenerate) continue;
    r.count = static_cast<int>(r.crossings.size());
    return r;
  }
  throw Error(ErrorCode::DegenerateCrossing, "degenerate pair crossings after retries; try --precision high");
}

}  // namespace

std::uint64_t class_seed(std::uint64_t seed, std::string_view word) {
  std::uint64_t h = 1469598103934665603ULL;
  for (int i = 0; i < 8; ++i) {
    h ^= (seed >> (8 * i)) & 0xff;
    h *= 1099511628211ULL;
  }
  for (unsigned char c : word) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

SelfIntersections self_intersections(const SurfaceModel& s, const CyclicWord& c, const IntersectionOptions& opt) {
  if (opt.precision == Precision::Extended) return self_impl<long double>(s, c, opt);
  return self_impl<double>(s, c, opt);
}

int self_intersections_linking(const SurfaceModel& s, const CyclicWord& c, const IntersectionOptions& opt) {
  if (opt.precision == Precision::Extended) return linking_impl<long double>(s, c, opt);
  return linking_impl<double>(s, c, opt);
}

PairIntersections pair_intersections(const SurfaceModel& s, const CyclicWord& c1, const CyclicWord& c2,
                                     const IntersectionOptions& opt) {
  if (opt.precision == Precision::Extended) return pair_impl<long double>(s, c1, c2, opt);
  return pair_impl<double>(s, c1, c2, opt);
}

bool is_simple(const SurfaceModel& s, const CyclicWord& c, const IntersectionOptions& opt) {
  return self_intersections(s, c, opt).count == 0;
}

}  // namespace geodlab
