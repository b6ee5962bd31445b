#include "geodlab/constructions.hpp"

#include <cmath>

#include "geodlab/error.hpp"

namespace geodlab {

namespace {

bool hyperbolic(const Isometryd& h) { return classify(h).type == IsometryType::Hyperbolic; }

std::string power(const std::string& w, int n) {
  std::string out;
  const std::string unit = n >= 0 ? w : inverse_word(w);
  for (int i = 0; i < std::abs(n); ++i) out += unit;
  return out;
}

}  // namespace

CyclicWord figure_eight(const SurfaceModel& s, const Isometryd& u, const Isometryd& v,
                        const IntersectionOptions& opt) {
  if (!hyperbolic(u) || !hyperbolic(v))
    throw Error(ErrorCode::PreconditionFailed, "figure eight needs two hyperbolic elements");
  switch (cross_test(axis(u), axis(v))) {
    case CrossResult::Cross: break;
    case CrossResult::Equal:
    case CrossResult::Degenerate:
      throw Error(ErrorCode::PreconditionFailed, "axes of " + u.word() + " and " + v.word() + " share an endpoint");
    default:
      throw Error(ErrorCode::AxesDisjoint, "axes of " + u.word() + " and " + v.word() + " do not cross");
  }
  const auto cu = CyclicWord::canonicalize(u.word()), cv = CyclicWord::canonicalize(v.word());
  if (cu == cv) throw Error(ErrorCode::PreconditionFailed, "figure eight needs two distinct classes");
  if (self_intersections(s, cu, opt).count != 0 || self_intersections(s, cv, opt).count != 0)
    throw Error(ErrorCode::PreconditionFailed, "figure eight needs simple classes");
  if (pair_intersections(s, cu, cv, opt).count != 1)
    throw Error(ErrorCode::PreconditionFailed, "classes must meet exactly once");

  const auto w = CyclicWord::canonicalize(u.word() + v.word() + inverse_word(u.word()) + v.word());
  const double lu = classify(u).length, lv = classify(v).length;
  const double l = s.class_length(w);
  if (!(l < 2 * lu + 2 * lv - 1e-9))
    throw Error(ErrorCode::NotFigureEight, w.letters() + " is not shorter than 2ℓ(u)+2ℓ(v)");
  const int n = self_intersections(s, w, opt).count;
  if (n != 1)
    throw Error(ErrorCode::NotFigureEight, w.letters() + " has " + std::to_string(n) + " self-intersections");
  return w;
}

double loop_length(const Isometryd& h) {
  const auto c = classify(h);
  return c.type == IsometryType::Hyperbolic ? c.length : 0.0;
}

std::pair<Isometryd, Isometryd> split_at_crossing(const SurfaceModel& s, const CyclicWord& c, const Crossing& x) {
  const auto g = s.evaluate(c);
  const auto line = axis(g);
  const auto& h = x.partner;
  const double len = classify(g).length;
  const bool on_axis = distance_to_line(x.location, line) < 1e-7 &&
                       distance_to_line(h.inverse().apply(x.location), line) < 1e-7;
  const bool in_segment = x.t >= 0 && x.t < len && x.partner_t >= 0 && x.partner_t < len;
  if (!on_axis || !in_segment || h.word().empty())
    throw Error(ErrorCode::NormalizationFailed, "crossing does not belong to class " + c.letters());
  // h⁻¹·x is the other branch through the same point. Running from the
  // earlier branch to the later one is the deck move h, or g·h when x
  // itself comes first.
  const auto p = x.partner_t < x.t ? h : s.evaluate(free_reduce(c.letters() + h.word()));
  const auto q = s.evaluate(free_reduce(inverse_word(p.word()) + c.letters()));
  return {p, q};
}

LoopRemoval remove_loop(const SurfaceModel& s, const CyclicWord& c, const Crossing& x, Loop which) {
  const auto [p, q] = split_at_crossing(s, c, x);
  const auto& f = which == Loop::First ? p : q;
  LoopRemoval r;
  const auto cls = classify(f);
  if (cls.type == IsometryType::Parabolic) return r;
  if (cls.type != IsometryType::Hyperbolic)
    throw Error(ErrorCode::NotGeodesic, "loop " + f.word() + " is neither hyperbolic nor parabolic");
  r.cls = CyclicWord::canonicalize(f.word());
  r.length = cls.length;
  if (!(r.length < s.class_length(c)))
    throw Error(ErrorCode::NotGeodesic, "loop " + f.word() + " is not shorter than " + c.letters());
  return r;
}

CyclicWord generator_twist(const CyclicWord& c, Generator along, int power_) {
  const char fixed = along == Generator::A ? 'a' : 'b';
  const char moved = along == Generator::A ? 'b' : 'a';
  const std::string image = std::string(1, moved) + power(std::string(1, fixed), power_);
  std::string out;
  for (char ch : c.letters()) {
    if (ch == moved)
      out += image;
    else if (ch == inverse_letter(moved))
      out += inverse_word(image);
    else
      out += ch;
  }
  return CyclicWord::canonicalize(out);
}

std::string iterate(const CyclicWord& c, int m) {
  if (m < 2) throw Error(ErrorCode::PreconditionFailed, "iterate needs m >= 2");
  return power(c.letters(), m);
}

}  // namespace geodlab
