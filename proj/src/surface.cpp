#include "geodlab/surface.hpp"

#include <charconv>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <algorithm>
#include <sstream>

#include "geodlab/error.hpp"

namespace geodlab {

namespace {

std::string format_length(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

bool same_boundary_point(const BoundaryPointd& a, const BoundaryPointd& b, double tol = 1e-9) {
  return std::abs(chordal_det(a, b)) < tol;
}

bool same_line(const GeodesicLined& l1, const GeodesicLined& l2, double tol = 1e-9) {
  return (same_boundary_point(l1.u, l2.u, tol) && same_boundary_point(l1.v, l2.v, tol)) ||
         (same_boundary_point(l1.u, l2.v, tol) && same_boundary_point(l1.v, l2.u, tol));
}

std::optional<BoundaryPointd> parabolic_fixed_point(const Isometryd& p) {
  if (classify(p).type != IsometryType::Parabolic) return std::nullopt;
  const auto& m = p.matrix();
  if (std::abs(m(1, 0)) < 1e-12) return BoundaryPointd::infinity();
  return BoundaryPointd::at((m(0, 0) - m(1, 1)) / (2 * m(1, 0)));
}

Isometryd normalizer_for(const BoundaryPointd& v) {
  if (v.is_infinite()) return Isometryd::identity();
  return Isometryd(0.0, -1.0, 1.0, -v.value());
}

// Visits every nonempty reduced word of length <= max_len with its value.
void for_each_reduced_word(const SurfaceModel& s, std::size_t max_len,
                           const std::function<void(const std::string&, const Isometryd&)>& fn) {
  std::string word;
  std::function<void(const Isometryd&)> rec = [&](const Isometryd& g) {
    if (!word.empty()) fn(word, g);
    if (word.size() == max_len) return;
    for (char c : kLetters) {
      if (!word.empty() && word.back() == inverse_letter(c)) continue;
      word.push_back(c);
      rec(g * s.letter(c));
      word.pop_back();
    }
  };
  rec(Isometryd::identity());
}

HalfPlane half_plane_containing(const GeodesicLined& line, const Pointd& inside_point) {
  return HalfPlane{line, side_of(inside_point, line)};
}


// Angle of a boundary point on the circle; increasing with x, ∞ at π.
double boundary_angle(const BoundaryPointd& p) {
  return p.is_infinite() ? std::numbers::pi : 2 * std::atan(p.value());
}

// Ideal boundary arc of a half-plane as (start, end) in increasing angle.
std::pair<BoundaryPointd, BoundaryPointd> ideal_arc(const HalfPlane& h) {
  const double u = h.line.u.value(), v = h.line.v.value();
  const double lo = std::min(u, v), hi = std::max(u, v);
  const Pointd below((lo + hi) / 2, (hi - lo) * 1e-3);
  if (h.contains(below)) return {BoundaryPointd::at(lo), BoundaryPointd::at(hi)};
  return {BoundaryPointd::at(hi), BoundaryPointd::at(lo)};
}

double signed_depth(const HalfPlane& h, const Pointd& p) {
  const double d = distance_to_line(p, h.line);
  return h.contains(p) ? d : -d;
}

// Compact polygon K ⊂ F containing F ∩ (convex core) for a funnel domain.
// The limit set lies in the arcs w(I_z) over reduced words wz of the given
// length; lines spanning the gaps between consecutive arcs bound its hull.
// Returns the vertices of F cut by those lines.
std::vector<Pointd> funnel_core(const SurfaceModel& s, std::size_t depth) {
  struct Arc {
    double start;
    BoundaryPointd lo, hi;
  };
  std::vector<Arc> arcs;
  for_each_reduced_word(s, depth, [&](const std::string& w, const Isometryd&) {
    if (w.size() != depth) return;
    const auto [lo, hi] = ideal_arc(s.half_plane(w.back()));
    const auto g = s.evaluate(std::string_view(w).substr(0, depth - 1));
    const auto a = g.apply(lo), b = g.apply(hi);
    arcs.push_back({boundary_angle(a), a, b});
  });
  std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) { return x.start < y.start; });
  std::vector<GeodesicLined> lines;
  std::vector<Pointd> inside;  // a point of ℍ on the kept side of each line
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const auto& next = arcs[(i + 1) % arcs.size()];
    lines.emplace_back(arcs[i].hi, next.lo);
  }
  std::vector<HalfPlane> bounds;
  for (const auto& h : s.half_planes()) bounds.push_back(HalfPlane{h.line, -h.inside});
  for (const auto& l : lines) {
    // keep the side containing the base point, which lies in the core
    const int side = side_of(s.base_point(), l);
    if (side == 0) throw Error(ErrorCode::DiscretenessCheckFailed, "base point on a hull line");
    bounds.push_back(HalfPlane{l, side});
  }
  std::vector<Pointd> vertices;
  for (std::size_t i = 0; i < bounds.size(); ++i)
    for (std::size_t j = i + 1; j < bounds.size(); ++j) {
      if (cross_test(bounds[i].line, bounds[j].line) != CrossResult::Cross) continue;
      const auto p = crossing_point(bounds[i].line, bounds[j].line);
      bool ok = true;
      for (std::size_t k = 0; k < bounds.size() && ok; ++k)
        if (k != i && k != j && signed_depth(bounds[k], p) < -1e-9) ok = false;
      if (ok) vertices.push_back(p);
    }
  if (vertices.size() < 3) throw Error(ErrorCode::DiscretenessCheckFailed, "core polygon degenerate");
  return vertices;
}

}  // namespace

SurfaceSpec parse_surface_spec(std::string_view text) {
  if (text == "x2") return X2Spec{};
  if (text == "modular-torus") return ModularTorusSpec{};
  if (text.starts_with("pants:")) {
    std::string rest(text.substr(6));
    std::array<double, 3> l{};
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
      const auto comma = rest.find(',', pos);
      const std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (tok.empty()) throw Error(ErrorCode::InvalidSpec, "bad pants spec: " + std::string(text));
      double v = 0;
      auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
        throw Error(ErrorCode::InvalidSpec, "bad cuff length: " + tok);
      l[static_cast<std::size_t>(i)] = v;
      if (i < 2) {
        if (comma == std::string::npos) throw Error(ErrorCode::InvalidSpec, "pants spec needs three lengths");
        pos = comma + 1;
      } else if (comma != std::string::npos) {
        throw Error(ErrorCode::InvalidSpec, "pants spec needs three lengths");
      }
    }
    return PantsSpec{l[0], l[1], l[2]};
  }
  throw Error(ErrorCode::InvalidSpec, "unknown surface: " + std::string(text));
}

std::string to_string(const SurfaceSpec& spec) {
  if (std::holds_alternative<X2Spec>(spec)) return "x2";
  if (std::holds_alternative<ModularTorusSpec>(spec)) return "modular-torus";
  const auto& p = std::get<PantsSpec>(spec);
  return "pants:" + format_length(p.l1) + "," + format_length(p.l2) + "," + format_length(p.l3);
}

Isometryd SurfaceModel::evaluate(std::string_view word) const {
  Isometryd g;
  for (char c : word) {
    if (!is_letter(c)) throw Error(ErrorCode::ParseError, "not a generator letter");
    g = g * letter(c);
  }
  g.set_word(std::string(word));
  return g;
}

double SurfaceModel::class_length(const CyclicWord& w) const {
  const auto c = classify(evaluate(w));
  if (c.type != IsometryType::Hyperbolic)
    throw Error(ErrorCode::NotGeodesic, "class " + w.letters() + " is not represented by a closed geodesic");
  return c.length;
}

bool SurfaceModel::in_domain(const Pointd& p) const {
  for (const auto& h : halfplanes_)
    if (h.contains(p)) return false;
  return true;
}

Isometryd SurfaceModel::reduce_to_domain(const Pointd& p, Pointd* f) const {
  Pointd q = p;
  std::string word;
  for (int iter = 0; iter < 100000; ++iter) {
    bool moved = false;
    for (char c : kLetters) {
      if (half_plane(c).contains(q)) {
        q = letter(inverse_letter(c)).apply(q);
        word.push_back(c);
        moved = true;
        break;
      }
    }
    if (!moved) {
      if (f) *f = q;
      return evaluate(free_reduce(word));
    }
  }
  throw Error(ErrorCode::BudgetExceeded, "point reduction did not terminate");
}

void SurfaceModel::find_cusp_vertices(const std::vector<BoundaryPointd>& ideal) {
  struct Candidate {
    std::string word;
    Isometryd g;
  };
  std::vector<std::vector<Candidate>> found(ideal.size());
  for_each_reduced_word(*this, 6, [&](const std::string& w, const Isometryd& g) {
    const auto fp = parabolic_fixed_point(g);
    if (!fp) return;
    for (std::size_t i = 0; i < ideal.size(); ++i)
      if (same_boundary_point(*fp, ideal[i])) found[i].push_back({w, g});
  });
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (found[i].empty()) throw Error(ErrorCode::DiscretenessCheckFailed, "no parabolic fixes an ideal vertex");
    CuspVertex cv;
    cv.point = ideal[i];
    cv.normalizer = normalizer_for(ideal[i]);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : found[i]) {
      const auto conj = cv.normalizer * c.g * cv.normalizer.inverse();
      const double width = std::abs(conj(0, 1) / conj(0, 0));
      if (width < best - 1e-9 || (std::abs(width - best) <= 1e-9 && c.word.size() < cv.parabolic.word().size())) {
        best = width;
        cv.parabolic = c.g;
        cv.parabolic.set_word(c.word);
      }
    }
    cv.width = best;
    vertices_.push_back(cv);
  }
  // Group vertices into cusps: equivalent iff a short word maps one to the other.
  std::vector<int> id(ideal.size(), -1);
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (id[i] >= 0) continue;
    id[i] = static_cast<int>(cusps_.size());
    cusps_.push_back(CuspInfo{CyclicWord::canonicalize(vertices_[i].parabolic.word()), static_cast<int>(i)});
    for_each_reduced_word(*this, 4, [&](const std::string&, const Isometryd& g) {
      const auto image = g.apply(ideal[i]);
      for (std::size_t j = i + 1; j < ideal.size(); ++j)
        if (id[j] < 0 && same_boundary_point(image, ideal[j])) id[j] = id[i];
    });
  }
  for (std::size_t i = 0; i < ideal.size(); ++i) vertices_[i].cusp = id[i];
}

void SurfaceModel::verify_domain() const {
  if (!in_domain(base_)) throw Error(ErrorCode::DiscretenessCheckFailed, "base point outside domain");
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const auto r = cross_test(halfplanes_[i].line, halfplanes_[j].line);
      if (r == CrossResult::Cross || r == CrossResult::Equal)
        throw Error(ErrorCode::DiscretenessCheckFailed, "domain sides intersect");
    }
  }
  for (char c : kLetters) {
    const auto& g = letter(c);
    if (!same_line(g * half_plane(inverse_letter(c)).line, half_plane(c).line))
      throw Error(ErrorCode::DiscretenessCheckFailed, std::string("generator does not pair sides: ") + c);
    if (!half_plane(c).contains(g.apply(base_)))
      throw Error(ErrorCode::DiscretenessCheckFailed, std::string("side pairing orientation wrong: ") + c);
  }
}

void SurfaceModel::verify_discreteness() const {
  bool ok = true;
  for_each_reduced_word(*this, 12, [&](const std::string&, const Isometryd& g) {
    const auto& m = g.matrix();
    const double off = std::max({std::abs(m(0, 0) - 1), std::abs(m(1, 1) - 1), std::abs(m(0, 1)), std::abs(m(1, 0))});
    if (off < 1e-6) ok = false;
  });
  if (!ok) throw Error(ErrorCode::DiscretenessCheckFailed, "a nontrivial short word evaluates to the identity");
}

void SurfaceModel::finish() {
  letters_[0] = gens_[0];
  letters_[1] = gens_[1];
  letters_[2] = gens_[0].inverse();
  letters_[3] = gens_[1].inverse();
  letters_[0].set_word("a");
  letters_[1].set_word("b");
  letters_[2].set_word("A");
  letters_[3].set_word("B");

  std::ostringstream fp;
  fp << name_;
  char buf[40];
  for (const auto& g : gens_) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        std::snprintf(buf, sizeof buf, " %.17g", g(i, j));
        fp << buf;
      }
  }
  fingerprint_ = fnv1a_hex(fp.str());
}

SurfaceModel make_surface(const SurfaceSpec& spec) {
  SurfaceModel s;
  s.spec_ = spec;
  s.name_ = to_string(spec);
  const auto inf = BoundaryPointd::infinity();
  const auto at = [](double x) { return BoundaryPointd::at(x); };

  if (std::holds_alternative<X2Spec>(spec) || std::holds_alternative<ModularTorusSpec>(spec)) {
    s.kind_ = SurfaceKind::Cusped;
    // Both groups use the ideal quadrilateral with vertices ∞, 1, 0, -1 and
    // the Farey-type sides x = ±1, |z ∓ 1/2| = 1/2.
    const GeodesicLined right(at(1), inf), left(at(-1), inf);
    const auto upper_right = GeodesicLined::through(0, 1), upper_left = GeodesicLined::through(-1, 0);
    const Pointd far_right(2, 1), far_left(-2, 1), low_right(0.5, 0.1), low_left(-0.5, 0.1);
    if (std::holds_alternative<X2Spec>(spec)) {
      s.gens_ = {Isometryd(1, 2, 0, 1), Isometryd(1, 0, 2, 1)};
      s.halfplanes_ = {half_plane_containing(right, far_right), half_plane_containing(upper_right, low_right),
                       half_plane_containing(left, far_left), half_plane_containing(upper_left, low_left)};
    } else {
      s.gens_ = {Isometryd(1, 1, 1, 2), Isometryd(1, -1, -1, 2)};
      s.halfplanes_ = {half_plane_containing(upper_right, low_right), half_plane_containing(upper_left, low_left),
                       half_plane_containing(left, far_left), half_plane_containing(right, far_right)};
    }
    s.finish();
    s.base_ = Pointd(0, 1);
    s.find_cusp_vertices({inf, at(1), at(0), at(-1)});
    // Core polygon: F with each cusp cut at its length-2 horocycle.
    for (const auto& v : s.vertices_) {
      const auto back = v.normalizer.inverse();
      for (const auto& h : s.halfplanes_) {
        const auto line = v.normalizer * h.line;
        if (!line.is_vertical()) continue;
        s.core_.push_back(back.apply(Pointd(line.foot(), v.width / 2)));
      }
    }
  } else {
    const auto p = std::get<PantsSpec>(spec);
    for (double l : {p.l1, p.l2, p.l3})
      if (!(l > 0) || !(l <= 20) || !std::isfinite(l))
        throw Error(ErrorCode::InvalidSpec, "pants cuff lengths must lie in (0, 20]");
    s.kind_ = SurfaceKind::GeodesicBoundary;
    const double h1 = p.l1 / 2, h2 = p.l2 / 2, h3 = p.l3 / 2;
    const double cosh_d = (std::cosh(h3) + std::cosh(h1) * std::cosh(h2)) / (std::sinh(h1) * std::sinh(h2));
    const double d = std::acosh(cosh_d);
    const Isometryd a(std::exp(h1), 0, 0, std::exp(-h1));
    const Isometryd shift(std::cosh(d / 2), std::sinh(d / 2), std::sinh(d / 2), std::cosh(d / 2));
    const double target = 2 * std::cosh(h3);
    // b translates along its axis in the direction making the product a·b
    // the third cuff; the other direction gives the figure eight.
    Isometryd b;
    int dir = 0;
    for (int sgn : {1, -1}) {
      const Isometryd diag(std::exp(sgn * h2), 0, 0, std::exp(-sgn * h2));
      const Isometryd cand = shift * diag * shift.inverse();
      if (std::abs(std::abs((a * cand).trace()) - target) < 1e-9 * target) {
        b = cand;
        dir = sgn;
        break;
      }
    }
    if (dir == 0) throw Error(ErrorCode::DiscretenessCheckFailed, "pants trace condition failed");
    s.gens_ = {a, b};
    const auto circle = [](double r) { return GeodesicLined::through(-r, r); };
    const double r1 = std::exp(h1), r2 = std::exp(h2);
    const auto side_b_out = shift * circle(r2), side_b_in = shift * circle(1 / r2);
    const Pointd b_out = shift.apply(Pointd(0, r2 * r2)), b_in = shift.apply(Pointd(0, 1 / (r2 * r2)));
    const HalfPlane hb_out = half_plane_containing(side_b_out, b_out);
    const HalfPlane hb_in = half_plane_containing(side_b_in, b_in);
    s.halfplanes_ = {half_plane_containing(circle(r1), Pointd(0, r1 * r1)), dir > 0 ? hb_out : hb_in,
                     half_plane_containing(circle(1 / r1), Pointd(0, 1 / (r1 * r1))), dir > 0 ? hb_in : hb_out};
    s.finish();
    const Isometryd half(std::cosh(d / 4), std::sinh(d / 4), std::sinh(d / 4), std::cosh(d / 4));
    s.base_ = half.apply(Pointd(0, 1));
    s.boundary_ = {CyclicWord::canonicalize("a"), CyclicWord::canonicalize("b"), CyclicWord::canonicalize("ab")};
    s.core_ = funnel_core(s, 4);
    if (std::abs(std::abs((s.gen_a() * s.gen_b()).trace()) - target) > 1e-9)
      throw Error(ErrorCode::DiscretenessCheckFailed, "pants product trace mismatch");
  }
  for (const auto& q : s.core_) s.core_radius_ = std::max(s.core_radius_, distance(s.base_, q));
  s.verify_domain();
  s.verify_discreteness();
  return s;
}

}  // namespace geodlab
