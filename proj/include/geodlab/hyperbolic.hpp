#pragma once

// Geometry of the hyperbolic plane in the upper half-plane model.
//
// Everything here is templated on the scalar type so that the same code runs
// in double or long double. The `d` / `ld` aliases at the bottom mirror the
// naming used by Eigen's fixed-size types.

#include <Eigen/Core>
#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "geodlab/error.hpp"

namespace geodlab {

template <typename Scalar>
struct Tolerances {
  Scalar classify = Scalar(1e-9);
  Scalar degenerate = Scalar(1e-10);
};

template <typename Scalar>
using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;

template <typename Scalar>
struct Point {
  Scalar x{0};
  Scalar y{1};

  Point() = default;
  Point(Scalar x_, Scalar y_) : x(x_), y(y_) {
    if (!(y > Scalar(0))) throw Error(ErrorCode::InvalidArgument, "point must satisfy y > 0");
  }

  template <typename Other>
  Point<Other> cast() const {
    return Point<Other>(Other(x), Other(y));
  }
};

/// A point of R ∪ {∞}. Infinity is a flag, never a large float.
template <typename Scalar>
class BoundaryPoint {
 public:
  BoundaryPoint() = default;
  static BoundaryPoint infinity() {
    BoundaryPoint p;
    p.infinite_ = true;
    return p;
  }
  static BoundaryPoint at(Scalar x) {
    BoundaryPoint p;
    p.x_ = x;
    return p;
  }

  bool is_infinite() const { return infinite_; }
  Scalar value() const { return x_; }

  // Unit-norm homogeneous coordinates (x, 1)/|.| or (1, 0).
  Eigen::Matrix<Scalar, 2, 1> homogeneous() const {
    if (infinite_) return {Scalar(1), Scalar(0)};
    const Scalar n = std::sqrt(Scalar(1) + x_ * x_);
    return {x_ / n, Scalar(1) / n};
  }

 private:
  bool infinite_ = false;
  Scalar x_{0};
};

// Signed chordal determinant of two boundary points on the Riemann circle.
template <typename Scalar>
Scalar chordal_det(const BoundaryPoint<Scalar>& a, const BoundaryPoint<Scalar>& b) {
  const auto ha = a.homogeneous();
  const auto hb = b.homogeneous();
  return ha(0) * hb(1) - ha(1) * hb(0);
}

template <typename Scalar>
class Isometry {
 public:
  Isometry() : m_(Matrix2<Scalar>::Identity()) {}
  explicit Isometry(const Matrix2<Scalar>& m, std::string word = {}) : m_(m), word_(std::move(word)) {
    normalize();
  }
  Isometry(Scalar a, Scalar b, Scalar c, Scalar d, std::string word = {}) : word_(std::move(word)) {
    m_ << a, b, c, d;
    normalize();
  }

  static Isometry identity() { return Isometry(); }

  const Matrix2<Scalar>& matrix() const { return m_; }
  Scalar operator()(int i, int j) const { return m_(i, j); }
  const std::string& word() const { return word_; }
  void set_word(std::string w) { word_ = std::move(w); }

  Scalar trace() const { return m_(0, 0) + m_(1, 1); }
  Scalar det() const { return m_.determinant(); }

  // Inverse of a unit-determinant matrix; the word label is not inverted.
  Isometry inverse() const {
    Isometry r;
    r.m_ << m_(1, 1), -m_(0, 1), -m_(1, 0), m_(0, 0);
    return r;
  }

  Isometry operator*(const Isometry& o) const {
    Isometry r;
    r.m_ = m_ * o.m_;
    r.fix_sign();
    if (!word_.empty() || !o.word_.empty()) r.word_ = word_ + o.word_;
    return r;
  }

  Point<Scalar> apply(const Point<Scalar>& p) const {
    // (a z + b) / (c z + d) with z = x + i y
    const Scalar a = m_(0, 0), b = m_(0, 1), c = m_(1, 0), d = m_(1, 1);
    const Scalar den_re = c * p.x + d;
    const Scalar den_im = c * p.y;
    const Scalar den = den_re * den_re + den_im * den_im;
    const Scalar num_re = a * p.x + b;
    const Scalar num_im = a * p.y;
    const Scalar x = (num_re * den_re + num_im * den_im) / den;
    const Scalar y = (num_im * den_re - num_re * den_im) / den;
    return Point<Scalar>(x, std::max(y, std::numeric_limits<Scalar>::min()));
  }

  BoundaryPoint<Scalar> apply(const BoundaryPoint<Scalar>& p) const {
    const Scalar a = m_(0, 0), b = m_(0, 1), c = m_(1, 0), d = m_(1, 1);
    if (p.is_infinite()) {
      if (c == Scalar(0)) return BoundaryPoint<Scalar>::infinity();
      return BoundaryPoint<Scalar>::at(a / c);
    }
    const Scalar den = c * p.value() + d;
    if (den == Scalar(0)) return BoundaryPoint<Scalar>::infinity();
    return BoundaryPoint<Scalar>::at((a * p.value() + b) / den);
  }

  template <typename Other>
  Isometry<Other> cast() const {
    return Isometry<Other>(m_.template cast<Other>(), word_);
  }

 private:
  void normalize() {
    const Scalar dt = m_.determinant();
    if (!(dt > Scalar(0))) throw Error(ErrorCode::InvalidArgument, "isometry needs positive determinant");
    m_ /= std::sqrt(dt);
    fix_sign();
  }
  void fix_sign() {
    if (m_(0, 0) + m_(1, 1) < Scalar(0)) m_ = -m_;
  }

  Matrix2<Scalar> m_;
  std::string word_;
};

enum class IsometryType { Identity, Elliptic, Parabolic, Hyperbolic };

template <typename Scalar>
struct Classification {
  IsometryType type;
  Scalar length{0};  // translation length, hyperbolic only
};

template <typename Scalar>
Scalar translation_length(Scalar abs_trace) {
  return Scalar(2) * std::acosh(std::max(abs_trace, Scalar(2)) / Scalar(2));
}

template <typename Scalar>
Classification<Scalar> classify(const Isometry<Scalar>& t, const Tolerances<Scalar>& tol = {}) {
  const auto& m = t.matrix();
  const Scalar off = std::max({std::abs(std::abs(m(0, 0)) - 1), std::abs(std::abs(m(1, 1)) - 1),
                               std::abs(m(0, 1)), std::abs(m(1, 0))});
  if (off <= tol.classify && m(0, 0) * m(1, 1) > 0) return {IsometryType::Identity, 0};
  const Scalar tr = std::abs(t.trace());
  if (tr > Scalar(2) + tol.classify) return {IsometryType::Hyperbolic, translation_length(tr)};
  if (tr < Scalar(2) - tol.classify) return {IsometryType::Elliptic, 0};
  return {IsometryType::Parabolic, 0};
}

/// Unoriented geodesic line. Lines produced by `axis` are stored oriented
/// from the repelling (`u`) to the attracting (`v`) fixed point.
template <typename Scalar>
struct GeodesicLine {
  BoundaryPoint<Scalar> u;
  BoundaryPoint<Scalar> v;

  GeodesicLine() = default;
  GeodesicLine(BoundaryPoint<Scalar> a, BoundaryPoint<Scalar> b) : u(a), v(b) {
    if (a.is_infinite() && b.is_infinite()) throw Error(ErrorCode::InvalidArgument, "degenerate geodesic line");
    if (!a.is_infinite() && !b.is_infinite() && a.value() == b.value())
      throw Error(ErrorCode::InvalidArgument, "degenerate geodesic line");
  }
  static GeodesicLine through(Scalar a, Scalar b) {
    return GeodesicLine(BoundaryPoint<Scalar>::at(a), BoundaryPoint<Scalar>::at(b));
  }
  static GeodesicLine vertical(Scalar a) {
    return GeodesicLine(BoundaryPoint<Scalar>::at(a), BoundaryPoint<Scalar>::infinity());
  }

  bool is_vertical() const { return u.is_infinite() || v.is_infinite(); }
  Scalar foot() const { return u.is_infinite() ? v.value() : u.value(); }
  Scalar center() const { return (u.value() + v.value()) / Scalar(2); }
  Scalar radius() const { return std::abs(u.value() - v.value()) / Scalar(2); }
};

template <typename Scalar>
GeodesicLine<Scalar> operator*(const Isometry<Scalar>& t, const GeodesicLine<Scalar>& l) {
  return GeodesicLine<Scalar>(t.apply(l.u), t.apply(l.v));
}

/// Fixed points of a hyperbolic isometry, ordered (repelling, attracting).
template <typename Scalar>
GeodesicLine<Scalar> axis(const Isometry<Scalar>& t, const Tolerances<Scalar>& tol = {}) {
  if (classify(t, tol).type != IsometryType::Hyperbolic)
    throw Error(ErrorCode::NotHyperbolic, "axis requires a hyperbolic isometry");
  const auto& m = t.matrix();
  const Scalar a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  const Scalar tr = a + d;
  if (c == Scalar(0)) {
    // z -> (a z + b) / d fixes ∞ and b / (d - a).
    const auto finite = BoundaryPoint<Scalar>::at(b / (d - a));
    const auto inf = BoundaryPoint<Scalar>::infinity();
    // |a| > |d| means ∞ attracts.
    return std::abs(a) > std::abs(d) ? GeodesicLine<Scalar>(finite, inf) : GeodesicLine<Scalar>(inf, finite);
  }
  // c z^2 + (d - a) z - b = 0
  const Scalar disc = std::sqrt(tr * tr - Scalar(4));
  const Scalar z1 = ((a - d) + disc) / (Scalar(2) * c);
  const Scalar z2 = ((a - d) - disc) / (Scalar(2) * c);
  // Derivative at a fixed point z is 1/(c z + d)^2; attracting iff |c z + d| > 1.
  const Scalar k1 = std::abs(c * z1 + d);
  return k1 > Scalar(1) ? GeodesicLine<Scalar>::through(z2, z1) : GeodesicLine<Scalar>::through(z1, z2);
}

template <typename Scalar>
Scalar cosh_distance(const Point<Scalar>& p, const Point<Scalar>& q) {
  const Scalar dx = p.x - q.x;
  const Scalar dy = p.y - q.y;
  return Scalar(1) + (dx * dx + dy * dy) / (Scalar(2) * p.y * q.y);
}

template <typename Scalar>
Scalar distance(const Point<Scalar>& p, const Point<Scalar>& q) {
  // 2 asinh(|p - q| / (2 sqrt(y_p y_q))) is the cancellation-free form.
  const Scalar dx = p.x - q.x;
  const Scalar dy = p.y - q.y;
  return Scalar(2) * std::asinh(std::sqrt(dx * dx + dy * dy) / (Scalar(2) * std::sqrt(p.y * q.y)));
}

/// Isometry sending `line` to the imaginary axis with u -> 0 and v -> ∞.
template <typename Scalar>
Isometry<Scalar> standard_frame(const GeodesicLine<Scalar>& line) {
  if (line.v.is_infinite()) return Isometry<Scalar>(1, -line.u.value(), 0, 1);
  if (line.u.is_infinite()) return Isometry<Scalar>(0, -1, 1, -line.v.value());
  // z -> (z - u) / (z - v) up to orientation: sends u -> 0, v -> ∞.
  const Scalar u = line.u.value(), v = line.v.value();
  if (v > u) return Isometry<Scalar>(Scalar(-1), u, Scalar(1), -v);
  return Isometry<Scalar>(Scalar(1), -u, Scalar(1), -v);
}

/// The geodesic line through two distinct points.
template <typename Scalar>
GeodesicLine<Scalar> line_through(const Point<Scalar>& p, const Point<Scalar>& q) {
  if (p.x == q.x) return GeodesicLine<Scalar>::vertical(p.x);
  const Scalar c = (p.x * p.x + p.y * p.y - q.x * q.x - q.y * q.y) / (Scalar(2) * (p.x - q.x));
  const Scalar r = std::hypot(p.x - c, p.y);
  return GeodesicLine<Scalar>::through(c - r, c + r);
}

/// Hyperbolic distance from `p` to a geodesic line.
template <typename Scalar>
Scalar distance_to_line(const Point<Scalar>& p, const GeodesicLine<Scalar>& l) {
  if (l.is_vertical()) return std::asinh(std::abs(p.x - l.foot()) / p.y);
  const Scalar c = l.center(), r = l.radius();
  const Scalar dx = p.x - c;
  return std::asinh(std::abs(dx * dx + p.y * p.y - r * r) / (Scalar(2) * r * p.y));
}

/// Side of `p` relative to `l`: +1 above the half-circle (or right of a
/// vertical line), -1 otherwise, 0 on the line.
template <typename Scalar>
int side_of(const Point<Scalar>& p, const GeodesicLine<Scalar>& l) {
  Scalar s;
  if (l.is_vertical()) {
    s = p.x - l.foot();
  } else {
    const Scalar dx = p.x - l.center();
    s = dx * dx + p.y * p.y - l.radius() * l.radius();
  }
  return (s > 0) - (s < 0);
}

enum class CrossResult { Cross, Disjoint, Equal, Degenerate };

namespace detail {
template <typename Scalar>
int cyclic_orientation(const BoundaryPoint<Scalar>& a, const BoundaryPoint<Scalar>& b, const BoundaryPoint<Scalar>& c) {
  const Scalar s = chordal_det(a, b) * chordal_det(b, c) * chordal_det(c, a);
  return (s > 0) - (s < 0);
}
template <typename Scalar>
bool coincide(const BoundaryPoint<Scalar>& a, const BoundaryPoint<Scalar>& b, Scalar tol) {
  return std::abs(chordal_det(a, b)) < tol;
}
}  // namespace detail

/// Circle-linking test of two geodesic lines.
template <typename Scalar>
CrossResult cross_test(const GeodesicLine<Scalar>& l1, const GeodesicLine<Scalar>& l2, const Tolerances<Scalar>& tol = {}) {
  using detail::coincide;
  const bool uu = coincide(l1.u, l2.u, tol.degenerate), uv = coincide(l1.u, l2.v, tol.degenerate);
  const bool vu = coincide(l1.v, l2.u, tol.degenerate), vv = coincide(l1.v, l2.v, tol.degenerate);
  if ((uu && vv) || (uv && vu)) return CrossResult::Equal;
  if (uu || uv || vu || vv) return CrossResult::Degenerate;
  const int o1 = detail::cyclic_orientation(l1.u, l2.u, l1.v);
  const int o2 = detail::cyclic_orientation(l1.u, l2.v, l1.v);
  return o1 * o2 < 0 ? CrossResult::Cross : CrossResult::Disjoint;
}

template <typename Scalar>
Point<Scalar> crossing_point(const GeodesicLine<Scalar>& l1, const GeodesicLine<Scalar>& l2,
                             const Tolerances<Scalar>& tol = {}) {
  if (cross_test(l1, l2, tol) != CrossResult::Cross)
    throw Error(ErrorCode::NoCrossing, "geodesic lines do not cross");
  const auto frame = standard_frame(l1);
  const auto image = frame * l2;
  // image endpoints are finite and of opposite sign
  const Scalar p = image.u.value(), q = image.v.value();
  const Point<Scalar> z(Scalar(0), std::sqrt(-p * q));
  return frame.inverse().apply(z);
}

/// Horoball based at ∞ (parameter = height) or at a real point (parameter =
/// Euclidean diameter).
template <typename Scalar>
struct Horoball {
  BoundaryPoint<Scalar> base;
  Scalar size{1};

  Horoball() = default;
  Horoball(BoundaryPoint<Scalar> b, Scalar s) : base(b), size(s) {
    if (!(s > Scalar(0))) throw Error(ErrorCode::InvalidArgument, "horoball size must be positive");
  }

  bool contains(const Point<Scalar>& p) const {
    if (base.is_infinite()) return p.y > size;
    const Scalar r = size / Scalar(2);
    const Scalar dx = p.x - base.value(), dy = p.y - r;
    return dx * dx + dy * dy < r * r;
  }
};

/// Image of a horoball under an isometry.
template <typename Scalar>
Horoball<Scalar> operator*(const Isometry<Scalar>& t, const Horoball<Scalar>& h) {
  const auto& m = t.matrix();
  const Scalar a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  if (h.base.is_infinite()) {
    if (c == Scalar(0)) return {BoundaryPoint<Scalar>::infinity(), h.size * a * a};
    // {y > H} maps to the disk tangent at a/c of diameter 1/(c^2 H).
    return {BoundaryPoint<Scalar>::at(a / c), Scalar(1) / (c * c * h.size)};
  }
  const Scalar xi = h.base.value();
  const Scalar den = c * xi + d;
  // Conjugate through w = -1/(z - xi), where the horoball is {Im w > 1/size}.
  if (den == Scalar(0)) return {BoundaryPoint<Scalar>::infinity(), Scalar(1) / (h.size * c * c)};
  const Scalar image = (a * xi + b) / den;
  // derivative of the Möbius map at xi is 1/den^2; diameters scale by it.
  return {BoundaryPoint<Scalar>::at(image), h.size / (den * den)};
}

template <typename Scalar>
struct HoroChord {
  Point<Scalar> entry;
  Point<Scalar> exit;
  Scalar length{0};
  bool unbounded = false;  // the line ends at the horoball's base point
};

/// Intersection of a geodesic line with an open horoball.
template <typename Scalar>
std::optional<HoroChord<Scalar>> horoball_meet(const GeodesicLine<Scalar>& l, const Horoball<Scalar>& h) {
  if (!h.base.is_infinite()) {
    const Scalar xi = h.base.value();
    const Isometry<Scalar> to_inf(Scalar(0), Scalar(-1), Scalar(1), -xi);
    const auto back = to_inf.inverse();
    const Horoball<Scalar> up(BoundaryPoint<Scalar>::infinity(), Scalar(1) / h.size);
    auto r = horoball_meet(to_inf * l, up);
    if (!r) return r;
    r->entry = back.apply(r->entry);
    if (!r->unbounded) r->exit = back.apply(r->exit);
    return r;
  }
  const Scalar height = h.size;
  if (l.is_vertical()) {
    HoroChord<Scalar> c;
    c.entry = Point<Scalar>(l.foot(), height);
    c.exit = c.entry;
    c.length = std::numeric_limits<Scalar>::infinity();
    c.unbounded = true;
    return c;
  }
  const Scalar r = l.radius();
  if (r <= height) return std::nullopt;
  const Scalar half = std::sqrt(r * r - height * height);
  HoroChord<Scalar> c;
  c.entry = Point<Scalar>(l.center() - half, height);
  c.exit = Point<Scalar>(l.center() + half, height);
  c.length = distance(c.entry, c.exit);
  return c;
}

/// Feet of the common perpendicular of two ultraparallel lines.
template <typename Scalar>
std::pair<Point<Scalar>, Point<Scalar>> common_perpendicular(const GeodesicLine<Scalar>& l1,
                                                             const GeodesicLine<Scalar>& l2) {
  const auto frame = standard_frame(l1);
  const auto back = frame.inverse();
  const auto image = frame * l2;
  if (image.is_vertical()) throw Error(ErrorCode::InvalidArgument, "lines share an endpoint");
  const Scalar p = image.u.value(), q = image.v.value();
  if (p * q <= 0) throw Error(ErrorCode::InvalidArgument, "lines are not ultraparallel");
  const Scalar rho2 = p * q;  // circle |z| = sqrt(pq) is orthogonal to both
  const Scalar c = (p + q) / 2;
  // intersect |z|^2 = rho2 with |z - c|^2 = ((q - p)/2)^2
  const Scalar x = rho2 / c;
  const Scalar y = std::sqrt(std::max(rho2 - x * x, Scalar(0)));
  const Point<Scalar> on1(Scalar(0), std::sqrt(rho2));
  const Point<Scalar> on2(x, y);
  return {back.apply(on1), back.apply(on2)};
}

using Pointd = Point<double>;
using BoundaryPointd = BoundaryPoint<double>;
using Isometryd = Isometry<double>;
using GeodesicLined = GeodesicLine<double>;
using Horoballd = Horoball<double>;
using Tolerancesd = Tolerances<double>;
using Classificationd = Classification<double>;

using Pointld = Point<long double>;
using Isometryld = Isometry<long double>;
using GeodesicLineld = GeodesicLine<long double>;

}  // namespace geodlab
