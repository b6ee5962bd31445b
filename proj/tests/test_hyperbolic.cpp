#include <doctest.h>

#include <cmath>
#include <random>

#include "geodlab/hyperbolic.hpp"

using namespace geodlab;

namespace {

Isometryd random_isometry(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  for (;;) {
    const double a = n(rng), b = n(rng), c = n(rng), d = n(rng);
    const double det = a * d - b * c;
    if (det > 0.05) return Isometryd(a, b, c, d);
    if (det < -0.05) return Isometryd(b, a, d, c);
  }
}

Pointd random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> x(-3, 3), ly(-2, 2);
  return Pointd(x(rng), std::exp(ly(rng)));
}

// Arc length of a geodesic half-circle between angles t0 < t1 by midpoint
// quadrature of |dz| / y.
double arc_length_numeric(double radius, double t0, double t1, int n = 200000) {
  double s = 0;
  const double h = (t1 - t0) / n;
  for (int i = 0; i < n; ++i) {
    const double t = t0 + (i + 0.5) * h;
    s += radius * h / (radius * std::sin(t));
  }
  return s;
}

}  // namespace

TEST_CASE("classify examples") {
  const auto diag = Isometryd(std::exp(0.5), 0, 0, std::exp(-0.5));
  auto c = classify(diag);
  CHECK(c.type == IsometryType::Hyperbolic);
  CHECK(c.length == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(classify(Isometryd(1, 2, 0, 1)).type == IsometryType::Parabolic);

  c = classify(Isometryd(0, 1, -1, 3));
  CHECK(c.type == IsometryType::Hyperbolic);
  CHECK(c.length == doctest::Approx(2 * std::acosh(1.5)).epsilon(1e-12));
  CHECK(c.length == doctest::Approx(1.924847).epsilon(1e-6));

  CHECK(classify(Isometryd(0, 1, -1, 0)).type == IsometryType::Elliptic);
  CHECK(classify(Isometryd::identity()).type == IsometryType::Identity);
  CHECK(classify(Isometryd(-1, 0, 0, -1)).type == IsometryType::Identity);
}

TEST_CASE("isometry normalization") {
  const Isometryd t(2, 4, 0, 2);  // det 4
  CHECK(t.det() == doctest::Approx(1.0));
  CHECK(t(0, 1) == doctest::Approx(2.0));
  const Isometryd n(-1, 0, 0, -1);
  CHECK(n.trace() >= 0);
  CHECK_THROWS_AS(Isometryd(0, 1, 1, 0), Error);
}

TEST_CASE("axis examples") {
  const auto diag = Isometryd(std::exp(0.5), 0, 0, std::exp(-0.5));
  auto ax = axis(diag);
  CHECK(ax.u.value() == doctest::Approx(0.0));
  CHECK(ax.v.is_infinite());

  ax = axis(Isometryd(0, 1, -1, 3));
  const double lo = (3 - std::sqrt(5.0)) / 2, hi = (3 + std::sqrt(5.0)) / 2;
  CHECK(std::min(ax.u.value(), ax.v.value()) == doctest::Approx(lo).epsilon(1e-12));
  CHECK(std::max(ax.u.value(), ax.v.value()) == doctest::Approx(hi).epsilon(1e-12));

  const Isometryd shift(1, 1, 0, 1);
  ax = axis(shift * diag * shift.inverse());
  CHECK(ax.u.value() == doctest::Approx(1.0));
  CHECK(ax.v.is_infinite());

  CHECK_THROWS_AS(axis(Isometryd(1, 2, 0, 1)), Error);
}

TEST_CASE("axis orientation is repelling to attracting") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto t = random_isometry(rng);
    if (classify(t).type != IsometryType::Hyperbolic) continue;
    const auto ax = axis(t);
    // push a point forward many times; it approaches v
    Pointd p(0.3, 0.7);
    for (int k = 0; k < 60; ++k) p = t.apply(p);
    if (ax.v.is_infinite()) {
      CHECK(p.y > 1e3);
    } else {
      CHECK(std::abs(p.x - ax.v.value()) < 1e-3 * (1 + std::abs(ax.v.value())));
    }
  }
}

TEST_CASE("distance examples") {
  CHECK(distance(Pointd(0, 1), Pointd(0, 2)) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(distance(Pointd(0, 1), Pointd(1, 1)) == doctest::Approx(std::acosh(1.5)).epsilon(1e-14));
  CHECK(distance(Pointd(0.3, 0.4), Pointd(0.3, 0.4)) == 0.0);
}

TEST_CASE("distance: triangle inequality and isometry invariance") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const auto p = random_point(rng), q = random_point(rng), r = random_point(rng);
    const auto t = random_isometry(rng);
    CHECK(distance(p, r) <= distance(p, q) + distance(q, r) + 1e-12);
    CHECK(distance(p, q) == doctest::Approx(distance(q, p)).epsilon(1e-14));
    CHECK(std::abs(distance(t.apply(p), t.apply(q)) - distance(p, q)) < 1e-9);
  }
}

TEST_CASE("classify invariant under conjugation and sign") {
  std::mt19937_64 rng(2);
  const std::vector<Isometryd> samples = {Isometryd(std::exp(0.5), 0, 0, std::exp(-0.5)), Isometryd(1, 2, 0, 1),
                                          Isometryd(0, 1, -1, 3), Isometryd(std::cos(0.4), -std::sin(0.4),
                                                                            std::sin(0.4), std::cos(0.4))};
  for (int i = 0; i < 1000; ++i) {
    const auto t = samples[static_cast<std::size_t>(i) % samples.size()];
    const auto c = random_isometry(rng);
    const auto conj = c * t * c.inverse();
    const auto neg = Isometryd(Matrix2<double>(-conj.matrix()));
    const auto a = classify(t), b = classify(conj), n = classify(neg);
    CHECK(a.type == b.type);
    CHECK(a.type == n.type);
    if (a.type == IsometryType::Hyperbolic) CHECK(std::abs(a.length - b.length) < 1e-8);
  }
}

TEST_CASE("translation length minimizes displacement") {
  std::mt19937_64 rng(3);
  const Isometryd t(0, 1, -1, 3);
  const double len = classify(t).length;
  const auto ax = axis(t);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_point(rng);
    CHECK(distance(p, t.apply(p)) >= len - 1e-12);
  }
  const auto frame = standard_frame(ax).inverse();
  for (double y : {0.1, 1.0, 7.0}) {
    const auto p = frame.apply(Pointd(0, y));
    CHECK(std::abs(distance(p, t.apply(p)) - len) < 1e-9);
  }
}

TEST_CASE("cross_test examples") {
  const auto imag = GeodesicLined::vertical(0);
  CHECK(cross_test(imag, GeodesicLined::through(-1, 1)) == CrossResult::Cross);
  CHECK(cross_test(imag, GeodesicLined::through(0.381966, 2.618034)) == CrossResult::Disjoint);
  CHECK(cross_test(imag, GeodesicLined::through(0, 5)) == CrossResult::Degenerate);
  CHECK(cross_test(imag, GeodesicLined(BoundaryPointd::infinity(), BoundaryPointd::at(0))) == CrossResult::Equal);
  CHECK(cross_test(GeodesicLined::through(-1, 1), GeodesicLined::through(-2, 2)) == CrossResult::Disjoint);
  CHECK(cross_test(GeodesicLined::vertical(3), GeodesicLined::through(-2, 2)) == CrossResult::Disjoint);
  CHECK(cross_test(GeodesicLined::vertical(1), GeodesicLined::through(-2, 2)) == CrossResult::Cross);
}

TEST_CASE("cross_test is isometry invariant") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-5, 5);
  int crosses = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto l1 = GeodesicLined::through(u(rng), u(rng));
    const auto l2 = GeodesicLined::through(u(rng), u(rng));
    const auto r = cross_test(l1, l2);
    if (r == CrossResult::Degenerate) continue;
    const auto t = random_isometry(rng);
    CHECK(cross_test(t * l1, t * l2) == r);
    crosses += r == CrossResult::Cross;
  }
  CHECK(crosses > 100);
}

TEST_CASE("crossing_point examples") {
  const auto p = crossing_point(GeodesicLined::vertical(0), GeodesicLined::through(-1, 1));
  CHECK(p.x == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(p.y == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(crossing_point(GeodesicLined::through(-1, 1), GeodesicLined::through(-2, 2)), Error);

  const auto q = crossing_point(GeodesicLined::through(0, 4), GeodesicLined::through(1, 9));
  CHECK(q.x == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(q.y == doctest::Approx(std::sqrt(3.75)).epsilon(1e-12));
}

TEST_CASE("crossing_point lies on both lines and is equivariant") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int i = 0; i < 500; ++i) {
    const auto l1 = GeodesicLined::through(u(rng), u(rng));
    const auto l2 = GeodesicLined::through(u(rng), u(rng));
    if (cross_test(l1, l2) != CrossResult::Cross) continue;
    const auto p = crossing_point(l1, l2);
    CHECK(distance_to_line(p, l1) < 1e-9);
    CHECK(distance_to_line(p, l2) < 1e-9);
    const auto t = random_isometry(rng);
    const auto q = crossing_point(t * l1, t * l2);
    CHECK(distance(q, t.apply(p)) < 1e-8);
  }
}

TEST_CASE("horoball_meet examples") {
  const Horoballd top(BoundaryPointd::infinity(), 2.0);
  auto r = horoball_meet(GeodesicLined::vertical(0), top);
  REQUIRE(r);
  CHECK(r->unbounded);
  CHECK(r->entry.y == doctest::Approx(2.0));

  CHECK_FALSE(horoball_meet(GeodesicLined::through(-1, 1), top));

  const Horoballd unit(BoundaryPointd::infinity(), 1.0);
  r = horoball_meet(GeodesicLined::through(-2, 2), unit);
  REQUIRE(r);
  CHECK(r->entry.x == doctest::Approx(-std::sqrt(3.0)));
  CHECK(r->exit.x == doctest::Approx(std::sqrt(3.0)));
  // Entry/exit at angles pi/6 and 5 pi/6 on the radius-2 circle.
  const double numeric = arc_length_numeric(2.0, M_PI / 6, 5 * M_PI / 6);
  CHECK(r->length == doctest::Approx(numeric).epsilon(1e-8));
  CHECK(r->length == doctest::Approx(std::acosh(7.0)).epsilon(1e-12));
}

TEST_CASE("horoball images and finite-base meets agree with conjugation") {
  std::mt19937_64 rng(6);
  const Horoballd top(BoundaryPointd::infinity(), 1.5);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int i = 0; i < 200; ++i) {
    const auto t = random_isometry(rng);
    const auto img = t * top;
    const auto p = random_point(rng);
    CHECK(img.contains(t.apply(p)) == top.contains(p));
    const auto l = GeodesicLined::through(u(rng), u(rng));
    const auto a = horoball_meet(l, top);
    const auto b = horoball_meet(t * l, img);
    CHECK(bool(a) == bool(b));
    if (a && b && !a->unbounded && !b->unbounded) CHECK(std::abs(a->length - b->length) < 1e-7);
  }
}

TEST_CASE("common perpendicular feet") {
  const auto l1 = GeodesicLined::vertical(0);
  const auto l2 = GeodesicLined::through(1, 4);
  const auto [f1, f2] = common_perpendicular(l1, l2);
  CHECK(f1.y == doctest::Approx(2.0));
  CHECK(distance_to_line(f2, l2) < 1e-12);
  CHECK(distance(f1, f2) == doctest::Approx(distance_to_line(f1, l2)).epsilon(1e-10));
}

TEST_CASE("long double instantiation") {
  const Isometryld t(0.0L, 1.0L, -1.0L, 3.0L);
  CHECK(static_cast<double>(classify(t).length) == doctest::Approx(2 * std::acosh(1.5)));
  const auto ax = axis(t);
  CHECK(cross_test(ax, GeodesicLineld::vertical(1.0L)) == CrossResult::Cross);
}
