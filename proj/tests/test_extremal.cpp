#include <doctest.h>

#include <cmath>
#include <numbers>

#include "geodlab/error.hpp"
#include "geodlab/extremal.hpp"

using namespace geodlab;

namespace {

const double kFloor = 4 * std::log(1 + std::numbers::sqrt2);

double pants_aB() {
  const double c = std::cosh(0.5);
  return 2 * std::acosh((4 * c * c + 2 * c) / 2);
}

}  // namespace

TEST_CASE("C8 examples") {
  const auto x2 = make_surface("x2");
  ClassScanner sx(x2);
  const auto c = compute_C8(sx, 6);
  CHECK(c.length == doctest::Approx(2 * std::acosh(3.0)).epsilon(1e-9));
  CHECK(std::abs(c.length - kFloor) < 1e-9);
  CHECK(c.self_int == 1);
  CHECK(c.completeness == Completeness::Certified);
  CHECK_THROWS_AS(compute_C8(sx, 3), Error);

  const auto p = make_surface("pants:1,1,1");
  ClassScanner sp(p);
  const auto cp = compute_C8(sp, 6);
  CHECK(std::abs(cp.length - pants_aB()) < 1e-6);
  CHECK(cp.witness.letters() == CyclicWord::canonicalize("aB").letters());

  const auto mt = make_surface("modular-torus");
  ClassScanner sm(mt);
  const auto cm = compute_C8(sm, 8);
  CHECK(cm.length >= kFloor - 1e-9);
  CHECK(cm.self_int == 1);
}

TEST_CASE("C8 search limit below the first figure eight") {
  const auto p = make_surface("pants:1,1,1");
  ClassScanner s(p);
  try {
    compute_C8(s, 3.6);
    FAIL("expected SearchExhausted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SearchExhausted);
  }
}

TEST_CASE("theorem bound and cutoff") {
  CHECK(bound_thm1(1) == doctest::Approx(31 * std::sqrt(1.25) * (16 * std::sqrt(1.25) + 1)));
  CHECK(bound_thm1(1) == doctest::Approx(654.66).epsilon(1e-4));
  CHECK(ik_cutoff(2, 2) == doctest::Approx(6));
}

TEST_CASE("I_1 on the catalogue") {
  for (const char* name : {"x2", "modular-torus", "pants:1,1,1"}) {
    CAPTURE(name);
    const auto s = make_surface(name);
    ClassScanner scan(s);
    const auto c8 = compute_C8(scan, 10);
    const auto r = compute_Ik(scan, 1, c8);
    CHECK(r.I_k == 1);
    REQUIRE(r.s_k);
    CHECK(*r.s_k == doctest::Approx(r.s_geq_k));
    CHECK(r.s_geq_k == doctest::Approx(c8.length));
  }
}

TEST_CASE("extremal report invariants") {
  const auto s = make_surface("x2");
  ClassScanner scan(s);
  const auto c8 = compute_C8(scan, 10);
  int prev_I = 0;
  double prev_s = 0;
  for (int k = 1; k <= 3; ++k) {
    CAPTURE(k);
    const auto r = compute_Ik(scan, k, c8);
    CHECK(r.completeness == Completeness::Certified);
    CHECK(k <= r.I_k);
    CHECK(r.I_k <= r.bound);
    REQUIRE(r.s_k);
    CHECK(r.s_geq_k <= *r.s_k);
    CHECK(*r.s_k <= r.cutoff);
    for (const auto& m : r.minimizers) {
      CHECK(*m.self_int >= k);
      CHECK(std::abs(m.length - r.s_geq_k) <= 1e-9 * std::max(1.0, r.s_geq_k));
    }
    CHECK(r.I_k >= prev_I);
    CHECK(*r.s_k >= prev_s);
    prev_I = r.I_k;
    prev_s = *r.s_k;
  }
}

TEST_CASE("systole type") {
  const auto check = [](const char* name, int expected, double length) {
    CAPTURE(name);
    const auto s = make_surface(name);
    ClassScanner scan(s);
    const auto t = scan.table(5);
    REQUIRE(!t.rows.empty());
    CHECK(*t.rows.front().self_int == expected);
    if (length > 0) CHECK(std::abs(t.rows.front().length - length) < 1e-6);
  };
  check("modular-torus", 0, 2 * std::acosh(1.5));
  check("pants:1,1,1", 0, 1.0);
  check("x2", 1, 2 * std::acosh(3.0));
}

TEST_CASE("segment check") {
  const auto s = make_surface("x2");
  const double c8 = 2 * std::acosh(3.0);
  const auto r = segment_check(s, CyclicWord::canonicalize("ab"), 1, c8);
  CHECK(r.r0 == doctest::Approx(0.440687).epsilon(1e-6));
  CHECK(r.m == 8);
  CHECK(r.bound == doctest::Approx(18.889).epsilon(1e-4));
  CHECK(r.final_count == 120);
  CHECK(r.ok);
  // longer than 2·C8·√1.25 ≈ 7.88
  CHECK_THROWS_AS(segment_check(s, CyclicWord::canonicalize("aabbaabb"), 1, c8), Error);
  CHECK_THROWS_AS(segment_check(s, CyclicWord::canonicalize("ab"), 2, c8), Error);
}

TEST_CASE("ball topology") {
  const auto s = make_surface("x2");
  const double c8 = 2 * std::acosh(3.0);
  const auto r = ball_topology_check(s, 100, c8 / 8, c8, 11);
  CHECK(r.samples.size() == 100);
  CHECK(r.failures == 0);
  CHECK(r.disks + r.cylinders == 100);
  const auto tiny = ball_topology_check(s, 50, 0.01, c8, 3);
  CHECK(tiny.failures == 0);
  CHECK_THROWS_AS(ball_topology_check(s, 1, c8 / 8 + 1e-6, c8, 0), Error);

  // deep in a cusp every short element is a power of the parabolic
  for (const auto& v : s.cusp_vertices()) {
    const auto p = v.normalizer.inverse().apply(Pointd(0.3, 40));
    const auto b = ball_topology_at(s, p, c8 / 8);
    CHECK(b.verdict == BallVerdict::Cylinder);
    CHECK(classify(s.evaluate(b.root)).type == IsometryType::Parabolic);
  }
}

TEST_CASE("scans do not depend on workers") {
  const auto s = make_surface("pants:1,1,1");
  ScanOptions one, four;
  four.budget.workers = 4;
  ClassScanner a(s, one), b(s, four);
  CHECK(a.table(7) == b.table(7));
  const auto ca = compute_C8(a, 6), cb = compute_C8(b, 6);
  const auto ra = compute_Ik(a, 3, ca), rb = compute_Ik(b, 3, cb);
  CHECK(ra.I_k == rb.I_k);
  CHECK(ra.minimizers == rb.minimizers);
}
