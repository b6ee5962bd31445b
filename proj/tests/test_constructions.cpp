#include <doctest.h>

#include <cmath>
#include <set>

#include "geodlab/constructions.hpp"
#include "geodlab/error.hpp"

using namespace geodlab;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

// u = g1 and v = h·g2·h⁻¹ have crossing axes whenever h·A2 crosses A1.
// Both orders are kept; u·v·u⁻¹·v and v·u·v⁻¹·u are different classes.
// Pairs whose product is longer than max_product are skipped to bound the
// cost of counting its crossings.
std::vector<std::pair<Isometryd, Isometryd>> crossing_pairs(const SurfaceModel& s, double L, double max_product) {
  std::vector<CyclicWord> simple;
  for (const auto& r : enumerate_classes(s, L).rows)
    if (self_intersections(s, r.word).count == 0) simple.push_back(r.word);
  std::vector<std::pair<Isometryd, Isometryd>> out;
  const auto keep = [&](const Isometryd& u, const Isometryd& v) {
    const auto w = u.word() + v.word() + inverse_word(u.word()) + v.word();
    if (s.class_length(CyclicWord::canonicalize(w)) <= max_product) out.emplace_back(u, v);
  };
  for (std::size_t i = 0; i < simple.size(); ++i)
    for (std::size_t j = i + 1; j < simple.size(); ++j) {
      const auto pi = pair_intersections(s, simple[i], simple[j]);
      if (pi.count != 1) continue;
      const auto& h = pi.crossings.front().partner.word();
      const auto u = s.evaluate(simple[i]);
      const auto v = s.evaluate(free_reduce(h + simple[j].letters() + inverse_word(h)));
      keep(u, v);
      keep(v, u);
    }
  return out;
}

}  // namespace

TEST_CASE("figure eight examples") {
  const auto mt = make_surface("modular-torus");
  const auto w = figure_eight(mt, mt.evaluate("a"), mt.evaluate("b"));
  CHECK(w == CyclicWord::canonicalize("abAb"));
  CHECK(mt.class_length(w) < 4 * 1.924847);
  CHECK(code_of([&] { figure_eight(mt, mt.evaluate("a"), mt.evaluate("a")); }) == ErrorCode::PreconditionFailed);

  const auto p = make_surface("pants:1,1,1");
  CHECK(code_of([&] { figure_eight(p, p.evaluate("a"), p.evaluate("b")); }) == ErrorCode::AxesDisjoint);
}

TEST_CASE("figure eights from sampled crossing pairs") {
  const auto mt = make_surface("modular-torus");
  const auto pairs = crossing_pairs(mt, 7.5, 11);
  CHECK(pairs.size() >= 50);
  for (const auto& [u, v] : pairs) {
    CAPTURE(u.word());
    CAPTURE(v.word());
    const auto w = figure_eight(mt, u, v);
    CHECK(mt.class_length(w) < 2 * classify(u).length + 2 * classify(v).length);
    CHECK(self_intersections(mt, w).count == 1);
  }
}

TEST_CASE("split at the X2 figure eight gives two cusp loops") {
  const auto s = make_surface("x2");
  const auto c = CyclicWord::canonicalize("ab");
  const auto si = self_intersections(s, c);
  REQUIRE(si.crossings.size() == 2);
  for (const auto& x : si.crossings) {
    const auto [p, q] = split_at_crossing(s, c, x);
    CHECK(classify(p).type == IsometryType::Parabolic);
    CHECK(classify(q).type == IsometryType::Parabolic);
    CHECK((p.matrix() * q.matrix() - s.evaluate(c).matrix()).norm() < 1e-9);
    CHECK(remove_loop(s, c, x, Loop::First).peripheral());
  }
}

TEST_CASE("remove a loop of the modular torus figure eight") {
  const auto s = make_surface("modular-torus");
  const auto c = CyclicWord::canonicalize("abAb");
  const auto si = self_intersections(s, c);
  REQUIRE(si.count == 1);
  const auto r = remove_loop(s, c, si.crossings.front(), Loop::Second);
  REQUIRE_FALSE(r.peripheral());
  CHECK(r.length < s.class_length(c));
}

TEST_CASE("stale crossings are rejected") {
  const auto s = make_surface("x2");
  const auto x = self_intersections(s, CyclicWord::canonicalize("aab")).crossings.front();
  CHECK(code_of([&] { split_at_crossing(s, CyclicWord::canonicalize("ab"), x); }) ==
        ErrorCode::NormalizationFailed);
}

TEST_CASE("split identity and loop lengths on every short class") {
  for (const char* name : {"x2", "modular-torus", "pants:1,1,1"}) {
    CAPTURE(name);
    const auto s = make_surface(name);
    for (const auto& row : enumerate_classes(s, 7).rows) {
      CAPTURE(row.word.letters());
      const auto g = s.evaluate(row.word).matrix();
      for (const auto& x : self_intersections(s, row.word).crossings) {
        const auto [p, q] = split_at_crossing(s, row.word, x);
        CHECK((p.matrix() * q.matrix() - g).norm() <= 1e-9 * std::max(1.0, g.norm()));
        CHECK(loop_length(p) + loop_length(q) <= row.length + 1e-6);
        for (auto which : {Loop::First, Loop::Second}) {
          const auto r = remove_loop(s, row.word, x, which);
          CHECK(r.length < row.length);
        }
      }
    }
  }
}

TEST_CASE("generator twist examples") {
  const auto b = CyclicWord::parse("b");
  CHECK(generator_twist(b, Generator::A, 1) == CyclicWord::canonicalize("ab"));
  CHECK(generator_twist(CyclicWord::parse("ab"), Generator::A, -1) == b);
  const auto c = CyclicWord::canonicalize("aabAb");
  CHECK(generator_twist(c, Generator::A, 0) == c);
  CHECK(generator_twist(c, Generator::B, 0) == c);
}

TEST_CASE("generator twists compose and invert on all short classes") {
  std::set<CyclicWord> classes;
  std::string w;
  std::function<void()> rec = [&] {
    if (!w.empty() && (w.size() == 1 || w.front() != inverse_letter(w.back())))
      classes.insert(CyclicWord::canonicalize(w));
    if (w.size() == 10) return;
    for (char c : kLetters) {
      if (!w.empty() && w.back() == inverse_letter(c)) continue;
      w.push_back(c);
      rec();
      w.pop_back();
    }
  };
  rec();
  CHECK(classes.size() > 4000);
  for (const auto& c : classes)
    for (auto g : {Generator::A, Generator::B}) {
      const auto once = generator_twist(c, g, 2);
      CHECK(generator_twist(once, g, -2) == c);
      CHECK(generator_twist(generator_twist(c, g, 1), g, 1) == once);
    }
}

TEST_CASE("iterates") {
  const auto x2 = make_surface("x2");
  const auto ab = CyclicWord::canonicalize("ab");
  CHECK(iterate(ab, 2) == ab.letters() + ab.letters());
  CHECK(classify(x2.evaluate(iterate(ab, 2))).length == doctest::Approx(2 * 3.525494).epsilon(1e-7));
  const auto mt = make_surface("modular-torus");
  CHECK(classify(mt.evaluate(iterate(CyclicWord::parse("a"), 3))).length ==
        doctest::Approx(3 * 2 * std::acosh(1.5)).epsilon(1e-9));
  CHECK_FALSE(CyclicWord::canonicalize(iterate(ab, 3)).is_primitive());
  CHECK_THROWS_AS(iterate(ab, 1), Error);
}
