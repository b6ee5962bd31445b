#include "geodlab/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "geodlab/error.hpp"
#include "geodlab/parallel.hpp"

namespace geodlab {

ClassScanner::ClassScanner(const SurfaceModel& s, ScanOptions opt) : surface_(&s), opt_(std::move(opt)) {
  // parallelism lives at the class level
  opt_.intersections.budget.workers = 1;
}

ClassTable ClassScanner::table(double L) {
  auto t = cached_classes(*surface_, L, opt_.budget, opt_.cache_dir);
  fill(t);
  return t;
}

void ClassScanner::fill(ClassTable& t) {
  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (!memo_.contains(t.rows[i].word.letters())) todo.push_back(i);
  std::vector<int> counts(todo.size());
  parallel_for(todo.size(), opt_.budget.workers, [&](std::size_t j) {
    counts[j] = self_intersections(*surface_, t.rows[todo[j]].word, opt_.intersections).count;
  });
  for (std::size_t j = 0; j < todo.size(); ++j) memo_[t.rows[todo[j]].word.letters()] = counts[j];
  for (auto& r : t.rows) r.self_int = memo_.at(r.word.letters());
}

C8Result compute_C8(ClassScanner& scan, double searchL) {
  const double floor = 4 * std::log(1 + std::numbers::sqrt2);
  if (searchL < floor - 1e-12)
    throw Error(ErrorCode::PreconditionFailed, "C8 search length must be at least 4·log(1+√2)");
  double searched = 0;
  auto completeness = Completeness::Certified;
  const auto best = scan.shortest([](const GeodesicRecord& g) { return *g.self_int >= 1; }, searchL, 1e-9,
                                  &searched, &completeness);
  if (best.empty())
    throw Error(ErrorCode::SearchExhausted, "no non-simple class up to length " + std::to_string(searchL) +
                                                " (" + to_string(completeness) + " enumeration)");
  // ties (symmetric images) resolve to the shortlex-least word
  const auto w = std::min_element(best.begin(), best.end(), [](const auto& x, const auto& y) {
    const auto& a = x.word.letters();
    const auto& b = y.word.letters();
    return a.size() != b.size() ? a.size() < b.size() : compare_words(a, b) < 0;
  });
  C8Result r{best.front().length, w->word, *w->self_int, searched, completeness};
  return r;
}

double bound_thm1(int k) {
  const double q = std::sqrt(k + 0.25);
  return 31 * q * (16 * q + 1);
}

double ik_cutoff(double c8, int k) { return 2 * c8 * std::sqrt(k + 0.25); }

ExtremalReport compute_Ik(ClassScanner& scan, int k, const C8Result& c8) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  const auto& s = scan.surface();
  ExtremalReport r;
  r.surface = s.name();
  r.fingerprint = s.fingerprint();
  r.k = k;
  r.c8 = c8.length;
  r.cutoff = ik_cutoff(c8.length, k);
  r.bound = bound_thm1(k);
  r.seed = scan.options().intersections.seed;
  r.completeness = c8.completeness;
  double limit = r.cutoff;
  if (limit > scan.options().budget.max_length) {
    limit = scan.options().budget.max_length;
    r.completeness = Completeness::Heuristic;
  }
  double scanned_geq = 0, scanned_eq = 0;
  r.minimizers = scan.shortest([k](const GeodesicRecord& g) { return *g.self_int >= k; }, limit, r.tie_tolerance,
                               &scanned_geq, &r.completeness);
  if (r.minimizers.empty())
    throw Error(ErrorCode::SearchExhausted,
                "no class with " + std::to_string(k) + " or more self-intersections below the cutoff");
  r.s_geq_k = r.minimizers.front().length;
  for (const auto& m : r.minimizers) r.I_k = std::max(r.I_k, *m.self_int);
  const auto exact = scan.shortest([k](const GeodesicRecord& g) { return *g.self_int == k; }, limit,
                                   r.tie_tolerance, &scanned_eq, &r.completeness);
  if (!exact.empty()) r.s_k = exact.front().length;
  r.scanned = std::max(scanned_geq, scanned_eq);
  return r;
}

SegmentReport segment_check(const SurfaceModel& s, const CyclicWord& c, int k, double c8,
                            const IntersectionOptions& opt) {
  SegmentReport r;
  r.length = s.class_length(c);
  if (r.length > ik_cutoff(c8, k) + 1e-9)
    throw Error(ErrorCode::PreconditionFailed, "class " + c.letters() + " is longer than the cutoff");
  if (self_intersections(s, c, opt).count < k)
    throw Error(ErrorCode::PreconditionFailed, "class " + c.letters() + " has fewer than k self-intersections");
  r.r0 = c8 / 8;
  r.m = static_cast<int>(std::ceil(r.length / r.r0));
  r.bound = 16 * std::sqrt(k + 0.25) + 1;
  r.final_count = 2L * r.m * r.m - r.m;
  r.ok = r.m < r.bound;
  return r;
}

const char* to_string(BallVerdict v) {
  switch (v) {
    case BallVerdict::Disk: return "disk";
    case BallVerdict::Cylinder: return "cylinder";
    case BallVerdict::Failure: return "failure";
  }
  return "?";
}

BallSample ball_topology_at(const SurfaceModel& s, const Pointd& p, double r0, const EnumBudget& budget) {
  BallSample b;
  b.point = p;
  const auto els = ball_elements(s, p, 2 * r0, budget);
  b.elements = els.size();
  if (els.empty()) return b;
  b.verdict = BallVerdict::Cylinder;
  b.root = els.front().word();
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      const auto& x = els[i].word();
      const auto& y = els[j].word();
      if (!free_reduce(x + y + inverse_word(x) + inverse_word(y)).empty()) {
        b.verdict = BallVerdict::Failure;
        return b;
      }
    }
  return b;
}

TopologyReport ball_topology_check(const SurfaceModel& s, int samples, double r0, double c8, std::uint64_t seed,
                                   const EnumBudget& budget) {
  if (r0 > c8 / 8 + 1e-12) throw Error(ErrorCode::PreconditionFailed, "r0 exceeds C8/8");
  TopologyReport rep;
  rep.r0 = r0;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> radius(0, s.core_radius() + 3);
  std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
  const auto& o = s.base_point();
  const Isometryd to_base(std::sqrt(o.y), o.x / std::sqrt(o.y), 0, 1 / std::sqrt(o.y));
  std::vector<Pointd> points;
  for (int i = 0; i < samples; ++i) {
    const double d = radius(rng), th = angle(rng) / 2;
    const Isometryd rot(std::cos(th), std::sin(th), -std::sin(th), std::cos(th));
    points.push_back(to_base.apply(rot.apply(Pointd(0, std::exp(d)))));
  }
  rep.samples.resize(points.size());
  parallel_for(points.size(), budget.workers, [&](std::size_t i) {
    EnumBudget b = budget;
    b.workers = 1;
    rep.samples[i] = ball_topology_at(s, points[i], r0, b);
  });
  for (const auto& x : rep.samples) {
    if (x.verdict == BallVerdict::Disk) ++rep.disks;
    if (x.verdict == BallVerdict::Cylinder) ++rep.cylinders;
    if (x.verdict == BallVerdict::Failure) ++rep.failures;
  }
  return rep;
}

}  // namespace geodlab
