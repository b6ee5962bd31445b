#pragma once
// Extremal self-intersection quantities: C8, s_k, s_{>=k}, I_k, and the
// segment and ball-topology checks built on them.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geodlab/intersections.hpp"

namespace geodlab {

struct ScanOptions {
  EnumBudget budget{};
  IntersectionOptions intersections{};
  std::filesystem::path cache_dir;  // empty: no cache
  double start = 4.0;               // first scan window
  double step = 1.0;
};

/// Enumerates classes in growing length windows and fills self-intersection
/// counts on demand. Counts are memoized per class, so widening a window only
/// pays for the new rows.
class ClassScanner {
 public:
  ClassScanner(const SurfaceModel& s, ScanOptions opt = {});

  const SurfaceModel& surface() const { return *surface_; }
  const ScanOptions& options() const { return opt_; }

  /// Every primitive class of length <= L with self_int filled.
  ClassTable table(double L);

  /// Shortest rows satisfying pred, searching windows up to limit. Returns
  /// the rows within tie of the minimum, or empty when none exists below
  /// limit. `scanned` receives the window actually covered.
  template <typename Pred>
  std::vector<GeodesicRecord> shortest(Pred pred, double limit, double tie_rel, double* scanned = nullptr,
                                       Completeness* completeness = nullptr);

 private:
  void fill(ClassTable& t);

  const SurfaceModel* surface_;
  ScanOptions opt_;
  std::map<std::string, int> memo_;
};

struct C8Result {
  double length = 0;
  CyclicWord witness;
  int self_int = 0;
  double searched = 0;
  Completeness completeness = Completeness::Certified;
};

/// Length of the shortest non-simple class (the shortest figure eight).
/// Throws PreconditionFailed when searchL < 4·log(1+√2) and SearchExhausted
/// when nothing is found.
C8Result compute_C8(ClassScanner& scan, double searchL);

/// 31·√(k+¼)·(16·√(k+¼)+1)
double bound_thm1(int k);
/// 2·C8·√(k+¼)
double ik_cutoff(double c8, int k);

struct ExtremalReport {
  std::string surface;
  std::string fingerprint;
  int k = 0;
  std::optional<double> s_k;
  double s_geq_k = 0;
  int I_k = 0;
  std::vector<GeodesicRecord> minimizers;
  double c8 = 0;
  double cutoff = 0;
  double scanned = 0;
  double bound = 0;
  double tie_tolerance = 1e-9;
  std::uint64_t seed = 0;
  Completeness completeness = Completeness::Certified;
};

/// I_k and friends. Rows are scanned up to 2·C8·√(k+¼); the scan stops as
/// soon as the minima are settled. Throws SearchExhausted if no class with
/// at least k self-intersections exists below the cutoff.
ExtremalReport compute_Ik(ClassScanner& scan, int k, const C8Result& c8);

struct SegmentReport {
  double length = 0;
  double r0 = 0;
  int m = 0;
  double bound = 0;  // 16·√(k+¼)+1
  long final_count = 0;  // 2m²−m
  bool ok = false;
};

/// Cuts c into segments of length r0 = C8/8. Throws PreconditionFailed when
/// self_int(c) < k or c is longer than the cutoff.
SegmentReport segment_check(const SurfaceModel& s, const CyclicWord& c, int k, double c8,
                            const IntersectionOptions& opt = {});

enum class BallVerdict { Disk, Cylinder, Failure };
const char* to_string(BallVerdict v);

struct BallSample {
  Pointd point;
  std::size_t elements = 0;
  std::string root;  // shortest element word when a cylinder
  BallVerdict verdict = BallVerdict::Disk;
};

/// Elements moving p at most 2·r0: none, or all powers of one primitive
/// element. In a free group that is exactly pairwise commutation.
BallSample ball_topology_at(const SurfaceModel& s, const Pointd& p, double r0, const EnumBudget& budget = {});

struct TopologyReport {
  double r0 = 0;
  std::uint64_t seed = 0;
  std::vector<BallSample> samples;
  int disks = 0, cylinders = 0, failures = 0;
};

/// Seeded points at random distance (up to core radius + 3) and direction
/// from the base point. Throws PreconditionFailed when r0 > c8/8.
TopologyReport ball_topology_check(const SurfaceModel& s, int samples, double r0, double c8, std::uint64_t seed,
                                   const EnumBudget& budget = {});

template <typename Pred>
std::vector<GeodesicRecord> ClassScanner::shortest(Pred pred, double limit, double tie_rel, double* scanned,
                                                   Completeness* completeness) {
  double L = std::min(opt_.start, limit);
  for (;;) {
    const auto t = table(L);
    if (completeness && t.completeness == Completeness::Heuristic) *completeness = Completeness::Heuristic;
    std::vector<GeodesicRecord> best;
    for (const auto& r : t.rows) {
      if (!pred(r)) continue;
      const double tie = tie_rel * std::max(1.0, best.empty() ? r.length : best.front().length);
      if (best.empty() || r.length <= best.front().length + tie) {
        best.push_back(r);
      } else {
        break;
      }
    }
    const bool settled =
        !best.empty() && best.front().length * (1 + tie_rel) + tie_rel <= L;
    if (settled || L >= limit) {
      if (scanned) *scanned = L;
      return best;
    }
    L = std::min(limit, L + opt_.step);
  }
}

}  // namespace geodlab
