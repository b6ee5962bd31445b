#pragma once
// Verification sweeps over whole class tables, shared by the CLI and the
// acceptance runner.

#include <string>
#include <vector>

#include "geodlab/extremal.hpp"
#include "geodlab/thick.hpp"

namespace geodlab {

struct Thm1Row {
  ExtremalReport ik;
  SegmentReport segment;
  bool lower_ok = false;   // k <= I_k
  bool upper_ok = false;   // I_k <= bound
  bool chain_ok = false;   // s_geq_k <= s_k <= cutoff
  bool ok() const { return lower_ok && upper_ok && chain_ok && segment.ok; }
};

struct Thm1Report {
  C8Result c8;
  std::vector<Thm1Row> rows;
  Completeness completeness = Completeness::Certified;
  bool ok() const;
};

/// k = 1..kmax with C8 searched up to searchL.
Thm1Report verify_thm1(ClassScanner& scan, int kmax, double searchL = 8);

struct ThickEpsSummary {
  double eps = 0;
  int classes = 0;
  int theorem_violations = 0;
  int strand_violations = 0;
  int with_thin = 0;
  double min_margin = 0;
  std::string min_margin_word;
  double min_strand = 0;  // over bounded strands; 0 when there are none
  std::vector<std::string> violating;
};

struct HoroballSummary {
  double horocycle_length = 1;
  int classes = 0;
  int entering = 0;
  int strands = 0;
  double shortest = 0;
  int length_violations = 0;
  int count_violations = 0;
  std::vector<std::string> violating;
};

struct ThickBatchReport {
  double max_length = 0;
  std::vector<ThickEpsSummary> eps;
  std::optional<HoroballSummary> horoball;  // cusped surfaces only
  Completeness completeness = Completeness::Certified;
  bool ok() const;
};

/// Every class up to L, at each ε, plus the horoball strand check for the
/// length-1 horocycle on cusped surfaces. Self-intersections are counted once
/// per class and shared across ε.
ThickBatchReport verify_thick_batch(const SurfaceModel& s, double L, const std::vector<double>& eps,
                                    const IntersectionOptions& opt, const EnumBudget& budget);

struct CrossCheckReport {
  double max_length = 0;
  int classes = 0;
  int disagreements = 0;
  std::vector<std::string> disagreeing;
  Completeness completeness = Completeness::Certified;
};

/// Compares the two self-intersection counters on every class up to L.
CrossCheckReport cross_check_counts(const SurfaceModel& s, double L, const IntersectionOptions& opt,
                                    const EnumBudget& budget);

}  // namespace geodlab
