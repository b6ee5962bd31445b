#include "geodlab/batch.hpp"

#include <cmath>
#include <limits>

#include "geodlab/parallel.hpp"

namespace geodlab {

bool Thm1Report::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const Thm1Row& r) { return r.ok(); });
}

Thm1Report verify_thm1(ClassScanner& scan, int kmax, double searchL) {
  Thm1Report out{compute_C8(scan, searchL), {}};
  out.completeness = out.c8.completeness;
  for (int k = 1; k <= kmax; ++k) {
    Thm1Row row;
    row.ik = compute_Ik(scan, k, out.c8);
    const auto& r = row.ik;
    if (r.completeness == Completeness::Heuristic) out.completeness = Completeness::Heuristic;
    row.lower_ok = k <= r.I_k;
    row.upper_ok = r.I_k <= r.bound;
    row.chain_ok = r.s_k && r.s_geq_k <= *r.s_k && *r.s_k <= r.cutoff;
    row.segment = segment_check(scan.surface(), r.minimizers.front().word, k, out.c8.length,
                                scan.options().intersections);
    out.rows.push_back(std::move(row));
  }
  return out;
}

bool ThickBatchReport::ok() const {
  for (const auto& e : eps)
    if (e.theorem_violations || e.strand_violations) return false;
  return !horoball || (horoball->length_violations == 0 && horoball->count_violations == 0);
}

ThickBatchReport verify_thick_batch(const SurfaceModel& s, double L, const std::vector<double>& eps,
                                    const IntersectionOptions& opt, const EnumBudget& budget) {
  ThickBatchReport out;
  out.max_length = L;
  const auto table = enumerate_classes(s, L, budget);
  out.completeness = table.completeness;
  const auto n = table.rows.size();
  const bool cusped = !s.cusps().empty();

  std::vector<std::vector<ThickReport>> reports(n);
  std::vector<std::vector<int>> thin(n);
  std::vector<HoroballStrandReport> horo(n);
  auto iopt = opt;
  iopt.budget.workers = 1;
  parallel_for(n, budget.workers, [&](std::size_t i) {
    const auto& w = table.rows[i].word;
    const auto si = self_intersections(s, w, iopt);
    for (double e : eps) {
      const auto d = thick_decompose(s, w, e, si);
      reports[i].push_back(verify_thm_thick(d));
      thin[i].push_back(!d.thin_visits.empty());
    }
    if (cusped) horo[i] = horoball_strand_check(s, w, 1.0);
  });

  for (std::size_t j = 0; j < eps.size(); ++j) {
    ThickEpsSummary sum;
    sum.eps = eps[j];
    sum.min_margin = std::numeric_limits<double>::infinity();
    sum.min_strand = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      const auto& r = reports[i][j];
      const auto& w = table.rows[i].word.letters();
      ++sum.classes;
      sum.with_thin += thin[i][j];
      if (r.margin < sum.min_margin) {
        sum.min_margin = r.margin;
        sum.min_margin_word = w;
      }
      if (r.bounded_strands > 0) sum.min_strand = std::min(sum.min_strand, r.min_strand);
      if (!r.theorem_ok) ++sum.theorem_violations;
      if (!r.strands_ok) ++sum.strand_violations;
      if (!r.theorem_ok || !r.strands_ok) sum.violating.push_back(w);
    }
    if (!std::isfinite(sum.min_strand)) sum.min_strand = 0;
    if (!std::isfinite(sum.min_margin)) sum.min_margin = 0;
    out.eps.push_back(std::move(sum));
  }

  if (cusped) {
    HoroballSummary h;
    h.shortest = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      const auto& r = horo[i];
      ++h.classes;
      if (!r.strands.empty()) ++h.entering;
      h.strands += static_cast<int>(r.strands.size());
      if (!r.strands.empty()) h.shortest = std::min(h.shortest, r.shortest);
      if (!r.lengths_ok) ++h.length_violations;
      if (!r.count_ok) ++h.count_violations;
      if (!r.lengths_ok || !r.count_ok) h.violating.push_back(table.rows[i].word.letters());
    }
    if (!std::isfinite(h.shortest)) h.shortest = 0;
    out.horoball = h;
  }
  return out;
}

CrossCheckReport cross_check_counts(const SurfaceModel& s, double L, const IntersectionOptions& opt,
                                    const EnumBudget& budget) {
  CrossCheckReport out;
  out.max_length = L;
  const auto table = enumerate_classes(s, L, budget);
  out.completeness = table.completeness;
  const auto n = table.rows.size();
  std::vector<char> agree(n, 0);
  auto iopt = opt;
  iopt.budget.workers = 1;
  parallel_for(n, budget.workers, [&](std::size_t i) {
    const auto& w = table.rows[i].word;
    agree[i] = self_intersections(s, w, iopt).count == self_intersections_linking(s, w, iopt);
  });
  out.classes = static_cast<int>(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (agree[i]) continue;
    ++out.disagreements;
    out.disagreeing.push_back(table.rows[i].word.letters());
  }
  return out;
}

}  // namespace geodlab
