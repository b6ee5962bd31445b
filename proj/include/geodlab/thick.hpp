#pragma once
// Injectivity radius, thick/thin decomposition of closed geodesics, and the
// cusp constants used for surfaces with cusps.

#include <optional>
#include <vector>

#include "geodlab/extremal.hpp"

namespace geodlab {

/// ½·min d(p, h·p) over h ≠ 1, found by ball searches of growing radius.
/// Throws BudgetExceeded.
double injectivity_radius(const SurfaceModel& s, const Pointd& p, const EnumBudget& budget = {});

/// ½·d(p, P·p) for the primitive parabolic P of a cusp vertex: asinh(w/2y)
/// at height y in the frame where P is z ↦ z + w.
double cusp_injectivity(const CuspVertex& v, const Pointd& p);

/// Height in the normalized cusp frame of the horocycle of a given length.
inline double horocycle_height(const CuspVertex& v, double length) { return v.width / length; }

struct Chord {
  enum class Kind { Cusp, Collar } kind = Kind::Cusp;
  int id = 0;           // cusp index, or index among short classes
  double t_in = 0, t_out = 0;  // arc length along the geodesic
  double depth = 0;     // furthest distance inside the region's boundary
  double length = 0;
};

struct ThickDecomposition {
  double eps = 0;
  double length = 0;
  /// Arc length is measured from an exit of the thin part, so every strand
  /// lies inside [0, ℓ). With no thin part the single strand is [0, ℓ).
  std::vector<std::pair<double, double>> strands;
  double thick_length = 0;
  int thick_crossings = 0;
  int crossings = 0;
  std::vector<Chord> thin_visits;
  double origin = 0;  // axis parameter of arc length 0
};

/// Thin part is the union of cusp regions {inj < ε}, computed in closed form
/// per cusp, and collars of classes shorter than 2ε. Throws
/// EpsilonTooLarge when ε > 1/2.
ThickDecomposition thick_decompose(const SurfaceModel& s, const CyclicWord& c, double eps,
                                   const IntersectionOptions& opt = {});
/// Same, with the crossings of c already counted.
ThickDecomposition thick_decompose(const SurfaceModel& s, const CyclicWord& c, double eps,
                                   const SelfIntersections& si);

/// Axis parameter (foot of the base point at 0) to arc length in a
/// decomposition; used to classify crossing locations.
bool in_thin_part(const SurfaceModel& s, const CyclicWord& c, const ThickDecomposition& d, const Pointd& on_axis);

struct ThickReport {
  double thick_length = 0;
  int thick_crossings = 0;
  double rhs = 0;       // (ε/12)·√i(γ_T, γ_T)
  double margin = 0;    // thick_length − rhs
  bool theorem_ok = false;
  double min_strand = 0;  // shortest boundary-to-boundary strand, 0 if none
  int bounded_strands = 0;
  bool strands_ok = true;  // every such strand >= 3/4 − 1e−9
};

ThickReport verify_thm_thick(const SurfaceModel& s, const CyclicWord& c, double eps,
                             const IntersectionOptions& opt = {});
ThickReport verify_thm_thick(const ThickDecomposition& d);

/// Arcs of c inside the horoballs bounded by horocycles of a given length,
/// with arc length measured from the foot of the base point.
std::vector<Chord> horoball_chords(const SurfaceModel& s, const CyclicWord& c, double horocycle_length);

struct HoroballStrandReport {
  double horocycle_length = 0;
  double min_chord = 0;   // bound 2·log(2/len)
  std::vector<Chord> strands;  // length-2 chords that reach the inner horoball
  double shortest = 0;
  bool lengths_ok = true;
  bool count_ok = true;   // strands < ℓ / (2·log(2/len))
};

/// Every strand entering the inner horoball crosses the band between it and
/// the length-2 horocycle twice, so its length-2 chord is at least
/// 2·log(2/len). Throws InvalidArgument unless 0 < len < 2.
HoroballStrandReport horoball_strand_check(const SurfaceModel& s, const CyclicWord& c, double horocycle_length);

struct CuspConstants {
  double eps_prime = 0.25;
  double s = 0;
  std::optional<CyclicWord> s_witness;
  double eps = 0;
  double d_X = 0;
  std::vector<double> d_per_cusp;
  long K = 0;
  double D = 0;
  Completeness completeness = Completeness::Certified;
};

/// Orthogonal distance from the length-1 horocycle of a cusp to its nearest
/// translate, 2·log(|c|·w) over the smallest nonzero |c| in the cusp frame.
double cusp_self_distance(const SurfaceModel& s, int vertex, const EnumBudget& budget = {});

/// 2·asinh(k) + d_X + 1
double cusp_C(const CuspConstants& k, double kk);

/// Throws NoCusp. Classes for the thick systole s come from certified
/// tables grown as in ClassScanner.
CuspConstants cusp_constants(const SurfaceModel& s, const ScanOptions& opt = {});

}  // namespace geodlab
