#pragma once
// Geodesic strands in a standalone hyperbolic cylinder.
//
// The cover is the upper half-plane. A hyperbolic cylinder has core the
// imaginary axis, deck move z ↦ e^ℓ·z, and boundary curves at distances
// d₋ (left) and d₊ (right) from the core. A point on a boundary curve is
// named by its core parameter t = log|z|. A parabolic cylinder is the cusp
// region y >= h modulo z ↦ z + 1, with one boundary, named by x.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "geodlab/hyperbolic.hpp"

namespace geodlab {

enum class Side { Minus, Plus };

class CylinderModel {
 public:
  enum class Core { Hyperbolic, Parabolic };

  /// Throws InvalidArgument unless length and offsets are positive.
  static CylinderModel hyperbolic(double length, double d_minus, double d_plus);
  static CylinderModel parabolic(double height);

  Core core() const { return core_; }
  /// ℓ(δ), or the horocyclic period 1.
  double period() const { return period_; }
  double offset(Side s) const { return s == Side::Minus ? minus_ : plus_; }
  Isometryd deck(int n = 1) const;
  /// Throws NotInCylinder for the Plus side of a parabolic cylinder.
  Pointd boundary_point(Side s, double t) const;
  bool on_boundary(const Pointd& p, Side s, double tol = 1e-9) const;

 private:
  Core core_ = Core::Hyperbolic;
  double period_ = 1, minus_ = 1, plus_ = 1;
};

enum class StrandKind { Crossing, Returning };

struct Strand {
  Side from = Side::Minus, to = Side::Minus;
  double t_from = 0, t_to = 0;  // boundary parameters of the endpoints
  Pointd p, q;
  GeodesicLined line;
  StrandKind kind = StrandKind::Returning;
};

/// The geodesic segment between two boundary points. Throws NotInCylinder.
Strand make_strand(const CylinderModel& c, Side from, double t_from, Side to, double t_to);

/// Projection length onto the core over ℓ(δ). The projection of a geodesic
/// segment is monotone, so this is |Δt|/ℓ. For a parabolic cylinder it is
/// the horocyclic displacement of the endpoints over the period. Throws
/// NotInCylinder when an endpoint is off the boundary.
double winding_number(const CylinderModel& c, const Strand& s);

/// Crossings in the quotient: lifts s̃1 ∩ Tⁿ·s̃2 over every n whose core
/// projections overlap. Throws DegenerateCrossing on a tangency or a
/// crossing at an endpoint.
int strand_intersections(const CylinderModel& c, const Strand& s1, const Strand& s2);
/// Self crossings, the raw count over n ≠ 0 halved. Throws
/// OddCrossingParity.
int strand_intersections(const CylinderModel& c, const Strand& s);

/// Two crossing and two returning strands, labelled so that
/// ω(s1) <= ω(s2) and ω(r1) <= ω(r2).
struct StrandConfig {
  std::uint64_t seed = 0;
  Strand s1, s2, r1, r2;
};

/// Endpoints uniform in one period, windings uniform in [0, 3.5], random
/// direction; returning strands on a random side. Hyperbolic only.
StrandConfig random_config(const CylinderModel& c, std::uint64_t seed);

struct Lemma31Violation {
  std::string check;
  int sample = 0;
  std::uint64_t seed = 0;  // random_config(c, seed) reproduces it
  int count = 0;
  double bound = 0;
};

struct Lemma31Report {
  double core_length = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  // i(s,r), i(r,r), i(r1,r2), i(s1,s2), α-type
  static constexpr std::array<const char*, 5> kChecks{"i(s1,r1)<=ceil(w(r1))", "i(r,r)<=ceil(w(r))",
                                                       "i(r1,r2)<=2ceil(w(r1))", "i(s1,s2)<=ceil(w(s1))",
                                                       "alpha-type<=4"};
  std::array<int, 5> checked{};
  std::array<int, 5> violated{};
  std::vector<Lemma31Violation> violations;
  int resampled = 0;  // degenerate configurations drawn again
  // i(s1,s2) <= ceil(w(s1)+w(s2)); a diagnostic, not one of the checks
  int sum_bound_checked = 0, sum_bound_violated = 0;
  bool ok() const { return violations.empty(); }
};

/// Seeded random configurations checked against the four strand bounds and
/// the α-type bound (a returning strand with one self crossing meets any
/// strand with at most one self crossing at most 4 times).
Lemma31Report verify_lemma31(const CylinderModel& c, int samples, std::uint64_t seed);

}  // namespace geodlab
