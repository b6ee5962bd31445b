#pragma once
// Self- and pair-intersection counts of closed geodesics, from lifts of one
// axis crossing a fundamental segment of another.

#include <cstdint>
#include <string_view>
#include <vector>

#include "geodlab/enumeration.hpp"

namespace geodlab {

enum class Precision { Double, Extended };

struct IntersectionOptions {
  std::uint64_t seed = 0;
  double margin = 1.0;  // added to the partner ball radius
  int retries = 5;
  Precision precision = Precision::Double;
  EnumBudget budget{};
};

/// Mixes a run seed with a class word, so per-class randomness does not
/// depend on processing order.
std::uint64_t class_seed(std::uint64_t seed, std::string_view word);

/// A crossing of the partner lift h·A with the fundamental segment σ of A.
/// Arc length is measured from the start of σ, so 0 <= t < ℓ.
struct Crossing {
  double t = 0;
  Isometryd partner;     // word-labelled h
  Pointd location;
  double partner_t = 0;  // position of h⁻¹·location on the partner's segment
};

struct SelfIntersections {
  int count = 0;
  std::vector<Crossing> crossings;  // sorted by t; twice count entries
  double t0 = 0;  // σ starts t0 past the foot of the base point on the axis
  int attempts = 1;
};

/// Counts self-intersections of a primitive hyperbolic class, triple points
/// counted pairwise. Throws NotGeodesic, PreconditionFailed (non-primitive),
/// DegenerateCrossing after exhausting retries, or OddCrossingParity.
SelfIntersections self_intersections(const SurfaceModel& s, const CyclicWord& c,
                                     const IntersectionOptions& opt = {});

/// Independent count: ⟨g⟩-orbits of lines h·A linking A, found from a ball
/// centred at the start of σ and reduced by the g-action.
int self_intersections_linking(const SurfaceModel& s, const CyclicWord& c, const IntersectionOptions& opt = {});

struct PairIntersections {
  int count = 0;
  std::vector<Crossing> crossings;  // crossings of lifts of c2 with σ of c1
  double t0 = 0;
};

/// Transverse intersections of two distinct classes. Throws
/// PreconditionFailed when c1 == c2.
PairIntersections pair_intersections(const SurfaceModel& s, const CyclicWord& c1, const CyclicWord& c2,
                                     const IntersectionOptions& opt = {});

bool is_simple(const SurfaceModel& s, const CyclicWord& c, const IntersectionOptions& opt = {});

/// Matrix of a word at the requested scalar type.
template <typename Scalar>
Isometry<Scalar> evaluate_as(const SurfaceModel& s, std::string_view word) {
  Matrix2<Scalar> m = Matrix2<Scalar>::Identity();
  for (char c : word) m = m * s.letter(c).matrix().template cast<Scalar>();
  return Isometry<Scalar>(m, std::string(word));
}

}  // namespace geodlab
