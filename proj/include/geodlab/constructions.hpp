#pragma once
// Curve-level moves: figure-eight building, splitting a class at one of its
// self-crossings, generator twists and iterates.

#include <optional>
#include <string>
#include <utility>

#include "geodlab/intersections.hpp"

namespace geodlab {

/// Class of u·v·u⁻¹·v for hyperbolic u, v with crossing axes, simple
/// classes and one mutual intersection. The result is checked to be a
/// figure eight shorter than 2ℓ(u) + 2ℓ(v). Throws AxesDisjoint,
/// PreconditionFailed or NotFigureEight.
CyclicWord figure_eight(const SurfaceModel& s, const Isometryd& u, const Isometryd& v,
                        const IntersectionOptions& opt = {});

/// The two loops of c based at a self-crossing, p·q = g. The loop that runs
/// from the earlier branch to the later one is p. Throws NormalizationFailed
/// when x does not come from c's crossings.
std::pair<Isometryd, Isometryd> split_at_crossing(const SurfaceModel& s, const CyclicWord& c, const Crossing& x);

/// Translation length, 0 for parabolics.
double loop_length(const Isometryd& h);

enum class Loop { First, Second };

struct LoopRemoval {
  std::optional<CyclicWord> cls;  // empty: the loop is peripheral
  double length = 0;              // 0 when peripheral
  bool peripheral() const { return !cls; }
};

/// Keeps one loop of the split. Throws NotGeodesic if the loop is not
/// shorter than c.
LoopRemoval remove_loop(const SurfaceModel& s, const CyclicWord& c, const Crossing& x, Loop which);

enum class Generator { A, B };

/// Class of the image under a ↦ a, b ↦ b·aᵖ (along a) or b ↦ b, a ↦ a·bᵖ.
CyclicWord generator_twist(const CyclicWord& c, Generator along, int power);

/// c repeated m >= 2 times; never a ClassTable row.
std::string iterate(const CyclicWord& c, int m);

}  // namespace geodlab
