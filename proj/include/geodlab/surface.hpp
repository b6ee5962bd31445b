#pragma once

#include <array>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "geodlab/hyperbolic.hpp"
#include "geodlab/words.hpp"

namespace geodlab {

struct X2Spec {};
struct ModularTorusSpec {};
struct PantsSpec {
  double l1 = 1, l2 = 1, l3 = 1;
};
using SurfaceSpec = std::variant<X2Spec, ModularTorusSpec, PantsSpec>;

/// Parses "x2", "modular-torus" or "pants:l1,l2,l3".
SurfaceSpec parse_surface_spec(std::string_view text);
std::string to_string(const SurfaceSpec& spec);

enum class SurfaceKind { Cusped, GeodesicBoundary };

/// Half-plane H_x of the side-pairing domain: letter x maps the complement of
/// H_{x^-1} onto H_x.
struct HalfPlane {
  GeodesicLined line;
  int inside = 1;  // side_of() sign of interior points

  bool contains(const Pointd& p) const { return side_of(p, line) == inside; }
  /// Distance from p to the closed half-plane.
  double distance(const Pointd& p) const { return contains(p) ? 0.0 : distance_to_line(p, line); }
};

/// Ideal vertex of the fundamental domain, with its primitive parabolic.
struct CuspVertex {
  BoundaryPointd point;
  Isometryd parabolic;   // word-labelled stabilizer generator
  Isometryd normalizer;  // sends point to ∞, parabolic to z -> z ± width
  double width = 0;
  int cusp = 0;          // index into SurfaceModel::cusps
};

struct CuspInfo {
  CyclicWord word;      // class of the primitive parabolic
  int vertex = 0;       // representative vertex
};

/// A rank-2 free Fuchsian group with a four-sided side-pairing fundamental
/// domain F. Immutable after construction.
class SurfaceModel {
 public:
  const std::string& name() const { return name_; }
  const SurfaceSpec& spec() const { return spec_; }
  SurfaceKind kind() const { return kind_; }
  const Isometryd& gen_a() const { return gens_[0]; }
  const Isometryd& gen_b() const { return gens_[1]; }
  const std::string& fingerprint() const { return fingerprint_; }

  /// Generator matrix for a letter.
  const Isometryd& letter(char c) const { return letters_[static_cast<std::size_t>(letter_rank(c))]; }
  const HalfPlane& half_plane(char c) const { return halfplanes_[static_cast<std::size_t>(letter_rank(c))]; }
  const std::array<HalfPlane, 4>& half_planes() const { return halfplanes_; }

  /// Product of generators in order, word-labelled.
  Isometryd evaluate(std::string_view word) const;
  Isometryd evaluate(const CyclicWord& w) const { return evaluate(w.letters()); }

  /// Translation length of a class. Throws NotGeodesic for parabolic or
  /// elliptic classes.
  double class_length(const CyclicWord& w) const;

  const std::vector<CuspVertex>& cusp_vertices() const { return vertices_; }
  const std::vector<CuspInfo>& cusps() const { return cusps_; }
  const std::vector<CyclicWord>& boundary() const { return boundary_; }

  /// Base point inside F.
  const Pointd& base_point() const { return base_; }
  /// Vertices of a compact convex polygon K ⊂ F met by every closed geodesic
  /// (up to the group action), and max distance from the base point to K.
  const std::vector<Pointd>& core_vertices() const { return core_; }
  double core_radius() const { return core_radius_; }

  /// True when p lies in the closed fundamental domain.
  bool in_domain(const Pointd& p) const;
  /// Writes p = t·f with f in the closed domain; returns t (word-labelled).
  Isometryd reduce_to_domain(const Pointd& p, Pointd* f = nullptr) const;

  friend SurfaceModel make_surface(const SurfaceSpec& spec);

 private:
  SurfaceModel() = default;
  void finish();
  void find_cusp_vertices(const std::vector<BoundaryPointd>& ideal);
  void verify_domain() const;
  void verify_discreteness() const;

  std::string name_;
  SurfaceSpec spec_;
  SurfaceKind kind_ = SurfaceKind::Cusped;
  std::array<Isometryd, 2> gens_;
  std::array<Isometryd, 4> letters_;
  std::array<HalfPlane, 4> halfplanes_;
  std::vector<CuspVertex> vertices_;
  std::vector<CuspInfo> cusps_;
  std::vector<CyclicWord> boundary_;
  Pointd base_;
  std::vector<Pointd> core_;
  double core_radius_ = 0;
  std::string fingerprint_;
};

/// Builds a catalogue surface. Throws InvalidSpec or DiscretenessCheckFailed.
SurfaceModel make_surface(const SurfaceSpec& spec);
inline SurfaceModel make_surface(std::string_view text) { return make_surface(parse_surface_spec(text)); }

}  // namespace geodlab
