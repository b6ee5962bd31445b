#pragma once
// Group-element ball search and enumeration of primitive closed geodesics.
//
// Both rest on one tree search over reduced words. For the side-pairing
// domain F the translate of F by any word extending P·y lies in the region
// P·H_y, so a subtree is skipped once dist(c, P·H_y) = dist(P⁻¹c, H_y)
// exceeds the search radius. Nothing reachable is ever pruned.

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "geodlab/surface.hpp"

namespace geodlab {

struct EnumBudget {
  double max_length = 40;
  std::size_t max_nodes = 50'000'000;
  unsigned workers = 1;
};

struct TileSearchStats {
  std::size_t nodes = 0;
  bool complete = true;
};

/// Number of independent subtrees used to split a tile search across workers.
inline constexpr std::size_t kTileTasks = 5;

using TileVisitor = std::function<void(std::size_t task, const Isometryd& h, const std::string& word)>;

/// Calls fn(task, h, word) for every element h (identity included) whose
/// translate h·F may lie within distance D of c; h carries no word label.
/// Tasks run in parallel when workers > 1; fn must then be safe to call
/// concurrently for distinct tasks.
TileSearchStats for_each_tile(const SurfaceModel& s, const Pointd& c, double D, const EnumBudget& budget,
                              const TileVisitor& fn);

/// All h != 1 with d(p, h·q) <= D, sorted by word (shortlex). Words are
/// reduced. Throws BudgetExceeded or InvalidArgument (D > 40).
std::vector<Isometryd> ball_elements(const SurfaceModel& s, const Pointd& p, const Pointd& q, double D,
                                     const EnumBudget& budget = {});
inline std::vector<Isometryd> ball_elements(const SurfaceModel& s, const Pointd& p0, double D,
                                            const EnumBudget& budget = {}) {
  return ball_elements(s, p0, p0, D, budget);
}

enum class Completeness { Certified, Heuristic };
const char* to_string(Completeness c);

struct GeodesicRecord {
  CyclicWord word;
  double trace = 0;  // |tr|
  double length = 0;
  std::optional<int> self_int;
  bool primitive = true;

  friend bool operator==(const GeodesicRecord&, const GeodesicRecord&) = default;
};

struct ClassTable {
  std::string surface;
  std::string fingerprint;
  double cutoff = 0;
  std::vector<GeodesicRecord> rows;  // ascending length, ties by word
  Completeness completeness = Completeness::Certified;
  std::string frontier;              // empty when certified

  friend bool operator==(const ClassTable&, const ClassTable&) = default;
};

/// Every primitive unoriented class of length <= L. Each closed geodesic
/// meets the core polygon K, so its class has a cyclically reduced
/// representative h with h·F within L + R_K of the base point. Budget
/// exhaustion yields a partial table flagged Heuristic.
ClassTable enumerate_classes(const SurfaceModel& s, double L, const EnumBudget& budget = {});

/// Rows with length <= L of a table with a larger cutoff.
ClassTable restrict_table(const ClassTable& t, double L);

void save_table(const ClassTable& t, const std::filesystem::path& path);
/// Throws FingerprintMismatch or CorruptFile.
ClassTable load_table(const SurfaceModel& s, const std::filesystem::path& path);

/// <dir>/<fingerprint>/classes-L<cutoff>.txt
std::filesystem::path cache_path(const std::filesystem::path& dir, const SurfaceModel& s, double L);

/// Loads a certified cached table with cutoff >= L if one exists, otherwise
/// enumerates and writes the cache. An empty dir disables caching.
ClassTable cached_classes(const SurfaceModel& s, double L, const EnumBudget& budget,
                          const std::filesystem::path& dir);

}  // namespace geodlab
