#pragma once
// Independent reference computations used by the tests. These avoid the
// library's search and pruning code and work from raw words and matrices.

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>
#include <random>
#include <string>

#include "geodlab/surface.hpp"

namespace oracle {

using namespace geodlab;

inline std::string random_word(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<int> letter(0, 3);
  std::string w;
  const auto n = len(rng);
  while (w.size() < n) {
    const char c = kLetters[static_cast<std::size_t>(letter(rng))];
    if (!w.empty() && w.back() == inverse_letter(c)) continue;
    w.push_back(c);
  }
  return w;
}

inline std::string random_cyclic_word(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len) {
  for (;;) {
    auto w = random_word(rng, min_len, max_len);
    if (w.size() == 1 || w.front() != inverse_letter(w.back())) return w;
  }
}

/// Every reduced word of length 1..max_len with its matrix.
inline void reduced_words(const SurfaceModel& s, std::size_t max_len,
                          const std::function<void(const std::string&, const Eigen::Matrix2d&)>& fn) {
  std::string w;
  std::function<void(const Eigen::Matrix2d&)> rec = [&](const Eigen::Matrix2d& m) {
    if (!w.empty()) fn(w, m);
    if (w.size() == max_len) return;
    for (char c : kLetters) {
      if (!w.empty() && w.back() == inverse_letter(c)) continue;
      w.push_back(c);
      rec(m * s.letter(c).matrix());
      w.pop_back();
    }
  };
  rec(Eigen::Matrix2d::Identity());
}

/// Primitive hyperbolic classes of length <= L among cyclically reduced
/// words of length <= max_len, by trace.
inline std::map<std::string, double> brute_force_classes(const SurfaceModel& s, std::size_t max_len, double L) {
  std::map<std::string, double> out;
  reduced_words(s, max_len, [&](const std::string& w, const Eigen::Matrix2d& m) {
    if (w.size() > 1 && w.front() == inverse_letter(w.back())) return;
    const double tr = std::abs(m.trace());
    if (tr <= 2 + 1e-9) return;
    const double len = 2 * std::acosh(tr / 2);
    if (len > L) return;
    const auto c = CyclicWord::canonicalize(w);
    if (!c.is_primitive()) return;
    out[c.letters()] = len;
  });
  return out;
}

/// Hyperbolic distance from the closed-form cosh formula.
inline double dist(const Pointd& p, const Pointd& q) {
  const double dx = p.x - q.x, dy = p.y - q.y;
  return std::acosh(1 + (dx * dx + dy * dy) / (2 * p.y * q.y));
}

inline Pointd act(const Eigen::Matrix2d& m, const Pointd& p) {
  const std::complex<double> z(p.x, p.y);
  const auto w = (m(0, 0) * z + m(0, 1)) / (m(1, 0) * z + m(1, 1));
  return Pointd(w.real(), w.imag());
}

}  // namespace oracle

namespace oracle {

/// Endpoints of the axis of a hyperbolic matrix; ∞ is reported as NaN.
inline std::pair<double, double> fixed_points(const Eigen::Matrix2d& m) {
  const double a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  if (std::abs(c) < 1e-14) {
    // z -> (a z + b) / d fixes ∞ and b / (d - a)
    return {b / (d - a), std::nan("")};
  }
  const double disc = std::sqrt((a - d) * (a - d) + 4 * b * c);
  return {((a - d) - disc) / (2 * c), ((a - d) + disc) / (2 * c)};
}

/// Crossing point of two geodesics given by endpoints (NaN = ∞), solved from
/// the circle equations.
inline std::optional<Pointd> meet(std::pair<double, double> l1, std::pair<double, double> l2) {
  auto vertical = [](std::pair<double, double> l) { return std::isnan(l.first) || std::isnan(l.second); };
  auto foot = [](std::pair<double, double> l) { return std::isnan(l.first) ? l.second : l.first; };
  if (vertical(l1) && vertical(l2)) return std::nullopt;
  if (vertical(l2)) std::swap(l1, l2);
  const double c2 = (l2.first + l2.second) / 2, r2 = std::abs(l2.second - l2.first) / 2;
  double x;
  if (vertical(l1)) {
    x = foot(l1);
  } else {
    const double c1 = (l1.first + l1.second) / 2, r1 = std::abs(l1.second - l1.first) / 2;
    if (std::abs(c1 - c2) < 1e-15) return std::nullopt;
    x = (r1 * r1 - r2 * r2 + c2 * c2 - c1 * c1) / (2 * (c2 - c1));
  }
  const double y2 = r2 * r2 - (x - c2) * (x - c2);
  if (y2 <= 0) return std::nullopt;
  return Pointd(x, std::sqrt(y2));
}

/// Half-open membership in the side-pairing domain: points on a side of H_a
/// or H_b count, points on their partner sides do not.
inline bool in_half_open_domain(const SurfaceModel& s, const Pointd& p, double tol = 1e-9) {
  for (char y : kLetters) {
    const auto& h = s.half_plane(y);
    const double d = distance_to_line(p, h.line);
    const bool inside = h.contains(p);
    if (y == 'a' || y == 'b') {
      if (inside && d > tol) return false;
    } else {
      if (inside || d <= tol) return false;
    }
  }
  return true;
}

/// Intersection count from the arcs of each curve inside the fundamental
/// domain: the axes of the cyclic rotations of a cyclically reduced word
/// each cross F in one arc, and a transverse double point is a pair of arcs
/// meeting inside F.
inline int arc_intersections(const SurfaceModel& s, const std::string& w1, const std::string& w2, bool same) {
  auto axes = [&](const std::string& w) {
    std::vector<std::pair<double, double>> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const auto r = w.substr(i) + w.substr(0, i);
      out.push_back(fixed_points(s.evaluate(r).matrix()));
    }
    return out;
  };
  const auto x1 = axes(w1), x2 = same ? axes(w1) : axes(w2);
  int count = 0;
  for (std::size_t i = 0; i < x1.size(); ++i)
    for (std::size_t j = same ? i + 1 : 0; j < x2.size(); ++j) {
      const auto p = meet(x1[i], x2[j]);
      if (p && in_half_open_domain(s, *p)) ++count;
    }
  return count;
}

}  // namespace oracle
