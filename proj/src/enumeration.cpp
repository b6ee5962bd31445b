#include "geodlab/enumeration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include <unistd.h>

#include "geodlab/error.hpp"
#include "geodlab/parallel.hpp"

namespace geodlab {

namespace {

// Depth-first walk kept on an explicit stack: cusp excursions make the tree
// tens of thousands of letters deep.
struct TileWalker {
  const SurfaceModel& s;
  double radius;
  std::size_t max_nodes;
  std::atomic<std::size_t>& nodes;
  std::atomic<bool>& stopped;
  const TileVisitor& fn;
  std::size_t task;
  std::array<Isometryd, 4> letters;  // unlabelled, so products skip word bookkeeping

  struct Frame {
    Isometryd P;
    Pointd q;  // P⁻¹ c
    char last;
    int next = 0;
  };

  void run(char first, const Pointd& c) {
    for (std::size_t i = 0; i < 4; ++i) letters[i] = Isometryd(s.letter(kLetters[i]).matrix());
    std::string word(1, first);
    std::vector<Frame> stack;
    const auto enter = [&](const Isometryd& P, const Pointd& q, char last) {
      fn(task, P, word);
      stack.push_back(Frame{P, q, last, 0});
    };
    enter(letters[static_cast<std::size_t>(letter_rank(first))],
          letters[static_cast<std::size_t>(letter_rank(inverse_letter(first)))].apply(c), first);
    while (!stack.empty()) {
      auto& top = stack.back();
      if (top.next == 4) {
        stack.pop_back();
        word.pop_back();
        continue;
      }
      const char y = kLetters[static_cast<std::size_t>(top.next++)];
      if (y == inverse_letter(top.last)) continue;
      if (s.half_plane(y).distance(top.q) > radius) continue;
      if (stopped.load(std::memory_order_relaxed)) return;
      if (nodes.fetch_add(1, std::memory_order_relaxed) >= max_nodes) {
        stopped = true;
        return;
      }
      const auto P = top.P * letters[static_cast<std::size_t>(letter_rank(y))];
      const auto q = letters[static_cast<std::size_t>(letter_rank(inverse_letter(y)))].apply(top.q);
      word.push_back(y);
      enter(P, q, y);
    }
  }
};

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

bool parse_double(std::string_view text, double& out) {
  auto res = std::from_chars(text.data(), text.data() + text.size(), out);
  return res.ec == std::errc() && res.ptr == text.data() + text.size();
}

bool shortlex_less(const std::string& x, const std::string& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return compare_words(x, y) < 0;
}

[[noreturn]] void corrupt(const std::filesystem::path& path, const std::string& what) {
  throw Error(ErrorCode::CorruptFile, path.string() + ": " + what);
}

}  // namespace

TileSearchStats for_each_tile(const SurfaceModel& s, const Pointd& c, double D, const EnumBudget& budget,
                              const TileVisitor& fn) {
  std::atomic<std::size_t> nodes{1};
  std::atomic<bool> stopped{false};
  const double radius = D + 1e-9 * std::max(1.0, D);
  parallel_for(kTileTasks, budget.workers, [&](std::size_t task) {
    if (task == 0) {
      fn(0, Isometryd::identity(), std::string());
      return;
    }
    const char y = kLetters[task - 1];
    if (s.half_plane(y).distance(c) > radius) return;
    nodes.fetch_add(1, std::memory_order_relaxed);
    TileWalker walker{s, radius, budget.max_nodes, nodes, stopped, fn, task, {}};
    walker.run(y, c);
  });
  return {nodes.load(), !stopped.load()};
}

std::vector<Isometryd> ball_elements(const SurfaceModel& s, const Pointd& p, const Pointd& q, double D,
                                     const EnumBudget& budget) {
  if (D > 40) throw Error(ErrorCode::InvalidArgument, "ball radius above 40");
  if (!(D > 0)) return {};
  Pointd f;
  const auto t = s.reduce_to_domain(q, &f);
  const auto t_inv = t.inverse();
  const auto back = inverse_word(t.word());
  std::vector<std::vector<Isometryd>> found(kTileTasks);
  const auto visit = [&](std::size_t task, const Isometryd& k, const std::string& w) {
    if (distance(p, k.apply(f)) > D) return;
    Isometryd h = k * t_inv;
    h.set_word(free_reduce(w + back));
    if (h.word().empty()) return;
    found[task].push_back(std::move(h));
  };
  const auto stats = for_each_tile(s, p, D, budget, visit);
  if (!stats.complete) throw Error(ErrorCode::BudgetExceeded, "ball search exceeded its node budget");
  std::vector<Isometryd> out;
  for (auto& v : found) out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
  std::sort(out.begin(), out.end(),
            [](const Isometryd& x, const Isometryd& y) { return shortlex_less(x.word(), y.word()); });
  return out;
}

const char* to_string(Completeness c) { return c == Completeness::Certified ? "certified" : "heuristic"; }

ClassTable enumerate_classes(const SurfaceModel& s, double L, const EnumBudget& budget) {
  if (L > budget.max_length) throw Error(ErrorCode::InvalidArgument, "cutoff exceeds budget max length");
  ClassTable table;
  table.surface = s.name();
  table.fingerprint = s.fingerprint();
  table.cutoff = L;
  if (!(L > 0)) return table;

  const double radius = L + s.core_radius();
  std::vector<std::map<CyclicWord, int>> found(kTileTasks);
  const auto visit = [&](std::size_t task, const Isometryd& h, const std::string& w) {
    if (w.empty() || w.front() == inverse_letter(w.back())) return;
    const auto cls = classify(h);
    if (cls.type != IsometryType::Hyperbolic || cls.length > L + 1e-9) return;
    auto c = CyclicWord::canonicalize(w);
    if (!c.is_primitive()) return;
    found[task].emplace(std::move(c), 0);
  };
  const auto stats = for_each_tile(s, s.base_point(), radius, budget, visit);

  std::map<CyclicWord, int> merged;
  for (auto& m : found) merged.merge(m);
  for (const auto& [word, unused] : merged) {
    const double tr = std::abs(s.evaluate(word).trace());
    const double len = translation_length(tr);
    if (len > L) continue;
    table.rows.push_back(GeodesicRecord{word, tr, len, std::nullopt, true});
  }
  std::sort(table.rows.begin(), table.rows.end(), [](const GeodesicRecord& x, const GeodesicRecord& y) {
    if (x.length != y.length) return x.length < y.length;
    return x.word < y.word;
  });
  if (!stats.complete) {
    table.completeness = Completeness::Heuristic;
    table.frontier = "tree search stopped after " + std::to_string(stats.nodes) + " nodes at radius " +
                     format_double(radius);
  }
  return table;
}

ClassTable restrict_table(const ClassTable& t, double L) {
  ClassTable r = t;
  r.cutoff = std::min(L, t.cutoff);
  std::erase_if(r.rows, [&](const GeodesicRecord& g) { return g.length > L; });
  return r;
}

void save_table(const ClassTable& t, const std::filesystem::path& path) {
  std::ostringstream out;
  out << "geodlab-classes v1 " << t.fingerprint << ' ' << format_double(t.cutoff) << '\n';
  out << "# completeness " << to_string(t.completeness) << " rows=" << t.rows.size() << " surface=" << t.surface
      << '\n';
  if (!t.frontier.empty()) out << "# frontier " << t.frontier << '\n';
  for (const auto& r : t.rows) {
    out << r.word.letters() << ' ' << format_double(r.trace) << ' ' << format_double(r.length) << ' '
        << (r.self_int ? std::to_string(*r.self_int) : std::string("?")) << ' ' << (r.primitive ? 1 : 0) << '\n';
  }
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + tmp.string());
    f << out.str();
    if (!f.flush()) throw Error(ErrorCode::InvalidArgument, "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

ClassTable load_table(const SurfaceModel& s, const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::CorruptFile, "cannot open " + path.string());
  std::stringstream buf;
  buf << f.rdbuf();
  const std::string text = buf.str();
  if (text.empty() || text.back() != '\n') corrupt(path, "missing final newline");

  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);

  ClassTable t;
  {
    std::istringstream h(lines[0]);
    std::string magic, version, cutoff, extra;
    if (!(h >> magic >> version >> t.fingerprint >> cutoff) || (h >> extra) || magic != "geodlab-classes" ||
        version != "v1" || !parse_double(cutoff, t.cutoff))
      corrupt(path, "bad header");
  }
  if (t.fingerprint != s.fingerprint())
    throw Error(ErrorCode::FingerprintMismatch, path.string() + " was written for a different surface");
  if (lines.size() < 2) corrupt(path, "missing completeness line");
  std::size_t rows = 0;
  {
    std::istringstream h(lines[1]);
    std::string hash, key, completeness, count, surface;
    if (!(h >> hash >> key >> completeness >> count >> surface) || hash != "#" || key != "completeness" ||
        count.rfind("rows=", 0) != 0 || surface.rfind("surface=", 0) != 0)
      corrupt(path, "bad completeness line");
    if (completeness == "certified") t.completeness = Completeness::Certified;
    else if (completeness == "heuristic") t.completeness = Completeness::Heuristic;
    else corrupt(path, "unknown completeness");
    const auto digits = std::string_view(count).substr(5);
    if (std::from_chars(digits.data(), digits.data() + digits.size(), rows).ptr != digits.data() + digits.size())
      corrupt(path, "bad row count");
    t.surface = surface.substr(8);
  }
  std::size_t i = 2;
  if (i < lines.size() && lines[i].rfind("# frontier ", 0) == 0) t.frontier = lines[i++].substr(11);
  for (; i < lines.size(); ++i) {
    std::istringstream r(lines[i]);
    std::string word, trace, length, self_int, primitive, extra;
    if (!(r >> word >> trace >> length >> self_int >> primitive) || (r >> extra)) corrupt(path, "bad record");
    GeodesicRecord rec{CyclicWord::canonicalize("a"), 0, 0, std::nullopt, true};
    try {
      rec.word = CyclicWord::parse(word);
    } catch (const Error&) {
      corrupt(path, "bad word " + word);
    }
    if (rec.word.letters() != word) corrupt(path, "word not canonical: " + word);
    if (!parse_double(trace, rec.trace) || !parse_double(length, rec.length)) corrupt(path, "bad number");
    if (self_int != "?") {
      int v = 0;
      auto res = std::from_chars(self_int.data(), self_int.data() + self_int.size(), v);
      if (res.ec != std::errc() || res.ptr != self_int.data() + self_int.size() || v < 0)
        corrupt(path, "bad self-intersection count");
      rec.self_int = v;
    }
    if (primitive != "0" && primitive != "1") corrupt(path, "bad primitive flag");
    rec.primitive = primitive == "1";
    t.rows.push_back(std::move(rec));
  }
  if (t.rows.size() != rows) corrupt(path, "row count mismatch (truncated?)");
  return t;
}

std::filesystem::path cache_path(const std::filesystem::path& dir, const SurfaceModel& s, double L) {
  return dir / s.fingerprint() / ("classes-L" + format_double(L) + ".txt");
}

ClassTable cached_classes(const SurfaceModel& s, double L, const EnumBudget& budget,
                          const std::filesystem::path& dir) {
  if (dir.empty()) return enumerate_classes(s, L, budget);
  const auto sub = dir / s.fingerprint();
  std::optional<ClassTable> best;
  std::error_code ec;
  if (std::filesystem::is_directory(sub, ec)) {
    for (const auto& entry : std::filesystem::directory_iterator(sub, ec)) {
      const auto name = entry.path().filename().string();
      if (name.rfind("classes-L", 0) != 0 || entry.path().extension() != ".txt") continue;
      try {
        auto t = load_table(s, entry.path());
        if (t.completeness != Completeness::Certified || t.cutoff < L) continue;
        if (!best || t.cutoff < best->cutoff) best = std::move(t);
      } catch (const Error&) {
        // unreadable cache entries are ignored and regenerated
      }
    }
  }
  if (best) return restrict_table(*best, L);
  auto t = enumerate_classes(s, L, budget);
  if (t.completeness == Completeness::Certified) save_table(t, cache_path(dir, s, L));
  return t;
}

}  // namespace geodlab
