#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "geodlab/error.hpp"
#include "geodlab/report.hpp"

using namespace geodlab;

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kVerifyFailed = 2;
constexpr int kNotCertified = 3;
constexpr int kUsage = 64;

struct Global {
  std::uint64_t seed = 0;
  unsigned workers = 0;
  std::string format = "json";
  std::string precision = "standard";
  bool require_certified = false;
  std::string cache;
  std::string out;
};

Precision precision_of(const Global& g) { return g.precision == "high" ? Precision::Extended : Precision::Double; }

IntersectionOptions intersection_options(const Global& g) {
  IntersectionOptions o;
  o.seed = g.seed;
  o.precision = precision_of(g);
  return o;
}

EnumBudget budget_of(const Global& g) {
  EnumBudget b;
  b.workers = g.workers;
  return b;
}

ScanOptions scan_options(const Global& g) {
  ScanOptions o;
  o.budget = budget_of(g);
  o.intersections = intersection_options(g);
  o.cache_dir = g.cache;
  return o;
}

// Prints the report and maps it to an exit code.
int emit(const Global& g, const Json& j, const std::string& csv, bool ok, Completeness completeness) {
  const std::string text = g.format == "csv" ? csv : j.dump(2) + "\n";
  if (g.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + g.out);
    f << text;
  }
  if (g.require_certified && completeness == Completeness::Heuristic) return kNotCertified;
  return ok ? kOk : kVerifyFailed;
}

Json header(const std::string& command, const SurfaceModel* s, const Global& g, Completeness c) {
  return report_header(command, s, g.seed, precision_of(g), c);
}

int cmd_enumerate(const Global& g, const std::string& spec, double L) {
  const auto s = make_surface(spec);
  const auto t = cached_classes(s, L, budget_of(g), g.cache);
  auto j = header("enumerate", &s, g, t.completeness);
  j["result"] = to_json(t);
  std::string csv = csv_header_classes() + "\n";
  for (const auto& r : t.rows) csv += csv_row(r) + "\n";
  return emit(g, j, csv, true, t.completeness);
}

int cmd_invariants(const Global& g, const std::string& spec, double searchL) {
  const auto s = make_surface(spec);
  ClassScanner scan(s, scan_options(g));
  Completeness comp = Completeness::Certified;
  double scanned = 0;
  const auto sys = scan.shortest([](const GeodesicRecord&) { return true; }, searchL, 1e-9, &scanned, &comp);
  const auto c8 = compute_C8(scan, searchL);
  if (c8.completeness == Completeness::Heuristic) comp = Completeness::Heuristic;
  if (sys.empty()) throw Error(ErrorCode::SearchExhausted, "no closed geodesic below the search length");
  auto j = header("invariants", &s, g, comp);
  Json systoles = Json::array();
  for (const auto& r : sys) systoles.push_back(to_json(r));
  j["result"] = {{"systole", sys.front().length},
                 {"systole_simple", *sys.front().self_int == 0},
                 {"systoles", std::move(systoles)},
                 {"c8", to_json(c8)}};
  std::string csv = "surface,systole,systole_word,systole_self_int,c8,c8_witness,completeness\n";
  csv += csv_row({s.name(), format_number(sys.front().length), sys.front().word.letters(),
                  std::to_string(*sys.front().self_int), format_number(c8.length), c8.witness.letters(),
                  to_string(comp)}) +
         "\n";
  return emit(g, j, csv, true, comp);
}

int cmd_ik(const Global& g, const std::string& spec, int k0, int k1, double searchL, bool minus_k) {
  const auto s = make_surface(spec);
  ClassScanner scan(s, scan_options(g));
  const auto c8 = compute_C8(scan, searchL);
  Completeness comp = c8.completeness;
  Json rows = Json::array();
  std::string csv = minus_k ? "surface,k,I_k,I_k_minus_k,s_geq_k,completeness\n" : csv_header_ik() + "\n";
  for (int k = k0; k <= k1; ++k) {
    auto r = compute_Ik(scan, k, c8);
    r.seed = g.seed;
    if (r.completeness == Completeness::Heuristic) comp = Completeness::Heuristic;
    auto rj = to_json(r);
    if (minus_k) {
      rj["I_k_minus_k"] = r.I_k - k;
      csv += csv_row({r.surface, std::to_string(k), std::to_string(r.I_k), std::to_string(r.I_k - k),
                      format_number(r.s_geq_k), to_string(r.completeness)}) +
             "\n";
    } else {
      csv += csv_row(r) + "\n";
    }
    rows.push_back(std::move(rj));
  }
  auto j = header(minus_k ? "experiment ik-minus-k" : "ik", &s, g, comp);
  j["result"] = {{"c8", to_json(c8)}, {"rows", std::move(rows)}};
  return emit(g, j, csv, true, comp);
}

int cmd_thm1(const Global& g, const std::string& spec, int kmax, double searchL) {
  const auto s = make_surface(spec);
  ClassScanner scan(s, scan_options(g));
  const auto r = verify_thm1(scan, kmax, searchL);
  auto j = header("verify thm1", &s, g, r.completeness);
  j["result"] = to_json(r);
  std::string csv = csv_header_ik() + ",segment_ok,ok\n";
  for (const auto& row : r.rows)
    csv += csv_row(row.ik) + "," + (row.segment.ok ? "true" : "false") + "," + (row.ok() ? "true" : "false") + "\n";
  return emit(g, j, csv, r.ok(), r.completeness);
}

int cmd_lemma31(const Global& g, int samples, const std::vector<double>& lengths) {
  Json rows = Json::array();
  std::string csv = "core_length,check,checked,violated\n";
  bool ok = true;
  for (double len : lengths) {
    const auto c = CylinderModel::hyperbolic(len, 1.0, 1.0);
    const auto r = verify_lemma31(c, samples, class_seed(g.seed, "core " + format_number(len)));
    ok = ok && r.ok();
    for (std::size_t i = 0; i < r.kChecks.size(); ++i)
      csv += csv_row({format_number(len), r.kChecks[i], std::to_string(r.checked[i]), std::to_string(r.violated[i])}) +
             "\n";
    rows.push_back(to_json(r));
  }
  auto j = header("verify lemma31", nullptr, g, Completeness::Certified);
  j["result"] = {{"ok", ok}, {"cylinders", std::move(rows)}};
  return emit(g, j, csv, ok, Completeness::Certified);
}

int cmd_thick(const Global& g, const std::string& spec, const std::vector<double>& eps, double L) {
  const auto s = make_surface(spec);
  const auto r = verify_thick_batch(s, L, eps, intersection_options(g), budget_of(g));
  auto j = header("verify thick", &s, g, r.completeness);
  j["result"] = to_json(r);
  std::string csv = "surface,eps,classes,theorem_violations,strand_violations,min_margin,min_strand\n";
  for (const auto& e : r.eps)
    csv += csv_row({s.name(), format_number(e.eps), std::to_string(e.classes), std::to_string(e.theorem_violations),
                    std::to_string(e.strand_violations), format_number(e.min_margin), format_number(e.min_strand)}) +
           "\n";
  return emit(g, j, csv, r.ok(), r.completeness);
}

int cmd_constants(const Global& g, const std::string& spec) {
  const auto s = make_surface(spec);
  const auto k = cusp_constants(s, scan_options(g));
  auto j = header("cusp-constants", &s, g, k.completeness);
  j["result"] = to_json(k);
  return emit(g, j, csv_header_constants() + "\n" + csv_row(s.name(), k) + "\n", true, k.completeness);
}

int cmd_selfint(const Global& g, const std::string& spec, const std::string& word) {
  const auto s = make_surface(spec);
  const auto c = CyclicWord::canonicalize(word);
  const auto si = self_intersections(s, c, intersection_options(g));
  const double len = s.class_length(c);
  auto j = header("selfint", &s, g, Completeness::Certified);
  j["result"] = {{"word", c.letters()}, {"length", len}, {"self_intersections", to_json(si)}};
  const std::string csv = "surface,word,length,self_int\n" +
                          csv_row({s.name(), c.letters(), format_number(len), std::to_string(si.count)}) + "\n";
  return emit(g, j, csv, true, Completeness::Certified);
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidSpec:
    case ErrorCode::ParseError:
    case ErrorCode::EmptyAfterReduction:
      return kUsage;
    case ErrorCode::BudgetExceeded:
      return kNotCertified;
    default:
      return kError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed geodesics and their self-intersections on hyperbolic surfaces"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--seed", g.seed, "Seed for crossing offsets and random samples");
  app.add_option("--workers", g.workers, "Worker threads (0: hardware)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--precision", g.precision, "Scalar type for crossing tests")
      ->check(CLI::IsMember({"standard", "high"}));
  app.add_flag("--require-certified", g.require_certified, "Exit 3 when enumeration is not certified");
  app.add_option("--cache", g.cache, "Directory for class tables");
  app.add_option("--out", g.out, "Write the report to a file");

  std::string surface, word;
  double max_length = 0, search = 8;
  int k = 0, kmax = 0, samples = 1000;
  std::vector<double> eps{0.1, 0.25, 0.5}, lengths{0.3, 1.0, 3.0};
  std::function<int()> run;

  auto add_surface = [&](CLI::App* c) { c->add_option("--surface", surface, "x2, modular-torus or pants:l1,l2,l3")->required(); };

  auto* en = app.add_subcommand("enumerate", "Primitive classes up to a length");
  add_surface(en);
  en->add_option("--max-length", max_length)->required();
  en->callback([&] { run = [&] { return cmd_enumerate(g, surface, max_length); }; });

  auto* inv = app.add_subcommand("invariants", "Systole, C8 and witnesses");
  add_surface(inv);
  inv->add_option("--search-length", search, "Scan limit");
  inv->callback([&] { run = [&] { return cmd_invariants(g, surface, search); }; });

  auto* ik = app.add_subcommand("ik", "I_k, s_k and s_{>=k}");
  add_surface(ik);
  ik->add_option("--k", k);
  ik->add_option("--kmax", kmax);
  ik->add_option("--search-length", search, "C8 scan limit");
  ik->callback([&] {
    if (k < 1 && kmax < 1) throw CLI::ValidationError("--k or --kmax", "give --k or --kmax");
    const int lo = k >= 1 ? k : 1, hi = kmax >= 1 ? kmax : k;
    if (hi < lo) throw CLI::ValidationError("--kmax", "must be at least --k");
    run = [&, lo, hi] { return cmd_ik(g, surface, lo, hi, search, false); };
  });

  auto* verify = app.add_subcommand("verify", "Check a theorem or lemma");
  verify->require_subcommand(1);
  auto* thm1 = verify->add_subcommand("thm1", "k <= I_k <= bound and the length chain");
  add_surface(thm1);
  thm1->add_option("--kmax", kmax)->required()->check(CLI::PositiveNumber);
  thm1->add_option("--search-length", search, "C8 scan limit");
  thm1->callback([&] { run = [&] { return cmd_thm1(g, surface, kmax, search); }; });

  auto* l31 = verify->add_subcommand("lemma31", "Strand bounds in random cylinders");
  l31->add_option("--samples", samples)->check(CLI::PositiveNumber);
  l31->add_option("--seed", g.seed);
  l31->add_option("--lengths", lengths, "Core lengths")->delimiter(',');
  l31->callback([&] { run = [&] { return cmd_lemma31(g, samples, lengths); }; });

  auto* thick = verify->add_subcommand("thick", "Thick length inequality and strand floors");
  add_surface(thick);
  thick->add_option("--eps", eps, "Values of eps, comma separated")->delimiter(',');
  thick->add_option("--max-length", max_length)->required();
  thick->callback([&] { run = [&] { return cmd_thick(g, surface, eps, max_length); }; });

  auto* cc = app.add_subcommand("cusp-constants", "eps', s, eps, d_X, K and D");
  add_surface(cc);
  cc->callback([&] { run = [&] { return cmd_constants(g, surface); }; });

  auto* ex = app.add_subcommand("experiment", "Exploratory runs");
  ex->require_subcommand(1);
  auto* imk = ex->add_subcommand("ik-minus-k", "I_k - k for k = 1..kmax");
  add_surface(imk);
  imk->add_option("--kmax", kmax)->required()->check(CLI::PositiveNumber);
  imk->add_option("--search-length", search, "C8 scan limit");
  imk->callback([&] { run = [&] { return cmd_ik(g, surface, 1, kmax, search, true); }; });

  auto* si = app.add_subcommand("selfint", "Self-intersections of one class");
  add_surface(si);
  si->add_option("--word", word)->required();
  si->callback([&] { run = [&] { return cmd_selfint(g, surface, word); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    return run();
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}
