#include "geodlab/report.hpp"

#include <charconv>
#include <cmath>

namespace geodlab {

namespace {

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json strands_json(const std::vector<std::pair<double, double>>& v) {
  Json a = Json::array();
  for (const auto& [lo, hi] : v) a.push_back({lo, hi});
  return a;
}

Json chord_json(const Chord& c) {
  return {{"kind", c.kind == Chord::Kind::Cusp ? "cusp" : "collar"},
          {"id", c.id},
          {"t_in", c.t_in},
          {"t_out", c.t_out},
          {"depth", c.depth},
          {"length", c.length}};
}

}  // namespace

Json report_header(const std::string& command, const SurfaceModel* s, std::uint64_t seed, Precision precision,
                   Completeness completeness) {
  Json j;
  j["format"] = kReportFormat;
  j["command"] = command;
  if (s) {
    j["surface"] = s->name();
    j["fingerprint"] = s->fingerprint();
  }
  j["seed"] = seed;
  j["precision"] = precision == Precision::Extended ? "high" : "standard";
  j["tolerances"] = {{"tie_relative", 1e-9},
                     {"classify", 1e-9},
                     {"crossing_relative", precision == Precision::Extended ? 1e-10 : 1e-7},
                     {"dedup_relative", 1e-5}};
  j["completeness"] = to_string(completeness);
  return j;
}

Json to_json(const GeodesicRecord& r) {
  Json j{{"word", r.word.letters()}, {"length", r.length}, {"trace", r.trace}};
  j["self_int"] = r.self_int ? Json(*r.self_int) : Json(nullptr);
  return j;
}

Json to_json(const ClassTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) rows.push_back(to_json(r));
  Json j{{"cutoff", t.cutoff}, {"count", t.rows.size()}, {"completeness", to_string(t.completeness)}};
  if (!t.frontier.empty()) j["frontier"] = t.frontier;
  j["rows"] = std::move(rows);
  return j;
}

Json to_json(const SelfIntersections& si) {
  Json cr = Json::array();
  for (const auto& c : si.crossings)
    cr.push_back({{"t", c.t},
                  {"partner", c.partner.word()},
                  {"partner_t", c.partner_t},
                  {"location", {c.location.x, c.location.y}}});
  return {{"count", si.count}, {"t0", si.t0}, {"attempts", si.attempts}, {"crossings", std::move(cr)}};
}

Json to_json(const C8Result& c) {
  return {{"length", c.length},
          {"witness", c.witness.letters()},
          {"self_int", c.self_int},
          {"searched", c.searched},
          {"completeness", to_string(c.completeness)}};
}

Json to_json(const ExtremalReport& r) {
  Json mins = Json::array();
  for (const auto& m : r.minimizers) mins.push_back(to_json(m));
  return {{"k", r.k},
          {"s_k", r.s_k ? Json(*r.s_k) : Json(nullptr)},
          {"s_geq_k", r.s_geq_k},
          {"I_k", r.I_k},
          {"bound", r.bound},
          {"cutoff", r.cutoff},
          {"scanned", r.scanned},
          {"c8", r.c8},
          {"tie_tolerance", r.tie_tolerance},
          {"completeness", to_string(r.completeness)},
          {"minimizers", std::move(mins)}};
}

Json to_json(const SegmentReport& r) {
  return {{"length", r.length}, {"r0", r.r0},   {"m", r.m},
          {"bound", r.bound},   {"final_count", r.final_count}, {"ok", r.ok}};
}

Json to_json(const TopologyReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples) {
    Json j{{"point", {s.point.x, s.point.y}}, {"elements", s.elements}, {"verdict", to_string(s.verdict)}};
    if (!s.root.empty()) j["root"] = s.root;
    samples.push_back(std::move(j));
  }
  return {{"r0", r.r0},          {"seed", r.seed},          {"disks", r.disks},
          {"cylinders", r.cylinders}, {"failures", r.failures}, {"samples", std::move(samples)}};
}

Json to_json(const Lemma31Report& r) {
  Json checks = Json::array();
  for (std::size_t i = 0; i < r.kChecks.size(); ++i)
    checks.push_back({{"check", r.kChecks[i]}, {"checked", r.checked[i]}, {"violated", r.violated[i]}});
  Json viol = Json::array();
  for (const auto& v : r.violations)
    viol.push_back({{"check", v.check}, {"sample", v.sample}, {"seed", v.seed}, {"count", v.count}, {"bound", v.bound}});
  return {{"core_length", r.core_length},
          {"samples", r.samples},
          {"seed", r.seed},
          {"resampled", r.resampled},
          {"checks", std::move(checks)},
          {"sum_bound", {{"checked", r.sum_bound_checked}, {"violated", r.sum_bound_violated}}},
          {"ok", r.ok()},
          {"violations", std::move(viol)}};
}

Json to_json(const ThickDecomposition& d) {
  Json visits = Json::array();
  for (const auto& c : d.thin_visits) visits.push_back(chord_json(c));
  return {{"eps", d.eps},
          {"length", d.length},
          {"thick_length", d.thick_length},
          {"crossings", d.crossings},
          {"thick_crossings", d.thick_crossings},
          {"strands", strands_json(d.strands)},
          {"thin_visits", std::move(visits)}};
}

Json to_json(const ThickReport& r) {
  return {{"thick_length", r.thick_length},     {"thick_crossings", r.thick_crossings},
          {"rhs", r.rhs},                       {"margin", r.margin},
          {"theorem_ok", r.theorem_ok},         {"min_strand", r.min_strand},
          {"bounded_strands", r.bounded_strands}, {"strands_ok", r.strands_ok}};
}

Json to_json(const HoroballStrandReport& r) {
  Json st = Json::array();
  for (const auto& c : r.strands) st.push_back(chord_json(c));
  return {{"horocycle_length", r.horocycle_length},
          {"min_chord", r.min_chord},
          {"shortest", r.shortest},
          {"lengths_ok", r.lengths_ok},
          {"count_ok", r.count_ok},
          {"strands", std::move(st)}};
}

Json to_json(const CuspConstants& k) {
  return {{"eps_prime", k.eps_prime},
          {"s", k.s},
          {"s_witness", k.s_witness ? Json(k.s_witness->letters()) : Json(nullptr)},
          {"eps", k.eps},
          {"d_X", k.d_X},
          {"d_per_cusp", k.d_per_cusp},
          {"K", k.K},
          {"D", number_or_null(k.D)},
          {"completeness", to_string(k.completeness)}};
}

Json to_json(const Thm1Report& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    auto j = to_json(row.ik);
    j["checks"] = {{"k_le_I_k", row.lower_ok}, {"I_k_le_bound", row.upper_ok}, {"length_chain", row.chain_ok}};
    j["segment"] = to_json(row.segment);
    rows.push_back(std::move(j));
  }
  return {{"c8", to_json(r.c8)}, {"ok", r.ok()}, {"rows", std::move(rows)}};
}

Json to_json(const ThickBatchReport& r) {
  Json eps = Json::array();
  for (const auto& e : r.eps)
    eps.push_back({{"eps", e.eps},
                   {"classes", e.classes},
                   {"with_thin_part", e.with_thin},
                   {"theorem_violations", e.theorem_violations},
                   {"strand_violations", e.strand_violations},
                   {"min_margin", e.min_margin},
                   {"min_margin_word", e.min_margin_word},
                   {"min_strand", e.min_strand},
                   {"violating", e.violating}});
  Json j{{"max_length", r.max_length}, {"ok", r.ok()}, {"eps", std::move(eps)}};
  if (r.horoball) {
    const auto& h = *r.horoball;
    j["horoball"] = {{"horocycle_length", h.horocycle_length},
                     {"classes", h.classes},
                     {"entering", h.entering},
                     {"strands", h.strands},
                     {"shortest", h.shortest},
                     {"length_violations", h.length_violations},
                     {"count_violations", h.count_violations},
                     {"violating", h.violating}};
  }
  return j;
}

Json to_json(const CrossCheckReport& r) {
  return {{"max_length", r.max_length},
          {"classes", r.classes},
          {"disagreements", r.disagreements},
          {"disagreeing", r.disagreeing},
          {"completeness", to_string(r.completeness)}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out;
}

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string csv_header_ik() { return "surface,k,s_k,s_geq_k,I_k,bound,cutoff,completeness"; }

std::string csv_row(const ExtremalReport& r) {
  return csv_row({r.surface, std::to_string(r.k), r.s_k ? format_number(*r.s_k) : "", format_number(r.s_geq_k),
                  std::to_string(r.I_k), format_number(r.bound), format_number(r.cutoff), to_string(r.completeness)});
}

std::string csv_header_constants() { return "surface,eps_prime,s,eps,d_X,K,D"; }

std::string csv_row(const std::string& surface, const CuspConstants& k) {
  return csv_row({surface, format_number(k.eps_prime), format_number(k.s), format_number(k.eps), format_number(k.d_X),
                  std::to_string(k.K), format_number(k.D)});
}

std::string csv_header_classes() { return "word,length,trace,self_int"; }

std::string csv_row(const GeodesicRecord& r) {
  return csv_row({r.word.letters(), format_number(r.length), format_number(r.trace),
                  r.self_int ? std::to_string(*r.self_int) : ""});
}

}  // namespace geodlab
