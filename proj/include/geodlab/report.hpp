#pragma once
// JSON and CSV forms of the computed reports. JSON is canonical; CSV rows are
// projections of it.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "geodlab/batch.hpp"
#include "geodlab/constructions.hpp"
#include "geodlab/cylinder.hpp"
#include "geodlab/extremal.hpp"
#include "geodlab/thick.hpp"

namespace geodlab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportFormat = "geodlab-report v1";

/// Header shared by every report: format tag, command, surface identity,
/// seed, numerical tolerances and completeness.
Json report_header(const std::string& command, const SurfaceModel* s, std::uint64_t seed, Precision precision,
                   Completeness completeness);

Json to_json(const GeodesicRecord& r);
Json to_json(const ClassTable& t);
Json to_json(const SelfIntersections& si);
Json to_json(const C8Result& c);
Json to_json(const ExtremalReport& r);
Json to_json(const SegmentReport& r);
Json to_json(const TopologyReport& r);
Json to_json(const Lemma31Report& r);
Json to_json(const ThickDecomposition& d);
Json to_json(const ThickReport& r);
Json to_json(const HoroballStrandReport& r);
Json to_json(const CuspConstants& k);
Json to_json(const Thm1Report& r);
Json to_json(const ThickBatchReport& r);
Json to_json(const CrossCheckReport& r);

/// Quotes a field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);
std::string csv_row(const std::vector<std::string>& fields);
/// Shortest round-trip decimal form, as in the JSON output.
std::string format_number(double x);

/// surface,k,s_k,s_geq_k,I_k,bound,cutoff,completeness
std::string csv_header_ik();
std::string csv_row(const ExtremalReport& r);
/// surface,eps_prime,s,eps,d_X,K,D
std::string csv_header_constants();
std::string csv_row(const std::string& surface, const CuspConstants& k);
/// word,length,trace,self_int
std::string csv_header_classes();
std::string csv_row(const GeodesicRecord& r);

}  // namespace geodlab
