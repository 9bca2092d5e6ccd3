#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "kgx/conjectures.hpp"
#include "kgx/coloring.hpp"
#include "kgx/defect.hpp"
#include "kgx/hypergraph.hpp"
#include "kgx/set_system.hpp"

namespace kgx {

using Json = nlohmann::ordered_json;

// --- set-system text format -------------------------------------------------
// First non-comment line: "n <int>". Each following non-comment line lists
// one member as space-separated 1-based labels. '#' starts a comment.
std::string serialize_set_system(const SetSystem& f);
SetSystem parse_set_system(const std::string& text);  // line-numbered errors

// --- JSON mirrors ------------------------------------------------------------
Json set_system_to_json(const SetSystem& f);
SetSystem set_system_from_json(const Json& j);
Json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j);
std::string hypergraph_edge_list(const Hypergraph& h);  // 1-based, one per line

Json certificate_to_json(const ColoringCertificate& cert);
ColoringCertificate certificate_from_json(const Json& j);
Json defect_certificate_to_json(const DefectCertificate& cert);

Json chi_result_to_json(const ChiResult& result);
Json colorable_result_to_json(int m, const ColorDecision& decision);
Json defect_result_to_json(int r, const DefectResult& result);
Json refutation_report_to_json(const RefutationReport& report);
Json gap_report_to_json(const GapReport& report);
Json ziegler_report_to_json(const ZieglerReport& report);
Json verify_report_to_json(const VerifyReport& report);
Json remark_report_to_json(const RemarkReport& report);
Json scan_result_to_json(const ScanResult& result);

// --- text rendering ----------------------------------------------------------
std::string gap_report_text(const GapReport& report);
std::string ziegler_report_text(const ZieglerReport& report);
std::string verify_report_text(const VerifyReport& report);
std::string remark_report_text(const RemarkReport& report);
std::string scan_result_text(const ScanResult& result);
std::string chi_result_text(const ChiResult& result);
std::string defect_result_text(int r, const DefectResult& result);

// Content hash used to reference certificates from reports; the certificates
// themselves live in a sidecar object keyed by these hashes.
std::uint64_t fnv1a64(std::string_view data);
std::string content_hash(const Json& j);

}  // namespace kgx
