#include "kgx/io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "kgx/limits.hpp"

namespace kgx {

namespace {

const char* verdict_name(Verdict v) {
  return v == Verdict::Violated ? "violated" : "satisfied";
}

const char* variant_name(GapVariant v) {
  return v == GapVariant::FrickStable ? "frick" : "weak";
}

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::Equal: return "equal";
    case Relation::Less: return "less";
    default: return "greater";
  }
}

// Core gap fields; certificates go to the shared sidecar, referenced by hash.
Json gap_core_json(const GapReport& report, Json& sidecar) {
  Json j;
  j["variant"] = variant_name(report.variant);
  j["family"] = report.family;
  j["r"] = report.r;
  j["lhs_chi"] = report.lhs_chi;
  j["rhs"] = report.rhs;
  j["cd"] = report.cd;
  j["verdict"] = verdict_name(report.verdict);
  j["exploratory_r2"] = report.exploratory_r2;
  const Json chi_cert = certificate_to_json(report.chi_certificate);
  const Json def_cert = defect_certificate_to_json(report.defect_certificate);
  const std::string chi_hash = content_hash(chi_cert);
  const std::string def_hash = content_hash(def_cert);
  sidecar[chi_hash] = chi_cert;
  sidecar[def_hash] = def_cert;
  j["chi_certificate"] = chi_hash;
  j["defect_certificate"] = def_hash;
  return j;
}

}  // namespace

std::string serialize_set_system(const SetSystem& f) {
  std::ostringstream os;
  os << "n " << f.ground_size << '\n';
  for (const Subset& m : f.members) {
    for (std::size_t i = 0; i < m.labels.size(); ++i) {
      if (i) os << ' ';
      os << m.labels[i];
    }
    os << '\n';
  }
  return os.str();
}

SetSystem parse_set_system(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  bool have_n = false;
  int n = 0;
  std::vector<Subset> members;

  auto fail = [&](const std::string& what) {
    throw Error("line " + std::to_string(line_no) + ": " + what);
  };

  while (std::getline(is, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    if (!have_n) {
      std::string head;
      if (!(ls >> head)) continue;  // blank line
      if (head != "n") fail("expected header 'n <int>'");
      if (!(ls >> n) || n < 1) fail("invalid ground-set size");
      std::string rest;
      if (ls >> rest) fail("trailing content after ground-set size");
      have_n = true;
      continue;
    }
    std::vector<int> labels;
    int v;
    while (ls >> v) {
      if (v < 1 || v > n)
        fail("label " + std::to_string(v) + " out of range [1," +
             std::to_string(n) + "]");
      labels.push_back(v);
    }
    if (!ls.eof()) fail("invalid token in member line");
    if (labels.empty()) continue;  // blank or comment-only line
    std::sort(labels.begin(), labels.end());
    for (std::size_t i = 1; i < labels.size(); ++i)
      if (labels[i] == labels[i - 1])
        fail("repeated label " + std::to_string(labels[i]) + " in member");
    members.push_back(Subset{std::move(labels)});
  }
  if (!have_n) throw Error("missing 'n <int>' header");
  return make_set_system(n, std::move(members));
}

Json set_system_to_json(const SetSystem& f) {
  Json j;
  j["schema"] = 1;
  j["kind"] = "set_system";
  j["ground_size"] = f.ground_size;
  j["members"] = Json::array();
  for (const Subset& m : f.members) j["members"].push_back(m.labels);
  j["duplicates_collapsed"] = f.duplicates_collapsed;
  return j;
}

SetSystem set_system_from_json(const Json& j) {
  if (!j.contains("ground_size") || !j.contains("members"))
    throw Error("set-system JSON requires ground_size and members");
  std::vector<Subset> members;
  for (const auto& m : j.at("members"))
    members.push_back(Subset{m.get<std::vector<int>>()});
  return make_set_system(j.at("ground_size").get<int>(), std::move(members));
}

Json hypergraph_to_json(const Hypergraph& h) {
  Json j;
  j["schema"] = 1;
  j["kind"] = "hypergraph";
  j["vertex_count"] = h.vertex_count;
  if (h.vertex_labels) {
    j["labels"] = Json::array();
    for (const Subset& s : *h.vertex_labels) j["labels"].push_back(s.labels);
  }
  j["edges"] = Json::array();
  for (const auto& e : h.edges) {
    Json edge = Json::array();
    for (int v : e) edge.push_back(v + 1);
    j["edges"].push_back(std::move(edge));
  }
  return j;
}

Hypergraph hypergraph_from_json(const Json& j) {
  if (!j.contains("vertex_count") || !j.contains("edges"))
    throw Error("hypergraph JSON requires vertex_count and edges");
  const int n = j.at("vertex_count").get<int>();
  std::vector<std::vector<int>> edges;
  for (const auto& edge : j.at("edges")) {
    std::vector<int> e;
    for (const auto& v : edge) e.push_back(v.get<int>() - 1);
    edges.push_back(std::move(e));
  }
  std::optional<std::vector<Subset>> labels;
  if (j.contains("labels")) {
    labels.emplace();
    for (const auto& m : j.at("labels"))
      labels->push_back(Subset{m.get<std::vector<int>>()});
  }
  return make_hypergraph(n, std::move(edges), std::move(labels));
}

std::string hypergraph_edge_list(const Hypergraph& h) {
  std::ostringstream os;
  for (const auto& e : h.edges) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) os << ' ';
      os << e[i] + 1;
    }
    os << '\n';
  }
  return os.str();
}

Json certificate_to_json(const ColoringCertificate& cert) {
  Json j;
  j["colors"] = cert.colors;
  j["num_colors"] = cert.num_colors;
  return j;
}

ColoringCertificate certificate_from_json(const Json& j) {
  ColoringCertificate cert;
  cert.colors = j.at("colors").get<std::vector<int>>();
  cert.num_colors = j.at("num_colors").get<int>();
  return cert;
}

Json defect_certificate_to_json(const DefectCertificate& cert) {
  Json j;
  j["removed"] = cert.removed;
  j["r"] = cert.r;
  j["coloring"] = certificate_to_json(cert.coloring);
  return j;
}

Json chi_result_to_json(const ChiResult& result) {
  Json j;
  j["schema"] = 1;
  j["kind"] = "chi_result";
  j["feasible"] = result.feasible();
  if (result.feasible()) {
    j["chi"] = result.chi;
    if (result.certificate)
      j["certificate"] = certificate_to_json(*result.certificate);
  } else {
    j["infeasible_witness"] = *result.infeasible_witness;
  }
  return j;
}

Json colorable_result_to_json(int m, const ColorDecision& decision) {
  Json j;
  j["schema"] = 1;
  j["kind"] = "colorable_result";
  j["m"] = m;
  j["colorable"] = decision.colorable();
  if (decision.certificate)
    j["certificate"] = certificate_to_json(*decision.certificate);
  if (decision.status == ColorStatus::SingletonEdge) {
    j["uncolorable_for_every_m"] = true;
    j["singleton_edge"] = *decision.singleton_edge;
  }
  return j;
}

Json defect_result_to_json(int r, const DefectResult& result) {
  Json j;
  j["schema"] = 1;
  j["kind"] = "defect_result";
  j["cd"] = result.cd;
  j["removed"] = result.certificate.removed;
  j["coloring"] = certificate_to_json(result.certificate.coloring);
  j["r"] = r;
  j["refuted_sizes"] = Json::array();
  for (const SizeRefutation& s : result.refuted_sizes)
    j["refuted_sizes"].push_back({{"size", s.size}, {"sets_tested", s.sets_tested}});
  return j;
}

Json refutation_report_to_json(const RefutationReport& report) {
  Json j;
  j["schema"] = 1;
  j["kind"] = "refutation_report";
  j["r"] = report.r;
  j["max_size"] = report.max_size;
  j["refuted"] = report.refuted;
  j["sets_tested"] = report.sets_tested;
  j["per_size"] = Json::array();
  for (const SizeRefutation& s : report.per_size)
    j["per_size"].push_back({{"size", s.size}, {"sets_tested", s.sets_tested}});
  if (report.counterwitness)
    j["counterwitness"] = defect_certificate_to_json(*report.counterwitness);
  return j;
}

Json gap_report_to_json(const GapReport& report) {
  Json sidecar = Json::object();
  Json j;
  j["schema"] = 1;
  j["kind"] = "gap_report";
  Json core = gap_core_json(report, sidecar);
  j.update(core);
  j["certificates"] = std::move(sidecar);
  return j;
}

Json ziegler_report_to_json(const ZieglerReport& report) {
  Json j;
  j["schema"] = 1;
  j["kind"] = "ziegler_report";
  j["n"] = report.n;
  j["k"] = report.k;
  j["r"] = report.r;
  j["chi"] = report.chi;
  j["bound"] = report.bound;
  j["relation"] = relation_name(report.relation);
  j["certificate"] = certificate_to_json(report.certificate);
  return j;
}

Json verify_report_to_json(const VerifyReport& report) {
  Json j;
  j["schema"] = 1;
  j["kind"] = "verify_report";
  j["title"] = report.title;
  j["passed"] = report.all_passed();
  j["checks"] = Json::array();
  for (const Check& c : report.checks) {
    Json check;
    check["name"] = c.name;
    check["passed"] = c.passed;
    if (!c.details.empty()) check["details"] = c.details;
    j["checks"].push_back(std::move(check));
  }
  j["values"] = Json::object();
  for (const auto& [key, value] : report.values) j["values"][key] = value;
  return j;
}

Json remark_report_to_json(const RemarkReport& report) {
  Json j;
  j["schema"] = 1;
  j["kind"] = "remark_report";
  j["r"] = report.r;
  j["chi_stable"] = report.chi_stable;
  j["chi_almost"] = report.chi_almost;
  j["difference"] = report.difference;
  j["bound_holds"] = report.bound_holds;
  j["extension_colors"] = report.extension_colors;
  j["extension_verified"] = report.extension_verified;
  return j;
}

Json scan_result_to_json(const ScanResult& result) {
  Json j;
  j["schema"] = 1;
  j["kind"] = "scan_report";
  j["params"] = {{"n_min", result.params.n_min},
                 {"n_max", result.params.n_max},
                 {"members_min", result.params.members_min},
                 {"members_max", result.params.members_max},
                 {"size_min", result.params.size_min},
                 {"size_max", result.params.size_max},
                 {"r_min", result.params.r_min},
                 {"r_max", result.params.r_max},
                 {"samples", result.params.samples},
                 {"seed", result.params.seed}};
  j["summary"] = {{"samples", result.params.samples},
                  {"evaluated", result.evaluated},
                  {"skipped", result.skipped},
                  {"frick_violations", result.frick_violations},
                  {"weak_violations", result.weak_violations}};
  Json sidecar = Json::object();
  j["entries"] = Json::array();
  for (const ScanEntry& e : result.entries) {
    Json entry;
    entry["sample"] = e.sample_index;
    entry["name"] = e.family_name;
    entry["n"] = e.family.ground_size;
    entry["members"] = e.family.members.size();
    entry["r"] = e.r;
    entry["skipped"] = e.skipped;
    if (e.skipped) entry["skip_reason"] = e.skip_reason;
    if (e.frick) entry["frick"] = gap_core_json(*e.frick, sidecar);
    if (e.weak) entry["weak"] = gap_core_json(*e.weak, sidecar);
    j["entries"].push_back(std::move(entry));
  }
  j["certificates"] = std::move(sidecar);
  return j;
}

std::string gap_report_text(const GapReport& report) {
  std::ostringstream os;
  os << "gap report (" << variant_name(report.variant) << " variant)\n";
  os << "  family    : " << report.family << '\n';
  os << "  r         : " << report.r;
  if (report.exploratory_r2) os << "   (r=2 is exploratory for this variant)";
  os << '\n';
  os << "  lhs chi   : " << report.lhs_chi << '\n';
  os << "  cd        : " << report.cd << '\n';
  os << "  rhs       : " << report.rhs << "   (= ceil(cd/(r-1)))\n";
  os << "  verdict   : " << (report.verdict == Verdict::Violated ? "VIOLATED"
                                                                 : "SATISFIED")
     << '\n';
  return os.str();
}

std::string ziegler_report_text(const ZieglerReport& report) {
  std::ostringstream os;
  os << "ziegler check (n=" << report.n << ", k=" << report.k
     << ", r=" << report.r << ")\n";
  os << "  chi       : " << report.chi << '\n';
  os << "  bound     : " << report.bound << '\n';
  os << "  relation  : " << relation_name(report.relation) << '\n';
  return os.str();
}

std::string verify_report_text(const VerifyReport& report) {
  std::ostringstream os;
  os << report.title << '\n';
  for (const Check& c : report.checks) {
    os << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name;
    if (!c.details.empty()) os << "  (" << c.details << ")";
    os << '\n';
  }
  os << "  values:";
  for (const auto& [key, value] : report.values)
    os << ' ' << key << '=' << value;
  os << '\n';
  os << "  result: " << (report.all_passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string remark_report_text(const RemarkReport& report) {
  std::ostringstream os;
  os << "remark bound (r=" << report.r << ")\n";
  os << "  chi stable       : " << report.chi_stable << '\n';
  os << "  chi almost-stable: " << report.chi_almost << '\n';
  os << "  difference       : " << report.difference << "  (bound "
     << (report.bound_holds ? "holds" : "VIOLATED") << ")\n";
  os << "  extension        : " << report.extension_colors << " colors, "
     << (report.extension_verified ? "verified" : "FAILED") << '\n';
  return os.str();
}

std::string scan_result_text(const ScanResult& result) {
  std::ostringstream os;
  os << std::left << std::setw(14) << "name" << std::setw(5) << "n"
     << std::setw(9) << "members" << std::setw(4) << "r" << std::setw(24)
     << "frick lhs/rhs verdict" << std::setw(24) << "weak lhs/rhs verdict"
     << '\n';
  for (const ScanEntry& e : result.entries) {
    os << std::left << std::setw(14) << e.family_name << std::setw(5)
       << e.family.ground_size << std::setw(9) << e.family.members.size()
       << std::setw(4) << e.r;
    if (e.skipped) {
      os << "skipped: " << e.skip_reason << '\n';
      continue;
    }
    auto cell = [](const std::optional<GapReport>& g) {
      if (!g) return std::string("-");
      std::ostringstream c;
      c << g->lhs_chi << '/' << g->rhs << ' '
        << (g->verdict == Verdict::Violated ? "VIOLATED" : "satisfied");
      return c.str();
    };
    os << std::setw(24) << cell(e.frick) << std::setw(24) << cell(e.weak)
       << '\n';
  }
  os << "summary: samples=" << result.params.samples
     << " evaluated=" << result.evaluated << " skipped=" << result.skipped
     << " frick_violations=" << result.frick_violations
     << " weak_violations=" << result.weak_violations << '\n';
  return os.str();
}

std::string chi_result_text(const ChiResult& result) {
  std::ostringstream os;
  if (!result.feasible()) {
    os << "uncolorable for every m: singleton edge #" << *result.infeasible_witness
       << '\n';
    return os.str();
  }
  os << "chi = " << result.chi << '\n';
  if (result.certificate && !result.certificate->colors.empty()) {
    os << "colors:";
    for (int c : result.certificate->colors) os << ' ' << c;
    os << '\n';
  }
  return os.str();
}

std::string defect_result_text(int r, const DefectResult& result) {
  std::ostringstream os;
  os << "cd_" << r << " = " << result.cd << '\n';
  os << "removed:";
  if (result.certificate.removed.empty()) os << " (none)";
  for (int v : result.certificate.removed) os << ' ' << v;
  os << '\n';
  os << "coloring:";
  for (int c : result.certificate.coloring.colors) os << ' ' << c;
  os << '\n';
  os << "refuted sizes:";
  for (const SizeRefutation& s : result.refuted_sizes)
    os << ' ' << s.size << " (" << s.sets_tested << " sets)";
  if (result.refuted_sizes.empty()) os << " (none)";
  os << '\n';
  return os.str();
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string content_hash(const Json& j) {
  std::ostringstream os;
  os << std::hex << std::setfill('0') << std::setw(16) << fnv1a64(j.dump());
  return os.str();
}

}  // namespace kgx
