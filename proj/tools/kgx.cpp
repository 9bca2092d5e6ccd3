#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "kgx/conjectures.hpp"
#include "kgx/io.hpp"
#include "kgx/kneser.hpp"

namespace {

using namespace kgx;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolated = 2;
constexpr int kExitCap = 3;

struct Common {
  std::string format = "text";
  std::string output;
  int threads = 1;
  std::uint64_t max_edges = 10'000'000;
  int max_defect_size = -1;
  double time_budget = 0.0;

  EngineLimits limits() const {
    EngineLimits l;
    l.max_edges = max_edges;
    l.threads = threads;
    if (max_defect_size >= 0) l.max_defect_size = max_defect_size;
    if (time_budget > 0.0) l.with_budget_seconds(time_budget);
    return l;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "output format (text|json)")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--output,-o", c.output, "write output to this file");
  cmd->add_option("--threads", c.threads,
                  "worker threads for enumeration and removal-set scans")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-edges", c.max_edges,
                  "cap on materialized/counted Kneser edges");
  cmd->add_option("--max-defect-size", c.max_defect_size,
                  "cap on the removal-set size explored by defect search");
  cmd->add_option("--time-budget-seconds", c.time_budget,
                  "wall-clock budget; exceeding it exits with code 3");
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const Common& c, const std::string& data) {
  if (c.output.empty()) {
    std::cout << data;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw Error("cannot write '" + c.output + "'");
  out << data;
}

SetSystem load_set_system(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return set_system_from_json(Json::parse(text));
  return parse_set_system(text);
}

Hypergraph load_hypergraph_input(const std::string& hypergraph_path,
                                 const std::string& family_path) {
  if (hypergraph_path.empty() == family_path.empty())
    throw Error("provide exactly one of --input (hypergraph JSON) or --family (set system)");
  if (!family_path.empty()) return as_hypergraph(load_set_system(family_path));
  return hypergraph_from_json(Json::parse(read_file(hypergraph_path)));
}

std::string render_set_system(const Common& c, const SetSystem& f) {
  if (c.format == "json") return set_system_to_json(f).dump(2) + "\n";
  return serialize_set_system(f);
}

}  // namespace

// write_output uses this before it is defined above when inlined; keep a
// trivial passthrough to avoid reordering the helpers.
static std::string path_or(const std::string& p) { return p; }

int main(int argc, char** argv) {
  CLI::App app{
      "kgx: exact computations on generalized Kneser hypergraphs -- "
      "chromatic numbers, colorability defects, certificates and "
      "conjecture gap checks (ground sets up to 128 labels)"};
  app.require_subcommand(1);

  // ---- construct ----
  auto* construct = app.add_subcommand("construct", "build one of the bundled families");
  construct->require_subcommand(1);
  Common c_construct;
  int p_n = 0, p_k = 0, p_r = 0;
  auto* ctor_complete = construct->add_subcommand("complete", "all k-subsets of [n]");
  ctor_complete->add_option("--n", p_n)->required();
  ctor_complete->add_option("--k", p_k)->required();
  add_common(ctor_complete, c_construct);
  auto* ctor_fnr = construct->add_subcommand("fnr", "2-subsets of [n] that are not r-stable");
  ctor_fnr->add_option("--n", p_n)->required();
  ctor_fnr->add_option("--r", p_r)->required();
  add_common(ctor_fnr, c_construct);
  auto* ctor_prop2 = construct->add_subcommand("prop2",
      "non-r-stable pairs on [r(2r-1)] plus the step-r pair cycle");
  ctor_prop2->add_option("--r", p_r)->required();
  add_common(ctor_prop2, c_construct);

  // ---- filter ----
  auto* filter = app.add_subcommand("filter", "keep the s-stable or almost s-stable members");
  Common c_filter;
  std::string filter_input, filter_kind = "stable";
  int filter_s = 1;
  filter->add_option("--input,-i", filter_input)->required();
  filter->add_option("--s", filter_s)->required();
  filter->add_option("--kind", filter_kind, "stable|almost")
      ->check(CLI::IsMember({"stable", "almost"}));
  add_common(filter, c_filter);

  // ---- kneser ----
  auto* kneser = app.add_subcommand("kneser", "build KG^r of a set system");
  Common c_kneser;
  std::string kneser_input;
  int kneser_r = 2;
  kneser->add_option("--input,-i", kneser_input)->required();
  kneser->add_option("--r", kneser_r)->required();
  add_common(kneser, c_kneser);

  // ---- chi ----
  auto* chi = app.add_subcommand("chi", "exact chromatic number with certificate");
  Common c_chi;
  std::string chi_input, chi_family;
  chi->add_option("--input,-i", chi_input, "hypergraph JSON");
  chi->add_option("--family", chi_family, "set system, read as the hypergraph ([n], F)");
  add_common(chi, c_chi);

  // ---- colorable ----
  auto* colorable = app.add_subcommand("colorable", "decide m-colorability");
  Common c_colorable;
  std::string col_input, col_family;
  int col_m = 1;
  colorable->add_option("--input,-i", col_input, "hypergraph JSON");
  colorable->add_option("--family", col_family, "set system, read as the hypergraph ([n], F)");
  colorable->add_option("--m", col_m)->required();
  add_common(colorable, c_colorable);

  // ---- defect ----
  auto* defect = app.add_subcommand("defect", "exact r-colorability defect");
  Common c_defect;
  std::string def_input, def_family;
  int def_r = 2, def_refute_only = -1;
  defect->add_option("--input,-i", def_input, "hypergraph JSON");
  defect->add_option("--family", def_family, "set system, read as the hypergraph ([n], F)");
  defect->add_option("--r", def_r)->required();
  defect->add_option("--refute-only", def_refute_only,
                     "only refute removal sets up to this size (lower-bound report)");
  add_common(defect, c_defect);

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "built-in verification scenarios");
  verify->require_subcommand(1);
  Common c_verify;
  int v_r = 2, v_k = 1, v_n = 0;
  bool v_skip_exact = false;
  std::string v_input;
  auto* verify_prop1_cmd = verify->add_subcommand("prop1", "defect-1 family on n = kr+1");
  verify_prop1_cmd->add_option("--r", v_r)->required();
  verify_prop1_cmd->add_option("--k", v_k)->required();
  add_common(verify_prop1_cmd, c_verify);
  auto* verify_prop2_cmd = verify->add_subcommand("prop2", "augmented family on n = r(2r-1)");
  verify_prop2_cmd->add_option("--r", v_r)->required();
  verify_prop2_cmd->add_flag("--skip-exact-cd", v_skip_exact,
                             "stop after the cd >= r refutation");
  add_common(verify_prop2_cmd, c_verify);
  auto* verify_remark_cmd = verify->add_subcommand("remark",
      "chi over almost-stable part exceeds the stable part by at most 1");
  verify_remark_cmd->add_option("--input,-i", v_input)->required();
  verify_remark_cmd->add_option("--r", v_r)->required();
  add_common(verify_remark_cmd, c_verify);
  auto* verify_ziegler_cmd = verify->add_subcommand("ziegler",
      "chi over the r-stable k-subsets against the closed-form bound");
  verify_ziegler_cmd->add_option("--n", v_n)->required();
  verify_ziegler_cmd->add_option("--k", v_k)->required();
  verify_ziegler_cmd->add_option("--r", v_r)->required();
  add_common(verify_ziegler_cmd, c_verify);

  // ---- gap ----
  auto* gap = app.add_subcommand("gap", "chi(KG^r(part)) vs ceil(cd_r/(r-1))");
  gap->require_subcommand(1);
  Common c_gap;
  std::string gap_input;
  int gap_r = 2;
  auto* gap_frick = gap->add_subcommand("frick", "r-stable part");
  gap_frick->add_option("--input,-i", gap_input)->required();
  gap_frick->add_option("--r", gap_r)->required();
  add_common(gap_frick, c_gap);
  auto* gap_weak = gap->add_subcommand("weak", "almost r-stable part");
  gap_weak->add_option("--input,-i", gap_input)->required();
  gap_weak->add_option("--r", gap_r)->required();
  add_common(gap_weak, c_gap);

  // ---- scan ----
  auto* scan = app.add_subcommand("scan", "seeded random-family counterexample scan");
  Common c_scan;
  ScanParams params;
  scan->add_option("--samples", params.samples)->required();
  scan->add_option("--seed", params.seed)->required();
  scan->add_option("--n-min", params.n_min);
  scan->add_option("--n-max", params.n_max);
  scan->add_option("--members-min", params.members_min);
  scan->add_option("--members-max", params.members_max);
  scan->add_option("--size-min", params.size_min);
  scan->add_option("--size-max", params.size_max);
  scan->add_option("--r-min", params.r_min);
  scan->add_option("--r-max", params.r_max);
  add_common(scan, c_scan);

  // ---- export-cnf ----
  auto* cnf = app.add_subcommand("export-cnf", "DIMACS CNF for m-colorability");
  Common c_cnf;
  std::string cnf_input, cnf_family;
  int cnf_m = 1;
  cnf->add_option("--input,-i", cnf_input, "hypergraph JSON");
  cnf->add_option("--family", cnf_family, "set system, read as the hypergraph ([n], F)");
  cnf->add_option("--m", cnf_m)->required();
  add_common(cnf, c_cnf);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ctor_complete || *ctor_fnr || *ctor_prop2) {
      SetSystem f;
      if (*ctor_complete) f = complete_k_subsets(p_n, p_k);
      if (*ctor_fnr) f = family_fnr(p_n, p_r);
      if (*ctor_prop2) f = family_prop2(p_r);
      write_output(c_construct, render_set_system(c_construct, f));
      return kExitOk;
    }
    if (*filter) {
      const SetSystem f = load_set_system(filter_input);
      const StabilityKind kind = filter_kind == "stable"
                                     ? StabilityKind::Stable
                                     : StabilityKind::AlmostStable;
      write_output(c_filter, render_set_system(c_filter, filter_part(f, filter_s, kind)));
      return kExitOk;
    }
    if (*kneser) {
      const SetSystem f = load_set_system(kneser_input);
      const Hypergraph h = build_kneser(f, kneser_r, c_kneser.limits());
      write_output(c_kneser, c_kneser.format == "json"
                                 ? hypergraph_to_json(h).dump(2) + "\n"
                                 : hypergraph_edge_list(h));
      return kExitOk;
    }
    if (*chi) {
      const Hypergraph h = load_hypergraph_input(chi_input, chi_family);
      const ChiResult result = chromatic_number(h, c_chi.limits());
      write_output(c_chi, c_chi.format == "json"
                              ? chi_result_to_json(result).dump(2) + "\n"
                              : chi_result_text(result));
      if (!result.feasible()) {
        std::cerr << "error: singleton edge #" << *result.infeasible_witness
                  << " makes every coloring improper\n";
        return kExitError;
      }
      return kExitOk;
    }
    if (*colorable) {
      const Hypergraph h = load_hypergraph_input(col_input, col_family);
      const ColorDecision d = is_m_colorable(h, col_m, c_colorable.limits());
      if (c_colorable.format == "json") {
        write_output(c_colorable, colorable_result_to_json(col_m, d).dump(2) + "\n");
      } else {
        std::ostringstream os;
        if (d.status == ColorStatus::SingletonEdge)
          os << "uncolorable for every m: singleton edge #" << *d.singleton_edge
             << '\n';
        else if (d.colorable()) {
          os << "colorable with " << col_m << " colors\ncolors:";
          for (int c : d.certificate->colors) os << ' ' << c;
          os << '\n';
        } else {
          os << "not colorable with " << col_m << " colors\n";
        }
        write_output(c_colorable, os.str());
      }
      return kExitOk;
    }
    if (*defect) {
      const Hypergraph h = load_hypergraph_input(def_input, def_family);
      if (def_refute_only >= 0) {
        const RefutationReport report =
            defect_lower_bound_report(h, def_r, def_refute_only, c_defect.limits());
        if (c_defect.format == "json") {
          write_output(c_defect, refutation_report_to_json(report).dump(2) + "\n");
        } else {
          std::ostringstream os;
          os << "removal sets of size <= " << report.max_size << ": "
             << (report.refuted ? "all refuted" : "counterwitness found") << " ("
             << report.sets_tested << " sets tested)\n";
          if (report.counterwitness) {
            os << "counterwitness removes:";
            for (int v : report.counterwitness->removed) os << ' ' << v;
            os << '\n';
          }
          write_output(c_defect, os.str());
        }
        return kExitOk;
      }
      const DefectResult result = colorability_defect(h, def_r, c_defect.limits());
      write_output(c_defect, c_defect.format == "json"
                                 ? defect_result_to_json(def_r, result).dump(2) + "\n"
                                 : defect_result_text(def_r, result));
      return kExitOk;
    }
    if (*verify) {
      if (*verify_ziegler_cmd) {
        const ZieglerReport report = ziegler_check(v_n, v_k, v_r, c_verify.limits());
        write_output(c_verify, c_verify.format == "json"
                                   ? ziegler_report_to_json(report).dump(2) + "\n"
                                   : ziegler_report_text(report));
        return report.relation == Relation::Equal ? kExitOk : kExitViolated;
      }
      if (*verify_remark_cmd) {
        const SetSystem f = load_set_system(v_input);
        const RemarkReport report = verify_remark_bound(f, v_r, c_verify.limits());
        write_output(c_verify, c_verify.format == "json"
                                   ? remark_report_to_json(report).dump(2) + "\n"
                                   : remark_report_text(report));
        return report.bound_holds && report.extension_verified ? kExitOk
                                                               : kExitError;
      }
      VerifyReport report;
      if (*verify_prop1_cmd) report = verify_prop1(v_r, v_k, c_verify.limits());
      if (*verify_prop2_cmd) report = verify_prop2(v_r, !v_skip_exact, c_verify.limits());
      write_output(c_verify, c_verify.format == "json"
                                 ? verify_report_to_json(report).dump(2) + "\n"
                                 : verify_report_text(report));
      return report.all_passed() ? kExitOk : kExitError;
    }
    if (*gap) {
      const SetSystem f = load_set_system(gap_input);
      const std::string name = "file:" + gap_input;
      const GapReport report = *gap_frick
                                   ? frick_gap(f, gap_r, c_gap.limits(), name)
                                   : weak_gap(f, gap_r, c_gap.limits(), name);
      write_output(c_gap, c_gap.format == "json"
                              ? gap_report_to_json(report).dump(2) + "\n"
                              : gap_report_text(report));
      return report.verdict == Verdict::Violated ? kExitViolated : kExitOk;
    }
    if (*scan) {
      const ScanResult result = scan_random_families(params, c_scan.limits());
      write_output(c_scan, c_scan.format == "json"
                               ? scan_result_to_json(result).dump(2) + "\n"
                               : scan_result_text(result));
      return result.frick_violations + result.weak_violations > 0 ? kExitViolated
                                                                  : kExitOk;
    }
    if (*cnf) {
      const Hypergraph h = load_hypergraph_input(cnf_input, cnf_family);
      write_output(c_cnf, export_cnf(h, cnf_m).to_dimacs());
      return kExitOk;
    }
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
