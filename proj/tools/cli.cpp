#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "integra/classify.hpp"
#include "integra/json_io.hpp"
#include "integra/spectra.hpp"
#include "integra/verify.hpp"

namespace integra::cli {

namespace {

namespace fs = std::filesystem;

struct OutputFlags {
  bool json = false;
  bool table = false;
};

void add_output_flags(CLI::App* cmd, OutputFlags& flags) {
  cmd->add_flag("--json", flags.json, "Print canonical JSON (the default)");
  cmd->add_flag("--table", flags.table, "Print a human-readable table");
}

// JSON unless only --table was asked for; the table when asked for.
void emit(std::ostream& out, const OutputFlags& flags, const json& doc, const std::string& table) {
  if (flags.json || !flags.table) out << canonical_dump(doc);
  if (flags.table) out << table;
}

struct GroupSource {
  std::string spec;
  std::string file;
};

void add_group_options(CLI::App* cmd, GroupSource& src) {
  auto* spec = cmd->add_option("--spec", src.spec, "Construct spec or catalog name, e.g. \"dihedral:8\" or \"D8\"");
  auto* file = cmd->add_option("--group", src.file, "ftg-1 group-table file");
  spec->excludes(file);
  file->excludes(spec);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FiniteGroup build_from_spec(const std::string& spec) {
  try {
    return construct(catalog_entry(spec).construct_spec);
  } catch (const Error&) {
    return construct(spec);
  }
}

FiniteGroup load_group(const GroupSource& src) {
  if (!src.file.empty()) return group_from_text(read_file(src.file));
  if (!src.spec.empty()) return build_from_spec(src.spec);
  throw CLI::ValidationError("one of --spec or --group is required");
}

std::string group_label(const GroupSource& src) { return src.file.empty() ? src.spec : src.file; }

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw Error("empty entry in list \"" + text + "\"");
    parts.push_back(item);
  }
  if (parts.empty()) throw Error("empty list");
  return parts;
}

Elem parse_index(const FiniteGroup& g, const std::string& text) {
  std::size_t used = 0;
  long long v = -1;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size()) throw Error("bad element index \"" + text + "\"");
  if (v < 0 || static_cast<std::size_t>(v) >= g.order()) {
    throw Error("element index " + text + " out of range 0.." + std::to_string(g.order() - 1));
  }
  return static_cast<Elem>(v);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string membership_table(const std::vector<MembershipReport>& reports) {
  std::ostringstream t;
  t << std::left << std::setw(28) << "group" << std::setw(7) << "class" << std::setw(4) << "k" << std::setw(8)
    << "member" << std::setw(14) << "sets_checked"
    << "witness\n";
  for (const auto& r : reports) {
    std::string witness = "-";
    if (r.witness) {
      witness = "{";
      for (std::size_t i = 0; i < r.witness_words.size(); ++i) witness += (i ? ", " : "") + r.witness_words[i];
      witness += "}";
    }
    t << std::left << std::setw(28) << r.group_id << std::setw(7) << (r.cls == GroupClass::A ? "A" : "G")
      << std::setw(4) << r.k << std::setw(8) << (r.member ? (r.vacuous ? "vacuous" : "yes") : "no") << std::setw(14)
      << r.sets_checked << witness << "\n";
  }
  return t.str();
}

int cmd_construct(std::ostream& out, const GroupSource& src, const std::string& out_path, bool want_profile,
                  const OutputFlags& flags) {
  const FiniteGroup g = load_group(src);
  const json doc = group_to_json(g);
  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw Error("cannot write \"" + out_path + "\"");
    file << canonical_dump(doc);
  }
  if (want_profile) {
    const GroupProfile p = profile(g);
    std::ostringstream t;
    t << "order          " << p.order << "\nexponent       " << p.exponent << "\nabelian        "
      << yes_no(p.abelian) << "\nnilpotent      " << yes_no(p.nilpotent) << "\ncenter size    " << p.center_size
      << "\ninvolutions    " << p.involution_count << " (" << (p.involutions_central ? "all central" : "not all central")
      << ")\nelement orders";
    for (const auto& [ord, count] : p.order_multiset) t << " " << ord << "^" << count;
    t << "\norders in {1,2,3,4,6} " << yes_no(p.in_class_G) << "\n";
    emit(out, flags, profile_to_json(p), t.str());
  } else if (out_path.empty()) {
    out << canonical_dump(doc);
  }
  return kExitOk;
}

int cmd_spectrum(std::ostream& out, const GroupSource& src, const std::string& indices, const std::string& words,
                 bool strict, const OutputFlags& flags) {
  const FiniteGroup g = load_group(src);
  std::vector<Elem> members;
  if (!indices.empty()) {
    for (const auto& item : split_list(indices)) members.push_back(parse_index(g, item));
  } else {
    for (const auto& item : split_list(words)) members.push_back(parse_word(g, item));
  }
  const SymmetricSet s = make_symmetric_set(g, members);
  const CayleySpectrum sp = is_integral_cayley(g, s);
  json doc = spectrum_to_json(sp.lifted);
  doc["group"] = group_label(src);
  doc["set"] = s.members;
  json names = json::array();
  for (Elem x : s.members) names.push_back(g.name(x));
  doc["words"] = names;

  std::ostringstream t;
  t << "Cay(" << group_label(src) << ", {" << names.size() << " elements}): n=" << sp.lifted.n
    << " degree=" << sp.lifted.degree << " components=" << sp.lifted.components
    << " integral=" << yes_no(sp.integral) << "\n";
  t << std::left << std::setw(12) << "eigenvalue"
    << "multiplicity\n";
  for (const auto& e : sp.lifted.eigenvalues) t << std::left << std::setw(12) << e.value << e.multiplicity << "\n";
  if (!sp.integral) t << "residual factor: " << sp.lifted.residual.to_string() << "\n";
  emit(out, flags, doc, t.str());
  return strict && !sp.integral ? kExitNegative : kExitOk;
}

int cmd_classify(std::ostream& out, const GroupSource& src, const std::string& cls, int k, bool dedup,
                 const OutputFlags& flags) {
  const FiniteGroup g = load_group(src);
  ScanOptions options;
  options.dedup_conjugates = dedup;
  const MembershipReport r =
      cls == "A" ? in_A_k(g, k, group_label(src), options) : in_G_k(g, k, group_label(src), options);
  emit(out, flags, membership_to_json(r), membership_table({r}));
  return r.member ? kExitOk : kExitNegative;
}

int cmd_verify(std::ostream& out, std::ostream& err, const std::string& claim, const std::string& filter,
               const OutputFlags& flags) {
  VerifySummary summary;
  if (!claim.empty()) {
    summary.results.push_back(run_claim(claim));
    (summary.results.back().passed ? summary.passed : summary.failed) = 1;
  } else if (!filter.empty()) {
    summary = run_all(filter);
  } else {
    summary = run_all();
  }
  json arr = json::array();
  for (const auto& r : summary.results) arr.push_back(claim_result_to_json(r));

  std::ostringstream t;
  const auto& claims = list_claims();
  for (const auto& r : summary.results) {
    auto it = std::find_if(claims.begin(), claims.end(), [&](const Claim& c) { return c.id == r.id; });
    t << std::left << std::setw(5) << r.id << std::setw(6) << (r.passed ? "PASS" : "FAIL") << std::right
      << std::setw(9) << std::fixed << std::setprecision(3) << r.elapsed.count() << "s  "
      << (it != claims.end() ? it->description : "") << "\n";
  }
  t << summary.passed << "/" << summary.results.size() << " claims passed\n";

  emit(out, flags, arr, t.str());
  if (!flags.table) err << t.str();
  return summary.ok() ? kExitOk : kExitNegative;
}

int cmd_census(std::ostream& out, std::ostream& err, const std::string& dir, int k, const std::string& cls,
               const OutputFlags& flags) {
  if (!fs::is_directory(dir)) throw Error("not a directory: \"" + dir + "\"");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  json arr = json::array();
  std::vector<MembershipReport> reports;
  bool bad_input = false;
  for (const auto& path : files) {
    const std::string id = path.filename().string();
    std::optional<FiniteGroup> g;
    try {
      g = group_from_text(read_file(path.string()));
    } catch (const std::exception& e) {
      bad_input = true;
      err << "error: " << id << ": " << e.what() << "\n";
      arr.push_back({{"group", id}, {"error", e.what()}});
      continue;
    }
    if (cls == "A" || cls == "both") reports.push_back(in_A_k(*g, k, id));
    if (cls == "G" || cls == "both") reports.push_back(in_G_k(*g, k, id));
  }
  for (const auto& r : reports) arr.push_back(membership_to_json(r));
  std::stable_sort(arr.begin(), arr.end(), [](const json& a, const json& b) { return a["group"] < b["group"]; });
  emit(out, flags, arr, membership_table(reports));
  return bad_input ? kExitUsage : kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integral Cayley graphs over small finite groups", "integra"};
  app.require_subcommand(1);

  GroupSource src;
  OutputFlags flags;
  int k = 0;
  std::string cls;

  auto* construct_cmd = app.add_subcommand("construct", "Build a group and export its ftg-1 table");
  std::string out_path;
  bool want_profile = false;
  add_group_options(construct_cmd, src);
  construct_cmd->add_option("--out", out_path, "Write the ftg-1 document to this file");
  construct_cmd->add_flag("--profile", want_profile, "Print the structural profile");
  add_output_flags(construct_cmd, flags);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Spectrum of Cay(G, S)");
  std::string indices;
  std::string words;
  bool strict = false;
  add_group_options(spectrum_cmd, src);
  auto* idx_opt = spectrum_cmd->add_option("--set-indices", indices, "Comma-separated element indices");
  auto* word_opt = spectrum_cmd->add_option("--set-words", words, "Comma-separated generator words");
  idx_opt->excludes(word_opt);
  word_opt->excludes(idx_opt);
  spectrum_cmd->add_flag("--strict", strict, "Exit 1 when the graph is not integral");
  add_output_flags(spectrum_cmd, flags);

  auto* classify_cmd = app.add_subcommand("classify", "Brute-force A_k or G_k membership");
  bool dedup = false;
  add_group_options(classify_cmd, src);
  classify_cmd->add_option("--class", cls, "A (size exactly k) or G (size at most k)")
      ->required()
      ->check(CLI::IsMember({"A", "G"}));
  classify_cmd->add_option("--k", k, "Connection-set size")->required()->check(CLI::Range(1, 1 << 20));
  classify_cmd->add_flag("--dedup", dedup, "Skip sets conjugate to an earlier one");
  add_output_flags(classify_cmd, flags);

  auto* verify_cmd = app.add_subcommand("verify", "Run the claims suite");
  bool all = false;
  std::string claim;
  std::string filter;
  auto* all_opt = verify_cmd->add_flag("--all", all, "Run every claim (the default)");
  auto* claim_opt = verify_cmd->add_option("--claim", claim, "Run one claim by id");
  auto* filter_opt = verify_cmd->add_option("--filter", filter, "Exact id, or a prefix ending in '*'");
  all_opt->excludes(claim_opt)->excludes(filter_opt);
  claim_opt->excludes(filter_opt);
  add_output_flags(verify_cmd, flags);

  auto* census_cmd = app.add_subcommand("census", "Classify every ftg-1 file in a directory");
  std::string dir;
  std::string census_cls = "both";
  census_cmd->add_option("--dir", dir, "Directory of *.json group tables")->required();
  census_cmd->add_option("--k", k, "Connection-set size")->required()->check(CLI::Range(1, 1 << 20));
  census_cmd->add_option("--class", census_cls, "A, G or both")->check(CLI::IsMember({"A", "G", "both"}));
  add_output_flags(census_cmd, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct_cmd) return cmd_construct(out, src, out_path, want_profile, flags);
    if (*spectrum_cmd) {
      if (indices.empty() && words.empty()) throw CLI::ValidationError("one of --set-indices or --set-words is required");
      return cmd_spectrum(out, src, indices, words, strict, flags);
    }
    if (*classify_cmd) return cmd_classify(out, src, cls, k, dedup, flags);
    if (*verify_cmd) return cmd_verify(out, err, claim, filter, flags);
    if (*census_cmd) return cmd_census(out, err, dir, k, census_cls, flags);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace integra::cli
