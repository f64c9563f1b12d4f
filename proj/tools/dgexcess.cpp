// dgexcess command-line tool: analyze, check, generate, verify.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "dgexcess/analysis.hpp"
#include "dgexcess/classify.hpp"
#include "dgexcess/generators.hpp"
#include "dgexcess/io.hpp"
#include "dgexcess/report.hpp"
#include "dgexcess/verify.hpp"

namespace dg = dgexcess;

namespace {

// Exit codes shared by every subcommand.
constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kError = 2;

const std::vector<std::string> kProperties = {"normal", "regular", "wdr", "dr", "geodetic-dr",
                                              "gog", "bipartite", "trichotomy"};

int run_analyze(const std::string& file, const std::string& format, double tol, bool json) {
  const dg::InputFormat f = dg::parse_format(format);
  const std::string text = dg::read_file(file);
  const dg::Digraph g = dg::parse_text(text, f);
  dg::ReportOptions opts;
  opts.format = format;
  opts.hash = dg::fnv1a_hex(text);
  opts.analysis.weighted_tol = tol;
  const dg::AnalysisReport r = dg::full_report(g, opts);
  dg::emit_report(r, json ? dg::ReportFormat::json : dg::ReportFormat::text, std::cout);
  if (!r.consistent()) {
    std::cerr << "dgexcess: internal inconsistency, see crosschecks/errors in the report\n";
    return kError;
  }
  return kHolds;
}

int decide(bool holds, const std::string& property, const std::string& detail = "") {
  std::cout << property << ": " << (holds ? "holds" : "fails");
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  return holds ? kHolds : kFails;
}

int run_check(const std::string& property, const std::string& file, const std::string& format) {
  const dg::Digraph g = dg::parse_input(file, dg::parse_format(format));
  if (property == "normal") return decide(dg::normality_test(g), property);
  if (property == "regular") return decide(dg::regularity_test(g).regular, property);

  if (!dg::strong_connectivity(g)) {
    if (property == "bipartite" || property == "trichotomy") {
      std::cerr << "dgexcess: " << property << " needs a strongly connected digraph\n";
      return kError;
    }
    return decide(false, property, "not strongly connected");
  }

  dg::ReportOptions opts;
  opts.format = format;
  const dg::AnalysisReport r = dg::full_report(g, opts);
  if (!r.consistent()) {
    for (const auto& e : r.errors) std::cerr << "dgexcess: " << e << "\n";
    for (const auto& c : r.connected->crosschecks)
      if (!c.agree) std::cerr << "dgexcess: cross-check failed: " << c.name << "\n";
    return kError;
  }
  const dg::ConnectedReport& c = *r.connected;
  if (property == "bipartite") return decide(c.bipartite, property);
  if (property == "trichotomy") {
    if (!c.trichotomy) {
      std::cerr << "dgexcess: trichotomy: " << c.trichotomy_error << "\n";
      return kError;
    }
    std::string branches;
    for (dg::Branch b : *c.trichotomy) branches += (branches.empty() ? "" : ", ") + dg::to_string(b);
    return decide(!c.trichotomy->empty(), property, branches);
  }
  const dg::Verdict* v = c.verdict(property);
  if (v == nullptr) {
    std::cerr << "dgexcess: no verdict for " << property << "\n";
    return kError;
  }
  return decide(v->decision, property, dg::to_string(v->method) + (v->note.empty() ? "" : "; " + v->note));
}

int run_generate(const std::string& family, const std::vector<std::string>& params, std::optional<std::size_t> lift) {
  dg::Digraph g(1, {});
  if (family == "edgelist" || family == "adjmatrix") {
    // Re-emit a file, optionally lifted.
    if (params.size() != 1) throw dg::GeneratorError(family + " takes one file argument");
    g = dg::parse_input(params[0], dg::parse_format(family));
    if (lift) g = dg::tensor_lift(g, *lift);
  } else {
    dg::FamilySpec spec{family, {}, lift};
    for (const auto& p : params) {
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(p, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != p.size() || p.empty() || p[0] == '-') throw dg::GeneratorError("bad parameter: " + p);
      spec.params.push_back(static_cast<std::size_t>(v));
    }
    g = dg::generate(spec);
  }
  std::cout << dg::write_edgelist(g);
  return kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral excess and distance-regularity of digraphs"};
  app.require_subcommand(1);

  std::string file;
  std::string format = "edgelist";
  double tol = 1e-9;
  bool json = false;
  auto* analyze = app.add_subcommand("analyze", "Full report for one digraph");
  analyze->add_option("file", file, "Input file")->required();
  analyze->add_option("--format", format, "edgelist or adjmatrix")->check(CLI::IsMember({"edgelist", "adjmatrix"}));
  analyze->add_option("--tol", tol, "Tolerance for weighted-excess equality")->check(CLI::PositiveNumber);
  analyze->add_flag("--json", json, "JSON instead of text");

  std::string property;
  auto* check = app.add_subcommand("check", "Decide one property; exit 0 holds, 1 fails, 2 error");
  check->add_option("property", property, "Property")->required()->check(CLI::IsMember(kProperties));
  check->add_option("file", file, "Input file")->required();
  check->add_option("--format", format, "edgelist or adjmatrix")->check(CLI::IsMember({"edgelist", "adjmatrix"}));

  std::string family;
  std::vector<std::string> params;
  std::optional<std::size_t> lift;
  auto* generate = app.add_subcommand("generate", "Write a family member as an edgelist");
  generate->add_option("family", family, "Family name, or edgelist/adjmatrix to re-emit a file")->required();
  generate->add_option("params", params, "Integer parameters");
  generate->add_option("--lift", lift, "Tensor lift by J_m");

  dg::VerifyOptions vopts;
  std::optional<std::size_t> sample;
  auto* verify = app.add_subcommand("verify", "Run the property suites over small digraphs and families");
  verify->add_option("--max-n", vopts.max_n, "Largest order enumerated")->required()->check(CLI::Range(1, 6));
  verify->add_option("--sample", sample, "Sample this many strongly connected digraphs at order max-n");
  verify->add_option("--seed", vopts.seed, "Sampling seed");
  verify->add_option("--jobs", vopts.jobs, "Worker threads")->check(CLI::Range(1, 256));
  verify->add_option("--subset-systems", vopts.subset_systems, "Random subset systems per digraph");
  verify->add_option("--family-max-order", vopts.family_max_order, "Largest family member checked");
  verify->add_flag("!--no-families", vopts.include_families, "Skip the generated families");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(file, format, tol, json);
    if (*check) return run_check(property, file, format);
    if (*generate) return run_generate(family, params, lift);
    if (*verify) {
      vopts.sample = sample;
      const dg::VerifyResult r = dg::run_verification(vopts);
      std::cout << dg::format_verify_result(r);
      // A failed criterion is an oracle disagreement.
      return r.passed() ? kHolds : kError;
    }
  } catch (const std::exception& e) {
    std::cerr << "dgexcess: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
