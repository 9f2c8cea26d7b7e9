// itq: analyze radical-square-zero path algebras presented by their quiver.
//
// Subcommands:
//   analyze [FILE]          full report (text or --json); FILE defaults to stdin
//   generate FAMILY ARGS..  emit a built-in quiver family in the text format
//   oracle FILE             brute-force cross-check of the closed-form engine
//   batch DIR               analyze every *.quiver file in a directory
//
// Exit codes: 0 success; 1 bad input (parse error, bad arguments, missing
// file); 2 internal invariant violation (a theorem check failed -- a bug) or
// an oracle mismatch.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "itq/generate.hpp"
#include "itq/oracle.hpp"
#include "itq/report.hpp"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitInternal = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string read_stdin() {
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return buf.str();
}

// Default oracle vertex cap: 8, overridable by ITQ_ORACLE_CAP, overridable
// in turn by --cap.
int env_oracle_cap() {
  if (const char* raw = std::getenv("ITQ_ORACLE_CAP")) {
    try {
      const int cap = std::stoi(raw);
      if (cap >= 1) return cap;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("ITQ_ORACLE_CAP must be a positive integer");
  }
  return 8;
}

struct AnalyzeFlags {
  std::string file;  // empty: stdin
  bool json = false;
  bool partitions = false;
  bool oracle = false;
  bool witness = false;
};

int run_analyze(const AnalyzeFlags& flags, std::ostream& out) {
  const std::string text = flags.file.empty() ? read_stdin() : slurp(flags.file);
  const itq::Quiver q = itq::parse_quiver(text);

  itq::ReportOptions opt;
  opt.with_witness_detail = flags.witness;
  opt.with_partitions = flags.partitions;
  opt.with_oracle = flags.oracle;
  opt.oracle_cap = env_oracle_cap();

  const itq::Report report = itq::analyze_report(q, opt);
  out << (flags.json ? itq::render_json(report) : itq::render_text(report));

  if (report.oracle && !report.oracle->passed) {
    std::cerr << "error: oracle cross-check found a mismatch (see report)\n";
    return kExitInternal;
  }
  return kExitOk;
}

int run_generate(const std::string& family, const std::vector<std::string>& raw,
                 std::ostream& out) {
  std::vector<itq::bigint> params;
  for (const std::string& word : raw) {
    try {
      params.emplace_back(word);
    } catch (const std::runtime_error&) {
      throw std::invalid_argument("parameter '" + word + "' is not an integer");
    }
  }
  out << itq::to_text(itq::generate_family(family, params));
  return kExitOk;
}

int run_oracle(const std::string& file, int cap, std::uint64_t seed, int probes,
               std::ostream& out) {
  const itq::Quiver q = itq::parse_quiver(slurp(file));
  const itq::OracleReport report =
      itq::oracle_check(q, cap > 0 ? cap : env_oracle_cap(), seed, probes);
  for (const itq::OracleItem& item : report.items) {
    if (item.ok)
      out << "ok       " << item.name << " = " << item.engine << "\n";
    else
      out << "MISMATCH " << item.name << ": engine " << item.engine << ", oracle "
          << item.oracle << "\n";
  }
  out << (report.passed ? "PASS" : "FAIL") << " (" << report.items.size()
      << " comparisons, seed " << report.seed << ", " << report.probes
      << " random probes)\n";
  return report.passed ? kExitOk : kExitInternal;
}

int run_batch(const std::string& dir, bool json, std::ostream& out) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw std::invalid_argument("not a directory: '" + dir + "'");

  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".quiver")
      files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw std::invalid_argument("no .quiver files in '" + dir + "'");

  struct Outcome {
    std::string rendered;  // report, on success
    std::string error;     // message, on failure
    bool internal = false;
  };
  auto analyze_one = [json](const std::string& path) -> Outcome {
    Outcome o;
    try {
      const itq::Report r = itq::analyze_report(itq::parse_quiver(slurp(path)));
      o.rendered = json ? itq::render_json(r) : itq::render_text(r);
    } catch (const std::invalid_argument& e) {
      o.error = e.what();
    } catch (const itq::QuiverParseError& e) {
      o.error = e.what();
    } catch (const std::logic_error& e) {
      o.error = e.what();
      o.internal = true;
    }
    return o;
  };

  std::vector<std::future<Outcome>> pending;
  pending.reserve(files.size());
  for (const std::string& path : files)
    pending.push_back(std::async(std::launch::async, analyze_one, path));

  // Results print in input-name order regardless of completion order.
  int exit_code = kExitOk;
  nlohmann::json combined = nlohmann::json::array();
  for (size_t i = 0; i < files.size(); ++i) {
    const std::string name = std::filesystem::path(files[i]).filename().string();
    const Outcome o = pending[i].get();
    if (!o.error.empty())
      exit_code = std::max(exit_code, o.internal ? kExitInternal : kExitBadInput);
    if (json) {
      nlohmann::json item;
      item["file"] = name;
      if (o.error.empty())
        item["report"] = nlohmann::json::parse(o.rendered);
      else
        item["error"] = o.error;
      combined.push_back(std::move(item));
    } else {
      out << "== " << name << " ==\n";
      if (o.error.empty())
        out << o.rendered << "\n";
      else
        out << "error: " << o.error << "\n\n";
    }
  }
  if (json) out << combined.dump(2) << "\n";
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Igusa-Todorov invariants of radical-square-zero path algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "itq 1.0.0");

  AnalyzeFlags analyze_flags;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Report phi/psi invariants, witnesses, and structure of a quiver");
  analyze->add_option("file", analyze_flags.file,
                      "quiver file (reads standard input when omitted)");
  analyze->add_flag("--json", analyze_flags.json, "emit the machine-readable report");
  analyze->add_flag("--partitions", analyze_flags.partitions,
                    "include the equitable-partition analysis");
  analyze->add_flag("--oracle", analyze_flags.oracle,
                    "cross-check the engine against the brute-force oracle");
  analyze->add_flag("--witness", analyze_flags.witness,
                    "include the detailed witness-module analysis");

  std::string family;
  std::vector<std::string> family_params;
  CLI::App* generate =
      app.add_subcommand("generate", "Emit a built-in quiver family as text");
  generate->add_option("family", family, "one of: cycle, line, loopline, phimax, midk")
      ->required();
  generate->add_option("params", family_params, "integer parameters for the family");

  std::string oracle_file;
  int oracle_cap = 0;
  std::uint64_t oracle_seed = 0;
  int oracle_probes = 5;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "Re-derive the invariants by brute force and compare");
  oracle->add_option("file", oracle_file, "quiver file")->required();
  oracle->add_option("--seed", oracle_seed, "seed for the random probe modules");
  oracle->add_option("--cap", oracle_cap,
                     "vertex cap (default 8, or ITQ_ORACLE_CAP)");
  oracle->add_option("--probes", oracle_probes,
                     "number of random probe modules (default 5)");

  std::string batch_dir;
  bool batch_json = false;
  CLI::App* batch =
      app.add_subcommand("batch", "Analyze every .quiver file in a directory");
  batch->add_option("dir", batch_dir, "directory of .quiver files")->required();
  batch->add_flag("--json", batch_json, "emit one combined JSON array");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version arrive here with exit code 0; every usage error
    // collapses onto the bad-input code.
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*analyze) return run_analyze(analyze_flags, std::cout);
    if (*generate) return run_generate(family, family_params, std::cout);
    if (*oracle)
      return run_oracle(oracle_file, oracle_cap, oracle_seed, oracle_probes, std::cout);
    if (*batch) return run_batch(batch_dir, batch_json, std::cout);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const itq::QuiverParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::logic_error& e) {
    // A theorem cross-check failed inside the engine: report as a bug.
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}
