// Command-line front end. Talks to the engine only through the C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "ribbon/ribbon.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct CodeDeleter {
  void operator()(rbn_code* c) const { rbn_code_free(c); }
};
struct ReportDeleter {
  void operator()(rbn_report* r) const { rbn_report_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { rbn_string_free(s); }
};
using CodePtr = std::unique_ptr<rbn_code, CodeDeleter>;
using ReportPtr = std::unique_ptr<rbn_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Thrown to unwind with a usage-class exit status after printing to stderr.
struct Failure {
  int exit_code;
};

void check(rbn_status status) {
  if (status != RBN_OK) {
    std::cerr << "error: " << rbn_last_error() << "\n";
    throw Failure{kExitUsage};
  }
}

CodePtr load(const std::string& path, bool strict) {
  rbn_code* raw = nullptr;
  check(rbn_code_load(path.c_str(), strict ? 1 : 0, &raw));
  return CodePtr(raw);
}

int cmd_validate(const std::string& path) {
  CodePtr code = load(path, false);
  char* raw = nullptr;
  size_t count = 0;
  check(rbn_code_validate(code.get(), &raw, &count));
  StringPtr text(raw);
  if (count == 0) {
    std::cout << "valid\n";
    return kExitOk;
  }
  std::cout << text.get();
  return kExitCheckFailed;
}

int cmd_stats(const std::string& path) {
  CodePtr code = load(path, true);
  char* raw = nullptr;
  check(rbn_code_stats_text(code.get(), &raw));
  StringPtr text(raw);
  std::cout << text.get() << "\n";
  return kExitOk;
}

int cmd_bound(const std::string& path, bool refined, bool heuristic) {
  CodePtr code = load(path, true);
  rbn_report* raw_report = nullptr;
  check(rbn_bound_report(code.get(), refined ? 1 : 0, heuristic ? 1 : 0, &raw_report));
  ReportPtr report(raw_report);
  char* raw = nullptr;
  check(rbn_report_text(report.get(), &raw));
  StringPtr text(raw);
  std::cout << text.get();
  return kExitOk;
}

int cmd_reduce(const std::string& path, const std::string& partition) {
  CodePtr code = load(path, true);
  char* raw = nullptr;
  int all = 0;
  check(rbn_reduce(code.get(), partition.c_str(), &raw, &all));
  StringPtr text(raw);
  std::cout << text.get();
  return kExitOk;
}

int cmd_oracle(const std::string& path, bool sweep, std::size_t corpus_size, std::uint64_t seed,
               const std::string& counterexample_path) {
  char* raw_report = nullptr;
  char* raw_counter = nullptr;
  int passed = 0;
  if (sweep) {
    check(rbn_oracle_sweep(corpus_size, seed, &raw_report, &passed, &raw_counter));
  } else {
    CodePtr code = load(path, true);
    check(rbn_oracle_check(code.get(), &raw_report, &passed, &raw_counter));
  }
  StringPtr report(raw_report);
  StringPtr counter(raw_counter);
  std::cout << report.get();
  if (counter) {
    std::ofstream out(counterexample_path, std::ios::binary);
    out << counter.get();
    if (!out) {
      std::cerr << "error: cannot write " << counterexample_path << "\n";
      return kExitUsage;
    }
    std::cout << "counterexample=" << counterexample_path << "\n";
  }
  return passed ? kExitOk : kExitCheckFailed;
}

int cmd_gen(std::uint64_t seed, std::uint32_t discs, std::uint32_t bands, std::uint32_t maxlen) {
  rbn_code* raw_code = nullptr;
  int connected = 1;
  check(rbn_code_generate(seed, discs, bands, maxlen, &raw_code, &connected));
  CodePtr code(raw_code);
  char* raw = nullptr;
  check(rbn_code_serialize(code.get(), &raw));
  StringPtr text(raw);
  if (!connected) std::cout << "# disconnected: b < d - 1\n";
  std::cout << text.get();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ribbon-code engine: surface statistics and double slice genus upper bounds"};
  app.require_subcommand(1, 1);

  std::string file;
  auto* validate = app.add_subcommand("validate", "Print diagnostics for a ribbon-code file");
  validate->add_option("file", file, "Ribbon-code file")->required();

  auto* stats = app.add_subcommand("stats", "Euler characteristic, connectivity and genus of the double");
  stats->add_option("file", file, "Ribbon-code file")->required();

  bool refined = false;
  bool heuristic = false;
  auto* bound = app.add_subcommand("bound", "Band-count bound and, with --refined, the tubing-refined bound");
  bound->add_option("file", file, "Ribbon-code file")->required();
  bound->add_flag("--refined", refined, "Search disc partitions for the refined bound");
  bound->add_flag("--heuristic", heuristic, "Allow a greedy, non-certified search beyond 12 discs");

  std::string partition;
  auto* reduce = app.add_subcommand("reduce", "Cancellation traces for every band under a disc partition");
  reduce->add_option("file", file, "Ribbon-code file")->required();
  reduce->add_option("--partition", partition, "Blocks separated by '|', members by ',' (e.g. \"1,3|2,4\")")
      ->required();

  bool sweep = false;
  std::size_t corpus_size = 1000;
  std::uint64_t seed = 0;
  std::string counterexample = "oracle-counterexample.rib";
  auto* oracle = app.add_subcommand("oracle", "Run brute-force validators on a file or the generated corpus");
  auto* file_opt = oracle->add_option("file", file, "Ribbon-code file");
  auto* sweep_opt = oracle->add_flag("--sweep", sweep, "Exhaustive confluence sweep plus corpus checks");
  file_opt->excludes(sweep_opt);
  oracle->add_option("--corpus", corpus_size, "Corpus size for --sweep")->capture_default_str();
  oracle->add_option("--seed", seed, "Corpus seed for --sweep")->capture_default_str();
  oracle->add_option("--counterexample", counterexample, "Where to write the first failing code")
      ->capture_default_str();

  std::uint64_t gen_seed = 0;
  std::uint32_t discs = 1;
  std::uint32_t bands = 0;
  std::uint32_t maxlen = 0;
  auto* gen = app.add_subcommand("gen", "Emit a random ribbon-code file");
  gen->add_option("--seed", gen_seed, "Generator seed")->required();
  gen->add_option("--d", discs, "Disc count")->required()->check(CLI::PositiveNumber);
  gen->add_option("--b", bands, "Band count")->required();
  gen->add_option("--maxlen", maxlen, "Maximum singularity word length")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*stats) return cmd_stats(file);
    if (*bound) return cmd_bound(file, refined, heuristic);
    if (*reduce) return cmd_reduce(file, partition);
    if (*oracle) {
      if (!sweep && file.empty()) {
        std::cerr << "error: oracle needs a file or --sweep\n";
        return kExitUsage;
      }
      return cmd_oracle(file, sweep, corpus_size, seed, counterexample);
    }
    if (*gen) return cmd_gen(gen_seed, discs, bands, maxlen);
  } catch (const Failure& f) {
    return f.exit_code;
  }
  return kExitUsage;
}
