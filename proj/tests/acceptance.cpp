// Acceptance suite: one PASS/FAIL line per criterion, each with its time budget.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ribbon/bounds.hpp"
#include "ribbon/oracle.hpp"
#include "ribbon/ribbon.h"

#ifndef RIBBON_SAMPLES
#error "RIBBON_SAMPLES must name the samples directory"
#endif

using namespace ribbon;

namespace {

constexpr std::size_t kCorpusSize = 1000;
constexpr std::uint64_t kCorpusSeed = 0;

struct Criterion {
  const char* id;
  const char* title;
  double budget_seconds;
  std::function<std::string()> run;  // empty string on success, else the reason
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const std::string kExamplePath = std::string(RIBBON_SAMPLES) + "/example.rib";

}  // namespace

int main() {
  const std::vector<RibbonCode> corpus = oracle::corpus(kCorpusSize, kCorpusSeed);

  const std::vector<Criterion> criteria = {
      {"AC1", "four-disc example: theorem2=3 refined=2 partition 1,3|2,4", 1.0,
       [] {
         // Through the C interface, as the CLI `bound --refined` does.
         rbn_code* code = nullptr;
         if (rbn_code_load(kExamplePath.c_str(), 1, &code) != RBN_OK) return std::string(rbn_last_error());
         rbn_report* report = nullptr;
         const rbn_status st = rbn_bound_report(code, 1, 0, &report);
         rbn_code_free(code);
         if (st != RBN_OK) return std::string(rbn_last_error());
         char* raw = nullptr;
         rbn_report_text(report, &raw);
         const std::string text = raw ? raw : "";
         rbn_string_free(raw);
         int64_t refined = -1;
         rbn_report_refined(report, &refined);
         const std::string partition = rbn_report_partition(report) ? rbn_report_partition(report) : "";
         const uint32_t t2 = rbn_report_theorem2(report);
         rbn_report_free(report);
         if (t2 != 3) return "theorem2=" + std::to_string(t2);
         if (refined != 2) return "refined=" + std::to_string(refined);
         if (partition != "1,3|2,4") return "partition=" + partition;
         if (text.find("theorem2=3\n") == std::string::npos || text.find("refined=2\n") == std::string::npos) {
           return "report text: " + text;
         }
         return std::string();
       }},
      {"AC2", "band-count consistency on the corpus", 10.0,
       [&] {
         for (const RibbonCode& code : corpus) {
           if (code.discs > 6 || code.band_count() > 6) return "corpus code out of shape:\n" + serialize_ribbon_code(code);
           const DiscPartition whole = DiscPartition::single_block(code.discs);
           if (!partition_qualifies(code, whole)) return "one-block partition fails:\n" + serialize_ribbon_code(code);
           if (genus_of_certificate(code, whole) != code.band_count()) {
             return "one-block genus != b:\n" + serialize_ribbon_code(code);
           }
           if (refined_bound(code).genus_bound > theorem2_bound(code)) return "refined > theorem2:\n" + serialize_ribbon_code(code);
         }
         return std::string();
       }},
      {"AC3", "one-disc codes cancel completely; double unknotted of genus b", 5.0,
       [&] {
         std::size_t seen = 0;
         for (const RibbonCode& code : corpus) {
           if (code.discs != 1) continue;
           ++seen;
           if (!all_cancellable(reduce_code(code, DiscPartition::single_block(1)))) {
             return "band fails to cancel:\n" + serialize_ribbon_code(code);
           }
           const BoundReport r = bound_report(code);
           if (r.one_disc_ub != code.band_count() || r.refined->genus_bound != code.band_count()) {
             return "report does not certify genus b:\n" + serialize_ribbon_code(code);
           }
         }
         if (seen == 0) return std::string("corpus has no one-disc codes");
         return std::string();
       }},
      {"AC4", "brute-force refined bound equals the search on the corpus", 60.0,
       [&] {
         std::size_t mismatches = 0;
         std::string first;
         for (const RibbonCode& code : corpus) {
           if (oracle::brute_refined(code) != refined_bound(code).genus_bound) {
             if (mismatches++ == 0) first = serialize_ribbon_code(code);
           }
         }
         return mismatches ? std::to_string(mismatches) + " mismatches, first:\n" + first : std::string();
       }},
      {"AC5", "confluence sweep: word length <= 4, <= 3 classes, all feet", 60.0,
       [] {
         const oracle::SweepResult r = oracle::confluence_sweep(4, 3);
         if (r.instances != 1555u * 9u * 5u) return "unexpected instance count " + std::to_string(r.instances);
         if (r.failures) {
           return std::to_string(r.failures) + " failures, first:\n" + serialize_ribbon_code(*r.counterexample);
         }
         return std::string();
       }},
      {"AC6", "double genus and certificate genus match chi = 2 spheres - 2 tubes", 5.0,
       [&] {
         for (const RibbonCode& code : corpus) {
           const std::int64_t d = code.discs;
           const std::int64_t b = code.band_count();
           const SurfaceStats s = stats(code);
           if (!s.double_genus || *s.double_genus != oracle::euler_genus(d, b)) {
             return "double_genus mismatch:\n" + serialize_ribbon_code(code);
           }
           const BoundCertificate cert = refined_bound(code);
           if (genus_of_certificate(code, cert.partition) != oracle::euler_genus(d, b + cert.tubes_added)) {
             return "certificate genus mismatch:\n" + serialize_ribbon_code(code);
           }
         }
         return std::string();
       }},
      {"AC7", "parse/serialize round trip, byte-exact", 5.0,
       [&] {
         const std::string example_text = read_file(kExamplePath);
         if (parse_ribbon_code(example_text) != example_code()) return std::string("example file parses wrongly");
         if (serialize_ribbon_code(example_code()) != example_text) return std::string("example serialization differs");
         for (const RibbonCode& code : corpus) {
           const std::string text = serialize_ribbon_code(code);
           const RibbonCode back = parse_ribbon_code(text);
           if (back != code || serialize_ribbon_code(back) != text) return "round trip fails:\n" + text;
         }
         return std::string();
       }},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
      reason = c.run();
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (reason.empty() && seconds >= c.budget_seconds) {
      reason = "exceeded budget of " + std::to_string(c.budget_seconds) + " s";
    }
    const bool ok = reason.empty();
    std::printf("%s %s  %s  (%.3f s, budget %.0f s)\n", ok ? "PASS" : "FAIL", c.id, c.title, seconds,
                c.budget_seconds);
    if (!ok) {
      std::printf("     %s\n", reason.c_str());
      ++failed;
    }
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
