#include "ribbon/ribbon.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "ribbon/bounds.hpp"
#include "ribbon/errors.hpp"
#include "ribbon/oracle.hpp"
#include "ribbon/reduction.hpp"
#include "ribbon/ribbon_model.hpp"

struct rbn_code {
  ribbon::RibbonCode code;
};

struct rbn_report {
  ribbon::BoundReport report;
  std::string partition;
};

namespace {

thread_local std::string last_error;

rbn_status fail(rbn_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

rbn_status emit(const std::string& s, char** out) {
  *out = duplicate(s);
  return *out ? RBN_OK : fail(RBN_ERR_INTERNAL, "out of memory");
}

// Maps the C++ exception hierarchy onto status codes.
template <typename F>
rbn_status guarded(F&& body) {
  try {
    return body();
  } catch (const ribbon::ParseError& e) {
    return fail(RBN_ERR_PARSE, e.what());
  } catch (const ribbon::DomainError& e) {
    return fail(RBN_ERR_DOMAIN, e.what());
  } catch (const ribbon::DisconnectedError& e) {
    return fail(RBN_ERR_DISCONNECTED, e.what());
  } catch (const ribbon::LimitError& e) {
    return fail(RBN_ERR_LIMIT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RBN_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RBN_ERR_INTERNAL, e.what());
  }
}

#define RBN_REQUIRE(cond)                                                       \
  do {                                                                          \
    if (!(cond)) return fail(RBN_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

rbn_status finish_checks(const std::vector<ribbon::oracle::CheckResult>& checks, char** report, int* passed,
                         char** counterexample) {
  bool ok = true;
  std::optional<ribbon::RibbonCode> first;
  for (const auto& c : checks) {
    if (c.outcome == ribbon::oracle::Outcome::Fail) {
      ok = false;
      if (!first && c.counterexample) first = c.counterexample;
    }
  }
  *passed = ok ? 1 : 0;
  if (counterexample) {
    *counterexample = nullptr;
    if (first) {
      if (rbn_status st = emit(ribbon::serialize_ribbon_code(*first), counterexample); st != RBN_OK) return st;
    }
  }
  return emit(ribbon::oracle::render_checks(checks), report);
}

}  // namespace

extern "C" {

const char* rbn_last_error(void) { return last_error.c_str(); }

const char* rbn_status_name(rbn_status status) {
  switch (status) {
    case RBN_OK: return "ok";
    case RBN_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RBN_ERR_PARSE: return "parse error";
    case RBN_ERR_DOMAIN: return "domain error";
    case RBN_ERR_DISCONNECTED: return "disconnected";
    case RBN_ERR_LIMIT: return "limit exceeded";
    case RBN_ERR_IO: return "i/o error";
    case RBN_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

void rbn_string_free(char* s) { std::free(s); }

rbn_status rbn_code_parse(const char* text, size_t length, int strict, rbn_code** out) {
  RBN_REQUIRE(text || length == 0);
  RBN_REQUIRE(out);
  return guarded([&] {
    const auto mode = strict ? ribbon::ParseMode::Strict : ribbon::ParseMode::Lenient;
    *out = new rbn_code{ribbon::parse_ribbon_code(std::string_view(text ? text : "", length), mode)};
    return RBN_OK;
  });
}

rbn_status rbn_code_load(const char* path, int strict, rbn_code** out) {
  RBN_REQUIRE(path);
  RBN_REQUIRE(out);
  std::ifstream in(path, std::ios::binary);
  if (!in) return fail(RBN_ERR_IO, std::string("cannot open ") + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const rbn_status st = rbn_code_parse(text.data(), text.size(), strict, out);
  if (st != RBN_OK) last_error = std::string(path) + ":" + last_error;
  return st;
}

rbn_status rbn_code_serialize(const rbn_code* code, char** out) {
  RBN_REQUIRE(code);
  RBN_REQUIRE(out);
  return guarded([&] { return emit(ribbon::serialize_ribbon_code(code->code), out); });
}

void rbn_code_free(rbn_code* code) { delete code; }

uint32_t rbn_code_discs(const rbn_code* code) { return code ? code->code.discs : 0; }
uint32_t rbn_code_bands(const rbn_code* code) { return code ? code->code.band_count() : 0; }

rbn_status rbn_code_validate(const rbn_code* code, char** diagnostics, size_t* count) {
  RBN_REQUIRE(code);
  RBN_REQUIRE(diagnostics);
  return guarded([&] {
    const auto diags = ribbon::validate(code->code);
    std::string text;
    for (const auto& d : diags) text += d + "\n";
    if (count) *count = diags.size();
    return emit(text, diagnostics);
  });
}

rbn_status rbn_code_stats(const rbn_code* code, rbn_stats* out) {
  RBN_REQUIRE(code);
  RBN_REQUIRE(out);
  return guarded([&] {
    if (const auto diags = ribbon::validate(code->code); !diags.empty()) {
      return fail(RBN_ERR_DOMAIN, "invalid ribbon code: " + diags.front());
    }
    const auto s = ribbon::stats(code->code);
    *out = rbn_stats{s.discs, s.bands, s.chi, s.connected ? 1 : 0, s.double_genus.value_or(0), s.components};
    return RBN_OK;
  });
}

rbn_status rbn_code_stats_text(const rbn_code* code, char** out) {
  RBN_REQUIRE(code);
  RBN_REQUIRE(out);
  return guarded([&] {
    if (const auto diags = ribbon::validate(code->code); !diags.empty()) {
      return fail(RBN_ERR_DOMAIN, "invalid ribbon code: " + diags.front());
    }
    return emit(ribbon::to_string(ribbon::stats(code->code)), out);
  });
}

rbn_status rbn_code_generate(uint64_t seed, uint32_t discs, uint32_t bands, uint32_t max_word_len, rbn_code** out,
                             int* connected) {
  RBN_REQUIRE(out);
  if (discs < 1) return fail(RBN_ERR_INVALID_ARGUMENT, "disc count must be >= 1");
  return guarded([&] {
    auto generated = ribbon::oracle::random_code({seed, discs, bands, max_word_len});
    if (connected) *connected = generated.connected ? 1 : 0;
    *out = new rbn_code{std::move(generated.code)};
    return RBN_OK;
  });
}

rbn_status rbn_theorem2_bound(const rbn_code* code, uint32_t* out) {
  RBN_REQUIRE(code);
  RBN_REQUIRE(out);
  return guarded([&] {
    *out = ribbon::theorem2_bound(code->code);
    return RBN_OK;
  });
}

rbn_status rbn_bound_report(const rbn_code* code, int refined, int heuristic, rbn_report** out) {
  RBN_REQUIRE(code);
  RBN_REQUIRE(out);
  return guarded([&] {
    ribbon::SearchOptions options;
    options.heuristic = heuristic != 0;
    auto report = std::make_unique<rbn_report>();
    report->report = ribbon::bound_report(code->code, refined != 0, options);
    if (report->report.refined) report->partition = report->report.refined->partition.to_string();
    *out = report.release();
    return RBN_OK;
  });
}

void rbn_report_free(rbn_report* report) { delete report; }

uint32_t rbn_report_theorem2(const rbn_report* report) { return report ? report->report.theorem2 : 0; }

int rbn_report_refined(const rbn_report* report, int64_t* genus_bound) {
  if (!report || !report->report.refined) return 0;
  if (genus_bound) *genus_bound = report->report.refined->genus_bound;
  return 1;
}

const char* rbn_report_partition(const rbn_report* report) {
  if (!report || !report->report.refined) return nullptr;
  return report->partition.c_str();
}

int rbn_report_certified(const rbn_report* report) {
  return report && report->report.refined && report->report.refined->certified_optimal ? 1 : 0;
}

int rbn_report_has_caveat(const rbn_report* report) {
  return report && report->report.caveat != ribbon::Caveat::None ? 1 : 0;
}

rbn_status rbn_report_text(const rbn_report* report, char** out) {
  RBN_REQUIRE(report);
  RBN_REQUIRE(out);
  return guarded([&] { return emit(ribbon::render_report(report->report), out); });
}

rbn_status rbn_reduce(const rbn_code* code, const char* partition, char** traces, int* all_cancellable) {
  RBN_REQUIRE(code);
  RBN_REQUIRE(partition);
  RBN_REQUIRE(traces);
  return guarded([&] {
    if (const auto diags = ribbon::validate(code->code); !diags.empty()) {
      return fail(RBN_ERR_DOMAIN, "invalid ribbon code: " + diags.front());
    }
    const auto p = ribbon::DiscPartition::parse(partition, code->code.discs);
    const auto result = ribbon::reduce_code(code->code, p);
    std::string text;
    for (const auto& t : result) text += ribbon::render_trace(t);
    if (all_cancellable) *all_cancellable = ribbon::all_cancellable(result) ? 1 : 0;
    return emit(text, traces);
  });
}

rbn_status rbn_oracle_check(const rbn_code* code, char** report, int* passed, char** counterexample) {
  RBN_REQUIRE(code);
  RBN_REQUIRE(report);
  RBN_REQUIRE(passed);
  return guarded([&] { return finish_checks(ribbon::oracle::check_code(code->code), report, passed, counterexample); });
}

rbn_status rbn_oracle_sweep(size_t corpus_size, uint64_t seed, char** report, int* passed, char** counterexample) {
  RBN_REQUIRE(report);
  RBN_REQUIRE(passed);
  return guarded(
      [&] { return finish_checks(ribbon::oracle::run_sweep(corpus_size, seed), report, passed, counterexample); });
}

}  // extern "C"
