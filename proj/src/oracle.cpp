#include "ribbon/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <set>

#include "ribbon/bounds.hpp"
#include "ribbon/errors.hpp"
#include "ribbon/reduction.hpp"

namespace ribbon::oracle {

namespace {

// mt19937_64 is fully specified by the standard; the distributions are not,
// so bounded draws are done here by rejection.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint32_t below(std::uint32_t n) {
    const std::uint64_t range = n;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<std::uint32_t>(x % range);
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void rgs_extend(std::vector<std::uint32_t>& current, std::uint32_t max_label, std::uint32_t discs,
                std::vector<std::vector<std::uint32_t>>& out) {
  if (current.size() == discs) {
    out.push_back(current);
    return;
  }
  for (std::uint32_t label = 0; label <= max_label + 1; ++label) {
    current.push_back(label);
    rgs_extend(current, std::max(max_label, label), discs, out);
    current.pop_back();
  }
}

DiscPartition to_partition(const std::vector<std::uint32_t>& labels) {
  std::map<std::uint32_t, std::vector<std::uint32_t>> blocks;
  for (std::size_t i = 0; i < labels.size(); ++i) blocks[labels[i]].push_back(static_cast<std::uint32_t>(i + 1));
  std::vector<std::vector<std::uint32_t>> list;
  for (auto& [label, members] : blocks) list.push_back(std::move(members));
  return DiscPartition(static_cast<std::uint32_t>(labels.size()), std::move(list));
}

std::size_t distinct(const std::vector<std::uint32_t>& labels) {
  return std::set<std::uint32_t>(labels.begin(), labels.end()).size();
}

void require_valid(const RibbonCode& code) {
  const auto diags = validate(code);
  if (!diags.empty()) throw DomainError("invalid ribbon code: " + diags.front());
}

}  // namespace

GeneratedCode random_code(const GenSpec& spec) {
  if (spec.discs < 1) throw DomainError("GenSpec needs d >= 1");
  Rng rng(spec.seed);
  const bool can_connect = spec.bands + 1 >= spec.discs;
  for (;;) {
    RibbonCode code;
    code.discs = spec.discs;
    for (std::uint32_t i = 0; i < spec.bands; ++i) {
      Band band;
      band.id = "B" + std::to_string(i + 1);
      band.start_disc = 1 + rng.below(spec.discs);
      band.end_disc = 1 + rng.below(spec.discs);
      const std::uint32_t len = rng.below(spec.max_word_len + 1);
      for (std::uint32_t j = 0; j < len; ++j) {
        const std::uint32_t disc = 1 + rng.below(spec.discs);
        band.word.push_back({disc, rng.below(2) == 0 ? Sign::Positive : Sign::Negative});
      }
      code.bands.push_back(std::move(band));
    }
    const bool connected = is_connected(code);
    if (connected || !can_connect) return {std::move(code), connected};
  }
}

std::vector<RibbonCode> corpus(std::size_t count, std::uint64_t base_seed) {
  std::vector<RibbonCode> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(splitmix(base_seed + i));
    GenSpec spec;
    spec.discs = 1 + rng.below(6);
    spec.bands = (spec.discs - 1) + rng.below(6 - (spec.discs - 1) + 1);
    spec.max_word_len = 4;
    spec.seed = rng.next();
    out.push_back(random_code(spec).code);
  }
  return out;
}

std::int64_t euler_genus(std::int64_t spheres, std::int64_t tubes) {
  const std::int64_t chi = 2 * spheres - 2 * tubes;
  return (2 - chi) / 2;
}

std::vector<std::vector<std::uint32_t>> restricted_growth_strings(std::uint32_t discs) {
  std::vector<std::vector<std::uint32_t>> out;
  if (discs == 0) return out;
  std::vector<std::uint32_t> current{0};
  rgs_extend(current, 0, discs, out);
  return out;
}

std::uint64_t bell_number(std::uint32_t n) {
  std::vector<std::uint64_t> row{1};
  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

bool labelling_qualifies(const RibbonCode& code, const std::vector<std::uint32_t>& labels) {
  auto label_of = [&](std::uint32_t disc) { return labels.at(disc - 1); };

  // Connectivity by breadth-first search over the labels present.
  std::map<std::uint32_t, std::vector<std::uint32_t>> adjacency;
  for (std::uint32_t l : labels) adjacency[l];
  for (const Band& band : code.bands) {
    adjacency[label_of(band.start_disc)].push_back(label_of(band.end_disc));
    adjacency[label_of(band.end_disc)].push_back(label_of(band.start_disc));
  }
  std::set<std::uint32_t> reached{labels.front()};
  std::vector<std::uint32_t> frontier{labels.front()};
  while (!frontier.empty()) {
    const std::uint32_t v = frontier.back();
    frontier.pop_back();
    for (std::uint32_t u : adjacency[v]) {
      if (reached.insert(u).second) frontier.push_back(u);
    }
  }
  if (reached.size() != adjacency.size()) return false;

  for (const Band& band : code.bands) {
    Word mapped;
    for (const Letter& l : band.word) mapped.push_back({label_of(l.disc) + 1, l.sign});
    const Word reduced = free_reduce(mapped);
    const std::uint32_t s = label_of(band.start_disc) + 1;
    const std::uint32_t e = label_of(band.end_disc) + 1;
    std::size_t prefix = 0;
    while (prefix < reduced.size() && reduced[prefix].disc == s) ++prefix;
    std::size_t suffix = 0;
    while (suffix < reduced.size() && reduced[reduced.size() - 1 - suffix].disc == e) ++suffix;
    if (prefix + suffix < reduced.size()) return false;
  }
  return true;
}

bool confluence_check(const Band& band, const DiscPartition& partition) {
  const std::size_t n = band.word.size();
  if (n > kConfluenceWordLimit) {
    throw LimitError("confluence_check: word length " + std::to_string(n) + " exceeds " +
                     std::to_string(kConfluenceWordLimit));
  }
  const ClassMap classes = partition.class_map();
  std::vector<Letter> mapped;
  for (const Letter& l : band.word) mapped.push_back({classes.of(l.disc), l.sign});
  const std::uint32_t s = classes.of(band.start_disc);
  const std::uint32_t e = classes.of(band.end_disc);

  constexpr unsigned kEmptyTerminal = 1;
  constexpr unsigned kStuckTerminal = 2;
  std::map<std::uint32_t, unsigned> memo;

  // Bit i of a state is set while letter i survives.
  auto explore = [&](auto&& self, std::uint32_t state) -> unsigned {
    if (auto it = memo.find(state); it != memo.end()) return it->second;
    std::vector<std::size_t> alive;
    for (std::size_t i = 0; i < n; ++i) {
      if (state & (1u << i)) alive.push_back(i);
    }
    unsigned outcomes = 0;
    bool moved = false;
    for (std::size_t k = 0; k + 1 < alive.size(); ++k) {
      if (mapped[alive[k]].cancels(mapped[alive[k + 1]])) {
        moved = true;
        outcomes |= self(self, state & ~(1u << alive[k]) & ~(1u << alive[k + 1]));
      }
    }
    if (!alive.empty() && mapped[alive.front()].disc == s) {
      moved = true;
      outcomes |= self(self, state & ~(1u << alive.front()));
    }
    if (!alive.empty() && mapped[alive.back()].disc == e) {
      moved = true;
      outcomes |= self(self, state & ~(1u << alive.back()));
    }
    if (!moved) outcomes = alive.empty() ? kEmptyTerminal : kStuckTerminal;
    memo[state] = outcomes;
    return outcomes;
  };

  const unsigned outcomes = explore(explore, static_cast<std::uint32_t>((1u << n) - 1));
  const bool verdict = cancel_band(band, partition).cancellable;
  return outcomes == (verdict ? kEmptyTerminal : kStuckTerminal);
}

std::int64_t brute_refined(const RibbonCode& code) {
  require_valid(code);
  if (code.discs > kBruteDiscLimit) {
    throw LimitError("brute_refined: d = " + std::to_string(code.discs) + " exceeds " +
                     std::to_string(kBruteDiscLimit));
  }
  if (!is_connected(code)) throw DisconnectedError("brute_refined: code is disconnected");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& labels : restricted_growth_strings(code.discs)) {
    if (!labelling_qualifies(code, labels)) continue;
    const auto k = static_cast<std::int64_t>(distinct(labels));
    best = std::min(best, static_cast<std::int64_t>(code.bands.size()) - k + 1);
  }
  return best;
}

std::size_t monotonicity_violations(const RibbonCode& code) {
  require_valid(code);
  std::size_t violations = 0;
  for (const auto& labels : restricted_growth_strings(code.discs)) {
    if (!labelling_qualifies(code, labels)) continue;
    const std::uint32_t blocks = static_cast<std::uint32_t>(distinct(labels));
    for (std::uint32_t a = 0; a < blocks; ++a) {
      for (std::uint32_t b = a + 1; b < blocks; ++b) {
        std::vector<std::uint32_t> merged = labels;
        std::replace(merged.begin(), merged.end(), b, a);
        if (!labelling_qualifies(code, merged)) ++violations;
      }
    }
  }
  return violations;
}

SweepResult confluence_sweep(std::uint32_t max_len, std::uint32_t discs) {
  // All words of length <= max_len over 2 * discs signed letters.
  std::vector<Word> words{Word{}};
  for (std::size_t begin = 0, len = 0; len < max_len; ++len) {
    const std::size_t end = words.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (std::uint32_t disc = 1; disc <= discs; ++disc) {
        for (Sign sign : {Sign::Positive, Sign::Negative}) {
          Word w = words[i];
          w.push_back({disc, sign});
          words.push_back(std::move(w));
        }
      }
    }
    begin = end;
  }

  SweepResult result;
  for (const auto& labels : restricted_growth_strings(discs)) {
    const DiscPartition partition = to_partition(labels);
    for (std::uint32_t s = 1; s <= discs; ++s) {
      for (std::uint32_t e = 1; e <= discs; ++e) {
        for (const Word& w : words) {
          ++result.instances;
          const Band band{"B1", s, e, w};
          if (!confluence_check(band, partition)) {
            ++result.failures;
            if (!result.counterexample) result.counterexample = RibbonCode{discs, {band}};
          }
        }
      }
    }
  }
  return result;
}

namespace {

CheckResult pass(std::string name, std::string detail) { return {std::move(name), Outcome::Pass, std::move(detail), {}}; }
CheckResult skip(std::string name, std::string detail) { return {std::move(name), Outcome::Skip, std::move(detail), {}}; }
CheckResult fail(std::string name, std::string detail, std::optional<RibbonCode> code) {
  return {std::move(name), Outcome::Fail, std::move(detail), std::move(code)};
}

// Verifies a refined certificate against the code. Empty string on success.
std::string certificate_problem(const RibbonCode& code, const BoundCertificate& cert) {
  if (!class_graph_connected(code, cert.partition)) return "class multigraph disconnected";
  const auto traces = reduce_code(code, cert.partition);
  if (!all_cancellable(traces)) return "a band does not cancel";
  for (std::size_t i = 0; i < code.bands.size(); ++i) {
    if (!replay_trace(code.bands[i], cert.partition, cert.traces.at(i))) return "trace of " + code.bands[i].id + " does not replay";
  }
  const auto k = static_cast<std::int64_t>(cert.partition.block_count());
  if (cert.genus_bound != static_cast<std::int64_t>(code.bands.size()) - k + 1) return "genus_bound mismatch";
  if (cert.genus_bound > static_cast<std::int64_t>(code.bands.size())) return "refined exceeds theorem2";
  return {};
}

std::string genus_problem(const RibbonCode& code, const BoundCertificate& cert) {
  const SurfaceStats s = stats(code);
  const std::int64_t d = code.discs;
  const std::int64_t b = code.band_count();
  if (!s.double_genus || *s.double_genus != euler_genus(d, b)) return "double_genus disagrees with chi oracle";
  if (genus_of_certificate(code, cert.partition) != euler_genus(d, b + cert.tubes_added)) {
    return "certificate genus disagrees with chi oracle";
  }
  if (genus_of_certificate(code, DiscPartition::single_block(code.discs)) != b) return "one-block genus != b";
  return {};
}

}  // namespace

std::vector<CheckResult> check_code(const RibbonCode& code) {
  std::vector<CheckResult> out;
  if (const auto diags = validate(code); !diags.empty()) {
    out.push_back(fail("validate", diags.front(), code));
    return out;
  }
  out.push_back(pass("validate", ""));

  if (code.discs > kBruteDiscLimit) {
    out.push_back(skip("confluence", "d > " + std::to_string(kBruteDiscLimit)));
  } else {
    std::size_t checked = 0;
    std::size_t skipped = 0;
    std::optional<CheckResult> failure;
    const auto all = restricted_growth_strings(code.discs);
    for (const auto& labels : all) {
      if (failure) break;
      const DiscPartition partition = to_partition(labels);
      for (const Band& band : code.bands) {
        if (band.word.size() > kConfluenceWordLimit) {
          ++skipped;
          continue;
        }
        ++checked;
        if (!confluence_check(band, partition)) {
          failure = fail("confluence", "band " + band.id + " partition " + partition.to_string(),
                         RibbonCode{code.discs, {band}});
          break;
        }
      }
    }
    if (failure) {
      out.push_back(*failure);
    } else {
      out.push_back(pass("confluence", "instances=" + std::to_string(checked) +
                                           (skipped ? " skipped=" + std::to_string(skipped) : std::string())));
    }
  }

  if (!is_connected(code)) {
    out.push_back(skip("refined-equivalence", "disconnected"));
    out.push_back(skip("certificate-replay", "disconnected"));
    out.push_back(skip("euler-genus", "disconnected"));
    return out;
  }
  if (code.discs > kExhaustiveDiscLimit) {
    out.push_back(skip("refined-equivalence", "d > " + std::to_string(kExhaustiveDiscLimit)));
    out.push_back(skip("certificate-replay", "d > " + std::to_string(kExhaustiveDiscLimit)));
    out.push_back(skip("euler-genus", "d > " + std::to_string(kExhaustiveDiscLimit)));
    return out;
  }

  const BoundCertificate cert = refined_bound(code);
  if (code.discs > kBruteDiscLimit) {
    out.push_back(skip("refined-equivalence", "d > " + std::to_string(kBruteDiscLimit)));
  } else {
    const std::int64_t brute = brute_refined(code);
    const std::string detail = "refined=" + std::to_string(cert.genus_bound) + " brute=" + std::to_string(brute);
    out.push_back(brute == cert.genus_bound ? pass("refined-equivalence", detail)
                                            : fail("refined-equivalence", detail, code));
  }
  if (const std::string problem = certificate_problem(code, cert); problem.empty()) {
    out.push_back(pass("certificate-replay", "partition=" + cert.partition.to_string()));
  } else {
    out.push_back(fail("certificate-replay", problem, code));
  }
  if (const std::string problem = genus_problem(code, cert); problem.empty()) {
    out.push_back(pass("euler-genus", ""));
  } else {
    out.push_back(fail("euler-genus", problem, code));
  }
  return out;
}

std::vector<CheckResult> run_sweep(std::size_t corpus_size, std::uint64_t seed) {
  std::vector<CheckResult> out;

  const SweepResult sweep = confluence_sweep();
  const std::string sweep_detail =
      "instances=" + std::to_string(sweep.instances) + " failures=" + std::to_string(sweep.failures);
  out.push_back(sweep.failures == 0 ? pass("confluence-sweep", sweep_detail)
                                    : fail("confluence-sweep", sweep_detail, sweep.counterexample));

  const std::vector<RibbonCode> codes = corpus(corpus_size, seed);
  struct Tally {
    explicit Tally(const char* n) : name(n) {}
    const char* name;
    std::size_t failures = 0;
    std::optional<RibbonCode> first;
    void record(const RibbonCode& code) {
      if (failures++ == 0) first = code;
    }
  };
  Tally theorem2("theorem2-consistency"), one_disc("one-disc"), equivalence("refined-equivalence"),
      monotone("monotonicity"), genus("euler-genus"), round_trip("round-trip"), replay("certificate-replay");

  for (const RibbonCode& code : codes) {
    const DiscPartition whole = DiscPartition::single_block(code.discs);
    const BoundReport report = bound_report(code);
    const BoundCertificate& cert = *report.refined;

    if (!partition_qualifies(code, whole) || genus_of_certificate(code, whole) != code.band_count() ||
        cert.genus_bound > report.theorem2) {
      theorem2.record(code);
    }
    if (code.discs == 1) {
      if (!all_cancellable(reduce_code(code, whole)) || report.one_disc_ub != code.band_count()) one_disc.record(code);
    }
    if (brute_refined(code) != cert.genus_bound) equivalence.record(code);
    if (monotonicity_violations(code) != 0) monotone.record(code);
    if (!genus_problem(code, cert).empty()) genus.record(code);
    if (!certificate_problem(code, cert).empty()) replay.record(code);
    const std::string text = serialize_ribbon_code(code);
    if (parse_ribbon_code(text) != code || serialize_ribbon_code(parse_ribbon_code(text)) != text) {
      round_trip.record(code);
    }
  }

  for (Tally* t : {&theorem2, &one_disc, &equivalence, &monotone, &genus, &replay, &round_trip}) {
    const std::string detail = "codes=" + std::to_string(codes.size()) + " failures=" + std::to_string(t->failures);
    out.push_back(t->failures == 0 ? pass(t->name, detail) : fail(t->name, detail, t->first));
  }
  return out;
}

std::string render_checks(const std::vector<CheckResult>& checks) {
  std::string out;
  for (const CheckResult& c : checks) {
    out += c.outcome == Outcome::Pass ? "PASS " : c.outcome == Outcome::Fail ? "FAIL " : "SKIP ";
    out += c.name;
    if (!c.detail.empty()) out += " " + c.detail;
    out += "\n";
  }
  return out;
}

}  // namespace ribbon::oracle
