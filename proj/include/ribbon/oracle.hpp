#pragma once

// Brute-force validators. Nothing here reuses the partition search or the
// cancellation loop from the bounds/reduction code (only freegroup primitives),
// so agreement between the two is evidence rather than tautology.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ribbon/freegroup.hpp"
#include "ribbon/partition.hpp"
#include "ribbon/ribbon_model.hpp"

namespace ribbon::oracle {

inline constexpr std::size_t kConfluenceWordLimit = 10;
inline constexpr std::uint32_t kBruteDiscLimit = 8;

struct GenSpec {
  std::uint64_t seed = 0;
  std::uint32_t discs = 1;
  std::uint32_t bands = 0;
  std::uint32_t max_word_len = 0;
};

struct GeneratedCode {
  RibbonCode code;
  /// False only when b < d - 1, where no connected code exists.
  bool connected = true;
};

/// Deterministic across platforms for a fixed spec. Redraws until connected
/// whenever b >= d - 1.
GeneratedCode random_code(const GenSpec& spec);

/// `count` connected codes with d <= 6, b <= 6 and words of length <= 4.
std::vector<RibbonCode> corpus(std::size_t count, std::uint64_t base_seed = 0);

/// Genus of the closed connected surface built from `spheres` spheres and
/// `tubes` tubes, via chi = 2 * spheres - 2 * tubes.
std::int64_t euler_genus(std::int64_t spheres, std::int64_t tubes);

/// Every partition of {1..d} as a restricted growth string (block label per
/// disc, 0-based, first occurrence order).
std::vector<std::vector<std::uint32_t>> restricted_growth_strings(std::uint32_t discs);

/// Bell number by the Bell triangle.
std::uint64_t bell_number(std::uint32_t n);

/// Independent qualification of a block labelling: the band graph on labels is
/// connected and each band word, freely reduced over labels, splits into a
/// prefix of start-label letters and a suffix of end-label letters.
bool labelling_qualifies(const RibbonCode& code, const std::vector<std::uint32_t>& labels);

/// Explores every maximal sequence of cancellation steps on the band word and
/// checks that each terminal state agrees with `cancel_band`'s verdict.
/// Throws LimitError for words longer than kConfluenceWordLimit.
bool confluence_check(const Band& band, const DiscPartition& partition);

/// Minimum of b - |blocks| + 1 over every qualifying partition. Throws
/// LimitError for d > kBruteDiscLimit and DisconnectedError for disconnected codes.
std::int64_t brute_refined(const RibbonCode& code);

/// Number of (qualifying partition, pairwise merge) pairs where the merge
/// fails to qualify. Zero for a monotone calculus.
std::size_t monotonicity_violations(const RibbonCode& code);

struct SweepResult {
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::optional<RibbonCode> counterexample;
};

/// All bands with words of length <= max_len over discs {1..discs}, all foot
/// pairs, under every partition of those discs.
SweepResult confluence_sweep(std::uint32_t max_len = 4, std::uint32_t discs = 3);

enum class Outcome { Pass, Fail, Skip };

struct CheckResult {
  std::string name;
  Outcome outcome = Outcome::Pass;
  std::string detail;
  std::optional<RibbonCode> counterexample;
};

/// Confluence, refined-bound equivalence, certificate replay and genus checks on one code.
std::vector<CheckResult> check_code(const RibbonCode& code);

/// Confluence sweep plus corpus-wide checks.
std::vector<CheckResult> run_sweep(std::size_t corpus_size = 1000, std::uint64_t seed = 0);

/// `PASS <name> <detail>` lines.
std::string render_checks(const std::vector<CheckResult>& checks);

}  // namespace ribbon::oracle
