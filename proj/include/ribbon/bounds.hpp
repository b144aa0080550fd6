#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ribbon/partition.hpp"
#include "ribbon/reduction.hpp"
#include "ribbon/ribbon_model.hpp"

namespace ribbon {

/// Largest disc count searched exhaustively by `refined_bound`.
inline constexpr std::uint32_t kExhaustiveDiscLimit = 12;

/// A partition of the discs (the trivial tubings) under which every band
/// cancels and the blocks plus bands still form one connected surface.
struct BoundCertificate {
  DiscPartition partition;
  std::vector<CancelTrace> traces;
  /// d - |blocks|; any spanning forest inside the blocks realizes it.
  std::uint32_t tubes_added = 0;
  /// b - |blocks| + 1.
  std::int64_t genus_bound = 0;
  /// False when produced by the greedy search.
  bool certified_optimal = true;
};

enum class Caveat {
  None,
  /// The refined bound beats the band count; it holds only if the band words
  /// faithfully encode the homotopy classes of the band cores.
  Encoding,
};

const char* to_string(Caveat c);

struct BoundReport {
  std::uint32_t theorem2 = 0;
  std::optional<BoundCertificate> refined;
  /// Present only for one-disc codes: the double is unknotted of genus b.
  std::optional<std::uint32_t> one_disc_ub;
  Caveat caveat = Caveat::None;
};

struct SearchOptions {
  /// Allow a greedy, non-certified search when d exceeds the exhaustive limit.
  bool heuristic = false;
  std::uint32_t exhaustive_limit = kExhaustiveDiscLimit;
};

/// Number of bands. Throws DisconnectedError for a code bounding a link.
std::uint32_t theorem2_bound(const RibbonCode& code);

/// Multigraph with one vertex per block and an edge per band is connected.
bool class_graph_connected(const RibbonCode& code, const DiscPartition& partition);

/// b - |blocks| + 1; throws DisconnectedError when the class multigraph is disconnected.
std::int64_t genus_of_certificate(const RibbonCode& code, const DiscPartition& partition);

/// Connected class multigraph and every band cancellable.
bool partition_qualifies(const RibbonCode& code, const DiscPartition& partition);

/// Best qualifying partition: most blocks, then least canonical encoding.
/// Throws LimitError when d exceeds the exhaustive limit without `heuristic`.
BoundCertificate refined_bound(const RibbonCode& code, const SearchOptions& options = {});

BoundReport bound_report(const RibbonCode& code, bool refined = true, const SearchOptions& options = {});

/// Flat `key=value` lines.
std::string render_report(const BoundReport& report);

}  // namespace ribbon
