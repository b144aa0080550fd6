#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ribbon/freegroup.hpp"
#include "ribbon/partition.hpp"
#include "ribbon/ribbon_model.hpp"

namespace ribbon {

enum class StepKind {
  FreeReduce,  // delete an adjacent inverse pair at (position, position + 1)
  StripStart,  // delete the letter nearest the start foot (a Whitney move at that foot)
  StripEnd,    // delete the letter nearest the end foot
};

const char* to_string(StepKind kind);

struct CancelStep {
  StepKind kind;
  /// Index into the word as it stood before this step (0-based).
  std::size_t position;
  /// The removed letters as written in the band (disc indices, not classes).
  /// One letter for strips, two for a free reduction.
  std::vector<Letter> removed;

  friend bool operator==(const CancelStep&, const CancelStep&) = default;
};

struct CancelTrace {
  std::string band_id;
  std::vector<CancelStep> steps;
  /// Surviving letters of the band word, in disc indices.
  Word residual;
  bool cancellable = false;
};

/// Foot cancellation to a fixpoint under the class map of `partition`:
/// free reduce to exhaustion, strip one start-class letter, strip one
/// end-class letter, repeat. Strips ignore sign.
CancelTrace cancel_band(const Band& band, const DiscPartition& partition);

/// Verdict of `cancel_band` without building a trace.
bool band_cancels(const Band& band, const ClassMap& classes);

std::vector<CancelTrace> reduce_code(const RibbonCode& code, const DiscPartition& partition);
bool all_cancellable(const std::vector<CancelTrace>& traces);

/// Replays `trace.steps` against the class-mapped band word; false if any step
/// is inapplicable or the replay does not end at `trace.residual`.
bool replay_trace(const Band& band, const DiscPartition& partition, const CancelTrace& trace);

/// One line per step, then `<id> verdict=<cancellable|stuck> residual=<word>`.
std::string render_trace(const CancelTrace& trace);

}  // namespace ribbon
