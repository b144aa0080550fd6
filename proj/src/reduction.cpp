#include "ribbon/reduction.hpp"

#include "ribbon/errors.hpp"

namespace ribbon {

const char* to_string(StepKind kind) {
  switch (kind) {
    case StepKind::FreeReduce: return "free-reduce";
    case StepKind::StripStart: return "strip-start";
    case StepKind::StripEnd: return "strip-end";
  }
  return "?";
}

namespace {

// A band letter paired with its class image.
struct Tracked {
  Letter original;
  Letter mapped;
};

class Canceller {
 public:
  Canceller(const Band& band, const ClassMap& classes, std::vector<CancelStep>* steps)
      : start_class_(classes.of(band.start_disc)), end_class_(classes.of(band.end_disc)), steps_(steps) {
    word_.reserve(band.word.size());
    for (const Letter& l : band.word) word_.push_back({l, {classes.of(l.disc), l.sign}});
  }

  void run() {
    bool changed = true;
    while (changed) {
      changed = false;
      while (free_reduce_once()) changed = true;
      if (!word_.empty() && word_.front().mapped.disc == start_class_) {
        record(StepKind::StripStart, 0, 1);
        word_.erase(word_.begin());
        changed = true;
      }
      if (!word_.empty() && word_.back().mapped.disc == end_class_) {
        record(StepKind::StripEnd, word_.size() - 1, 1);
        word_.pop_back();
        changed = true;
      }
    }
  }

  Word residual() const {
    Word w;
    for (const Tracked& t : word_) w.push_back(t.original);
    return w;
  }
  bool empty() const { return word_.empty(); }

 private:
  // Leftmost adjacent inverse pair.
  bool free_reduce_once() {
    for (std::size_t i = 0; i + 1 < word_.size(); ++i) {
      if (word_[i].mapped.cancels(word_[i + 1].mapped)) {
        record(StepKind::FreeReduce, i, 2);
        word_.erase(word_.begin() + static_cast<std::ptrdiff_t>(i), word_.begin() + static_cast<std::ptrdiff_t>(i + 2));
        return true;
      }
    }
    return false;
  }

  void record(StepKind kind, std::size_t pos, std::size_t count) {
    if (!steps_) return;
    CancelStep step{kind, pos, {}};
    for (std::size_t k = 0; k < count; ++k) step.removed.push_back(word_[pos + k].original);
    steps_->push_back(std::move(step));
  }

  std::uint32_t start_class_;
  std::uint32_t end_class_;
  std::vector<Tracked> word_;
  std::vector<CancelStep>* steps_;
};

}  // namespace

CancelTrace cancel_band(const Band& band, const DiscPartition& partition) {
  CancelTrace trace;
  trace.band_id = band.id;
  Canceller c(band, partition.class_map(), &trace.steps);
  c.run();
  trace.residual = c.residual();
  trace.cancellable = c.empty();
  return trace;
}

bool band_cancels(const Band& band, const ClassMap& classes) {
  Canceller c(band, classes, nullptr);
  c.run();
  return c.empty();
}

std::vector<CancelTrace> reduce_code(const RibbonCode& code, const DiscPartition& partition) {
  if (partition.discs() != code.discs) {
    throw DomainError("partition covers " + std::to_string(partition.discs()) + " discs but the code has " +
                      std::to_string(code.discs));
  }
  std::vector<CancelTrace> traces;
  traces.reserve(code.bands.size());
  for (const Band& band : code.bands) traces.push_back(cancel_band(band, partition));
  return traces;
}

bool all_cancellable(const std::vector<CancelTrace>& traces) {
  for (const CancelTrace& t : traces) {
    if (!t.cancellable) return false;
  }
  return true;
}

bool replay_trace(const Band& band, const DiscPartition& partition, const CancelTrace& trace) {
  const ClassMap classes = partition.class_map();
  std::vector<Letter> word(band.word.begin(), band.word.end());
  auto cls = [&](const Letter& l) { return classes.of(l.disc); };
  for (const CancelStep& step : trace.steps) {
    switch (step.kind) {
      case StepKind::FreeReduce: {
        const std::size_t i = step.position;
        if (i + 1 >= word.size() || step.removed.size() != 2) return false;
        if (word[i] != step.removed[0] || word[i + 1] != step.removed[1]) return false;
        if (cls(word[i]) != cls(word[i + 1]) || word[i].sign == word[i + 1].sign) return false;
        word.erase(word.begin() + static_cast<std::ptrdiff_t>(i), word.begin() + static_cast<std::ptrdiff_t>(i + 2));
        break;
      }
      case StepKind::StripStart:
        if (word.empty() || step.position != 0 || step.removed.size() != 1) return false;
        if (word.front() != step.removed[0] || cls(word.front()) != classes.of(band.start_disc)) return false;
        word.erase(word.begin());
        break;
      case StepKind::StripEnd:
        if (word.empty() || step.position != word.size() - 1 || step.removed.size() != 1) return false;
        if (word.back() != step.removed[0] || cls(word.back()) != classes.of(band.end_disc)) return false;
        word.pop_back();
        break;
    }
  }
  return Word(std::move(word)) == trace.residual && trace.cancellable == trace.residual.empty();
}

std::string render_trace(const CancelTrace& trace) {
  std::string out;
  for (const CancelStep& step : trace.steps) {
    out += trace.band_id + " " + to_string(step.kind) + " pos=" + std::to_string(step.position) + " letter=";
    for (std::size_t i = 0; i < step.removed.size(); ++i) {
      if (i) out += ',';
      out += to_string(step.removed[i]);
    }
    out += "\n";
  }
  out += trace.band_id + " verdict=" + (trace.cancellable ? "cancellable" : "stuck") +
         " residual=" + to_string(trace.residual) + "\n";
  return out;
}

}  // namespace ribbon
