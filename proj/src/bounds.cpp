#include "ribbon/bounds.hpp"

#include <numeric>
#include <optional>

#include "ribbon/errors.hpp"

namespace ribbon {

const char* to_string(Caveat c) { return c == Caveat::Encoding ? "encoding" : "none"; }

namespace {

void require_valid(const RibbonCode& code) {
  const auto diags = validate(code);
  if (!diags.empty()) throw DomainError("invalid ribbon code: " + diags.front());
}

void require_connected(const RibbonCode& code) {
  require_valid(code);
  if (!is_connected(code)) {
    throw DisconnectedError("ribbon code is disconnected (" + std::to_string(component_count(code)) +
                            " components); bounds are defined for knots only");
  }
}

void require_matching(const RibbonCode& code, const DiscPartition& partition) {
  if (partition.discs() != code.discs) {
    throw DomainError("partition covers " + std::to_string(partition.discs()) + " discs but the code has " +
                      std::to_string(code.discs));
  }
}

// Union-find over class ids (least disc of each block).
bool classes_connected(const RibbonCode& code, const ClassMap& classes, std::size_t blocks) {
  std::vector<std::uint32_t> parent(code.discs + 1);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = blocks;
  for (const Band& band : code.bands) {
    const std::uint32_t a = find(classes.of(band.start_disc));
    const std::uint32_t b = find(classes.of(band.end_disc));
    if (a != b) {
      parent[b] = a;
      if (--components == 1) return true;
    }
  }
  return components == 1;
}

bool qualifies(const RibbonCode& code, const DiscPartition& partition) {
  const ClassMap classes = partition.class_map();
  if (!classes_connected(code, classes, partition.block_count())) return false;
  for (const Band& band : code.bands) {
    if (!band_cancels(band, classes)) return false;
  }
  return true;
}

BoundCertificate make_certificate(const RibbonCode& code, DiscPartition partition, bool optimal) {
  const auto k = static_cast<std::int64_t>(partition.block_count());
  BoundCertificate cert{partition, reduce_code(code, partition), 0, 0, optimal};
  cert.tubes_added = code.discs - static_cast<std::uint32_t>(k);
  cert.genus_bound = static_cast<std::int64_t>(code.band_count()) - k + 1;
  return cert;
}

// Greedy coarsening from the discrete partition. Qualification is monotone
// under merging and the one-block partition always qualifies, so this ends.
DiscPartition greedy_partition(const RibbonCode& code) {
  DiscPartition current = DiscPartition::discrete(code.discs);
  while (!qualifies(code, current)) {
    std::optional<DiscPartition> best;
    std::pair<std::size_t, bool> best_score{0, false};
    for (std::size_t a = 0; a < current.block_count(); ++a) {
      for (std::size_t b = a + 1; b < current.block_count(); ++b) {
        DiscPartition candidate = current.merged(a, b);
        const ClassMap classes = candidate.class_map();
        std::size_t cancelled = 0;
        for (const Band& band : code.bands) cancelled += band_cancels(band, classes) ? 1 : 0;
        const std::pair<std::size_t, bool> score{cancelled,
                                                 classes_connected(code, classes, candidate.block_count())};
        if (!best || score > best_score || (score == best_score && candidate < *best)) {
          best = std::move(candidate);
          best_score = score;
        }
      }
    }
    current = std::move(*best);
  }
  return current;
}

}  // namespace

std::uint32_t theorem2_bound(const RibbonCode& code) {
  require_connected(code);
  return code.band_count();
}

bool class_graph_connected(const RibbonCode& code, const DiscPartition& partition) {
  require_valid(code);
  require_matching(code, partition);
  return classes_connected(code, partition.class_map(), partition.block_count());
}

std::int64_t genus_of_certificate(const RibbonCode& code, const DiscPartition& partition) {
  if (!class_graph_connected(code, partition)) throw DisconnectedError("certificate does not connect the surface");
  return static_cast<std::int64_t>(code.band_count()) - static_cast<std::int64_t>(partition.block_count()) + 1;
}

bool partition_qualifies(const RibbonCode& code, const DiscPartition& partition) {
  require_valid(code);
  require_matching(code, partition);
  return qualifies(code, partition);
}

BoundCertificate refined_bound(const RibbonCode& code, const SearchOptions& options) {
  require_connected(code);
  if (code.discs > options.exhaustive_limit) {
    if (!options.heuristic) {
      throw LimitError("d = " + std::to_string(code.discs) + " exceeds the exhaustive search limit of " +
                       std::to_string(options.exhaustive_limit) + "; pass --heuristic for a non-certified bound");
    }
    return make_certificate(code, greedy_partition(code), false);
  }

  std::optional<DiscPartition> found;
  for_each_partition(code.discs, [&](const DiscPartition& p) {
    if (!qualifies(code, p)) return true;
    found = p;
    return false;
  });
  // The single block always qualifies on a connected code.
  if (!found) found = DiscPartition::single_block(code.discs);
  return make_certificate(code, std::move(*found), true);
}

BoundReport bound_report(const RibbonCode& code, bool refined, const SearchOptions& options) {
  BoundReport report;
  report.theorem2 = theorem2_bound(code);
  if (code.discs == 1) report.one_disc_ub = report.theorem2;
  if (refined) {
    report.refined = refined_bound(code, options);
    if (report.refined->genus_bound < static_cast<std::int64_t>(report.theorem2)) report.caveat = Caveat::Encoding;
  }
  return report;
}

std::string render_report(const BoundReport& report) {
  std::string out = "theorem2=" + std::to_string(report.theorem2) + "\n";
  if (report.refined) {
    const BoundCertificate& cert = *report.refined;
    out += "refined=" + std::to_string(cert.genus_bound) + "\n";
    out += "partition=" + cert.partition.to_string() + "\n";
    out += "tubes_added=" + std::to_string(cert.tubes_added) + "\n";
    out += std::string("search=") + (cert.certified_optimal ? "exhaustive" : "heuristic") + "\n";
  }
  if (report.one_disc_ub) {
    out += "one_disc_ub=" + std::to_string(*report.one_disc_ub) + "\n";
    out += "one_disc_double=unknotted-genus-" + std::to_string(*report.one_disc_ub) + "\n";
  }
  out += std::string("caveat=") + to_string(report.caveat) + "\n";
  return out;
}

}  // namespace ribbon
