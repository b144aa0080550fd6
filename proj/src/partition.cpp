#include "ribbon/partition.hpp"

#include <algorithm>
#include <charconv>

#include "ribbon/errors.hpp"

namespace ribbon {

DiscPartition::DiscPartition(std::uint32_t discs, std::vector<std::vector<std::uint32_t>> blocks)
    : discs_(discs), blocks_(std::move(blocks)) {
  if (discs_ < 1) throw DomainError("partition needs at least one disc");
  std::vector<bool> seen(discs_ + 1, false);
  for (auto& block : blocks_) {
    if (block.empty()) throw DomainError("partition blocks must be nonempty");
    std::sort(block.begin(), block.end());
    for (std::uint32_t disc : block) {
      if (disc < 1 || disc > discs_) {
        throw DomainError("partition disc " + std::to_string(disc) + " out of range 1.." + std::to_string(discs_));
      }
      if (seen[disc]) throw DomainError("partition lists disc " + std::to_string(disc) + " twice");
      seen[disc] = true;
    }
  }
  for (std::uint32_t disc = 1; disc <= discs_; ++disc) {
    if (!seen[disc]) throw DomainError("partition is missing disc " + std::to_string(disc));
  }
  std::sort(blocks_.begin(), blocks_.end());
}

DiscPartition DiscPartition::discrete(std::uint32_t discs) {
  std::vector<std::vector<std::uint32_t>> blocks;
  for (std::uint32_t d = 1; d <= discs; ++d) blocks.push_back({d});
  return {discs, std::move(blocks)};
}

DiscPartition DiscPartition::single_block(std::uint32_t discs) {
  std::vector<std::uint32_t> all(discs);
  for (std::uint32_t d = 0; d < discs; ++d) all[d] = d + 1;
  return {discs, {std::move(all)}};
}

DiscPartition DiscPartition::parse(std::string_view text, std::uint32_t discs) {
  std::vector<std::vector<std::uint32_t>> blocks(1);
  std::size_t i = 0;
  auto fail = [&](const std::string& what) -> void { throw ParseError(1, i + 1, "partition: " + what); };
  bool expect_number = true;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t') {
      ++i;
    } else if (c == ',' || c == '|') {
      if (expect_number) fail(std::string("unexpected '") + c + "'");
      if (c == '|') blocks.emplace_back();
      expect_number = true;
      ++i;
    } else if (c >= '0' && c <= '9') {
      if (!expect_number) fail("missing separator");
      std::uint32_t value = 0;
      const auto [end, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc{}) fail("disc index too large");
      blocks.back().push_back(value);
      i = static_cast<std::size_t>(end - text.data());
      expect_number = false;
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }
  if (expect_number) fail("expected a disc index");
  return {discs, std::move(blocks)};
}

ClassMap DiscPartition::class_map() const {
  std::vector<std::uint32_t> ids(discs_);
  for (const auto& block : blocks_) {
    for (std::uint32_t disc : block) ids[disc - 1] = block.front();
  }
  return ClassMap(std::move(ids));
}

DiscPartition DiscPartition::merged(std::size_t a, std::size_t b) const {
  if (a >= blocks_.size() || b >= blocks_.size() || a == b) throw DomainError("invalid block indices for merge");
  std::vector<std::vector<std::uint32_t>> blocks;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i == b) continue;
    blocks.push_back(blocks_[i]);
    if (i == a) blocks.back().insert(blocks.back().end(), blocks_[b].begin(), blocks_[b].end());
  }
  return {discs_, std::move(blocks)};
}

std::string DiscPartition::to_string() const {
  std::string out;
  for (const auto& block : blocks_) {
    if (!out.empty()) out += '|';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(block[i]);
    }
  }
  return out;
}

namespace {

// Builds blocks left to right. Each new block starts at the least unused disc;
// its remaining members are chosen in depth-first ascending order, and stopping
// (a shorter block) is tried before extending. That yields the lexicographic
// order of the canonical block list.
class BlockBuilder {
 public:
  BlockBuilder(std::uint32_t discs, std::uint32_t target, const PartitionVisitor& visit)
      : discs_(discs), target_(target), used_(discs + 1, false), visit_(visit) {}

  bool run() { return open_block(discs_); }

 private:
  // `free` counts unused discs.
  bool open_block(std::uint32_t free) {
    const std::uint32_t remaining_blocks = target_ - static_cast<std::uint32_t>(blocks_.size());
    if (free == 0) {
      if (remaining_blocks != 0) return true;
      return visit_(DiscPartition(discs_, blocks_));
    }
    if (remaining_blocks == 0 || free < remaining_blocks) return true;
    std::uint32_t least = 1;
    while (used_[least]) ++least;
    used_[least] = true;
    blocks_.push_back({least});
    const bool go_on = extend_block(least, free - 1);
    blocks_.pop_back();
    used_[least] = false;
    return go_on;
  }

  bool extend_block(std::uint32_t last, std::uint32_t free) {
    // Remaining blocks after this one must still be fillable.
    const std::uint32_t later_blocks = target_ - static_cast<std::uint32_t>(blocks_.size());
    if (free >= later_blocks) {
      if (!open_block(free)) return false;
    }
    if (free <= later_blocks) return true;
    for (std::uint32_t next = last + 1; next <= discs_; ++next) {
      if (used_[next]) continue;
      used_[next] = true;
      blocks_.back().push_back(next);
      const bool go_on = extend_block(next, free - 1);
      blocks_.back().pop_back();
      used_[next] = false;
      if (!go_on) return false;
    }
    return true;
  }

  std::uint32_t discs_;
  std::uint32_t target_;
  std::vector<bool> used_;
  std::vector<std::vector<std::uint32_t>> blocks_;
  const PartitionVisitor& visit_;
};

}  // namespace

void for_each_partition_with_blocks(std::uint32_t discs, std::uint32_t blocks, const PartitionVisitor& visit) {
  if (discs < 1 || blocks < 1 || blocks > discs) return;
  BlockBuilder(discs, blocks, visit).run();
}

void for_each_partition(std::uint32_t discs, const PartitionVisitor& visit) {
  bool stopped = false;
  const PartitionVisitor wrapped = [&](const DiscPartition& p) {
    if (!visit(p)) stopped = true;
    return !stopped;
  };
  for (std::uint32_t k = discs; k >= 1 && !stopped; --k) for_each_partition_with_blocks(discs, k, wrapped);
}

std::vector<DiscPartition> enumerate_partitions(std::uint32_t discs) {
  if (discs > 12) throw LimitError("enumerate_partitions: d = " + std::to_string(discs) + " exceeds 12");
  std::vector<DiscPartition> out;
  for_each_partition(discs, [&](const DiscPartition& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

}  // namespace ribbon
