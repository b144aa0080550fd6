#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ribbon/freegroup.hpp"

namespace ribbon {

/// A set partition of {1..d}. Blocks are kept canonical: members ascending,
/// blocks ordered by their least member. Comparison is lexicographic on that
/// block list, which is the tie-break order for equally good certificates.
class DiscPartition {
 public:
  /// Validates and canonicalizes; throws DomainError unless `blocks` exactly
  /// partitions {1..discs}.
  DiscPartition(std::uint32_t discs, std::vector<std::vector<std::uint32_t>> blocks);

  static DiscPartition discrete(std::uint32_t discs);
  static DiscPartition single_block(std::uint32_t discs);
  /// `1,3|2,4` syntax; every disc of {1..discs} exactly once.
  static DiscPartition parse(std::string_view text, std::uint32_t discs);

  std::uint32_t discs() const noexcept { return discs_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<std::vector<std::uint32_t>>& blocks() const noexcept { return blocks_; }

  /// Class id of a disc is the least member of its block.
  ClassMap class_map() const;
  /// Merge two blocks (by index) into one.
  DiscPartition merged(std::size_t a, std::size_t b) const;

  std::string to_string() const;

  friend bool operator==(const DiscPartition&, const DiscPartition&) = default;
  friend auto operator<=>(const DiscPartition& a, const DiscPartition& b) { return a.blocks_ <=> b.blocks_; }

 private:
  std::uint32_t discs_;
  std::vector<std::vector<std::uint32_t>> blocks_;
};

/// Returns false from the visitor to stop early.
using PartitionVisitor = std::function<bool(const DiscPartition&)>;

/// Visits every partition of {1..d} with exactly `blocks` blocks, in
/// ascending canonical order.
void for_each_partition_with_blocks(std::uint32_t discs, std::uint32_t blocks, const PartitionVisitor& visit);

/// Visits every partition of {1..d} exactly once: block count descending,
/// canonical order within a block count. The first partition satisfying a
/// monotone predicate is therefore the optimal, tie-broken choice.
void for_each_partition(std::uint32_t discs, const PartitionVisitor& visit);

/// Materialized form of `for_each_partition`; throws LimitError for d > 12.
std::vector<DiscPartition> enumerate_partitions(std::uint32_t discs);

}  // namespace ribbon
