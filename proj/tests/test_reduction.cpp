#include <random>

#include "doctest.h"
#include "ribbon/errors.hpp"
#include "ribbon/oracle.hpp"
#include "ribbon/reduction.hpp"

using namespace ribbon;

namespace {

const DiscPartition kPaired = DiscPartition::parse("1,3|2,4", 4);

Band band_of(const RibbonCode& code, const std::string& id) {
  for (const Band& b : code.bands) {
    if (b.id == id) return b;
  }
  FAIL("no band " << id);
  return {};
}

DiscPartition random_partition(std::uint32_t d, std::mt19937& rng) {
  std::vector<std::vector<std::uint32_t>> blocks;
  for (std::uint32_t disc = 1; disc <= d; ++disc) {
    const std::size_t slot = rng() % (blocks.size() + 1);
    if (slot == blocks.size()) blocks.emplace_back();
    blocks[slot].push_back(disc);
  }
  return {d, std::move(blocks)};
}

}  // namespace

TEST_CASE("cancel_band on the four-disc example") {
  const RibbonCode code = example_code();

  const CancelTrace b1 = cancel_band(band_of(code, "B1"), kPaired);
  CHECK(b1.cancellable);
  REQUIRE(b1.steps.size() == 1);
  CHECK(b1.steps[0].kind == StepKind::StripStart);
  CHECK(b1.steps[0].removed == std::vector<Letter>{pos(3)});

  const CancelTrace b3 = cancel_band(band_of(code, "B3"), kPaired);
  CHECK(b3.cancellable);
  REQUIRE(b3.steps.size() == 2);
  CHECK(b3.steps[0].kind == StepKind::StripEnd);
  CHECK(b3.steps[0].removed == std::vector<Letter>{pos(2)});
  CHECK(b3.steps[1].kind == StepKind::StripEnd);
  CHECK(b3.steps[1].removed == std::vector<Letter>{pos(4)});

  const CancelTrace stuck = cancel_band(band_of(code, "B1"), DiscPartition::discrete(4));
  CHECK_FALSE(stuck.cancellable);
  CHECK(stuck.steps.empty());
  CHECK(stuck.residual == Word{pos(3)});
}

TEST_CASE("reduce_code verdicts") {
  const RibbonCode code = example_code();
  for (const CancelTrace& t : reduce_code(code, kPaired)) CHECK(t.cancellable);
  for (const CancelTrace& t : reduce_code(code, DiscPartition::discrete(4))) CHECK_FALSE(t.cancellable);
  CHECK(all_cancellable(reduce_code(code, DiscPartition::single_block(4))));
  CHECK_THROWS_AS(reduce_code(code, DiscPartition::discrete(3)), DomainError);
}

TEST_CASE("free reduction and strips interleave") {
  // Classes: 1 | 2,3. Band 1->2 with word +2 -3 +1 +3:
  // free-reduce (+2,-3), strip-start +1, strip-end +3.
  const Band band{"X", 1, 2, Word{pos(2), neg(3), pos(1), pos(3)}};
  const DiscPartition p = DiscPartition::parse("1|2,3", 3);
  const CancelTrace t = cancel_band(band, p);
  CHECK(t.cancellable);
  REQUIRE(t.steps.size() == 3);
  CHECK(t.steps[0].kind == StepKind::FreeReduce);
  CHECK(t.steps[0].position == 0);
  CHECK(t.steps[0].removed == std::vector<Letter>{pos(2), neg(3)});
  CHECK(t.steps[1].kind == StepKind::StripStart);
  CHECK(t.steps[2].kind == StepKind::StripEnd);
  CHECK(replay_trace(band, p, t));
  CHECK(render_trace(t) ==
        "X free-reduce pos=0 letter=+2,-3\n"
        "X strip-start pos=0 letter=+1\n"
        "X strip-end pos=0 letter=+3\n"
        "X verdict=cancellable residual=\n");
}

TEST_CASE("stuck traces render their residual") {
  const CancelTrace t = cancel_band(Band{"B3", 3, 4, Word{pos(4), pos(2)}}, DiscPartition::discrete(4));
  CHECK(render_trace(t) == "B3 verdict=stuck residual=+4 +2\n");
}

TEST_CASE("one-disc and one-block totality") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto code = oracle::random_code({rng(), 1, 4, 8}).code;
    for (const auto& t : reduce_code(code, DiscPartition::single_block(1))) CHECK(t.cancellable);
  }
  for (const RibbonCode& code : oracle::corpus(300, 5)) {
    CHECK(all_cancellable(reduce_code(code, DiscPartition::single_block(code.discs))));
  }
}

TEST_CASE("termination bound and replay") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint32_t d = 1 + rng() % 5;
    const auto code = oracle::random_code({rng(), d, 3, 7}).code;
    const DiscPartition p = random_partition(d, rng);
    for (const Band& band : code.bands) {
      const CancelTrace t = cancel_band(band, p);
      std::size_t removed = 0;
      for (const auto& s : t.steps) removed += s.removed.size();
      CHECK(t.steps.size() <= band.word.size());
      CHECK(removed + t.residual.size() == band.word.size());
      CHECK(t.cancellable == t.residual.empty());
      CHECK(replay_trace(band, p, t));
      CHECK(band_cancels(band, p.class_map()) == t.cancellable);
    }
  }
}

TEST_CASE("replay rejects a doctored trace") {
  const Band band = example_code().bands[2];
  CancelTrace t = cancel_band(band, kPaired);
  CHECK(replay_trace(band, kPaired, t));
  CancelTrace wrong_kind = t;
  wrong_kind.steps[0].kind = StepKind::StripStart;
  CHECK_FALSE(replay_trace(band, kPaired, wrong_kind));
  CancelTrace wrong_residual = t;
  wrong_residual.residual = Word{pos(1)};
  CHECK_FALSE(replay_trace(band, kPaired, wrong_residual));
}

TEST_CASE("coarsening never breaks cancellation") {
  std::mt19937 rng(21);
  std::size_t exercised = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const std::uint32_t d = 2 + rng() % 5;
    const auto code = oracle::random_code({rng(), d, 2, 5}).code;
    const DiscPartition p = random_partition(d, rng);
    if (p.block_count() < 2) continue;
    const std::size_t a = rng() % p.block_count();
    std::size_t b = rng() % p.block_count();
    if (a == b) b = (a + 1) % p.block_count();
    const DiscPartition q = p.merged(a, b);
    for (const Band& band : code.bands) {
      if (cancel_band(band, p).cancellable) {
        ++exercised;
        CHECK(cancel_band(band, q).cancellable);
      }
    }
  }
  CHECK(exercised > 100);
}
