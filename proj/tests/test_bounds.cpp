#include "doctest.h"
#include "ribbon/bounds.hpp"
#include "ribbon/errors.hpp"
#include "ribbon/oracle.hpp"

using namespace ribbon;

namespace {

const RibbonCode kStevedore{2, {{"B1", 1, 2, Word{pos(2)}}}};

// d discs in a path, empty words: the discrete partition qualifies.
RibbonCode chain(std::uint32_t d) {
  RibbonCode code{d, {}};
  for (std::uint32_t i = 1; i < d; ++i) code.bands.push_back({"B" + std::to_string(i), i, i + 1, {}});
  return code;
}

}  // namespace

TEST_CASE("theorem2_bound") {
  CHECK(theorem2_bound(example_code()) == 3);
  CHECK(theorem2_bound(kStevedore) == 1);
  const RibbonCode seifert{1, {{"A", 1, 1, {}}, {"B", 1, 1, {}}}};
  CHECK(theorem2_bound(seifert) == 2);
  CHECK_THROWS_AS(theorem2_bound(RibbonCode{2, {}}), DisconnectedError);
  CHECK_THROWS_AS(theorem2_bound(RibbonCode{2, {{"A", 1, 3, {}}}}), DomainError);
}

TEST_CASE("class_graph_connected") {
  CHECK(class_graph_connected(example_code(), DiscPartition::parse("1,3|2,4", 4)));
  const RibbonCode loop{2, {{"L", 1, 1, {}}}};
  CHECK_FALSE(class_graph_connected(loop, DiscPartition::discrete(2)));
  CHECK(class_graph_connected(loop, DiscPartition::single_block(2)));
  for (const RibbonCode& code : oracle::corpus(100, 1)) {
    CHECK(class_graph_connected(code, DiscPartition::single_block(code.discs)));
  }
}

TEST_CASE("genus_of_certificate") {
  CHECK(genus_of_certificate(example_code(), DiscPartition::parse("1,3|2,4", 4)) == 2);
  CHECK(genus_of_certificate(example_code(), DiscPartition::single_block(4)) == 3);
  const RibbonCode one{1, {{"A", 1, 1, {}}, {"B", 1, 1, {}}, {"C", 1, 1, {}}}};
  CHECK(genus_of_certificate(one, DiscPartition::single_block(1)) == 3);
  const RibbonCode loop{2, {{"L", 1, 1, {}}}};
  CHECK_THROWS_WITH_AS(genus_of_certificate(loop, DiscPartition::discrete(2)),
                       "certificate does not connect the surface", DisconnectedError);
}

TEST_CASE("genus formula matches the sphere-tube oracle for every partition") {
  for (const RibbonCode& code : oracle::corpus(60, 2)) {
    for (const auto& p : enumerate_partitions(code.discs)) {
      if (!class_graph_connected(code, p)) continue;
      const std::int64_t tubes = code.band_count() + (code.discs - static_cast<std::int64_t>(p.block_count()));
      CHECK(genus_of_certificate(code, p) == oracle::euler_genus(code.discs, tubes));
    }
  }
}

TEST_CASE("refined_bound on the four-disc example") {
  const BoundCertificate cert = refined_bound(example_code());
  CHECK(cert.genus_bound == 2);
  CHECK(cert.partition.to_string() == "1,3|2,4");
  CHECK(cert.tubes_added == 2);
  CHECK(cert.certified_optimal);
  CHECK(cert.traces.size() == 3);
  for (const auto& t : cert.traces) CHECK(t.cancellable);

  // Nothing with three or more blocks qualifies; checked with the independent labelling test.
  std::size_t finer = 0;
  for (const auto& labels : oracle::restricted_growth_strings(4)) {
    const std::uint32_t blocks = 1 + *std::max_element(labels.begin(), labels.end());
    if (blocks >= 3) {
      ++finer;
      CHECK_FALSE(oracle::labelling_qualifies(example_code(), labels));
    }
  }
  CHECK(finer == 7);  // S(4,3) + S(4,4)
}

TEST_CASE("refined_bound small cases") {
  const RibbonCode one{1, {{"A", 1, 1, Word{pos(1), pos(1)}}, {"B", 1, 1, {}}}};
  const BoundCertificate c1 = refined_bound(one);
  CHECK(c1.genus_bound == 2);
  CHECK(c1.partition == DiscPartition::single_block(1));

  const RibbonCode parallel{2, {{"A", 1, 2, {}}, {"B", 1, 2, {}}}};
  CHECK(refined_bound(parallel).genus_bound == 1);
  CHECK(refined_bound(parallel).partition == DiscPartition::discrete(2));

  CHECK(refined_bound(kStevedore).genus_bound == 0);
  CHECK_THROWS_AS(refined_bound(RibbonCode{3, {{"A", 1, 2, {}}}}), DisconnectedError);
}

TEST_CASE("tie-break picks the least canonical partition") {
  // Both 1|2,3 and 1,3|2 qualify; the search must return the canonical minimum.
  const RibbonCode code{3, {{"A", 1, 2, Word{pos(3)}}, {"B", 2, 3, {}}}};
  const BoundCertificate cert = refined_bound(code);
  std::optional<DiscPartition> best;
  for (const auto& p : enumerate_partitions(3)) {
    if (p.block_count() != cert.partition.block_count() || !partition_qualifies(code, p)) continue;
    if (!best || p < *best) best = p;
  }
  REQUIRE(best);
  CHECK(*best == cert.partition);
  for (const auto& p : enumerate_partitions(3)) {
    if (p.block_count() > cert.partition.block_count()) CHECK_FALSE(partition_qualifies(code, p));
  }
}

TEST_CASE("search limit and heuristic") {
  const RibbonCode big = chain(13);
  CHECK_THROWS_AS(refined_bound(big), LimitError);
  SearchOptions heuristic;
  heuristic.heuristic = true;
  const BoundCertificate cert = refined_bound(big, heuristic);
  CHECK_FALSE(cert.certified_optimal);
  CHECK(cert.partition == DiscPartition::discrete(13));
  CHECK(cert.genus_bound == 0);

  // Greedy must still land on a qualifying partition when merges are needed.
  RibbonCode tangled = chain(14);
  tangled.bands[0].word = Word{pos(5)};
  tangled.bands[6].word = Word{pos(1), neg(9)};
  const BoundCertificate greedy = refined_bound(tangled, heuristic);
  CHECK(partition_qualifies(tangled, greedy.partition));
  CHECK(greedy.genus_bound <= static_cast<std::int64_t>(tangled.band_count()));

  // Under the limit the flag changes nothing.
  CHECK(refined_bound(example_code(), heuristic).certified_optimal);
}

TEST_CASE("bound_report") {
  const BoundReport ex = bound_report(example_code());
  CHECK(ex.theorem2 == 3);
  REQUIRE(ex.refined);
  CHECK(ex.refined->genus_bound == 2);
  CHECK_FALSE(ex.one_disc_ub);
  CHECK(ex.caveat == Caveat::Encoding);
  CHECK(render_report(ex) ==
        "theorem2=3\nrefined=2\npartition=1,3|2,4\ntubes_added=2\nsearch=exhaustive\ncaveat=encoding\n");

  const RibbonCode one{1, {{"A", 1, 1, Word{neg(1)}}, {"B", 1, 1, {}}}};
  const BoundReport r1 = bound_report(one);
  CHECK(r1.theorem2 == 2);
  CHECK(r1.refined->genus_bound == 2);
  CHECK(r1.one_disc_ub == 2u);
  CHECK(r1.caveat == Caveat::None);
  CHECK(render_report(r1).find("one_disc_ub=2\n") != std::string::npos);

  const BoundReport st = bound_report(kStevedore);
  CHECK(st.theorem2 == 1);
  CHECK(st.caveat == Caveat::Encoding);

  const BoundReport plain = bound_report(example_code(), false);
  CHECK_FALSE(plain.refined);
  CHECK(render_report(plain) == "theorem2=3\ncaveat=none\n");
}

TEST_CASE("refined never exceeds theorem2") {
  for (const RibbonCode& code : oracle::corpus(400, 3)) {
    const BoundReport r = bound_report(code);
    CHECK(r.refined->genus_bound <= static_cast<std::int64_t>(r.theorem2));
    CHECK(r.refined->genus_bound >= 0);
    CHECK((r.caveat == Caveat::Encoding) == (r.refined->genus_bound < static_cast<std::int64_t>(r.theorem2)));
  }
}
