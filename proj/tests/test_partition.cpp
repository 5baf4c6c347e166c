#include "conlat/partition.hpp"

#include "conlat/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace conlat;

TEST_CASE("from_blocks canonical forms") {
  Partition a1 = from_blocks(5, {{0, 1}, {2, 3}, {4}});
  CHECK(render(a1) == "|0,1|2,3|4|");
  CHECK(render(from_blocks(3, {{0}, {1}, {2}})) == "|0|1|2|");
  CHECK(render(from_blocks(4, {{0, 1, 2, 3}})) == "|0,1,2,3|");
  CHECK(from_blocks(4, {{3, 0, 1, 2}}) == Partition::top(4));
  CHECK_THROWS_AS(from_blocks(3, {{0, 1}, {1, 2}}), input_error);
  CHECK_THROWS_AS(from_blocks(3, {{0, 1}}), input_error);
}

TEST_CASE("parse and render round trip") {
  Partition beta = parse_partition("|0,3|2,5|1,4|");
  CHECK(beta.size() == 6);
  CHECK(render(beta) == "|0,3|1,4|2,5|");
  CHECK(render(parse_partition("|0|1|2|")) == "|0|1|2|");
  CHECK(render(parse_partition("|2,0|1|")) == "|0,2|1|");
  CHECK(parse_partition(" | 0, 1, 2 | 3, 4, 5| ") == from_blocks(6, {{0, 1, 2}, {3, 4, 5}}));
  CHECK_THROWS_AS(parse_partition("|0,0|1|"), input_error);
  CHECK_THROWS_AS(parse_partition("|0,2|"), input_error);
  // every parse of a render is the identity on a sample of partitions
  for (const auto& p : enumerate_all(5)) CHECK(parse_partition(render(p)) == p);
}

TEST_CASE("meet join and order") {
  Partition a1 = from_blocks(5, {{0, 1}, {2, 3}, {4}});
  Partition a2 = from_blocks(5, {{0}, {1, 2}, {3, 4}});
  CHECK(meet(a1, a2) == Partition::bottom(5));
  CHECK(join(a1, a2) == Partition::top(5));
  CHECK(join(a1, Partition::bottom(5)) == a1);
  CHECK(leq(Partition::bottom(5), a1));
  CHECK(leq(a1, Partition::top(5)));
  CHECK(!leq(a1, a2));
  CHECK_THROWS_AS(meet(a1, Partition::top(4)), input_error);
}

TEST_CASE("lattice laws on random triples") {
  oracles::Rng rng(12345);
  for (int n = 2; n <= 7; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      Partition p = oracles::random_partition(rng, n);
      Partition q = oracles::random_partition(rng, n);
      Partition r = oracles::random_partition(rng, n);
      CHECK(meet(p, q) == meet(q, p));
      CHECK(join(p, q) == join(q, p));
      CHECK(meet(p, meet(q, r)) == meet(meet(p, q), r));
      CHECK(join(p, join(q, r)) == join(join(p, q), r));
      CHECK(meet(p, join(p, q)) == p);
      CHECK(join(p, meet(p, q)) == p);
      CHECK(meet(p, p) == p);
      CHECK(join(p, p) == p);
      CHECK(leq(p, q) == (meet(p, q) == p));
      CHECK(leq(p, q) == (join(p, q) == q));
    }
  }
}

TEST_CASE("enumeration matches the Bell oracle") {
  CHECK(enumerate_all(1).size() == 1);
  CHECK(enumerate_all(4).size() == 15);
  CHECK(enumerate_all(5).size() == 52);
  for (int n = 0; n <= 8; ++n) {
    auto all = enumerate_all(n, 10);
    CHECK(static_cast<long long>(all.size()) == oracles::bell(n));
    // no duplicates, everything canonical
    auto sorted = all;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    CHECK(sorted.size() == all.size());
    if (n <= 6) {
      auto reference = oracles::all_partitions(n);
      std::sort(reference.begin(), reference.end());
      CHECK(sorted == reference);
    }
  }
  CHECK_THROWS_AS(enumerate_all(11), cap_error);
}

TEST_CASE("kernel of a map") {
  CHECK(kernel_of_map({0, 1, 2}) == Partition::bottom(3));
  CHECK(kernel_of_map({1, 1, 1}) == Partition::top(3));
  CHECK(render(kernel_of_map({0, 0, 2, 3, 2})) == "|0,1|2,4|3|");
}

TEST_CASE("blocks transversal restrict") {
  Partition p = parse_partition("|0,1,2|3,4,5|");
  CHECK(p.block_count() == 2);
  CHECK(render(restrict_to(p, {0, 2, 4})) == "|0,1|2|");
  Partition beta = parse_partition("|0,3|2,5|1,4|");
  CHECK(beta.block_count() == 3);
  CHECK(beta.transversal() == std::vector<int>{0, 1, 2});
  CHECK(parse_partition("|0,3|2,5|1,4|").blocks()[1] == std::vector<int>{1, 4});
  CHECK_THROWS_AS(restrict_to(p, {0, 9}), input_error);
  CHECK_THROWS_AS(restrict_to(p, {0, 0}), input_error);
}

TEST_CASE("re-canonicalizing is the identity") {
  oracles::Rng rng(777);
  for (int trial = 0; trial < 50; ++trial) {
    Partition p = oracles::random_partition(rng, 8);
    CHECK(Partition::from_ids(p.ids()) == p);
  }
}

TEST_CASE("degenerate zero-point partition") {
  CHECK(enumerate_all(0).size() == 1);
  CHECK(Partition::bottom(0) == Partition::top(0));
}
