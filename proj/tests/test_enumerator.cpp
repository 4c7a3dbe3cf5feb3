#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <tuple>

#include "ltsyn/enumerator.hpp"
#include "oracle.hpp"

using namespace ltsyn;

TEST_CASE("catalan numbers")
{
  CHECK(catalan(0) == 1);
  CHECK(catalan(1) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(4) == 14);
  CHECK(catalan(10) == 16796);
}

TEST_CASE("tree shapes are counted by catalan numbers and are distinct")
{
  for (int m = 1; m <= 7; ++m) {
    const auto shapes = enumerate_trees(m);
    CHECK(shapes.size() == catalan(m));
    std::set<std::vector<uint8_t>> seen;
    for (const auto& sh : shapes) {
      CHECK(sh.gates == m);
      CHECK(sh.ops_after.size() == size_t(m + 1));
      CHECK(sh.ops_after[0] == 0);
      CHECK(sh.height >= 1);
      CHECK(sh.height <= m);
      seen.insert(sh.ops_after);
    }
    CHECK(seen.size() == shapes.size());
  }
}

TEST_CASE("root splits run left sizes 0..M-1 in order")
{
  // M=2: (leaf, (leaf,leaf)) before ((leaf,leaf), leaf)
  const auto shapes = enumerate_trees(2);
  REQUIRE(shapes.size() == 2);
  CHECK(shapes[0].ops_after == std::vector<uint8_t>{0, 0, 2});
  CHECK(shapes[1].ops_after == std::vector<uint8_t>{0, 1, 1});
}

TEST_CASE("leaf assignments enumerate lexicographically, leftmost slowest")
{
  std::vector<std::vector<int>> seen;
  enumerate_leaf_assignments(3, 2, [&](const std::vector<int>& a) {
    seen.push_back(a);
    return true;
  });
  REQUIRE(seen.size() == 8);
  CHECK(seen.front() == std::vector<int>{0, 0, 0});
  CHECK(seen[1] == std::vector<int>{0, 0, 1});
  CHECK(seen.back() == std::vector<int>{1, 1, 1});

  int count = 0;
  enumerate_leaf_assignments(1, 1, [&](const std::vector<int>&) { return ++count, true; });
  CHECK(count == 1);

  count = 0;
  enumerate_leaf_assignments(2, 3, [&](const std::vector<int>&) { return ++count, true; });
  CHECK(count == 9);

  CHECK_THROWS_AS(enumerate_leaf_assignments(2, 0, [](const std::vector<int>&) { return true; }),
                  usage_error);
}

TEST_CASE("leaf pool places constants before inputs")
{
  const auto pool = leaf_pool::make(make_library("less,1"), 2);
  REQUIRE(pool.size() == 3);
  CHECK(pool.tables[0] == 0xF);          // constant 1 first
  CHECK(pool.tables[1] == 0x3);          // then A
  CHECK(pool.tables[2] == 0x5);          // then B
  const auto both = leaf_pool::make(make_library("and,0,1"), 1);
  REQUIRE(both.size() == 3);
  CHECK(both.tables[0] == 0x0);
  CHECK(both.tables[1] == 0x3);
}

TEST_CASE("stream cardinality equals the closed form")
{
  CHECK(leaf_dag_count(make_library("less,1"), 2, 1) == 9);
  CHECK(leaf_dag_count(make_library("less,1"), 2, 3) == 405);
  CHECK(leaf_dag_count(make_library("and,xor,1"), 2, 2) == 216);

  const char* libs[] = {"nand", "less,1", "and,nand", "and,xor,1"};
  for (const char* name : libs) {
    const gate_library lib = make_library(name);
    for (int n = 1; n <= 3; ++n) {
      for (int m = 1; m <= 4; ++m) {
        uint64_t count = 0;
        enumerate_leaf_dags(lib, n, m, [&](const leaf_dag_candidate&) {
          ++count;
          return true;
        });
        REQUIRE(count == leaf_dag_count(lib, n, m));
      }
    }
  }
}

TEST_CASE("no duplicate (shape, gates, leaves) triples")
{
  const gate_library lib = make_library("and,xor,1");
  std::set<std::tuple<int, std::vector<uint8_t>, std::vector<uint8_t>>> seen;
  uint64_t count = 0;
  enumerate_leaf_dags(lib, 2, 3, [&](const leaf_dag_candidate& cand) {
    ++count;
    seen.insert({cand.shape_index,
                 std::vector<uint8_t>(cand.op_choice, cand.op_choice + cand.shape->gates),
                 std::vector<uint8_t>(cand.leaf_choice, cand.leaf_choice + cand.shape->leaves())});
    return true;
  });
  CHECK(seen.size() == count);
}

TEST_CASE("every yielded truth table equals the evaluation of the yielded formula")
{
  for (const char* name : {"less,1", "and,xor,1", "nand"}) {
    const gate_library lib = make_library(name);
    enumerate_leaf_dags(lib, 2, 3, [&](const leaf_dag_candidate& cand) {
      const formula f = cand.build_formula();
      REQUIRE(table_of_formula(f, 2) == cand.truth());
      REQUIRE(oracle::table_by_rows(f, 2) == cand.truth());
      return true;
    });
  }
}

TEST_CASE("the first candidates follow the documented order")
{
  // (<,1) at one gate over n=2: leftmost leaf slowest over [1, A, B].
  std::vector<std::string> first;
  enumerate_leaf_dags(make_library("less,1"), 2, 1, [&](const leaf_dag_candidate& cand) {
    first.push_back(to_string(cand.build_formula()));
    return true;
  });
  const std::vector<std::string> expect = {"1<1", "1<A", "1<B", "A<1", "A<A",
                                           "A<B", "B<1", "B<A", "B<B"};
  CHECK(first == expect);
}

TEST_CASE("visitors can stop the stream early")
{
  uint64_t count = 0;
  const bool completed = enumerate_leaf_dags(make_library("less,1"), 2, 2,
                                             [&](const leaf_dag_candidate&) {
                                               return ++count < 10;
                                             });
  CHECK(!completed);
  CHECK(count == 10);
}

TEST_CASE("capacity and usage guards")
{
  CHECK_THROWS_AS(enumerate_leaf_dags(make_library("less,1"), 7, 1,
                                      [](const leaf_dag_candidate&) { return true; }),
                  capacity_error);
  CHECK_THROWS_AS(enumerate_leaf_dags(make_library("less,1"), 2, 0,
                                      [](const leaf_dag_candidate&) { return true; }),
                  usage_error);
  // no constants and no inputs leaves nothing to put on leaves
  CHECK_THROWS_AS(enumerate_leaf_dags(make_library("nand"), 0, 1,
                                      [](const leaf_dag_candidate&) { return true; }),
                  usage_error);
}
