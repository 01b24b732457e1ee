#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oracles.hpp"
#include "schur/partitions.hpp"

using schur::Composition;
using schur::Partition;

namespace {

Partition p(std::vector<int> parts) { return Partition(std::move(parts)); }

// Generate-and-dedupe oracle: filter the full cube {0..max}^n for tuples
// whose nonzero entries, sorted decreasingly, equal lam.
std::set<Composition> brute_force_compositions(const Partition& lam, int n) {
  std::set<Composition> out;
  const int max = lam.empty() ? 0 : lam[0];
  Composition tuple(static_cast<std::size_t>(n), 0);
  while (true) {
    Composition nonzero;
    for (int v : tuple)
      if (v != 0) nonzero.push_back(v);
    std::sort(nonzero.begin(), nonzero.end(), std::greater<int>());
    if (nonzero == lam.parts()) out.insert(tuple);
    int i = n - 1;
    while (i >= 0 && tuple[static_cast<std::size_t>(i)] == max) {
      tuple[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++tuple[static_cast<std::size_t>(i)];
  }
  return out;
}

long long multinomial_rearrangements(const Partition& lam, int n) {
  Composition padded(static_cast<std::size_t>(n), 0);
  std::copy(lam.begin(), lam.end(), padded.begin());
  long long numerator = 1;
  for (int i = 2; i <= n; ++i) numerator *= i;
  std::map<int, int> multiplicity;
  for (int v : padded) ++multiplicity[v];
  for (const auto& [value, count] : multiplicity) {
    (void)value;
    for (int i = 2; i <= count; ++i) numerator /= i;
  }
  return numerator;
}

}  // namespace

TEST_SUITE("partitions") {

TEST_CASE("partition invariants are enforced") {
  CHECK_THROWS_AS(p({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(p({3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(p({-1}), std::invalid_argument);
  CHECK(p({3, 2, 1}).size() == 6);
  CHECK(p({3, 2, 1}).num_parts() == 3);
  CHECK(Partition().size() == 0);
}

TEST_CASE("text round trip") {
  CHECK(p({3, 2, 1}).to_string() == "[3,2,1]");
  CHECK(Partition().to_string() == "[]");
  CHECK(Partition::parse("[3,2,1]") == p({3, 2, 1}));
  CHECK(Partition::parse("3,2,1") == p({3, 2, 1}));
  CHECK(Partition::parse("[]") == Partition());
  CHECK(Partition::parse(" [ 4 , 2 ] ") == p({4, 2}));
  CHECK_THROWS(Partition::parse("[1,2]"));
  CHECK_THROWS(Partition::parse("[a]"));
  CHECK_THROWS(Partition::parse("[3,"));
}

TEST_CASE("partitions_of lists the canonical order") {
  const auto three = schur::partitions_of(3);
  REQUIRE(three.size() == 3);
  CHECK(three[0] == p({3}));
  CHECK(three[1] == p({2, 1}));
  CHECK(three[2] == p({1, 1, 1}));

  const auto one = schur::partitions_of(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == p({1}));

  CHECK(schur::partitions_of(4).size() == 5);

  const auto zero = schur::partitions_of(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == Partition());

  CHECK_THROWS_AS(schur::partitions_of(-1), std::domain_error);
}

TEST_CASE("partition counts match the recurrence oracle up to k = 12") {
  for (int k = 0; k <= 12; ++k) {
    CHECK(static_cast<long long>(schur::partitions_of(k).size()) == oracle::partition_count(k));
  }
}

TEST_CASE("canonical order is strictly descending lexicographic and refines dominance") {
  for (int k = 1; k <= 8; ++k) {
    const auto list = schur::partitions_of(k);
    for (std::size_t i = 0; i + 1 < list.size(); ++i) {
      CHECK(list[i + 1].parts() < list[i].parts());
    }
    // If mu is dominated by lam and differs from it, lam comes first.
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = 0; j < list.size(); ++j) {
        if (i != j && schur::dominance_leq(list[j], list[i])) CHECK(i < j);
      }
    }
  }
}

TEST_CASE("compositions_sorting_to reproduces the degree-6 example set") {
  const auto got = schur::compositions_sorting_to(p({4, 2}), 3);
  const std::set<Composition> expected = {{4, 2, 0}, {4, 0, 2}, {0, 4, 2},
                                          {2, 4, 0}, {2, 0, 4}, {0, 2, 4}};
  CHECK(std::set<Composition>(got.begin(), got.end()) == expected);
  CHECK(got.size() == 6);
}

TEST_CASE("compositions_sorting_to edge cases") {
  const auto constant = schur::compositions_sorting_to(p({1, 1, 1}), 3);
  REQUIRE(constant.size() == 1);
  CHECK(constant[0] == Composition{1, 1, 1});

  const auto two_vars = schur::compositions_sorting_to(p({2, 1}), 2);
  CHECK(std::set<Composition>(two_vars.begin(), two_vars.end()) ==
        std::set<Composition>{{2, 1}, {1, 2}});

  CHECK(schur::compositions_sorting_to(p({1, 1, 1}), 2).empty());
  const auto empty_in_two = schur::compositions_sorting_to(Partition(), 2);
  REQUIRE(empty_in_two.size() == 1);
  CHECK(empty_in_two[0] == Composition{0, 0});
}

TEST_CASE("compositions match the generate-and-dedupe oracle and multinomial count") {
  for (int k = 1; k <= 5; ++k) {
    for (const Partition& lam : schur::partitions_of(k)) {
      for (int n = lam.num_parts(); n <= 4; ++n) {
        const auto got = schur::compositions_sorting_to(lam, n);
        const auto expected = brute_force_compositions(lam, n);
        CHECK(std::set<Composition>(got.begin(), got.end()) == expected);
        CHECK(static_cast<long long>(got.size()) == multinomial_rearrangements(lam, n));
        // no duplicates
        CHECK(got.size() == expected.size());
      }
    }
  }
}

TEST_CASE("dominance order") {
  CHECK(schur::dominance_leq(p({1, 1, 1}), p({3})));
  CHECK_FALSE(schur::dominance_leq(p({3}), p({1, 1, 1})));
  CHECK(schur::dominance_leq(p({2, 2}), p({3, 1})));
  CHECK(schur::dominance_leq(p({2, 1}), p({2, 1})));
  CHECK_THROWS_AS(schur::dominance_leq(p({2}), p({3})), std::domain_error);
}

}  // TEST_SUITE
