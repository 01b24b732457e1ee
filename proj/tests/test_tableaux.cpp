#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oracles.hpp"
#include "schur/tableaux.hpp"

using schur::Composition;
using schur::Partition;
using schur::Tableau;

namespace {

Partition p(std::vector<int> parts) { return Partition(std::move(parts)); }

using Rows = std::vector<std::vector<int>>;

std::multiset<Rows> as_rows(const std::vector<Tableau>& tableaux) {
  std::multiset<Rows> out;
  for (const auto& t : tableaux) out.insert(t.rows());
  return out;
}

}  // namespace

TEST_SUITE("tableaux") {

TEST_CASE("tableau constructor enforces the defining conditions") {
  CHECK_NOTHROW(Tableau(p({3, 1}), {{1, 1, 2}, {2}}));
  CHECK_THROWS_AS(Tableau(p({2, 1}), {{2, 1}, {3}}), std::invalid_argument);  // row decreases
  CHECK_THROWS_AS(Tableau(p({2, 1}), {{1, 1}, {1}}), std::invalid_argument);  // column not strict
  CHECK_THROWS_AS(Tableau(p({2, 1}), {{1, 1}}), std::invalid_argument);       // wrong row count
  CHECK_THROWS_AS(Tableau(p({2, 1}), {{1}, {2}}), std::invalid_argument);     // wrong row length
  CHECK_THROWS_AS(Tableau(p({1}), {{0}}), std::invalid_argument);             // entries positive
}

TEST_CASE("the three tableaux of shape (3,1) with entries up to 2") {
  const auto got = enumerate_ssyt(p({3, 1}), 2);
  const std::multiset<Rows> expected = {
      {{1, 1, 1}, {2}}, {{1, 1, 2}, {2}}, {{1, 2, 2}, {2}}};
  CHECK(as_rows(got) == expected);
  // deterministic reading-word order
  REQUIRE(got.size() == 3);
  CHECK(got[0].rows() == Rows{{1, 1, 1}, {2}});
  CHECK(got[1].rows() == Rows{{1, 1, 2}, {2}});
  CHECK(got[2].rows() == Rows{{1, 2, 2}, {2}});
}

TEST_CASE("enumeration edge cases") {
  CHECK(enumerate_ssyt(p({1}), 1).size() == 1);
  CHECK(enumerate_ssyt(p({2, 1}), 3).size() == 8);
  CHECK(enumerate_ssyt(p({1, 1, 1}), 2).empty());  // more rows than allowed entries
  const auto empty_shape = enumerate_ssyt(Partition(), 2);
  REQUIRE(empty_shape.size() == 1);
  CHECK(empty_shape[0].num_boxes() == 0);
  CHECK_THROWS_AS(enumerate_ssyt(p({2}), 0), std::domain_error);
}

TEST_CASE("enumeration matches the brute-force oracle and is duplicate-free") {
  for (int k = 1; k <= 5; ++k) {
    for (const Partition& shape : schur::partitions_of(k)) {
      for (int n = 1; n <= 4; ++n) {
        const auto got = enumerate_ssyt(shape, n);
        const auto expected = oracle::brute_force_ssyt(shape, n);
        std::multiset<Rows> expected_set(expected.begin(), expected.end());
        CHECK(as_rows(got) == expected_set);
        CHECK(got.size() == expected.size());
        for (const auto& t : got) CHECK(oracle::is_valid_ssyt_rows(shape, t.rows()));
        // sorted by reading word
        for (std::size_t i = 0; i + 1 < got.size(); ++i)
          CHECK(got[i].reading_word() < got[i + 1].reading_word());
      }
    }
  }
}

TEST_CASE("content-constrained enumeration") {
  const auto two = enumerate_ssyt_content(p({3, 2}), {2, 2, 1});
  CHECK(two.size() == 2);
  CHECK(as_rows(two) == std::multiset<Rows>{{{1, 1, 2}, {2, 3}}, {{1, 1, 3}, {2, 2}}});

  const auto row = enumerate_ssyt_content(p({3}), {3});
  REQUIRE(row.size() == 1);
  CHECK(row[0].rows() == Rows{{1, 1, 1}});

  const auto column = enumerate_ssyt_content(p({1, 1, 1}), {1, 1, 1});
  REQUIRE(column.size() == 1);
  CHECK(column[0].rows() == Rows{{1}, {2}, {3}});

  CHECK(enumerate_ssyt_content(p({2, 1}), {1, 1}).empty());  // content sum mismatch
  CHECK_THROWS_AS(enumerate_ssyt_content(p({2}), {3, -1}), std::invalid_argument);
}

TEST_CASE("content enumeration agrees with filtering the free enumeration") {
  for (int k = 1; k <= 5; ++k) {
    for (const Partition& shape : schur::partitions_of(k)) {
      for (int n = 1; n <= 4; ++n) {
        std::map<Composition, std::multiset<Rows>> by_content;
        for (const auto& t : enumerate_ssyt(shape, n)) {
          Composition content = weight(t);
          content.resize(static_cast<std::size_t>(n), 0);
          by_content[content].insert(t.rows());
        }
        // every content class reproduced exactly
        for (auto& [c, rows] : by_content) {
          CHECK(as_rows(enumerate_ssyt_content(shape, c)) == rows);
        }
      }
    }
  }
}

TEST_CASE("weight reads off the exponent vector") {
  const Tableau figure(p({6, 4, 2}), {{1, 1, 2, 2, 2, 5}, {2, 4, 4, 4}, {4, 5}});
  CHECK(weight(figure) == Composition{2, 4, 0, 4, 2});

  CHECK(weight(Tableau(p({1}), {{1}})) == Composition{1});
  CHECK(weight(Tableau(p({3}), {{1, 2, 2}})) == Composition{1, 2});
  CHECK(weight(Tableau(Partition(), {})) == Composition{});
}

TEST_CASE("bender_knuth on the worked example") {
  const Tableau t(p({2, 1}), {{1, 1}, {2}});
  const Tableau image = bender_knuth(t, 1);
  CHECK(image.rows() == Rows{{1, 2}, {2}});
  CHECK(weight(t) == Composition{2, 1});
  CHECK(weight(image) == Composition{1, 2});
}

TEST_CASE("bender_knuth fixes tableaux without i or i+1") {
  const Tableau t(p({2, 1}), {{1, 1}, {2}});
  CHECK(bender_knuth(t, 5) == t);
  CHECK_THROWS_AS(bender_knuth(t, 0), std::invalid_argument);
}

TEST_CASE("bender_knuth is an involution that swaps content, exhaustively") {
  for (int k = 1; k <= 6; ++k) {
    for (const Partition& shape : schur::partitions_of(k)) {
      const auto tableaux = enumerate_ssyt(shape, 4);
      for (const auto& t : tableaux) {
        for (int i = 1; i < 4; ++i) {
          const Tableau image = bender_knuth(t, i);
          CHECK(image.shape() == shape);
          CHECK(oracle::is_valid_ssyt_rows(shape, image.rows()));
          CHECK(bender_knuth(image, i) == t);

          Composition before = weight(t);
          Composition after = weight(image);
          before.resize(5, 0);
          after.resize(5, 0);
          std::swap(before[static_cast<std::size_t>(i - 1)], before[static_cast<std::size_t>(i)]);
          CHECK(before == after);
        }
      }
    }
  }
}

TEST_CASE("bender_knuth restricts to a bijection between content classes") {
  for (int k = 1; k <= 5; ++k) {
    for (const Partition& shape : schur::partitions_of(k)) {
      for (int n = 2; n <= 3; ++n) {
        std::map<Composition, long long> class_sizes;
        for (const auto& t : enumerate_ssyt(shape, n)) {
          Composition content = weight(t);
          content.resize(static_cast<std::size_t>(n), 0);
          ++class_sizes[content];
        }
        for (const auto& [content, count] : class_sizes) {
          for (int i = 1; i < n; ++i) {
            Composition swapped = content;
            std::swap(swapped[static_cast<std::size_t>(i - 1)],
                      swapped[static_cast<std::size_t>(i)]);
            CHECK(static_cast<long long>(enumerate_ssyt_content(shape, swapped).size()) == count);
          }
        }
      }
    }
  }
}

TEST_CASE("tableau text rendering") {
  const Tableau t(p({3, 1}), {{1, 1, 2}, {2}});
  CHECK(t.to_string() == "1 1 2\n2");
}

}  // TEST_SUITE
