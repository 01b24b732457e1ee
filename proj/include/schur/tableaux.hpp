#pragma once

#include <string>
#include <vector>

#include "schur/partitions.hpp"

namespace schur {

/// Semistandard Young tableau: a filling of the Young diagram of `shape`
/// with positive integers, weakly increasing along rows and strictly
/// increasing down columns. The constructor validates both conditions.
class Tableau {
 public:
  Tableau(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int entry(int r, int c) const {
    return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  int num_boxes() const { return shape_.size(); }
  int max_entry() const;

  /// Row-reading word: rows concatenated top to bottom. Enumeration
  /// output is sorted by this word, so golden tests are order-stable.
  std::vector<int> reading_word() const;

  /// One row per line, entries space-separated.
  std::string to_string() const;

  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.shape_ == b.shape_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const Tableau& a, const Tableau& b) { return !(a == b); }

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

/// All SSYT of the given shape with entries in {1, ..., max_entry},
/// ordered by row-reading word (lexicographic). A shape with more rows
/// than max_entry admits no filling and yields the empty list.
std::vector<Tableau> enumerate_ssyt(const Partition& shape, int max_entry);

/// All SSYT of the given shape where entry i appears exactly content[i-1]
/// times. Empty when the content total differs from |shape|.
std::vector<Tableau> enumerate_ssyt_content(const Partition& shape, const Composition& content);

/// Content vector of t: component i-1 counts the entries equal to i,
/// up to the largest entry present.
Composition weight(const Tableau& t);

/// Bender-Knuth involution exchanging the multiplicities of i and i+1.
///
/// Classical rule: an i with an i+1 directly below, or an i+1 with an i
/// directly above, is fixed. In each row the remaining free entries form
/// a block of a i's followed by b (i+1)'s; the block is rewritten as
/// b i's followed by a (i+1)'s.
Tableau bender_knuth(const Tableau& t, int i);

}  // namespace schur
