#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace schur {

/// A weak composition: a sequence of non-negative integers. Used both as
/// a tableau content vector and as a monomial exponent vector; the length
/// is the number of variables in play.
using Composition = std::vector<int>;

/// Integer partition: weakly decreasing sequence of positive parts.
/// The empty partition (of 0) is a valid degenerate value.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// |lambda|, the sum of the parts.
  int size() const { return size_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  /// Part i, or 0 past the end (zero-padded view).
  int part_or_zero(int i) const {
    return i < num_parts() ? parts_[static_cast<std::size_t>(i)] : 0;
  }
  const std::vector<int>& parts() const { return parts_; }

  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

  /// Bracket form "[3,2,1]"; the empty partition renders as "[]".
  std::string to_string() const;

  /// Accepts "[3,2,1]", bare "3,2,1", or "[]".
  static Partition parse(std::string_view text);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Canonical order on partitions of a fixed degree: descending
/// lexicographic, so (k) comes first and (1,...,1) last. This order
/// linearly extends dominance, which is what makes the Kostka matrix
/// upper unitriangular.
struct PartitionCanonicalLess {
  bool operator()(const Partition& a, const Partition& b) const {
    return b.parts() < a.parts();
  }
};

/// All partitions of k in canonical (descending lexicographic) order.
/// k == 0 yields the single empty partition; k < 0 is a domain error.
std::vector<Partition> partitions_of(int k);

/// All distinct length-n non-negative sequences whose nonzero entries,
/// sorted decreasingly, equal lam. Empty when lam has more than n parts.
std::vector<Composition> compositions_sorting_to(const Partition& lam, int n);

/// Dominance: true iff every prefix sum of lam is >= the corresponding
/// prefix sum of mu. Requires |mu| == |lam|.
bool dominance_leq(const Partition& mu, const Partition& lam);

}  // namespace schur
