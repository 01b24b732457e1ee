#include "schur/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace schur {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i - 1] < parts_[i])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ']';
  return out;
}

Partition Partition::parse(std::string_view text) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = strip(text);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']')
      throw std::invalid_argument("Partition::parse: missing closing bracket");
    text = strip(text.substr(1, text.size() - 2));
  }
  std::vector<int> parts;
  if (!text.empty()) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t comma = text.find(',', pos);
      const std::string_view item =
          strip(text.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
      if (item.empty()) throw std::invalid_argument("Partition::parse: empty part");
      int value = 0;
      for (char c : item) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw std::invalid_argument("Partition::parse: invalid part '" + std::string(item) + "'");
        value = value * 10 + (c - '0');
        if (value > 1'000'000) throw std::invalid_argument("Partition::parse: part too large");
      }
      parts.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  return Partition(std::move(parts));  // constructor validates monotonicity
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& current,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int p = std::min(max_part, remaining); p >= 1; --p) {
    current.push_back(p);
    emit_partitions(remaining - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int k) {
  if (k < 0) throw std::domain_error("partitions_of: k must be non-negative");
  std::vector<Partition> out;
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> current;
  emit_partitions(k, k, current, out);
  return out;
}

std::vector<Composition> compositions_sorting_to(const Partition& lam, int n) {
  std::vector<Composition> out;
  if (lam.num_parts() > n) return out;
  Composition padded(static_cast<std::size_t>(n), 0);
  std::copy(lam.begin(), lam.end(), padded.begin());
  std::sort(padded.begin(), padded.end());
  // next_permutation over the sorted multiset walks every distinct
  // rearrangement exactly once, in lexicographic order.
  do {
    out.push_back(padded);
  } while (std::next_permutation(padded.begin(), padded.end()));
  return out;
}

bool dominance_leq(const Partition& mu, const Partition& lam) {
  if (mu.size() != lam.size())
    throw std::domain_error("dominance_leq: partitions must have equal size");
  const int rows = std::max(mu.num_parts(), lam.num_parts());
  long long lam_prefix = 0;
  long long mu_prefix = 0;
  for (int j = 0; j < rows; ++j) {
    lam_prefix += lam.part_or_zero(j);
    mu_prefix += mu.part_or_zero(j);
    if (lam_prefix < mu_prefix) return false;
  }
  return true;
}

}  // namespace schur
