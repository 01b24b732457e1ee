#include "schur/kostka.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "schur/tableaux.hpp"

namespace schur {

long long kostka_number(const Partition& shape, const Partition& content) {
  if (shape.size() != content.size()) return 0;
  return static_cast<long long>(enumerate_ssyt_content(shape, content.parts()).size());
}

namespace {

std::unique_ptr<const KostkaMatrix> compute_kostka_matrix(int k) {
  auto table = std::make_unique<KostkaMatrix>();
  table->degree = k;
  table->order = partitions_of(k);
  const auto n = static_cast<Eigen::Index>(table->order.size());
  table->entries = RationalMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const long long count = kostka_number(table->order[static_cast<std::size_t>(i)],
                                            table->order[static_cast<std::size_t>(j)]);
      if (count != 0) table->entries(i, j) = Rational(count);
    }
  }
  return table;
}

}  // namespace

const KostkaMatrix& kostka_matrix(int k) {
  if (k < 0) throw std::domain_error("kostka_matrix: degree must be non-negative");
  static std::mutex cache_mutex;
  static std::map<int, std::unique_ptr<const KostkaMatrix>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, compute_kostka_matrix(k)).first;
  return *it->second;  // single-assignment: entries are never replaced or evicted
}

const RationalMatrix& inverse_kostka_matrix(int k) {
  static std::mutex cache_mutex;
  static std::map<int, std::unique_ptr<const RationalMatrix>> cache;
  const auto& table = kostka_matrix(k);
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(k);
  if (it == cache.end()) {
    it = cache
             .emplace(k, std::make_unique<const RationalMatrix>(
                             inverse_upper_unitriangular(table.entries)))
             .first;
  }
  return *it->second;
}

long long kostka_row_sum(const Partition& lam) {
  const auto& table = kostka_matrix(lam.size());
  for (std::size_t i = 0; i < table.order.size(); ++i) {
    if (table.order[i] == lam) {
      long long sum = 0;
      for (Eigen::Index j = 0; j < table.entries.cols(); ++j) {
        sum += table.entries(static_cast<Eigen::Index>(i), j).numerator().convert_to<long long>();
      }
      return sum;
    }
  }
  throw std::logic_error("kostka_row_sum: partition not found in its own degree table");
}

}  // namespace schur
