#include "schur/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace schur {

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.num_parts())
    throw std::invalid_argument("Tableau: row count does not match shape");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (static_cast<int>(rows_[r].size()) != shape_[static_cast<int>(r)])
      throw std::invalid_argument("Tableau: row length does not match shape");
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      const int v = rows_[r][c];
      if (v < 1) throw std::invalid_argument("Tableau: entries must be positive");
      if (c > 0 && rows_[r][c - 1] > v)
        throw std::invalid_argument("Tableau: rows must weakly increase");
      if (r > 0 && rows_[r - 1][c] >= v)
        throw std::invalid_argument("Tableau: columns must strictly increase");
    }
  }
}

int Tableau::max_entry() const {
  int m = 0;
  for (const auto& row : rows_)
    for (int v : row) m = std::max(m, v);
  return m;
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(num_boxes()));
  for (const auto& row : rows_) word.insert(word.end(), row.begin(), row.end());
  return word;
}

std::string Tableau::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r > 0) out += '\n';
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c > 0) out += ' ';
      out += std::to_string(rows_[r][c]);
    }
  }
  return out;
}

namespace {

// Backtracking fill in row-reading order. Trying candidate entries in
// ascending order makes the output come out sorted by reading word.
// `allowed` limits how many times each entry may still be used; a null
// pointer means entries are unconstrained up to max_entry.
void fill_cells(const Partition& shape, int max_entry, std::vector<int>* remaining,
                std::vector<std::vector<int>>& rows, int r, int c,
                std::vector<Tableau>& out) {
  if (r == shape.num_parts()) {
    out.emplace_back(shape, rows);
    return;
  }
  const int next_r = (c + 1 < shape[r]) ? r : r + 1;
  const int next_c = (c + 1 < shape[r]) ? c + 1 : 0;
  int lo = 1;
  if (c > 0) lo = std::max(lo, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
  if (r > 0) lo = std::max(lo, rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
  for (int v = lo; v <= max_entry; ++v) {
    if (remaining) {
      auto& left = (*remaining)[static_cast<std::size_t>(v - 1)];
      if (left == 0) continue;
      --left;
      rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      fill_cells(shape, max_entry, remaining, rows, next_r, next_c, out);
      ++left;
    } else {
      rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      fill_cells(shape, max_entry, remaining, rows, next_r, next_c, out);
    }
  }
}

std::vector<std::vector<int>> make_rows(const Partition& shape) {
  std::vector<std::vector<int>> rows;
  rows.reserve(static_cast<std::size_t>(shape.num_parts()));
  for (int r = 0; r < shape.num_parts(); ++r)
    rows.emplace_back(static_cast<std::size_t>(shape[r]), 0);
  return rows;
}

}  // namespace

std::vector<Tableau> enumerate_ssyt(const Partition& shape, int max_entry) {
  if (max_entry < 1) throw std::domain_error("enumerate_ssyt: max_entry must be >= 1");
  std::vector<Tableau> out;
  if (shape.empty()) {
    out.emplace_back(shape, std::vector<std::vector<int>>{});
    return out;
  }
  if (shape.num_parts() > max_entry) return out;  // column strictness rules fillings out
  auto rows = make_rows(shape);
  fill_cells(shape, max_entry, nullptr, rows, 0, 0, out);
  return out;
}

std::vector<Tableau> enumerate_ssyt_content(const Partition& shape, const Composition& content) {
  for (int c : content)
    if (c < 0) throw std::invalid_argument("enumerate_ssyt_content: negative content entry");
  std::vector<Tableau> out;
  const long long total = std::accumulate(content.begin(), content.end(), 0LL);
  if (total != shape.size()) return out;
  if (shape.empty()) {
    out.emplace_back(shape, std::vector<std::vector<int>>{});
    return out;
  }
  auto remaining = std::vector<int>(content.begin(), content.end());
  auto rows = make_rows(shape);
  fill_cells(shape, static_cast<int>(content.size()), &remaining, rows, 0, 0, out);
  return out;
}

Composition weight(const Tableau& t) {
  Composition counts(static_cast<std::size_t>(t.max_entry()), 0);
  for (const auto& row : t.rows())
    for (int v : row) ++counts[static_cast<std::size_t>(v - 1)];
  return counts;
}

Tableau bender_knuth(const Tableau& t, int i) {
  if (i < 1) throw std::invalid_argument("bender_knuth: index must be >= 1");
  auto rows = t.rows();
  const int nrows = static_cast<int>(rows.size());
  for (int r = 0; r < nrows; ++r) {
    auto& row = rows[static_cast<std::size_t>(r)];
    const int ncols = static_cast<int>(row.size());
    int free_i = 0;
    int free_i1 = 0;
    int block_start = -1;
    for (int c = 0; c < ncols; ++c) {
      const int v = row[static_cast<std::size_t>(c)];
      if (v == i) {
        const bool fixed = r + 1 < nrows &&
                           c < static_cast<int>(rows[static_cast<std::size_t>(r + 1)].size()) &&
                           rows[static_cast<std::size_t>(r + 1)][static_cast<std::size_t>(c)] == i + 1;
        if (!fixed) {
          if (block_start < 0) block_start = c;
          ++free_i;
        }
      } else if (v == i + 1) {
        const bool fixed = r > 0 && rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] == i;
        if (!fixed) {
          if (block_start < 0) block_start = c;
          ++free_i1;
        }
      }
    }
    // The free entries form one contiguous block of i's then (i+1)'s;
    // swap the two run lengths.
    for (int j = 0; j < free_i + free_i1; ++j) {
      row[static_cast<std::size_t>(block_start + j)] = (j < free_i1) ? i : i + 1;
    }
  }
  return Tableau(t.shape(), std::move(rows));  // constructor re-validates
}

}  // namespace schur
