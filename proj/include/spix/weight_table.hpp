#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace spix {

struct WeightRow {
  double weight = 0.0;
  std::uint64_t frequency = 0;

  friend bool operator==(const WeightRow&, const WeightRow&) = default;
};

// Edge-weight frequency distribution over all C(n,2) node pairs. Absent pairs
// are folded into a leading weight-0 row, so frequencies always add up to the
// pair total.
class WeightFrequencyTable {
 public:
  WeightFrequencyTable() = default;

  // Validates: weights strictly increasing and non-negative, frequencies
  // positive, a zero weight only in the first row, and sum(f) == pair_total.
  WeightFrequencyTable(std::vector<WeightRow> rows, std::uint64_t pair_total);

  std::span<const WeightRow> rows() const noexcept { return rows_; }
  std::uint64_t pair_total() const noexcept { return pair_total_; }
  // T1 = sum of w_i * f_i.
  double weighted_total() const noexcept { return weighted_total_; }
  // Number of pairs carrying a positive weight (|E|).
  std::uint64_t positive_count() const noexcept;
  double max_weight() const noexcept { return rows_.empty() ? 0.0 : rows_.back().weight; }

 private:
  std::vector<WeightRow> rows_;
  std::uint64_t pair_total_ = 0;
  double weighted_total_ = 0.0;
};

}  // namespace spix
