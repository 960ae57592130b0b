#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace spix {

// Non-decreasing sequence of non-negative reals together with its total.
// Degrees, strengths, and any other per-unit mass all use this type.
class OrderedSequence {
 public:
  OrderedSequence() = default;

  // Sorts `values` ascending. Throws DomainError on negative or non-finite entries.
  explicit OrderedSequence(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  double total() const noexcept { return total_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  double max() const noexcept { return values_.empty() ? 0.0 : values_.back(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }

  friend bool operator==(const OrderedSequence&, const OrderedSequence&) = default;

 private:
  std::vector<double> values_;
  double total_ = 0.0;
};

}  // namespace spix
