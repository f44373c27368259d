#pragma once

#include <compare>
#include <string>
#include <vector>

namespace dualgroth {

// Finitely supported sequence of nonnegative integers. Trailing zeros are
// implicit: (0,1,4,1) and (0,1,4,1,0,0) are the same object. Used both for
// tableau statistics (cont, ircont, ceq) and for monomial exponents.
class WeakComposition {
 public:
  WeakComposition() = default;
  explicit WeakComposition(std::vector<int> entries);

  // Indicator composition e_i (1-based).
  static WeakComposition unit(int i);

  // 1-based access; entries beyond the stored length are 0.
  int at(int i) const;
  // Number of stored entries (trailing zeros stripped).
  int length() const { return static_cast<int>(entries_.size()); }
  long long sum() const;
  bool is_zero() const { return entries_.empty(); }
  const std::vector<int>& entries() const { return entries_; }

  // Copy with entries i and i+1 transposed (1-based).
  WeakComposition swapped(int i) const;
  // True iff entries weakly decrease (a partition-shaped composition).
  bool weakly_decreasing() const;

  friend auto operator<=>(const WeakComposition&, const WeakComposition&) = default;

  // "(0,1,4,1)"; "()" for the zero composition.
  std::string to_string() const;

 private:
  std::vector<int> entries_;
};

}  // namespace dualgroth
