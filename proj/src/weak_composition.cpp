#include "dualgroth/weak_composition.hpp"

#include <numeric>
#include <sstream>

#include "dualgroth/errors.hpp"

namespace dualgroth {

WeakComposition::WeakComposition(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0) throw InvalidArgument("weak composition entries must be nonnegative");
  }
  while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

WeakComposition WeakComposition::unit(int i) {
  if (i < 1) throw InvalidArgument("weak composition index must be positive");
  std::vector<int> v(static_cast<std::size_t>(i), 0);
  v.back() = 1;
  return WeakComposition(std::move(v));
}

int WeakComposition::at(int i) const {
  if (i < 1) throw InvalidArgument("weak composition index must be positive");
  if (i > length()) return 0;
  return entries_[static_cast<std::size_t>(i) - 1];
}

long long WeakComposition::sum() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

WeakComposition WeakComposition::swapped(int i) const {
  if (i < 1) throw InvalidArgument("weak composition index must be positive");
  std::vector<int> v = entries_;
  if (static_cast<int>(v.size()) < i + 1) v.resize(static_cast<std::size_t>(i) + 1, 0);
  std::swap(v[static_cast<std::size_t>(i) - 1], v[static_cast<std::size_t>(i)]);
  return WeakComposition(std::move(v));
}

bool WeakComposition::weakly_decreasing() const {
  for (std::size_t k = 1; k < entries_.size(); ++k) {
    if (entries_[k - 1] < entries_[k]) return false;
  }
  return true;
}

std::string WeakComposition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k > 0) os << ',';
    os << entries_[k];
  }
  os << ')';
  return os.str();
}

}  // namespace dualgroth
