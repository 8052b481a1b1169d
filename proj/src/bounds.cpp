#include "waring/bounds.hpp"

#include "waring/errors.hpp"

namespace waring {

Integer bbs_bound(int n, int d) {
  if (n < 1 || d < 1) throw InvalidInput("bounds need n >= 1 and d >= 1");
  return binomial(n + d - 2, d - 1);
}

Integer improved_bound(int n, int d) {
  if (n < 3 || d < 3) throw InvalidInput("the improved bound is only claimed for n >= 3 and d >= 3");
  return binomial(n + d - 2, d - 1) - binomial(n + d - 6, d - 3);
}

BoundTable::BoundTable(int max_n, int max_d, BaseMode mode) : max_n_(max_n), max_d_(max_d), mode_(mode) {
  if (max_n < 1 || max_d < 1) throw InvalidInput("bound table needs n >= 1 and d >= 1");
  entries_.resize(static_cast<std::size_t>(max_n) * static_cast<std::size_t>(max_d));
  auto cell = [&](int n, int d) -> Integer& {
    return entries_[static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(max_d) + static_cast<std::size_t>(d - 1)];
  };
  for (int n = 1; n <= max_n; ++n)
    for (int d = 1; d <= max_d; ++d) {
      if (n == 1 || d == 1) {
        cell(n, d) = 1;
      } else if (n == 2) {
        cell(n, d) = d;
      } else if (d == 2) {
        cell(n, d) = n;
      } else if (n == 3 && d == 3 && mode == BaseMode::improved) {
        cell(n, d) = 5;
      } else {
        cell(n, d) = cell(n - 1, d) + cell(n, d - 1);
      }
    }
}

const Integer& BoundTable::at(int n, int d) const {
  if (n < 1 || d < 1 || n > max_n_ || d > max_d_) throw InvalidInput("bound table index out of range");
  return entries_[static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(max_d_) + static_cast<std::size_t>(d - 1)];
}

Integer recursion_bound(int n, int d, BaseMode mode) {
  if (n < 1 || d < 1) throw InvalidInput("bounds need n >= 1 and d >= 1");
  return BoundTable(n, d, mode).at(n, d);
}

const char* to_string(BaseMode mode) { return mode == BaseMode::bbs ? "bbs" : "improved"; }

}  // namespace waring
