#pragma once

// Upper bounds on the open Waring rank: the classical binomial bound, its
// improvement from the ternary cubic base case, and the recursion table
//   B(n, d) = B(n-1, d) + B(n, d-1),  B(2, d) = d,  B(n, 2) = n.

#include <vector>

#include "waring/numerics.hpp"

namespace waring {

enum class BaseMode { bbs, improved };

// C(n+d-2, d-1). Requires n, d >= 1.
Integer bbs_bound(int n, int d);

// C(n+d-2, d-1) - C(n+d-6, d-3). Requires n, d >= 3 (InvalidInput otherwise).
Integer improved_bound(int n, int d);

// Dynamic-programming fill of the recursion for 1 <= n <= max_n,
// 1 <= d <= max_d, with B(1, d) = B(n, 1) = 1. In improved mode B(3,3) = 5.
class BoundTable {
 public:
  BoundTable(int max_n, int max_d, BaseMode mode);

  int max_n() const { return max_n_; }
  int max_d() const { return max_d_; }
  BaseMode mode() const { return mode_; }
  const Integer& at(int n, int d) const;

 private:
  int max_n_;
  int max_d_;
  BaseMode mode_;
  std::vector<Integer> entries_;
};

Integer recursion_bound(int n, int d, BaseMode mode);

const char* to_string(BaseMode mode);

}  // namespace waring
