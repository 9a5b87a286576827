#pragma once

#include <vector>

#include "permorb/int_matrix.hpp"

namespace permorb {

/// U * A * V = D with U, V unimodular and D = diag(d_1, ..., d_r, 0, ...),
/// d_i >= 0 and d_i | d_{i+1}.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  /// Exact inverse of U, accumulated alongside it.
  IntMatrix U_inverse;

  std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

}  // namespace permorb
