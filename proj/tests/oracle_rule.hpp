#pragma once

#include "nroots/neumann.hpp"

namespace testing {

/// Feasibility from the partial-fraction weights
/// q_j^2 = eps_j prod_r (a_j - l_r) / prod_{k != j} (a_j - a_k);
/// each sign depends only on how many l and a lie above a_j.
inline bool closed_form_feasible(const nroots::NeumannCase& c) {
  const unsigned n = c.n();
  const auto eps = nroots::epsilon_vector(c.subset);
  for (unsigned j = 1; j <= n + 1; ++j) {
    unsigned above_l = 0;
    for (unsigned t : c.placement.intervals())
      if (t >= j) ++above_l;
    const unsigned above_a = n + 1 - j;
    const int sign = eps[j - 1] * (((above_l + above_a) % 2) ? -1 : 1);
    if (sign < 0) return false;
  }
  return true;
}

}  // namespace testing
