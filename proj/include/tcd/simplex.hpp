#pragma once

#include <cstdint>
#include <vector>

#include "tcd/rational.hpp"

namespace tcd {

// Phase-1 exact simplex for  A x + a = rhs,  x, a >= 0,  minimizing sum(a),
// with Bland's anti-cycling rule; every entry is an exact rational. rhs must
// be componentwise >= 0 (the artificial basis must be feasible).
struct Phase1Result {
  bool finished = false;    // false: time budget ran out before optimality
  Rat objective;            // at optimum: 0 <=> A x = rhs has a solution x >= 0
  std::vector<Rat> primal;  // structural solution, size = #columns
  std::vector<Rat> dual;    // y = c_B B^{-1} per row; at a positive optimum it
                            // certifies infeasibility: y.A <= 0, y.rhs > 0
  std::size_t pivots = 0;
};

Phase1Result phase1_simplex(const std::vector<std::vector<Rat>>& columns,
                            const std::vector<Rat>& rhs, std::int64_t budget_ms);

}  // namespace tcd
