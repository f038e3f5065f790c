#include "tcd/simplex.hpp"

#include <chrono>
#include <stdexcept>

#include "tcd/errors.hpp"

namespace tcd {

Phase1Result phase1_simplex(const std::vector<std::vector<Rat>>& columns,
                            const std::vector<Rat>& rhs, std::int64_t budget_ms) {
  const std::size_t m = rhs.size(), n = columns.size(), total = n + m;
  for (const Rat& b : rhs)
    if (b < 0) throw InputError("phase-1 simplex needs a nonnegative right-hand side");
  for (const auto& col : columns)
    if (col.size() != m) throw InputError("simplex column has wrong height");

  Phase1Result res;
  res.primal.assign(n, Rat(0));
  res.dual.assign(m, Rat(0));
  if (m == 0) {
    res.finished = true;
    res.objective = 0;
    return res;
  }

  // Tableau rows: columns 0..n-1 structural, n..n+m-1 artificial, last = rhs.
  std::vector<std::vector<Rat>> t(m, std::vector<Rat>(total + 1, Rat(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = columns[j][i];
    t[i][n + i] = 1;
    t[i][total] = rhs[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  // Reduced costs for minimize sum(artificials), initial basis = artificials.
  std::vector<Rat> red(total, Rat(0));
  Rat obj(0);
  for (std::size_t i = 0; i < m; ++i) obj += rhs[i];
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) red[j] -= t[i][j];

  const auto start = std::chrono::steady_clock::now();
  auto timed_out = [&] {
    if (budget_ms <= 0) return true;
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start)
               .count() > budget_ms;
  };

  while (true) {
    // Bland: entering = smallest index with negative reduced cost.
    std::size_t enter = total;
    for (std::size_t j = 0; j < total; ++j)
      if (red[j] < 0) {
        enter = j;
        break;
      }
    if (enter == total) {
      res.finished = true;
      break;
    }
    if (timed_out()) break;

    // Ratio test; Bland tie-break by smallest basis index.
    std::size_t leave = m;
    Rat best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][total] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m)
      throw std::logic_error("phase-1 objective is bounded; no leaving row means a broken tableau");

    // Pivot on (leave, enter).
    Rat piv = t[leave][enter];
    for (Rat& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave) continue;
      Rat f = t[i][enter];
      if (f == 0) continue;
      for (std::size_t j = 0; j <= total; ++j)
        if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
    }
    Rat f = red[enter];
    obj += f * t[leave][total];
    for (std::size_t j = 0; j < total; ++j)
      if (t[leave][j] != 0) red[j] -= f * t[leave][j];
    basis[leave] = enter;
    ++res.pivots;
  }

  res.objective = obj;
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) res.primal[basis[i]] = t[i][total];
  // Reduced cost of artificial i is 1 - y_i.
  for (std::size_t i = 0; i < m; ++i) res.dual[i] = Rat(1) - red[n + i];
  return res;
}

}  // namespace tcd
