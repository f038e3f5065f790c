#include "tcd/markov.hpp"

#include <mpfr.h>

#include <algorithm>

#include "tcd/errors.hpp"

namespace tcd {

void FiniteChain::validate() const {
  const std::size_t m = size();
  if (m == 0) throw InputError("empty chain");
  if (sigma.size() != m) throw InputError("sigma dimension mismatch");
  Rat s_total = 0;
  for (const Rat& s : sigma) {
    if (s < 0) throw InputError("negative stationary mass");
    s_total += s;
  }
  if (s_total != 1) throw InputError("stationary distribution does not sum to 1");
  for (const auto& row : p) {
    if (row.size() != m) throw InputError("transition matrix is not square");
    Rat total = 0;
    for (const Rat& q : row) {
      if (q < 0) throw InputError("negative transition probability");
      total += q;
    }
    if (total != 1) throw InputError("transition row does not sum to 1");
  }
  for (std::size_t j = 0; j < m; ++j) {
    Rat dot = 0;
    for (std::size_t i = 0; i < m; ++i) dot += sigma[i] * p[i][j];
    if (dot != sigma[j]) throw InputError("sigma is not stationary");
  }
}

bool FiniteChain::strictly_positive() const {
  for (const auto& row : p)
    for (const Rat& q : row)
      if (q <= 0) return false;
  return std::all_of(sigma.begin(), sigma.end(), [](const Rat& s) { return s > 0; });
}

FiniteChain chain_from_digraph(const CompatibilityDigraph& dg) {
  auto r = dg.uniform_out_degree();
  if (!r || *r == 0) throw InputError("digraph is not out-regular");
  if (!dg.in_regular(*r)) throw InputError("digraph is not in-regular");
  const std::size_t m = dg.succ.size();
  FiniteChain c;
  c.p.assign(m, std::vector<Rat>(m, Rat(0)));
  const Rat step(1, static_cast<unsigned long>(*r));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j : dg.succ[i]) c.p[i][j] = step;
  c.sigma.assign(m, Rat(1, static_cast<unsigned long>(m)));
  c.validate();
  return c;
}

FiniteChain chain_from_matrix(std::vector<std::vector<Rat>> p) {
  const std::size_t m = p.size();
  if (m == 0) throw InputError("empty chain");
  for (auto& row : p) {
    if (row.size() != m) throw InputError("transition matrix is not square");
    Rat total = 0;
    for (auto& q : row) {
      if (q < 0) throw InputError("negative transition probability");
      total += q;
    }
    if (total != 1) throw InputError("transition row does not sum to 1");
  }
  // Solve sigma (P - I) = 0 with sum(sigma) = 1: build (P^T - I) rows,
  // replace the last equation by the normalization, exact Gauss.
  std::vector<std::vector<Rat>> a(m, std::vector<Rat>(m + 1, Rat(0)));
  for (std::size_t i = 0; i + 1 < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) a[i][j] = p[j][i] - (i == j ? 1 : 0);
    a[i][m] = 0;
  }
  for (std::size_t j = 0; j < m; ++j) a[m - 1][j] = 1;
  a[m - 1][m] = 1;

  for (std::size_t col = 0, row = 0; col < m && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[row]);
    const Rat inv = 1 / a[row][col];
    for (std::size_t j = col; j <= m; ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rat f = a[i][col];
      for (std::size_t j = col; j <= m; ++j) a[i][j] -= f * a[row][j];
    }
    ++row;
  }
  // After full elimination the system must be identity-like; read solution.
  std::vector<Rat> sigma(m, Rat(0));
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t lead = m + 1;
    for (std::size_t j = 0; j < m; ++j)
      if (a[i][j] != 0) {
        lead = j;
        break;
      }
    if (lead == m + 1) {
      if (a[i][m] != 0) throw InputError("no stationary distribution (inconsistent system)");
      continue;
    }
    sigma[lead] = a[i][m];
  }
  FiniteChain c{std::move(p), std::move(sigma)};
  c.validate();
  return c;
}

static std::vector<std::vector<Rat>> mat_mul(const std::vector<std::vector<Rat>>& a,
                                             const std::vector<std::vector<Rat>>& b) {
  const std::size_t m = a.size();
  std::vector<std::vector<Rat>> c(m, std::vector<Rat>(m, Rat(0)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t l = 0; l < m; ++l) {
      if (a[i][l] == 0) continue;
      const Rat& f = a[i][l];
      for (std::size_t j = 0; j < m; ++j)
        if (b[l][j] != 0) c[i][j] += f * b[l][j];
    }
  return c;
}

FiniteChain block_chain(const FiniteChain& c, unsigned step) {
  if (step < 1) throw InputError("block step must be >= 1");
  std::vector<std::vector<Rat>> out = c.p;
  for (unsigned s = 1; s < step; ++s) out = mat_mul(out, c.p);
  FiniteChain b{std::move(out), c.sigma};
  b.validate();
  return b;
}

std::optional<MixingParams> mixing_params(const FiniteChain& c) {
  if (!c.strictly_positive()) return std::nullopt;
  Rat pmin = c.p[0][0], pmax = c.p[0][0];
  for (const auto& row : c.p)
    for (const Rat& q : row) {
      pmin = std::min(pmin, q);
      pmax = std::max(pmax, q);
    }
  Rat smin = c.sigma[0], smax = c.sigma[0];
  for (const Rat& s : c.sigma) {
    smin = std::min(smin, s);
    smax = std::max(smax, s);
  }
  return MixingParams{pmin / smax, pmax / smin};
}

long mixing_threshold(const MixingParams& mp) {
  // t_min = ceil(2 + 2 ln(beta) / alpha), every step rounded upward.
  mpfr_t beta, lnb, inv_alpha, t;
  mpfr_inits2(128, beta, lnb, inv_alpha, t, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_q(beta, mp.beta.get_mpq_t(), MPFR_RNDU);
  mpfr_log(lnb, beta, MPFR_RNDU);
  // 1/alpha rounded up: numerator/denominator with directed rounding.
  mpfr_t a;
  mpfr_init2(a, 128);
  mpfr_set_q(a, mp.alpha.get_mpq_t(), MPFR_RNDD);  // alpha rounded down
  mpfr_ui_div(inv_alpha, 1, a, MPFR_RNDU);
  mpfr_mul(t, lnb, inv_alpha, MPFR_RNDU);
  mpfr_mul_ui(t, t, 2, MPFR_RNDU);
  mpfr_add_ui(t, t, 2, MPFR_RNDU);
  mpfr_ceil(t, t);
  long out = mpfr_get_si(t, MPFR_RNDU);
  mpfr_clears(beta, lnb, inv_alpha, t, a, static_cast<mpfr_ptr>(nullptr));
  return out;
}

MixingReport verify_mixing(const FiniteChain& c, unsigned t) {
  if (t < 1) throw InputError("verify_mixing needs t >= 1");
  MixingReport rep;
  auto mp = mixing_params(c);
  if (!mp) return rep;  // inapplicable: report stays all-default
  rep.applicable = true;
  rep.alpha = mp->alpha;
  rep.beta = mp->beta;
  rep.t_min = mixing_threshold(*mp);
  rep.t = t;

  const std::size_t m = c.size();
  const Rat decay = Rat(1) - rep.alpha / 2;
  std::vector<std::vector<Rat>> pow = c.p;
  Rat bound = decay;
  for (unsigned s = 1; s <= t; ++s) {
    if (s > 1) {
      pow = mat_mul(pow, c.p);
      bound *= decay;
    }
    Rat worst = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        Rat dev = abs(Rat(pow[i][j] - c.sigma[j]));
        // ratio against bound * sigma_j ; sigma_j > 0 because params exist
        Rat ratio = dev / (bound * c.sigma[j]);
        worst = std::max(worst, ratio);
      }
    rep.worst_ratio_by_t.push_back(worst);
  }
  rep.worst_ratio = rep.worst_ratio_by_t.back();
  rep.pass = rep.worst_ratio <= 1;
  return rep;
}

Rat predicted_exactness(const Rat& alpha, unsigned ell0, unsigned ell) {
  if (ell0 < 1) throw InputError("base length must be >= 1");
  Rat base = Rat(1) - alpha / Rat(3 * static_cast<unsigned long>(ell0));
  return rat_pow(base, ell);
}

}  // namespace tcd
