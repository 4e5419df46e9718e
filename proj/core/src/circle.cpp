#include "circlecat/circle.hpp"

#include <cmath>

namespace circlecat {

namespace {

// Poisson-type series Σ_l w(k+lN)·e^{−A}A^{k+lN}/(k+lN)!  with relative
// tail below 1e−16 and a hard cap at A + 40√(A+1) + 40.
template <typename Weight>
Real residue_series(Real mean, long n, long k, Weight w) {
  const long cap = static_cast<long>(mean + 40 * std::sqrt(mean + 1) + 40) + n;
  Real sum = 0;
  for (long idx = k; idx <= cap; idx += n) {
    Real term = std::exp(-mean + static_cast<Real>(idx) * std::log(mean) -
                         std::lgamma(static_cast<Real>(idx) + 1));
    sum += w(idx) * term;
    if (static_cast<Real>(idx) > mean && term < 1e-16L * sum) break;
  }
  return sum;
}

}  // namespace

Complex gram_g(const CircleConfig& cfg, long m) {
  const Real mean = cfg.mean_n();
  return std::exp(mean * (cis(2 * kPi * static_cast<Real>(mod_n(m, cfg.n)) /
                              static_cast<Real>(cfg.n)) -
                          Complex{1.0L, 0.0L}));
}

Real gram_g_tilde_dft(const CircleConfig& cfg, long k) {
  k = mod_n(k, cfg.n);
  Complex acc{};
  for (long m = 0; m < cfg.n; ++m)
    acc += gram_g(cfg, m) *
           cis(-2 * kPi * static_cast<Real>(k * m) / static_cast<Real>(cfg.n));
  acc /= static_cast<Real>(cfg.n);
  if (std::abs(acc.imag()) >= 1e-12L)
    throw InvariantError("gram_g_tilde_dft: non-real DFT of a conjugate-symmetric sequence");
  return acc.real();
}

Real gram_g_tilde(const CircleConfig& cfg, long k) {
  k = mod_n(k, cfg.n);
  Real series = residue_series(cfg.mean_n(), cfg.n, k, [](long) { return 1.0L; });
  if (std::abs(series - gram_g_tilde_dft(cfg, k)) >= 1e-12L)
    throw InvariantError("gram_g_tilde: series and DFT routes disagree");
  return series;
}

GramTables GramTables::build(const CircleConfig& cfg) {
  GramTables t;
  Real total = 0;
  for (long m = 0; m < cfg.n; ++m) {
    t.g.push_back(gram_g(cfg, m));
    t.g_tilde.push_back(gram_g_tilde(cfg, m));
    total += t.g_tilde.back();
  }
  if (std::abs(t.g[0] - Complex{1.0L, 0.0L}) >= 1e-14L)
    throw InvariantError("GramTables: g(0) != 1");
  for (long m = 1; m < cfg.n; ++m)
    if (std::abs(t.g[cfg.n - m] - std::conj(t.g[m])) >= 1e-14L)
      throw InvariantError("GramTables: g(N−m) != conj(g(m))");
  if (std::abs(total - 1.0L) >= 1e-12L)
    throw InvariantError("GramTables: Σ g̃(k) != 1");
  return t;
}

CoherentSum rics(const CircleConfig& cfg, long q) {
  q = mod_n(q, cfg.n);
  const Real gt = gram_g_tilde(cfg, q);
  if (gt < 1e-300L)
    throw InvariantError("rics: degenerate weight g̃(q); state numerically void");
  const Real scale = 1.0L / (static_cast<Real>(cfg.n) * std::sqrt(gt));
  std::vector<CoherentTerm> terms;
  for (long m = 0; m < cfg.n; ++m) {
    terms.push_back({scale * cis(2 * kPi * static_cast<Real>(m * q) /
                                 static_cast<Real>(cfg.n)),
                     {cfg.point(m)}});
  }
  return CoherentSum(1, std::move(terms));
}

FockVector rics_fock_coeffs(const CircleConfig& cfg, long q, long cutoff) {
  q = mod_n(q, cfg.n);
  if (cutoff < q) throw ContractError("rics_fock_coeffs: cutoff below q");
  const Real gt = gram_g_tilde(cfg, q);
  if (gt < 1e-300L) throw InvariantError("rics_fock_coeffs: degenerate weight g̃(q)");
  const Real mean = cfg.mean_n();
  const Real mod_alpha = std::abs(cfg.alpha0);
  const Real arg_alpha = std::arg(cfg.alpha0);
  FockVector out;
  out.cutoff = cutoff;
  out.coeffs.assign(cutoff + 1, Complex{});
  for (long n = q; n <= cutoff; n += cfg.n) {
    Real mag = std::exp(-mean / 2 + static_cast<Real>(n) * std::log(mod_alpha) -
                        std::lgamma(static_cast<Real>(n) + 1) / 2) /
               std::sqrt(gt);
    out.coeffs[n] = mag * cis(static_cast<Real>(n) * arg_alpha);
  }
  return out;
}

Real mean_photon(const CircleConfig& cfg, long q) {
  q = mod_n(q, cfg.n);
  const Real gt = gram_g_tilde(cfg, q);
  if (gt < 1e-300L) throw InvariantError("mean_photon: degenerate weight g̃(q)");
  return residue_series(cfg.mean_n(), cfg.n, q,
                        [](long idx) { return static_cast<Real>(idx); }) /
         gt;
}

Real nonclassicality_bound(const CircleConfig& cfg, long q) {
  return std::sqrt(1 + 2 * mean_photon(cfg, q)) - 1;
}

CoherentSum pseudo_phase(const CircleConfig& cfg, long k) {
  k = mod_n(k, cfg.n);
  const Real inv_sqrt_n = 1.0L / std::sqrt(static_cast<Real>(cfg.n));
  CoherentSum acc = CoherentSum::zero(1);
  for (long q = 0; q < cfg.n; ++q) {
    acc = acc + rics(cfg, q) * (inv_sqrt_n * cis(-2 * kPi * static_cast<Real>(q * k) /
                                                 static_cast<Real>(cfg.n)));
  }
  return acc;
}

Complex delta_tilde(const CircleConfig& cfg, long m, long k) {
  const long d = mod_n(m - k, cfg.n);
  Complex acc{};
  for (long q = 0; q < cfg.n; ++q)
    acc += cis(2 * kPi * static_cast<Real>(d * q) / static_cast<Real>(cfg.n)) /
           std::sqrt(gram_g_tilde(cfg, q));
  return acc / std::pow(static_cast<Real>(cfg.n), 1.5L);
}

}  // namespace circlecat
