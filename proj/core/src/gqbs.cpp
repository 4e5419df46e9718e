#include "circlecat/gqbs.hpp"

#include <cmath>

namespace circlecat {

Real g1_tilde(const CircleConfig& cfg, long q) {
  q = mod_n(q, cfg.n);
  Real conv = 0;
  for (long k = 0; k < cfg.n; ++k)
    conv += gram_g_tilde(cfg, k) * gram_g_tilde(cfg, q - k);
  // DFT route: (1/N)Σ_m g²(m)e^{−i2πqm/N}
  Complex dft{};
  for (long m = 0; m < cfg.n; ++m) {
    Complex g = gram_g(cfg, m);
    dft += g * g * cis(-2 * kPi * static_cast<Real>(q * m) / static_cast<Real>(cfg.n));
  }
  dft /= static_cast<Real>(cfg.n);
  if (std::abs(dft.imag()) >= 1e-12L || std::abs(dft.real() - conv) >= 1e-12L)
    throw InvariantError("g1_tilde: convolution and DFT routes disagree");
  return conv;
}

SchmidtSpectrum schmidt_coeffs(const CircleConfig& cfg, long q) {
  q = mod_n(q, cfg.n);
  const Real g1 = g1_tilde(cfg, q);
  SchmidtSpectrum out;
  out.q = q;
  Real sum = 0;
  for (long k = 0; k < cfg.n; ++k) {
    Real lam = gram_g_tilde(cfg, k) * gram_g_tilde(cfg, q - k) / g1;
    out.lambdas.push_back(lam);
    sum += lam;
    if (lam > 0) out.entropy -= lam * std::log2(lam);
  }
  if (std::abs(sum - 1.0L) >= 1e-12L)
    throw InvariantError("schmidt_coeffs: Σλ != 1");
  if (out.entropy < 0 || out.entropy > std::log2(static_cast<Real>(cfg.n)) + 1e-12L)
    throw InvariantError("schmidt_coeffs: entropy outside [0, log2 N]");
  return out;
}

Real entanglement(const CircleConfig& cfg, long q) {
  return schmidt_coeffs(cfg, q).entropy;
}

CoherentSum gqbs_state(const CircleConfig& cfg, long q, long p) {
  q = mod_n(q, cfg.n);
  p = mod_n(p, cfg.n);
  const Real scale = 1.0L / (static_cast<Real>(cfg.n) * std::sqrt(g1_tilde(cfg, q)));
  std::vector<CoherentTerm> terms;
  for (long m = 0; m < cfg.n; ++m) {
    terms.push_back({scale * cis(2 * kPi * static_cast<Real>(q * m) /
                                 static_cast<Real>(cfg.n)),
                     {cfg.point(m), cfg.point(m + p)}});
  }
  return CoherentSum(2, std::move(terms));
}

CoherentSum gqbs_schmidt_form(const CircleConfig& cfg, long q, long p) {
  q = mod_n(q, cfg.n);
  p = mod_n(p, cfg.n);
  SchmidtSpectrum spec = schmidt_coeffs(cfg, q);
  CoherentSum acc = CoherentSum::zero(2);
  for (long k = 0; k < cfg.n; ++k) {
    Complex w = std::sqrt(spec.lambdas[k]) *
                cis(-2 * kPi * static_cast<Real>(mod_n(q - k, cfg.n) * p) /
                    static_cast<Real>(cfg.n));
    acc = acc + tensor(rics(cfg, k), rics(cfg, q - k)) * w;
  }
  return acc;
}

CoherentSum gqbs_via_splitting(const CircleConfig& cfg, long q) {
  CircleConfig doubled(cfg.n, std::sqrt(2.0L) * cfg.alpha0);
  CoherentSum one_mode = rics(doubled, q);
  CoherentSum with_vac = tensor(one_mode, CoherentSum(1, {{Complex{1.0L, 0.0L}, {Complex{}}}}));
  return beam_split_50(with_vac, 0, 1);
}

std::vector<Real> reduced_density_diag(const CircleConfig& cfg, long q) {
  return schmidt_coeffs(cfg, q).lambdas;
}

CoherentSum generalized_bell(const CircleConfig& cfg, long q, long p) {
  q = mod_n(q, cfg.n);
  p = mod_n(p, cfg.n);
  const Real inv_sqrt_n = 1.0L / std::sqrt(static_cast<Real>(cfg.n));
  CoherentSum acc = CoherentSum::zero(2);
  for (long m = 0; m < cfg.n; ++m) {
    Complex w = inv_sqrt_n * cis(2 * kPi * static_cast<Real>(q * m) /
                                 static_cast<Real>(cfg.n));
    acc = acc + tensor(pseudo_phase(cfg, m), pseudo_phase(cfg, m + p)) * w;
  }
  return acc;
}

CoherentSum generalized_bell_rics_form(const CircleConfig& cfg, long q, long p) {
  q = mod_n(q, cfg.n);
  p = mod_n(p, cfg.n);
  const Real inv_sqrt_n = 1.0L / std::sqrt(static_cast<Real>(cfg.n));
  CoherentSum acc = CoherentSum::zero(2);
  for (long k = 0; k < cfg.n; ++k) {
    Complex w = inv_sqrt_n * cis(-2 * kPi * static_cast<Real>(mod_n(q - k, cfg.n) * p) /
                                 static_cast<Real>(cfg.n));
    acc = acc + tensor(rics(cfg, k), rics(cfg, q - k)) * w;
  }
  return acc;
}

}  // namespace circlecat
