#pragma once
// The circular-state family: N coherent states α_m = α₀e^{−i2πm/N} placed
// equidistantly on a circle, their Gram functions g and g̃, the
// rotationally-invariant circular states (RICS) built on them, and the
// pseudo-phase basis obtained by a discrete Fourier transform of the RICS.

#include "circlecat/coherent.hpp"
#include "circlecat/fock.hpp"

namespace circlecat {

struct CircleConfig {
  int n;           // number of components, N ≥ 2
  Complex alpha0;  // nonzero base amplitude

  CircleConfig(int n_components, Complex alpha0_in) : n(n_components), alpha0(alpha0_in) {
    if (n < 2) throw ContractError("CircleConfig: N must be at least 2");
    if (alpha0 == Complex{}) throw ContractError("CircleConfig: alpha0 must be nonzero");
  }

  // α_m = α₀ e^{−i2πm/N}; m taken modulo N
  Complex point(long m) const {
    return alpha0 * cis(-2 * kPi * static_cast<Real>(mod_n(m, n)) / static_cast<Real>(n));
  }
  Real mean_n() const { return std::norm(alpha0); }  // |α₀|²
};

// g(m) = ⟨α₀|α_m⟩ = exp(|α₀|²(e^{i2πm/N} − 1)); depends on |α₀| only.
Complex gram_g(const CircleConfig& cfg, long m);

// g̃(k): DFT of g, equal to the total Poisson(|α₀|²) weight on photon
// numbers ≡ k (mod N). Computed by the series e^{−|α₀|²}Σ_l |α₀|^{2(k+lN)}/(k+lN)!
// and cross-checked against the DFT form on every call.
Real gram_g_tilde(const CircleConfig& cfg, long k);

// (1/N)Σ_m g(m)e^{−i2πkm/N}; exposed for the dual-route tests.
Real gram_g_tilde_dft(const CircleConfig& cfg, long k);

// Precomputed g and g̃ with their structural invariants enforced.
struct GramTables {
  std::vector<Complex> g;
  std::vector<Real> g_tilde;

  static GramTables build(const CircleConfig& cfg);
};

// RICS |c_q⟩ = (1/(N√g̃(q))) Σ_m e^{i2πmq/N}|α_m⟩; unit norm, orthonormal
// across q, eigenstate of U_N with eigenvalue e^{−i2πq/N}.
CoherentSum rics(const CircleConfig& cfg, long q);

// Fock coefficients of |c_q⟩: support on n ≡ q (mod N) with
// coeff(n) = e^{−|α₀|²/2} α₀^n / (√(n!)·√g̃(q)).
FockVector rics_fock_coeffs(const CircleConfig& cfg, long q, long cutoff);

// ⟨c_q|n̂|c_q⟩
Real mean_photon(const CircleConfig& cfg, long q);

// √(1+2⟨n⟩) − 1, the lower bound on the distance from the classical states.
Real nonclassicality_bound(const CircleConfig& cfg, long q);

// Pseudo-phase state |φ_k⟩ = (1/√N)Σ_q e^{−i2πqk/N}|c_q⟩ = Σ_m δ̃_{mk}|α_m⟩.
// Orthonormal, mutually unbiased with the RICS.
CoherentSum pseudo_phase(const CircleConfig& cfg, long k);

// δ̃_{mk} = (1/N^{3/2}) Σ_q e^{i2π(m−k)q/N}/√g̃(q); circulant, → δ_mk at
// high |α₀|.
Complex delta_tilde(const CircleConfig& cfg, long m, long k);

}  // namespace circlecat
