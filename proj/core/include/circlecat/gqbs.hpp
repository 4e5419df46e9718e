#pragma once
// Generalized quasi-Bell states: two-mode entangled extensions of the
// circular-state family, their Schmidt spectra and entanglement entropy,
// plus the orthonormal generalized Bell states built on the pseudo-phase
// basis.

#include "circlecat/circle.hpp"

namespace circlecat {

struct SchmidtSpectrum {
  long q = 0;
  std::vector<Real> lambdas;  // N entries, nonnegative, sum 1
  Real entropy = 0;           // bits, in [0, log₂N]
};

// g̃₁(q) = Σ_k g̃(k)g̃(q−k), the GQBS normalization weight; cross-checked
// against (1/N)Σ_m g²(m)e^{−i2πqm/N} on every call.
Real g1_tilde(const CircleConfig& cfg, long q);

// λ_k(q) = g̃(k)g̃(q−k)/g̃₁(q) together with their Shannon entropy.
SchmidtSpectrum schmidt_coeffs(const CircleConfig& cfg, long q);

// E(q) = −Σ_k λ_k log₂ λ_k in bits.
Real entanglement(const CircleConfig& cfg, long q);

// |Φ_qp⟩ = (1/(N√g̃₁(q))) Σ_m e^{i2πqm/N}|α_m⟩_A|α_{m+p}⟩_B.
CoherentSum gqbs_state(const CircleConfig& cfg, long q, long p);

// The same state written in the RICS basis:
// Σ_k √λ_k(q) e^{−i2π(q−k)p/N}|c_k⟩_A|c_{q−k}⟩_B. Kept as an independent
// construction route; both are asserted equal in the tests.
CoherentSum gqbs_schmidt_form(const CircleConfig& cfg, long q, long p);

// |Φ_q0⟩ produced physically: the single-mode RICS with parameters
// {N, √2·α₀} on one port of a balanced beam splitter, vacuum on the other.
CoherentSum gqbs_via_splitting(const CircleConfig& cfg, long q);

// Diagonal of the reduced density operator ρ_A(q) in the RICS basis; equal
// to the Schmidt coefficients.
std::vector<Real> reduced_density_diag(const CircleConfig& cfg, long q);

// |Φ̃_qp⟩ = (1/√N)Σ_m e^{i2πqm/N}|φ_m⟩_A|φ_{m+p}⟩_B: maximally entangled,
// orthonormal over all (q,p).
CoherentSum generalized_bell(const CircleConfig& cfg, long q, long p);

// Second printed form (1/√N)Σ_k e^{−i2π(q−k)p/N}|c_k⟩_A|c_{q−k}⟩_B.
CoherentSum generalized_bell_rics_form(const CircleConfig& cfg, long q, long p);

}  // namespace circlecat
