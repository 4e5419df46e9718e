#pragma once
// Truncated photon-number representations. This is the independent oracle
// for the analytic Gram path: states are expanded in the Fock basis at a
// tail-bounded cutoff and inner products / Schmidt spectra are recomputed
// from scratch there.

#include <vector>

#include "circlecat/coherent.hpp"

namespace circlecat {

struct FockVector {
  long cutoff = 0;                // highest photon number kept
  std::vector<Complex> coeffs;    // size cutoff+1, index = photon number
};

struct TwoModeFockMatrix {
  long cutoff = 0;
  std::vector<Complex> coeffs;    // (cutoff+1)² row-major, (n_A, n_B)

  Complex at(long na, long nb) const { return coeffs[na * (cutoff + 1) + nb]; }
};

// Smallest M with Poisson(|α|²) tail beyond M below eps (direct summation).
long cutoff_for(Real alpha_abs, Real eps);

// Fock expansion of a single-mode superposition.
FockVector to_fock(const CoherentSum& s, long cutoff);

// Fock expansion of a two-mode superposition.
TwoModeFockMatrix to_fock_two_mode(const CoherentSum& s, long cutoff);

Complex inner(const FockVector& x, const FockVector& y);

// Squared singular values of the truncated two-mode amplitude matrix,
// sorted descending, trimmed of entries below 1e−14. These are the Schmidt
// coefficients of the bipartite state.
std::vector<Real> schmidt_via_svd(const CoherentSum& s, long cutoff);

// Shannon entropy −Σ v log₂ v in bits, with 0·log0 := 0. The spectrum must
// sum to 1 within 1e−6 and is renormalized internally.
Real entropy_of_spectrum(std::span<const Real> vals);

}  // namespace circlecat
