#pragma once
// Probabilistic qudit teleportation over a GQBS resource. Alice dilutes her
// input qudit and her half of the resource into L = N/2 copies each,
// interferes them pairwise on balanced beam splitters and counts photons in
// all N output modes. Success means exactly one empty mode; Bob then applies
// a rotation correction determined by which mode was empty.
//
// Conditional Bob states are tracked per residue class of the total measured
// photon number modulo N: each photon-count projection contributes a phase
// e^{−i2πl·n_tot/N}, so the conditional state is pure within a residue class
// and reproduces the input exactly in the class n_tot ≡ q (mod N).

#include <cstdint>
#include <random>
#include <utility>

#include "circlecat/gqbs.hpp"

namespace circlecat {

// Coefficients Q_l of the input qudit Σ_l Q_l|α_l⟩ in the (non-orthogonal)
// coherent basis.
struct QuditCoeffs {
  std::vector<Complex> coeffs;
};

// Coarse-grained Bell-measurement result: which output mode was empty, or
// failure (two or more empty modes).
struct OutcomeClass {
  enum class Kind { EmptyG, EmptyH, Failure };
  Kind kind = Kind::Failure;
  long j = 0;  // mode index 0..L−1 for EmptyG/EmptyH

  static OutcomeClass empty_g(long j) { return {Kind::EmptyG, j}; }
  static OutcomeClass empty_h(long j) { return {Kind::EmptyH, j}; }
  static OutcomeClass failure() { return {Kind::Failure, 0}; }
};

struct ResidueEntry {
  Real probability = 0;
  Real fidelity = 0;  // corrected pure-state fidelity with the input
};

struct ClassReport {
  OutcomeClass cls;
  Real probability = 0;
  Real coarse_fidelity = 0;             // mixed-state fidelity over residues
  std::vector<ResidueEntry> residues;   // indexed by residue c = 0..N−1
};

struct TeleportReport {
  int n = 0;
  long q = 0, p = 0;
  std::vector<ClassReport> classes;  // EmptyG 0..L−1 then EmptyH 0..L−1
  Real failure_probability = 0;
  Real success_probability = 0;
};

// Coarse-grained conditional Bob state of one success class: coefficients
// R_{ll'} on the dyads |α_{l+shift}⟩⟨α_{l'+shift}|, trace-normalized.
struct BobCoarseDensity {
  int n = 0;
  long shift = 0;                 // uncorrected index offset of the dyad basis
  std::vector<Complex> coeffs;    // N×N row-major
  Complex at(long l, long lp) const { return coeffs[l * n + lp]; }
};

// Scale the coefficients so Σ Q_l|α_l⟩ has unit norm under the Gram metric.
QuditCoeffs normalize_input(const CircleConfig& cfg, const QuditCoeffs& raw);

// The single-mode state Σ_l Q_l|α_l⟩.
CoherentSum input_state(const CircleConfig& cfg, const QuditCoeffs& input);

// Full pre-measurement state, modes ordered B, G_0..L−1, H_0..L−1. Built
// compositionally: resource ⊗ input, dilution of both Alice modes, the
// U_N^k phases, then L balanced beam splitters.
CoherentSum joint_state(const CircleConfig& cfg, const QuditCoeffs& input,
                        long q, long p);

// Probability of a single-empty-mode class (vacuum at the empty mode,
// nonvacuum elsewhere); the Failure class returns the complement of the N
// single-empty classes.
Real class_probability(const CircleConfig& cfg, const QuditCoeffs& input,
                       long q, long p, const OutcomeClass& cls);

// Closed-form success probability for a basis-state input over the optimal
// (q=0, p=0) resource: (1/(N·g̃₁(0))) ∏_{l=1}^{N−1}(1 − e^{−|α₀−α_l|²/N}).
Real success_probability_closed(const CircleConfig& cfg);

// The same product without the GQBS normalization factor (the entangled
// Kerr-state variant of the protocol).
Real success_probability_vanenk(const CircleConfig& cfg);

// Bob's rotation power for a success class: EmptyH(k) → k−p−L,
// EmptyG(j) → j−p (both mod N).
long correction_power(const OutcomeClass& cls, long p, long half_n);

// Conditional Bob state given the class and total measured photon number
// ≡ residue (mod N): (probability, normalized pure state). The state equals
// Σ_l Q_l e^{i2π(q−c)l/N}|α_l⟩ up to global phase once corrected.
std::pair<Real, CoherentSum> bob_state_residue(const CircleConfig& cfg,
                                               const QuditCoeffs& input,
                                               long q, long p,
                                               const OutcomeClass& cls,
                                               long residue);

// Mixture over all residues of a class, computed from the per-mode
// photon-count kernels e^{−|γ_j|²}(exp(|γ_j|²e^{−i2πd/N}) − 1).
BobCoarseDensity bob_density_coarse(const CircleConfig& cfg,
                                    const QuditCoeffs& input, long q, long p,
                                    const OutcomeClass& cls);

// All N success classes with residue-resolved probabilities and corrected
// fidelities, the coarse mixed-state fidelities, and the failure weight.
TeleportReport teleport_report(const CircleConfig& cfg, const QuditCoeffs& input,
                               long q, long p);

struct SampledOutcome {
  OutcomeClass cls;
  long residue = -1;  // −1 for failure
};

// Deterministic seeded sampler over the exact (class, residue) distribution
// of a report. Each sampler owns its generator; draws are reproducible.
class OutcomeSampler {
 public:
  OutcomeSampler(const TeleportReport& report, std::uint64_t seed);
  SampledOutcome draw();

 private:
  std::vector<std::pair<SampledOutcome, Real>> items_;
  std::mt19937_64 rng_;
};

// First draw of a fresh sampler.
SampledOutcome sample_outcome_class(const TeleportReport& report, std::uint64_t seed);

}  // namespace circlecat
