#include "circlecat/teleport.hpp"

#include <algorithm>
#include <cmath>

namespace circlecat {

namespace {

void require_even(const CircleConfig& cfg) {
  if (cfg.n % 2 != 0)
    throw ContractError("teleport: protocol requires an even number of components N = 2L");
}

void require_normalized(const CircleConfig& cfg, const QuditCoeffs& input) {
  if (static_cast<long>(input.coeffs.size()) != cfg.n)
    throw ContractError("teleport: input needs exactly N coefficients");
  Complex n2{};
  for (long l = 0; l < cfg.n; ++l)
    for (long lp = 0; lp < cfg.n; ++lp)
      n2 += std::conj(input.coeffs[l]) * input.coeffs[lp] * gram_g(cfg, l - lp);
  if (std::abs(n2 - Complex{1.0L, 0.0L}) > 1e-8L)
    throw ContractError("teleport: input is not Gram-normalized; call normalize_input");
}

// One surviving (m,l) term of the post-measurement sum for a given success
// class: the empty mode pins m as a function of l.
struct Survivor {
  Complex coeff;                 // Q_l · e^{i2πqm/N} / (N√g̃₁(q))
  Complex bob;                   // α_{m+p}
  std::vector<Complex> measured; // G_0..L−1 then H_0..L−1
};

long empty_measured_index(const OutcomeClass& cls, long half_n) {
  return cls.kind == OutcomeClass::Kind::EmptyG ? cls.j : half_n + cls.j;
}

std::vector<Survivor> survivors(const CircleConfig& cfg, const QuditCoeffs& input,
                                long q, long p, const OutcomeClass& cls) {
  if (cls.kind == OutcomeClass::Kind::Failure)
    throw ContractError("teleport: no conditional state for the failure class");
  const long half_n = cfg.n / 2;
  if (cls.j < 0 || cls.j >= half_n)
    throw ContractError("teleport: class mode index out of range");
  const Real scale = 1.0L / (static_cast<Real>(cfg.n) * std::sqrt(g1_tilde(cfg, q)));
  const Real inv_sqrt_n = 1.0L / std::sqrt(static_cast<Real>(cfg.n));
  std::vector<Survivor> out;
  for (long l = 0; l < cfg.n; ++l) {
    // empty G_j needs α_l = α_{m+j}; empty H_k needs α_l = −α_{m+k}
    const long m = cls.kind == OutcomeClass::Kind::EmptyG
                       ? mod_n(l - cls.j, cfg.n)
                       : mod_n(l + half_n - cls.j, cfg.n);
    Survivor s;
    s.coeff = input.coeffs[l] * scale *
              cis(2 * kPi * static_cast<Real>(mod_n(q, cfg.n) * m) /
                  static_cast<Real>(cfg.n));
    s.bob = cfg.point(m + p);
    for (long i = 0; i < half_n; ++i)
      s.measured.push_back((cfg.point(l) - cfg.point(m + i)) * inv_sqrt_n);
    for (long i = 0; i < half_n; ++i)
      s.measured.push_back((cfg.point(l) + cfg.point(m + i)) * inv_sqrt_n);
    out.push_back(std::move(s));
  }
  return out;
}

// Σ_{l,l'} of the class expectation with an extra phase ω^{t·n} attached to
// every measured photon; t = 0 recovers the plain class probability.
Complex phased_class_sum(const CircleConfig& cfg, const std::vector<Survivor>& surv,
                         long empty_idx, long t) {
  const Complex omega_t = cis(2 * kPi * static_cast<Real>(t) / static_cast<Real>(cfg.n));
  Complex acc{};
  for (const auto& bra : surv) {
    for (const auto& ket : surv) {
      Complex prod = std::conj(bra.coeff) * ket.coeff * overlap(bra.bob, ket.bob);
      for (long i = 0; i < static_cast<long>(bra.measured.size()); ++i) {
        const Complex a = bra.measured[i], b = ket.measured[i];
        const Real vac = std::exp(-(std::norm(a) + std::norm(b)) / 2);
        if (i == empty_idx) {
          prod *= vac;
        } else {
          prod *= vac * (std::exp(std::conj(a) * b * omega_t) - Complex{1.0L, 0.0L});
        }
      }
      acc += prod;
    }
  }
  return acc;
}

ModePattern class_pattern(long n, long empty_idx) {
  ModePattern pat(1 + n, ModeSelector::non_vacuum());
  pat[0] = ModeSelector::identity();
  pat[1 + empty_idx] = ModeSelector::vacuum();
  return pat;
}

Real pure_fidelity(const CoherentSum& a, const CoherentSum& b) {
  Complex ip = inner(a, b);
  return std::norm(ip);
}

}  // namespace

QuditCoeffs normalize_input(const CircleConfig& cfg, const QuditCoeffs& raw) {
  if (static_cast<long>(raw.coeffs.size()) != cfg.n)
    throw ContractError("normalize_input: need exactly N coefficients");
  Complex n2{};
  for (long l = 0; l < cfg.n; ++l)
    for (long lp = 0; lp < cfg.n; ++lp)
      n2 += std::conj(raw.coeffs[l]) * raw.coeffs[lp] * gram_g(cfg, l - lp);
  if (std::abs(n2.imag()) >= kRealityTol)
    throw InvariantError("normalize_input: Gram norm² not real");
  if (n2.real() <= 1e-12L)
    throw ContractError("normalize_input: degenerate (near-null) input state");
  const Real inv = 1.0L / std::sqrt(n2.real());
  QuditCoeffs out = raw;
  for (auto& c : out.coeffs) c *= inv;
  return out;
}

CoherentSum input_state(const CircleConfig& cfg, const QuditCoeffs& input) {
  if (static_cast<long>(input.coeffs.size()) != cfg.n)
    throw ContractError("input_state: need exactly N coefficients");
  std::vector<CoherentTerm> terms;
  for (long l = 0; l < cfg.n; ++l)
    terms.push_back({input.coeffs[l], {cfg.point(l)}});
  return CoherentSum(1, std::move(terms));
}

CoherentSum joint_state(const CircleConfig& cfg, const QuditCoeffs& input,
                        long q, long p) {
  require_even(cfg);
  require_normalized(cfg, input);
  const long half_n = cfg.n / 2;
  // resource modes A=0, B=1; input mode C=2
  CoherentSum s = tensor(gqbs_state(cfg, q, p), input_state(cfg, input));
  s = dilute(s, 2, half_n);  // A, B, C_0..C_{L−1}
  s = dilute(s, 0, half_n);  // A_0..A_{L−1}, B, C_0..C_{L−1}
  for (long k = 0; k < half_n; ++k) s = apply_rotation(s, k, cfg.n, k);
  // (C_k, A_k) → difference at the C_k slot (G_k), sum at the A_k slot (H_k)
  for (long k = 0; k < half_n; ++k)
    s = beam_split_50(s, half_n + 1 + k, k);
  std::vector<std::size_t> order;
  order.push_back(half_n);  // B
  for (long k = 0; k < half_n; ++k) order.push_back(half_n + 1 + k);  // G_k
  for (long k = 0; k < half_n; ++k) order.push_back(k);               // H_k
  return reorder_modes(s, order);
}

Real class_probability(const CircleConfig& cfg, const QuditCoeffs& input,
                       long q, long p, const OutcomeClass& cls) {
  require_even(cfg);
  const long half_n = cfg.n / 2;
  CoherentSum joint = joint_state(cfg, input, q, p);
  if (cls.kind == OutcomeClass::Kind::Failure) {
    Real total = 0;
    for (long j = 0; j < half_n; ++j) {
      total += pattern_expectation(joint, class_pattern(cfg.n, j));
      total += pattern_expectation(joint, class_pattern(cfg.n, half_n + j));
    }
    return std::max(1.0L - total, 0.0L);
  }
  if (cls.j < 0 || cls.j >= half_n)
    throw ContractError("class_probability: class mode index out of range");
  return pattern_expectation(joint, class_pattern(cfg.n, empty_measured_index(cls, half_n)));
}

Real success_probability_vanenk(const CircleConfig& cfg) {
  require_even(cfg);
  Real prod = 1;
  for (long l = 1; l < cfg.n; ++l) {
    const Real d2 = std::norm(cfg.alpha0 - cfg.point(l));
    prod *= 1.0L - std::exp(-d2 / static_cast<Real>(cfg.n));
  }
  return prod;
}

Real success_probability_closed(const CircleConfig& cfg) {
  return success_probability_vanenk(cfg) /
         (static_cast<Real>(cfg.n) * g1_tilde(cfg, 0));
}

long correction_power(const OutcomeClass& cls, long p, long half_n) {
  const long n = 2 * half_n;
  switch (cls.kind) {
    case OutcomeClass::Kind::EmptyH:
      return mod_n(cls.j - p - half_n, n);
    case OutcomeClass::Kind::EmptyG:
      return mod_n(cls.j - p, n);
    default:
      throw ContractError("correction_power: failure class has no correction");
  }
}

std::pair<Real, CoherentSum> bob_state_residue(const CircleConfig& cfg,
                                               const QuditCoeffs& input,
                                               long q, long p,
                                               const OutcomeClass& cls,
                                               long residue) {
  require_even(cfg);
  require_normalized(cfg, input);
  const long half_n = cfg.n / 2;
  const long c = mod_n(residue, cfg.n);
  auto surv = survivors(cfg, input, q, p, cls);
  const long empty_idx = empty_measured_index(cls, half_n);

  // roots-of-unity filter over the total measured photon number
  Complex prob{};
  for (long t = 0; t < cfg.n; ++t) {
    prob += phased_class_sum(cfg, surv, empty_idx, t) *
            cis(-2 * kPi * static_cast<Real>(c * t) / static_cast<Real>(cfg.n));
  }
  prob /= static_cast<Real>(cfg.n);
  if (std::abs(prob.imag()) >= kRealityTol)
    throw InvariantError("bob_state_residue: residue probability not real");
  const Real probability = std::max(prob.real(), 0.0L);

  // every outcome in the residue class projects onto the same pure state
  std::vector<CoherentTerm> terms;
  for (long l = 0; l < cfg.n; ++l) {
    terms.push_back({surv[l].coeff * cis(-2 * kPi * static_cast<Real>(l * c) /
                                         static_cast<Real>(cfg.n)),
                     {surv[l].bob}});
  }
  CoherentSum state(1, std::move(terms));
  return {probability, normalized(state)};
}

BobCoarseDensity bob_density_coarse(const CircleConfig& cfg,
                                    const QuditCoeffs& input, long q, long p,
                                    const OutcomeClass& cls) {
  require_even(cfg);
  require_normalized(cfg, input);
  const long half_n = cfg.n / 2;
  auto surv = survivors(cfg, input, q, p, cls);
  const long empty_idx = empty_measured_index(cls, half_n);

  BobCoarseDensity out;
  out.n = cfg.n;
  // bob amplitude of survivor l is α_{l+shift}
  out.shift = cls.kind == OutcomeClass::Kind::EmptyG ? mod_n(p - cls.j, cfg.n)
                                                     : mod_n(half_n - cls.j + p, cfg.n);
  out.coeffs.assign(cfg.n * cfg.n, Complex{});
  Complex trace{};
  for (long l = 0; l < cfg.n; ++l) {
    for (long lp = 0; lp < cfg.n; ++lp) {
      // ket survivor l, bra survivor l'; summing n_j ≥ 1 per non-empty mode
      Complex r = surv[l].coeff * std::conj(surv[lp].coeff);
      for (long i = 0; i < cfg.n; ++i) {
        if (i == empty_idx) continue;
        const Complex a = surv[lp].measured[i], b = surv[l].measured[i];
        const Real vac = std::exp(-(std::norm(a) + std::norm(b)) / 2);
        r *= vac * (std::exp(std::conj(a) * b) - Complex{1.0L, 0.0L});
      }
      out.coeffs[l * cfg.n + lp] = r;
      trace += r * gram_g(cfg, lp - l);  // ⟨α_{l'+s}|α_{l+s}⟩ = g(l'−l)
    }
  }
  if (std::abs(trace.imag()) >= kRealityTol)
    throw InvariantError("bob_density_coarse: trace not real");
  if (trace.real() <= 0)
    throw InvariantError("bob_density_coarse: non-positive trace");
  for (auto& c : out.coeffs) c /= trace.real();
  return out;
}

namespace {

// ⟨ψ_in|ρ|ψ_in⟩ after the class correction, which re-indexes the dyads to
// |α_l⟩⟨α_{l'}|.
Real coarse_fidelity(const CircleConfig& cfg, const QuditCoeffs& input,
                     const BobCoarseDensity& rho) {
  std::vector<Complex> v(cfg.n);  // v_l = ⟨ψ_in|α_l⟩
  for (long l = 0; l < cfg.n; ++l)
    for (long j = 0; j < cfg.n; ++j)
      v[l] += std::conj(input.coeffs[j]) * gram_g(cfg, j - l);
  Complex f{};
  for (long l = 0; l < cfg.n; ++l)
    for (long lp = 0; lp < cfg.n; ++lp)
      f += rho.at(l, lp) * v[l] * std::conj(v[lp]);
  if (std::abs(f.imag()) >= kRealityTol)
    throw InvariantError("coarse fidelity not real");
  return std::clamp(f.real(), 0.0L, 1.0L + 1e-12L);
}

}  // namespace

TeleportReport teleport_report(const CircleConfig& cfg, const QuditCoeffs& input,
                               long q, long p) {
  require_even(cfg);
  require_normalized(cfg, input);
  const long half_n = cfg.n / 2;
  CoherentSum psi_in = input_state(cfg, input);

  TeleportReport report;
  report.n = cfg.n;
  report.q = mod_n(q, cfg.n);
  report.p = mod_n(p, cfg.n);

  std::vector<OutcomeClass> classes;
  for (long j = 0; j < half_n; ++j) classes.push_back(OutcomeClass::empty_g(j));
  for (long j = 0; j < half_n; ++j) classes.push_back(OutcomeClass::empty_h(j));

  Real total = 0;
  for (const auto& cls : classes) {
    ClassReport cr;
    cr.cls = cls;
    cr.probability = class_probability(cfg, input, q, p, cls);
    const long power = correction_power(cls, p, half_n);
    Real residue_sum = 0;
    for (long c = 0; c < cfg.n; ++c) {
      auto [prob, state] = bob_state_residue(cfg, input, q, p, cls, c);
      ResidueEntry e;
      e.probability = prob;
      e.fidelity = pure_fidelity(psi_in, apply_rotation(state, 0, cfg.n, power));
      if (e.fidelity > 1.0L + 1e-12L)
        throw InvariantError("teleport_report: fidelity above 1");
      residue_sum += prob;
      cr.residues.push_back(e);
    }
    if (std::abs(residue_sum - cr.probability) >= 1e-10L)
      throw InvariantError("teleport_report: residue probabilities do not sum to the class probability");
    cr.coarse_fidelity = coarse_fidelity(cfg, input, bob_density_coarse(cfg, input, q, p, cls));
    total += cr.probability;
    report.classes.push_back(std::move(cr));
  }
  report.success_probability = total;
  report.failure_probability = std::max(1.0L - total, 0.0L);
  if (std::abs(report.success_probability + report.failure_probability - 1.0L) >= 1e-10L)
    throw InvariantError("teleport_report: probabilities do not sum to 1");
  return report;
}

OutcomeSampler::OutcomeSampler(const TeleportReport& report, std::uint64_t seed)
    : rng_(seed) {
  for (const auto& cr : report.classes)
    for (long c = 0; c < report.n; ++c)
      items_.push_back({{cr.cls, c}, cr.residues[c].probability});
  items_.push_back({{OutcomeClass::failure(), -1}, report.failure_probability});
}

SampledOutcome OutcomeSampler::draw() {
  // fixed 53-bit uniform, independent of the standard library's
  // distribution implementation
  const Real u = static_cast<Real>(rng_() >> 11) * 0x1.0p-53L;
  Real cum = 0;
  for (const auto& [outcome, prob] : items_) {
    cum += prob;
    if (u < cum) return outcome;
  }
  return items_.back().first;
}

SampledOutcome sample_outcome_class(const TeleportReport& report, std::uint64_t seed) {
  return OutcomeSampler(report, seed).draw();
}

}  // namespace circlecat
