#pragma once
// Exact algebra of finite superpositions of multimode coherent states.
// Every state in this library is a finite sum Σ_t c_t |β_t0⟩|β_t1⟩…, so all
// bilinear quantities (inner products, photon-count projections) are
// closed-form in the amplitudes; no Fock truncation is involved here.

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace circlecat {

// 80-bit extended precision. Gram expansions of circular states cancel
// O(1/√g̃) intermediates down to O(1), which overruns plain double at the
// tolerances enforced by the test suite.
using Real = long double;
using Complex = std::complex<Real>;

inline constexpr Real kPi = 3.14159265358979323846264338327950288L;
inline constexpr Real kMergeTol = 1e-12L;    // componentwise amplitude equality
inline constexpr Real kRealityTol = 1e-12L;  // |Im| bound for asserted-real results

// Caller broke a precondition.
class ContractError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A numerical invariant failed; the computation aborts rather than
// silently truncating.
class InvariantError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// reduce an index modulo n into 0..n-1
inline long mod_n(long v, long n) {
  long r = v % n;
  return r < 0 ? r + n : r;
}

// e^{i*theta}
inline Complex cis(Real theta) { return {std::cos(theta), std::sin(theta)}; }

// One coherent product term c·|amps[0]⟩|amps[1]⟩…
struct CoherentTerm {
  Complex coeff;
  std::vector<Complex> amps;
};

// Canonical finite superposition of multimode coherent product states.
// Terms are sorted and merged on construction: two terms whose amplitude
// tuples agree componentwise within kMergeTol are one term. The zero state
// is the empty term list. Immutable after construction.
class CoherentSum {
 public:
  CoherentSum(std::size_t modes, std::vector<CoherentTerm> terms,
              Real prune_threshold = 0.0L);

  static CoherentSum zero(std::size_t modes) { return CoherentSum(modes, {}); }

  std::size_t modes() const { return modes_; }
  std::span<const CoherentTerm> terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  CoherentSum operator+(const CoherentSum& other) const;
  CoherentSum operator-(const CoherentSum& other) const;
  CoherentSum operator*(Complex scale) const;

 private:
  std::size_t modes_;
  std::vector<CoherentTerm> terms_;
};

inline CoherentSum operator*(Complex scale, const CoherentSum& s) { return s * scale; }

// ⟨a|b⟩ = exp(−|a|²/2 − |b|²/2 + a*·b)
Complex overlap(Complex a, Complex b);

// ⟨x|y⟩ by Gram expansion over term pairs.
Complex inner(const CoherentSum& x, const CoherentSum& y);

// √⟨x|x⟩; asserts the imaginary part is below kRealityTol.
Real norm(const CoherentSum& x);

// x scaled to unit norm.
CoherentSum normalized(const CoherentSum& x);

// ‖x − y‖, the natural state distance used throughout the tests.
Real distance(const CoherentSum& x, const CoherentSum& y);

// U_N^power on one mode: coherent states map to coherent states with no
// extra phase, the amplitude picks up e^{−i2π·power/n}.
CoherentSum apply_rotation(const CoherentSum& s, std::size_t mode, long n,
                           long power);

// Balanced beam splitter. Amplitudes (a, b) at (mode_in1, mode_in2) become
// ((a−b)/√2, (a+b)/√2): the first output is the difference port, the second
// the sum port. This is the single sign convention used by every caller.
CoherentSum beam_split_50(const CoherentSum& s, std::size_t mode_in1,
                          std::size_t mode_in2);

// Replace `mode` by `copies` modes of amplitude α/√copies. The new modes
// occupy indices mode..mode+copies−1; later modes shift up. Exact image of
// the (copies−1)-splitter cascade, kept as a test oracle.
CoherentSum dilute(const CoherentSum& s, std::size_t mode, std::size_t copies);

// |a⟩⊗|b⟩; modes of b follow the modes of a.
CoherentSum tensor(const CoherentSum& a, const CoherentSum& b);

// New mode i is old mode order[i]; order must be a permutation.
CoherentSum reorder_modes(const CoherentSum& s, std::span<const std::size_t> order);

// Per-mode measurement selector for projector-pattern expectations.
struct ModeSelector {
  enum class Kind { Identity, Vacuum, NonVacuum, ExactCount };
  Kind kind = Kind::Identity;
  long count = 0;  // ExactCount only

  static ModeSelector identity() { return {Kind::Identity, 0}; }
  static ModeSelector vacuum() { return {Kind::Vacuum, 0}; }
  static ModeSelector non_vacuum() { return {Kind::NonVacuum, 0}; }
  static ModeSelector exact_count(long n);
};

using ModePattern = std::vector<ModeSelector>;

// ⟨s| ∏_modes selector |s⟩. Per-mode factors between bra amplitude a and
// ket amplitude b:
//   Identity    ⟨a|b⟩
//   Vacuum      e^{−(|a|²+|b|²)/2}
//   NonVacuum   ⟨a|b⟩ − Vacuum factor
//   ExactCount  Vacuum factor · (a*·b)^n / n!
// The result must be real within kRealityTol and is clamped to [0, 1+1e−12].
Real pattern_expectation(const CoherentSum& s, const ModePattern& pattern);

}  // namespace circlecat
