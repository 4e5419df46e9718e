#include "circlecat/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace circlecat {

namespace {

// Lexicographic comparison of amplitude tuples with a componentwise
// tolerance band. Amplitudes arise from exact roots of unity scaled by a
// common radius, so distinct tuples are well separated and the band never
// straddles a cluster.
int cmp_amps(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].real() < b[i].real() - kMergeTol) return -1;
    if (a[i].real() > b[i].real() + kMergeTol) return 1;
    if (a[i].imag() < b[i].imag() - kMergeTol) return -1;
    if (a[i].imag() > b[i].imag() + kMergeTol) return 1;
  }
  return 0;
}

}  // namespace

CoherentSum::CoherentSum(std::size_t modes, std::vector<CoherentTerm> terms,
                         Real prune_threshold)
    : modes_(modes) {
  for (const auto& t : terms) {
    if (t.amps.size() != modes_)
      throw ContractError("CoherentSum: term amplitude count != mode count");
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const CoherentTerm& a, const CoherentTerm& b) {
                     return cmp_amps(a.amps, b.amps) < 0;
                   });
  for (auto& t : terms) {
    if (!terms_.empty() && cmp_amps(terms_.back().amps, t.amps) == 0) {
      terms_.back().coeff += t.coeff;
    } else {
      terms_.push_back(std::move(t));
    }
  }
  // Exact zeros only; magnitude pruning is opt-in (silent pruning can
  // corrupt post-selection probabilities).
  std::erase_if(terms_, [prune_threshold](const CoherentTerm& t) {
    return t.coeff == Complex{} || std::abs(t.coeff) < prune_threshold;
  });
}

CoherentSum CoherentSum::operator+(const CoherentSum& other) const {
  if (modes_ != other.modes_)
    throw ContractError("CoherentSum: mode count mismatch in +");
  std::vector<CoherentTerm> all(terms_.begin(), terms_.end());
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  return CoherentSum(modes_, std::move(all));
}

CoherentSum CoherentSum::operator-(const CoherentSum& other) const {
  return *this + other * Complex{-1.0L, 0.0L};
}

CoherentSum CoherentSum::operator*(Complex scale) const {
  std::vector<CoherentTerm> scaled(terms_.begin(), terms_.end());
  for (auto& t : scaled) t.coeff *= scale;
  return CoherentSum(modes_, std::move(scaled));
}

Complex overlap(Complex a, Complex b) {
  return std::exp(-std::norm(a) / 2 - std::norm(b) / 2 + std::conj(a) * b);
}

Complex inner(const CoherentSum& x, const CoherentSum& y) {
  if (x.modes() != y.modes())
    throw ContractError("inner: mode count mismatch");
  Complex acc{};
  for (const auto& tx : x.terms()) {
    for (const auto& ty : y.terms()) {
      Complex prod = std::conj(tx.coeff) * ty.coeff;
      for (std::size_t m = 0; m < x.modes(); ++m)
        prod *= overlap(tx.amps[m], ty.amps[m]);
      acc += prod;
    }
  }
  return acc;
}

Real norm(const CoherentSum& x) {
  Complex n2 = inner(x, x);
  if (std::abs(n2.imag()) >= kRealityTol)
    throw InvariantError("norm: ⟨x|x⟩ has non-negligible imaginary part");
  return std::sqrt(std::max(n2.real(), 0.0L));
}

CoherentSum normalized(const CoherentSum& x) {
  Real n = norm(x);
  if (n <= 1e-150L) throw ContractError("normalized: null state");
  return x * Complex{1.0L / n, 0.0L};
}

Real distance(const CoherentSum& x, const CoherentSum& y) { return norm(x - y); }

CoherentSum apply_rotation(const CoherentSum& s, std::size_t mode, long n,
                           long power) {
  if (mode >= s.modes()) throw ContractError("apply_rotation: bad mode index");
  if (n < 1) throw ContractError("apply_rotation: n must be positive");
  Complex phase = cis(-2 * kPi * static_cast<Real>(mod_n(power, n)) / static_cast<Real>(n));
  std::vector<CoherentTerm> terms(s.terms().begin(), s.terms().end());
  for (auto& t : terms) t.amps[mode] *= phase;
  return CoherentSum(s.modes(), std::move(terms));
}

CoherentSum beam_split_50(const CoherentSum& s, std::size_t mode_in1,
                          std::size_t mode_in2) {
  if (mode_in1 >= s.modes() || mode_in2 >= s.modes() || mode_in1 == mode_in2)
    throw ContractError("beam_split_50: need two distinct valid mode indices");
  const Real inv_sqrt2 = 1.0L / std::sqrt(2.0L);
  std::vector<CoherentTerm> terms(s.terms().begin(), s.terms().end());
  for (auto& t : terms) {
    Complex a = t.amps[mode_in1], b = t.amps[mode_in2];
    t.amps[mode_in1] = (a - b) * inv_sqrt2;
    t.amps[mode_in2] = (a + b) * inv_sqrt2;
  }
  return CoherentSum(s.modes(), std::move(terms));
}

CoherentSum dilute(const CoherentSum& s, std::size_t mode, std::size_t copies) {
  if (mode >= s.modes()) throw ContractError("dilute: bad mode index");
  if (copies == 0) throw ContractError("dilute: copies must be positive");
  const Real inv_sqrt = 1.0L / std::sqrt(static_cast<Real>(copies));
  std::vector<CoherentTerm> terms;
  terms.reserve(s.term_count());
  for (const auto& t : s.terms()) {
    CoherentTerm nt;
    nt.coeff = t.coeff;
    nt.amps.reserve(s.modes() + copies - 1);
    nt.amps.assign(t.amps.begin(), t.amps.begin() + mode);
    for (std::size_t c = 0; c < copies; ++c) nt.amps.push_back(t.amps[mode] * inv_sqrt);
    nt.amps.insert(nt.amps.end(), t.amps.begin() + mode + 1, t.amps.end());
    terms.push_back(std::move(nt));
  }
  return CoherentSum(s.modes() + copies - 1, std::move(terms));
}

CoherentSum tensor(const CoherentSum& a, const CoherentSum& b) {
  std::vector<CoherentTerm> terms;
  terms.reserve(a.term_count() * b.term_count());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      CoherentTerm nt;
      nt.coeff = ta.coeff * tb.coeff;
      nt.amps = ta.amps;
      nt.amps.insert(nt.amps.end(), tb.amps.begin(), tb.amps.end());
      terms.push_back(std::move(nt));
    }
  }
  return CoherentSum(a.modes() + b.modes(), std::move(terms));
}

CoherentSum reorder_modes(const CoherentSum& s, std::span<const std::size_t> order) {
  if (order.size() != s.modes())
    throw ContractError("reorder_modes: order length != mode count");
  std::vector<bool> seen(s.modes(), false);
  for (auto i : order) {
    if (i >= s.modes() || seen[i])
      throw ContractError("reorder_modes: order is not a permutation");
    seen[i] = true;
  }
  std::vector<CoherentTerm> terms;
  terms.reserve(s.term_count());
  for (const auto& t : s.terms()) {
    CoherentTerm nt;
    nt.coeff = t.coeff;
    nt.amps.resize(s.modes());
    for (std::size_t i = 0; i < s.modes(); ++i) nt.amps[i] = t.amps[order[i]];
    terms.push_back(std::move(nt));
  }
  return CoherentSum(s.modes(), std::move(terms));
}

ModeSelector ModeSelector::exact_count(long n) {
  if (n < 0) throw ContractError("exact_count: negative photon number");
  return {Kind::ExactCount, n};
}

Real pattern_expectation(const CoherentSum& s, const ModePattern& pattern) {
  if (pattern.size() != s.modes())
    throw ContractError("pattern_expectation: pattern length != mode count");
  Complex acc{};
  for (const auto& bra : s.terms()) {
    for (const auto& ket : s.terms()) {
      Complex prod = std::conj(bra.coeff) * ket.coeff;
      for (std::size_t m = 0; m < s.modes(); ++m) {
        Complex a = bra.amps[m], b = ket.amps[m];
        Real vac = std::exp(-(std::norm(a) + std::norm(b)) / 2);
        switch (pattern[m].kind) {
          case ModeSelector::Kind::Identity:
            prod *= overlap(a, b);
            break;
          case ModeSelector::Kind::Vacuum:
            prod *= vac;
            break;
          case ModeSelector::Kind::NonVacuum:
            prod *= overlap(a, b) - vac;
            break;
          case ModeSelector::Kind::ExactCount: {
            Complex z{1.0L, 0.0L};
            for (long i = 1; i <= pattern[m].count; ++i)
              z *= std::conj(a) * b / static_cast<Real>(i);
            prod *= vac * z;
            break;
          }
        }
      }
      acc += prod;
    }
  }
  if (std::abs(acc.imag()) >= kRealityTol)
    throw InvariantError("pattern_expectation: result not real within tolerance");
  Real v = acc.real();
  if (v > 1.0L + 1e-12L)
    throw InvariantError("pattern_expectation: probability exceeds 1");
  return std::max(v, 0.0L);
}

}  // namespace circlecat
