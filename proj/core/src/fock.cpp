#include "circlecat/fock.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>

namespace circlecat {

long cutoff_for(Real alpha_abs, Real eps) {
  if (alpha_abs < 0) throw ContractError("cutoff_for: negative modulus");
  if (!(eps > 0 && eps < 1)) throw ContractError("cutoff_for: eps must be in (0,1)");
  if (alpha_abs == 0) return 0;
  const Real mean = alpha_abs * alpha_abs;
  Real p = std::exp(-mean);  // P(n = 0)
  Real cum = p;
  long m = 0;
  while (1.0L - cum >= eps) {
    ++m;
    p *= mean / static_cast<Real>(m);
    cum += p;
    if (m > 100000) throw InvariantError("cutoff_for: tail sum did not converge");
  }
  return m;
}

FockVector to_fock(const CoherentSum& s, long cutoff) {
  if (s.modes() != 1) throw ContractError("to_fock: single-mode states only");
  if (cutoff < 0) throw ContractError("to_fock: negative cutoff");
  FockVector out;
  out.cutoff = cutoff;
  out.coeffs.assign(cutoff + 1, Complex{});
  for (const auto& t : s.terms()) {
    const Complex alpha = t.amps[0];
    // f_n = e^{−|α|²/2} α^n / √(n!) built incrementally
    Complex f = t.coeff * std::exp(Complex{-std::norm(alpha) / 2, 0.0L});
    for (long n = 0; n <= cutoff; ++n) {
      out.coeffs[n] += f;
      f *= alpha / std::sqrt(static_cast<Real>(n + 1));
    }
  }
  return out;
}

TwoModeFockMatrix to_fock_two_mode(const CoherentSum& s, long cutoff) {
  if (s.modes() != 2) throw ContractError("to_fock_two_mode: two-mode states only");
  if (cutoff < 0) throw ContractError("to_fock_two_mode: negative cutoff");
  const long dim = cutoff + 1;
  TwoModeFockMatrix out;
  out.cutoff = cutoff;
  out.coeffs.assign(dim * dim, Complex{});
  std::vector<Complex> fa(dim), fb(dim);
  for (const auto& t : s.terms()) {
    for (int mode = 0; mode < 2; ++mode) {
      auto& f = mode == 0 ? fa : fb;
      const Complex alpha = t.amps[mode];
      Complex v = std::exp(Complex{-std::norm(alpha) / 2, 0.0L});
      for (long n = 0; n < dim; ++n) {
        f[n] = v;
        v *= alpha / std::sqrt(static_cast<Real>(n + 1));
      }
    }
    for (long na = 0; na < dim; ++na)
      for (long nb = 0; nb < dim; ++nb)
        out.coeffs[na * dim + nb] += t.coeff * fa[na] * fb[nb];
  }
  return out;
}

Complex inner(const FockVector& x, const FockVector& y) {
  if (x.cutoff != y.cutoff) throw ContractError("inner(Fock): cutoff mismatch");
  Complex acc{};
  for (long n = 0; n <= x.cutoff; ++n) acc += std::conj(x.coeffs[n]) * y.coeffs[n];
  return acc;
}

std::vector<Real> schmidt_via_svd(const CoherentSum& s, long cutoff) {
  TwoModeFockMatrix m = to_fock_two_mode(s, cutoff);
  const long dim = cutoff + 1;
  Eigen::MatrixXcd a(dim, dim);
  for (long i = 0; i < dim; ++i)
    for (long j = 0; j < dim; ++j)
      a(i, j) = std::complex<double>(static_cast<double>(m.at(i, j).real()),
                                     static_cast<double>(m.at(i, j).imag()));
  // JacobiSVD: the matrices here are small and BDCSVD loses ~1e-4 of
  // accuracy on near-degenerate spectra at some sizes
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  std::vector<Real> out;
  for (long i = 0; i < svd.singularValues().size(); ++i) {
    Real v = static_cast<Real>(svd.singularValues()[i]);
    v *= v;
    if (v >= 1e-14L) out.push_back(v);
  }
  return out;  // Eigen returns singular values in decreasing order
}

Real entropy_of_spectrum(std::span<const Real> vals) {
  Real sum = 0;
  for (Real v : vals) {
    if (v < 0) throw ContractError("entropy_of_spectrum: negative entry");
    sum += v;
  }
  if (std::abs(sum - 1.0L) > 1e-6L)
    throw ContractError("entropy_of_spectrum: spectrum does not sum to 1");
  Real e = 0;
  for (Real v : vals) {
    Real w = v / sum;
    if (w > 0) e -= w * std::log2(w);
  }
  return e;
}

}  // namespace circlecat
