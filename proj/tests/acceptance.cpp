// Acceptance suite. Each check prints one [PASS]/[FAIL] line; the process
// exits nonzero if any check fails. argv[1] must be the path to the
// circlecat CLI binary (used by the determinism check).

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "circlecat/circle.hpp"
#include "circlecat/fock.hpp"
#include "circlecat/gqbs.hpp"
#include "circlecat/teleport.hpp"
#include "teleport_fock_oracle.hpp"
#include "test_helpers.hpp"

using namespace circlecat;
using circlecat::testing::random_input;

namespace {

std::string g_cli_path;
std::ostringstream g_detail;

bool rics_orthonormality() {
  Real worst_gram = 0, worst_fock = 0;
  for (int n : {2, 3, 4, 8}) {
    for (double a : {0.5, 1.0, 2.0}) {
      CircleConfig cfg(n, Complex{static_cast<Real>(a), 0});
      long cutoff = cutoff_for(std::abs(cfg.alpha0), 1e-12L);
      std::vector<CoherentSum> states;
      std::vector<FockVector> focks;
      for (long q = 0; q < n; ++q) {
        states.push_back(rics(cfg, q));
        focks.push_back(to_fock(states.back(), cutoff));
      }
      for (long q = 0; q < n; ++q) {
        for (long r = 0; r < n; ++r) {
          Real delta = q == r ? 1.0L : 0.0L;
          worst_gram = std::max(worst_gram, std::abs(inner(states[q], states[r]) - delta));
          worst_fock = std::max(worst_fock, std::abs(inner(focks[q], focks[r]) - delta));
        }
      }
    }
  }
  g_detail << "max gram dev " << static_cast<double>(worst_gram) << ", max fock dev "
           << static_cast<double>(worst_fock);
  return worst_gram < 1e-10L && worst_fock < 1e-8L;
}

bool schmidt_consistency() {
  for (int n : {2, 3, 4, 8, 16}) {
    for (double a : {0.5, 1.0, 2.0}) {
      CircleConfig cfg(n, Complex{static_cast<Real>(a), 0});
      for (long q = 0; q < n; ++q) {
        auto spec = schmidt_coeffs(cfg, q);
        Real sum = 0;
        for (Real l : spec.lambdas) sum += l;
        if (std::abs(sum - 1.0L) >= 1e-12L) {
          g_detail << "sum deviation at N=" << n << " q=" << q;
          return false;
        }
      }
    }
  }
  // SVD oracle: compare sorted multisets
  for (int n : {2, 4, 8}) {
    for (double a : {1.0, 2.0}) {
      CircleConfig cfg(n, Complex{static_cast<Real>(a), 0});
      long cutoff = cutoff_for(2 * std::abs(cfg.alpha0), 1e-14L) + 10;
      for (long q = 0; q < n; ++q) {
        auto analytic = schmidt_coeffs(cfg, q).lambdas;
        std::sort(analytic.begin(), analytic.end(), std::greater<>());
        auto svd = schmidt_via_svd(gqbs_state(cfg, q, 0), cutoff);
        for (std::size_t i = 0; i < analytic.size(); ++i) {
          Real sv = i < svd.size() ? svd[i] : 0.0L;
          if (std::abs(analytic[i] - sv) >= 1e-8L) {
            g_detail << "multiset mismatch at N=" << n << " alpha=" << a << " q=" << q;
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool figure_regression() {
  auto argmax = [](const CircleConfig& cfg) {
    long best = 0;
    for (long q = 1; q < cfg.n; ++q)
      if (entanglement(cfg, q) > entanglement(cfg, best)) best = q;
    return best;
  };
  CircleConfig low(8, Complex{1.0L, 0}), high(8, Complex{2.0L, 0});
  if (argmax(low) != 7) { g_detail << "argmax at |alpha0|=1 is " << argmax(low); return false; }
  for (long q = 1; q < 8; ++q)
    if (entanglement(low, q) <= entanglement(low, 0)) {
      g_detail << "E(0) is not the minimum";
      return false;
    }
  if (argmax(high) != 3) { g_detail << "argmax at |alpha0|=2 is " << argmax(high); return false; }
  Real e3 = entanglement(high, 3);
  g_detail << "E(3) = " << static_cast<double>(e3);
  return e3 >= 2.96L && e3 <= 2.98L;
}

bool success_curve() {
  auto crossing = [](int n) {
    Real lo = 0.05L, hi = 6.0L;
    for (int i = 0; i < 200; ++i) {
      Real mid = (lo + hi) / 2;
      (success_probability_closed(CircleConfig(n, Complex{mid, 0})) < 0.2L ? lo : hi) = mid;
    }
    return lo;
  };
  Real c4 = crossing(4), c8 = crossing(8);
  g_detail << "P=0.2 at |alpha0| = " << static_cast<double>(c4) << " (N=4), "
           << static_cast<double>(c8) << " (N=8)";
  if (!(c4 >= 1.05L && c4 <= 1.25L && c8 >= 2.9L && c8 <= 3.3L)) return false;
  for (Real a = 0.2L; a <= 3.0L; a += 0.2L) {
    CircleConfig cfg(2, Complex{a, 0});
    Real mean = a * a;
    Real expected = (1 - std::exp(-2 * mean)) / (1 + std::exp(-4 * mean));
    if (std::abs(success_probability_closed(cfg) - expected) >= 1e-12L) return false;
  }
  for (int n : {2, 4}) {
    CircleConfig cfg(n, Complex{static_cast<Real>(n), 0});
    if (std::abs(success_probability_closed(cfg) - 1.0L) >= 1e-3L) return false;
  }
  return true;
}

bool protocol_oracles() {
  for (int n : {2, 4, 8}) {
    for (double a : {0.3, 1.0, 2.0}) {
      CircleConfig cfg(n, Complex{static_cast<Real>(a), 0});
      QuditCoeffs basis;
      basis.coeffs.assign(n, Complex{});
      basis.coeffs[0] = Complex{1.0L, 0};
      Real one_class = class_probability(cfg, basis, 0, 0, OutcomeClass::empty_h(0));
      Real dev = std::abs(static_cast<Real>(n) * one_class - success_probability_closed(cfg));
      if (dev >= 1e-10L) {
        g_detail << "class-probability mismatch " << static_cast<double>(dev)
                 << " at N=" << n << " alpha=" << a;
        return false;
      }
    }
  }
  CircleConfig cfg(2, Complex{0.6L, 0});
  QuditCoeffs basis;
  basis.coeffs = {Complex{1.0L, 0}, Complex{}};
  Real fock = circlecat::testing::fock_success_probability_n2(cfg, basis, 30);
  Real dev = std::abs(fock - success_probability_closed(cfg));
  g_detail << "fock-enumeration deviation " << static_cast<double>(dev);
  return dev < 1e-6L;
}

bool outcome_completeness() {
  std::mt19937_64 rng(11);
  for (int n : {2, 4}) {
    CircleConfig cfg(n, Complex{1.0L, 0});
    auto input = random_input(rng, cfg);
    Real total = class_probability(cfg, input, 0, 0, OutcomeClass::failure());
    for (long j = 0; j < n / 2; ++j) {
      total += class_probability(cfg, input, 0, 0, OutcomeClass::empty_g(j));
      total += class_probability(cfg, input, 0, 0, OutcomeClass::empty_h(j));
    }
    if (std::abs(total - 1.0L) >= 1e-10L) {
      g_detail << "probabilities sum to " << static_cast<double>(total) << " at N=" << n;
      return false;
    }
    auto joint = joint_state(cfg, input, 0, 0);
    ModePattern all_nonvac(joint.modes(), ModeSelector::non_vacuum());
    all_nonvac[0] = ModeSelector::identity();
    if (pattern_expectation(joint, all_nonvac) >= 1e-12L) {
      g_detail << "all-nonvacuum outcome has nonzero probability";
      return false;
    }
  }
  return true;
}

bool sector_exact_teleportation() {
  std::mt19937_64 rng(2026);
  for (int n : {2, 4}) {
    CircleConfig cfg(n, Complex{1.0L, 0});
    const long half = n / 2;
    for (int trial = 0; trial < 20; ++trial) {
      auto input = random_input(rng, cfg);
      auto psi_in = input_state(cfg, input);
      TeleportReport base;
      for (long p = 0; p < n; ++p) {
        for (long j = 0; j < half; ++j) {
          for (auto cls : {OutcomeClass::empty_g(j), OutcomeClass::empty_h(j)}) {
            auto [prob, state] = bob_state_residue(cfg, input, 0, p, cls, 0);
            auto corrected = apply_rotation(state, 0, n, correction_power(cls, p, half));
            Real fid = std::norm(inner(psi_in, corrected));
            if (fid < 1.0L - 1e-9L) {
              g_detail << "residue-0 fidelity " << static_cast<double>(fid) << " at N=" << n
                       << " p=" << p;
              return false;
            }
          }
        }
        auto report = teleport_report(cfg, input, 0, p);
        if (p == 0) { base = report; continue; }
        if (std::abs(report.failure_probability - base.failure_probability) >= 1e-10L)
          return false;
        for (std::size_t i = 0; i < report.classes.size(); ++i) {
          const auto& x = report.classes[i];
          const auto& y = base.classes[i];
          if (std::abs(x.probability - y.probability) >= 1e-10L ||
              std::abs(x.coarse_fidelity - y.coarse_fidelity) >= 1e-10L)
            return false;
          for (long c = 0; c < n; ++c)
            if (std::abs(x.residues[c].probability - y.residues[c].probability) >= 1e-10L ||
                std::abs(x.residues[c].fidelity - y.residues[c].fidelity) >= 1e-10L)
              return false;
        }
      }
    }
  }
  return true;
}

bool non_correctability_witness() {
  CircleConfig cfg(4, Complex{1.0L, 0});
  QuditCoeffs raw;
  raw.coeffs = {Complex{1.0L, 0}, Complex{1.0L, 0}, Complex{}, Complex{}};
  auto input = normalize_input(cfg, raw);
  auto psi_in = input_state(cfg, input);
  Real best = 0;
  for (long j = 0; j < 2; ++j) {
    for (auto cls : {OutcomeClass::empty_g(j), OutcomeClass::empty_h(j)}) {
      auto [prob, state] = bob_state_residue(cfg, input, 1, 0, cls, 0);
      for (long power = 0; power < 4; ++power)
        best = std::max(best, std::norm(inner(psi_in, apply_rotation(state, 0, 4, power))));
    }
  }
  g_detail << "best corrected fidelity " << static_cast<double>(best);
  return best < 1.0L - 1e-3L;
}

bool pseudo_phase_basis() {
  for (int n : {2, 4, 8}) {
    for (double a : {0.5, 1.0, 2.0}) {
      CircleConfig cfg(n, Complex{static_cast<Real>(a), 0});
      std::vector<CoherentSum> phis;
      for (long k = 0; k < n; ++k) phis.push_back(pseudo_phase(cfg, k));
      for (long k = 0; k < n; ++k) {
        for (long l = 0; l < n; ++l) {
          Real delta = k == l ? 1.0L : 0.0L;
          if (std::abs(inner(phis[k], phis[l]) - delta) >= 1e-10L) {
            g_detail << "pseudo-phase orthonormality fails at N=" << n;
            return false;
          }
        }
        for (long q = 0; q < n; ++q) {
          Real overlap2 = std::norm(inner(phis[k], rics(cfg, q)));
          if (std::abs(overlap2 - 1.0L / static_cast<Real>(n)) >= 1e-10L) {
            g_detail << "unbiasedness fails at N=" << n;
            return false;
          }
        }
      }
    }
  }
  CircleConfig cfg(4, Complex{1.0L, 0});
  long cutoff = cutoff_for(2 * std::abs(cfg.alpha0), 1e-14L) + 10;
  std::vector<CoherentSum> bells;
  for (long q = 0; q < 4; ++q)
    for (long p = 0; p < 4; ++p) bells.push_back(generalized_bell(cfg, q, p));
  for (std::size_t i = 0; i < bells.size(); ++i) {
    for (std::size_t j = 0; j < bells.size(); ++j) {
      Real delta = i == j ? 1.0L : 0.0L;
      if (std::abs(inner(bells[i], bells[j]) - delta) >= 1e-10L) {
        g_detail << "Bell orthonormality fails at pair " << i << "," << j;
        return false;
      }
    }
    auto spectrum = schmidt_via_svd(bells[i], cutoff);
    if (spectrum.size() != 4) return false;
    for (Real l : spectrum)
      if (std::abs(l - 0.25L) >= 1e-10L) {
        g_detail << "Bell Schmidt spectrum is not flat";
        return false;
      }
  }
  return true;
}

bool vanenk_comparison() {
  CircleConfig cfg(4, Complex{2.0L, 0});
  Real norm_dev = std::abs(4 * g1_tilde(cfg, 0) - 1.0L);
  Real rel = std::abs(success_probability_vanenk(cfg) - success_probability_closed(cfg)) /
             success_probability_closed(cfg);
  g_detail << "|N*g1(0)-1| = " << static_cast<double>(norm_dev)
           << ", relative probability gap " << static_cast<double>(rel);
  return norm_dev < 0.01L && rel < 0.01L;
}

bool cli_determinism() {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path();
  auto read_all = [](const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
  };
  const std::vector<std::string> configs = {
      "schmidt --n 8 --alpha 2",
      "teleport --n 4 --alpha 1 --input 0.3,0.1,0.5,-0.2,0.1,0,0.2,0.4 --draws 25 --seed 42",
      "psuccess --n 4 --alpha-range 0.5:2:0.5 --format json",
  };
  for (std::size_t i = 0; i < configs.size(); ++i) {
    fs::path out1 = dir / ("circlecat_det_a" + std::to_string(i));
    fs::path out2 = dir / ("circlecat_det_b" + std::to_string(i));
    for (const auto& out : {out1, out2}) {
      std::string cmd = g_cli_path + " " + configs[i] + " --out " + out.string();
      if (std::system(cmd.c_str()) != 0) {
        g_detail << "command failed: " << configs[i];
        return false;
      }
    }
    bool same = read_all(out1) == read_all(out2) && !read_all(out1).empty();
    fs::remove(out1);
    fs::remove(out2);
    if (!same) {
      g_detail << "outputs differ for: " << configs[i];
      return false;
    }
  }
  g_detail << configs.size() << " configs byte-identical across runs";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: circlecat_acceptance <path-to-cli>\n";
    return 2;
  }
  g_cli_path = argv[1];

  struct Check {
    const char* name;
    std::function<bool()> fn;
  };
  const std::vector<Check> checks = {
      {"rics orthonormality (gram and fock paths)", rics_orthonormality},
      {"schmidt spectra: unit sum and svd-oracle agreement", schmidt_consistency},
      {"entanglement peaks: N=8 argmax/min and E(3) window", figure_regression},
      {"success-probability curve: crossings, N=2 closed form, saturation", success_curve},
      {"protocol oracles: class probability and fock enumeration", protocol_oracles},
      {"outcome completeness and the impossible all-nonvacuum pattern", outcome_completeness},
      {"sector-exact teleportation and p-independence", sector_exact_teleportation},
      {"non-correctability of the q=1 resource", non_correctability_witness},
      {"pseudo-phase basis, unbiasedness and generalized Bell states", pseudo_phase_basis},
      {"normalized vs unnormalized success probabilities at N=4, |alpha0|=2", vanenk_comparison},
      {"cli determinism: identical configs give byte-identical files", cli_determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    g_detail.str("");
    bool ok = false;
    std::string error;
    try {
      ok = checks[i].fn();
    } catch (const std::exception& e) {
      error = e.what();
    }
    std::string detail = g_detail.str();
    if (!error.empty()) detail = detail.empty() ? "exception: " + error : detail + "; exception: " + error;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << checks[i].name
              << (detail.empty() ? "" : " — " + detail) << "\n";
    if (!ok) ++failures;
  }
  std::cout << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
