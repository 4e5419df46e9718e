// circlecat command-line tool: emits circular-state Schmidt spectra,
// entanglement sweeps, teleportation success-probability curves and full
// teleportation reports as CSV or JSON. Output is deterministic: identical
// configuration (and seed) yields byte-identical files.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "circlecat/gqbs.hpp"
#include "circlecat/teleport.hpp"

namespace {

constexpr const char* kToolVersion = "0.1.0";

using circlecat::CircleConfig;
using circlecat::Complex;
using circlecat::Real;
using json = nlohmann::json;

struct AlphaSpec {
  double modulus = 0;
  double phase = 0;
  Complex value() const {
    return Complex{static_cast<Real>(modulus), 0} *
           circlecat::cis(static_cast<Real>(phase));
  }
};

struct SweepSpec {
  double start = 0.1, stop = 4.0, step = 0.1;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(Real v) { return fmt(static_cast<double>(v)); }

AlphaSpec parse_alpha(const std::string& text) {
  AlphaSpec a;
  auto colon = text.find(':');
  try {
    a.modulus = std::stod(text.substr(0, colon));
    if (colon != std::string::npos) a.phase = std::stod(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--alpha", "expected <mod[:phase]>");
  }
  if (!(a.modulus > 0)) throw CLI::ValidationError("--alpha", "modulus must be positive");
  return a;
}

SweepSpec parse_range(const std::string& text) {
  SweepSpec r;
  std::istringstream in(text);
  char c1 = 0, c2 = 0;
  if (!(in >> r.start >> c1 >> r.stop >> c2 >> r.step) || c1 != ':' || c2 != ':')
    throw CLI::ValidationError("--alpha-range", "expected <start:stop:step>");
  if (!(r.step > 0)) throw CLI::ValidationError("--alpha-range", "step must be positive");
  if (r.stop < r.start) throw CLI::ValidationError("--alpha-range", "empty sweep");
  return r;
}

std::vector<double> sweep_points(const SweepSpec& r) {
  std::vector<double> pts;
  for (long i = 0;; ++i) {
    double a = r.start + r.step * static_cast<double>(i);
    if (a > r.stop + 1e-12) break;
    if (a > 0) pts.push_back(a);
  }
  if (pts.empty()) throw CLI::ValidationError("--alpha-range", "sweep contains no positive points");
  return pts;
}

// flat list re0,im0,re1,im1,...
std::vector<Complex> parse_input(const std::string& text) {
  std::vector<double> vals;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      vals.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--input", "expected re0,im0,re1,im1,...");
    }
  }
  if (vals.empty() || vals.size() % 2 != 0)
    throw CLI::ValidationError("--input", "expected an even number of values");
  std::vector<Complex> out;
  for (std::size_t i = 0; i < vals.size(); i += 2)
    out.push_back({static_cast<Real>(vals[i]), static_cast<Real>(vals[i + 1])});
  return out;
}

class Writer {
 public:
  Writer(const std::string& out_path, const std::string& format)
      : format_(format) {
    if (!out_path.empty()) {
      file_.open(out_path, std::ios::binary);
      if (!file_) throw std::ios_base::failure("cannot open output file: " + out_path);
    }
  }

  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  bool csv() const { return format_ == "csv"; }

  void emit_csv(const std::string& config_echo,
                const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
    auto& os = stream();
    os << "# tool: circlecat " << kToolVersion << "\n";
    os << "# config: " << config_echo << "\n";
    for (std::size_t i = 0; i < header.size(); ++i)
      os << header[i] << (i + 1 < header.size() ? "," : "");
    os << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        os << row[i] << (i + 1 < row.size() ? "," : "");
      os << "\n";
    }
  }

  void emit_json(json j) {
    j["tool"] = "circlecat";
    j["version"] = kToolVersion;
    stream() << j.dump(2) << "\n";
  }

 private:
  std::string format_;
  std::ofstream file_;
};

struct CommonOpts {
  int n = 0;
  std::string alpha_text;
  std::string format = "csv";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool need_alpha) {
  cmd->add_option("--n", o.n, "number of circle components N")->required();
  auto* a = cmd->add_option("--alpha", o.alpha_text, "coherent amplitude as mod[:phase]");
  if (need_alpha) a->required();
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out_path, "output path (default stdout)");
}

std::string class_label(const circlecat::OutcomeClass& cls) {
  switch (cls.kind) {
    case circlecat::OutcomeClass::Kind::EmptyG: return "G" + std::to_string(cls.j);
    case circlecat::OutcomeClass::Kind::EmptyH: return "H" + std::to_string(cls.j);
    default: return "failure";
  }
}

int run_schmidt(const CommonOpts& o) {
  CircleConfig cfg(o.n, parse_alpha(o.alpha_text).value());
  std::vector<std::vector<std::string>> rows;
  json jrows = json::array();
  for (long q = 0; q < cfg.n; ++q) {
    auto spec = circlecat::schmidt_coeffs(cfg, q);
    for (long k = 0; k < cfg.n; ++k) {
      rows.push_back({std::to_string(cfg.n), fmt(std::abs(cfg.alpha0)),
                      std::to_string(q), std::to_string(k),
                      fmt(spec.lambdas[k]), fmt(spec.entropy)});
      jrows.push_back({{"N", cfg.n},
                       {"alpha_abs", static_cast<double>(std::abs(cfg.alpha0))},
                       {"q", q},
                       {"k", k},
                       {"lambda", static_cast<double>(spec.lambdas[k])},
                       {"entropy", static_cast<double>(spec.entropy)}});
    }
  }
  std::string echo = "schmidt --n " + std::to_string(o.n) + " --alpha " + o.alpha_text;
  Writer w(o.out_path, o.format);
  if (w.csv())
    w.emit_csv(echo, {"N", "alpha_abs", "q", "k", "lambda", "entropy"}, rows);
  else
    w.emit_json({{"config", echo}, {"rows", jrows}});
  return 0;
}

int run_entanglement(const CommonOpts& o, const std::string& range_text) {
  SweepSpec range = range_text.empty() ? SweepSpec{} : parse_range(range_text);
  std::vector<std::vector<std::string>> rows;
  json jrows = json::array();
  for (double a : sweep_points(range)) {
    CircleConfig cfg(o.n, Complex{static_cast<Real>(a), 0});
    for (long q = 0; q < cfg.n; ++q) {
      Real e = circlecat::entanglement(cfg, q);
      rows.push_back({std::to_string(o.n), fmt(a), std::to_string(q), fmt(e)});
      jrows.push_back({{"N", o.n}, {"alpha_abs", a}, {"q", q}, {"entropy", static_cast<double>(e)}});
    }
  }
  std::string echo = "entanglement --n " + std::to_string(o.n) + " --alpha-range " +
                     (range_text.empty() ? std::string("0.1:4:0.1") : range_text);
  Writer w(o.out_path, o.format);
  if (w.csv())
    w.emit_csv(echo, {"N", "alpha_abs", "q", "entropy"}, rows);
  else
    w.emit_json({{"config", echo}, {"rows", jrows}});
  return 0;
}

int run_psuccess(const CommonOpts& o, const std::string& range_text) {
  SweepSpec range = range_text.empty() ? SweepSpec{} : parse_range(range_text);
  std::vector<std::vector<std::string>> rows;
  json jrows = json::array();
  for (double a : sweep_points(range)) {
    CircleConfig cfg(o.n, Complex{static_cast<Real>(a), 0});
    Real pc = circlecat::success_probability_closed(cfg);
    Real pv = circlecat::success_probability_vanenk(cfg);
    rows.push_back({std::to_string(o.n), fmt(a), fmt(pc), fmt(pv)});
    jrows.push_back({{"N", o.n},
                     {"alpha_abs", a},
                     {"p_closed", static_cast<double>(pc)},
                     {"p_vanenk", static_cast<double>(pv)}});
  }
  std::string echo = "psuccess --n " + std::to_string(o.n) + " --alpha-range " +
                     (range_text.empty() ? std::string("0.1:4:0.1") : range_text);
  Writer w(o.out_path, o.format);
  if (w.csv())
    w.emit_csv(echo, {"N", "alpha_abs", "p_closed", "p_vanenk"}, rows);
  else
    w.emit_json({{"config", echo}, {"rows", jrows}});
  return 0;
}

int run_teleport(const CommonOpts& o, const std::string& input_text, long q, long p,
                 long draws, std::uint64_t seed) {
  CircleConfig cfg(o.n, parse_alpha(o.alpha_text).value());
  circlecat::QuditCoeffs raw;
  if (input_text.empty()) {
    raw.coeffs.assign(cfg.n, Complex{});
    raw.coeffs[0] = Complex{1.0L, 0};  // basis state |α₀⟩
  } else {
    raw.coeffs = parse_input(input_text);
    if (static_cast<long>(raw.coeffs.size()) != cfg.n)
      throw CLI::ValidationError("--input", "need exactly N coefficients");
  }
  auto input = circlecat::normalize_input(cfg, raw);
  auto report = circlecat::teleport_report(cfg, input, q, p);

  std::vector<circlecat::SampledOutcome> sampled;
  if (draws > 0) {
    circlecat::OutcomeSampler sampler(report, seed);
    for (long d = 0; d < draws; ++d) sampled.push_back(sampler.draw());
  }

  std::string echo = "teleport --n " + std::to_string(o.n) + " --alpha " + o.alpha_text +
                     " --q " + std::to_string(q) + " --p " + std::to_string(p) +
                     (input_text.empty() ? "" : " --input " + input_text) +
                     (draws > 0 ? " --draws " + std::to_string(draws) + " --seed " +
                                      std::to_string(seed)
                                : "");
  Writer w(o.out_path, o.format);
  if (w.csv()) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& cr : report.classes) {
      for (long c = 0; c < report.n; ++c)
        rows.push_back({class_label(cr.cls), std::to_string(c),
                        fmt(cr.residues[c].probability), fmt(cr.residues[c].fidelity)});
      rows.push_back({class_label(cr.cls), "total", fmt(cr.probability),
                      fmt(cr.coarse_fidelity)});
    }
    rows.push_back({"failure", "", fmt(report.failure_probability), ""});
    rows.push_back({"success", "", fmt(report.success_probability), ""});
    for (std::size_t d = 0; d < sampled.size(); ++d)
      rows.push_back({"draw" + std::to_string(d), std::to_string(sampled[d].residue),
                      class_label(sampled[d].cls), ""});
    w.emit_csv(echo, {"class", "residue", "probability", "fidelity"}, rows);
  } else {
    json jclasses = json::array();
    for (const auto& cr : report.classes) {
      json jres = json::array();
      for (long c = 0; c < report.n; ++c)
        jres.push_back({{"residue", c},
                        {"probability", static_cast<double>(cr.residues[c].probability)},
                        {"fidelity", static_cast<double>(cr.residues[c].fidelity)}});
      jclasses.push_back({{"class", class_label(cr.cls)},
                          {"probability", static_cast<double>(cr.probability)},
                          {"coarse_fidelity", static_cast<double>(cr.coarse_fidelity)},
                          {"residues", jres}});
    }
    json j = {{"config", echo},
              {"classes", jclasses},
              {"failure_probability", static_cast<double>(report.failure_probability)},
              {"success_probability", static_cast<double>(report.success_probability)}};
    if (!sampled.empty()) {
      json jdraws = json::array();
      for (const auto& s : sampled)
        jdraws.push_back({{"class", class_label(s.cls)}, {"residue", s.residue}});
      j["draws"] = jdraws;
    }
    w.emit_json(std::move(j));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"circular cat state and qudit teleportation toolkit"};
  app.require_subcommand(1);

  CommonOpts schmidt_opts, ent_opts, psucc_opts, tele_opts;
  std::string ent_range, psucc_range, tele_input;
  long tele_q = 0, tele_p = 0, tele_draws = 0;
  std::uint64_t tele_seed = 0;

  auto* cmd_schmidt = app.add_subcommand("schmidt", "Schmidt coefficients and entanglement per q");
  add_common(cmd_schmidt, schmidt_opts, true);

  auto* cmd_ent = app.add_subcommand("entanglement", "entanglement sweep over |alpha0|");
  add_common(cmd_ent, ent_opts, false);
  cmd_ent->add_option("--alpha-range", ent_range, "sweep as start:stop:step (default 0.1:4:0.1)");

  auto* cmd_psucc = app.add_subcommand("psuccess", "teleportation success probability curve");
  add_common(cmd_psucc, psucc_opts, false);
  cmd_psucc->add_option("--alpha-range", psucc_range, "sweep as start:stop:step (default 0.1:4:0.1)");

  auto* cmd_tele = app.add_subcommand("teleport", "full teleportation report");
  add_common(cmd_tele, tele_opts, true);
  cmd_tele->add_option("--q", tele_q, "resource phase index q");
  cmd_tele->add_option("--p", tele_p, "resource rotation index p");
  cmd_tele->add_option("--input", tele_input,
                       "input qudit coefficients re0,im0,re1,im1,... (default basis state)");
  cmd_tele->add_option("--draws", tele_draws, "number of sampled outcomes to append");
  cmd_tele->add_option("--seed", tele_seed, "sampler seed");

  try {
    app.parse(argc, argv);
    if (cmd_schmidt->parsed()) return run_schmidt(schmidt_opts);
    if (cmd_ent->parsed()) return run_entanglement(ent_opts, ent_range);
    if (cmd_psucc->parsed()) return run_psuccess(psucc_opts, psucc_range);
    if (cmd_tele->parsed())
      return run_teleport(tele_opts, tele_input, tele_q, tele_p, tele_draws, tele_seed);
    return 1;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage errors are exit code 1
  } catch (const circlecat::ContractError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const circlecat::InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
