// abc: command-line front end over the C API.
//
// Exit codes: 0 ok, 1 validation failure, 2 configuration error,
// 3 domain error (supercritical request, numerical failure).

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "abc/abc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitConfig = 2;
constexpr int kExitDomain = 3;

struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, std::string message) { throw Failure{code, std::move(message)}; }

[[noreturn]] void fail_status(abc_status st, const std::string& context) {
  const int code = (st == ABC_ERR_CONFIG || st == ABC_ERR_INVALID_ARGUMENT) ? kExitConfig : kExitDomain;
  fail(code, context + ": " + abc_status_name(st) + ": " + abc_last_error());
}

void check(abc_status st, const std::string& context) {
  if (st != ABC_OK) fail_status(st, context);
}

// ---- tables ---------------------------------------------------------------

using Cell = std::variant<std::monostate, long long, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string csv_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v + 0.0);  // no "-0"
  return buf;
}

std::string csv_cell(const Cell& c) {
  if (std::holds_alternative<long long>(c)) return std::to_string(std::get<long long>(c));
  if (std::holds_alternative<double>(c)) return csv_number(std::get<double>(c));
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  return "";
}

nlohmann::ordered_json json_cell(const Cell& c) {
  if (std::holds_alternative<long long>(c)) return std::get<long long>(c);
  if (std::holds_alternative<double>(c)) {
    const double v = std::get<double>(c);
    if (!std::isfinite(v)) return nullptr;
    return v + 0.0;
  }
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  return nullptr;
}

std::string render_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + t.columns[i];
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_cell(row[i]);
    out += '\n';
  }
  return out;
}

std::string render_json(const Table& t, const nlohmann::ordered_json& config,
                        const std::optional<nlohmann::ordered_json>& validation) {
  nlohmann::ordered_json doc;
  doc["config"] = config;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = json_cell(row[i]);
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  if (validation) doc["validation"] = *validation;
  return doc.dump(2) + '\n';
}

// ---- configuration --------------------------------------------------------

struct Config {
  double a = 0.0;
  double flux = 0.0;
  double mass = 1.0;
  int eta = 1;
  std::optional<double> energy;
  std::optional<double> momentum;
  std::string l_range = "0..0";
  int n_max = 3;
  int n = 0;
  std::string model = "both";
  std::string kind = "bound";
  std::string phi_grid = "0.3:3.141592653589793:25";
  std::string r_grid;
  int l_max = 60;
  bool partial_waves = false;
  std::string suites = "all";
  std::optional<double> tolerance;
  std::string format;
  std::string out;
};

struct LRange {
  int lo;
  int hi;
};

int parse_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  fail(kExitConfig, std::string("bad integer in ") + what + ": '" + s + "'");
}

double parse_double(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size() && std::isfinite(v)) return v;
  } catch (const std::exception&) {
  }
  fail(kExitConfig, std::string("bad number in ") + what + ": '" + s + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

LRange parse_l_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const int l = parse_int(s, "--l");
    return {l, l};
  }
  const LRange r{parse_int(s.substr(0, dots), "--l"), parse_int(s.substr(dots + 2), "--l")};
  if (r.lo > r.hi) fail(kExitConfig, "--l range must be ascending");
  return r;
}

std::vector<double> linear_grid(double start, double stop, int count, const char* what) {
  if (count < 1) fail(kExitConfig, std::string(what) + ": count must be positive");
  if (count > 1 && !(stop > start)) fail(kExitConfig, std::string(what) + ": grid must be ascending");
  std::vector<double> g;
  for (int i = 0; i < count; ++i) g.push_back(count == 1 ? start : start + (stop - start) * i / (count - 1));
  if (count > 1) g.back() = stop;
  return g;
}

std::vector<double> parse_phi_grid(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 3) fail(kExitConfig, "--phi-grid expects start:stop:count");
  return linear_grid(parse_double(parts[0], "--phi-grid"), parse_double(parts[1], "--phi-grid"),
                     parse_int(parts[2], "--phi-grid"), "--phi-grid");
}

std::vector<double> parse_r_grid(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 4 || (parts[0] != "log" && parts[0] != "lin"))
    fail(kExitConfig, "--r-grid expects log:start:stop:count or lin:start:stop:count");
  const double start = parse_double(parts[1], "--r-grid");
  const double stop = parse_double(parts[2], "--r-grid");
  const int count = parse_int(parts[3], "--r-grid");
  if (!(start > 0.0)) fail(kExitConfig, "--r-grid: radii must be positive");
  if (parts[0] == "lin") return linear_grid(start, stop, count, "--r-grid");
  std::vector<double> g = linear_grid(std::log(start), std::log(stop), count, "--r-grid");
  for (double& x : g) x = std::exp(x);
  g.front() = start;
  if (count > 1) g.back() = stop;
  return g;
}

using CouplingPtr = std::unique_ptr<abc_coupling, decltype(&abc_coupling_destroy)>;

CouplingPtr make_coupling(const Config& cfg) {
  abc_coupling* c = nullptr;
  const abc_status st = abc_coupling_create(cfg.a, cfg.flux, cfg.mass, cfg.eta, &c);
  if (st != ABC_OK) fail(kExitConfig, std::string("coupling: ") + abc_last_error());
  return {c, &abc_coupling_destroy};
}

// Kinematics from --energy or --momentum; p = sqrt(E^2 - m^2).
struct Kinematics {
  double energy;
  double p;
};

Kinematics kinematics(const Config& cfg) {
  if (cfg.energy) {
    if (!(*cfg.energy > cfg.mass)) fail(kExitConfig, "--energy must exceed the mass");
    return {*cfg.energy, std::sqrt((*cfg.energy - cfg.mass) * (*cfg.energy + cfg.mass))};
  }
  if (cfg.momentum) {
    if (!(*cfg.momentum > 0.0)) fail(kExitConfig, "--momentum must be positive");
    return {std::hypot(*cfg.momentum, cfg.mass), *cfg.momentum};
  }
  fail(kExitConfig, "one of --energy or --momentum is required");
}

nlohmann::ordered_json coupling_json(const Config& cfg) {
  return {{"a", cfg.a}, {"flux", cfg.flux}, {"mass", cfg.mass}, {"eta", cfg.eta}};
}

struct Output {
  Table table;
  nlohmann::ordered_json config;
  std::optional<nlohmann::ordered_json> validation;
  int exit_code = kExitOk;
};

// ---- commands -------------------------------------------------------------

Output cmd_spectrum(const Config& cfg) {
  const LRange lr = parse_l_range(cfg.l_range);
  if (cfg.n_max < 0) fail(kExitConfig, "--n-max must be nonnegative");
  if (cfg.model != "dirac" && cfg.model != "kg" && cfg.model != "both")
    fail(kExitConfig, "--model must be dirac, kg or both");
  const CouplingPtr c = make_coupling(cfg);

  Output o;
  o.table.columns = {"model", "l", "n", "kappa", "gamma", "e_over_m", "lambda_over_m", "regime"};
  o.config = {{"command", "spectrum"}, {"coupling", coupling_json(cfg)}, {"l_min", lr.lo}, {"l_max", lr.hi},
              {"n_max", cfg.n_max}, {"model", cfg.model}};
  if (cfg.a == 0.0) {
    std::cerr << "warning: a = 0 has no bound states; the table is empty\n";
    return o;
  }
  const double m = cfg.mass;
  bool any_channel = false;
  auto note_supercritical = [](const char* model, int l) {
    std::cerr << "note: " << model << " channel l = " << l << " is supercritical and skipped\n";
  };

  if (cfg.model != "kg") {
    abc_spectrum* raw = nullptr;
    check(abc_spectrum_create(c.get(), lr.lo, lr.hi, cfg.n_max, &raw), "spectrum");
    std::unique_ptr<abc_spectrum, decltype(&abc_spectrum_destroy)> s(raw, &abc_spectrum_destroy);
    std::size_t level = 0;
    for (std::size_t i = 0; i < abc_spectrum_channel_count(s.get()); ++i) {
      int l = 0, status = 0;
      check(abc_spectrum_channel(s.get(), i, &l, &status), "spectrum");
      abc_channel_info info{};
      check(abc_channel(c.get(), l, &info), "channel");
      if (status == ABC_CHANNEL_SUPERCRITICAL) {
        note_supercritical("dirac", l);
        continue;
      }
      any_channel = true;
      for (; level < abc_spectrum_level_count(s.get()); ++level) {
        abc_bound_state st{};
        check(abc_spectrum_level(s.get(), level, &st), "spectrum");
        if (st.l != l) break;
        o.table.rows.push_back({"dirac", static_cast<long long>(st.l), static_cast<long long>(st.n), info.kappa,
                                st.gamma, st.energy / m, st.lambda / m, "subcritical"});
      }
    }
  }

  if (cfg.model != "dirac") {
    for (int l = lr.lo; l <= lr.hi; ++l) {
      const double kappa = l + cfg.flux;
      const double disc = kappa * kappa - cfg.a * cfg.a;
      if (!(disc > 0.0)) {
        note_supercritical("kg", l);
        continue;
      }
      any_channel = true;
      for (int n = 1; n <= cfg.n_max; ++n) {
        double e = 0.0;
        check(abc_kg_energy(c.get(), l, n, &e), "kg spectrum");
        o.table.rows.push_back({"kg", static_cast<long long>(l), static_cast<long long>(n), kappa,
                                std::sqrt(disc), e / m, std::sqrt((m - e) * (m + e)) / m, "subcritical"});
      }
    }
  }

  if (!any_channel) fail(kExitDomain, "every requested channel is supercritical");
  return o;
}

Output cmd_cross_section(const Config& cfg) {
  const Kinematics k = kinematics(cfg);
  const std::vector<double> phi = parse_phi_grid(cfg.phi_grid);
  if (cfg.l_max < 0) fail(kExitConfig, "--l-max must be nonnegative");
  const double cone = abc_forward_cone();
  for (double x : phi) {
    const double wrapped = std::remainder(x, 2.0 * std::numbers::pi);
    if (std::abs(wrapped) <= cone)
      fail(kExitConfig, "--phi-grid enters the excluded forward cone |phi| <= " + csv_number(cone));
  }
  const CouplingPtr c = make_coupling(cfg);

  Output o;
  o.table.columns = {"phi", "re_f_ab", "im_f_ab", "re_f_a", "im_f_a", "dsigma", "interference", "dsigma_bracket"};
  if (cfg.partial_waves) {
    o.table.columns.push_back("re_f_pw");
    o.table.columns.push_back("im_f_pw");
  }
  o.config = {{"command", "cross-section"}, {"coupling", coupling_json(cfg)}, {"energy", k.energy},
              {"momentum", k.p}, {"phi_grid", cfg.phi_grid}};
  if (cfg.partial_waves) o.config["l_max"] = cfg.l_max;
  for (double x : phi) {
    abc_angular_sample s{};
    check(abc_total_amplitude(c.get(), x, k.p, &s), "cross-section");
    double bracket = 0.0;
    check(abc_cross_section_bracket(c.get(), x, k.p, &bracket), "cross-section");
    std::vector<Cell> row{x, s.f_ab_re, s.f_ab_im, s.f_a_re, s.f_a_im, s.dsigma, s.interference, bracket};
    if (cfg.partial_waves) {
      double re = 0.0, im = 0.0;
      check(abc_partial_wave_sum(c.get(), x, k.p, cfg.l_max, 1, &re, &im), "partial-wave sum");
      row.emplace_back(re);
      row.emplace_back(im);
    }
    o.table.rows.push_back(std::move(row));
  }
  return o;
}

Output cmd_phase_shifts(const Config& cfg) {
  const Kinematics k = kinematics(cfg);
  const LRange lr = parse_l_range(cfg.l_range);
  const CouplingPtr c = make_coupling(cfg);
  Output o;
  o.table.columns = {"l", "delta_ab", "delta_a", "delta_total", "re_s", "im_s", "abs_s", "regime"};
  o.config = {{"command", "phase-shifts"}, {"coupling", coupling_json(cfg)}, {"energy", k.energy},
              {"momentum", k.p}, {"l_min", lr.lo}, {"l_max", lr.hi}};
  for (int l = lr.lo; l <= lr.hi; ++l) {
    abc_phase_shift_record r{};
    const abc_status st = abc_phase_shift(c.get(), k.energy, l, &r);
    if (st == ABC_ERR_SUPERCRITICAL) {
      o.table.rows.push_back({static_cast<long long>(l), std::monostate{}, std::monostate{}, std::monostate{},
                              std::monostate{}, std::monostate{}, std::monostate{}, "supercritical"});
      continue;
    }
    check(st, "phase-shifts");
    o.table.rows.push_back({static_cast<long long>(l), r.delta_ab, r.delta_a, r.delta_total, r.s_re, r.s_im,
                            std::hypot(r.s_re, r.s_im), "subcritical"});
  }
  return o;
}

Output cmd_wavefunction(const Config& cfg) {
  const LRange lr = parse_l_range(cfg.l_range);
  if (lr.lo != lr.hi) fail(kExitConfig, "wavefunction takes a single --l");
  if (cfg.kind != "bound" && cfg.kind != "continuum") fail(kExitConfig, "--kind must be bound or continuum");
  std::vector<double> grid;
  if (!cfg.r_grid.empty()) grid = parse_r_grid(cfg.r_grid);
  const CouplingPtr c = make_coupling(cfg);

  Output o;
  o.table.columns = {"r", "f", "g"};
  o.config = {{"command", "wavefunction"}, {"coupling", coupling_json(cfg)}, {"kind", cfg.kind}, {"l", lr.lo}};
  if (!cfg.r_grid.empty()) o.config["r_grid"] = cfg.r_grid;

  abc_radial* raw = nullptr;
  const double* g_ptr = grid.empty() ? nullptr : grid.data();
  if (cfg.kind == "bound") {
    o.config["n"] = cfg.n;
    check(abc_radial_bound(c.get(), lr.lo, cfg.n, g_ptr, grid.size(), &raw), "wavefunction");
  } else {
    const Kinematics k = kinematics(cfg);
    o.config["energy"] = k.energy;
    check(abc_radial_continuum(c.get(), k.energy, lr.lo, g_ptr, grid.size(), &raw), "wavefunction");
  }
  std::unique_ptr<abc_radial, decltype(&abc_radial_destroy)> r(raw, &abc_radial_destroy);
  const double *gr = nullptr, *f = nullptr, *g = nullptr;
  check(abc_radial_samples(r.get(), &gr, &f, &g), "wavefunction");
  for (std::size_t i = 0; i < abc_radial_size(r.get()); ++i) o.table.rows.push_back({gr[i], f[i], g[i]});
  return o;
}

Output cmd_validate(const Config& cfg) {
  const char* env = std::getenv("ABC_TOLERANCE_PROFILE");
  const std::string profile = env && *env ? env : "default";
  abc_tolerances tol{};
  if (abc_tolerances_for_profile(profile.c_str(), &tol) != ABC_OK)
    fail(kExitConfig, "ABC_TOLERANCE_PROFILE must be 'default' or 'strict', got '" + profile + "'");
  if (cfg.tolerance) {
    if (!(*cfg.tolerance > 0.0)) fail(kExitConfig, "--tolerance must be positive");
    const double t = *cfg.tolerance;
    tol = {t, t, t, t, t, t, t, t};
  }

  unsigned mask = 0;
  if (cfg.suites == "all") {
    mask = abc_all_suites();
  } else {
    for (const std::string& name : split(cfg.suites, ',')) {
      if (name.empty()) continue;
      const unsigned bit = abc_suite_from_name(name.c_str());
      if (bit == 0u) fail(kExitConfig, "unknown suite '" + name + "'");
      mask |= bit;
    }
  }
  if (mask == 0u) fail(kExitConfig, "empty suite selection");

  abc_validation* raw = nullptr;
  check(abc_validation_run(mask, &tol, &raw), "validate");
  std::unique_ptr<abc_validation, decltype(&abc_validation_destroy)> v(raw, &abc_validation_destroy);

  Output o;
  o.table.columns = {"suite", "name", "measured", "tolerance", "passed"};
  o.config = {{"command", "validate"}, {"profile", profile}, {"suites", cfg.suites}};
  if (cfg.tolerance) o.config["tolerance"] = *cfg.tolerance;
  long long failed = 0;
  for (std::size_t i = 0; i < abc_validation_count(v.get()); ++i) {
    abc_check ch{};
    check(abc_validation_check(v.get(), i, &ch), "validate");
    o.table.rows.push_back({std::string(ch.suite), std::string(ch.name), ch.measured, ch.tolerance,
                            static_cast<long long>(ch.passed)});
    if (!ch.passed) ++failed;
  }
  const bool passed = abc_validation_passed(v.get()) != 0;
  o.validation = nlohmann::ordered_json{{"passed", passed}, {"checks", o.table.rows.size()}, {"failed", failed}};
  o.exit_code = passed ? kExitOk : kExitValidation;
  return o;
}

void emit(const Output& o, const Config& cfg, const std::string& default_format) {
  const std::string format = cfg.format.empty() ? default_format : cfg.format;
  const std::string text = format == "json" ? render_json(o.table, o.config, o.validation) : render_csv(o.table);
  if (cfg.out.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
  if (!file) fail(kExitConfig, "cannot open --out file '" + cfg.out + "'");
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!file) fail(kExitConfig, "cannot write --out file '" + cfg.out + "'");
}

void add_coupling_options(CLI::App* sub, Config& cfg) {
  sub->add_option("--a", cfg.a, "Coulomb coupling a >= 0")->required();
  sub->add_option("--flux", cfg.flux, "flux eB");
  sub->add_option("--mass", cfg.mass, "mass m > 0");
  sub->add_option("--eta", cfg.eta, "spin sign +1 or -1");
}

void add_kinematics_options(CLI::App* sub, Config& cfg) {
  auto* e = sub->add_option("--energy", cfg.energy, "total energy E > m");
  auto* p = sub->add_option("--momentum", cfg.momentum, "momentum p > 0");
  e->excludes(p);
  p->excludes(e);
}

void add_output_options(CLI::App* sub, Config& cfg) {
  sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", cfg.out, "output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Aharonov-Bohm + 2D Coulomb spectra, phase shifts and cross sections"};
  app.require_subcommand(1);
  Config cfg;

  auto* spectrum = app.add_subcommand("spectrum", "Dirac and Klein-Gordon bound levels");
  add_coupling_options(spectrum, cfg);
  spectrum->add_option("--l", cfg.l_range, "angular momentum A..B");
  spectrum->add_option("--n-max", cfg.n_max, "largest radial quantum number");
  spectrum->add_option("--model", cfg.model, "dirac, kg or both");
  add_output_options(spectrum, cfg);

  auto* cross = app.add_subcommand("cross-section", "amplitudes and differential cross section");
  add_coupling_options(cross, cfg);
  add_kinematics_options(cross, cfg);
  cross->add_option("--phi-grid", cfg.phi_grid, "start:stop:count");
  cross->add_flag("--partial-waves", cfg.partial_waves, "add the resummed partial-wave amplitude");
  cross->add_option("--l-max", cfg.l_max, "partial-wave cutoff");
  add_output_options(cross, cfg);

  auto* phase = app.add_subcommand("phase-shifts", "phase shifts and S-matrix per channel");
  add_coupling_options(phase, cfg);
  add_kinematics_options(phase, cfg);
  phase->add_option("--l", cfg.l_range, "angular momentum A..B");
  add_output_options(phase, cfg);

  auto* wave = app.add_subcommand("wavefunction", "radial components f, g");
  add_coupling_options(wave, cfg);
  add_kinematics_options(wave, cfg);
  wave->add_option("--kind", cfg.kind, "bound or continuum");
  wave->add_option("--l", cfg.l_range, "angular momentum");
  wave->add_option("--n", cfg.n, "radial quantum number (bound)");
  wave->add_option("--r-grid", cfg.r_grid, "log:start:stop:count or lin:start:stop:count");
  add_output_options(wave, cfg);

  auto* validate = app.add_subcommand("validate", "run the cross-validation suites");
  validate->add_option("--suites", cfg.suites, "comma-separated suite names or 'all'");
  validate->add_option("--tolerance", cfg.tolerance, "override every tolerance");
  add_output_options(validate, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (spectrum->parsed()) {
      const Output o = cmd_spectrum(cfg);
      emit(o, cfg, "csv");
      return o.exit_code;
    }
    if (cross->parsed()) {
      const Output o = cmd_cross_section(cfg);
      emit(o, cfg, "csv");
      return o.exit_code;
    }
    if (phase->parsed()) {
      const Output o = cmd_phase_shifts(cfg);
      emit(o, cfg, "csv");
      return o.exit_code;
    }
    if (wave->parsed()) {
      const Output o = cmd_wavefunction(cfg);
      emit(o, cfg, "csv");
      return o.exit_code;
    }
    const Output o = cmd_validate(cfg);
    emit(o, cfg, "json");
    return o.exit_code;
  } catch (const Failure& f) {
    std::cerr << "abc: " << f.message << '\n';
    return f.code;
  }
}
