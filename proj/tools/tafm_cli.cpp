// tafm command line: spinon/holon dispersion sampling, band summaries, the
// operator verification sweep and Brillouin-zone data export.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tafm/dispersion.hpp"
#include "tafm/report_io.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int fail_usage(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kExitUsage;
}

int fail_io(const std::filesystem::path& p) {
  std::cerr << "error: cannot write output file '" << p.string() << "'\n";
  return kExitIo;
}

// Default outputs land in $TAFM_OUT_DIR (falling back to the working
// directory); an explicit --out is used verbatim.
std::filesystem::path resolve_output(const std::string& out, const char* default_name) {
  if (!out.empty()) return out;
  const char* dir = std::getenv("TAFM_OUT_DIR");
  return std::filesystem::path(dir ? dir : ".") / default_name;
}

bool write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream f(p, std::ios::binary);
  if (!f) return false;
  f << content;
  f.flush();
  return f.good();
}

bool check_finite(double v, const char* field, std::string& err) {
  if (std::isfinite(v)) return true;
  err = std::string(field) + " must be finite";
  return false;
}

std::optional<tafm::KPath> parse_path(const std::string& spec, int samples, std::string& err) {
  tafm::KPath path;
  path.samples_per_segment = samples;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    const auto& named = tafm::high_symmetry_points();
    if (auto it = named.find(token); it != named.end()) {
      path.waypoints.emplace_back(token, it->second);
      continue;
    }
    const std::size_t colon = token.find(':');
    if (colon != std::string::npos) {
      try {
        std::size_t used1 = 0, used2 = 0;
        const std::string xs = token.substr(0, colon), ys = token.substr(colon + 1);
        const double kx = std::stod(xs, &used1);
        const double ky = std::stod(ys, &used2);
        if (used1 == xs.size() && used2 == ys.size()) {
          path.waypoints.emplace_back(token, tafm::KVector(kx, ky));
          continue;
        }
      } catch (const std::exception&) {
      }
    }
    err = "path: unknown waypoint '" + token + "' (named points: G, K, K2, M; or kx:ky)";
    return std::nullopt;
  }
  if (path.waypoints.size() < 2) {
    err = "path must contain at least 2 waypoints";
    return std::nullopt;
  }
  return path;
}

ordered_json k_to_json(const tafm::KVector& k) { return ordered_json::array({k.kx, k.ky}); }

struct BandConfig {
  std::string band;
  double J = 1.0, S = 0.5;
  double t = 1.0, t_prime = 0.0, mu = 0.0;
};

int validate_band_config(const BandConfig& c, std::string& err) {
  if (c.band != "spinon" && c.band != "holon") {
    err = "band must be 'spinon' or 'holon'";
    return kExitUsage;
  }
  if (!check_finite(c.J, "J", err) || !check_finite(c.S, "S", err) ||
      !check_finite(c.t, "t", err) || !check_finite(c.t_prime, "tprime", err) ||
      !check_finite(c.mu, "mu", err))
    return kExitUsage;
  return kExitOk;
}

std::string band_param_string(const BandConfig& c) {
  if (c.band == "spinon") return "J=" + fmt17(c.J) + " S=" + fmt17(c.S);
  return "t=" + fmt17(c.t) + " tprime=" + fmt17(c.t_prime) + " mu=" + fmt17(c.mu);
}

ordered_json band_param_json(const BandConfig& c) {
  ordered_json j;
  if (c.band == "spinon") {
    j["J"] = c.J;
    j["S"] = c.S;
  } else {
    j["t"] = c.t;
    j["tprime"] = c.t_prime;
    j["mu"] = c.mu;
  }
  return j;
}

std::vector<tafm::BandSample> evaluate_band(const BandConfig& c, const tafm::KPath& path) {
  if (c.band == "spinon") return tafm::sample_band(path, tafm::SpinonParams{c.J, c.S});
  return tafm::sample_band(path, tafm::HolonParams{c.t, c.t_prime, c.mu});
}

int cmd_dispersion(const BandConfig& c, const std::string& path_spec, int n,
                   const std::string& out, std::string format,
                   const std::string& plot_script) {
  std::string err;
  if (validate_band_config(c, err) != kExitOk) return fail_usage(err);
  if (n < 1)
    return fail_usage("samples_per_segment (--n) must be a positive integer");
  if (format.empty()) format = "csv";
  if (format != "csv" && format != "json")
    return fail_usage("format must be 'csv' or 'json'");
  if (!plot_script.empty() && format != "csv")
    return fail_usage("plot: the plotting script references a csv output");
  const auto path = parse_path(path_spec, n, err);
  if (!path) return fail_usage(err);

  const std::vector<tafm::BandSample> samples = evaluate_band(c, *path);
  std::string content;
  if (format == "csv") {
    std::ostringstream os;
    os << "# tafm dispersion\n";
    os << "# band=" << c.band << " " << band_param_string(c) << "\n";
    os << "# path=" << path_spec << " n=" << n << "\n";
    os << "arclength,kx,ky,value\n";
    for (const tafm::BandSample& s : samples)
      os << fmt17(s.arclength) << ',' << fmt17(s.k.kx) << ',' << fmt17(s.k.ky) << ','
         << fmt17(s.value) << '\n';
    content = os.str();
  } else {
    ordered_json j;
    j["band"] = c.band;
    j["params"] = band_param_json(c);
    j["path"] = path_spec;
    j["n"] = n;
    ordered_json arr = ordered_json::array();
    for (const tafm::BandSample& s : samples)
      arr.push_back({{"arclength", s.arclength},
                     {"kx", s.k.kx},
                     {"ky", s.k.ky},
                     {"value", s.value}});
    j["samples"] = std::move(arr);
    content = j.dump(2) + "\n";
  }
  const auto p = resolve_output(out, format == "json" ? "dispersion.json" : "dispersion.csv");
  if (!write_file(p, content)) return fail_io(p);
  std::cout << p.string() << "\n";
  if (!plot_script.empty()) {
    std::ostringstream os;
    os << "# gnuplot script generated by tafm; run: gnuplot -p " << plot_script << "\n";
    os << "set datafile separator ','\n";
    os << "set xlabel 'arclength'\n";
    os << "set ylabel 'energy'\n";
    os << "plot '" << p.string() << "' using 1:4 with lines title '" << c.band << "'\n";
    const std::filesystem::path sp = plot_script;
    if (!write_file(sp, os.str())) return fail_io(sp);
    std::cout << sp.string() << "\n";
  }
  return kExitOk;
}

int cmd_summary(const BandConfig& c, int grid, const std::string& out,
                const std::string& format) {
  std::string err;
  if (validate_band_config(c, err) != kExitOk) return fail_usage(err);
  if (grid < 8) return fail_usage("grid_resolution (--grid) must be at least 8");
  if (!format.empty() && format != "json")
    return fail_usage("format: summary output is json only");

  const tafm::BandSummary s =
      c.band == "spinon" ? tafm::band_summary(tafm::SpinonParams{c.J, c.S}, grid)
                         : tafm::band_summary(tafm::HolonParams{c.t, c.t_prime, c.mu}, grid);
  ordered_json j;
  j["band"] = c.band;
  j["min"] = s.min_value;
  j["max"] = s.max_value;
  j["bandwidth"] = s.bandwidth;
  j["argmin"] = k_to_json(s.argmin_k);
  j["argmax"] = k_to_json(s.argmax_k);
  j["grid_resolution"] = grid;
  j["params"] = band_param_json(c);

  const auto p = resolve_output(out, "summary.json");
  if (!write_file(p, j.dump(2) + "\n")) return fail_io(p);
  std::cout << p.string() << "\n";
  return kExitOk;
}

int cmd_verify(double spin_filter, const std::string& check, const std::string& out,
               const std::string& format) {
  if (!format.empty() && format != "json")
    return fail_usage("format: verify output is json only");
  tafm::SweepOptions opt;
  opt.check = check;
  if (spin_filter > 0.0) {
    if (2.0 * spin_filter != std::round(2.0 * spin_filter))
      return fail_usage("S must be a positive half-integer");
    opt.spins = {spin_filter};
  }
  std::vector<tafm::VerificationReport> reports;
  try {
    reports = tafm::run_verification_sweep(opt);
  } catch (const std::invalid_argument& e) {
    return fail_usage(e.what());
  }
  bool all_passed = true;
  for (const tafm::VerificationReport& r : reports) {
    all_passed = all_passed && r.passed;
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.check_name;
    for (const auto& [k, v] : r.parameters)
      if (k == "S" || k == "frames" || k == "labels") std::cout << " " << k << "=" << v;
    std::cout << " max_deviation=" << fmt17(r.max_deviation) << "\n";
  }
  const auto p = resolve_output(out, "verify.json");
  if (!write_file(p, tafm::reports_to_json(reports).dump(2) + "\n")) return fail_io(p);
  std::cout << p.string() << "\n";
  return all_passed ? kExitOk : kExitVerifyFailed;
}

int cmd_bz(const std::string& out, const std::string& format) {
  if (!format.empty() && format != "json")
    return fail_usage("format: bz output is json only");
  ordered_json j;
  ordered_json nn = ordered_json::array();
  for (const tafm::Vec2& v : tafm::nn_vectors().vectors) nn.push_back({v.x, v.y});
  ordered_json nnn = ordered_json::array();
  for (const tafm::Vec2& v : tafm::nnn_vectors().vectors) nnn.push_back({v.x, v.y});
  j["nn_vectors"] = std::move(nn);
  j["nnn_vectors"] = std::move(nnn);
  const auto [b1, b2] = tafm::reciprocal_basis();
  j["reciprocal_basis"] = {{"b1", k_to_json(b1)}, {"b2", k_to_json(b2)}};
  ordered_json pts;
  for (const char* name : {"G", "K", "K2", "M"})
    pts[name] = k_to_json(tafm::high_symmetry_points().at(name));
  j["high_symmetry_points"] = std::move(pts);

  const auto p = resolve_output(out, "bz.json");
  if (!write_file(p, j.dump(2) + "\n")) return fail_io(p);
  std::cout << p.string() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spinon/holon dispersions and HP operator verification on the "
               "triangular-lattice antiferromagnet"};
  app.require_subcommand(1);

  BandConfig band_cfg;
  std::string path_spec = "G,K,M,G";
  std::string out, format, check, plot_script;
  int n = 100;
  int grid = 64;
  double spin_filter = -1.0;

  auto add_band_options = [&](CLI::App* cmd) {
    cmd->add_option("--band", band_cfg.band, "band to evaluate: spinon|holon")->required();
    cmd->add_option("--J", band_cfg.J, "NN exchange (spinon band)");
    cmd->add_option("--S", band_cfg.S, "spin magnitude (spinon band)");
    cmd->add_option("--t", band_cfg.t, "NN hopping (holon band)");
    cmd->add_option("--tprime", band_cfg.t_prime, "NNN hopping (holon band)");
    cmd->add_option("--mu", band_cfg.mu, "chemical potential (holon band)");
    cmd->add_option("--out", out, "output file path");
    cmd->add_option("--format", format, "output format");
  };

  CLI::App* disp = app.add_subcommand("dispersion", "Sample a band along a k-path");
  add_band_options(disp);
  disp->add_option("--path", path_spec, "comma-separated waypoints (G,K,K2,M or kx:ky)");
  disp->add_option("--n", n, "samples per path segment");
  disp->add_option("--plot", plot_script, "also write a gnuplot script referencing the csv");

  CLI::App* summary = app.add_subcommand("summary", "Band extrema and bandwidth over the zone");
  add_band_options(summary);
  summary->add_option("--grid", grid, "grid resolution for the zone scan (>= 8)");

  CLI::App* verify = app.add_subcommand("verify", "Run the operator verification sweep");
  verify->add_option("--S", spin_filter, "restrict the sweep to one spin value");
  verify->add_option("--check", check, "run a single check family");
  verify->add_option("--out", out, "output file path");
  verify->add_option("--format", format, "output format");

  CLI::App* bz = app.add_subcommand("bz", "Export neighbor shells and zone data");
  bz->add_option("--out", out, "output file path");
  bz->add_option("--format", format, "output format");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (disp->parsed()) return cmd_dispersion(band_cfg, path_spec, n, out, format, plot_script);
    if (summary->parsed()) return cmd_summary(band_cfg, grid, out, format);
    if (verify->parsed()) return cmd_verify(spin_filter, check, out, format);
    if (bz->parsed()) return cmd_bz(out, format);
  } catch (const std::exception& e) {
    return fail_usage(e.what());
  }
  return fail_usage("no command given");
}
