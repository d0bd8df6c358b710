// Copyright 2026 The qgdec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qgdec command-line front end.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qgdec/analysis.hpp"
#include "qgdec/code.hpp"
#include "qgdec/decoder.hpp"
#include "qgdec/errors.hpp"
#include "qgdec/graph.hpp"
#include "qgdec/sim.hpp"
#include "qgdec/syndrome.hpp"

namespace {

using namespace qgdec;

constexpr int kUserError = 2;
constexpr int kInternalError = 3;

// Thrown for bad command-line values that CLI11 cannot check on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double to_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("invalid number '" + s + "' in " + what);
  }
}

std::pair<double, double> parse_range(const std::string& s, const std::string& what) {
  const auto parts = split(s, ':');
  if (parts.size() != 2) throw UsageError(what + " must look like a:b");
  return {to_double(parts[0], what), to_double(parts[1], what)};
}

// a:b:step, inclusive of b up to rounding.
std::vector<double> parse_grid(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 3) throw UsageError("--p-grid must look like a:b:step");
  const double a = to_double(parts[0], "--p-grid");
  const double b = to_double(parts[1], "--p-grid");
  const double step = to_double(parts[2], "--p-grid");
  if (!(step > 0) || b < a) throw UsageError("--p-grid needs a <= b and step > 0");
  const auto count = static_cast<long>(std::floor((b - a) / step + 1e-9)) + 1;
  std::vector<double> grid;
  for (long i = 0; i < count; ++i) {
    grid.push_back(std::round((a + static_cast<double>(i) * step) * 1e12) / 1e12);
  }
  return grid;
}

unsigned default_workers() {
  if (const char* env = std::getenv("QGDEC_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("QGDEC_THREADS must be a positive integer, got '") + env + "'");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

// Banner lines go to stderr so stdout stays machine readable.
void banner(const std::string& command, const std::vector<std::pair<std::string, std::string>>& fields) {
  std::cerr << "# qgdec " << command;
  for (const auto& [k, v] : fields) std::cerr << " " << k << "=" << v;
  std::cerr << "\n";
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

// --t value: "auto" or a nonnegative integer.
std::optional<std::size_t> parse_t(const std::string& t) {
  if (t == "auto") return std::nullopt;
  try {
    std::size_t used = 0;
    const long v = std::stol(t, &used);
    if (used == t.size() && v >= 0) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  throw UsageError("--t must be 'auto' or a nonnegative integer");
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

struct DecodeFlags {
  std::string t = "auto";
  bool no_prune = false;
  bool no_structured = false;
  bool mld = false;
  bool css = false;

  void add(CLI::App* cmd) {
    cmd->add_option("--t", t, "Weight bound T: 'auto' for (d-1)/2 or an integer");
    cmd->add_flag("--no-prune", no_prune, "Disable feed-forward pruning");
    cmd->add_flag("--no-structured", no_structured, "Disable layer-ordered enumeration");
    cmd->add_flag("--mld", mld, "Exhaustive search, T = N");
    cmd->add_flag("--css", css, "Split CSS decoding on bipartite graphs");
  }

  DecodeConfig config() const {
    DecodeConfig cfg;
    cfg.T = parse_t(t);
    cfg.prune = !no_prune;
    cfg.structured = !no_structured;
    cfg.exhaustive_mld = mld;
    cfg.css_fastpath = css;
    return cfg;
  }

  std::vector<std::pair<std::string, std::string>> fields(const StabilizerCode& code) const {
    const auto cfg = config();
    return {{"T", std::to_string(resolve_bound(code, cfg))},
            {"prune", bool_str(cfg.prune)},
            {"structured", bool_str(cfg.structured)},
            {"mld", bool_str(cfg.exhaustive_mld)},
            {"css", bool_str(cfg.css_fastpath)}};
  }
};

void print_code_summary(const StabilizerCode& code) {
  std::cout << "name: " << code.name << "\n";
  std::cout << "parameters: [[" << code.n << "," << code.k << "," << code.d << "]]\n";
  std::cout << "css: " << bool_str(code.css()) << "\n";
  std::cout << "t: " << code.t() << "\n";
  std::cout << "t/N: " << fmt(static_cast<double>(code.t()) / static_cast<double>(code.n)) << "\n";
  if (code.k == 1) {
    const auto s = singleton_report(code);
    std::cout << "t/N bound: " << fmt(s.bound) << (s.violated ? " (exceeded)" : "") << "\n";
  }
  try {
    const auto f = correctable_fraction(code);
    std::cout << "correctable fraction: " << f.str() << " = " << fmt(f.value()) << "\n";
  } catch (const std::overflow_error&) {
    std::cout << "correctable fraction: overflow\n";
  }
  try {
    const auto ext = extract(code);
    std::cout << "search space (T=t): " << search_space(ext, code.t(), false) << "\n";
    if (code.css() && ext.bipartite()) {
      std::cout << "search space css (T=t): " << search_space(ext, code.t(), true) << "\n";
    }
  } catch (const std::overflow_error&) {
    std::cout << "search space (T=t): overflow\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"qgdec: graph-based decoding of stabilizer codes"};
  app.require_subcommand(1);

  // codes
  auto* codes = app.add_subcommand("codes", "List, validate and inspect codes");
  codes->require_subcommand(1);
  auto* codes_list = codes->add_subcommand("list", "List built-in codes");
  std::string validate_path;
  auto* codes_validate = codes->add_subcommand("validate", "Validate a code file");
  codes_validate->add_option("file", validate_path, "Code file")->required();
  std::string distance_name;
  std::size_t wmax = 3;
  std::uint64_t distance_budget = 500'000'000ULL;
  auto* codes_distance = codes->add_subcommand("distance", "Exhaustive distance check");
  codes_distance->add_option("code", distance_name, "Built-in name or file")->required();
  codes_distance->add_option("--wmax", wmax, "Largest weight to enumerate")->capture_default_str();
  codes_distance->add_option("--budget", distance_budget, "Enumeration budget")->capture_default_str();
  std::string show_name;
  auto* codes_show = codes->add_subcommand("show", "Print a code and its summary");
  codes_show->add_option("code", show_name, "Built-in name or file")->required();

  // extract
  auto* ex = app.add_subcommand("extract", "Extract the graph of a code");
  std::string ex_code, ex_json, ex_dot, ex_left;
  ex->add_option("--code", ex_code, "Built-in name or file")->required();
  ex->add_option("--json", ex_json, "Write graph JSON here");
  ex->add_option("--dot", ex_dot, "Write graph DOT here");
  ex->add_option("--left", ex_left, "Left partition as 1-based qubits, e.g. 1,5,7");

  // decode
  auto* dec = app.add_subcommand("decode", "Decode one stabilizer syndrome");
  std::string dec_code, dec_syndrome;
  DecodeFlags dec_flags;
  dec->add_option("--code", dec_code, "Built-in name or file")->required();
  dec->add_option("--syndrome", dec_syndrome, "Stabilizer syndrome bits, e.g. 1001")->required();
  dec_flags.add(dec);

  // simulate / sweep share flags
  struct SimFlags {
    std::string codes;
    std::string noise;
    std::string p_grid;
    std::uint64_t failures = 100;
    std::uint64_t seed = 1;
    std::uint64_t max_shots = 100'000'000;
    unsigned workers = 0;
    std::string csv;
    bool force_header = false;
    bool long_mode = false;
    DecodeFlags decode;
  };
  SimFlags sim_flags;
  auto add_sim = [&](CLI::App* cmd) {
    cmd->add_option("--code", sim_flags.codes, "Comma-separated code names")->required();
    cmd->add_option("--noise", sim_flags.noise,
                    "depolarizing:p=..., bitflip:p=..., pxyz:a,b,c, or a bare kind with --p-grid")
        ->required();
    cmd->add_option("--p-grid", sim_flags.p_grid, "Error rates a:b:step");
    cmd->add_option("--failures", sim_flags.failures, "Logical failures per point (M_L)")->capture_default_str();
    cmd->add_option("--seed", sim_flags.seed, "Base seed")->capture_default_str();
    cmd->add_option("--max-shots", sim_flags.max_shots, "Shot cap per point")->capture_default_str();
    cmd->add_option("--workers", sim_flags.workers, "Worker threads (default: QGDEC_THREADS or all cores)");
    cmd->add_option("--csv", sim_flags.csv, "Append rows to this CSV");
    cmd->add_flag("--force-header", sim_flags.force_header, "Truncate the CSV and rewrite its header");
    cmd->add_flag("--long", sim_flags.long_mode,
                  "Full-scale preset: M_L = 10^4, 10^10 shot cap, p grid 0.06:0.14:0.005 unless given");
    sim_flags.decode.add(cmd);
  };
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo logical error rate");
  add_sim(simulate);
  auto* sweep = app.add_subcommand("sweep", "Monte Carlo over codes and a p grid");
  add_sim(sweep);

  // collapse
  auto* col = app.add_subcommand("collapse", "Finite-size collapse fit of a sweep CSV");
  std::string col_csv, col_window, col_out;
  double col_guess = -1;
  unsigned col_degree = 3;
  col->add_option("--csv", col_csv, "Sweep CSV")->required();
  col->add_option("--window", col_window, "Fit window a:b");
  col->add_option("--p-c-guess", col_guess, "Window defaults to guess +/- 0.03");
  col->add_option("--degree", col_degree, "Polynomial degree")->capture_default_str();
  col->add_option("--out", col_out, "Also write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUserError;
  }

  if (*codes_list) {
    banner("codes list", {});
    for (const auto& name : builtin_names()) std::cout << name << "\n";
    return 0;
  }
  if (*codes_validate) {
    banner("codes validate", {{"file", validate_path}});
    try {
      const auto code = load_code_file(validate_path);
      std::cout << "ok " << code.name << " [[" << code.n << "," << code.k << "," << code.d << "]]\n";
      return 0;
    } catch (const Error& e) {
      std::cerr << "invalid: " << validate_path << ": " << e.what() << "\n";
      return kUserError;
    }
  }
  if (*codes_distance) {
    const auto code = resolve_code(distance_name);
    banner("codes distance", {{"code", code.name}, {"wmax", std::to_string(wmax)},
                              {"budget", std::to_string(distance_budget)}});
    const auto r = verify_distance(code, wmax, distance_budget);
    if (r.exact) {
      std::cout << r.weight << "\n";
      std::cerr << "witness: " << r.witness.str() << "\n";
    } else {
      std::cout << ">" << wmax << "\n";
    }
    if (r.exact && r.weight != code.d) {
      std::cerr << "claimed distance " << code.d << " differs\n";
      return kUserError;
    }
    return 0;
  }
  if (*codes_show) {
    const auto code = resolve_code(show_name);
    banner("codes show", {{"code", code.name}});
    std::cout << format_code(code);
    print_code_summary(code);
    return 0;
  }

  if (*ex) {
    const auto code = resolve_code(ex_code);
    std::vector<std::size_t> left;
    for (const auto& item : split(ex_left, ',')) {
      const double v = to_double(item, "--left");
      if (v < 1 || v > static_cast<double>(code.n) || v != std::floor(v)) {
        throw UsageError("--left entries must be qubits 1.." + std::to_string(code.n));
      }
      left.push_back(static_cast<std::size_t>(v) - 1);
    }
    banner("extract", {{"code", code.name}, {"left", ex_left.empty() ? "auto" : ex_left},
                       {"json", ex_json.empty() ? "-" : ex_json}, {"dot", ex_dot.empty() ? "-" : ex_dot}});
    const auto ext = ex_left.empty() ? extract(code) : extract(code, left);
    verify_extraction(code, ext);
    auto one_based = [](const std::vector<std::size_t>& v) {
      std::vector<std::string> s;
      for (auto i : v) s.push_back(std::to_string(i + 1));
      return join(s, ",");
    };
    std::cout << "nodes: " << ext.size() << "\n";
    std::cout << "left: " << ext.left_nodes.size() << " [" << one_based(ext.left_nodes) << "]\n";
    std::cout << "right: " << ext.right_nodes.size() << " [" << one_based(ext.right_nodes) << "]\n";
    std::cout << "phase nodes: " << ext.phase_nodes().size() << " [" << one_based(ext.phase_nodes()) << "]\n";
    std::cout << "edges: " << ext.edge_count() << "\n";
    std::cout << "bipartite: " << bool_str(ext.bipartite()) << "\n";
    if (!ex_json.empty()) std::ofstream(ex_json) << graph_json(ext);
    if (!ex_dot.empty()) std::ofstream(ex_dot) << graph_dot(ext, code.name);
    return 0;
  }

  if (*dec) {
    const auto code = resolve_code(dec_code);
    const auto cfg = dec_flags.config();
    auto fields = dec_flags.fields(code);
    fields.insert(fields.begin(), {{"code", code.name}, {"syndrome", dec_syndrome}});
    banner("decode", fields);
    const auto beta = parse_syndrome(dec_syndrome, code.n - code.k);
    const auto ext = extract(code);
    const auto r = cfg.css_fastpath ? decode_css(code, ext, beta, cfg) : decode(code, ext, beta, cfg);
    std::vector<std::string> bw;
    for (auto w : r.branch_weights) bw.push_back(std::to_string(w));
    std::cout << "correction: " << r.correction.str() << "\n";
    std::cout << "weight: " << r.weight << "\n";
    std::cout << "branch: " << r.branch << "\n";
    std::cout << "branch_weights: " << join(bw, ",") << "\n";
    std::cout << "explored: " << r.explored << "\n";
    std::cout << "bounded: " << bool_str(r.bounded) << "\n";
    return 0;
  }

  if (*simulate || *sweep) {
    auto f = sim_flags;
    if (f.long_mode) {
      f.failures = 10'000;
      f.max_shots = 10'000'000'000ULL;
      if (f.p_grid.empty() && f.noise.find(':') == std::string::npos) f.p_grid = "0.06:0.14:0.005";
    }
    const unsigned workers = f.workers ? f.workers : default_workers();
    const auto cfg_decode = f.decode.config();
    // Either a full noise spec, or a bare kind combined with a p grid.
    std::vector<NoiseModel> models;
    if (!f.p_grid.empty()) {
      const auto kind = f.noise.substr(0, f.noise.find(':'));
      for (double p : parse_grid(f.p_grid)) models.push_back(noise_preset(kind, p));
    } else {
      if (f.noise.find(':') == std::string::npos) throw UsageError("--noise needs a rate or --p-grid");
      models.push_back(parse_noise(f.noise));
    }
    const auto names = split(f.codes, ',');
    if (names.empty()) throw UsageError("--code is empty");
    std::vector<StabilizerCode> code_list;
    for (const auto& name : names) code_list.push_back(resolve_code(name));
    banner(*simulate ? "simulate" : "sweep",
           {{"code", f.codes}, {"noise", f.noise}, {"p-grid", f.p_grid.empty() ? "-" : f.p_grid},
            {"failures", std::to_string(f.failures)}, {"seed", std::to_string(f.seed)},
            {"max-shots", std::to_string(f.max_shots)}, {"workers", std::to_string(workers)},
            {"t", f.decode.t}, {"prune", bool_str(cfg_decode.prune)},
            {"structured", bool_str(cfg_decode.structured)}, {"mld", bool_str(cfg_decode.exhaustive_mld)},
            {"css", bool_str(cfg_decode.css_fastpath)}, {"csv", f.csv.empty() ? "-" : f.csv},
            {"force-header", bool_str(f.force_header)}});
    bool first_write = true;
    if (f.csv.empty()) std::cout << csv_header() << "\n";
    for (const auto& code : code_list) {
      const auto ext = extract(code);
      const std::size_t T = resolve_bound(code, cfg_decode);
      for (const auto& model : models) {
        RunConfig rc;
        rc.seed = f.seed;
        rc.target_failures = f.failures;
        rc.max_shots = f.max_shots;
        rc.workers = workers;
        rc.decode = cfg_decode;
        const auto res = run_until_failures(code, ext, model, rc);
        CsvRecord rec{code.name, code.n, code.k, code.d, model.kind, model.p(), T, f.seed, res};
        std::cerr << code.name << " p=" << fmt(model.p()) << " M=" << res.shots << " ML=" << res.failures
                  << " pL=" << fmt(res.p_L) << " +/- " << fmt(res.std_error)
                  << (res.cap_reached ? " [cap reached]" : "") << "\n";
        if (f.csv.empty()) {
          std::cout << csv_row(rec) << "\n";
        } else {
          append_csv(f.csv, {rec}, f.force_header && first_write);
          first_write = false;
        }
      }
    }
    return 0;
  }

  if (*col) {
    CollapseConfig cc;
    cc.degree = col_degree;
    if (!col_window.empty()) {
      std::tie(cc.window_lo, cc.window_hi) = parse_range(col_window, "--window");
    } else if (col_guess > 0) {
      cc.window_lo = col_guess - 0.03;
      cc.window_hi = col_guess + 0.03;
    } else {
      throw UsageError("collapse needs --window or --p-c-guess");
    }
    banner("collapse", {{"csv", col_csv}, {"window", fmt(cc.window_lo) + ":" + fmt(cc.window_hi)},
                        {"degree", std::to_string(cc.degree)}});
    const auto fit = collapse_fit(read_sweep_csv(col_csv), cc);
    const auto report = fit_json(fit);
    std::cout << report;
    if (!col_out.empty()) std::ofstream(col_out) << report;
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUserError;
  } catch (const ExtractionInvalid& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const SingularError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const qgdec::Error& e) {
    // Bad inputs: parse, validation, syndrome length, missing data, budgets.
    std::cerr << "error: " << e.what() << "\n";
    return kUserError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUserError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}
