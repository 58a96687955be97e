// hydrocx: information measures and complexities of D-dimensional
// hydrogenic states.
//
//   hydrocx compute  --D 3 --n 2 --mu 1,0 [--space both] [--out json|csv|table]
//   hydrocx sweep    --D 2,5,15 --n 1..8 [--family circular] [--measures lmc]
//   hydrocx validate --D 2,3,4,6 --n 4 [--tol 1e-6]
//
// Exit codes: 0 success, 1 usage error, 2 invalid state, 3 accuracy failure.

#include "hydrocx/error.hpp"
#include "hydrocx/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <optional>
#include <iostream>
#include <sstream>

namespace {

using namespace hydrocx;

constexpr int kExitUsage = 1;
constexpr int kExitInvalidState = 2;
constexpr int kExitAccuracy = 3;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) {
      out.push_back(item);
    }
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& s : split(text, ',')) {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) {
      throw std::invalid_argument("not an integer: " + s);
    }
    out.push_back(v);
  }
  return out;
}

// "3", "1..8", "1:8" or "1-8".
std::pair<int, int> parse_range(const std::string& text) {
  for (const std::string sep : {"..", ":", "-"}) {
    if (auto pos = text.find(sep); pos != std::string::npos && pos > 0) {
      return {std::stoi(text.substr(0, pos)), std::stoi(text.substr(pos + sep.size()))};
    }
  }
  const int v = std::stoi(text);
  return {v, v};
}

std::vector<Space> parse_spaces(const std::string& text) {
  if (text == "both") {
    return {Space::Position, Space::Momentum};
  }
  std::vector<Space> out;
  for (const auto& s : split(text, ',')) {
    out.push_back(parse_space(s));
  }
  return out;
}

// Config file first, then any explicit flag on top.
struct QuadratureFlags {
  std::string config;
  std::optional<double> rel_tol, abs_tol, tail_cut;
  std::optional<int> max_panels;

  void attach(CLI::App* app) {
    app->add_option("--config", config, "key=value quadrature settings")->check(CLI::ExistingFile);
    app->add_option("--rel-tol", rel_tol, "Relative tolerance of component integrals");
    app->add_option("--abs-tol", abs_tol, "Absolute tolerance of component integrals");
    app->add_option("--max-panels", max_panels, "Panel budget per integral");
    app->add_option("--tail-cut", tail_cut, "Relative tail bound for semi-infinite ranges");
  }

  QuadratureSpec resolve() const {
    QuadratureSpec q = config.empty() ? QuadratureSpec{} : report::load_config(config);
    if (rel_tol) q.rel_tol = *rel_tol;
    if (abs_tol) q.abs_tol = *abs_tol;
    if (max_panels) q.max_panels = *max_panels;
    if (tail_cut) q.tail_cut = *tail_cut;
    q.validate();
    return q;
  }
};

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path);
  }
  out << text;
}

struct ComputeArgs {
  int dim = 3;
  int n = 1;
  std::string mu;
  bool circular = false;
  double Z = 1.0;
  std::string space = "both";
  std::string out = "json";
  QuadratureFlags quad;
};

int run_compute(const ComputeArgs& a) {
  HyperState state;
  try {
    if (a.circular) {
      state = circular_state(a.n, a.dim);
    } else {
      state = validate_state(a.dim, a.n, parse_int_list(a.mu));
    }
  } catch (const StateError& e) {
    std::cerr << "invalid state: " << e.what() << "\n";
    return kExitInvalidState;
  }
  const auto r =
      report::compute_state(state, NuclearCharge{a.Z}, parse_spaces(a.space), a.quad.resolve());
  if (a.out == "json") {
    std::cout << report::to_json(r).dump(2) << "\n";
  } else if (a.out == "csv") {
    std::cout << report::to_csv(r);
  } else {
    std::cout << report::to_table(r);
  }
  return 0;
}

struct SweepArgs {
  std::string dims = "3";
  std::string n = "1..8";
  std::string family = "circular";
  std::string mu;
  std::string space = "position";
  std::string measures = "lmc";
  double Z = 1.0;
  QuadratureFlags quad;
  std::string output;
  int threads = 0;
};

int run_sweep(const SweepArgs& a) {
  report::SweepRequest req;
  req.dims = parse_int_list(a.dims);
  std::tie(req.n_min, req.n_max) = parse_range(a.n);
  req.family = a.family == "explicit" ? report::Family::Explicit : report::Family::Circular;
  for (const auto& chain : split(a.mu, ';')) {
    req.mu_list.push_back(parse_int_list(chain));
  }
  req.spaces = parse_spaces(a.space);
  req.measures.clear();
  for (const auto& m : split(a.measures, ',')) {
    req.measures.push_back(report::parse_measure(m));
  }
  req.Z = a.Z;
  const int threads = a.threads > 0 ? a.threads : report::default_threads();
  const auto rows = report::run_sweep(req, a.quad.resolve(), threads);
  write_output(report::sweep_csv(rows), a.output);
  return 0;
}

struct ValidateArgs {
  std::string dims = "2,3,4,6";
  int n_max = 4;
  double tol = 1e-6;
  double Z = 1.0;
  std::string out = "table";
  QuadratureFlags quad;
  std::string output;
  int threads = 0;
};

int run_validate(const ValidateArgs& a) {
  report::ValidationRequest req;
  req.dims = parse_int_list(a.dims);
  req.n_max = a.n_max;
  req.gate = a.tol;
  req.Z = a.Z;
  const int threads = a.threads > 0 ? a.threads : report::default_threads();
  const auto rows = report::run_validation(req, a.quad.resolve(), threads);
  if (a.out == "csv") {
    write_output(report::validation_csv(rows), a.output);
  } else if (a.out == "json") {
    write_output(report::validation_json(rows).dump(2) + "\n", a.output);
  } else {
    write_output(report::validation_table(rows), a.output);
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Information-theoretic measures and complexities of D-dimensional hydrogenic states"};
  app.require_subcommand(1);

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "Measures and complexities of one state");
  compute->add_option("--D", ca.dim, "Dimension (>= 2)")->required();
  compute->add_option("--n", ca.n, "Principal quantum number")->required();
  compute->add_option("--mu", ca.mu, "Hyperangular chain mu_1,...,mu_{D-1}");
  compute->add_flag("--circular", ca.circular, "Use the circular state mu_i = n-1");
  compute->add_option("--Z", ca.Z, "Nuclear charge");
  compute->add_option("--space", ca.space, "position | momentum | both")
      ->check(CLI::IsMember({"position", "momentum", "both"}));
  compute->add_option("--out", ca.out, "json | csv | table")->check(CLI::IsMember({"json", "csv", "table"}));
  ca.quad.attach(compute);

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "CSV sweep over dimensions and n");
  sweep->add_option("--D", sa.dims, "Comma-separated dimensions");
  sweep->add_option("--n", sa.n, "n range, e.g. 1..8");
  sweep->add_option("--family", sa.family, "circular | explicit")
      ->check(CLI::IsMember({"circular", "explicit"}));
  sweep->add_option("--mu", sa.mu, "Explicit chains separated by ';', e.g. '1,0;1,1'");
  sweep->add_option("--space", sa.space, "position,momentum or both");
  sweep->add_option("--measures", sa.measures,
                    "Subset of lmc,fs,cr,shannon,fisher,variance,disequilibrium");
  sweep->add_option("--Z", sa.Z, "Nuclear charge");
  sa.quad.attach(sweep);
  sweep->add_option("--output,-o", sa.output, "Write CSV here instead of stdout");
  sweep->add_option("--threads", sa.threads, "Worker threads (default: HYDROCX_THREADS or all cores)");

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate", "Closed forms versus brute-force quadrature");
  validate->add_option("--D", va.dims, "Comma-separated dimensions");
  validate->add_option("--n", va.n_max, "Largest principal quantum number");
  validate->add_option("--tol", va.tol, "Relative agreement gate");
  validate->add_option("--Z", va.Z, "Nuclear charge");
  validate->add_option("--out", va.out, "table | csv | json")->check(CLI::IsMember({"table", "csv", "json"}));
  va.quad.attach(validate);
  validate->add_option("--output,-o", va.output, "Write here instead of stdout");
  validate->add_option("--threads", va.threads, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*compute) {
      if (!ca.circular && ca.mu.empty() && ca.dim > 1) {
        std::cerr << "compute: give --mu or --circular\n";
        return kExitUsage;
      }
      return run_compute(ca);
    }
    if (*sweep) {
      return run_sweep(sa);
    }
    return run_validate(va);
  } catch (const StateError& e) {
    std::cerr << "invalid state: " << e.what() << "\n";
    return kExitInvalidState;
  } catch (const AccuracyError& e) {
    std::cerr << "accuracy failure: " << e.what() << "\n";
    return kExitAccuracy;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
