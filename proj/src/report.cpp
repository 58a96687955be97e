#include "hydrocx/report.hpp"

#include "hydrocx/error.hpp"
#include "hydrocx/measures.hpp"
#include "hydrocx/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace hydrocx::report {

namespace {

// Runs job(i) for i in [0, count) on a small pool; each job writes only its
// own slot, so output order never depends on completion order.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& job) {
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      job(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        job(i);
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
}

double round15(double x) {
  if (!std::isfinite(x)) {
    return x;
  }
  return std::strtod(format_number(x).c_str(), nullptr);
}

nlohmann::json number(double x) {
  if (!std::isfinite(x)) {
    return nullptr;
  }
  return round15(x);
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    out += c;
    if (c == '"') {
      out += '"';
    }
  }
  return out + "\"";
}

} // namespace

std::string format_number(double x) {
  if (std::isnan(x)) {
    return "nan";
  }
  if (std::isinf(x)) {
    return x > 0 ? "inf" : "-inf";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

int default_threads() {
  if (const char* env = std::getenv("HYDROCX_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) {
      return n;
    }
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

QuadratureSpec load_config(const std::filesystem::path& path, QuadratureSpec base) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open config file " + path.string());
  }
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    try {
      std::size_t used = 0;
      if (key == "rel_tol") {
        base.rel_tol = std::stod(val, &used);
      } else if (key == "abs_tol") {
        base.abs_tol = std::stod(val, &used);
      } else if (key == "tail_cut") {
        base.tail_cut = std::stod(val, &used);
      } else if (key == "max_panels") {
        base.max_panels = std::stoi(val, &used);
      } else {
        throw std::runtime_error("unknown key '" + key + "'");
      }
      if (used != val.size()) {
        throw std::invalid_argument("trailing characters");
      }
    } catch (const std::logic_error&) {
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": bad value for " + key);
    }
  }
  base.validate();
  return base;
}

// --- compute ---------------------------------------------------------------

StateReport compute_state(const HyperState& s, NuclearCharge Z, const std::vector<Space>& spaces,
                          const QuadratureSpec& q) {
  StateReport r;
  r.state = s;
  r.Z = Z.value();
  r.params = derived_params(s, Z);
  for (Space sp : spaces) {
    r.spaces.push_back({measures::closed_form_measures(s, Z, sp, q),
                        complexity::complexities(s, Z, sp, q)});
  }
  return r;
}

nlohmann::json to_json(const StateReport& r) {
  using nlohmann::json;
  json out;
  out["state"] = {{"D", r.state.dim}, {"n", r.state.n}, {"mu", r.state.mu}, {"Z", number(r.Z)}};
  out["params"] = {{"eta", number(r.params.eta)},
                   {"L", number(r.params.L)},
                   {"lambda", number(r.params.lambda)},
                   {"energy", number(r.params.energy)}};
  json ms = json::object(), cs = json::object(), bs = json::object();
  for (const auto& sp : r.spaces) {
    const auto& m = sp.measures;
    const auto& c = sp.complexities;
    const std::string key(to_string(m.space));
    ms[key] = {{"normalization", number(m.normalization.value)},
               {"disequilibrium", number(m.disequilibrium.value)},
               {"shannon", number(m.shannon.value)},
               {"fisher", number(m.fisher.value)},
               {"variance", number(m.variance.value)},
               {"provenance", std::string(to_string(m.provenance))},
               {"variance_source",
                m.space == Space::Momentum ? "oracle" : "closed-form"}};
    cs[key] = {{"lmc", number(c.lmc.value)},
               {"fisher_shannon", number(c.fisher_shannon.value)},
               {"cramer_rao", number(c.cramer_rao.value)}};
    auto b = [](const complexity::BoundCheck& k) {
      return json{{"value", number(k.value)},
                  {"bound", number(k.bound)},
                  {"satisfied", k.satisfied},
                  {"margin", number(k.margin)}};
    };
    bs[key] = {{"lmc", b(c.bounds.lmc)},
               {"fisher_shannon", b(c.bounds.fisher_shannon)},
               {"cramer_rao", b(c.bounds.cramer_rao)}};
  }
  out["measures"] = ms;
  out["complexities"] = cs;
  out["bounds"] = bs;
  return out;
}

namespace {

std::vector<std::pair<Measure, Estimate>> report_values(const SpaceReport& sp) {
  const auto& m = sp.measures;
  const auto& c = sp.complexities;
  return {{Measure::Disequilibrium, m.disequilibrium}, {Measure::Shannon, m.shannon},
          {Measure::Fisher, m.fisher},                 {Measure::Variance, m.variance},
          {Measure::Lmc, c.lmc},                       {Measure::FisherShannon, c.fisher_shannon},
          {Measure::CramerRao, c.cramer_rao}};
}

std::string sweep_line(const SweepRow& r) {
  std::ostringstream os;
  os << r.dim << ',' << r.n << ',' << csv_field(r.mu) << ',' << format_number(r.Z) << ','
     << to_string(r.space) << ',' << to_string(r.measure) << ',' << format_number(r.value) << ','
     << format_number(r.err_estimate) << ',' << csv_field(r.error) << '\n';
  return os.str();
}

} // namespace

std::string to_csv(const StateReport& r) {
  std::string out = std::string(kSweepHeader) + "\n";
  for (const auto& sp : r.spaces) {
    for (const auto& [m, e] : report_values(sp)) {
      out += sweep_line({r.state.dim, r.state.n, mu_string(r.state), r.Z, sp.measures.space, m,
                         e.value, e.error, ""});
    }
  }
  return out;
}

std::string to_table(const StateReport& r) {
  std::ostringstream os;
  os << to_string(r.state) << "  Z=" << format_number(r.Z) << "\n"
     << "  eta=" << format_number(r.params.eta) << "  L=" << format_number(r.params.L)
     << "  lambda=" << format_number(r.params.lambda)
     << "  energy=" << format_number(r.params.energy) << "\n";
  for (const auto& sp : r.spaces) {
    os << "\n  [" << to_string(sp.measures.space) << "]\n";
    for (const auto& [m, e] : report_values(sp)) {
      os << "  " << std::left << std::setw(16) << to_string(m) << std::right << std::setw(24)
         << format_number(e.value) << "   +- " << format_number(e.error) << "\n";
    }
    const auto& b = sp.complexities.bounds;
    auto line = [&](const char* name, const complexity::BoundCheck& k) {
      os << "  bound " << std::left << std::setw(10) << name << std::right
         << format_number(k.value) << " >= " << format_number(k.bound)
         << (k.satisfied ? "  satisfied" : "  NOT satisfied") << "\n";
    };
    line("C_LMC", b.lmc);
    line("C_FS", b.fisher_shannon);
    line("C_CR", b.cramer_rao);
  }
  return os.str();
}

// --- sweep -----------------------------------------------------------------

std::string_view to_string(Measure m) {
  switch (m) {
  case Measure::Lmc: return "lmc";
  case Measure::FisherShannon: return "fs";
  case Measure::CramerRao: return "cr";
  case Measure::Shannon: return "shannon";
  case Measure::Fisher: return "fisher";
  case Measure::Variance: return "variance";
  case Measure::Disequilibrium: return "disequilibrium";
  }
  return "?";
}

Measure parse_measure(std::string_view text) {
  for (Measure m : {Measure::Lmc, Measure::FisherShannon, Measure::CramerRao, Measure::Shannon,
                    Measure::Fisher, Measure::Variance, Measure::Disequilibrium}) {
    if (to_string(m) == text) {
      return m;
    }
  }
  throw std::invalid_argument("unknown measure '" + std::string(text) + "'");
}

void SweepRequest::validate() const {
  if (dims.empty()) {
    throw std::invalid_argument("sweep: no dimensions given");
  }
  if (n_min < 1 || n_max < n_min) {
    throw std::invalid_argument("sweep: n range must satisfy 1 <= n_min <= n_max");
  }
  if (family == Family::Explicit && mu_list.empty()) {
    throw std::invalid_argument("sweep: explicit family needs at least one mu chain");
  }
  if (spaces.empty() || measures.empty()) {
    throw std::invalid_argument("sweep: spaces and measures must be non-empty");
  }
  NuclearCharge{Z};
}

namespace {

Estimate sweep_value(const HyperState& s, NuclearCharge Z, Space sp, Measure m,
                     const QuadratureSpec& q) {
  switch (m) {
  case Measure::Lmc: return complexity::lmc(s, Z, sp, q);
  case Measure::FisherShannon: return complexity::fisher_shannon(s, Z, sp, q);
  case Measure::CramerRao: return complexity::cramer_rao(s, Z, sp, q);
  case Measure::Shannon: return measures::shannon_entropy(s, Z, sp, q);
  case Measure::Fisher: return {measures::fisher_information(s, Z, sp), 0.0};
  case Measure::Variance: {
    const auto v = measures::variance(s, Z, sp);
    return v.use_oracle ? oracle::variance(s, Z, sp, q) : Estimate{v.value, 0.0};
  }
  case Measure::Disequilibrium: return measures::disequilibrium(s, Z, sp, q);
  }
  return {};
}

} // namespace

std::vector<SweepRow> run_sweep(const SweepRequest& req, const QuadratureSpec& q, int threads) {
  req.validate();
  q.validate();
  struct Job {
    int dim, n;
    std::vector<int> mu;
  };
  std::vector<Job> jobs;
  for (int d : req.dims) {
    for (int n = req.n_min; n <= req.n_max; ++n) {
      if (req.family == Family::Circular) {
        jobs.push_back({d, n, std::vector<int>(d > 1 ? d - 1 : 0, n - 1)});
      } else {
        for (const auto& mu : req.mu_list) {
          jobs.push_back({d, n, mu});
        }
      }
    }
  }
  const std::size_t per_job = req.spaces.size() * req.measures.size();
  std::vector<SweepRow> rows(jobs.size() * per_job);
  const NuclearCharge Z{req.Z};

  parallel_for(jobs.size(), threads, [&](std::size_t i) {
    const Job& job = jobs[i];
    std::ostringstream mu;
    for (std::size_t k = 0; k < job.mu.size(); ++k) {
      mu << (k ? "," : "") << job.mu[k];
    }
    std::size_t slot = i * per_job;
    std::string state_error;
    std::optional<HyperState> state;
    try {
      state = validate_state(job.dim, job.n, job.mu);
    } catch (const std::exception& e) {
      state_error = e.what();
    }
    for (Space sp : req.spaces) {
      for (Measure m : req.measures) {
        SweepRow row{job.dim, job.n, mu.str(), req.Z, sp, m, std::nan(""), std::nan(""), state_error};
        if (state) {
          try {
            const Estimate e = sweep_value(*state, Z, sp, m, q);
            row.value = e.value;
            row.err_estimate = e.error;
          } catch (const std::exception& e) {
            row.error = e.what();
          }
        }
        rows[slot++] = std::move(row);
      }
    }
  });
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = std::string(kSweepHeader) + "\n";
  for (const auto& r : rows) {
    out += sweep_line(r);
  }
  return out;
}

// --- validate --------------------------------------------------------------

std::string_view to_string(Status s) {
  switch (s) {
  case Status::Agree: return "agree";
  case Status::Discrepancy: return "discrepancy";
  case Status::Informational: return "informational";
  }
  return "?";
}

namespace {

class RowSink {
public:
  RowSink(std::string state, double gate) : state_(std::move(state)), gate_(gate) {}

  void compare(const std::string& quantity, double closed, double oracle) {
    const double dev = deviation(closed, oracle);
    rows_.push_back({state_, quantity, closed, oracle, dev,
                     dev <= gate_ ? Status::Agree : Status::Discrepancy});
  }

  void inform(const std::string& quantity, double closed, double reference) {
    rows_.push_back({state_, quantity, closed, reference, deviation(closed, reference),
                     Status::Informational});
  }

  std::vector<ValidationRow> take() { return std::move(rows_); }

private:
  static double deviation(double a, double b) {
    if (std::isnan(a) || std::isnan(b)) {
      return std::nan("");
    }
    return b != 0.0 ? std::abs(a - b) / std::abs(b) : std::abs(a - b);
  }

  std::string state_;
  double gate_;
  std::vector<ValidationRow> rows_;
};

std::string quantity(const std::string& name, Space sp) {
  return name + "/" + std::string(to_string(sp));
}

bool is_circular(const HyperState& s) {
  return std::all_of(s.mu.begin(), s.mu.end(), [&](int m) { return m == s.n - 1; });
}

std::vector<ValidationRow> validate_state_rows(const HyperState& s, NuclearCharge Z, double gate,
                                               const QuadratureSpec& q) {
  RowSink sink(to_string(s), gate);
  const double D = s.dim;
  for (Space sp : {Space::Position, Space::Momentum}) {
    const auto closed = measures::closed_form_measures(s, Z, sp, q);
    const auto orc = oracle::measures(s, Z, sp, q);
    sink.compare(quantity("normalization", sp), closed.normalization.value, orc.normalization.value);
    sink.compare(quantity("disequilibrium", sp), closed.disequilibrium.value, orc.disequilibrium.value);
    sink.compare(quantity("shannon", sp), closed.shannon.value, orc.shannon.value);
    sink.compare(quantity("fisher", sp), closed.fisher.value, orc.fisher.value);

    const double lmc_oracle = orc.disequilibrium.value * std::exp(orc.shannon.value);
    sink.compare(quantity("lmc", sp), complexity::lmc(s, Z, sp, q).value, lmc_oracle);
    const double fs_oracle =
        orc.fisher.value * std::exp(2.0 / D * orc.shannon.value) / (2.0 * std::numbers::pi * std::numbers::e);
    sink.compare(quantity("fisher_shannon", sp), complexity::fisher_shannon(s, Z, sp, q).value,
                 fs_oracle);

    double cr_canonical = 0.0;
    if (sp == Space::Position) {
      sink.compare(quantity("variance", sp), closed.variance.value, orc.variance.value);
      cr_canonical = closed.fisher.value * closed.variance.value;
      // The printed K1 weight x^{-D-5} is not the squared density; often divergent.
      sink.inform("K1 disequilibrium printed/position",
                  measures::disequilibrium_printed_k1(s, Z, q).value, orc.disequilibrium.value);
    } else {
      const auto printed = measures::printed_momentum_moments(s, Z);
      const auto m1 = oracle::moment(s, Z, sp, 1, q);
      const auto m2 = oracle::moment(s, Z, sp, 2, q);
      sink.compare("<p^2>/momentum", printed.second_moment, m2.value);
      sink.compare("<p> printed/momentum", printed.mean, m1.value);
      sink.compare("variance printed/momentum", printed.variance, orc.variance.value);
      sink.compare("K3 disequilibrium/momentum", measures::disequilibrium_printed_k3(s, Z, q).value,
                   orc.disequilibrium.value);
      cr_canonical = closed.fisher.value * orc.variance.value;
    }
    sink.compare(quantity("cramer_rao", sp), complexity::cramer_rao(s, Z, sp, q).value,
                 orc.fisher.value * orc.variance.value);
    sink.compare(quantity("C_CR printed", sp), complexity::cramer_rao_printed(s, sp), cr_canonical);
    sink.inform(quantity("C_CR >= D^2 bound", sp), cr_canonical, D * D);

    if (is_circular(s)) {
      sink.compare(quantity("circular disequilibrium", sp),
                   measures::circular_disequilibrium(s.n, s.dim, Z, sp), orc.disequilibrium.value);
      sink.compare(quantity("circular shannon", sp), measures::circular_shannon(s.n, s.dim, Z, sp),
                   orc.shannon.value);
      sink.compare(quantity("circular lmc", sp), complexity::circular_lmc(s.n, s.dim, sp),
                   lmc_oracle);
      if (s.n == 1) {
        sink.compare(quantity("ground-state lmc", sp), complexity::ground_state_lmc(s.dim, sp),
                     lmc_oracle);
      }
    }
  }
  return sink.take();
}

} // namespace

std::vector<ValidationRow> run_validation(const ValidationRequest& req, const QuadratureSpec& q,
                                          int threads) {
  q.validate();
  if (req.dims.empty() || req.n_max < 1) {
    throw std::invalid_argument("validate: need at least one dimension and n_max >= 1");
  }
  std::vector<HyperState> battery;
  for (int d : req.dims) {
    if (d < 2) {
      throw std::invalid_argument("validate: dimensions must be >= 2");
    }
    auto states = enumerate_states(d, req.n_max);
    battery.insert(battery.end(), states.begin(), states.end());
  }
  const NuclearCharge Z{req.Z};
  std::vector<std::vector<ValidationRow>> per_state(battery.size());
  parallel_for(battery.size(), threads, [&](std::size_t i) {
    per_state[i] = validate_state_rows(battery[i], Z, req.gate, q);
  });
  std::vector<ValidationRow> rows;
  for (auto& v : per_state) {
    rows.insert(rows.end(), v.begin(), v.end());
  }
  return rows;
}

std::string validation_csv(const std::vector<ValidationRow>& rows) {
  std::ostringstream os;
  os << "state,quantity,closed_form,oracle,rel_deviation,status\n";
  for (const auto& r : rows) {
    os << csv_field(r.state) << ',' << csv_field(r.quantity) << ',' << format_number(r.closed_form)
       << ',' << format_number(r.oracle) << ',' << format_number(r.deviation) << ','
       << to_string(r.status) << '\n';
  }
  return os.str();
}

std::string validation_table(const std::vector<ValidationRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(28) << "state" << std::setw(38) << "quantity" << std::right
     << std::setw(24) << "closed_form" << std::setw(24) << "oracle" << std::setw(14) << "rel_dev"
     << "  status\n";
  for (const auto& r : rows) {
    char dev[32];
    std::snprintf(dev, sizeof dev, "%.3e", r.deviation);
    os << std::left << std::setw(28) << r.state << std::setw(38) << r.quantity << std::right
       << std::setw(24) << format_number(r.closed_form) << std::setw(24)
       << format_number(r.oracle) << std::setw(14) << dev << "  " << to_string(r.status) << '\n';
  }
  return os.str();
}

nlohmann::json validation_json(const std::vector<ValidationRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    out.push_back({{"state", r.state},
                   {"quantity", r.quantity},
                   {"closed_form", number(r.closed_form)},
                   {"oracle", number(r.oracle)},
                   {"rel_deviation", number(r.deviation)},
                   {"status", std::string(to_string(r.status))}});
  }
  return out;
}

} // namespace hydrocx::report
