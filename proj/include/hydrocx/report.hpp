#pragma once

#include "hydrocx/common.hpp"
#include "hydrocx/complexity.hpp"
#include "hydrocx/quadrature.hpp"
#include "hydrocx/states.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>
#include <vector>

// Engine behind the command-line tool: single-state reports, parameter
// sweeps and the closed-form versus oracle validation table.
namespace hydrocx::report {

/// "%.15g"; nan/inf spelled "nan", "inf", "-inf".
std::string format_number(double x);

/// Worker count from HYDROCX_THREADS, else hardware concurrency (>= 1).
int default_threads();

/// Reads `key = value` lines (rel_tol, abs_tol, max_panels, tail_cut) on top
/// of `base`. '#' starts a comment. Throws std::runtime_error on unknown keys
/// or unreadable values.
QuadratureSpec load_config(const std::filesystem::path& path, QuadratureSpec base = {});

// --- compute ---------------------------------------------------------------

struct SpaceReport {
  MeasureSet measures;
  complexity::ComplexityTriple complexities;
};

struct StateReport {
  HyperState state;
  double Z = 1.0;
  DerivedParams params{};
  std::vector<SpaceReport> spaces;
};

StateReport compute_state(const HyperState& s, NuclearCharge Z, const std::vector<Space>& spaces,
                          const QuadratureSpec& q = {});

nlohmann::json to_json(const StateReport& r);
std::string to_csv(const StateReport& r);
std::string to_table(const StateReport& r);

// --- sweep -----------------------------------------------------------------

enum class Family { Circular, Explicit };

enum class Measure { Lmc, FisherShannon, CramerRao, Shannon, Fisher, Variance, Disequilibrium };

std::string_view to_string(Measure m);
/// lmc | fs | cr | shannon | fisher | variance | disequilibrium
Measure parse_measure(std::string_view text);

struct SweepRequest {
  std::vector<int> dims;
  int n_min = 1;
  int n_max = 1;
  Family family = Family::Circular;
  std::vector<std::vector<int>> mu_list; // Explicit family only
  std::vector<Space> spaces{Space::Position};
  std::vector<Measure> measures{Measure::Lmc};
  double Z = 1.0;

  /// Throws std::invalid_argument on an empty or malformed request.
  void validate() const;
};

struct SweepRow {
  int dim;
  int n;
  std::string mu;
  double Z;
  Space space;
  Measure measure;
  double value;
  double err_estimate;
  std::string error; // empty on success
};

/// Rows ordered by D, then n, then mu (request order), space, measure,
/// independent of scheduling.
std::vector<SweepRow> run_sweep(const SweepRequest& req, const QuadratureSpec& q = {},
                                int threads = 1);

inline constexpr const char* kSweepHeader = "D,n,mu,Z,space,measure,value,err_estimate,error";
std::string sweep_csv(const std::vector<SweepRow>& rows);

// --- validate --------------------------------------------------------------

enum class Status { Agree, Discrepancy, Informational };
std::string_view to_string(Status s);

struct ValidationRow {
  std::string state;
  std::string quantity;
  double closed_form;
  double oracle;
  double deviation; // |closed - oracle| / |oracle|
  Status status;
};

struct ValidationRequest {
  std::vector<int> dims{2, 3, 4, 6};
  int n_max = 4;
  double gate = 1e-6;
  double Z = 1.0;
};

/// Every state of the battery, plus circular and ground-state closed forms
/// and the printed-form comparisons. Discrepancies are rows, not errors.
std::vector<ValidationRow> run_validation(const ValidationRequest& req,
                                          const QuadratureSpec& q = {}, int threads = 1);

std::string validation_csv(const std::vector<ValidationRow>& rows);
std::string validation_table(const std::vector<ValidationRow>& rows);
nlohmann::json validation_json(const std::vector<ValidationRow>& rows);

} // namespace hydrocx::report
