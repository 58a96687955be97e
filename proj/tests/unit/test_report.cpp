#include "doctest.h"

#include "hydrocx/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace hydrocx;
using namespace hydrocx::report;

TEST_CASE("format_number") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333333");
  CHECK(format_number(NAN) == "nan");
  CHECK(format_number(INFINITY) == "inf");
  CHECK(format_number(-INFINITY) == "-inf");
}

TEST_CASE("json report schema") {
  const auto r = compute_state(validate_state(3, 1, {0, 0}), NuclearCharge{1},
                               {Space::Position, Space::Momentum});
  const auto j = to_json(r);
  for (const char* key : {"state", "params", "measures", "complexities", "bounds"}) {
    CHECK(j.contains(key));
  }
  for (const char* key : {"eta", "L", "lambda", "energy"}) {
    CHECK(j["params"].contains(key));
  }
  CHECK(j["complexities"]["position"]["lmc"].get<double>() == doctest::Approx(2.5106921).epsilon(1e-7));
  CHECK(j["measures"]["momentum"]["fisher"].get<double>() == doctest::Approx(12.0));
  CHECK(j["bounds"]["position"].contains("cramer_rao"));
  CHECK_FALSE(to_table(r).empty());
  CHECK(to_csv(r).find("lmc") != std::string::npos);
}

TEST_CASE("parse helpers") {
  CHECK(parse_measure("fs") == Measure::FisherShannon);
  CHECK(parse_measure("disequilibrium") == Measure::Disequilibrium);
  CHECK_THROWS(parse_measure("bogus"));
  CHECK(parse_space("momentum") == Space::Momentum);
  CHECK_THROWS(parse_space("phase"));
}

TEST_CASE("sweep ordering and contents") {
  SweepRequest req;
  req.dims = {3};
  req.n_min = 1;
  req.n_max = 2;
  const auto rows = run_sweep(req);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].n == 1);
  CHECK(rows[0].value == doctest::Approx(2.5106921).epsilon(1e-7));
  CHECK(rows[1].value < rows[0].value);
  const auto csv = sweep_csv(rows);
  CHECK(csv.rfind(std::string(kSweepHeader) + "\n", 0) == 0);
}

TEST_CASE("sweep is Z independent and deterministic across thread counts") {
  SweepRequest req;
  req.dims = {2, 5};
  req.n_min = 1;
  req.n_max = 4;
  req.spaces = {Space::Position, Space::Momentum};
  req.measures = {Measure::Lmc, Measure::FisherShannon, Measure::CramerRao};
  const auto one = sweep_csv(run_sweep(req, {}, 1));
  CHECK(one == sweep_csv(run_sweep(req, {}, 4)));
  CHECK(one == sweep_csv(run_sweep(req, {}, 3)));

  SweepRequest a;
  a.dims = {2};
  a.n_min = a.n_max = 1;
  SweepRequest b = a;
  b.Z = 7.0;
  CHECK(run_sweep(a)[0].value == doctest::Approx(run_sweep(b)[0].value).epsilon(1e-12));
}

TEST_CASE("explicit sweep reports invalid states in the error column") {
  SweepRequest req;
  req.dims = {3};
  req.n_min = 1;
  req.n_max = 2;
  req.family = Family::Explicit;
  req.mu_list = {{1, 0}};
  const auto rows = run_sweep(req);
  REQUIRE(rows.size() == 2);
  CHECK_FALSE(rows[0].error.empty());
  CHECK(rows[1].error.empty());
  CHECK(std::isfinite(rows[1].value));
}

TEST_CASE("sweep request validation") {
  SweepRequest req;
  CHECK_THROWS_AS(req.validate(), std::invalid_argument);
  req.dims = {3};
  req.n_min = 3;
  req.n_max = 2;
  CHECK_THROWS_AS(req.validate(), std::invalid_argument);
}

TEST_CASE("validation rows for the 3-D ground state") {
  ValidationRequest req;
  req.dims = {3};
  req.n_max = 1;
  const auto rows = run_validation(req);
  auto find = [&](const std::string& q) -> const ValidationRow* {
    for (const auto& r : rows) {
      if (r.quantity == q) {
        return &r;
      }
    }
    return nullptr;
  };
  const auto* fisher = find("fisher/position");
  REQUIRE(fisher);
  CHECK(fisher->status == Status::Agree);
  const auto* mean = find("<p> printed/momentum");
  REQUIRE(mean);
  CHECK(mean->status == Status::Discrepancy);
  CHECK(mean->closed_form == doctest::Approx(2 / M_PI));
  CHECK(mean->oracle == doctest::Approx(8 / (3 * M_PI)).epsilon(1e-9));
  const auto* bound = find("C_CR >= D^2 bound/position");
  REQUIRE(bound);
  CHECK(bound->status == Status::Informational);
  for (const auto& r : rows) {
    if (r.status == Status::Agree) {
      CHECK(r.deviation <= req.gate);
    }
  }
  CHECK(validation_csv(rows).rfind("state,quantity,closed_form,oracle,rel_deviation,status\n", 0) == 0);
  CHECK(validation_json(rows).size() == rows.size());
}

TEST_CASE("config file") {
  const auto path = std::filesystem::temp_directory_path() / "hydrocx_test_config.txt";
  {
    std::ofstream out(path);
    out << "# tolerances\nrel_tol = 1e-9\nmax_panels=100 # inline\n";
  }
  const auto q = load_config(path);
  CHECK(q.rel_tol == 1e-9);
  CHECK(q.max_panels == 100);
  CHECK(q.abs_tol == QuadratureSpec{}.abs_tol);
  {
    std::ofstream out(path);
    out << "speed = 3\n";
  }
  CHECK_THROWS_AS(load_config(path), std::runtime_error);
  std::filesystem::remove(path);
}
