// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Framelab Contributors

#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "framelab/run.hpp"

using namespace framelab;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

json small_quad() {
  return {{"quadrature", {{"truncation_radius", 2.0}, {"step", 0.1}}}};
}

json read_json(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  json j;
  in >> j;
  return j;
}

std::string read_text(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::path("run_test_tmp") / name) {
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path.parent_path(), ec);
  }
};

}  // namespace

TEST_CASE("transform command writes artifacts and succeeds") {
  TempDir tmp("transform");
  CliOptions opts;
  opts.out_dir = tmp.path.string();
  opts.assert_mode = true;
  json cfg = small_quad();
  cfg["signal"] = "gaussian";
  CHECK(run_command("transform", cfg, opts) == 0);
  CHECK(fs::exists(tmp.path / "field.csv"));
  CHECK(fs::exists(tmp.path / "field.json"));
  const json rep = read_json(tmp.path / "transform.json");
  CHECK(rep.at("results").at("verdicts").at("energy_conserved").get<bool>());
  CHECK(rep.at("header").contains("timestamp_ms"));
  CHECK(rep.at("config").at("geometry") == "plane");

  // Field CSV has the documented columns.
  std::ifstream f(tmp.path / "field.csv");
  std::string head;
  std::getline(f, head);
  CHECK(head == "x,y,re,im");
}

TEST_CASE("malformed configs exit with code 2") {
  TempDir tmp("bad");
  CliOptions opts;
  opts.out_dir = tmp.path.string();
  CHECK(run_command("transform", json{{"geometry", "sphere"}}, opts) == 2);
  CHECK(run_command("orbit", small_quad(), opts) == 2);
  CHECK(run_command("transform", json::array({1, 2}), opts) == 2);
  json cfg = small_quad();
  cfg["signal"] = "sinc";
  CHECK(run_command("transform", cfg, opts) == 2);
  json nb = small_quad();
  CHECK(run_command("bounds", nb, opts) == 2);  // no points entry
  nb["points"] = {{"list", json::array({json::array({1.0})})}};
  CHECK(run_command("bounds", nb, opts) == 2);
  json badq = {{"quadrature", {{"step", -1.0}}}};
  CHECK(run_command("transform", badq, opts) == 2);
}

TEST_CASE("assert mode flags failed certificates") {
  TempDir tmp("assert");
  CliOptions opts;
  opts.out_dir = tmp.path.string();
  json cfg = small_quad();
  cfg["points"] = {{"empty", true}};

  CHECK(run_command("density", cfg, opts) == 0);  // reported, not fatal
  opts.assert_mode = true;
  CHECK(run_command("density", cfg, opts) == 1);
  const json rep = read_json(tmp.path / "density.json");
  CHECK_FALSE(rep.at("results").at("verdicts").at("certificate").get<bool>());
}

TEST_CASE("degenerate test space is a numerical failure") {
  TempDir tmp("numfail");
  CliOptions opts;
  opts.out_dir = tmp.path.string();
  json cfg = small_quad();
  cfg["points"] = {{"list", json::array({json::array({0.0, 0.0}), json::array({1.0, 0.0})})}};
  cfg["test_space"] = {{"modulated_gaussians", json::array({1.0, 1.0})}};
  CHECK(run_command("bounds", cfg, opts) == 3);
}

TEST_CASE("bounds command report") {
  TempDir tmp("bounds");
  CliOptions opts;
  opts.out_dir = tmp.path.string();
  json cfg = small_quad();
  cfg["points"] = {{"lattice", {{"a", 0.5}, {"b", 0.5}}}};
  cfg["test_space"] = {{"hermites", 4}};
  CHECK(run_command("bounds", cfg, opts) == 0);
  const json rep = read_json(tmp.path / "frame_report.json");
  const json& r = rep.at("results");
  CHECK(r.at("separation").get<double>() == doctest::Approx(0.5));
  CHECK(r.at("A_emp").get<double>() > 0.0);
  CHECK(r.at("B_emp").get<double>() >= r.at("A_emp").get<double>());
  CHECK(r.at("B_suff").get<double>() >= r.at("B_emp").get<double>());
  CHECK(r.contains("discrete_sum_bound"));
  CHECK(fs::exists(tmp.path / "summary.csv"));
}

TEST_CASE("kernel command report") {
  TempDir tmp("kernel");
  CliOptions opts;
  opts.out_dir = tmp.path.string();
  CHECK(run_command("kernel", small_quad(), opts) == 0);
  const json rep = read_json(tmp.path / "membership.json");
  CHECK(rep.at("results").at("k_l1").get<double>() > 0.0);
  CHECK(fs::exists(tmp.path / "kernel.csv"));
  CHECK(fs::exists(tmp.path / "maximal.csv"));

  // Sidecar describes the grid.
  const json side = read_json(tmp.path / "kernel.json");
  CHECK(side.at("geometry") == "plane");
  CHECK(side.at("columns") == "x,y,re,im");
}

TEST_CASE("runs are deterministic up to the header") {
  TempDir tmp("det");
  CliOptions opts1, opts2;
  opts1.out_dir = (tmp.path / "a").string();
  opts2.out_dir = (tmp.path / "b").string();
  json cfg = small_quad();
  cfg["signal"] = "hermite:1";
  REQUIRE(run_command("transform", cfg, opts1) == 0);
  REQUIRE(run_command("transform", cfg, opts2) == 0);

  json r1 = read_json(tmp.path / "a" / "transform.json");
  json r2 = read_json(tmp.path / "b" / "transform.json");
  r1.erase("header");
  r2.erase("header");
  CHECK(r1.dump() == r2.dump());
  CHECK(read_text(tmp.path / "a" / "field.csv") == read_text(tmp.path / "b" / "field.csv"));
}

TEST_CASE("seed and geometry overrides land in the echo") {
  TempDir tmp("seed");
  CliOptions opts;
  opts.out_dir = tmp.path.string();
  opts.seed = 42;
  json cfg = small_quad();
  cfg["seed"] = 7;
  REQUIRE(run_command("transform", cfg, opts) == 0);
  const json rep = read_json(tmp.path / "transform.json");
  CHECK(rep.at("config").at("seed").get<unsigned>() == 42);
}
