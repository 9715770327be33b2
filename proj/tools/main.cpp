/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "govsim/report.hpp"

using namespace govsim;

namespace {

int run_command(const std::string &config_path, const std::string &out_path,
                const std::string &logs_path) {
  sim::ScenarioConfig config = sim::read_config(config_path);
  sim::Simulation simulation(config);
  simulation.run();
  Json report = sim::build_report(simulation);

  if (out_path.empty()) {
    std::cout << sim::report_text(report);
  } else {
    sim::write_report(report, out_path);
    std::cout << "report written to " << out_path << "\n";
  }
  if (!logs_path.empty()) {
    std::ofstream out(logs_path);
    if (!out) throw Error("report.io", "cannot write " + logs_path);
    for (const auto &[chain_id, events] : report.at("events").at("chains").items()) {
      for (const Json &event : events) {
        Json line = event;
        line["chain_id"] = chain_id;
        line["source"] = "chain";
        out << line.dump() << "\n";
      }
    }
    for (const Json &record : report.at("events").at("journal")) {
      Json line = record;
      line["source"] = "journal";
      out << line.dump() << "\n";
    }
    std::cout << "logs written to " << logs_path << "\n";
  }
  const Json &violations = report.at("violations");
  if (!violations.empty()) {
    std::cerr << "safety violations recorded:\n";
    for (const Json &v : violations) std::cerr << "  " << v.get<std::string>() << "\n";
    return 2;
  }
  return 0;
}

int preset_command(const std::string &name, const std::string &out_path) {
  sim::ScenarioConfig config = sim::preset(name);
  sim::validate_config(config);
  if (out_path.empty()) {
    std::cout << config.to_json().dump(2) << "\n";
  } else {
    sim::write_config(config, out_path);
    std::cout << "config written to " << out_path << "\n";
  }
  return 0;
}

int matrix_command(const std::vector<std::string> &report_paths) {
  std::vector<Json> reports;
  for (const std::string &path : report_paths) {
    reports.push_back(sim::read_report(path));
  }
  std::cout << sim::render_matrix(reports);
  return 0;
}

int logs_command(const std::string &report_path, const std::string &topic, std::uint64_t from,
                 std::uint64_t to, bool have_range) {
  Json report = sim::read_report(report_path);
  for (const auto &[chain_id, events] : report.at("events").at("chains").items()) {
    for (const Json &event : events) {
      if (!topic.empty() && event.at("topic").get<std::string>() != topic) continue;
      std::uint64_t height = event.at("height").get<std::uint64_t>();
      if (have_range && (height < from || height > to)) continue;
      Json line = event;
      line["chain_id"] = chain_id;
      line["source"] = "chain";
      std::cout << line.dump() << "\n";
    }
  }
  for (const Json &record : report.at("events").at("journal")) {
    if (!topic.empty() && record.at("topic").get<std::string>() != topic) continue;
    if (have_range) continue;  // journal records are tick-based, not height-based
    Json line = record;
    line["source"] = "journal";
    std::cout << line.dump() << "\n";
  }
  return 0;
}

int replay_command(const std::string &config_path, const std::string &expect_path) {
  sim::ScenarioConfig config = sim::read_config(config_path);
  sim::Simulation simulation(config);
  simulation.run();
  std::string regenerated = sim::report_text(sim::build_report(simulation));

  std::ifstream in(expect_path, std::ios::binary);
  if (!in) throw Error("report.io", "cannot open " + expect_path);
  std::string stored((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  if (regenerated == stored) {
    std::cout << "replay matches " << expect_path << " (" << regenerated.size() << " bytes)\n";
    return 0;
  }
  std::cerr << "replay MISMATCH against " << expect_path << "\n";
  return 1;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"govsim: deterministic simulator for governance-driven blockchain systems"};
  app.require_subcommand(1);

  std::string config_path, out_path, logs_path;
  auto *run = app.add_subcommand("run", "execute a scenario config and emit the run report");
  run->add_option("config", config_path, "scenario config (JSON)")->required();
  run->add_option("--out", out_path, "write the report here instead of stdout");
  run->add_option("--logs", logs_path, "also write line-delimited event logs");

  std::string preset_name, preset_out;
  auto *preset_cmd = app.add_subcommand("preset", "emit a built-in scenario profile");
  preset_cmd->add_option("name", preset_name, "polkadot-like | quorum-like | governance-lab")
      ->required();
  preset_cmd->add_option("--out", preset_out, "write the config here instead of stdout");

  std::vector<std::string> report_paths;
  auto *matrix_cmd = app.add_subcommand("matrix", "render the pattern conformance matrix");
  matrix_cmd->add_option("reports", report_paths, "one or more run reports")->required();

  std::string logs_report, topic;
  std::uint64_t from_height = 0, to_height = 0;
  auto *logs_cmd = app.add_subcommand("logs", "print events from a run report");
  logs_cmd->add_option("report", logs_report, "run report")->required();
  logs_cmd->add_option("--topic", topic, "filter by topic");
  auto *from_opt = logs_cmd->add_option("--from", from_height, "first height");
  logs_cmd->add_option("--to", to_height, "last height");

  std::string replay_config, expect_path;
  auto *replay_cmd =
      app.add_subcommand("replay", "re-run a config and compare bytewise with a stored report");
  replay_cmd->add_option("config", replay_config, "scenario config")->required();
  replay_cmd->add_option("--expect", expect_path, "stored report")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return run_command(config_path, out_path, logs_path);
    if (preset_cmd->parsed()) return preset_command(preset_name, preset_out);
    if (matrix_cmd->parsed()) return matrix_command(report_paths);
    if (logs_cmd->parsed()) {
      bool have_range = from_opt->count() > 0;
      if (to_height == 0) to_height = std::numeric_limits<std::uint64_t>::max();
      return logs_command(logs_report, topic, from_height, to_height, have_range);
    }
    if (replay_cmd->parsed()) return replay_command(replay_config, expect_path);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
