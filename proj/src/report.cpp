/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "govsim/report.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace govsim::sim {

void to_json(Json &j, const JournalRecord &v) {
  j = Json{{"tick", v.tick},     {"seq", v.seq},     {"chain_id", v.chain_id},
           {"node_id", v.node_id}, {"topic", v.topic}, {"payload", v.payload}};
}

void from_json(const Json &j, JournalRecord &v) {
  v.tick = j.at("tick").get<std::uint64_t>();
  v.seq = j.at("seq").get<std::uint64_t>();
  v.chain_id = j.at("chain_id").get<std::string>();
  v.node_id = j.at("node_id").get<std::string>();
  v.topic = j.at("topic").get<std::string>();
  v.payload = j.at("payload").get<std::map<std::string, std::string>>();
}

Json build_report(const Simulation &sim) {
  Json report;
  report["spec_version"] = kScenarioSpecVersion;
  report["config_digest"] = sim.config().digest().hex();
  report["seed"] = sim.config().seed;
  report["ticks"] = sim.config().ticks;
  report["profile"] = sim.config().chain_id;

  std::vector<std::string> declared;
  for (const auto &[name, params] : sim.config().patterns) declared.push_back(name);
  std::sort(declared.begin(), declared.end());
  report["patterns_declared"] = declared;

  Json chains = Json::object();
  Json chain_events = Json::object();
  for (const std::string &chain_id : sim.chain_ids()) {
    Json nodes = Json::object();
    const Node *head = nullptr;
    for (std::size_t i = 0; i < sim.node_count(); ++i) {
      const Node &node = sim.node_at(i);
      if (node.chain().chain_id() != chain_id) continue;
      if (!head) head = &node;
      nodes[node.id()] = Json{{"tip", node.chain().tip().hex()},
                              {"tip_height", node.chain().tip_height()},
                              {"finalized_height", node.chain().finalized_height()},
                              {"state_hash", node.tip_state().state_hash().hex()}};
    }
    Json proposals = Json::array();
    Json supply;
    if (head) {
      const chain::LedgerState &tip = head->tip_state();
      for (const auto &[id, proposal] : tip.registries.proposals) {
        Json p{{"id", id},
               {"status", gov::to_string(proposal.status)},
               {"scheme", gov::to_string(proposal.scheme.kind)},
               {"deadline", proposal.voting_deadline}};
        if (proposal.result) {
          p["yes_weight"] = proposal.result->yes_weight;
          p["no_weight"] = proposal.result->no_weight;
          p["turnout"] = std::to_string(proposal.result->turnout.num) + "/" +
                         std::to_string(proposal.result->turnout.den);
        }
        proposals.push_back(std::move(p));
      }
      chain::to_json(supply, tip.supply);
      supply["total_balance"] = tip.total_balance();
      chain_events[chain_id] = tip.events;
    }
    chains[chain_id] =
        Json{{"nodes", std::move(nodes)}, {"proposals", std::move(proposals)},
             {"supply", std::move(supply)}};
  }
  report["chains"] = std::move(chains);
  report["events"] = Json{{"chains", std::move(chain_events)}, {"journal", sim.journal().records()}};
  report["violations"] = sim.violations();
  report["matrix"] = conformance_matrix(report);
  return report;
}

std::string report_text(const Json &report) { return report.dump(2) + "\n"; }

Json read_report(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("report.io", "cannot open " + path);
  return Json::parse(in);
}

void write_report(const Json &report, const std::string &path) {
  std::ofstream out(path);
  if (!out) throw Error("report.io", "cannot write " + path);
  out << report_text(report);
}

// ---------------------------------------------------------------------------
// Conformance matrix
// ---------------------------------------------------------------------------

namespace {

struct Evidence {
  bool found = false;
  std::string mechanism;
};

bool chain_event_with(const Json &report, const std::string &topic, const std::string &key,
                      const std::string &value) {
  for (const auto &[chain_id, events] : report.at("events").at("chains").items()) {
    for (const Json &event : events) {
      if (event.at("topic").get<std::string>() != topic) continue;
      if (key.empty()) return true;
      const Json &payload = event.at("payload");
      if (payload.contains(key) && payload.at(key).get<std::string>() == value) return true;
    }
  }
  return false;
}

const Json *first_chain_event(const Json &report, const std::string &topic) {
  for (const auto &[chain_id, events] : report.at("events").at("chains").items()) {
    for (const Json &event : events) {
      if (event.at("topic").get<std::string>() == topic) return &event;
    }
  }
  return nullptr;
}

const Json *first_journal_event(const Json &report, const std::string &topic) {
  for (const Json &record : report.at("events").at("journal")) {
    if (record.at("topic").get<std::string>() == topic) return &record;
  }
  return nullptr;
}

Evidence pattern_evidence(const Json &report, gov::Pattern p) {
  using gov::Pattern;
  switch (p) {
    case Pattern::NetworkFreezer: {
      if (const Json *e = first_journal_event(report, "network.frozen")) {
        return {true, "suspension by " + e->at("payload").at("by").get<std::string>()};
      }
      return {};
    }
    case Pattern::ShardedChain: {
      if (first_chain_event(report, "relay.header-included")) {
        return {true, "relay-coordinated shards"};
      }
      return {};
    }
    case Pattern::IncentiveDistributor: {
      if (first_chain_event(report, "incentive.distributed")) {
        return {true, "block rewards with fee split"};
      }
      return {};
    }
    case Pattern::ProtocolUpgrade: {
      if (const Json *e = first_chain_event(report, "upgrade.activated")) {
        return {true, e->at("payload").at("compatibility").get<std::string>() + " upgrade"};
      }
      if (first_journal_event(report, "upgrade.enacted")) return {true, "node rule upgrade"};
      return {};
    }
    case Pattern::DataMigrator: {
      if (first_journal_event(report, "migrate.completed")) {
        return {true, "state snapshot export/import"};
      }
      return {};
    }
    case Pattern::ParticipationPermission: {
      if (chain_event_with(report, "member.joined", "mode", "permissioned")) {
        return {true, "single-use invitations"};
      }
      return {};
    }
    case Pattern::AccountabilityTracer: {
      if (const Json *e = first_journal_event(report, "trace.performed")) {
        bool with_identity = e->at("payload").contains("identity");
        return {true, with_identity ? "addresses plus real-world identity"
                                    : "on-chain addresses"};
      }
      return {};
    }
    case Pattern::BenevolentDictator: {
      if (first_chain_event(report, "proposal.cancelled") ||
          first_chain_event(report, "proposal.fast-tracked")) {
        return {true, "council/dictator override"};
      }
      return {};
    }
    case Pattern::TransactionFilter: {
      std::set<std::string> reasons;
      for (const Json &record : report.at("events").at("journal")) {
        if (record.at("topic").get<std::string>() != "tx.rejected") continue;
        std::string reason = record.at("payload").at("reason").get<std::string>();
        if (reason.rfind("filter.", 0) == 0) reasons.insert(reason.substr(7));
      }
      if (reasons.empty()) return {};
      std::string joined;
      for (const std::string &reason : reasons) {
        if (!joined.empty()) joined += ", ";
        joined += reason;
      }
      return {true, "rules: " + joined};
    }
    case Pattern::ValidatorSelection: {
      if (const Json *e = first_chain_event(report, "block.applied")) {
        return {true, e->at("payload").at("selection").get<std::string>()};
      }
      return {};
    }
    case Pattern::BlockFinalityDecider: {
      if (const Json *e = first_journal_event(report, "finality.advanced")) {
        return {true, e->at("payload").at("mode").get<std::string>()};
      }
      return {};
    }
    case Pattern::LogExtractor: {
      if (first_journal_event(report, "logs.extracted")) return {true, "event log extraction"};
      return {};
    }
    case Pattern::ContractFreezer: {
      if (first_chain_event(report, "contract.frozen")) return {true, "registry freeze flags"};
      return {};
    }
    case Pattern::SocialContract: {
      if (first_chain_event(report, "social-contract.set")) return {true, "maintainer registry"};
      return {};
    }
    case Pattern::ScamList: {
      if (first_chain_event(report, "scam-list.added")) return {true, "on-chain scam registry"};
      return {};
    }
    case Pattern::TokenLocker: {
      if (first_chain_event(report, "lock.created")) return {true, "time-locked deposits"};
      return {};
    }
    case Pattern::Carbonvote: {
      if (chain_event_with(report, "vote.cast", "scheme", "carbonvote")) {
        return {true, "token-weighted voting"};
      }
      return {};
    }
    case Pattern::QuadraticVoting: {
      if (chain_event_with(report, "vote.cast", "scheme", "quadratic")) {
        return {true, "quadratic token costs"};
      }
      return {};
    }
    case Pattern::CrossChainTokenVoting: {
      if (first_chain_event(report, "crosschain.result-imported")) {
        return {true, "mirrored ballot on auxiliary chain"};
      }
      return {};
    }
    case Pattern::LiquidDemocracy: {
      if (first_chain_event(report, "delegation.set") ||
          chain_event_with(report, "vote.cast", "scheme", "liquid-democracy")) {
        return {true, "revocable delegation"};
      }
      return {};
    }
  }
  return {};
}

}  // namespace

Json conformance_matrix(const Json &report) {
  std::set<std::string> declared;
  for (const Json &name : report.at("patterns_declared")) {
    declared.insert(name.get<std::string>());
  }
  Json matrix = Json::object();
  for (const gov::PatternInfo &info : gov::pattern_catalogue()) {
    Json cell;
    if (declared.count(info.name) == 0) {
      cell = Json{{"status", "n/a"}, {"mechanism", ""}};
    } else {
      Evidence evidence = pattern_evidence(report, info.id);
      cell = Json{{"status", evidence.found ? "active" : "inactive"},
                  {"mechanism", evidence.mechanism}};
    }
    cell["row"] = info.comparison_row;
    matrix[info.name] = std::move(cell);
  }
  return matrix;
}

std::string render_matrix(const std::vector<Json> &reports) {
  std::vector<std::string> profiles;
  std::vector<Json> matrices;
  for (const Json &report : reports) {
    profiles.push_back(report.at("profile").get<std::string>());
    matrices.push_back(report.at("matrix"));
  }

  auto cell_text = [](const Json &matrix, const std::string &pattern) {
    if (!matrix.contains(pattern)) return std::string("-");
    const Json &cell = matrix.at(pattern);
    std::string status = cell.at("status").get<std::string>();
    std::string mechanism = cell.at("mechanism").get<std::string>();
    if (status == "active" && !mechanism.empty()) return status + " (" + mechanism + ")";
    return status;
  };

  // Column widths.
  std::size_t name_width = std::string("component").size();
  std::vector<std::size_t> widths(profiles.size());
  for (std::size_t c = 0; c < profiles.size(); ++c) widths[c] = profiles[c].size();
  for (const gov::PatternInfo &info : gov::pattern_catalogue()) {
    name_width = std::max(name_width, std::string(info.name).size());
    for (std::size_t c = 0; c < matrices.size(); ++c) {
      widths[c] = std::max(widths[c], cell_text(matrices[c], info.name).size());
    }
  }

  std::ostringstream out;
  auto row = [&](const std::string &name, const std::vector<std::string> &cells) {
    out << "  " << name << std::string(name_width - name.size(), ' ');
    for (std::size_t c = 0; c < cells.size(); ++c) {
      out << "  " << cells[c] << std::string(widths[c] - cells[c].size(), ' ');
    }
    out << "\n";
  };

  row("component", profiles);
  row(std::string(name_width, '-'),
      [&] {
        std::vector<std::string> dashes;
        for (std::size_t w : widths) dashes.push_back(std::string(w, '-'));
        return dashes;
      }());
  auto emit_rows = [&](bool comparison_section) {
    for (const gov::PatternInfo &info : gov::pattern_catalogue()) {
      bool in_comparison = info.comparison_row > 0;
      if (in_comparison != comparison_section) continue;
      std::vector<std::string> cells;
      for (const Json &matrix : matrices) cells.push_back(cell_text(matrix, info.name));
      row(info.name, cells);
    }
  };
  emit_rows(true);
  out << "  " << std::string(name_width, '.') << "  (extended components)\n";
  emit_rows(false);
  return out.str();
}

}  // namespace govsim::sim
