/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <string>
#include <vector>

#include "govsim/simulation.hpp"

namespace govsim::sim {

/// Serializes a finished run: per-node state hashes and finality, proposal
/// outcomes, supply accounting, the evidence-based pattern matrix, and the
/// full event log (chain events plus the simulator journal). Bytewise
/// reproducible for a fixed config and seed.
Json build_report(const Simulation &sim);

std::string report_text(const Json &report);
Json read_report(const std::string &path);
void write_report(const Json &report, const std::string &path);

/// Evidence-based conformance matrix of one run: for every catalogue
/// pattern, whether its characteristic events occurred ("active"),
/// the pattern was declared but silent ("inactive"), or it was not part of
/// the profile at all ("n/a") — never taken from the config declaration
/// alone, except to distinguish silent from absent.
Json conformance_matrix(const Json &report);

/// Side-by-side table over one or more run reports.
std::string render_matrix(const std::vector<Json> &reports);

void to_json(Json &j, const JournalRecord &v);
void from_json(const Json &j, JournalRecord &v);

}  // namespace govsim::sim
