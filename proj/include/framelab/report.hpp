// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Framelab Contributors

#pragma once

#include <string>

#include <json.hpp>

#include "framelab/phase_field.hpp"

namespace framelab {

/// Grid/geometry sidecar describing a field dump.
nlohmann::json field_sidecar(const PhaseField& field);

/// Wraps a result object with a header (timestamp isolated there, so report
/// bodies are byte-identical across reruns) and writes it atomically
/// (temp file + rename).
void write_report(const std::string& path, const nlohmann::json& config,
                  const nlohmann::json& results);

void write_text_atomic(const std::string& path, const std::string& text);

}  // namespace framelab
