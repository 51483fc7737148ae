// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Framelab Contributors

#include "framelab/report.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace framelab {

nlohmann::json field_sidecar(const PhaseField& field) {
  const GridSpec& g = field.grid();
  return {
      {"geometry", g.geom == Geometry::Plane ? "plane" : "halfplane"},
      {"x_min", g.x_min},
      {"x_max", g.x_max},
      {"u_min", g.u_min},
      {"u_max", g.u_max},
      {"hx", g.hx},
      {"hu", g.hu},
      {"nx", g.nx()},
      {"nu", g.nu()},
      {"u_axis", g.geom == Geometry::Plane ? "y" : "log_y"},
      {"columns", "x,y,re,im"},
  };
}

void write_text_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write file: " + tmp);
    out << text;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot move report into place: " + path);
}

void write_report(const std::string& path, const nlohmann::json& config,
                  const nlohmann::json& results) {
  const auto now = std::chrono::system_clock::now().time_since_epoch();
  nlohmann::json doc;
  doc["header"] = {
      {"tool", "framelab"},
      {"timestamp_ms", std::chrono::duration_cast<std::chrono::milliseconds>(now).count()},
  };
  doc["config"] = config;
  doc["results"] = results;
  write_text_atomic(path, doc.dump(2) + "\n");
}

}  // namespace framelab
