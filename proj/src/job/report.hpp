#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "config.hpp"

namespace kmh {

struct Report {
  nlohmann::ordered_json body;
  std::string summary;
  int outcome = 0;  // 0 success, 1 negative result, 3 a failed identity
};

const char* library_version();
// Throws kmh::Error on bad input.
Report run_command(const std::string& command, const JobConfig& cfg);
// "json" or "text".
std::string render(const Report& r, const std::string& format);

}  // namespace kmh
