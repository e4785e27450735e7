#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gdc/connect.hpp"

namespace gdc::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

struct RunConfig {
  std::string command;
  std::vector<std::string> files;
  std::string order = "grevlex";
  std::optional<std::string> weight;
  std::optional<std::string> weight_for;
  std::uint64_t seed = 1;
  std::optional<std::size_t> budget;
  bool json = false;
  unsigned threads = 1;
  bool prime = false;
  std::optional<std::string> component;
  std::string data_dir;
  bool projective = false;
};

/// Full command line (without argv[0]); writes the report to `out`,
/// diagnostics to `err`, and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs one already-parsed command and returns its JSON document.
nlohmann::json execute(const RunConfig& config, int& exit_code);

/// Text rendering of a document produced by execute().
std::string render_text(const nlohmann::json& doc);

/// Golden checks against the bundled example ideals.
std::vector<VerificationRecord> reproduce_paper(const std::string& data_dir);

std::string default_data_dir();

}  // namespace gdc::cli
