#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liftprop::cli {

enum class OutputFormat { kText, kJson, kDot };

struct RunConfig {
  std::string command;
  OutputFormat format = OutputFormat::kText;

  // parse
  std::string input;
  // check / urysohn
  std::string space;
  std::string axiom;
  std::string method = "all";
  // lift
  std::string left;
  std::string right;
  bool witness = false;
  bool stats = false;
  // urysohn
  std::vector<std::string> s;
  std::vector<std::string> t;
  // interval
  std::string variant;
  std::string probe;
  // enumerate
  int points = 0;
  bool dedupe = false;
  std::vector<std::string> cross_validate;
  unsigned jobs = 1;
};

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kFails = 1;
inline constexpr int kUsage = 2;

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (argv[0] is the program name) and runs the subcommand.
int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liftprop::cli
