#pragma once

#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace glassnet::cli {

inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kParseError = 2;

struct SimulateArgs {
  std::string network;
  std::string start;
  std::optional<std::string> entry;
  std::size_t max_events = 10000;
  double t_max = std::numeric_limits<double>::infinity();
  double spine_tol = 1e-9;
  std::optional<std::string> out;
};

struct AnalyzeArgs {
  std::string network;
  std::optional<std::string> cycle;
  bool automatic = false;
  std::size_t base_wall = 0;
  double tol = 1e-9;
  std::optional<std::string> report;
};

struct EmbedArgs {
  std::string network;
  std::optional<std::string> cycle;
  std::optional<std::string> out;
};

int cmd_validate(const std::string& network, std::ostream& out, std::ostream& err);
int cmd_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err);
int cmd_std(const std::string& network, const std::optional<std::string>& out_path,
            std::ostream& out, std::ostream& err);
int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err);
int cmd_embed(const EmbedArgs& args, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and dispatches to a subcommand.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace glassnet::cli
