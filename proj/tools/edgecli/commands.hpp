#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sobelcs/datapath.hpp"
#include "sobelcs/edge_math.hpp"

namespace edgecli {

enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitBadInput = 2,
  kExitInvalidImage = 3,
  kExitMismatch = 4,
};

enum class ReportFormat { kText, kKeyValue };

struct CliConfig {
  std::string subcommand;
  std::string input;
  std::string output;
  sobelcs::Variant variant = sobelcs::Variant::kLookaheadCompressor;
  bool all_variants = false;
  std::optional<int> threshold;
  sobelcs::Norm norm = sobelcs::Norm::kL2;
  int width = 64;
  int height = 64;
  int frames = 100;
  std::uint64_t seed = 7;
  std::optional<std::uint64_t> inject_fault;  // sample index, frame 0
  int fault_bit = 5;
  int bits_per_pixel = 8;
  int datapath_width = 11;
  ReportFormat format = ReportFormat::kText;
};

inline constexpr int kMaxTraceSide = 16;

int cmd_detect(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_report(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_trace(const CliConfig& config, std::ostream& out, std::ostream& err);

// Parses argv-style arguments (args[0] is the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace edgecli
