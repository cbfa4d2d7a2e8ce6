#pragma once

// Command-line front end. runCommand never throws; failures become reports.

#include <string>
#include <vector>

namespace bundlecon {

struct CommandReport {
  std::string command;
  /// FNV-1a 64-bit digest of the arguments and every input file, in hex.
  std::string inputsDigest;
  /// Machine-readable result block (JSON text).
  std::string json;
  /// Human-readable rendering.
  std::string text;
  /// 0 success, 2 domain error (bad input, infeasible), 1 internal failure
  /// or scenario mismatch.
  int exitCode = 0;
  /// Output selected by --format.
  bool jsonFormat = false;

  const std::string& output() const { return jsonFormat ? json : text; }
};

/// `args` excludes the program name.
CommandReport runCommand(const std::vector<std::string>& args);

}  // namespace bundlecon
