#pragma once

#include "ghecke/config.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace ghecke {

struct CliOptions {
  std::string command;
  std::optional<std::string> config_path;
  std::string out_dir = "out";
  std::optional<std::size_t> truncation;
  std::optional<std::size_t> max_dim;
  std::optional<std::string> catalog_path;
  std::optional<std::string> k_override;
  bool use_cache = true;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitFalsified = 2;

inline constexpr const char* kReportSchema = "ghecke-report/1";

/// Runs one command; writes <out>/<command>.json (and CSV mirrors of matrices) and returns
/// the exit status.  Diagnostics go to `err`, a one-line summary to `out`.
int run(const CliOptions& options, std::ostream& out, std::ostream& err);

/// Hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace ghecke
