#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "editdiam/parallel.hpp"

namespace editdiam::verify {

struct Options {
  /// Holds catalogue/ and fixtures/.
  std::filesystem::path data_dir;
  /// Recompute fixture-backed criteria from scratch instead of replaying.
  bool full = false;
  /// Criterion ids to run; empty runs all.
  std::vector<int> only;
  ParallelOptions par;
};

struct Result {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double limit_seconds = 0.0;
};

inline constexpr int kCriterionCount = 12;

std::filesystem::path default_data_dir();

std::vector<Result> run_acceptance(const Options& opts, std::ostream* progress = nullptr);

/// "AC07 PASS  name  1.234s/120s  detail"
std::string format_line(const Result& r);

/// Regenerates the golden fixtures under dir with the no-pruning oracle.
void write_fixtures(const std::filesystem::path& dir, const ParallelOptions& par, std::ostream& log);

}  // namespace editdiam::verify
