#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace trisect::claims {

struct ClaimResult {
  int id = 0;
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string detail;
};

struct Options {
  /// Skip work over fields with order above this bound; 0 means no bound.
  std::uint64_t q_max = 0;
  unsigned threads = 0;
};

/// The full verification suite; one result per numbered claim, in order.
std::vector<ClaimResult> run_all(const Options& opts = {});

/// Convenience: all non-skipped results passed.
bool all_passed(const std::vector<ClaimResult>& results);

}  // namespace trisect::claims
