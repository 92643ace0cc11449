#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oigraph {

enum class CheckStatus { pass, fail, outside_coverage };

std::string to_string(CheckStatus s);

struct CheckRecord {
  int criterion = 0;  // acceptance item this record belongs to
  std::string name;
  std::string space;
  std::string anchor;  // the claim being checked, or "derived oracle"
  std::string expected;
  std::string computed;
  CheckStatus status = CheckStatus::pass;
  double seconds = 0;
};

struct VerifyOptions {
  std::string suite = "core";  // core | extended
  unsigned threads = 1;
  std::uint64_t budget = 1'000'000;
  std::uint64_t search_budget = 2000;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckRecord> records;

  bool ok() const;
  /// Criterion ids present in the report, ascending.
  std::vector<int> criteria() const;
  /// A criterion passes when none of its records failed.
  bool criterion_passed(int id) const;
  std::string to_json() const;
  std::string to_csv(bool header = true) const;
};

/// Title of an acceptance item, e.g. "connectivity and diameter".
std::string criterion_title(int id);

/// Runs one acceptance item.
std::vector<CheckRecord> run_criterion(int id, const VerifyOptions& options);

/// Runs the suite. Throws Error for an unknown suite name.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace oigraph
