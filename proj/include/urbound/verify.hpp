#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace urbound {

struct VerifyOptions {
  std::vector<std::size_t> dims;   // empty: suite default
  std::optional<int> samples;      // unset: suite default
  std::uint64_t seed = 7;
};

struct SuiteReport {
  std::string name;
  bool passed = true;
  std::vector<std::string> lines;  // one "PASS ..." / "FAIL ..." line per check
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(const std::string& name, const VerifyOptions& options);

// Table reference values for d = 2 .. 8: {delta_u2, ur1, ur2, ur3}.
struct TableRow {
  std::size_t d;
  double delta_u2;
  double ur1;
  double ur2;
  double ur3;
};
const std::vector<TableRow>& reference_table();

}  // namespace urbound
