#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cube_orbits::cli {

enum class Suite { Formulas, OracleVsFormula, Bijections, Automorphisms, All };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

/// Largest --max each suite accepts; larger values are refused, not truncated.
std::size_t suite_bound(Suite s);
std::size_t suite_default_max(Suite s);

struct CheckResult {
  std::string name;
  std::string range;
  bool passed = true;
  std::string counterexample;  ///< first failure, empty on pass
};

struct SuiteReport {
  Suite suite{};
  bool refused = false;
  std::string refusal;
  std::vector<CheckResult> checks;

  bool passed() const noexcept;
};

/// Runs one suite (or every suite for Suite::All) up to max_n. A missing
/// max_n means each suite's default.
std::vector<SuiteReport> run_verify(Suite suite, std::optional<std::size_t> max_n);

}  // namespace cube_orbits::cli
