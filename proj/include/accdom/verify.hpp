#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "accdom/graph.hpp"

namespace accdom {

// One failing instance: the instance description, what the rule under test
// promised, and what the solver actually found.
struct CheckFailure {
  std::string instance;
  std::string expected;
  std::string actual;
};

struct RunConfig {
  std::string theorem_id;    // one of known_check_ids()
  std::optional<int> max_n;  // overrides the per-check size ceiling
  std::optional<int> samples;  // overrides the per-check sample count
  std::uint64_t seed = 1;
};

// Reports are deterministic for a fixed config except for elapsed_ms.
// At most the first 50 failing instances are recorded; instances_tested
// always counts the full run. Failures end up sorted by instance string.
struct VerificationReport {
  std::string theorem_id;
  long long instances_tested = 0;
  std::vector<CheckFailure> failures;
  long long elapsed_ms = 0;
  std::uint64_t seed = 1;

  bool passed() const { return failures.empty(); }
};

const std::vector<std::string>& known_check_ids();

// Runs a single check; throws std::invalid_argument for an unknown id.
VerificationReport run_check(const RunConfig& config);

// Every known check with the same overrides, in known_check_ids() order.
std::vector<VerificationReport> run_all_checks(const RunConfig& config);

// Fields in the order theorem_id, instances_tested, failures, elapsed_ms,
// seed; each failure as {instance, expected, actual}.
std::string report_to_json(const VerificationReport& report);
std::string reports_to_json(const std::vector<VerificationReport>& reports);

// Equality transfer across components: gamma_a(G) == gamma(G) exactly when
// some component C has gamma_a(C) == gamma(C). Returns whether that holds
// for this graph (trivially true when connected). Nonempty input.
bool check_disconnected_rule(const Graph& g);

}  // namespace accdom
