#pragma once
// Named end-to-end runs wiring the whole library together. Each scenario
// builds its fixed instances, executes the relevant constructions and
// verifications, and returns a deterministic JSON report: the scenario id, a
// digest of the effective inputs, named checks with status pass / fail /
// evidence-only, and the produced artifacts (bases, certificates,
// decompositions) inlined. Every "pass" is backed by an embedded
// re-verifiable artifact; "evidence-only" never counts toward the exit code.

#include <cstdint>
#include <string>
#include <vector>

#include "fmb/json_io.hpp"

namespace fmb {

struct ScenarioArgs {
  // family parameters (lemma2)
  int m = 0;
  int n = 1;
  int s = 1;
  // characteristic, where the scenario offers a choice (lemma2, lalpha)
  uint32_t p = 2;
  // randomized-instance count (thm1-roundtrip)
  int random = 100;
  // PRNG seed for every randomized part
  uint64_t seed = 7;
  // candidate budget for exhaustive/bounded searches
  uint64_t budget = 200000;
  // sample count for the evidence-only randomized search (thm2-probe)
  uint64_t samples = 1000000;
};

struct ScenarioResult {
  Json report;
  int exit_code = 0;  // 0 = every non-evidence check passed, 1 = some failed
};

// the scenario ids, in CLI listing order
std::vector<std::string> scenario_names();

// runs one scenario; throws std::invalid_argument on unknown names or
// out-of-range parameters (the CLI maps that to its invalid-input exit code)
ScenarioResult run_scenario(const std::string& name, const ScenarioArgs& args);

}  // namespace fmb
