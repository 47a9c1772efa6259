#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "amideal/relations.hpp"

namespace amideal {

// One registry entry: a stable check id, the locus label it replays, a
// one-line description of what is computed, and the claim text it pins down.
struct CheckInfo {
    std::string id;
    std::string locus;
    std::string description;
    std::string quote;
};

struct CheckResult {
    std::string id;
    std::string status;  // "pass" | "fail" | "indeterminate"
    Index horizon = 0;
    nlohmann::ordered_json details;
};

struct CorpusReport {
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
};

// Stable-ordered registry (16+ entries).
const std::vector<CheckInfo>& list_checks();

// Run the selected checks (empty selection = all) with deterministic
// randomness derived from cfg.seed; results appear in registry order.
// Unknown ids throw UnknownCheckId.  A failing randomized check writes
// "<id>-repro.json" with the seed and offending instance.
CorpusReport run_corpus(const std::vector<std::string>& selection,
                        const CheckConfig& cfg = {});

// Report serialization: {"version": 1, "seed": ..., "checks": [...]}.
// Identical configs produce byte-identical dumps.
nlohmann::ordered_json report_json(const CorpusReport& report);

}  // namespace amideal
