#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rcat/serialize.hpp"

namespace rcat {

struct BaseDesc {
    std::string kind = "finset";  // finset | chain
    int p = 3;
    int max_degree = 2;  // span of sampled complexes
    int max_dim = 2;     // per-degree dimension bound
};

struct ModuleDesc {
    std::string kind = "self";  // self | diagram_over
    std::string inner_index = "arrow";
};

struct Caps {
    unsigned long long hom_cap = 2000000;
    int max_size = 2;  // sampled FinSet object size bound
};

struct Scenario {
    BaseDesc base;
    ReedyStructure index;
    std::string index_name;  // builtin name, or "custom"
    ModuleDesc module_;
    std::vector<std::string> suites;
    int samples = 20;
    std::uint64_t seed = 1;
    Caps caps;
};

Scenario scenario_from_json(const Json& j);
Json scenario_to_json(const Scenario& sc);

struct FailureRecord {
    int case_index = 0;
    std::uint64_t case_seed_value = 0;
    std::string detail;
    Json witness;
};

struct SuiteReport {
    std::string name;
    std::string mode = "sampled";  // sampled | exhaustive
    int cases = 0;
    int passes = 0;
    std::vector<FailureRecord> failures;
    long long wall_ms = 0;
};

struct RunReport {
    Scenario scenario;
    std::vector<SuiteReport> suites;
    bool ok = true;  // failures in any non-negative-control suite clear this
};

std::vector<std::string> suite_names();

RunReport run_scenario(const Scenario& sc);

Json report_to_json(const RunReport& rep, bool omit_timing);

/// Deterministic fixture generator for the CLI `generate` command.
Json generate_fixture(const std::string& kind, const Json& params, std::uint64_t seed);

/// Catalog of builtin index categories with Reedy metadata.
Json builtins_catalog();

}  // namespace rcat
