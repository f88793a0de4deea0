#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace sprod::cli {

using nlohmann::json;

// Report for one job: echo, result, checks, timing_ms, "schema":"1".
// Throws Error (UnknownKind, SchemaError or any domain kind) on bad input.
json run_job(const json& job);

// Report for a named suite; "status" is "pass" iff every check passed.
json suite_report(const std::string& name, std::uint64_t seed);

// Report text with timing fields removed, for determinism comparisons.
std::string canonical_dump(json report);

const std::vector<std::string>& job_kinds();

} // namespace sprod::cli
