#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sprod {

struct Check {
    std::string name;
    bool pass = false;
    std::string lhs, rhs;
};

// Recorded observations that are reported but never asserted.
struct Note {
    std::string name;
    std::string value;
};

struct BatteryResult {
    std::vector<Check> checks;
    std::vector<Note> notes;

    bool ok() const;
    void append(BatteryResult other);
};

// One battery per verified identity family; every instance is drawn from seed.
BatteryResult battery_yangbaxter(std::uint64_t seed, int triples = 50);
BatteryResult battery_dwpf(std::uint64_t seed, int per_size = 20);
BatteryResult battery_korepin(std::uint64_t seed);
BatteryResult battery_pdwpf(std::uint64_t seed);
BatteryResult battery_su2_oracle(std::uint64_t seed, int per_size = 20);
BatteryResult battery_slavnov(std::uint64_t seed);
BatteryResult battery_theorem1(std::uint64_t seed, int per_size = 10);
BatteryResult battery_theorem2(std::uint64_t seed);
BatteryResult battery_su3_oracle(std::uint64_t seed);
BatteryResult battery_factorized(std::uint64_t seed);
BatteryResult battery_staggered(std::uint64_t seed);
BatteryResult battery_su2_numerics(std::uint64_t seed);
BatteryResult battery_su3_numerics(std::uint64_t seed);

// Named suites: yangbaxter, korepin, su2_oracle, slavnov, theorem1, theorem2,
// su3_oracle, factorized, staggered, all. Throws UnknownSuite otherwise.
const std::vector<std::string>& suite_names();
BatteryResult run_suite(const std::string& name, std::uint64_t seed);

} // namespace sprod
