// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "jobs.hpp"
#include "sprod/parallel.hpp"
#include "sprod/suites.hpp"

using namespace sprod;

namespace {

constexpr std::uint64_t kSeed = 7;

struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<BatteryResult()> run;
};

BatteryResult merge(std::initializer_list<BatteryResult> parts) {
    BatteryResult out;
    for (const auto& p : parts) out.append(p);
    return out;
}

BatteryResult determinism() {
    BatteryResult out;
    set_threads(1);
    std::string a = cli::canonical_dump(cli::suite_report("all", kSeed));
    std::string b = cli::canonical_dump(cli::suite_report("all", kSeed));
    set_threads(4);
    std::string c = cli::canonical_dump(cli::suite_report("all", kSeed));
    set_threads(1);
    out.checks.push_back({"determinism.repeat", a == b, std::to_string(a.size()) + " bytes", std::to_string(b.size()) + " bytes"});
    out.checks.push_back({"determinism.threads_1_vs_4", a == c, std::to_string(a.size()) + " bytes", std::to_string(c.size()) + " bytes"});
    return out;
}

} // namespace

int main() {
    // The numeric tolerance (1e-8) is pinned inside battery_su2_numerics / battery_su3_numerics.
    const std::vector<Criterion> criteria{
        {1, "Yang-Baxter residuals vanish (SU2, SU3, mixed)", 10, [] { return battery_yangbaxter(kSeed, 50); }},
        {2, "DWPF Izergin = Kostov = lattice, l = 1..3", 30, [] { return battery_dwpf(kSeed, 20); }},
        {3, "Korepin properties 1-4, l = 2, 3", 30, [] { return battery_korepin(kSeed); }},
        {4, "partial DWPF forms, limits and all-infinite constants", 30, [] { return battery_pdwpf(kSeed); }},
        {5, "SU(2) sum formula = chain oracle, l = L = 1..3", 60, [] { return battery_su2_oracle(kSeed, 20); }},
        {6, "Slavnov sum = determinant, infinite forms and limits", 60, [] { return battery_slavnov(kSeed); }},
        {7, "SU(3) partition sum for Z = lattice", 180, [] { return battery_theorem1(kSeed, 10); }},
        {8, "infinite limits of Z, f(mu,w) Z(l|w) expansion", 60, [] { return battery_theorem2(kSeed); }},
        {9, "SU(3) sum formula = nested chain oracle", 120, [] { return battery_su3_oracle(kSeed); }},
        {10, "factorized determinants = sequential limits", 120, [] { return battery_factorized(kSeed); }},
        {11, "staggered double limits and non-commutation", 30, [] { return battery_staggered(kSeed); }},
        {12, "numeric Bethe roots are transfer eigenvectors (< 1e-8)", 30,
         [] { return merge({battery_su2_numerics(kSeed), battery_su3_numerics(kSeed)}); }},
        {13, "suite reports are deterministic across runs and threads", 600, determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        BatteryResult r;
        std::string err;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            err = e.what();
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = s <= c.budget_s;
        bool pass = err.empty() && r.ok() && !r.checks.empty() && in_time;
        failed += pass ? 0 : 1;
        std::printf("criterion %2d %s  %s  [%zu checks, %.2f s / %.0f s]\n", c.id, pass ? "PASS" : "FAIL", c.title, r.checks.size(), s,
                    c.budget_s);
        if (!err.empty()) std::printf("    error: %s\n", err.c_str());
        if (!in_time) std::printf("    over time budget\n");
        for (const auto& k : r.checks)
            if (!k.pass) std::printf("    fail %s: %s vs %s\n", k.name.c_str(), k.lhs.c_str(), k.rhs.c_str());
        for (const auto& n : r.notes) std::printf("    note %s: %s\n", n.name.c_str(), n.value.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
