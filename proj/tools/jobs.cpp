#include "jobs.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "sprod/dwpf.hpp"
#include "sprod/scalarprod_su2.hpp"
#include "sprod/scalarprod_su3.hpp"
#include "sprod/spinchain_su2.hpp"
#include "sprod/spinchain_su3.hpp"
#include "sprod/suites.hpp"

namespace sprod::cli {

namespace {

struct Out {
    json result;
    json checks = json::array();

    void check(const std::string& name, const Rat& lhs, const Rat& rhs) {
        checks.push_back({{"name", name}, {"status", lhs == rhs ? "pass" : "fail"}, {"lhs", lhs.str()}, {"rhs", rhs.str()}});
    }
};

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorKind::SchemaError, what); }

const json& field(const json& p, const char* key) {
    if (!p.is_object() || !p.contains(key)) schema(std::string("missing parameter '") + key + "'");
    return p.at(key);
}

Rat to_rat(const json& v, const char* key) {
    if (v.is_number_integer()) return Rat(v.get<long>());
    if (v.is_string()) {
        try {
            return Rat::parse(v.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    schema(std::string("parameter '") + key + "' must be an integer or a \"p/q\" string");
}

Rat rat(const json& p, const char* key) { return to_rat(field(p, key), key); }

std::vector<Rat> rats(const json& p, const char* key) {
    const json& v = field(p, key);
    if (!v.is_array()) schema(std::string("parameter '") + key + "' must be an array");
    std::vector<Rat> out;
    for (const auto& x : v) out.push_back(to_rat(x, key));
    return out;
}

int integer(const json& p, const char* key) {
    const json& v = field(p, key);
    if (!v.is_number_integer()) schema(std::string("parameter '") + key + "' must be an integer");
    return v.get<int>();
}

std::string word(const json& p, const char* key) {
    const json& v = field(p, key);
    if (!v.is_string()) schema(std::string("parameter '") + key + "' must be a string");
    return v.get<std::string>();
}

template <class E>
E choice(const json& p, const char* key, const std::map<std::string, E>& options) {
    std::string w = word(p, key);
    auto it = options.find(w);
    if (it == options.end()) schema(std::string("parameter '") + key + "' has unknown value '" + w + "'");
    return it->second;
}

EigenfunctionSpec eigen(const json& p, const char* key) {
    const json& v = field(p, key);
    std::string kind = word(v, "kind");
    if (kind == "one") return EigenfunctionSpec::one();
    if (kind == "xxx") return EigenfunctionSpec::xxx(rats(v, "points"));
    if (kind == "xxx_anti") return EigenfunctionSpec::xxx_anti(rats(v, "points"));
    if (kind == "table") {
        const json& t = field(v, "values");
        if (!t.is_object()) schema("table values must be an object");
        std::map<Rat, Rat> table;
        for (auto it = t.begin(); it != t.end(); ++it) table[to_rat(json(it.key()), "values")] = to_rat(it.value(), "values");
        return EigenfunctionSpec::constants(table);
    }
    schema("unknown eigenfunction kind '" + kind + "'");
}

json str_list(const std::vector<Rat>& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(x.str());
    return a;
}

json complex_sets(const std::vector<std::vector<Complex>>& sets) {
    json a = json::array();
    for (const auto& s : sets) {
        json one = json::array();
        for (const auto& z : s) one.push_back({z.real(), z.imag()});
        a.push_back(one);
    }
    return a;
}

std::uint64_t job_seed(const json& p, const json& job) {
    if (p.contains("seed")) return static_cast<std::uint64_t>(integer(p, "seed"));
    if (job.contains("seed") && job.at("seed").is_number_integer()) return job.at("seed").get<std::uint64_t>();
    return 7;
}

using Handler = std::function<void(const json& p, const json& job, Out& out)>;

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table{
        {"weight_f", [](const json& p, const json&, Out& o) { o.result = weight_f(rat(p, "l"), rat(p, "m")).str(); }},
        {"weight_g", [](const json& p, const json&, Out& o) { o.result = weight_g(rat(p, "l"), rat(p, "m")).str(); }},
        {"dwpf_izergin", [](const json& p, const json&, Out& o) { o.result = dwpf_izergin(rats(p, "lambdas"), rats(p, "ws")).str(); }},
        {"dwpf_kostov", [](const json& p, const json&, Out& o) { o.result = dwpf_kostov(rats(p, "lambdas"), rats(p, "ws")).str(); }},
        {"dwpf_lattice",
         [](const json& p, const json&, Out& o) { o.result = contract_lattice(dwpf_lattice(rats(p, "lambdas"), rats(p, "ws"))).str(); }},
        {"pdwpf",
         [](const json& p, const json&, Out& o) {
             auto lam = rats(p, "lambdas"), w = rats(p, "ws");
             std::string f = p.contains("formula") ? word(p, "formula") : "IZERGIN";
             if (f == "LIMIT")
                 o.result = pdwpf_from_limit(lam, w).str();
             else
                 o.result = pdwpf(lam, w, choice<PdwpfFormula>(p, "formula", {{"IZERGIN", PdwpfFormula::IZERGIN},
                                                                              {"KOSTOV", PdwpfFormula::KOSTOV},
                                                                              {"LATTICE", PdwpfFormula::LATTICE}}))
                                .str();
         }},
        {"dwpf_all_infinite",
         [](const json& p, const json&, Out& o) {
             auto side = choice<InfSide>(p, "side", {{"LAMBDA", InfSide::LAMBDA}, {"W", InfSide::W}});
             auto fixed = rats(p, "fixed");
             Rat lim = dwpf_all_infinite_limit(side, fixed);
             o.result = lim.str();
             o.check("closed_form", lim, dwpf_all_infinite(side, static_cast<int>(fixed.size())));
         }},
        {"yang_baxter",
         [](const json& p, const json&, Out& o) {
             auto combo = choice<YBCombo>(p, "combo", {{"SU2", YBCombo::SU2}, {"SU3", YBCombo::SU3}, {"MIXED_STAR", YBCombo::MIXED_STAR}});
             bool zero = yang_baxter_residual(combo, rat(p, "l"), rat(p, "m"), rat(p, "n")).is_zero();
             o.result = {{"residual_zero", zero}};
             o.checks.push_back({{"name", "residual_zero"}, {"status", zero ? "pass" : "fail"}, {"lhs", zero ? "0" : "nonzero"}, {"rhs", "0"}});
         }},
        {"sp_sum",
         [](const json& p, const json&, Out& o) {
             o.result = sp_sum(rats(p, "lambdaC"), rats(p, "lambdaB"), eigen(p, "a"), eigen(p, "d")).str();
         }},
        {"sp_sum_normalized",
         [](const json& p, const json&, Out& o) { o.result = sp_sum_normalized(rats(p, "lambdaC"), rats(p, "lambdaB"), eigen(p, "r")).str(); }},
        {"su2_scalar_product_direct",
         [](const json& p, const json&, Out& o) {
             o.result = su2_scalar_product_direct(rats(p, "lambdaC"), rats(p, "lambdaB"), rats(p, "ws")).str();
         }},
        {"bethe_residual",
         [](const json& p, const json&, Out& o) { o.result = str_list(bethe_residual(rats(p, "lambdas"), eigen(p, "a"), eigen(p, "d"))); }},
        {"slavnov_onshell_sum",
         [](const json& p, const json&, Out& o) {
             o.result = slavnov_onshell_sum_values(rats(p, "lambdaC"), rats(p, "lambdaB"), rats(p, "rC")).str();
         }},
        {"slavnov_det",
         [](const json& p, const json&, Out& o) { o.result = slavnov_det_values(rats(p, "lambdaC"), rats(p, "lambdaB"), rats(p, "rC")).str(); }},
        {"sp_infinite",
         [](const json& p, const json&, Out& o) {
             auto lc = rats(p, "lambdaC"), rc = rats(p, "rC");
             std::string f = p.contains("form") ? word(p, "form") : "DET";
             if (f == "LIMIT")
                 o.result = sp_infinite_from_limit(lc, rc).str();
             else
                 o.result = sp_infinite_values(lc, rc, choice<InfiniteForm>(p, "form", {{"SUM", InfiniteForm::SUM}, {"DET", InfiniteForm::DET}}))
                                .str();
         }},
        {"solve_bethe_numeric",
         [](const json& p, const json& job, Out& o) {
             auto ws = rats(p, "ws");
             auto sols = solve_bethe_numeric(ws, integer(p, "n"), job_seed(p, job));
             o.result = {{"roots", complex_sets(sols)}};
             json res = json::array();
             for (const auto& s : sols) res.push_back(transfer_check(Rat(3, 7), s, ws));
             o.result["transfer_residual"] = res;
         }},
        {"su3_scalar_product_direct",
         [](const json& p, const json&, Out& o) {
             Su3ChainSpec spec{rats(p, "ws"), rats(p, "vs")};
             o.result = su3_scalar_product_direct(rats(p, "muC"), rats(p, "lambdaC"), rats(p, "lambdaB"), rats(p, "muB"), spec).str();
         }},
        {"su3_bethe_residuals",
         [](const json& p, const json&, Out& o) {
             auto r = su3_bethe_residuals(rats(p, "lambdas"), rats(p, "mus"), eigen(p, "r1"), eigen(p, "r2"));
             o.result = {{"first", str_list(r.first)}, {"second", str_list(r.second)}};
         }},
        {"su3_transfer_eigenvalue",
         [](const json& p, const json&, Out& o) {
             o.result = su3_transfer_eigenvalue(rat(p, "x"), rats(p, "lambdas"), rats(p, "mus"), rats(p, "ws"), rats(p, "vs")).str();
         }},
        {"solve_su3_bethe_numeric",
         [](const json& p, const json& job, Out& o) {
             Su3ChainSpec spec{rats(p, "ws"), rats(p, "vs")};
             int l = integer(p, "l"), m = integer(p, "m");
             auto sols = solve_su3_bethe_numeric(spec, l, m, job_seed(p, job));
             o.result = {{"roots", complex_sets(sols)}};
             json res = json::array();
             for (const auto& s : sols)
                 res.push_back(su3_transfer_check(Rat(3, 7), {s.begin(), s.begin() + l}, {s.begin() + l, s.end()}, spec));
             o.result["transfer_residual"] = res;
         }},
        {"z_su3_oracle",
         [](const json& p, const json&, Out& o) {
             o.result = z_su3_oracle(rats(p, "lambdas"), rats(p, "mus"), rats(p, "ws"), rats(p, "vs")).str();
         }},
        {"z_su3_sum",
         [](const json& p, const json&, Out& o) {
             o.result = z_su3_sum(rats(p, "lambdas"), rats(p, "mus"), rats(p, "ws"), rats(p, "vs")).str();
         }},
        {"z_su3_limit",
         [](const json& p, const json&, Out& o) {
             auto which = choice<ZLimit>(p, "which", {{"MU_INF", ZLimit::MU_INF},
                                                      {"LAMBDA_INF", ZLimit::LAMBDA_INF},
                                                      {"V_INF", ZLimit::V_INF},
                                                      {"W_INF", ZLimit::W_INF}});
             auto a = rats(p, "a"), b = rats(p, "b"), c = rats(p, "c");
             int l = integer(p, "l"), m = integer(p, "m");
             Rat closed = z_su3_limit(which, a, b, c, l, m);
             o.result = closed.str();
             o.check("sequential_limit", z_su3_limit_from_sum(which, a, b, c, l, m), closed);
         }},
        {"lemma1_check",
         [](const json& p, const json&, Out& o) {
             auto [lhs, rhs] = lemma1_check(rats(p, "lambdas"), rats(p, "mus"), rats(p, "ws"));
             o.result = {{"lhs", lhs.str()}, {"rhs", rhs.str()}};
             o.check("lemma1", lhs, rhs);
         }},
        {"su3_sp_sum",
         [](const json& p, const json&, Out& o) {
             o.result = su3_sp_sum(rats(p, "muC"), rats(p, "lambdaC"), rats(p, "lambdaB"), rats(p, "muB"), eigen(p, "a1"), eigen(p, "a2"),
                                   eigen(p, "a3"))
                            .str();
         }},
        {"su3_sp_sum_normalized",
         [](const json& p, const json&, Out& o) {
             o.result =
                 su3_sp_sum_normalized(rats(p, "muC"), rats(p, "lambdaC"), rats(p, "lambdaB"), rats(p, "muB"), eigen(p, "r1"), eigen(p, "r2"))
                     .str();
         }},
        {"su3_sp_onshell_sum",
         [](const json& p, const json&, Out& o) {
             o.result =
                 su3_sp_onshell_sum(rats(p, "muC"), rats(p, "lambdaC"), rats(p, "lambdaB"), rats(p, "muB"), rats(p, "r1C"), rats(p, "r2C")).str();
         }},
        {"su3_sp_factorized",
         [](const json& p, const json&, Out& o) {
             auto limit = choice<FactorLimit>(p, "limit", {{"MUB_INF", FactorLimit::MUB_INF}, {"LAMB_INF", FactorLimit::LAMB_INF}});
             auto mc = rats(p, "muC"), lc = rats(p, "lambdaC"), sb = rats(p, "survivingB"), r1 = rats(p, "r1C"), r2 = rats(p, "r2C");
             Rat det = su3_sp_factorized(limit, mc, lc, sb, r1, r2);
             o.result = det.str();
             o.check("sequential_limit", su3_sp_factorized_from_limit(limit, mc, lc, sb, r1, r2), det);
             o.check("sum_form", su3_sp_factorized_sum(limit, mc, lc, sb, r1, r2), det);
         }},
        {"staggered_double_limit",
         [](const json& p, const json&, Out& o) {
             auto order = choice<StaggerOrder>(p, "order", {{"LAMBDA_THEN_MU", StaggerOrder::LAMBDA_THEN_MU},
                                                            {"MU_THEN_LAMBDA", StaggerOrder::MU_THEN_LAMBDA}});
             auto mc = rats(p, "muC"), lc = rats(p, "lambdaC"), r1 = rats(p, "r1C"), r2 = rats(p, "r2C");
             Rat lim = staggered_double_limit(order, mc, lc, r1, r2);
             o.result = lim.str();
             o.check("closed_form", lim, staggered_closed_form(order, mc, lc, r1, r2));
         }},
    };
    return table;
}

long elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count());
}

} // namespace

const std::vector<std::string>& job_kinds() {
    static const std::vector<std::string> kinds = [] {
        std::vector<std::string> k;
        for (const auto& [name, _] : handlers()) k.push_back(name);
        return k;
    }();
    return kinds;
}

json run_job(const json& job) {
    auto t0 = std::chrono::steady_clock::now();
    if (!job.is_object() || !job.contains("kind") || !job.at("kind").is_string()) schema("job needs a string 'kind'");
    const std::string kind = job.at("kind").get<std::string>();
    auto it = handlers().find(kind);
    if (it == handlers().end()) throw Error(ErrorKind::UnknownKind, "no operation named '" + kind + "'");
    const json params = job.contains("params") ? job.at("params") : json::object();
    if (!params.is_object()) schema("'params' must be an object");
    Out out;
    it->second(params, job, out);
    bool pass = true;
    for (const auto& c : out.checks) pass = pass && c.at("status") == "pass";
    return {{"schema", "1"}, {"job", job},          {"result", out.result},
            {"checks", out.checks}, {"status", pass ? "pass" : "fail"}, {"timing_ms", elapsed_ms(t0)}};
}

json suite_report(const std::string& name, std::uint64_t seed) {
    auto t0 = std::chrono::steady_clock::now();
    BatteryResult r = run_suite(name, seed);
    json checks = json::array(), notes = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"lhs", c.lhs}, {"rhs", c.rhs}});
    for (const auto& n : r.notes) notes.push_back({{"name", n.name}, {"value", n.value}});
    size_t failed = 0;
    for (const auto& c : r.checks) failed += c.pass ? 0 : 1;
    return {{"schema", "1"},
            {"suite", name},
            {"seed", seed},
            {"status", failed ? "fail" : "pass"},
            {"passed", r.checks.size() - failed},
            {"failed", failed},
            {"checks", checks},
            {"notes", notes},
            {"timing_ms", elapsed_ms(t0)}};
}

std::string canonical_dump(json report) {
    report.erase("timing_ms");
    return report.dump(2);
}

} // namespace sprod::cli
