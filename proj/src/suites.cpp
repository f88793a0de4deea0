#include "sprod/suites.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "sprod/dwpf.hpp"
#include "sprod/randgen.hpp"
#include "sprod/scalarprod_su2.hpp"
#include "sprod/scalarprod_su3.hpp"
#include "sprod/spinchain_su2.hpp"
#include "sprod/spinchain_su3.hpp"
#include "sprod/vertexmodel.hpp"

namespace sprod {

bool BatteryResult::ok() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void BatteryResult::append(BatteryResult other) {
    for (auto& c : other.checks) checks.push_back(std::move(c));
    for (auto& n : other.notes) notes.push_back(std::move(n));
}

namespace {

std::string join(const std::vector<Rat>& xs) {
    std::string s = "(";
    for (size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].str();
    return s + ")";
}

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

// Equality check; a thrown domain error counts as a failure with its message.
template <class F, class G>
void expect_eq(BatteryResult& out, const std::string& name, F&& lhs, G&& rhs) {
    Check c{name, false, "", ""};
    try {
        Rat a = lhs(), b = rhs();
        c.lhs = a.str();
        c.rhs = b.str();
        c.pass = a == b;
    } catch (const Error& e) {
        c.lhs = e.what();
        c.rhs = "-";
    }
    out.checks.push_back(std::move(c));
}

void expect_below(BatteryResult& out, const std::string& name, double value, double tol) {
    out.checks.push_back({name, value < tol, sci(value), "< " + sci(tol)});
}

void expect_true(BatteryResult& out, const std::string& name, bool ok, const std::string& lhs, const std::string& rhs) {
    out.checks.push_back({name, ok, lhs, rhs});
}

std::string shape(int l, int m) { return "(" + std::to_string(l) + "," + std::to_string(m) + ")"; }

std::vector<Rat> free_constants(RandomRationals& rng, size_t n) {
    std::vector<Rat> r;
    for (size_t i = 0; i < n; ++i) {
        Rat x = rng.any();
        r.push_back(x.is_zero() ? Rat(1) : x);
    }
    return r;
}

std::vector<RatFunc> lift(const std::vector<Rat>& xs) { return std::vector<RatFunc>(xs.begin(), xs.end()); }

} // namespace

BatteryResult battery_yangbaxter(std::uint64_t seed, int triples) {
    BatteryResult out;
    RandomRationals rng(seed ^ 0x1b);
    const std::pair<YBCombo, const char*> combos[] = {{YBCombo::SU2, "su2"}, {YBCombo::SU3, "su3"}, {YBCombo::MIXED_STAR, "mixed_star"}};
    for (auto [combo, label] : combos) {
        int bad = 0;
        std::string first_bad = "-";
        for (int t = 0; t < triples; ++t) {
            rng.reset_pool();
            auto xs = rng.fresh(3);
            if (!yang_baxter_residual(combo, xs[0], xs[1], xs[2]).is_zero()) {
                if (bad++ == 0) first_bad = join(xs);
            }
        }
        expect_true(out, std::string("yang_baxter.") + label, bad == 0, std::to_string(bad) + " nonzero residuals", "0, first " + first_bad);
    }
    return out;
}

BatteryResult battery_dwpf(std::uint64_t seed, int per_size) {
    BatteryResult out;
    expect_eq(out, "dwpf.hand_value", [] { return dwpf_izergin<Rat>({2, 4}, {0, 1}); }, [] { return Rat(2, 3); });
    expect_eq(out, "dwpf.hand_value_lattice", [] { return contract_lattice(dwpf_lattice({2, 4}, {0, 1})); }, [] { return Rat(2, 3); });
    RandomRationals rng(seed ^ 0x2d);
    for (int l = 1; l <= 3; ++l)
        for (int k = 0; k < per_size; ++k) {
            rng.reset_pool();
            auto lam = rng.fresh(l), w = rng.fresh(l);
            std::string tag = "dwpf.l" + std::to_string(l) + "." + std::to_string(k);
            expect_eq(out, tag + ".izergin_kostov", [&] { return dwpf_izergin(lam, w); }, [&] { return dwpf_kostov(lam, w); });
            expect_eq(out, tag + ".izergin_lattice", [&] { return dwpf_izergin(lam, w); }, [&] { return contract_lattice(dwpf_lattice(lam, w)); });
        }
    return out;
}

BatteryResult battery_korepin(std::uint64_t seed) {
    BatteryResult out;
    RandomRationals rng(seed ^ 0x3c);
    rng.reset_pool();
    {
        auto lam = rng.fresh(1), w = rng.fresh(1);
        expect_eq(out, "korepin.single", [&] { return dwpf_izergin(lam, w); }, [&] { return weight_g(lam[0], w[0]); });
    }
    for (int l = 2; l <= 3; ++l) {
        rng.reset_pool();
        auto lam = rng.fresh(l), w = rng.fresh(l);
        std::string tag = "korepin.l" + std::to_string(l);
        Rat z = dwpf_izergin(lam, w);
        auto lam_p = lam, w_p = w;
        std::rotate(lam_p.begin(), lam_p.begin() + 1, lam_p.end());
        std::swap(w_p.front(), w_p.back());
        expect_eq(out, tag + ".symmetry_lambda", [&] { return dwpf_izergin(lam_p, w); }, [&] { return z; });
        expect_eq(out, tag + ".symmetry_w", [&] { return dwpf_izergin(lam, w_p); }, [&] { return z; });
        for (int i = 0; i < l; ++i) {
            auto lf = lift(lam), wf = lift(w);
            lf[static_cast<size_t>(i)] = RatFunc::var();
            expect_eq(out, tag + ".decay_lambda" + std::to_string(i + 1), [&] { return ratfunc_limit(dwpf_izergin(lf, wf), 0); },
                      [] { return Rat(0); });
            lf = lift(lam);
            wf[static_cast<size_t>(i)] = RatFunc::var();
            expect_eq(out, tag + ".decay_w" + std::to_string(i + 1), [&] { return ratfunc_limit(dwpf_izergin(lf, wf), 0); },
                      [] { return Rat(0); });
        }
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) {
                auto lhs = [&] {
                    auto lf = lift(lam);
                    lf[static_cast<size_t>(i)] = RatFunc::var();
                    RatFunc z = (RatFunc::var() - RatFunc(w[static_cast<size_t>(j)])) * dwpf_izergin(lf, lift(w));
                    return ratfunc_eval(z, w[static_cast<size_t>(j)]);
                };
                auto rhs = [&] {
                    std::vector<Rat> lh, wh;
                    for (int k = 0; k < l; ++k) {
                        if (k != i) lh.push_back(lam[static_cast<size_t>(k)]);
                        if (k != j) wh.push_back(w[static_cast<size_t>(k)]);
                    }
                    const Rat& wj = w[static_cast<size_t>(j)];
                    return f_set(std::vector<Rat>{wj}, wh) * f_set(lh, std::vector<Rat>{wj}) * dwpf_izergin(lh, wh);
                };
                expect_eq(out, tag + ".residue_" + std::to_string(i + 1) + std::to_string(j + 1), lhs, rhs);
            }
    }
    return out;
}

BatteryResult battery_pdwpf(std::uint64_t seed) {
    BatteryResult out;
    RandomRationals rng(seed ^ 0x4e);
    for (auto [n, l] : {std::pair{1, 2}, {1, 3}, {2, 3}})
        for (int k = 0; k < 3; ++k) {
            rng.reset_pool();
            auto lam = rng.fresh(n), w = rng.fresh(l);
            std::string tag = "pdwpf.n" + std::to_string(n) + "l" + std::to_string(l) + "." + std::to_string(k);
            auto lattice = [&] { return pdwpf(lam, w, PdwpfFormula::LATTICE); };
            expect_eq(out, tag + ".izergin", [&] { return pdwpf(lam, w, PdwpfFormula::IZERGIN); }, lattice);
            expect_eq(out, tag + ".kostov", [&] { return pdwpf(lam, w, PdwpfFormula::KOSTOV); }, lattice);
            expect_eq(out, tag + ".limit", [&] { return pdwpf_from_limit(lam, w); }, lattice);
        }
    for (int l = 1; l <= 3; ++l) {
        rng.reset_pool();
        auto fixed = rng.fresh(l);
        std::string tag = "pdwpf.all_infinite.l" + std::to_string(l);
        expect_eq(out, tag + ".lambda", [&] { return dwpf_all_infinite_limit(InfSide::LAMBDA, fixed); }, [&] { return factorial(l); });
        expect_eq(out, tag + ".w", [&] { return dwpf_all_infinite_limit(InfSide::W, fixed); },
                  [&] { return (l % 2 ? Rat(-1) : Rat(1)) * factorial(l); });
    }
    return out;
}

BatteryResult battery_su2_oracle(std::uint64_t seed, int per_size) {
    BatteryResult out;
    RandomRationals rng(seed ^ 0x5f);
    for (int l = 1; l <= 3; ++l)
        for (int k = 0; k < per_size; ++k) {
            rng.reset_pool();
            auto w = rng.fresh(l), lc = rng.fresh(l), lb = rng.fresh(l);
            expect_eq(out, "su2_sum.l" + std::to_string(l) + "." + std::to_string(k),
                      [&] { return sp_sum(lc, lb, EigenfunctionSpec::xxx(w), EigenfunctionSpec::one()); },
                      [&] { return su2_scalar_product_direct(lc, lb, w); });
        }
    return out;
}

BatteryResult battery_slavnov(std::uint64_t seed) {
    BatteryResult out;
    RandomRationals rng(seed ^ 0x6a);
    for (int l = 1; l <= 3; ++l)
        for (int k = 0; k < 5; ++k) {
            rng.reset_pool();
            auto lc = rng.fresh(l), lb = rng.fresh(l);
            auto r = free_constants(rng, static_cast<size_t>(l));
            std::string tag = "slavnov.l" + std::to_string(l) + "." + std::to_string(k);
            expect_eq(out, tag + ".sum_det", [&] { return slavnov_onshell_sum_values(lc, lb, r); }, [&] { return slavnov_det_values(lc, lb, r); });
            auto det_form = [&] { return sp_infinite_values(lc, r, InfiniteForm::DET); };
            expect_eq(out, tag + ".infinite_sum_det", [&] { return sp_infinite_values(lc, r, InfiniteForm::SUM); }, det_form);
            expect_eq(out, tag + ".infinite_limit", [&] { return sp_infinite_from_limit(lc, r); }, det_form);
        }
    rng.reset_pool();
    auto w = rng.fresh(3), lc = rng.fresh(2);
    expect_eq(out, "slavnov.infinite_vs_partial_dwpf", [&] { return sp_infinite(lc, EigenfunctionSpec::xxx(w), InfiniteForm::DET); },
              [&] { return pdwpf(lc, w, PdwpfFormula::KOSTOV); });
    return out;
}

BatteryResult battery_theorem1(std::uint64_t seed, int per_size) {
    BatteryResult out;
    expect_eq(out, "theorem1.hand_value_sum", [] { return z_su3_sum<Rat>({2}, {0}, {1}, {3}); }, [] { return Rat(-1, 3); });
    expect_eq(out, "theorem1.hand_value_lattice", [] { return z_su3_oracle({2}, {0}, {1}, {3}); }, [] { return Rat(-1, 3); });
    RandomRationals rng(seed ^ 0x7b);
    for (auto [l, m] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
        auto census = su3_split_census(l, m);
        int total = (1 << l) * (1 << m);
        expect_true(out, "theorem1.census" + shape(l, m), census.kept + census.skipped == total,
                    std::to_string(census.kept) + "+" + std::to_string(census.skipped), std::to_string(total));
        for (int k = 0; k < per_size; ++k) {
            rng.reset_pool();
            auto lam = rng.fresh(l), mu = rng.fresh(m), w = rng.fresh(l), v = rng.fresh(m);
            expect_eq(out, "theorem1" + shape(l, m) + "." + std::to_string(k), [&] { return z_su3_sum(lam, mu, w, v); },
                      [&] { return z_su3_oracle(lam, mu, w, v); });
            if (l == 2 && m == 2 && k == 0) {
                // Z against the product of its two DWPF shadows; recorded only
                Rat z = z_su3_sum(lam, mu, w, v);
                Rat p = f_set(mu, lam) * dwpf_izergin(lam, w) * dwpf_izergin(v, mu);
                out.notes.push_back({"theorem1.no_factorization(2,2)", "Z=" + z.str() + " f(mu,l)Z(l|w)Z(v|mu)=" + p.str() +
                                                                              (z == p ? " equal" : " differ")});
            }
        }
    }
    return out;
}

BatteryResult battery_theorem2(std::uint64_t seed) {
    BatteryResult out;
    RandomRationals rng(seed ^ 0x8c);
    const ZLimit kinds[] = {ZLimit::MU_INF, ZLimit::LAMBDA_INF, ZLimit::V_INF, ZLimit::W_INF};
    for (auto [l, m] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
        rng.reset_pool();
        auto lam = rng.fresh(l), mu = rng.fresh(m), w = rng.fresh(l), v = rng.fresh(m);
        for (auto which : kinds) {
            std::vector<Rat> a, b, c;
            switch (which) {
            case ZLimit::MU_INF: a = lam, b = w, c = v; break;
            case ZLimit::LAMBDA_INF: a = mu, b = w, c = v; break;
            case ZLimit::V_INF: a = lam, b = mu, c = w; break;
            case ZLimit::W_INF: a = lam, b = mu, c = v; break;
            }
            std::string tag = std::string("theorem2.") + zlimit_name(which) + shape(l, m);
            auto closed = [&] { return z_su3_limit(which, a, b, c, l, m); };
            expect_eq(out, tag, [&] { return z_su3_limit_from_sum(which, a, b, c, l, m); }, closed);
            if (l == 2 && m == 2) expect_eq(out, tag + ".lowest_first", [&] { return z_su3_limit_from_sum(which, a, b, c, l, m, false); }, closed);
        }
    }
    for (auto [l, m] : {std::pair{1, 1}, {2, 1}}) {
        rng.reset_pool();
        auto lam = rng.fresh(l), mu = rng.fresh(m), w = rng.fresh(l);
        auto sides = lemma1_check(lam, mu, w);
        expect_eq(out, "lemma1" + shape(l, m), [&] { return sides.first; }, [&] { return sides.second; });
    }
    return out;
}

BatteryResult battery_su3_oracle(std::uint64_t seed) {
    BatteryResult out;
    RandomRationals rng(seed ^ 0x9d);
    for (auto [l, m] : {std::pair{1, 0}, {0, 1}, {1, 1}, {2, 1}})
        for (int k = 0; k < 3; ++k) {
            rng.reset_pool();
            Su3ChainSpec spec{rng.fresh(l), rng.fresh(m)};
            auto lc = rng.fresh(l), lb = rng.fresh(l), mc = rng.fresh(m), mb = rng.fresh(m);
            expect_eq(out, "su3_sum" + shape(l, m) + "." + std::to_string(k),
                      [&] {
                          return su3_sp_sum(mc, lc, lb, mb, EigenfunctionSpec::xxx(spec.ws), EigenfunctionSpec::one(),
                                            EigenfunctionSpec::xxx_anti(spec.vs));
                      },
                      [&] { return su3_scalar_product_direct(mc, lc, lb, mb, spec); });
        }
    return out;
}

BatteryResult battery_factorized(std::uint64_t seed) {
    BatteryResult out;
    RandomRationals rng(seed ^ 0xae);
    for (auto [l, m] : {std::pair{1, 1}, {2, 1}, {1, 2}})
        for (int k = 0; k < 2; ++k) {
            rng.reset_pool();
            auto lc = rng.fresh(l), mc = rng.fresh(m), lb = rng.fresh(l), mb = rng.fresh(m);
            auto r1 = free_constants(rng, lc.size()), r2 = free_constants(rng, mc.size());
            std::string tag = shape(l, m) + "." + std::to_string(k);
            auto f1 = [&] { return su3_sp_factorized(FactorLimit::MUB_INF, mc, lc, lb, r1, r2); };
            auto f2 = [&] { return su3_sp_factorized(FactorLimit::LAMB_INF, mc, lc, mb, r1, r2); };
            expect_eq(out, "factorized1.limit" + tag, [&] { return su3_sp_factorized_from_limit(FactorLimit::MUB_INF, mc, lc, lb, r1, r2); }, f1);
            expect_eq(out, "factorized1.sum_form" + tag, [&] { return su3_sp_factorized_sum(FactorLimit::MUB_INF, mc, lc, lb, r1, r2); }, f1);
            expect_eq(out, "factorized2.limit" + tag, [&] { return su3_sp_factorized_from_limit(FactorLimit::LAMB_INF, mc, lc, mb, r1, r2); }, f2);
            expect_eq(out, "factorized2.sum_form" + tag, [&] { return su3_sp_factorized_sum(FactorLimit::LAMB_INF, mc, lc, mb, r1, r2); }, f2);
        }
    return out;
}

BatteryResult battery_staggered(std::uint64_t seed) {
    BatteryResult out;
    RandomRationals rng(seed ^ 0xbf);
    bool any_differ = false;
    std::string witness = "-";
    for (int k = 0; k < 4; ++k) {
        rng.reset_pool();
        auto lc = rng.fresh(1), mc = rng.fresh(1);
        auto r1 = free_constants(rng, 1), r2 = free_constants(rng, 1);
        std::string tag = "staggered(1,1)." + std::to_string(k);
        Rat a, b;
        expect_eq(out, tag + ".lambda_then_mu", [&] { return a = staggered_double_limit(StaggerOrder::LAMBDA_THEN_MU, mc, lc, r1, r2); },
                  [&] { return staggered_closed_form(StaggerOrder::LAMBDA_THEN_MU, mc, lc, r1, r2); });
        expect_eq(out, tag + ".mu_then_lambda", [&] { return b = staggered_double_limit(StaggerOrder::MU_THEN_LAMBDA, mc, lc, r1, r2); },
                  [&] { return staggered_closed_form(StaggerOrder::MU_THEN_LAMBDA, mc, lc, r1, r2); });
        if (a != b && !any_differ) {
            any_differ = true;
            witness = a.str() + " vs " + b.str();
        }
    }
    expect_true(out, "staggered.orders_differ", any_differ, witness, "distinct values");
    return out;
}

BatteryResult battery_su2_numerics(std::uint64_t seed) {
    BatteryResult out;
    std::vector<Rat> ws{Rat(1, 3), Rat(5, 2)};
    try {
        auto sols = solve_bethe_numeric(ws, 1, seed);
        expect_true(out, "numeric_su2.found", !sols.empty(), std::to_string(sols.size()) + " root sets", ">= 1");
        for (size_t s = 0; s < sols.size(); ++s)
            for (Rat x : {Rat(3, 7), Rat(2), Rat(-5, 3)})
                expect_below(out, "numeric_su2.transfer." + std::to_string(s) + ".x=" + x.str(), transfer_check(x, sols[s], ws), 1e-8);
    } catch (const Error& e) {
        expect_true(out, "numeric_su2.found", false, e.what(), ">= 1");
    }
    return out;
}

BatteryResult battery_su3_numerics(std::uint64_t seed) {
    BatteryResult out;
    const Su3ChainSpec chains[] = {{{Rat(1, 3)}, {Rat(5, 2)}}, {{Rat(1, 3), Rat(-1, 2)}, {Rat(5, 2)}}};
    for (const auto& spec : chains) {
        std::string tag = "numeric_su3.sites" + std::to_string(spec.sites());
        try {
            auto sols = solve_su3_bethe_numeric(spec, 1, 1, seed);
            expect_true(out, tag + ".found", !sols.empty(), std::to_string(sols.size()) + " root sets", ">= 1");
            for (size_t s = 0; s < sols.size(); ++s)
                for (Rat x : {Rat(3, 7), Rat(2), Rat(-5, 3)})
                    expect_below(out, tag + ".transfer." + std::to_string(s) + ".x=" + x.str(),
                                 su3_transfer_check(x, {sols[s][0]}, {sols[s][1]}, spec), 1e-8);
        } catch (const Error& e) {
            expect_true(out, tag + ".found", false, e.what(), ">= 1");
        }
    }
    return out;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"yangbaxter", "korepin",  "su2_oracle", "slavnov",   "theorem1",
                                                "theorem2",   "su3_oracle", "factorized", "staggered", "all"};
    return names;
}

BatteryResult run_suite(const std::string& name, std::uint64_t seed) {
    using Fn = BatteryResult (*)(std::uint64_t);
    static const std::map<std::string, std::vector<Fn>> table{
        {"yangbaxter", {[](std::uint64_t s) { return battery_yangbaxter(s); }}},
        {"korepin", {[](std::uint64_t s) { return battery_dwpf(s); }, battery_korepin, battery_pdwpf}},
        {"su2_oracle", {[](std::uint64_t s) { return battery_su2_oracle(s); }, battery_su2_numerics}},
        {"slavnov", {battery_slavnov}},
        {"theorem1", {[](std::uint64_t s) { return battery_theorem1(s); }}},
        {"theorem2", {battery_theorem2}},
        {"su3_oracle", {battery_su3_oracle, battery_su3_numerics}},
        {"factorized", {battery_factorized}},
        {"staggered", {battery_staggered}},
    };
    BatteryResult out;
    if (name == "all") {
        for (const auto& n : suite_names())
            if (n != "all") out.append(run_suite(n, seed));
        return out;
    }
    auto it = table.find(name);
    if (it == table.end()) throw Error(ErrorKind::UnknownSuite, "no suite named '" + name + "'");
    for (Fn fn : it->second) out.append(fn(seed));
    return out;
}

} // namespace sprod
