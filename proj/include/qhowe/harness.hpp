#pragma once

// Suite orchestration shared by the CLI and the tests: one configuration
// struct, one runner per suite, a fixed-order `all` runner with optional
// thread fan-out, and JSON serialization of reports.
//
// Determinism contract: given the same config (seed included), every runner
// produces the same Report, and report_json dumps it byte-identically.
// Threads only change who computes a sub-report, never the assembly order.
//
// The braid suite caps its parameters (adjacent indices at n<=3, m<=2,
// N<=4; distant indices at n<=4, m=1, N<=3) because composite blocks grow
// fast with the weight-space dimension; the caps keep the run desk-scale
// while still exercising every relation shape.

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "qhowe/affine_braid.hpp"
#include "qhowe/dimension.hpp"
#include "qhowe/howe_module.hpp"
#include "qhowe/laurent.hpp"
#include "qhowe/mv_lattice.hpp"
#include "qhowe/report.hpp"
#include "qhowe/rickard.hpp"
#include "qhowe/skew_sym.hpp"
#include "qhowe/weights.hpp"

namespace qhowe {

struct HarnessConfig {
    int n = 4;
    int m = 3;
    long N_max = 5;
    long box_radius = 3;
    long mu_max = 5;
    std::uint64_t seed = 12345;
    int jobs = 1;
    std::string flavor = "both"; // sym | skew | both
    // fault-injection hook: flips a sign in the coproduct so the relation
    // and dumbbell suites must fail; exists to prove the checks can fail
    bool corrupt_coproduct = false;

    std::vector<Flavor> flavors() const {
        if (flavor == "sym") return {Flavor::sym};
        if (flavor == "skew") return {Flavor::skew};
        if (flavor == "both") return {Flavor::sym, Flavor::skew};
        throw std::invalid_argument("flavor must be sym, skew, or both");
    }
    ApplyOptions apply_options() const { return ApplyOptions{corrupt_coproduct}; }
    void validate() const {
        if (n < 1 || m < 1) throw std::invalid_argument("n, m >= 1 required");
        if (N_max < 0) throw std::invalid_argument("N-max >= 0 required");
        if (box_radius < 1) throw std::invalid_argument("box-radius >= 1 required");
        if (mu_max < 0) throw std::invalid_argument("mu-max >= 0 required");
        if (jobs < 1) throw std::invalid_argument("jobs >= 1 required");
        flavors();
    }
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"qidentities", "relations", "braid", "affine",
                                                "mv",          "dims",      "dumbbell"};
    return names;
}

namespace detail {

inline void put_config_params(Report& rep, const HarnessConfig& cfg) {
    rep.param("n", std::to_string(cfg.n));
    rep.param("m", std::to_string(cfg.m));
    rep.param("N_max", std::to_string(cfg.N_max));
    rep.param("box_radius", std::to_string(cfg.box_radius));
    rep.param("mu_max", std::to_string(cfg.mu_max));
    rep.param("seed", std::to_string(cfg.seed));
    rep.param("flavor", cfg.flavor);
    if (cfg.corrupt_coproduct) rep.param("corrupt_coproduct", "true");
}

} // namespace detail

// ---------------------------------------------------------------------------
// qidentities: the quantum-integer arithmetic layer.
// ---------------------------------------------------------------------------

inline Report run_qidentities(const HarnessConfig& cfg) {
    Report rep;
    rep.suite = "qidentities";
    rep.param("grid", "10");
    rep.param("seed", std::to_string(cfg.seed));

    {
        // [k'-1][k] - [k'][k-1] = [k'-k] on the full grid
        bool ok = true;
        std::string why;
        for (long k = 0; k <= 10 && ok; ++k)
            for (long kp = 0; kp <= 10 && ok; ++kp)
                if (qint(kp - 1) * qint(k) - qint(kp) * qint(k - 1) != qint(kp - k)) {
                    ok = false;
                    why = "k=" + std::to_string(k) + " k'=" + std::to_string(kp);
                }
        rep.add("two-step qint identity on [0,10]^2", ok, why);
    }
    {
        bool sym_ok = true, one_ok = true, fact_ok = true, nonneg_ok = true;
        std::string why_sym, why_one, why_fact, why_nonneg;
        for (long n = 0; n <= 10; ++n)
            for (long k = 0; k <= n; ++k) {
                const LaurentPoly b = qbinom(n, k);
                if (b != qbinom(n, n - k)) {
                    sym_ok = false;
                    why_sym = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                }
                Int choose;
                mpz_bin_uiui(choose.get_mpz_t(), static_cast<unsigned long>(n),
                             static_cast<unsigned long>(k));
                if (b.eval_one() != choose) {
                    one_ok = false;
                    why_one = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                }
                if (b * qfact(k) * qfact(n - k) != qfact(n)) {
                    fact_ok = false;
                    why_fact = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                }
                for (const auto& [e, c] : b.terms())
                    if (c < 0) {
                        nonneg_ok = false;
                        why_nonneg = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                    }
            }
        rep.add("qbinom symmetry n<=10", sym_ok, why_sym);
        rep.add("qbinom at q=1 n<=10", one_ok, why_one);
        rep.add("qbinom recomposes the factorials n<=10", fact_ok, why_fact);
        rep.add("qbinom coefficients nonnegative n<=10", nonneg_ok, why_nonneg);
    }
    {
        // seeded structural round trips
        std::mt19937_64 rng(cfg.seed);
        std::uniform_int_distribution<long> coeff(-4, 4);
        std::uniform_int_distribution<long> expo(-3, 3);
        auto random_poly = [&]() {
            LaurentPoly p;
            for (int t = 0; t < 4; ++t) p += LaurentPoly::term(Int(coeff(rng)), expo(rng));
            return p;
        };
        bool div_ok = true, gcd_ok = true, sub_ok = true, rat_ok = true;
        for (int s = 0; s < 50; ++s) {
            LaurentPoly a = random_poly();
            LaurentPoly b = random_poly();
            if (!b.is_zero() && div_exact(a * b, b) != a) div_ok = false;
            if (!a.is_zero() && !b.is_zero()) {
                // gcd(ab, b^2) = normalized(gcd(a,b) * b); gcd(h,h) is the
                // normalization of h, so the comparison is unit-insensitive
                const LaurentPoly g = gcd(a * b, b * b);
                const LaurentPoly h = gcd(a, b) * b;
                if (g != gcd(h, h)) gcd_ok = false;
                if (div_exact(a * b, g) * g != a * b) gcd_ok = false;
            }
            if (a.substitute_neg_inv().substitute_neg_inv() != a) sub_ok = false;
            if (!a.is_zero() && !b.is_zero()) {
                const RatFun r(a, b);
                if (r * RatFun(b) != RatFun(a)) rat_ok = false;
                const LaurentPoly c = random_poly();
                if (!c.is_zero() && RatFun(a * c, b * c) != r) rat_ok = false;
                if (!r.den().is_zero() && r.den().min_exp() != 0) rat_ok = false;
            }
        }
        rep.add("div_exact inverts multiplication", div_ok);
        rep.add("gcd divides exactly", gcd_ok);
        rep.add("q -> -q^-1 is an involution", sub_ok);
        rep.add("RatFun reduction is canonical", rat_ok);
    }
    {
        bool ok = true;
        for (long k = 0; k <= 10; ++k)
            if (qint(k).eval_one() != k) ok = false;
        rep.add("qint at q=1", ok);
        rep.add("[2] prints as q^-1 + q", qint(2).str() == "q^-1 + q");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Per-module suites, parameterized by the config.
// ---------------------------------------------------------------------------

inline Report run_relations(const HarnessConfig& cfg) {
    Report rep;
    rep.suite = "relations";
    detail::put_config_params(rep, cfg);
    for (Flavor f : cfg.flavors()) {
        RelationParams p{cfg.n, cfg.m, cfg.N_max, f, cfg.apply_options()};
        Report sub = check_relations(p);
        sub.suite = std::string(flavor_str(f)) + "(n=" + std::to_string(cfg.n) +
                    ",m=" + std::to_string(cfg.m) + ",N<=" + std::to_string(cfg.N_max) + ")";
        rep.absorb(sub);
    }
    return rep;
}

inline Report run_braid(const HarnessConfig& cfg) {
    Report rep;
    rep.suite = "braid";
    detail::put_config_params(rep, cfg);
    for (Flavor f : cfg.flavors()) {
        {
            BraidCheckParams p{std::min(cfg.n, 3), std::min(cfg.m, 2),
                               std::min(cfg.N_max, 4L), f};
            Report sub = check_braid(p);
            sub.suite = std::string("adjacent ") + flavor_str(f) + "(n=" + std::to_string(p.n) +
                        ",m=" + std::to_string(p.m) + ",N<=" + std::to_string(p.N_max) + ")";
            rep.absorb(sub);
        }
        {
            BraidCheckParams p{std::min(cfg.n, 4), 1, std::min(cfg.N_max, 3L), f};
            Report sub = check_braid(p);
            sub.suite = std::string("distant ") + flavor_str(f) + "(n=" + std::to_string(p.n) +
                        ",m=" + std::to_string(p.m) + ",N<=" + std::to_string(p.N_max) + ")";
            rep.absorb(sub);
        }
    }
    return rep;
}

inline Report run_affine(const HarnessConfig& cfg) {
    Report rep;
    rep.suite = "affine";
    detail::put_config_params(rep, cfg);
    DLParams params;
    try {
        params = calibrate_dl(3);
        rep.add("calibration at n=3", true,
                "a = " + params.a.str() + ", b = " + params.b.str());
    } catch (const NoValidParams& e) {
        rep.add("calibration at n=3", false, e.what());
        return rep;
    }
    for (int n = 2; n <= std::max(2, cfg.n); ++n) {
        Report sub = check_affine_relations(n, cfg.box_radius, params);
        sub.suite = "n=" + std::to_string(n);
        rep.absorb(sub);
    }
    return rep;
}

inline Report run_mv(const HarnessConfig& cfg) {
    MVCheckParams p;
    p.m_max = cfg.m;
    p.mu_max = cfg.mu_max;
    p.seed = cfg.seed;
    return check_mv(p);
}

inline Report run_dims(const HarnessConfig&) {
    return check_dims(); // fixed envelope; independent of the sweep config
}

inline Report run_dumbbell(const HarnessConfig& cfg) {
    Report rep;
    rep.suite = "dumbbell";
    detail::put_config_params(rep, cfg);
    for (int n = 1; n <= cfg.n; ++n)
        for (int m = 1; m <= cfg.m; ++m) {
            Report sub = dumbbell_check(n, m, cfg.apply_options());
            sub.suite = "n=" + std::to_string(n) + ",m=" + std::to_string(m);
            rep.absorb(sub);
        }
    return rep;
}

inline Report run_suite_single(const std::string& name, const HarnessConfig& cfg) {
    if (name == "qidentities") return run_qidentities(cfg);
    if (name == "relations") return run_relations(cfg);
    if (name == "braid") return run_braid(cfg);
    if (name == "affine") return run_affine(cfg);
    if (name == "mv") return run_mv(cfg);
    if (name == "dims") return run_dims(cfg);
    if (name == "dumbbell") return run_dumbbell(cfg);
    throw std::invalid_argument("unknown suite: " + name);
}

// All suites in a fixed order; --jobs threads compute into indexed slots and
// the assembly order never depends on scheduling.
inline Report run_all(const HarnessConfig& cfg) {
    const std::vector<std::string>& names = suite_names();
    std::vector<Report> slots(names.size());
    auto work = [&](size_t idx) {
        try {
            slots[idx] = run_suite_single(names[idx], cfg);
        } catch (const std::exception& e) {
            Report r;
            r.suite = names[idx];
            r.add("suite ran", false, e.what());
            slots[idx] = std::move(r);
        }
    };
    const size_t threads = std::min<size_t>(static_cast<size_t>(cfg.jobs), names.size());
    if (threads <= 1) {
        for (size_t i = 0; i < names.size(); ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        for (size_t t = 0; t < threads; ++t)
            pool.emplace_back([&, t]() {
                for (size_t i = t; i < names.size(); i += threads) work(i);
            });
        for (std::thread& th : pool) th.join();
    }
    Report rep;
    rep.suite = "all";
    detail::put_config_params(rep, cfg);
    rep.param("jobs", std::to_string(cfg.jobs));
    for (const Report& sub : slots) rep.absorb(sub);
    return rep;
}

inline Report run_suite(const std::string& name, const HarnessConfig& cfg) {
    cfg.validate();
    if (name == "all") return run_all(cfg);
    return run_suite_single(name, cfg);
}

// ---------------------------------------------------------------------------
// JSON serialization. Key order is fixed, so dumps are byte-stable.
// ---------------------------------------------------------------------------

inline nlohmann::ordered_json report_json(const Report& rep) {
    nlohmann::ordered_json j;
    j["suite"] = rep.suite;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : rep.params) params[k] = v;
    j["params"] = params;
    nlohmann::ordered_json cases = nlohmann::ordered_json::array();
    for (const CaseResult& c : rep.cases)
        cases.push_back(nlohmann::ordered_json{
            {"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
    j["cases"] = cases;
    j["failures"] = rep.failures();
    return j;
}

} // namespace qhowe
