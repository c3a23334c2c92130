#pragma once

/**
 * @file suite.hpp
 * @brief Corpus generation and the theorem-verification harness.
 *
 * Each (check, ring) pair yields one CheckRecord that aggregates the
 * instance verdicts for that ring (one per ideal, ideal pair, hom, or
 * power, depending on the check). Theorem failures are data; nothing here
 * throws on a failed check.
 */

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "npure/builder.hpp"
#include "npure/context.hpp"
#include "npure/endo.hpp"
#include "npure/error.hpp"
#include "npure/hom.hpp"
#include "npure/ideal.hpp"
#include "npure/localization.hpp"
#include "npure/purity.hpp"
#include "npure/spectrum.hpp"
#include "npure/verdict.hpp"
#include "npure/zint.hpp"

namespace npure {

struct CorpusConfig {
    std::size_t max_ring_size = 64;
};

/// Zmod n for 2 <= n <= cap; F_p[x]/(f) for p in {2,3} and every monic f of
/// degree 2 and 3; Zmod m x Zmod k (m <= k, mk <= cap); then every quotient of
/// each of those by each of its ideals. Rings with identical tables are kept once.
inline std::vector<RingPtr> build_corpus(const CorpusConfig& cfg) {
    if (cfg.max_ring_size < 2) throw PreconditionError("corpus size cap must be >= 2");
    const std::size_t cap = cfg.max_ring_size;
    std::vector<RingPtr> out;
    std::map<std::size_t, std::vector<std::size_t>> by_size;
    auto accept = [&](RingPtr r) {
        auto& bucket = by_size[r->size()];
        for (std::size_t idx : bucket)
            if (out[idx]->same_tables(*r)) return;
        bucket.push_back(out.size());
        out.push_back(std::move(r));
    };

    for (std::uint64_t n = 2; n <= cap; ++n) accept(build_ring(RingSpec::zmod(n), cap));
    for (std::uint64_t p : {2U, 3U}) {
        for (std::size_t d : {2U, 3U}) {
            std::uint64_t size = 1;
            for (std::size_t i = 0; i < d; ++i) size *= p;
            if (size > cap) continue;
            for (std::uint64_t code = 0; code < size; ++code) {
                std::vector<std::uint64_t> coeffs;
                std::uint64_t rest = code;
                for (std::size_t i = 0; i < d; ++i) {
                    coeffs.push_back(rest % p);
                    rest /= p;
                }
                coeffs.push_back(1);
                accept(build_ring(RingSpec::polyquot(p, coeffs), cap));
            }
        }
    }
    for (std::uint64_t m = 2; m * m <= cap; ++m)
        for (std::uint64_t k = m; m * k <= cap; ++k)
            accept(build_ring(RingSpec::product(RingSpec::zmod(m), RingSpec::zmod(k)), cap));

    const std::size_t bases = out.size();
    for (std::size_t b = 0; b < bases; ++b) {
        RingPtr base = out[b];
        for (const auto& i : all_ideals(base)) accept(quotient_ring(i).ring);
    }
    return out;
}

inline const std::vector<std::string>& all_check_ids() {
    static const std::vector<std::string> ids = {
        "Struct", "Mid",    "T2.6",  "PropV",  "PropVI", "LemVIIa", "LemV",      "LemVI",        "CorIV",
        "PropII", "CorI",   "ThmII", "LemIII", "PropIV", "LemIV",   "ThmIII",    "ThmIV",        "CorII",
        "CorIII", "PropIII", "LemII", "ThmV-endo", "LemVIIb-endo", "ExampleI"};
    return ids;
}

struct SuiteConfig {
    std::size_t max_ring_size = 64;
    std::size_t max_ideals = default_max_ideals;
    EndoLimits endo;
    std::set<std::string> checks; // empty means all
    std::size_t jobs = 1;

    bool enabled(const std::string& id) const { return checks.empty() || checks.count(id) > 0; }

    nlohmann::json to_json() const {
        nlohmann::json c = nlohmann::json::array();
        for (const auto& id : all_check_ids())
            if (enabled(id)) c.push_back(id);
        return {{"maxRingSize", max_ring_size},
                {"maxIdeals", max_ideals},
                {"maxEndoCarrier", endo.max_carrier},
                {"maxGens", endo.max_gens},
                {"checks", c},
                {"jobs", jobs}};
    }
};

/// Rejects unknown ids in a comma list.
inline std::set<std::string> parse_check_filter(const std::string& csv) {
    std::set<std::string> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        auto end = csv.find(',', start);
        if (end == std::string::npos) end = csv.size();
        std::string id = csv.substr(start, end - start);
        if (!id.empty()) {
            const auto& known = all_check_ids();
            if (std::find(known.begin(), known.end(), id) == known.end())
                throw SpecError("unknown check id '" + id + "'");
            out.insert(id);
        }
        start = end + 1;
    }
    return out;
}

struct Tally {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skipped = 0;
    std::size_t vacuous = 0;

    void add(Status s) {
        switch (s) {
        case Status::pass: ++pass; break;
        case Status::fail: ++fail; break;
        case Status::skipped: ++skipped; break;
        case Status::vacuous: ++vacuous; break;
        }
    }
    Tally& operator+=(const Tally& o) {
        pass += o.pass;
        fail += o.fail;
        skipped += o.skipped;
        vacuous += o.vacuous;
        return *this;
    }
    std::size_t total() const { return pass + fail + skipped + vacuous; }
    nlohmann::json to_json() const {
        return {{"pass", pass}, {"fail", fail}, {"skipped", skipped}, {"vacuous", vacuous}};
    }
};

/// One (check, ring) entry of the report.
struct CheckRecord {
    std::string check_id;
    std::string subject;
    Status status = Status::vacuous;
    nlohmann::json witness;
    double elapsed_ms = 0.0;
    Tally instances;
    nlohmann::json skips = nlohmann::json::array();
};

/// fail > pass > skipped > vacuous; the first failing instance is the witness.
inline CheckRecord aggregate(const std::string& id, const std::string& subject, const std::vector<Verdict>& vs,
                             double elapsed_ms) {
    CheckRecord rec;
    rec.check_id = id;
    rec.subject = subject;
    rec.elapsed_ms = elapsed_ms;
    for (const auto& v : vs) {
        rec.instances.add(v.status);
        if (v.status == Status::fail && rec.witness.is_null())
            rec.witness = {{"instance", v.subject}, {"detail", v.witness}};
        if (v.status == Status::skipped) rec.skips.push_back({{"instance", v.subject}, {"detail", v.witness}});
    }
    if (rec.instances.fail)
        rec.status = Status::fail;
    else if (rec.instances.pass)
        rec.status = Status::pass;
    else if (rec.instances.skipped)
        rec.status = Status::skipped;
    else
        rec.status = Status::vacuous;
    return rec;
}

/// Runs fn, converting cap hits into skips and any other exception into a failure.
template<typename F>
void guarded(std::vector<Verdict>& out, const std::string& id, const std::string& subject, F&& fn) {
    try {
        fn(out);
    } catch (const CapExceeded& e) {
        out.push_back(Verdict::make(id, subject, Status::skipped, {{"cap", e.what()}}));
    } catch (const std::exception& e) {
        out.push_back(Verdict::make(id, subject, Status::fail, {{"error", e.what()}}));
    }
}

/// Primes equal maximals equal minimals, zero-dimensional, Gelfand, mp,
/// N(R) inside J(R), N(R) = intersection of minimals, Lambda(p) = {p}.
inline Verdict check_structure(const RingContext& ctx) {
    const auto& s = ctx.spectrum();
    auto same = [](const std::vector<Ideal>& a, const std::vector<Ideal>& b) {
        if (a.size() != b.size()) return false;
        for (const auto& x : a)
            if (!contains_ideal(b, x)) return false;
        return true;
    };
    bool primes_definitional = true;
    const auto& r = ctx.ring();
    for (const auto& p : s.primes) {
        for (Elem a = 0; a < r.size() && primes_definitional; ++a)
            for (Elem b = 0; b < r.size(); ++b)
                if (p.contains(r.mul(a, b)) && !p.contains(a) && !p.contains(b)) {
                    primes_definitional = false;
                    break;
                }
    }
    bool lambda_singleton = true;
    for (const auto& p : s.primes) {
        auto l = lambda_set(s, p);
        lambda_singleton = lambda_singleton && l.size() == 1 && l.front() == p;
    }
    const bool pm = same(s.primes, s.maximals);
    const bool pn = same(s.primes, s.minimals);
    const bool zd = is_zero_dimensional(s);
    const bool gel = is_gelfand(s);
    const bool mp = is_mp_ring(s);
    const bool nil_in_jac = ctx.nilradical().subset_of(s.jacobson.members());
    const bool nil_is_min_meet = ideal_intersect_all(ctx.ring_ptr(), s.minimals).members() == ctx.nilradical();
    const bool ok = pm && pn && zd && gel && mp && nil_in_jac && nil_is_min_meet && primes_definitional && lambda_singleton;
    return Verdict::check("Struct", r.spec_string(), ok,
                          {{"primesEqualMaximals", pm},
                           {"primesEqualMinimals", pn},
                           {"zeroDimensional", zd},
                           {"gelfand", gel},
                           {"mp", mp},
                           {"nilInJacobson", nil_in_jac},
                           {"nilIsMinimalMeet", nil_is_min_meet},
                           {"primesDefinitional", primes_definitional},
                           {"lambdaSingleton", lambda_singleton},
                           {"primeCount", s.primes.size()}});
}

/// Canonical homomorphisms out of a ring: projections onto every quotient,
/// product projections for prod: specs, and CRT splittings for zmod:n.
inline std::vector<RingHom> canonical_homs(const RingContext& ctx, std::size_t max_size) {
    std::vector<RingHom> out;
    for (const auto& i : ctx.ideals()) out.push_back(quotient_projection(i));
    if (std::holds_alternative<RingSpec::Product>(ctx.ring().spec().variant)) {
        auto [a, b] = product_projections(ctx.ring_ptr(), max_size);
        out.push_back(std::move(a));
        out.push_back(std::move(b));
    }
    if (const auto* z = std::get_if<RingSpec::Zmod>(&ctx.ring().spec().variant)) {
        for (std::uint64_t m = 2; m * m < z->n; ++m) {
            if (z->n % m) continue;
            const std::uint64_t k = z->n / m;
            if (std::gcd(m, k) != 1) continue;
            auto h = crt_map(m, k);
            // Rebase onto this ring so ideals of ctx can be pushed forward.
            out.push_back(build_hom(ctx.ring_ptr(), h.codomain(), h.table(), h.label()));
        }
    }
    return out;
}

/// Every fact of the worked example: Z/12 with p = (2), q = (3), and the
/// integer localizations at 1 + p^e Z.
inline Verdict check_example_i() {
    nlohmann::json w;
    bool ok = true;
    auto note = [&](const std::string& key, bool value) {
        w[key] = value;
        ok = ok && value;
    };

    const RingContext ctx(build_ring(RingSpec::zmod(12)));
    const auto p = generate_ideal(ctx.ring_ptr(), {2});
    const auto q = generate_ideal(ctx.ring_ptr(), {3});
    note("qPure", is_pure(q));
    note("pNotPure", !is_pure(p));
    note("pNPure", is_npure(ctx, p).is_npure());
    const auto loc = localize(one_plus_ideal(p));
    note("kernel048", loc.kernel.members() == ElementSet(12, {0, 4, 8}));
    const RingContext lctx(loc.quotient);
    note("onePrime", lctx.spectrum().primes.size() == 1);
    note("imageNonzero", image_set(p.members(), loc.projection.table(), loc.quotient->size()).count() > 1);
    const auto rp = quotient_ring(p).ring;
    note("quotientTwoElementField", rp->size() == 2 && units_set(*rp).count() == 1);

    bool integer_half = true;
    for (std::uint64_t prime = 2; prime <= 50; ++prime) {
        if (!is_prime(prime)) continue;
        std::uint64_t pe = 1;
        for (int e = 1; e <= 3; ++e) {
            pe *= prime;
            const auto s = zint::z_spec_localized(pe);
            integer_half = integer_half && s.primes == std::vector<std::uint64_t>{0, prime};
            if (e == 1) integer_half = integer_half && s.quotient_is_field && !s.localization_is_field;
            integer_half = integer_half && !zint::z_purity(pe).pure && !zint::z_purity(pe).npure;
        }
    }
    note("integerSpecLocalized", integer_half);
    return Verdict::make("ExampleI", "zmod:12; Z", ok ? Status::pass : Status::fail, w);
}

/// All enabled checks on one ring, in all_check_ids() order.
inline std::vector<CheckRecord> run_ring(const RingPtr& ring, const SuiteConfig& cfg) {
    std::vector<CheckRecord> out;
    const RingContext ctx(ring, cfg.max_ideals);
    const std::string subject = ring->spec_string();

    auto run = [&](const std::string& id, const std::function<void(std::vector<Verdict>&)>& body) {
        if (!cfg.enabled(id)) return;
        auto start = std::chrono::steady_clock::now();
        std::vector<Verdict> vs;
        guarded(vs, id, subject, body);
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        out.push_back(aggregate(id, subject, vs, ms));
    };
    auto per_ideal = [&](const std::string& id, const std::function<Verdict(const Ideal&)>& fn) {
        run(id, [&](std::vector<Verdict>& vs) {
            for (const auto& i : ctx.ideals()) guarded(vs, id, subject_of(i), [&](auto& o) { o.push_back(fn(i)); });
        });
    };

    run("Struct", [&](auto& vs) { vs.push_back(check_structure(ctx)); });
    run("Mid", [&](auto& vs) { vs.push_back(check_mid_ring(ctx)); });
    per_ideal("T2.6", [&](const Ideal& i) { return check_theorem_2_6(ctx, i); });
    per_ideal("PropV", [&](const Ideal& i) { return check_proposition_v(ctx, i); });
    per_ideal("PropVI", [&](const Ideal& i) { return check_proposition_vi(ctx, i); });
    per_ideal("LemVIIa", [&](const Ideal& i) { return check_uniform_exponent(ctx, i); });
    per_ideal("LemV", [&](const Ideal& i) { return check_lemma_v(ctx, i); });
    run("LemVI", [&](auto& vs) { vs.push_back(check_lemma_vi(ctx)); });
    per_ideal("CorIV", [&](const Ideal& i) { return check_corollary_iv(ctx, i); });
    per_ideal("PropII", [&](const Ideal& i) { return check_proposition_ii(ctx, i); });
    per_ideal("CorI", [&](const Ideal& i) { return check_corollary_i(ctx, i); });
    per_ideal("ThmII", [&](const Ideal& i) { return check_theorem_ii(ctx, i); });
    if (cfg.enabled("LemIII") || cfg.enabled("PropIV") || cfg.enabled("LemIV")) {
        std::vector<Verdict> gk;
        auto start = std::chrono::steady_clock::now();
        guarded(gk, "LemIII", subject, [&](auto& o) {
            for (auto& v : check_gelfand_kernels(ctx)) o.push_back(std::move(v));
        });
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        for (const char* id : {"LemIII", "PropIV", "LemIV"}) {
            if (!cfg.enabled(id)) continue;
            std::vector<Verdict> mine;
            for (const auto& v : gk)
                if (v.check_id == id || (gk.size() == 1 && v.failed())) mine.push_back(v);
            out.push_back(aggregate(id, subject, mine, ms / 3));
        }
    }
    per_ideal("ThmIII", [&](const Ideal& i) { return check_theorem_iii(ctx, i); });
    per_ideal("ThmIV", [&](const Ideal& i) { return check_theorem_iv(ctx, i); });
    run("CorII", [&](auto& vs) {
        for (std::size_t a = 0; a < ctx.ideals().size(); ++a) {
            if (!ctx.is_npure_at(a)) continue;
            for (std::size_t b = 0; b < ctx.ideals().size(); ++b) {
                if (ctx.radical_at(a) != ctx.radical_at(b)) continue;
                const auto& i = ctx.ideals()[a];
                const auto& j = ctx.ideals()[b];
                guarded(vs, "CorII", subject_of(i), [&](auto& o) { o.push_back(check_corollary_ii(ctx, i, j)); });
            }
        }
    });
    run("CorIII", [&](auto& vs) {
        for (const auto& i : ctx.ideals())
            guarded(vs, "CorIII", subject_of(i), [&](auto& o) {
                for (auto& v : check_corollary_iii(ctx, i)) o.push_back(std::move(v));
            });
    });
    per_ideal("PropIII", [&](const Ideal& i) { return check_proposition_iii(ctx, i); });
    run("LemII", [&](auto& vs) {
        for (const auto& h : canonical_homs(ctx, cfg.max_ring_size))
            for (const auto& i : ctx.ideals())
                guarded(vs, "LemII", subject_of(i), [&](auto& o) { o.push_back(check_lemma_ii(h, i)); });
    });
    run("ThmV-endo", [&](auto& vs) {
        for (auto& v : check_endo_theorems(ctx, cfg.endo, true, false)) vs.push_back(std::move(v));
    });
    run("LemVIIb-endo", [&](auto& vs) {
        for (auto& v : check_endo_theorems(ctx, cfg.endo, false, true)) vs.push_back(std::move(v));
    });
    return out;
}

struct SuiteReport {
    nlohmann::json config;
    std::vector<std::string> rings;
    std::size_t ideal_count = 0;
    std::vector<CheckRecord> checks;
    std::map<std::string, Tally> by_check;      // instance tallies
    std::map<std::string, Tally> records_by_check; // (check, ring) record tallies
    Tally totals;

    bool any_fail() const { return totals.fail > 0; }
    std::vector<const CheckRecord*> failures() const {
        std::vector<const CheckRecord*> out;
        for (const auto& c : checks)
            if (c.status == Status::fail) out.push_back(&c);
        return out;
    }
};

inline SuiteReport run_suite(const std::vector<RingPtr>& corpus, const SuiteConfig& cfg) {
    SuiteReport report;
    report.config = cfg.to_json();
    std::vector<std::vector<CheckRecord>> per_ring(corpus.size());
    std::vector<std::size_t> ideal_counts(corpus.size(), 0);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < corpus.size(); k = next++) {
            per_ring[k] = run_ring(corpus[k], cfg);
            try {
                ideal_counts[k] = all_ideals(corpus[k], cfg.max_ideals).size();
            } catch (const CapExceeded&) {
            }
        }
    };
    const std::size_t jobs = std::max<std::size_t>(1, std::min(cfg.jobs, corpus.size()));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (std::size_t k = 0; k < corpus.size(); ++k) {
        report.rings.push_back(corpus[k]->spec_string());
        report.ideal_count += ideal_counts[k];
        for (auto& rec : per_ring[k]) report.checks.push_back(std::move(rec));
    }
    if (cfg.enabled("ExampleI")) {
        auto start = std::chrono::steady_clock::now();
        std::vector<Verdict> vs;
        guarded(vs, "ExampleI", "zmod:12; Z", [](auto& o) { o.push_back(check_example_i()); });
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        report.checks.push_back(aggregate("ExampleI", "zmod:12; Z", vs, ms));
    }
    for (const auto& rec : report.checks) {
        report.by_check[rec.check_id] += rec.instances;
        report.records_by_check[rec.check_id].add(rec.status);
        report.totals += rec.instances;
    }
    return report;
}

inline nlohmann::json to_json(const SuiteReport& report, bool with_timing = true) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        nlohmann::json e = {{"checkId", c.check_id},
                            {"subject", c.subject},
                            {"status", std::string(to_string(c.status))},
                            {"witness", c.witness},
                            {"elapsedMs", with_timing ? c.elapsed_ms : 0.0},
                            {"instances", c.instances.to_json()}};
        if (!c.skips.empty()) e["skips"] = c.skips;
        checks.push_back(std::move(e));
    }
    nlohmann::json by_check = nlohmann::json::object();
    for (const auto& [id, t] : report.by_check) {
        by_check[id] = t.to_json();
        by_check[id]["records"] = report.records_by_check.at(id).to_json();
    }
    nlohmann::json failures = nlohmann::json::array();
    for (const auto* f : report.failures())
        failures.push_back({{"checkId", f->check_id}, {"subject", f->subject}, {"witness", f->witness}});
    return {{"config", report.config},
            {"corpus", {{"ringCount", report.rings.size()}, {"idealCount", report.ideal_count}, {"rings", report.rings}}},
            {"checks", checks},
            {"failures", failures},
            {"totals", {{"instances", report.totals.to_json()}, {"byCheck", by_check}}}};
}

/// Fixed-width table of per-check instance tallies, then any failures.
inline std::string summary_text(const SuiteReport& report) {
    auto pad = [](std::string s, std::size_t w) {
        if (s.size() < w) s.append(w - s.size(), ' ');
        return s;
    };
    std::string out = "corpus: " + std::to_string(report.rings.size()) + " rings, " +
                      std::to_string(report.ideal_count) + " ideals\n";
    out += pad("check", 14) + pad("pass", 10) + pad("fail", 10) + pad("skipped", 10) + pad("vacuous", 10) + "\n";
    for (const auto& id : all_check_ids()) {
        auto it = report.by_check.find(id);
        if (it == report.by_check.end()) continue;
        const auto& t = it->second;
        out += pad(id, 14) + pad(std::to_string(t.pass), 10) + pad(std::to_string(t.fail), 10) +
               pad(std::to_string(t.skipped), 10) + pad(std::to_string(t.vacuous), 10) + "\n";
    }
    out += pad("total", 14) + pad(std::to_string(report.totals.pass), 10) + pad(std::to_string(report.totals.fail), 10) +
           pad(std::to_string(report.totals.skipped), 10) + pad(std::to_string(report.totals.vacuous), 10) + "\n";
    for (const auto* f : report.failures()) out += "FAIL " + f->check_id + " " + f->subject + " " + f->witness.dump() + "\n";
    return out;
}

} // namespace npure
