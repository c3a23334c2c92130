#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "npure/npure.hpp"

namespace {

using namespace npure;
using nlohmann::json;

enum ExitCode : int { ok = 0, check_failed = 1, usage = 2, cap = 3 };

struct Options {
    std::string spec;
    std::string ideal;
    std::size_t power = 1;
    std::size_t max_ring_size = 0; // 0 selects the per-command default
    std::size_t max_endo_carrier = 64;
    std::size_t max_gens = 3;
    std::string checks;
    std::size_t jobs = 1;
    std::string format = "text";
    std::string out;
    std::string zint_query;
    std::uint64_t zint_n = 0;
};

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw SpecError("cannot write '" + o.out + "'");
    f << text;
}

std::vector<Elem> parse_gens(const std::string& csv, const FiniteRing& r) {
    std::vector<Elem> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(tok, &used);
        } catch (const std::exception&) {
            throw SpecError("ideal generator '" + tok + "' is not an element index");
        }
        if (used != tok.size()) throw SpecError("ideal generator '" + tok + "' is not an element index");
        if (v >= r.size())
            throw SpecError("ideal generator " + tok + " out of range for a ring of size " + std::to_string(r.size()));
        out.push_back(static_cast<Elem>(v));
    }
    return out;
}

std::string named(const FiniteRing& r, const ElementSet& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](Elem a) {
        if (!first) out += ", ";
        out += r.name(a);
        first = false;
    });
    return out + "}";
}

std::string ideal_label(const Ideal& i) {
    if (i.is_whole()) return "R";
    return i.describe();
}

json ideal_list(const std::vector<Ideal>& v) {
    json out = json::array();
    for (const auto& i : v) out.push_back(members_json(i.members()));
    return out;
}

RingPtr load_ring(const Options& o, std::size_t default_cap) {
    return build_ring(o.spec, o.max_ring_size ? o.max_ring_size : default_cap);
}

int cmd_analyze(const Options& o) {
    const auto ctx = make_context(load_ring(o, default_max_ring_size));
    const auto& r = ctx->ring();
    const auto& s = ctx->spectrum();
    const auto mid = is_mid_ring(*ctx);

    json ideals = json::array();
    bool consistent = true;
    for (const auto& i : ctx->ideals()) {
        const auto v = is_npure(*ctx, i);
        consistent = consistent && v.consistent();
        json e = to_json(v);
        e["members"] = members_json(i.members());
        e["gens"] = i.gens();
        ideals.push_back(std::move(e));
    }
    json rep = {{"ring", r.spec_string()},
                {"size", r.size()},
                {"elements", r.names()},
                {"units", members_json(units_set(r))},
                {"idempotents", members_json(idempotents_set(r))},
                {"nilradical", members_json(ctx->nilradical())},
                {"jacobson", members_json(s.jacobson.members())},
                {"ideals", ideals},
                {"spectrum", {{"primes", ideal_list(s.primes)}, {"maximals", ideal_list(s.maximals)}, {"minimals", ideal_list(s.minimals)}}},
                {"predicates",
                 {{"reduced", is_reduced(*ctx)},
                  {"zeroDimensional", is_zero_dimensional(*ctx)},
                  {"gelfand", is_gelfand(*ctx)},
                  {"mp", is_mp_ring(*ctx)},
                  {"midByAnnihilator", mid.first},
                  {"midByKernel", mid.second}}}};

    if (o.format == "json") {
        emit(o, rep.dump(2) + "\n");
    } else {
        std::ostringstream t;
        t << "ring " << r.spec_string() << "  size " << r.size() << "\n";
        t << "units       " << named(r, units_set(r)) << "\n";
        t << "idempotents " << named(r, idempotents_set(r)) << "\n";
        t << "N(R)        " << named(r, ctx->nilradical()) << "\n";
        t << "J(R)        " << named(r, s.jacobson.members()) << "\n";
        t << ctx->ideals().size() << " ideals\n";
        std::size_t k = 0;
        for (const auto& i : ctx->ideals()) {
            const auto& e = ideals[k++];
            t << "  " << ideal_label(i) << " = " << named(r, i.members()) << "  pure=" << e["pure"]
              << " npure=" << e["npure"][0] << " spir=" << e["stronglyPiRegular"] << "\n";
        }
        auto list = [&](const char* label, const std::vector<Ideal>& v) {
            t << label;
            for (const auto& p : v) t << " " << ideal_label(p);
            t << "\n";
        };
        list("Spec", s.primes);
        list("Max ", s.maximals);
        list("Min ", s.minimals);
        const auto& p = rep["predicates"];
        t << "reduced=" << p["reduced"] << " zeroDimensional=" << p["zeroDimensional"] << " gelfand=" << p["gelfand"]
          << " mp=" << p["mp"] << " mid=(" << p["midByAnnihilator"] << "," << p["midByKernel"] << ")\n";
        emit(o, t.str());
    }
    return consistent && mid.first == mid.second ? ok : check_failed;
}

int cmd_localize(const Options& o) {
    const auto ctx = make_context(load_ring(o, default_max_ring_size));
    const auto& r = ctx->ring();
    const Ideal i = generate_ideal(ctx->ring_ptr(), parse_gens(o.ideal, r));
    const auto mset = one_plus_ideal(i);
    const auto loc = localize(mset);
    const RingContext qctx(loc.quotient);
    const auto t3 = check_theorem_iii(*ctx, i);
    const auto t4 = check_theorem_iv(*ctx, i);
    const bool image_zero = i.subset_of(loc.kernel);

    json primes = json::array();
    for (const auto& q : qctx.spectrum().primes) primes.push_back(members_json(pull_back(loc.projection, q.members())));
    json rep = {{"ring", r.spec_string()},
                {"ideal", members_json(i.members())},
                {"multiplicativeSet", members_json(mset.members())},
                {"kernel", members_json(loc.kernel.members())},
                {"quotient", {{"ring", loc.quotient->spec_string()}, {"size", loc.quotient->size()}}},
                {"quotientPrimesPulledBack", primes},
                {"imageOfIdealZero", image_zero},
                {"pure", ctx->is_pure(i)},
                {"npure", ctx->is_npure(i)},
                {"theoremIII", {{"status", std::string(to_string(t3.status))}, {"criteria", t3.witness}}},
                {"theoremIV", {{"status", std::string(to_string(t4.status))}, {"criteria", t4.witness}}}};

    if (o.format == "json") {
        emit(o, rep.dump(2) + "\n");
    } else {
        std::ostringstream t;
        t << "ring " << r.spec_string() << "  I = " << named(r, i.members()) << "\n";
        t << "S = 1 + I   " << named(r, mset.members()) << "\n";
        t << "kernel      " << named(r, loc.kernel.members()) << "\n";
        t << "quotient    " << loc.quotient->spec_string() << "  size " << loc.quotient->size() << "  primes "
          << qctx.spectrum().primes.size() << "\n";
        t << "image of I zero: " << (image_zero ? "yes" : "no") << "\n";
        t << "pure=" << rep["pure"] << " npure=" << rep["npure"] << "\n";
        t << "localization criteria (N-pure): " << t3.witness.dump() << "  " << to_string(t3.status) << "\n";
        t << "localization criteria (pure):   " << t4.witness.dump() << "  " << to_string(t4.status) << "\n";
        emit(o, t.str());
    }
    return t3.failed() || t4.failed() ? check_failed : ok;
}

int cmd_endo(const Options& o) {
    const auto ring = load_ring(o, default_max_ring_size);
    const Ideal i = generate_ideal(ring, parse_gens(o.ideal, *ring));
    if (o.power < 1) throw SpecError("--power must be >= 1");
    const EndoLimits limits{o.max_endo_carrier, o.max_gens};
    const auto m = module_of_ideal_power(i, o.power, limits);
    const auto maps = all_endomorphisms(m);
    const auto bad = noncommuting_pair(m, maps);

    json tables = json::array();
    for (const auto& f : maps) tables.push_back(f.table);
    json rep = {{"ring", ring->spec_string()},
                {"ideal", members_json(i.members())},
                {"power", o.power},
                {"carrier", m.carrier_list},
                {"gens", m.gens},
                {"relations", m.relations},
                {"endCount", maps.size()},
                {"commutative", !bad.has_value()},
                {"maps", tables}};
    if (bad) rep["noncommutingPair"] = {bad->first, bad->second};

    if (o.format == "json") {
        emit(o, rep.dump(2) + "\n");
    } else {
        std::ostringstream t;
        t << "ring " << ring->spec_string() << "  I = " << named(*ring, i.members()) << "  power " << o.power << "\n";
        t << "carrier     " << named(*ring, m.carrier) << "\n";
        t << "generators  " << json(m.gens).dump() << "  relations " << m.relations.size() << "\n";
        t << "|End|       " << maps.size() << "\n";
        t << "commutative " << (bad ? "no" : "yes") << "\n";
        emit(o, t.str());
    }
    return ok;
}

int cmd_zint(const Options& o) {
    json rep;
    std::string text;
    if (o.zint_query == "spec-localized") {
        const auto s = zint::z_spec_localized(o.zint_n);
        rep = {{"n", s.n},
               {"primes", s.primes},
               {"quotientIsField", s.quotient_is_field},
               {"localizationIsField", s.localization_is_field},
               {"localizationIsDomain", s.localization_is_domain}};
        text = "Spec((1+" + std::to_string(s.n) + "Z)^-1 Z) = " + json(s.primes).dump() + "\n";
        text += std::string("Z/") + std::to_string(s.n) + "Z " + (s.quotient_is_field ? "is" : "is not") +
                " a field; the localization " + (s.localization_is_field ? "is" : "is not") + " a field\n";
    } else if (o.zint_query == "purity") {
        const auto p = zint::z_purity(o.zint_n);
        rep = {{"n", o.zint_n}, {"pure", p.pure}, {"npure", p.npure}};
        text = std::to_string(o.zint_n) + "Z  pure=" + (p.pure ? "true" : "false") + " npure=" + (p.npure ? "true" : "false") + "\n";
    } else {
        const auto f = zint::z_radical_kernel_facts(o.zint_n);
        rep = {{"n", f.n}, {"radical", f.radical}, {"kernel", f.kernel}, {"kernelRadical", f.kernel_radical}, {"criterionIV", f.criterion_iv}};
        text = "rad(" + std::to_string(f.n) + "Z) = " + std::to_string(f.radical) + "Z  Ker = " + std::to_string(f.kernel) +
               "Z  rad(Ker) = " + std::to_string(f.kernel_radical) + "Z  equal=" + (f.criterion_iv ? "true" : "false") + "\n";
    }
    emit(o, o.format == "json" ? rep.dump(2) + "\n" : text);
    return ok;
}

int cmd_verify(const Options& o) {
    SuiteConfig cfg;
    cfg.max_ring_size = o.max_ring_size ? o.max_ring_size : 64;
    cfg.endo = EndoLimits{o.max_endo_carrier, o.max_gens};
    cfg.checks = parse_check_filter(o.checks);
    cfg.jobs = o.jobs;
    const auto corpus = build_corpus({cfg.max_ring_size});
    const auto report = run_suite(corpus, cfg);
    if (o.format == "json")
        emit(o, to_json(report).dump(2) + "\n");
    else
        emit(o, summary_text(report));
    return report.any_fail() ? check_failed : ok;
}

} // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Pure and N-pure ideals of finite commutative rings"};
    app.require_subcommand(1);

    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
        c->add_option("--out", o.out, "Write output to this file");
    };
    auto add_ring = [&](CLI::App* c) {
        c->add_option("spec", o.spec, "Ring spec, e.g. zmod:12")->required();
        c->add_option("--max-ring-size", o.max_ring_size, "Largest ring to build")->check(CLI::PositiveNumber);
    };

    auto* analyze = app.add_subcommand("analyze", "Ideals, spectrum and purity table of one ring");
    add_ring(analyze);
    add_format(analyze);

    auto* localize_cmd = app.add_subcommand("localize", "Localization at 1 + I");
    add_ring(localize_cmd);
    localize_cmd->add_option("--ideal", o.ideal, "Generator indices, comma separated")->required();
    add_format(localize_cmd);

    auto* endo = app.add_subcommand("endo", "Endomorphism ring of I^n");
    add_ring(endo);
    endo->add_option("--ideal", o.ideal, "Generator indices, comma separated")->required();
    endo->add_option("--power", o.power, "Exponent n")->check(CLI::PositiveNumber);
    endo->add_option("--max-endo-carrier", o.max_endo_carrier, "Largest module carrier")->check(CLI::PositiveNumber);
    endo->add_option("--max-gens", o.max_gens, "Most generators")->check(CLI::PositiveNumber);
    add_format(endo);

    auto* zint_cmd = app.add_subcommand("zint", "Ideals nZ of the integers");
    zint_cmd->add_option("query", o.zint_query, "spec-localized | purity | radical")
        ->required()
        ->check(CLI::IsMember({"spec-localized", "purity", "radical"}));
    zint_cmd->add_option("n", o.zint_n, "Integer n")->required();
    add_format(zint_cmd);

    auto* verify = app.add_subcommand("verify", "Run every check over the generated corpus");
    verify->add_option("--max-ring-size", o.max_ring_size, "Corpus size cap")->check(CLI::Range(2, 1 << 16));
    verify->add_option("--max-endo-carrier", o.max_endo_carrier, "Largest module carrier")->check(CLI::PositiveNumber);
    verify->add_option("--max-gens", o.max_gens, "Most generators")->check(CLI::PositiveNumber);
    verify->add_option("--checks", o.checks, "Comma list of check ids");
    verify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*analyze) return cmd_analyze(o);
        if (*localize_cmd) return cmd_localize(o);
        if (*endo) return cmd_endo(o);
        if (*zint_cmd) return cmd_zint(o);
        return cmd_verify(o);
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return cap;
    } catch (const SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const AxiomError& e) {
        std::cerr << "invalid ring: " << e.what() << "\n";
        return usage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return check_failed;
    }
}
