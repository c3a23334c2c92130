#pragma once

/**
 * @file purity.hpp
 * @brief N-purity through five independent criteria, witness constructions,
 *        and the ideal-local checks built on them.
 *
 * Criteria evaluated by is_npure, for an ideal I of R:
 *   (i)   every a in I has b in I with a(1 - b) nilpotent;
 *   (ii)  every a in I has t >= 1 with Ann(a^t) + I = R;
 *   (iii) rad(I) = { a in R : Ann(a^n) + I = R for some n >= 1 };
 *   (iv)  rad(I) satisfies (i);
 *   (v)   exactly one pure ideal J has rad(J) = rad(I).
 * They are logically equivalent, so any disagreement is a defect.
 */

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "npure/context.hpp"
#include "npure/element_set.hpp"
#include "npure/error.hpp"
#include "npure/hom.hpp"
#include "npure/ideal.hpp"
#include "npure/pure_predicates.hpp"
#include "npure/ring.hpp"
#include "npure/spectrum.hpp"
#include "npure/verdict.hpp"

namespace npure {

struct PurityVerdict {
    bool pure = false;
    std::array<bool, 5> npure{};
    bool npure_exponent_form = false; // (i) restated as a^n (1 - b) = 0
    bool strongly_pi_regular = false;
    std::optional<Ideal> pure_partner;
    std::size_t pure_partner_count = 0;
    std::map<Elem, ExponentWitness> witnesses;

    bool is_npure() const { return npure[0]; }

    /// All criteria and both forms of (i) agree, and pure implies N-pure.
    bool consistent() const {
        for (bool b : npure)
            if (b != npure[0]) return false;
        return npure_exponent_form == npure[0] && (!pure || npure[0]);
    }
};

inline nlohmann::json to_json(const PurityVerdict& v) {
    nlohmann::json w = {{"pure", v.pure},
                        {"npure", v.npure},
                        {"npureExponentForm", v.npure_exponent_form},
                        {"stronglyPiRegular", v.strongly_pi_regular},
                        {"purePartnerCount", v.pure_partner_count}};
    if (v.pure_partner) w["purePartner"] = members_json(v.pure_partner->members());
    return w;
}

/// Evaluates all five criteria independently.
inline PurityVerdict is_npure(const RingContext& ctx, const Ideal& i) {
    const auto& r = ctx.ring();
    const auto& nil = ctx.nilradical();
    PurityVerdict v;
    v.pure = is_pure(i);

    v.npure[0] = is_npure_by_nilpotent(i, nil);
    v.npure_exponent_form = is_npure_by_exponent(i);

    // Ann(x) + I = R depends only on x, so tabulate it over the ring.
    std::vector<signed char> ann_sum_whole(r.size(), -1);
    auto ann_plus_i_is_ring = [&](Elem x) {
        if (ann_sum_whole[x] < 0) ann_sum_whole[x] = one_in_sum(r, annihilator_members(r, x), i.members()) ? 1 : 0;
        return ann_sum_whole[x] == 1;
    };
    auto some_power_splits = [&](Elem a) {
        const auto bound = r.power_cycle(a).bound();
        for (std::size_t t = 1; t <= bound; ++t)
            if (ann_plus_i_is_ring(r.pow(a, t))) return true;
        return false;
    };

    bool crit2 = true;
    i.members().for_each([&](Elem a) { crit2 = crit2 && some_power_splits(a); });
    v.npure[1] = crit2;

    const Ideal rad = radical(i);
    ElementSet split_set(r.size());
    for (Elem a = 0; a < r.size(); ++a)
        if (some_power_splits(a)) split_set.insert(a);
    v.npure[2] = split_set == rad.members();

    v.npure[3] = is_npure_by_nilpotent(rad, nil);

    for (std::size_t k = 0; k < ctx.ideals().size(); ++k) {
        if (!ctx.is_pure_at(k)) continue;
        if (ctx.radical_at(k).members() != rad.members()) continue;
        if (!v.pure_partner) v.pure_partner = ctx.ideals()[k];
        ++v.pure_partner_count;
    }
    v.npure[4] = v.pure_partner_count == 1;

    v.strongly_pi_regular = is_strongly_pi_regular(i);

    if (v.npure[0]) {
        i.members().for_each([&](Elem a) {
            if (auto w = exponent_witness(r, a, i.members())) v.witnesses.emplace(a, *w);
        });
    }
    return v;
}

/// Least (n, b) in lexicographic order with a^n (1 - b) = 0 for every a in I.
inline ExponentWitness uniform_exponent_witness(const Ideal& i) {
    if (!is_npure_definitional(i))
        throw PreconditionError("uniform exponent witness requires an N-pure ideal, got " + i.describe());
    const auto& r = i.ring();
    const auto members = i.member_list();
    std::size_t max_bound = 1;
    for (Elem a : members) max_bound = std::max(max_bound, r.power_cycle(a).bound());
    for (std::size_t n = 1; n <= max_bound; ++n) {
        for (Elem b : members) {
            const Elem f = r.one_minus(b);
            bool all = true;
            for (Elem a : members)
                if (r.mul(r.pow(a, n), f) != r.zero()) {
                    all = false;
                    break;
                }
            if (all) return {n, b};
        }
    }
    throw InternalError("no uniform exponent witness for the N-pure ideal " + i.describe() + " in " +
                        r.spec_string());
}

/// Least a in I with rad(Ra) = rad(I).
inline Elem principal_radical_witness(const Ideal& i) {
    if (!is_npure_definitional(i))
        throw PreconditionError("principal radical witness requires an N-pure ideal, got " + i.describe());
    const auto target = radical_members(i);
    for (Elem a : i.member_list())
        if (radical_members(generate_ideal(i.ring_ptr(), {a})) == target) return a;
    throw InternalError("no principal radical witness for the N-pure ideal " + i.describe() + " in " +
                        i.ring().spec_string());
}

/// Five-way agreement on one ideal, plus pure => N-pure and I in N(R) => N-pure with b = 0.
inline Verdict check_theorem_2_6(const RingContext& ctx, const Ideal& i) {
    auto v = is_npure(ctx, i);
    auto w = to_json(v);
    bool ok = v.consistent();
    if (i.members().subset_of(ctx.nilradical())) {
        bool zero_witness = is_npure_by_nilpotent(i, ctx.nilradical());
        i.members().for_each([&](Elem a) {
            zero_witness = zero_witness && ctx.nilradical().contains(ctx.ring().mul(a, ctx.ring().one_minus(ctx.ring().zero())));
        });
        ok = ok && zero_witness;
        w["insideNilradical"] = true;
    }
    return Verdict::check("T2.6", subject_of(i), ok, w);
}

/// Strongly pi-regular implies N-pure; the classes coincide on zero-dimensional rings.
inline Verdict check_proposition_v(const RingContext& ctx, const Ideal& i) {
    const bool spr = is_strongly_pi_regular(i);
    const bool np = ctx.is_npure(i);
    const bool zero_dim = is_zero_dimensional(ctx);
    bool ok = (!spr || np) && (!zero_dim || spr == np);
    return Verdict::check("PropV", subject_of(i), ok,
                          {{"stronglyPiRegular", spr}, {"npure", np}, {"zeroDimensional", zero_dim}});
}

inline Verdict check_proposition_vi(const RingContext& ctx, const Ideal& i) {
    if (!ctx.is_npure(i)) return Verdict::make("PropVI", subject_of(i), Status::vacuous);
    try {
        Elem a = principal_radical_witness(i);
        return Verdict::make("PropVI", subject_of(i), Status::pass, {{"a", a}});
    } catch (const InternalError& e) {
        return Verdict::make("PropVI", subject_of(i), Status::fail, {{"error", e.what()}});
    }
}

/// Uniform witness exists and survives an independent re-scan over I.
inline Verdict check_uniform_exponent(const RingContext& ctx, const Ideal& i) {
    if (!ctx.is_npure(i)) return Verdict::make("LemVIIa", subject_of(i), Status::vacuous);
    try {
        auto w = uniform_exponent_witness(i);
        const auto& r = ctx.ring();
        bool ok = i.contains(w.b);
        for (Elem a : i.member_list()) {
            Elem an = pow_by_squaring(r, a, w.n);
            ok = ok && r.mul(an, r.sub(r.one(), w.b)) == r.zero();
        }
        return Verdict::check("LemVIIa", subject_of(i), ok, {{"n", w.n}, {"b", w.b}});
    } catch (const InternalError& e) {
        return Verdict::make("LemVIIa", subject_of(i), Status::fail, {{"error", e.what()}});
    }
}

/// A proper N-pure ideal containing a prime equals it and is a minimal prime.
inline Verdict check_lemma_v(const RingContext& ctx, const Ideal& i) {
    const std::string subject = subject_of(i);
    if (!i.is_proper() || !ctx.is_npure(i)) return Verdict::make("LemV", subject, Status::vacuous);
    const auto& spec = ctx.spectrum();
    bool any = false;
    for (const auto& p : spec.primes) {
        if (!p.subset_of(i)) continue;
        any = true;
        if (!(p == i) || !contains_ideal(spec.minimals, i))
            return Verdict::make("LemV", subject, Status::fail,
                                 {{"prime", members_json(p.members())}, {"isMinimal", contains_ideal(spec.minimals, i)}});
    }
    return Verdict::make("LemV", subject, any ? Status::pass : Status::vacuous);
}

/// N-pure ideals inside J(R) are nil. The zero ideal alone counts as vacuous.
inline Verdict check_lemma_vi(const RingContext& ctx) {
    const std::string subject = ctx.ring().spec_string();
    const auto& jac = ctx.spectrum().jacobson;
    bool any = false;
    for (std::size_t k = 0; k < ctx.ideals().size(); ++k) {
        const auto& i = ctx.ideals()[k];
        if (!ctx.is_npure_at(k) || !i.subset_of(jac)) continue;
        if (!i.members().subset_of(ctx.nilradical()))
            return Verdict::make("LemVI", subject, Status::fail, {{"ideal", members_json(i.members())}});
        if (!i.is_zero()) any = true;
    }
    return Verdict::make("LemVI", subject, any ? Status::pass : Status::vacuous);
}

/// rad(I) is the intersection of the minimal primes over I.
inline Verdict check_corollary_iv(const RingContext& ctx, const Ideal& i) {
    if (!ctx.is_npure(i)) return Verdict::make("CorIV", subject_of(i), Status::vacuous);
    std::vector<Ideal> over;
    for (const auto& p : ctx.spectrum().minimals)
        if (i.subset_of(p)) over.push_back(p);
    const auto inter = ideal_intersect_all(i.ring_ptr(), over);
    const auto rad = radical_members(i);
    return Verdict::check("CorIV", subject_of(i), inter.members() == rad,
                          {{"radical", members_json(rad)}, {"intersection", members_json(inter.members())}});
}

/// For N-pure I and every J containing I: J N-pure in R iff J/I N-pure in R/I.
inline Verdict check_proposition_iii(const RingContext& ctx, const Ideal& i) {
    if (!ctx.is_npure(i)) return Verdict::make("PropIII", subject_of(i), Status::vacuous);
    const RingHom proj = quotient_projection(i);
    const auto quotient_nil = nilradical_set(*proj.codomain());
    for (std::size_t k = 0; k < ctx.ideals().size(); ++k) {
        const auto& j = ctx.ideals()[k];
        if (!i.subset_of(j)) continue;
        const bool lhs = ctx.is_npure_at(k);
        const bool rhs = is_npure_by_nilpotent(push_forward(proj, j), quotient_nil);
        if (lhs != rhs)
            return Verdict::make("PropIII", subject_of(i), Status::fail,
                                 {{"J", members_json(j.members())}, {"JNPure", lhs}, {"quotientNPure", rhs}});
    }
    return Verdict::make("PropIII", subject_of(i), Status::pass);
}

/// The extension of an N-pure ideal along a ring homomorphism is N-pure.
inline Verdict check_lemma_ii(const RingHom& h, const Ideal& i) {
    const std::string subject = subject_of(i) + " via " + h.label() + " -> " + h.codomain()->spec_string();
    if (!is_npure_definitional(i)) return Verdict::make("LemII", subject, Status::vacuous);
    const Ideal image = push_forward(h, i);
    return Verdict::check("LemII", subject, is_npure_definitional(image), {{"image", members_json(image.members())}});
}

} // namespace npure
