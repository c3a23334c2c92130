#pragma once

/**
 * @file localization.hpp
 * @brief Localization of a finite ring, realized as a kernel quotient.
 *
 * For a multiplicative set S of a finite ring R, S^-1 R is isomorphic to
 * R/K with K = { a : sa = 0 for some s in S }. localize() builds R/K and
 * certifies the isomorphism by exhibiting an inverse for the image of every
 * s in S. The checks below test the 1 + I localization results against the
 * pure and N-pure verdicts in both directions.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "npure/builder.hpp"
#include "npure/context.hpp"
#include "npure/error.hpp"
#include "npure/hom.hpp"
#include "npure/ideal.hpp"
#include "npure/purity.hpp"
#include "npure/spectrum.hpp"
#include "npure/verdict.hpp"

namespace npure {

class MultiplicativeSet {
public:
    MultiplicativeSet(RingPtr ring, ElementSet members) : ring_(std::move(ring)), members_(std::move(members)) {
        if (!members_.contains(ring_->one())) throw PreconditionError("multiplicative set must contain 1");
        auto list = members_.members();
        for (Elem a : list)
            for (Elem b : list)
                if (!members_.contains(ring_->mul(a, b)))
                    throw PreconditionError("set is not closed under multiplication");
    }
    const RingPtr& ring_ptr() const { return ring_; }
    const FiniteRing& ring() const { return *ring_; }
    const ElementSet& members() const { return members_; }

private:
    RingPtr ring_;
    ElementSet members_;
};

/// S = 1 + I.
inline MultiplicativeSet one_plus_ideal(const Ideal& i) {
    const auto& r = i.ring();
    ElementSet s(r.size());
    i.members().for_each([&](Elem a) { s.insert(r.add(r.one(), a)); });
    return MultiplicativeSet(i.ring_ptr(), std::move(s));
}

/// S = R \ p for a prime p.
inline MultiplicativeSet complement_of_prime(const Ideal& p) {
    if (!is_prime_ideal(p)) throw PreconditionError("complement_of_prime requires a prime ideal, got " + p.describe());
    return MultiplicativeSet(p.ring_ptr(), p.members().complement());
}

/// { a : sa = 0 for some s in S }, by direct double loop.
inline Ideal localization_kernel(const MultiplicativeSet& s) {
    const auto& r = s.ring();
    const auto smembers = s.members().members();
    ElementSet k(r.size());
    for (Elem a = 0; a < r.size(); ++a)
        for (Elem t : smembers)
            if (r.mul(t, a) == r.zero()) {
                k.insert(a);
                break;
            }
    return ideal_from_members(s.ring_ptr(), std::move(k));
}

struct LocalizationResult {
    RingPtr source;
    ElementSet multset;
    Ideal kernel;
    RingPtr quotient;
    RingHom projection;
    /// s -> inverse of the image of s in the quotient.
    std::map<Elem, Elem> certificate;
};

inline LocalizationResult localize(const MultiplicativeSet& s) {
    LocalizationResult out;
    out.source = s.ring_ptr();
    out.multset = s.members();
    out.kernel = localization_kernel(s);
    out.projection = quotient_projection(out.kernel);
    out.quotient = out.projection.codomain();
    const auto& q = *out.quotient;
    s.members().for_each([&](Elem t) {
        Elem image = out.projection(t);
        Elem inv = find_inverse(q, image);
        if (inv >= q.size())
            throw InternalError("image of " + s.ring().name(t) + " is not a unit in " + q.spec_string());
        out.certificate.emplace(t, inv);
    });
    return out;
}

/// Ker of R -> (R \ p)^-1 R.
inline Ideal kernel_of_pi(const Ideal& p) { return localization_kernel(complement_of_prime(p)); }

namespace detail {

/// Induced map between two quotients of the same ring, class of a -> class of a.
/// Returns nullopt when it is not single-valued; otherwise the validated hom.
inline std::optional<RingHom> induced_map(const RingHom& from, const RingHom& to) {
    std::vector<Elem> map(from.codomain()->size(), static_cast<Elem>(-1));
    for (Elem a = 0; a < from.domain()->size(); ++a) {
        Elem x = from(a), y = to(a);
        if (map[x] == static_cast<Elem>(-1))
            map[x] = y;
        else if (map[x] != y)
            return std::nullopt;
    }
    try {
        return build_hom(from.codomain(), to.codomain(), std::move(map), "induced");
    } catch (const AxiomError&) {
        return std::nullopt;
    }
}

inline RingHom compose(const RingHom& first, const RingHom& second) {
    std::vector<Elem> map(first.domain()->size());
    for (Elem a = 0; a < map.size(); ++a) map[a] = second(first(a));
    return build_hom(first.domain(), second.codomain(), std::move(map), second.label() + " o " + first.label());
}

inline bool same_member_family(std::vector<ElementSet> a, std::vector<ElementSet> b) {
    auto less = [](const ElementSet& x, const ElementSet& y) { return canonical_less(x, y); };
    std::sort(a.begin(), a.end(), less);
    std::sort(b.begin(), b.end(), less);
    return a == b;
}

} // namespace detail

/// Criteria (ii)-(v) for S = 1 + I, each compared with the N-purity of I.
inline Verdict check_theorem_iii(const RingContext& ctx, const Ideal& i) {
    const bool np = ctx.is_npure(i);
    const auto loc = localize(one_plus_ideal(i));
    const RingContext qctx(loc.quotient);
    const auto rad = radical_members(i);

    // (ii) Spec of the localization, pulled back, is V(I).
    std::vector<ElementSet> pulled, expected;
    for (const auto& q : qctx.spectrum().primes) pulled.push_back(pull_back(loc.projection, q.members()));
    for (const auto& p : vanishing_set(ctx.spectrum(), i)) expected.push_back(p.members());
    const bool c2 = detail::same_member_family(pulled, expected);

    // (iii) N of the localization is the image of rad(I).
    const bool c3 = qctx.nilradical() == image_set(rad, loc.projection.table(), loc.quotient->size());

    // (iv) rad(I) = rad(Ker phi).
    const bool c4 = rad == radical_members(loc.kernel);

    // (v) R/rad(I) -> Q/N(Q), explicit map and kernel route.
    const Ideal rad_ideal = ideal_from_members(i.ring_ptr(), rad);
    const RingHom to_a = quotient_projection(rad_ideal);
    const RingHom q_to_b = quotient_projection(ideal_from_members(loc.quotient, qctx.nilradical()));
    const RingHom to_b = detail::compose(loc.projection, q_to_b);
    const auto psi = detail::induced_map(to_a, to_b);
    const bool v_explicit = psi && psi->is_injective() && psi->is_surjective();
    ElementSet zero_b(to_b.codomain()->size());
    zero_b.insert(to_b.codomain()->zero());
    const bool v_kernel = pull_back(to_b, zero_b) == rad;
    const bool c5 = v_explicit && v_kernel;

    nlohmann::json w = {{"npure", np},
                        {"ii", c2},
                        {"iii", c3},
                        {"iv", c4},
                        {"v", c5},
                        {"vExplicit", v_explicit},
                        {"vKernel", v_kernel},
                        {"kernel", members_json(loc.kernel.members())},
                        {"quotientSize", loc.quotient->size()}};
    const bool ok = c2 == np && c3 == np && c4 == np && c5 == np && v_explicit == v_kernel;
    return Verdict::check("ThmIII", subject_of(i), ok, w);
}

/// Criteria (ii)-(iii) for S = 1 + I, each compared with the purity of I.
inline Verdict check_theorem_iv(const RingContext& ctx, const Ideal& i) {
    const auto& r = ctx.ring();
    const bool pure = ctx.is_pure(i);
    const auto loc = localize(one_plus_ideal(i));
    const auto& q = *loc.quotient;

    // (iii) the image of I is zero.
    const bool c3 = i.subset_of(loc.kernel);

    // (ii) kernel equality, plus the explicit map a/s -> a + I through the certificate.
    const bool kernel_equal = loc.kernel == i;
    const RingHom to_ri = quotient_projection(i);
    std::vector<Elem> map(q.size(), static_cast<Elem>(-1));
    bool single_valued = true;
    for (Elem a = 0; a < r.size() && single_valued; ++a) {
        for (const auto& [s, inv] : loc.certificate) {
            Elem frac = q.mul(loc.projection(a), inv);
            Elem target = to_ri(a);
            if (map[frac] == static_cast<Elem>(-1))
                map[frac] = target;
            else if (map[frac] != target) {
                single_valued = false;
                break;
            }
        }
    }
    bool explicit_iso = false;
    if (single_valued && std::find(map.begin(), map.end(), static_cast<Elem>(-1)) == map.end()) {
        try {
            auto h = build_hom(loc.quotient, to_ri.codomain(), map, "a/s -> a+I");
            explicit_iso = h.is_injective() && h.is_surjective();
        } catch (const AxiomError&) {
        }
    }
    const bool c2 = kernel_equal && explicit_iso;

    nlohmann::json w = {{"pure", pure},
                        {"ii", c2},
                        {"iii", c3},
                        {"kernelEqualsI", kernel_equal},
                        {"explicitIso", explicit_iso},
                        {"kernel", members_json(loc.kernel.members())}};
    const bool ok = c2 == pure && c3 == pure && kernel_equal == explicit_iso;
    return Verdict::check("ThmIV", subject_of(i), ok, w);
}

/// Maximal ideals containing I.
inline std::vector<Ideal> maximals_over(const RingContext& ctx, const Ideal& i) {
    std::vector<Ideal> out;
    for (const auto& m : ctx.spectrum().maximals)
        if (i.subset_of(m)) out.push_back(m);
    return out;
}

/// rad(I) equals the intersection of rad(Ker pi_m) over maximal m containing I.
inline Verdict check_proposition_ii(const RingContext& ctx, const Ideal& i) {
    if (!ctx.is_npure(i)) return Verdict::make("PropII", subject_of(i), Status::vacuous);
    std::vector<Ideal> rads;
    for (const auto& m : maximals_over(ctx, i)) rads.push_back(radical(kernel_of_pi(m)));
    const auto inter = ideal_intersect_all(i.ring_ptr(), rads);
    const auto rad = radical_members(i);
    return Verdict::check("PropII", subject_of(i), inter.members() == rad,
                          {{"radical", members_json(rad)}, {"intersection", members_json(inter.members())}});
}

/// I lies in rad(Ker pi_m) for each maximal m containing I.
inline Verdict check_corollary_i(const RingContext& ctx, const Ideal& i) {
    if (!ctx.is_npure(i)) return Verdict::make("CorI", subject_of(i), Status::vacuous);
    const auto over = maximals_over(ctx, i);
    if (over.empty()) return Verdict::make("CorI", subject_of(i), Status::vacuous);
    for (const auto& m : over) {
        const auto rk = radical_members(kernel_of_pi(m));
        if (!i.members().subset_of(rk))
            return Verdict::make("CorI", subject_of(i), Status::fail,
                                 {{"maximal", members_json(m.members())}, {"radKernel", members_json(rk)}});
    }
    return Verdict::make("CorI", subject_of(i), Status::pass);
}

/// On an mp-ring, the two intersections agree and form an N-pure ideal.
inline Verdict check_theorem_ii(const RingContext& ctx, const Ideal& i) {
    if (!i.is_proper() || !is_mp_ring(ctx)) return Verdict::make("ThmII", subject_of(i), Status::vacuous);
    const auto& spec = ctx.spectrum();
    std::vector<Ideal> rads, mins;
    for (const auto& m : maximals_over(ctx, i)) {
        rads.push_back(radical(kernel_of_pi(m)));
        for (const auto& p : lambda_set(spec, m))
            if (contains_ideal(spec.minimals, p)) mins.push_back(p);
    }
    const auto j1 = ideal_intersect_all(i.ring_ptr(), rads);
    const auto j2 = ideal_intersect_all(i.ring_ptr(), mins);
    const bool np = is_npure_definitional(j1);
    return Verdict::check(
        "ThmII", subject_of(i), j1 == j2 && np,
        {{"J1", members_json(j1.members())}, {"J2", members_json(j2.members())}, {"J1NPure", np}});
}

/// Kernels of pi_m on a Gelfand ring: pure (LemIII), m pure iff Ker pi_m = m
/// (PropIV), and rad(Ker pi_p) = p for N-pure primes (LemIV).
inline std::vector<Verdict> check_gelfand_kernels(const RingContext& ctx) {
    const std::string subject = ctx.ring().spec_string();
    const auto& spec = ctx.spectrum();
    std::vector<Verdict> out;
    const bool gelfand = is_gelfand(spec);

    if (!gelfand || spec.maximals.empty()) {
        out.push_back(Verdict::make("LemIII", subject, Status::vacuous));
        out.push_back(Verdict::make("PropIV", subject, Status::vacuous));
    } else {
        Verdict lem3 = Verdict::make("LemIII", subject, Status::pass);
        Verdict prop4 = Verdict::make("PropIV", subject, Status::pass);
        for (const auto& m : spec.maximals) {
            const Ideal k = kernel_of_pi(m);
            if (lem3.passed() && !is_pure(k))
                lem3 = Verdict::make("LemIII", subject, Status::fail,
                                     {{"maximal", members_json(m.members())}, {"kernel", members_json(k.members())}});
            const bool m_pure = ctx.is_pure(m);
            if (prop4.passed() && m_pure != (k == m))
                prop4 = Verdict::make("PropIV", subject, Status::fail,
                                      {{"maximal", members_json(m.members())},
                                       {"kernel", members_json(k.members())},
                                       {"maximalPure", m_pure}});
        }
        out.push_back(std::move(lem3));
        out.push_back(std::move(prop4));
    }

    Verdict lem4 = Verdict::make("LemIV", subject, Status::vacuous);
    for (const auto& p : spec.primes) {
        if (!ctx.is_npure(p)) continue;
        const auto rk = radical_members(kernel_of_pi(p));
        if (rk != p.members()) {
            lem4 = Verdict::make("LemIV", subject, Status::fail,
                                 {{"prime", members_json(p.members())}, {"radKernel", members_json(rk)}});
            break;
        }
        lem4.status = Status::pass;
    }
    out.push_back(std::move(lem4));
    return out;
}

/// Localize at 1 + I, then kill the image of rad(I): the composite R -> final ring.
inline RingHom localized_radical_quotient(const Ideal& i) {
    const auto loc = localize(one_plus_ideal(i));
    const Ideal rad = radical(i);
    const Ideal image = generate_ideal(loc.quotient, [&] {
        std::vector<Elem> gens;
        for (Elem g : rad.gens()) gens.push_back(loc.projection(g));
        return gens;
    }());
    return detail::compose(loc.projection, quotient_projection(image));
}

/// With rad(I) = rad(J) and I N-pure, the two localized radical quotients
/// are isomorphic as algebras over R.
inline Verdict check_corollary_ii(const RingContext& ctx, const Ideal& i, const Ideal& j) {
    const std::string subject = subject_of(i) + " J=" + members_json(j.members()).dump();
    if (!ctx.is_npure(i) || radical_members(i) != radical_members(j))
        return Verdict::make("CorII", subject, Status::vacuous);
    const RingHom fi = localized_radical_quotient(i);
    const RingHom fj = localized_radical_quotient(j);
    ElementSet zi(fi.codomain()->size()), zj(fj.codomain()->size());
    zi.insert(fi.codomain()->zero());
    zj.insert(fj.codomain()->zero());
    const auto ki = pull_back(fi, zi);
    const auto kj = pull_back(fj, zj);
    const auto bij = detail::induced_map(fi, fj);
    const bool explicit_iso = bij && bij->is_injective() && bij->is_surjective();
    const bool kernels_equal = ki == kj;
    return Verdict::check("CorII", subject, kernels_equal && explicit_iso,
                          {{"kernelI", members_json(ki)}, {"kernelJ", members_json(kj)}, {"explicitIso", explicit_iso}});
}

/// R/I is Gelfand (mp) iff the 1 + I localization is, under the pure and
/// N-pure hypotheses separately.
inline std::vector<Verdict> check_corollary_iii(const RingContext& ctx, const Ideal& i) {
    std::vector<Verdict> out;
    const bool pure = ctx.is_pure(i);
    const bool np = ctx.is_npure(i);
    if (!pure && !np) {
        out.push_back(Verdict::make("CorIII", subject_of(i) + " hyp=pure", Status::vacuous));
        out.push_back(Verdict::make("CorIII", subject_of(i) + " hyp=npure", Status::vacuous));
        return out;
    }
    const RingContext rctx(quotient_ring(i).ring);
    const RingContext lctx(localize(one_plus_ideal(i)).quotient);
    const bool g1 = is_gelfand(rctx), g2 = is_gelfand(lctx);
    const bool m1 = is_mp_ring(rctx), m2 = is_mp_ring(lctx);
    nlohmann::json w = {{"quotientGelfand", g1}, {"localGelfand", g2}, {"quotientMp", m1}, {"localMp", m2}};
    const bool ok = g1 == g2 && m1 == m2;
    out.push_back(pure ? Verdict::check("CorIII", subject_of(i) + " hyp=pure", ok, w)
                       : Verdict::make("CorIII", subject_of(i) + " hyp=pure", Status::vacuous));
    out.push_back(np ? Verdict::check("CorIII", subject_of(i) + " hyp=npure", ok, w)
                     : Verdict::make("CorIII", subject_of(i) + " hyp=npure", Status::vacuous));
    return out;
}

/// (Ann(a) N-pure for all a, Ker pi_p primary for all primes p).
inline std::pair<bool, bool> is_mid_ring(const RingContext& ctx) {
    bool by_ann = true;
    for (Elem a = 0; a < ctx.ring().size() && by_ann; ++a)
        by_ann = ctx.is_npure(annihilator_of_element(ctx.ring_ptr(), a));
    bool by_kernel = true;
    for (const auto& p : ctx.spectrum().primes) by_kernel = by_kernel && is_primary_ideal(kernel_of_pi(p));
    return {by_ann, by_kernel};
}

inline Verdict check_mid_ring(const RingContext& ctx) {
    auto [a, b] = is_mid_ring(ctx);
    return Verdict::check("Mid", ctx.ring().spec_string(), a == b, {{"byAnnihilator", a}, {"byKernel", b}});
}

} // namespace npure
