#pragma once

/**
 * @file pure_predicates.hpp
 * @brief Elementwise definitions of pure, N-pure and strongly pi-regular ideals.
 *
 * All exponent searches run over n in [1, mu_a + c_a] from the power cycle of
 * the element; beyond that bound the powers repeat.
 */

#include <cstddef>
#include <optional>
#include <utility>

#include "npure/element_set.hpp"
#include "npure/error.hpp"
#include "npure/ideal.hpp"
#include "npure/ring.hpp"

namespace npure {

/// An (n, b) pair with a^n (1 - b) = 0.
struct ExponentWitness {
    std::size_t n = 1;
    Elem b = 0;
    bool operator==(const ExponentWitness&) const = default;
};

/// 1 in A + I, decided as: some u in A has 1 - u in I.
inline bool one_in_sum(const FiniteRing& r, const ElementSet& a, const ElementSet& i) {
    bool found = false;
    a.for_each([&](Elem u) { found = found || i.contains(r.one_minus(u)); });
    return found;
}

/// Ann(x) as a bare member set.
inline ElementSet annihilator_members(const FiniteRing& r, Elem x) {
    ElementSet out(r.size());
    for (Elem y = 0; y < r.size(); ++y)
        if (r.mul(x, y) == r.zero()) out.insert(y);
    return out;
}

/// For each a in I some b in I with a(1 - b) = 0.
inline bool is_pure_by_witness(const Ideal& i) {
    const auto& r = i.ring();
    const auto members = i.member_list();
    for (Elem a : members) {
        bool ok = false;
        for (Elem b : members)
            if (r.mul(a, r.one_minus(b)) == r.zero()) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

/// Ann(a) + I = R for each a in I.
inline bool is_pure_by_annihilator(const Ideal& i) {
    const auto& r = i.ring();
    bool ok = true;
    i.members().for_each([&](Elem a) { ok = ok && one_in_sum(r, annihilator_members(r, a), i.members()); });
    return ok;
}

/// Both forms of purity; a disagreement is an internal error.
inline bool is_pure(const Ideal& i) {
    bool w = is_pure_by_witness(i);
    if (w != is_pure_by_annihilator(i))
        throw InternalError("the two purity forms disagree on " + i.describe() + " in " + i.ring().spec_string());
    return w;
}

/// For each a in I some b in I with a(1 - b) nilpotent.
inline bool is_npure_by_nilpotent(const Ideal& i, const ElementSet& nilradical) {
    const auto& r = i.ring();
    const auto members = i.member_list();
    for (Elem a : members) {
        bool ok = false;
        for (Elem b : members)
            if (nilradical.contains(r.mul(a, r.one_minus(b)))) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

inline bool is_npure_by_nilpotent(const Ideal& i) { return is_npure_by_nilpotent(i, nilradical_set(i.ring())); }

/// Lexicographically least (n, b) with a^n (1 - b) = 0 and b drawn from `pool`.
inline std::optional<ExponentWitness> exponent_witness(const FiniteRing& r, Elem a, const ElementSet& pool) {
    const auto pool_list = pool.members();
    const auto bound = r.power_cycle(a).bound();
    for (std::size_t n = 1; n <= bound; ++n) {
        const Elem an = r.pow(a, n);
        for (Elem b : pool_list)
            if (r.mul(an, r.one_minus(b)) == r.zero()) return ExponentWitness{n, b};
    }
    return std::nullopt;
}

/// For each a in I some n >= 1 and b in I with a^n (1 - b) = 0.
inline bool is_npure_by_exponent(const Ideal& i) {
    bool ok = true;
    i.members().for_each([&](Elem a) { ok = ok && exponent_witness(i.ring(), a, i.members()).has_value(); });
    return ok;
}

/// Definitional N-purity (nilpotent form).
inline bool is_npure_definitional(const Ideal& i) { return is_npure_by_nilpotent(i); }

/// For each a in I some n >= 1 and b in I with a^n = a^(n+1) b.
inline bool is_strongly_pi_regular(const Ideal& i) {
    const auto& r = i.ring();
    const auto members = i.member_list();
    for (Elem a : members) {
        bool ok = false;
        const auto bound = r.power_cycle(a).bound();
        for (std::size_t n = 1; n <= bound && !ok; ++n) {
            const Elem an = r.pow(a, n);
            const Elem an1 = r.mul(an, a);
            for (Elem b : members)
                if (r.mul(an1, b) == an) {
                    ok = true;
                    break;
                }
        }
        if (!ok) return false;
    }
    return true;
}

} // namespace npure
