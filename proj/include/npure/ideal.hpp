#pragma once

/**
 * @file ideal.hpp
 * @brief Ideals of a finite ring and the ideal-level operators.
 *
 * An Ideal stores its full member set together with a generating list whose
 * closure is that member set. The lattice of all ideals is produced as the
 * join-closure of the principal ideals, never by subset enumeration.
 */

#include <algorithm>
#include <cstddef>
#include <deque>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "npure/element_set.hpp"
#include "npure/error.hpp"
#include "npure/ring.hpp"

namespace npure {

/// Default cap on the number of ideals in a lattice.
inline constexpr std::size_t default_max_ideals = 4096;

class Ideal {
public:
    Ideal() = default;

    const FiniteRing& ring() const { return *ring_; }
    const RingPtr& ring_ptr() const { return ring_; }
    const ElementSet& members() const { return members_; }
    const std::vector<Elem>& gens() const { return gens_; }

    bool contains(Elem a) const { return members_.contains(a); }
    std::size_t size() const { return members_.count(); }
    bool is_zero() const { return members_.count() == 1; }
    bool is_whole() const { return members_.contains(ring_->one()); }
    bool is_proper() const { return !is_whole(); }
    bool subset_of(const Ideal& other) const { return members_.subset_of(other.members_); }

    bool operator==(const Ideal& other) const { return ring_ == other.ring_ && members_ == other.members_; }

    /// "(g1,g2)" using element display names; "(0)" for the zero ideal.
    std::string describe() const {
        if (gens_.empty()) return "(" + ring_->name(ring_->zero()) + ")";
        std::string out = "(";
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (i) out += ",";
            out += ring_->name(gens_[i]);
        }
        return out + ")";
    }

    std::vector<Elem> member_list() const { return members_.members(); }

    // Unchecked; use generate_ideal or ideal_from_members.
    static Ideal make_unchecked(RingPtr ring, ElementSet members, std::vector<Elem> gens) {
        Ideal out;
        out.ring_ = std::move(ring);
        out.members_ = std::move(members);
        out.gens_ = std::move(gens);
        return out;
    }

private:
    RingPtr ring_;
    ElementSet members_;
    std::vector<Elem> gens_;
};

namespace detail {

inline ElementSet principal_members(const FiniteRing& r, Elem a) {
    ElementSet out(r.size());
    for (Elem x = 0; x < r.size(); ++x) out.insert(r.mul(x, a));
    return out;
}

/// {x + y : x in a, y in b}; an ideal whenever a and b are.
inline ElementSet sum_members(const FiniteRing& r, const ElementSet& a, const ElementSet& b) {
    ElementSet out(r.size());
    auto bm = b.members();
    a.for_each([&](Elem x) {
        for (Elem y : bm) out.insert(r.add(x, y));
    });
    return out;
}

inline bool is_ideal_set(const FiniteRing& r, const ElementSet& s) {
    if (!s.contains(r.zero())) return false;
    auto m = s.members();
    for (Elem x : m) {
        for (Elem y : m)
            if (!s.contains(r.add(x, y))) return false;
        for (Elem t = 0; t < r.size(); ++t)
            if (!s.contains(r.mul(t, x))) return false;
    }
    return true;
}

/// Greedy generating set: repeatedly add the member whose principal ideal
/// enlarges the current span the most (ties to the smallest index).
inline std::vector<Elem> greedy_generators(const FiniteRing& r, const ElementSet& target) {
    std::vector<Elem> gens;
    ElementSet span(r.size());
    span.insert(r.zero());
    auto members = target.members();
    while (span != target) {
        std::size_t best_gain = 0;
        Elem best = 0;
        ElementSet best_span;
        for (Elem a : members) {
            if (span.contains(a)) continue;
            ElementSet next = sum_members(r, span, principal_members(r, a));
            std::size_t gain = next.count();
            if (gain > best_gain) {
                best_gain = gain;
                best = a;
                best_span = std::move(next);
            }
        }
        if (best_gain == 0 || !best_span.subset_of(target))
            throw InternalError("member set is not an ideal; greedy generation escaped it");
        gens.push_back(best);
        span = std::move(best_span);
    }
    return gens;
}

} // namespace detail

/// Smallest ideal containing gens: the sum of the principal ideals (g_i).
inline Ideal generate_ideal(const RingPtr& ring, const std::vector<Elem>& gens) {
    const auto& r = *ring;
    ElementSet members(r.size());
    members.insert(r.zero());
    for (Elem g : gens) {
        r.check_index(g);
        members = detail::sum_members(r, members, detail::principal_members(r, g));
    }
    return Ideal::make_unchecked(ring, std::move(members), gens);
}

/// Wraps a member set already known to be an ideal; verifies closure and
/// records a greedy generating list.
inline Ideal ideal_from_members(const RingPtr& ring, ElementSet members) {
    if (!detail::is_ideal_set(*ring, members)) throw PreconditionError("member set is not an ideal");
    auto gens = detail::greedy_generators(*ring, members);
    return Ideal::make_unchecked(ring, std::move(members), std::move(gens));
}

inline Ideal zero_ideal(const RingPtr& ring) { return generate_ideal(ring, {}); }
inline Ideal whole_ring_ideal(const RingPtr& ring) { return generate_ideal(ring, {ring->one()}); }

inline void require_same_ring(const Ideal& a, const Ideal& b) {
    if (a.ring_ptr() != b.ring_ptr()) throw PreconditionError("ideals belong to different rings");
}

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    require_same_ring(a, b);
    std::vector<Elem> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return generate_ideal(a.ring_ptr(), gens);
}

inline Ideal ideal_product(const Ideal& a, const Ideal& b) {
    require_same_ring(a, b);
    const auto& r = a.ring();
    std::vector<Elem> gens;
    for (Elem x : a.gens())
        for (Elem y : b.gens()) gens.push_back(r.mul(x, y));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return generate_ideal(a.ring_ptr(), gens);
}

inline Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
    require_same_ring(a, b);
    return ideal_from_members(a.ring_ptr(), a.members() & b.members());
}

/// Intersection of a family; the empty family gives the whole ring.
inline Ideal ideal_intersect_all(const RingPtr& ring, const std::vector<Ideal>& family) {
    ElementSet acc = ring->all();
    for (const auto& i : family) acc &= i.members();
    return ideal_from_members(ring, std::move(acc));
}

inline Ideal ideal_power(const Ideal& i, std::size_t n) {
    if (n == 0) throw PreconditionError("ideal power exponent must be >= 1");
    Ideal out = i;
    for (std::size_t k = 1; k < n; ++k) out = ideal_product(out, i);
    return out;
}

/// Descending chain I, I^2, ... up to and including the first repeat.
struct PowerChain {
    std::vector<Ideal> powers;  // powers[k] = I^(k+1)
    std::size_t stabilization;  // least n with I^n = I^(n+1)
};

inline PowerChain power_chain(const Ideal& i) {
    PowerChain chain{{i}, 0};
    for (std::size_t n = 1;; ++n) {
        Ideal next = ideal_product(chain.powers.back(), i);
        bool stable = next == chain.powers.back();
        chain.powers.push_back(std::move(next));
        if (stable) {
            chain.stabilization = n;
            return chain;
        }
        if (n > i.ring().size() + 1) throw InternalError("ideal power chain failed to stabilize");
    }
}

inline Ideal annihilator_of_element(const RingPtr& ring, Elem a) {
    ring->check_index(a);
    ElementSet members(ring->size());
    for (Elem x = 0; x < ring->size(); ++x)
        if (ring->mul(a, x) == ring->zero()) members.insert(x);
    return ideal_from_members(ring, std::move(members));
}

/// Ann(I) as the intersection of Ann(g) over the generators of I.
inline Ideal annihilator_of_ideal(const Ideal& i) {
    std::vector<Ideal> anns;
    for (Elem g : i.gens()) anns.push_back(annihilator_of_element(i.ring_ptr(), g));
    return ideal_intersect_all(i.ring_ptr(), anns);
}

inline ElementSet radical_members(const Ideal& i) {
    const auto& r = i.ring();
    ElementSet out(r.size());
    for (Elem a = 0; a < r.size(); ++a) {
        const auto bound = r.power_cycle(a).bound();
        for (std::size_t n = 1; n <= bound; ++n) {
            if (i.contains(r.pow(a, n))) {
                out.insert(a);
                break;
            }
        }
    }
    return out;
}

inline Ideal radical(const Ideal& i) { return ideal_from_members(i.ring_ptr(), radical_members(i)); }

/// Image of an element set under a table map.
inline ElementSet image_set(const ElementSet& s, const std::vector<Elem>& map, std::size_t codomain_size) {
    ElementSet out(codomain_size);
    s.for_each([&](Elem a) { out.insert(map[a]); });
    return out;
}

/// Every ideal exactly once, sorted by (cardinality, lexicographic member list).
inline std::vector<Ideal> all_ideals(const RingPtr& ring, std::size_t max_ideals = default_max_ideals) {
    const auto& r = *ring;

    // Distinct principal ideals, each tagged with its least generator.
    std::vector<std::pair<ElementSet, Elem>> principals;
    {
        std::unordered_map<ElementSet, Elem, ElementSetHash> seen;
        for (Elem a = 0; a < r.size(); ++a) {
            auto p = detail::principal_members(r, a);
            if (seen.emplace(p, a).second) principals.emplace_back(std::move(p), a);
        }
    }

    std::vector<Ideal> found;
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
    Ideal zero = zero_ideal(ring);
    index.emplace(zero.members(), 0);
    found.push_back(zero);

    for (std::size_t cur = 0; cur < found.size(); ++cur) {
        for (const auto& [pm, gen] : principals) {
            if (pm.subset_of(found[cur].members())) continue;
            ElementSet joined = detail::sum_members(r, found[cur].members(), pm);
            if (index.count(joined)) continue;
            if (found.size() >= max_ideals)
                throw CapExceeded("ideal lattice of " + r.spec_string() + " exceeds " + std::to_string(max_ideals) +
                                  " ideals");
            std::vector<Elem> gens = found[cur].gens();
            gens.push_back(gen);
            index.emplace(joined, found.size());
            found.push_back(Ideal::make_unchecked(ring, std::move(joined), std::move(gens)));
        }
    }

    std::sort(found.begin(), found.end(),
              [](const Ideal& a, const Ideal& b) { return canonical_less(a.members(), b.members()); });
    return found;
}

} // namespace npure
