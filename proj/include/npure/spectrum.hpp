#pragma once

/**
 * @file spectrum.hpp
 * @brief Prime, maximal and minimal spectra; ring-class predicates.
 *
 * Every predicate is evaluated from its definition even where finiteness
 * already forces the answer (a finite ring is zero-dimensional, hence both
 * Gelfand and mp).
 */

#include <string>
#include <vector>

#include "npure/element_set.hpp"
#include "npure/error.hpp"
#include "npure/ideal.hpp"
#include "npure/ring.hpp"

namespace npure {

struct SpectrumData {
    std::vector<Ideal> primes;
    std::vector<Ideal> maximals;
    std::vector<Ideal> minimals;
    Ideal jacobson;
};

/// Proper, and no product of two non-members lands inside.
inline bool is_prime_ideal(const Ideal& p) {
    if (!p.is_proper()) return false;
    const auto& r = p.ring();
    auto outside = p.members().complement().members();
    for (Elem a : outside)
        for (Elem b : outside)
            if (p.contains(r.mul(a, b))) return false;
    return true;
}

/// Spec, Max, Min and J(R) from a precomputed ideal lattice.
inline SpectrumData compute_spectrum(const RingPtr& ring, const std::vector<Ideal>& ideals) {
    SpectrumData s;
    for (const auto& i : ideals)
        if (is_prime_ideal(i)) s.primes.push_back(i);
    for (const auto& p : s.primes) {
        bool maximal = true, minimal = true;
        for (const auto& q : s.primes) {
            if (q == p) continue;
            if (p.subset_of(q)) maximal = false;
            if (q.subset_of(p)) minimal = false;
        }
        if (maximal) s.maximals.push_back(p);
        if (minimal) s.minimals.push_back(p);
    }
    s.jacobson = ideal_intersect_all(ring, s.maximals);
    return s;
}

/// V(I): primes containing I.
inline std::vector<Ideal> vanishing_set(const SpectrumData& s, const Ideal& i) {
    std::vector<Ideal> out;
    for (const auto& p : s.primes)
        if (i.subset_of(p)) out.push_back(p);
    return out;
}

/// Lambda(p): primes contained in the prime p.
inline std::vector<Ideal> lambda_set(const SpectrumData& s, const Ideal& p) {
    if (!is_prime_ideal(p)) throw PreconditionError("lambda_set requires a prime ideal, got " + p.describe());
    std::vector<Ideal> out;
    for (const auto& q : s.primes)
        if (q.subset_of(p)) out.push_back(q);
    return out;
}

inline bool contains_ideal(const std::vector<Ideal>& list, const Ideal& i) {
    for (const auto& x : list)
        if (x == i) return true;
    return false;
}

inline bool is_reduced(const FiniteRing& r) { return nilradical_set(r).count() == 1; }

inline bool is_zero_dimensional(const SpectrumData& s) {
    for (const auto& p : s.primes)
        if (!contains_ideal(s.maximals, p)) return false;
    return true;
}

/// Every prime lies in exactly one maximal ideal.
inline bool is_gelfand(const SpectrumData& s) {
    for (const auto& p : s.primes) {
        std::size_t count = 0;
        for (const auto& m : s.maximals)
            if (p.subset_of(m)) ++count;
        if (count != 1) return false;
    }
    return true;
}

/// Every prime contains exactly one minimal prime.
inline bool is_mp_ring(const SpectrumData& s) {
    for (const auto& p : s.primes) {
        std::size_t count = 0;
        for (const auto& q : s.minimals)
            if (q.subset_of(p)) ++count;
        if (count != 1) return false;
    }
    return true;
}

/// Proper, and ab in q with a not in q forces b in the radical of q.
inline bool is_primary_ideal(const Ideal& q) {
    if (!q.is_proper()) return false;
    const auto& r = q.ring();
    const auto rad = radical_members(q);
    for (Elem a = 0; a < r.size(); ++a) {
        if (q.contains(a)) continue;
        for (Elem b = 0; b < r.size(); ++b)
            if (q.contains(r.mul(a, b)) && !rad.contains(b)) return false;
    }
    return true;
}

} // namespace npure
