#pragma once

/**
 * @file ring.hpp
 * @brief Finite commutative rings with identity as dense operation tables.
 *
 * Elements are indices 0..n-1. Every structured construction (residue rings,
 * polynomial quotients, products, quotients by ideals) materializes its
 * addition and multiplication tables once; all downstream code works on the
 * tables alone. A FiniteRing is immutable and shared through RingPtr.
 */

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "npure/element_set.hpp"
#include "npure/error.hpp"
#include "npure/ring_spec.hpp"

namespace npure {

/// Rings up to this size get the exhaustive triple-loop axiom check.
inline constexpr std::size_t exhaustive_axiom_limit = 64;
/// Number of random triples sampled for associativity/distributivity above the limit.
inline constexpr std::size_t sampled_axiom_triples = 100000;

/// Eventual periodicity of the power sequence 1, a, a^2, ...
struct PowerCycle {
    std::size_t preperiod = 0; // mu
    std::size_t period = 1;    // c
    /// Every "exists n >= 1" power statement needs only n in [1, bound()].
    std::size_t bound() const { return preperiod + period; }
    bool operator==(const PowerCycle&) const = default;
};

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

class FiniteRing {
public:
    /// Validates the axioms and returns a shared immutable ring.
    static RingPtr make(std::size_t size, std::vector<Elem> add, std::vector<Elem> mul, Elem zero, Elem one,
                        RingSpec spec, std::vector<std::string> names) {
        auto ring = std::shared_ptr<FiniteRing>(new FiniteRing(size, std::move(add), std::move(mul), zero, one,
                                                               std::move(spec), std::move(names)));
        ring->validate();
        ring->compute_powers();
        return ring;
    }

    std::size_t size() const { return size_; }
    Elem zero() const { return zero_; }
    Elem one() const { return one_; }
    const RingSpec& spec() const { return spec_; }
    std::string spec_string() const { return to_string(spec_); }
    const std::string& name(Elem a) const { return names_.at(a); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<Elem>& add_table() const { return add_; }
    const std::vector<Elem>& mul_table() const { return mul_; }

    Elem add(Elem a, Elem b) const { return add_[a * size_ + b]; }
    Elem mul(Elem a, Elem b) const { return mul_[a * size_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    /// 1 - a, the factor appearing in every purity criterion.
    Elem one_minus(Elem a) const { return sub(one_, a); }

    void check_index(Elem a) const {
        if (a >= size_)
            throw SpecError("element index " + std::to_string(a) + " out of range for ring of size " +
                            std::to_string(size_));
    }

    /// a^k with a^0 = 1, read off the cached power cycle.
    Elem pow(Elem a, std::size_t k) const {
        check_index(a);
        const auto& cyc = cycles_[a];
        const auto& pw = powers_[a];
        if (k < pw.size()) return pw[k];
        return pw[cyc.preperiod + (k - cyc.preperiod) % cyc.period];
    }

    const PowerCycle& power_cycle(Elem a) const {
        check_index(a);
        return cycles_[a];
    }

    ElementSet all() const { return ElementSet::full(size_); }
    ElementSet empty_set() const { return ElementSet(size_); }

    /// Tables equal (the identity used to deduplicate the corpus).
    bool same_tables(const FiniteRing& other) const {
        return size_ == other.size_ && zero_ == other.zero_ && one_ == other.one_ && add_ == other.add_ &&
               mul_ == other.mul_;
    }

private:
    FiniteRing(std::size_t size, std::vector<Elem> add, std::vector<Elem> mul, Elem zero, Elem one, RingSpec spec,
               std::vector<std::string> names)
        : size_(size), add_(std::move(add)), mul_(std::move(mul)), zero_(zero), one_(one), spec_(std::move(spec)),
          names_(std::move(names)) {}

    [[noreturn]] void axiom_fail(const std::string& what) const {
        throw AxiomError("ring axiom violated (" + what + ") for " + to_string(spec_));
    }

    void validate() {
        const std::size_t n = size_;
        if (n == 0) axiom_fail("empty carrier");
        if (add_.size() != n * n || mul_.size() != n * n) axiom_fail("table shape");
        for (Elem v : add_)
            if (v >= n) axiom_fail("addition table entry out of range");
        for (Elem v : mul_)
            if (v >= n) axiom_fail("multiplication table entry out of range");
        if (zero_ >= n || one_ >= n) axiom_fail("zero/one index out of range");
        if (n > 1 && zero_ == one_) axiom_fail("zero equals one in a nonzero ring");
        if (names_.size() != n) {
            names_.clear();
            for (std::size_t i = 0; i < n; ++i) names_.push_back(std::to_string(i));
        }

        neg_.assign(n, 0);
        for (Elem a = 0; a < n; ++a) {
            if (add(zero_, a) != a) axiom_fail("0 + a = a at a=" + std::to_string(a));
            if (mul(one_, a) != a) axiom_fail("1 * a = a at a=" + std::to_string(a));
            bool found = false;
            for (Elem b = 0; b < n; ++b) {
                if (add(a, b) != add(b, a)) axiom_fail("additive commutativity");
                if (mul(a, b) != mul(b, a)) axiom_fail("multiplicative commutativity");
                if (!found && add(a, b) == zero_) {
                    neg_[a] = b;
                    found = true;
                }
            }
            if (!found) axiom_fail("additive inverse of " + std::to_string(a));
        }

        auto check_triple = [&](Elem a, Elem b, Elem c) {
            if (add(add(a, b), c) != add(a, add(b, c))) axiom_fail("additive associativity");
            if (mul(mul(a, b), c) != mul(a, mul(b, c))) axiom_fail("multiplicative associativity");
            if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) axiom_fail("distributivity");
        };
        if (n <= exhaustive_axiom_limit) {
            for (Elem a = 0; a < n; ++a)
                for (Elem b = 0; b < n; ++b)
                    for (Elem c = 0; c < n; ++c) check_triple(a, b, c);
        } else {
            std::mt19937_64 rng(0x5eed'0f'a1'9eb7aULL ^ n);
            std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
            for (std::size_t t = 0; t < sampled_axiom_triples; ++t) check_triple(pick(rng), pick(rng), pick(rng));
        }
    }

    void compute_powers() {
        cycles_.resize(size_);
        powers_.resize(size_);
        std::vector<std::size_t> first_seen(size_);
        for (Elem a = 0; a < size_; ++a) {
            std::fill(first_seen.begin(), first_seen.end(), SIZE_MAX);
            auto& pw = powers_[a];
            Elem cur = one_;
            for (std::size_t k = 0;; ++k) {
                if (first_seen[cur] != SIZE_MAX) {
                    cycles_[a] = PowerCycle{first_seen[cur], k - first_seen[cur]};
                    break;
                }
                first_seen[cur] = k;
                pw.push_back(cur);
                cur = mul(cur, a);
            }
        }
    }

    std::size_t size_;
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
    std::vector<Elem> neg_;
    Elem zero_;
    Elem one_;
    RingSpec spec_;
    std::vector<std::string> names_;
    std::vector<PowerCycle> cycles_;
    std::vector<std::vector<Elem>> powers_; // a^0 .. a^(mu+c-1)
};

/// a^k by repeated squaring; independent of the cached cycle.
inline Elem pow_by_squaring(const FiniteRing& r, Elem a, std::size_t k) {
    r.check_index(a);
    Elem result = r.one();
    Elem base = a;
    while (k > 0) {
        if (k & 1U) result = r.mul(result, base);
        base = r.mul(base, base);
        k >>= 1U;
    }
    return result;
}

inline Elem elem_pow(const FiniteRing& r, Elem a, std::size_t k) { return r.pow(a, k); }

inline PowerCycle power_cycle(const FiniteRing& r, Elem a) { return r.power_cycle(a); }

/// Nilpotent elements: some power in [1, mu+c] is zero.
inline ElementSet nilradical_set(const FiniteRing& r) {
    ElementSet out(r.size());
    for (Elem a = 0; a < r.size(); ++a) {
        const auto bound = r.power_cycle(a).bound();
        for (std::size_t k = 1; k <= bound; ++k) {
            if (r.pow(a, k) == r.zero()) {
                out.insert(a);
                break;
            }
        }
    }
    return out;
}

inline ElementSet units_set(const FiniteRing& r) {
    ElementSet out(r.size());
    for (Elem a = 0; a < r.size(); ++a)
        for (Elem b = 0; b < r.size(); ++b)
            if (r.mul(a, b) == r.one()) {
                out.insert(a);
                break;
            }
    return out;
}

inline ElementSet idempotents_set(const FiniteRing& r) {
    ElementSet out(r.size());
    for (Elem a = 0; a < r.size(); ++a)
        if (r.mul(a, a) == a) out.insert(a);
    return out;
}

/// Inverse of a unit, or nullopt-like sentinel size() if a is not a unit.
inline Elem find_inverse(const FiniteRing& r, Elem a) {
    for (Elem b = 0; b < r.size(); ++b)
        if (r.mul(a, b) == r.one()) return b;
    return static_cast<Elem>(r.size());
}

} // namespace npure
