#pragma once

/**
 * @file context.hpp
 * @brief Per-ring cache of the ideal lattice, spectrum and purity flags.
 *
 * Each cached value is computed at most once (std::call_once) and is
 * read-only afterwards, so a RingContext may be shared across threads.
 */

#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "npure/element_set.hpp"
#include "npure/error.hpp"
#include "npure/ideal.hpp"
#include "npure/pure_predicates.hpp"
#include "npure/ring.hpp"
#include "npure/spectrum.hpp"

namespace npure {

class RingContext {
public:
    explicit RingContext(RingPtr ring, std::size_t max_ideals = default_max_ideals)
        : ring_(std::move(ring)), max_ideals_(max_ideals) {}

    RingContext(const RingContext&) = delete;
    RingContext& operator=(const RingContext&) = delete;

    const FiniteRing& ring() const { return *ring_; }
    const RingPtr& ring_ptr() const { return ring_; }

    const std::vector<Ideal>& ideals() const {
        std::call_once(ideals_once_, [this] {
            ideals_ = all_ideals(ring_, max_ideals_);
            for (std::size_t k = 0; k < ideals_.size(); ++k) index_.emplace(ideals_[k].members(), k);
        });
        return ideals_;
    }

    /// Position of an ideal in the canonical lattice order.
    std::size_t index_of(const Ideal& i) const {
        ideals();
        auto it = index_.find(i.members());
        if (it == index_.end()) throw InternalError("ideal missing from lattice: " + i.describe());
        return it->second;
    }

    /// The lattice's copy of an ideal given by its member set.
    const Ideal& lattice_ideal(const ElementSet& members) const {
        ideals();
        auto it = index_.find(members);
        if (it == index_.end()) throw InternalError("member set is not in the ideal lattice");
        return ideals_[it->second];
    }

    const SpectrumData& spectrum() const {
        std::call_once(spectrum_once_, [this] { spectrum_ = compute_spectrum(ring_, ideals()); });
        return spectrum_;
    }

    const ElementSet& nilradical() const {
        std::call_once(nil_once_, [this] { nilradical_ = nilradical_set(*ring_); });
        return nilradical_;
    }

    bool is_pure_at(std::size_t k) const {
        flags();
        return pure_[k];
    }
    bool is_npure_at(std::size_t k) const {
        flags();
        return npure_[k];
    }
    bool is_pure(const Ideal& i) const { return is_pure_at(index_of(i)); }
    bool is_npure(const Ideal& i) const { return is_npure_at(index_of(i)); }

    const Ideal& radical_at(std::size_t k) const {
        flags();
        return radicals_[k];
    }

private:
    void flags() const {
        std::call_once(flags_once_, [this] {
            const auto& ids = ideals();
            const auto& nil = nilradical();
            for (const auto& i : ids) {
                pure_.push_back(npure::is_pure(i));
                npure_.push_back(is_npure_by_nilpotent(i, nil));
                radicals_.push_back(lattice_ideal(radical_members(i)));
            }
        });
    }

    RingPtr ring_;
    std::size_t max_ideals_;

    mutable std::once_flag ideals_once_;
    mutable std::vector<Ideal> ideals_;
    mutable std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;

    mutable std::once_flag spectrum_once_;
    mutable SpectrumData spectrum_;

    mutable std::once_flag nil_once_;
    mutable ElementSet nilradical_;

    mutable std::once_flag flags_once_;
    mutable std::vector<bool> pure_;
    mutable std::vector<bool> npure_;
    mutable std::vector<Ideal> radicals_;
};

using ContextPtr = std::shared_ptr<const RingContext>;

inline ContextPtr make_context(RingPtr ring, std::size_t max_ideals = default_max_ideals) {
    return std::make_shared<const RingContext>(std::move(ring), max_ideals);
}

inline bool is_reduced(const RingContext& ctx) { return ctx.nilradical().count() == 1; }
inline bool is_zero_dimensional(const RingContext& ctx) { return is_zero_dimensional(ctx.spectrum()); }
inline bool is_gelfand(const RingContext& ctx) { return is_gelfand(ctx.spectrum()); }
inline bool is_mp_ring(const RingContext& ctx) { return is_mp_ring(ctx.spectrum()); }

} // namespace npure
