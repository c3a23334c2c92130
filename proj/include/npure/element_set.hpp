#pragma once

/**
 * @file element_set.hpp
 * @brief Dense bitset over the element indices of a finite ring.
 */

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace npure {

/// Element of a finite ring, identified by its dense index.
using Elem = std::uint32_t;

class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
    ElementSet(std::size_t universe, std::initializer_list<Elem> elems) : ElementSet(universe) {
        for (Elem e : elems) insert(e);
    }

    static ElementSet full(std::size_t universe) {
        ElementSet s(universe);
        for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Elem>(i));
        return s;
    }

    template<typename Range>
    static ElementSet of(std::size_t universe, const Range& elems) {
        ElementSet s(universe);
        for (auto e : elems) s.insert(static_cast<Elem>(e));
        return s;
    }

    std::size_t universe() const { return universe_; }

    bool contains(Elem e) const { return (words_[e >> 6] >> (e & 63)) & 1U; }
    void insert(Elem e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
    void erase(Elem e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool is_full() const { return count() == universe_; }

    bool subset_of(const ElementSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    ElementSet& operator&=(const ElementSet& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }
    ElementSet& operator|=(const ElementSet& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

    /// Complement within the universe.
    ElementSet complement() const {
        ElementSet out(universe_);
        for (std::size_t i = 0; i < universe_; ++i)
            if (!contains(static_cast<Elem>(i))) out.insert(static_cast<Elem>(i));
        return out;
    }

    /// Members in increasing index order.
    std::vector<Elem> members() const {
        std::vector<Elem> out;
        out.reserve(count());
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int bit = std::countr_zero(w);
                out.push_back(static_cast<Elem>(wi * 64 + static_cast<std::size_t>(bit)));
                w &= w - 1;
            }
        }
        return out;
    }

    template<typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int bit = std::countr_zero(w);
                f(static_cast<Elem>(wi * 64 + static_cast<std::size_t>(bit)));
                w &= w - 1;
            }
        }
    }

    bool operator==(const ElementSet& other) const = default;

    /// Canonical order: cardinality first, then lexicographic sorted member list.
    friend bool canonical_less(const ElementSet& a, const ElementSet& b) {
        auto ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        auto ma = a.members(), mb = b.members();
        return ma < mb;
    }

    std::size_t hash() const {
        std::size_t h = universe_;
        for (auto w : words_) h = h * 0x9e3779b97f4a7c15ULL ^ std::hash<std::uint64_t>{}(w);
        return h;
    }

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

} // namespace npure
