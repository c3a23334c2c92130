#pragma once

/**
 * @file hom.hpp
 * @brief Unital ring homomorphisms between finite rings, validated on construction.
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "npure/builder.hpp"
#include "npure/error.hpp"
#include "npure/ideal.hpp"
#include "npure/ring.hpp"

namespace npure {

class RingHom {
public:
    const RingPtr& domain() const { return domain_; }
    const RingPtr& codomain() const { return codomain_; }
    const std::vector<Elem>& table() const { return map_; }
    Elem operator()(Elem a) const { return map_.at(a); }
    const std::string& label() const { return label_; }

    bool is_injective() const {
        std::vector<bool> hit(codomain_->size(), false);
        for (Elem v : map_) {
            if (hit[v]) return false;
            hit[v] = true;
        }
        return true;
    }
    bool is_surjective() const {
        std::vector<bool> hit(codomain_->size(), false);
        for (Elem v : map_) hit[v] = true;
        return std::find(hit.begin(), hit.end(), false) == hit.end();
    }

    friend RingHom build_hom(RingPtr domain, RingPtr codomain, std::vector<Elem> map, std::string label);

private:
    RingPtr domain_;
    RingPtr codomain_;
    std::vector<Elem> map_;
    std::string label_;
};

/// Checks map(0)=0, map(1)=1 and additivity/multiplicativity on every pair.
inline RingHom build_hom(RingPtr domain, RingPtr codomain, std::vector<Elem> map, std::string label = "hom") {
    const auto& d = *domain;
    const auto& c = *codomain;
    if (map.size() != d.size()) throw AxiomError("homomorphism table is not total on the domain");
    for (Elem v : map)
        if (v >= c.size()) throw AxiomError("homomorphism table entry out of range");
    if (map[d.zero()] != c.zero()) throw AxiomError("homomorphism does not send 0 to 0");
    if (map[d.one()] != c.one()) throw AxiomError("homomorphism does not send 1 to 1");
    for (Elem a = 0; a < d.size(); ++a) {
        for (Elem b = 0; b < d.size(); ++b) {
            if (map[d.add(a, b)] != c.add(map[a], map[b]))
                throw AxiomError("homomorphism not additive at pair (" + d.name(a) + ", " + d.name(b) + ")");
            if (map[d.mul(a, b)] != c.mul(map[a], map[b]))
                throw AxiomError("homomorphism not multiplicative at pair (" + d.name(a) + ", " + d.name(b) + ")");
        }
    }
    RingHom h;
    h.domain_ = std::move(domain);
    h.codomain_ = std::move(codomain);
    h.map_ = std::move(map);
    h.label_ = std::move(label);
    return h;
}

inline RingHom identity_hom(const RingPtr& r) {
    std::vector<Elem> map(r->size());
    std::iota(map.begin(), map.end(), Elem{0});
    return build_hom(r, r, std::move(map), "id");
}

/// Canonical projection R -> R/I.
inline RingHom quotient_projection(const Ideal& ideal) {
    auto q = quotient_ring(ideal);
    return build_hom(ideal.ring_ptr(), q.ring, std::move(q.projection), "proj R/" + ideal.describe());
}

/// The two projections A x B -> A and A x B -> B of a ring built from a prod: spec.
inline std::pair<RingHom, RingHom> product_projections(const RingPtr& product, std::size_t max_size =
                                                                                  default_max_ring_size) {
    const auto* p = std::get_if<RingSpec::Product>(&product->spec().variant);
    if (!p) throw PreconditionError("ring " + product->spec_string() + " is not a product");
    auto a = build_ring(*p->left, max_size);
    auto b = build_ring(*p->right, max_size);
    std::vector<Elem> left(product->size()), right(product->size());
    for (Elem u = 0; u < product->size(); ++u) {
        left[u] = static_cast<Elem>(u / b->size());
        right[u] = static_cast<Elem>(u % b->size());
    }
    return {build_hom(product, a, std::move(left), "proj1"), build_hom(product, b, std::move(right), "proj2")};
}

/// a -> (a mod m, a mod k) from zmod:(m*k) to prod:(zmod:m,zmod:k).
inline RingHom crt_map(std::uint64_t m, std::uint64_t k) {
    auto src = build_ring(RingSpec::zmod(m * k));
    auto dst = build_ring(RingSpec::product(RingSpec::zmod(m), RingSpec::zmod(k)));
    std::vector<Elem> map(src->size());
    for (Elem a = 0; a < src->size(); ++a) map[a] = static_cast<Elem>((a % m) * k + (a % k));
    return build_hom(src, dst, std::move(map), "crt " + std::to_string(m) + "x" + std::to_string(k));
}

/// The ideal of the codomain generated by the image of I (the extension IS).
inline Ideal push_forward(const RingHom& h, const Ideal& ideal) {
    if (ideal.ring_ptr() != h.domain()) throw PreconditionError("ideal does not live in the homomorphism's domain");
    std::vector<Elem> gens;
    for (Elem g : ideal.gens()) gens.push_back(h(g));
    return generate_ideal(h.codomain(), gens);
}

/// Preimage of a set of codomain elements.
inline ElementSet pull_back(const RingHom& h, const ElementSet& s) {
    ElementSet out(h.domain()->size());
    for (Elem a = 0; a < h.domain()->size(); ++a)
        if (s.contains(h(a))) out.insert(a);
    return out;
}

} // namespace npure
