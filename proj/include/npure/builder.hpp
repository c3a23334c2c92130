#pragma once

/**
 * @file builder.hpp
 * @brief Materializes a FiniteRing from a RingSpec.
 */

#include <cstdint>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "npure/element_set.hpp"
#include "npure/error.hpp"
#include "npure/ideal.hpp"
#include "npure/ring.hpp"
#include "npure/ring_spec.hpp"

namespace npure {

inline constexpr std::size_t default_max_ring_size = 256;

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// A quotient ring together with the projection table source index -> coset index.
struct QuotientData {
    RingPtr ring;
    std::vector<Elem> projection;
};

namespace detail {

inline void check_cap(std::uint64_t size, std::size_t max_size, const std::string& what) {
    if (size > max_size)
        throw CapExceeded(what + " has " + std::to_string(size) + " elements, above the cap of " +
                          std::to_string(max_size));
}

inline std::string poly_name(const std::vector<std::uint64_t>& c) {
    std::string out;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        if (!out.empty()) out += "+";
        std::string coeff = (c[k] == 1 && k > 0) ? "" : std::to_string(c[k]);
        if (k == 0)
            out += coeff;
        else if (k == 1)
            out += coeff + "x";
        else
            out += coeff + "x^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

inline RingPtr build_zmod(const RingSpec& spec, std::uint64_t n, std::size_t max_size) {
    if (n < 1) throw SpecError("zmod requires n >= 1");
    check_cap(n, max_size, "zmod:" + std::to_string(n));
    std::vector<Elem> add(n * n), mul(n * n);
    std::vector<std::string> names;
    for (std::uint64_t a = 0; a < n; ++a) {
        names.push_back(std::to_string(a));
        for (std::uint64_t b = 0; b < n; ++b) {
            add[a * n + b] = static_cast<Elem>((a + b) % n);
            mul[a * n + b] = static_cast<Elem>((a * b) % n);
        }
    }
    return FiniteRing::make(n, std::move(add), std::move(mul), 0, static_cast<Elem>(1 % n), spec, std::move(names));
}

inline RingPtr build_polyquot(const RingSpec& spec, const RingSpec::PolyQuot& q, std::size_t max_size) {
    if (!is_prime(q.p)) throw SpecError("polyquot requires a prime p, got " + std::to_string(q.p));
    if (q.coeffs.size() < 2) throw SpecError("polyquot requires degree >= 1");
    if (q.coeffs.back() != 1) throw SpecError("polyquot modulus must be monic");
    for (auto c : q.coeffs)
        if (c >= q.p) throw SpecError("polyquot coefficient " + std::to_string(c) + " not reduced mod p");

    const std::size_t d = q.coeffs.size() - 1;
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < d; ++i) {
        size *= q.p;
        check_cap(size, max_size, to_string(spec));
    }
    const std::uint64_t p = q.p;

    auto decode = [&](std::uint64_t idx) {
        std::vector<std::uint64_t> c(d);
        for (std::size_t i = 0; i < d; ++i) {
            c[i] = idx % p;
            idx /= p;
        }
        return c;
    };
    auto encode = [&](const std::vector<std::uint64_t>& c) {
        std::uint64_t idx = 0;
        for (std::size_t i = d; i-- > 0;) idx = idx * p + c[i];
        return static_cast<Elem>(idx);
    };

    std::vector<std::vector<std::uint64_t>> coeffs(size);
    std::vector<std::string> names;
    for (std::uint64_t i = 0; i < size; ++i) {
        coeffs[i] = decode(i);
        names.push_back(poly_name(coeffs[i]));
    }

    std::vector<Elem> add(size * size), mul(size * size);
    std::vector<std::uint64_t> prod(2 * d);
    for (std::uint64_t a = 0; a < size; ++a) {
        for (std::uint64_t b = 0; b < size; ++b) {
            std::vector<std::uint64_t> s(d);
            for (std::size_t i = 0; i < d; ++i) s[i] = (coeffs[a][i] + coeffs[b][i]) % p;
            add[a * size + b] = encode(s);

            std::fill(prod.begin(), prod.end(), 0);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + coeffs[a][i] * coeffs[b][j]) % p;
            // x^d = -(c0 + ... + c_{d-1} x^{d-1})
            for (std::size_t k = 2 * d - 1; k-- > d;) {
                std::uint64_t lead = prod[k];
                if (!lead) continue;
                prod[k] = 0;
                for (std::size_t j = 0; j < d; ++j)
                    prod[k - d + j] = (prod[k - d + j] + (p - (lead * q.coeffs[j]) % p)) % p;
            }
            mul[a * size + b] = encode(std::vector<std::uint64_t>(prod.begin(), prod.begin() + static_cast<long>(d)));
        }
    }
    return FiniteRing::make(size, std::move(add), std::move(mul), 0, size > 1 ? 1 : 0, spec, std::move(names));
}

inline RingPtr build_product(const RingSpec& spec, const RingPtr& a, const RingPtr& b, std::size_t max_size) {
    const std::uint64_t na = a->size(), nb = b->size();
    check_cap(na * nb, max_size, to_string(spec));
    const std::uint64_t n = na * nb;
    std::vector<Elem> add(n * n), mul(n * n);
    std::vector<std::string> names;
    auto idx = [&](Elem x, Elem y) { return static_cast<Elem>(x * nb + y); };
    for (Elem x = 0; x < na; ++x)
        for (Elem y = 0; y < nb; ++y) names.push_back("(" + a->name(x) + "," + b->name(y) + ")");
    for (std::uint64_t u = 0; u < n; ++u) {
        Elem ux = static_cast<Elem>(u / nb), uy = static_cast<Elem>(u % nb);
        for (std::uint64_t v = 0; v < n; ++v) {
            Elem vx = static_cast<Elem>(v / nb), vy = static_cast<Elem>(v % nb);
            add[u * n + v] = idx(a->add(ux, vx), b->add(uy, vy));
            mul[u * n + v] = idx(a->mul(ux, vx), b->mul(uy, vy));
        }
    }
    return FiniteRing::make(n, std::move(add), std::move(mul), idx(a->zero(), b->zero()), idx(a->one(), b->one()),
                            spec, std::move(names));
}

inline QuotientData build_quotient(const RingSpec& spec, const Ideal& ideal) {
    const auto& r = ideal.ring();
    const auto ideal_members = ideal.member_list();
    // Least representative of each coset a + I.
    std::vector<Elem> rep(r.size());
    for (Elem a = 0; a < r.size(); ++a) {
        Elem best = a;
        for (Elem i : ideal_members) best = std::min(best, r.add(a, i));
        rep[a] = best;
    }
    std::vector<Elem> reps;
    for (Elem a = 0; a < r.size(); ++a)
        if (rep[a] == a) reps.push_back(a);
    std::vector<Elem> index_of_rep(r.size(), 0);
    for (std::size_t i = 0; i < reps.size(); ++i) index_of_rep[reps[i]] = static_cast<Elem>(i);

    QuotientData out;
    out.projection.resize(r.size());
    for (Elem a = 0; a < r.size(); ++a) out.projection[a] = index_of_rep[rep[a]];

    const std::size_t n = reps.size();
    std::vector<Elem> add(n * n), mul(n * n);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back(r.name(reps[i]) + "+I");
        for (std::size_t j = 0; j < n; ++j) {
            add[i * n + j] = out.projection[r.add(reps[i], reps[j])];
            mul[i * n + j] = out.projection[r.mul(reps[i], reps[j])];
        }
    }
    out.ring = FiniteRing::make(n, std::move(add), std::move(mul), out.projection[r.zero()],
                                out.projection[r.one()], spec, std::move(names));
    return out;
}

inline RingPtr build_table(const RingSpec& spec, const std::string& path, std::size_t max_size) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open ring table file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw SpecError("malformed ring table JSON in '" + path + "': " + e.what());
    }
    try {
        const auto n = j.at("size").get<std::size_t>();
        if (n == 0) throw SpecError("ring table size must be positive");
        check_cap(n, max_size, "table:" + path);
        auto rows = [&](const char* key) {
            const auto& t = j.at(key);
            if (!t.is_array() || t.size() != n) throw AxiomError(std::string(key) + " table has wrong row count");
            std::vector<Elem> flat;
            flat.reserve(n * n);
            for (const auto& row : t) {
                if (!row.is_array() || row.size() != n)
                    throw AxiomError(std::string(key) + " table has a row of wrong length");
                for (const auto& v : row) flat.push_back(v.get<Elem>());
            }
            return flat;
        };
        auto add = rows("add");
        auto mul = rows("mul");
        return FiniteRing::make(n, std::move(add), std::move(mul), j.at("zero").get<Elem>(), j.at("one").get<Elem>(),
                                spec, {});
    } catch (const nlohmann::json::exception& e) {
        throw SpecError("malformed ring table in '" + path + "': " + e.what());
    }
}

} // namespace detail

inline RingPtr build_ring(const RingSpec& spec, std::size_t max_size = default_max_ring_size) {
    struct Builder {
        const RingSpec& spec;
        std::size_t max_size;
        RingPtr operator()(const RingSpec::Zmod& z) const { return detail::build_zmod(spec, z.n, max_size); }
        RingPtr operator()(const RingSpec::PolyQuot& q) const { return detail::build_polyquot(spec, q, max_size); }
        RingPtr operator()(const RingSpec::Product& p) const {
            return detail::build_product(spec, build_ring(*p.left, max_size), build_ring(*p.right, max_size),
                                         max_size);
        }
        RingPtr operator()(const RingSpec::Quotient& q) const {
            auto base = build_ring(*q.base, max_size);
            for (Elem g : q.gens)
                if (g >= base->size())
                    throw SpecError("quotient generator " + std::to_string(g) + " out of range for " +
                                    base->spec_string());
            return detail::build_quotient(spec, generate_ideal(base, q.gens)).ring;
        }
        RingPtr operator()(const RingSpec::Table& t) const { return detail::build_table(spec, t.path, max_size); }
    };
    return std::visit(Builder{spec, max_size}, spec.variant);
}

inline RingPtr build_ring(std::string_view spec_text, std::size_t max_size = default_max_ring_size) {
    return build_ring(parse_ring_spec(spec_text), max_size);
}

/// R/I with its projection; its spec string records the generators of I.
inline QuotientData quotient_ring(const Ideal& ideal) {
    return detail::build_quotient(RingSpec::quotient(ideal.ring().spec(), ideal.gens()), ideal);
}

/// Writes the table-file JSON for a ring (the inverse of table:<path>).
inline nlohmann::json ring_table_json(const FiniteRing& r) {
    nlohmann::json add = nlohmann::json::array(), mul = nlohmann::json::array();
    for (Elem a = 0; a < r.size(); ++a) {
        nlohmann::json ar = nlohmann::json::array(), mr = nlohmann::json::array();
        for (Elem b = 0; b < r.size(); ++b) {
            ar.push_back(r.add(a, b));
            mr.push_back(r.mul(a, b));
        }
        add.push_back(std::move(ar));
        mul.push_back(std::move(mr));
    }
    return {{"size", r.size()}, {"add", add}, {"mul", mul}, {"zero", r.zero()}, {"one", r.one()}};
}

} // namespace npure
