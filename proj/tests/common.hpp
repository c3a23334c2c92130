#pragma once

#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "npure/npure.hpp"
#include "oracle.hpp"

namespace testing_support {

using namespace npure;

inline RingPtr ring(const std::string& spec) { return build_ring(spec); }

inline std::set<Elem> as_set(const ElementSet& s) {
    auto m = s.members();
    return {m.begin(), m.end()};
}

inline ElementSet as_elements(std::size_t n, const std::set<Elem>& s) { return ElementSet::of(n, s); }

inline Ideal ideal(const RingPtr& r, std::vector<Elem> gens) { return generate_ideal(r, gens); }

/// Corpus at a given cap, built once per process.
inline const std::vector<RingPtr>& corpus(std::size_t cap) {
    static std::mutex mu;
    static std::map<std::size_t, std::vector<RingPtr>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(cap);
    if (it == cache.end()) it = cache.emplace(cap, build_corpus({cap})).first;
    return it->second;
}

} // namespace testing_support
