#pragma once

/**
 * @file zint.hpp
 * @brief Symbolic facts about ideals nZ of the integers and the 1 + nZ localization.
 */

#include <cstdint>
#include <vector>

#include "npure/error.hpp"

namespace npure::zint {

/// Upper bound for trial-division factorization.
inline constexpr std::uint64_t factor_bound = 1'000'000;

/// Distinct prime factors in increasing order.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    if (n == 0) throw PreconditionError("0 has no finite factorization");
    if (n > factor_bound) throw CapExceeded("integer " + std::to_string(n) + " above the factorization bound");
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Product of the distinct primes dividing n; rad(0) = 0, rad(1) = 1.
inline std::uint64_t squarefree_kernel(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t r = 1;
    for (auto p : prime_factors(n)) r *= p;
    return r;
}

struct ZPurity {
    bool pure = false;
    bool npure = false;
};

/// In a domain only 0 and the whole ring are pure, and pure = N-pure.
inline ZPurity z_purity(std::uint64_t n) {
    const bool trivial = n == 0 || n == 1;
    return {trivial, trivial};
}

struct ZLocalizedSpec {
    std::uint64_t n = 0;
    /// Symbolic primes of (1 + nZ)^-1 Z: 0 for the zero ideal, then each surviving q.
    std::vector<std::uint64_t> primes;
    bool quotient_is_field = false;     // Z/nZ
    bool localization_is_field = false; // (1 + nZ)^-1 Z
    bool localization_is_domain = true;
};

/// qZ survives exactly when q divides n.
inline ZLocalizedSpec z_spec_localized(std::uint64_t n) {
    if (n < 2) throw PreconditionError("z_spec_localized requires n >= 2");
    ZLocalizedSpec out;
    out.n = n;
    out.primes.push_back(0);
    const auto factors = prime_factors(n);
    out.primes.insert(out.primes.end(), factors.begin(), factors.end());
    out.quotient_is_field = factors.size() == 1 && factors.front() == n;
    // A domain is a field iff its only prime is 0.
    out.localization_is_field = out.primes.size() == 1;
    return out;
}

struct ZRadicalKernelFacts {
    std::uint64_t n = 0;
    std::uint64_t radical = 0;          // rad(nZ) = radical * Z
    std::uint64_t kernel = 0;           // Ker(Z -> (1+nZ)^-1 Z) = kernel * Z
    std::uint64_t kernel_radical = 0;
    bool criterion_iv = false;          // rad(nZ) = rad(Ker)
};

/// 1 + nZ contains 0 only for n = 1, so the kernel is Z there and 0 otherwise.
inline ZRadicalKernelFacts z_radical_kernel_facts(std::uint64_t n) {
    ZRadicalKernelFacts f;
    f.n = n;
    f.radical = squarefree_kernel(n);
    f.kernel = n == 1 ? 1 : 0;
    f.kernel_radical = squarefree_kernel(f.kernel);
    f.criterion_iv = f.radical == f.kernel_radical;
    return f;
}

} // namespace npure::zint
