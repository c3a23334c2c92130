#include <numeric>

#include <gtest/gtest.h>

#include "common.hpp"

using namespace npure;
using namespace testing_support;

TEST(ZintPurity, Examples) {
    EXPECT_TRUE(zint::z_purity(0).pure);
    EXPECT_TRUE(zint::z_purity(0).npure);
    EXPECT_TRUE(zint::z_purity(1).pure);
    for (std::uint64_t p : {2U, 3U, 5U, 7U})
        for (std::uint64_t pk = p; pk < 1000; pk *= p) {
            EXPECT_FALSE(zint::z_purity(pk).pure) << pk;
            EXPECT_FALSE(zint::z_purity(pk).npure) << pk;
        }
}

TEST(ZintSpecLocalized, Examples) {
    EXPECT_EQ(zint::z_spec_localized(9).primes, (std::vector<std::uint64_t>{0, 3}));
    EXPECT_EQ(zint::z_spec_localized(6).primes, (std::vector<std::uint64_t>{0, 2, 3}));
    const auto s7 = zint::z_spec_localized(7);
    EXPECT_EQ(s7.primes, (std::vector<std::uint64_t>{0, 7}));
    EXPECT_TRUE(s7.quotient_is_field);
    EXPECT_FALSE(s7.localization_is_field);
    EXPECT_TRUE(s7.localization_is_domain);
    EXPECT_FALSE(zint::z_spec_localized(8).quotient_is_field);
    EXPECT_THROW(zint::z_spec_localized(1), PreconditionError);
    EXPECT_THROW(zint::z_spec_localized(0), PreconditionError);
    EXPECT_THROW(zint::z_spec_localized(2'000'003), CapExceeded);
}

TEST(ZintSpecLocalized, MatchesSurvivalSearch) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t q = 2; q <= 1000; ++q)
        if (oracle::is_prime(q)) primes.push_back(q);
    for (std::uint64_t n = 2; n <= 1000; ++n) {
        std::vector<std::uint64_t> expected = {0};
        for (auto q : primes)
            if (oracle::survives(q, n)) expected.push_back(q);
        ASSERT_EQ(zint::z_spec_localized(n).primes, expected) << n;
    }
}

TEST(ZintRadicalKernel, Examples) {
    const auto f12 = zint::z_radical_kernel_facts(12);
    EXPECT_EQ(f12.radical, 6U);
    EXPECT_EQ(f12.kernel, 0U);
    EXPECT_FALSE(f12.criterion_iv);
    const auto f0 = zint::z_radical_kernel_facts(0);
    EXPECT_EQ(f0.radical, 0U);
    EXPECT_TRUE(f0.criterion_iv);
    const auto f1 = zint::z_radical_kernel_facts(1);
    EXPECT_EQ(f1.kernel, 1U);
    EXPECT_TRUE(f1.criterion_iv);
    const auto f5 = zint::z_radical_kernel_facts(5);
    EXPECT_EQ(f5.radical, 5U);
    EXPECT_FALSE(f5.criterion_iv);
}

TEST(ZintRadicalKernel, CriterionTracksNPurity) {
    for (std::uint64_t n = 0; n <= 2000; ++n) {
        const auto f = zint::z_radical_kernel_facts(n);
        EXPECT_EQ(f.criterion_iv, zint::z_purity(n).npure) << n;
        EXPECT_EQ(f.criterion_iv, f.radical == 0 || f.radical == 1) << n;
        if (n > 0) { EXPECT_EQ(f.radical, oracle::squarefree_part(n)) << n; }
    }
}

TEST(ZintBridge, ProjectionsToZmodRespectTransfer) {
    for (std::uint64_t m = 2; m <= 64; ++m) {
        const RingContext ctx(build_ring(RingSpec::zmod(m)));
        for (std::uint64_t n = 0; n <= 64; ++n) {
            const auto image = generate_ideal(ctx.ring_ptr(), {static_cast<Elem>(n % m)});
            if (zint::z_purity(n).npure) { EXPECT_TRUE(ctx.is_npure(image)) << "n=" << n << " m=" << m; }
            // Z/m is zero-dimensional, so every image is N-pure regardless.
            EXPECT_TRUE(ctx.is_npure(image));
            EXPECT_EQ(image.size(), m / std::gcd(n, m));
        }
    }
}
