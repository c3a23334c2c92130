#include <gtest/gtest.h>

#include "common.hpp"

using namespace npure;
using namespace testing_support;

TEST(GenerateIdeal, Examples) {
    auto z12 = ring("zmod:12");
    EXPECT_EQ(as_set(ideal(z12, {3}).members()), (std::set<Elem>{0, 3, 6, 9}));
    EXPECT_EQ(as_set(ideal(z12, {}).members()), (std::set<Elem>{0}));
    EXPECT_EQ(as_set(ideal(z12, {4, 6}).members()), (std::set<Elem>{0, 2, 4, 6, 8, 10}));
    EXPECT_THROW(ideal(z12, {12}), SpecError);
    EXPECT_TRUE(ideal(z12, {5}).is_whole());
}

TEST(GenerateIdeal, DescribeAndGens) {
    auto z12 = ring("zmod:12");
    const auto i = ideal(z12, {4, 6});
    EXPECT_EQ(i.gens(), (std::vector<Elem>{4, 6}));
    EXPECT_EQ(i.describe(), "(4,6)");
}

TEST(IdealFromMembers, RejectsNonIdeals) {
    auto z12 = ring("zmod:12");
    EXPECT_THROW(ideal_from_members(z12, ElementSet(12, {0, 3})), PreconditionError);
    EXPECT_THROW(ideal_from_members(z12, ElementSet(12, {3, 6, 9})), PreconditionError);
    const auto ok = ideal_from_members(z12, ElementSet(12, {0, 4, 8}));
    EXPECT_EQ(as_set(generate_ideal(z12, ok.gens()).members()), (std::set<Elem>{0, 4, 8}));
}

TEST(AllIdeals, Zmod12InCanonicalOrder) {
    const auto ideals = all_ideals(ring("zmod:12"));
    ASSERT_EQ(ideals.size(), 6U);
    const std::vector<std::set<Elem>> expected = {{0},
                                                  {0, 6},
                                                  {0, 4, 8},
                                                  {0, 3, 6, 9},
                                                  {0, 2, 4, 6, 8, 10},
                                                  {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}};
    for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(as_set(ideals[k].members()), expected[k]);
}

TEST(AllIdeals, SmallCases) {
    EXPECT_EQ(all_ideals(ring("zmod:7")).size(), 2U);
    EXPECT_EQ(all_ideals(ring("prod:(zmod:2,zmod:2)")).size(), 4U);
    EXPECT_EQ(all_ideals(ring("zmod:1")).size(), 1U);
    EXPECT_THROW(all_ideals(ring("zmod:64"), 3), CapExceeded);
}

TEST(AllIdeals, MatchesSubsetEnumeration) {
    for (const auto& r : corpus(16)) {
        if (r->size() > 16) continue;
        std::set<std::set<Elem>> expected;
        for (auto& s : oracle::ideals_by_subsets(*r)) expected.insert(s);
        std::set<std::set<Elem>> got;
        for (const auto& i : all_ideals(r)) got.insert(as_set(i.members()));
        EXPECT_EQ(got, expected) << r->spec_string();
        EXPECT_EQ(all_ideals(r).size(), expected.size()) << "duplicates in " << r->spec_string();
    }
}

TEST(AllIdeals, ZmodCountIsDivisorCount) {
    for (std::uint64_t n = 1; n <= 256; ++n)
        EXPECT_EQ(all_ideals(build_ring(RingSpec::zmod(n))).size(), oracle::divisor_count(n)) << n;
}

TEST(AllIdeals, EveryMemberSetIsClosed) {
    for (const auto& r : corpus(64))
        for (const auto& i : all_ideals(r)) ASSERT_TRUE(oracle::is_ideal(*r, as_set(i.members()))) << subject_of(i);
}

TEST(IdealOps, Examples) {
    auto z12 = ring("zmod:12");
    EXPECT_TRUE(ideal_sum(ideal(z12, {4}), ideal(z12, {3})).is_whole());
    EXPECT_EQ(ideal_product(ideal(z12, {2}), ideal(z12, {2})), ideal(z12, {4}));
    EXPECT_EQ(ideal_intersect(ideal(z12, {2}), ideal(z12, {3})), ideal(z12, {6}));
    EXPECT_EQ(ideal_intersect(ideal(z12, {4}), whole_ring_ideal(z12)), ideal(z12, {4}));
    EXPECT_EQ(ideal_power(ideal(z12, {2}), 2), ideal(z12, {4}));
    EXPECT_EQ(ideal_power(ideal(z12, {3}), 2), ideal(z12, {3}));
    EXPECT_EQ(ideal_power(whole_ring_ideal(z12), 5), whole_ring_ideal(z12));
    EXPECT_TRUE(ideal_intersect_all(z12, {}).is_whole());
    EXPECT_THROW(ideal_power(ideal(z12, {2}), 0), PreconditionError);
    EXPECT_THROW(ideal_sum(ideal(z12, {2}), ideal(ring("zmod:12"), {2})), PreconditionError);
}

TEST(IdealOps, ProductMatchesDefinition) {
    for (const auto& r : corpus(16)) {
        const auto ideals = all_ideals(r);
        for (const auto& a : ideals)
            for (const auto& b : ideals) {
                // smallest ideal containing every ab
                std::set<Elem> gens;
                a.members().for_each([&](Elem x) { b.members().for_each([&](Elem y) { gens.insert(r->mul(x, y)); }); });
                std::set<Elem> closure = {r->zero()};
                for (bool grew = true; grew;) {
                    grew = false;
                    std::set<Elem> next = closure;
                    for (Elem x : closure) {
                        for (Elem g : gens) next.insert(r->add(x, g));
                    }
                    if (next.size() != closure.size()) {
                        closure = std::move(next);
                        grew = true;
                    }
                }
                EXPECT_EQ(as_set(ideal_product(a, b).members()), closure) << r->spec_string();
            }
    }
}

TEST(PowerChain, DescendsAndStabilizes) {
    for (const auto& r : corpus(64)) {
        for (const auto& i : all_ideals(r)) {
            const auto chain = power_chain(i);
            ASSERT_LE(chain.stabilization, r->size());
            for (std::size_t k = 1; k < chain.powers.size(); ++k) ASSERT_TRUE(chain.powers[k].subset_of(chain.powers[k - 1]));
            const auto& last = ideal_power(i, chain.stabilization);
            ASSERT_EQ(ideal_power(i, chain.stabilization + 1), last);
            if (chain.stabilization > 1) { ASSERT_NE(ideal_power(i, chain.stabilization - 1), last); }
        }
    }
    auto z12 = ring("zmod:12");
    EXPECT_EQ(power_chain(ideal(z12, {2})).stabilization, 2U);
    EXPECT_EQ(power_chain(ideal(z12, {3})).stabilization, 1U);
    EXPECT_EQ(power_chain(ideal(ring("zmod:16"), {2})).stabilization, 4U);
}

TEST(Annihilator, Examples) {
    auto z12 = ring("zmod:12");
    EXPECT_EQ(as_set(annihilator_of_element(z12, 2).members()), (std::set<Elem>{0, 6}));
    EXPECT_EQ(as_set(annihilator_of_element(z12, 4).members()), (std::set<Elem>{0, 3, 6, 9}));
    EXPECT_TRUE(annihilator_of_element(z12, 0).is_whole());
    EXPECT_EQ(annihilator_of_ideal(ideal(z12, {2, 3})), zero_ideal(z12));
    EXPECT_EQ(annihilator_of_ideal(ideal(z12, {6})), ideal(z12, {2}));
}

TEST(Annihilator, DefinitionalOnCorpus) {
    for (const auto& r : corpus(64)) {
        for (Elem a = 0; a < r->size(); ++a) {
            const auto ann = annihilator_of_element(r, a);
            for (Elem x = 0; x < r->size(); ++x) ASSERT_EQ(ann.contains(x), r->mul(a, x) == r->zero());
        }
    }
}

TEST(Radical, Examples) {
    auto z12 = ring("zmod:12");
    EXPECT_EQ(radical(ideal(z12, {4})), ideal(z12, {2}));
    EXPECT_EQ(as_set(radical(zero_ideal(z12)).members()), as_set(nilradical_set(*z12)));
    EXPECT_TRUE(radical(whole_ring_ideal(z12)).is_whole());
}

TEST(Radical, LawsOnCorpus) {
    for (const auto& r : corpus(64)) {
        const auto ideals = all_ideals(r);
        for (const auto& i : ideals) {
            const auto rad = radical(i);
            ASSERT_EQ(as_set(rad.members()), oracle::radical(*r, as_set(i.members()))) << subject_of(i);
            ASSERT_TRUE(i.subset_of(rad));
            ASSERT_EQ(radical(rad), rad);
        }
        if (ideals.size() > 64) continue;
        for (const auto& i : ideals)
            for (const auto& j : ideals) {
                if (i.subset_of(j)) { ASSERT_TRUE(radical(i).subset_of(radical(j))); }
                ASSERT_EQ(radical(ideal_intersect(i, j)), ideal_intersect(radical(i), radical(j)))
                    << r->spec_string() << " " << i.describe() << " " << j.describe();
            }
    }
}
