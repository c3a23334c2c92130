#include <cstdio>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "common.hpp"

using namespace npure;
using namespace testing_support;

TEST(RingSpecGrammar, ParsesEachVariant) {
    EXPECT_EQ(to_string(parse_ring_spec("zmod:12")), "zmod:12");
    EXPECT_EQ(to_string(parse_ring_spec("polyquot:p=2;f=0,0,1")), "polyquot:p=2;f=0,0,1");
    EXPECT_EQ(to_string(parse_ring_spec("prod:(zmod:2,zmod:3)")), "prod:(zmod:2,zmod:3)");
    EXPECT_EQ(to_string(parse_ring_spec("quot:(zmod:12)/[4,6]")), "quot:(zmod:12)/[4,6]");
    EXPECT_EQ(to_string(parse_ring_spec("prod:(polyquot:p=3;f=1,0,1,zmod:4)")), "prod:(polyquot:p=3;f=1,0,1,zmod:4)");
    EXPECT_EQ(to_string(parse_ring_spec("quot:(prod:(zmod:4,zmod:4))/[2]")), "quot:(prod:(zmod:4,zmod:4))/[2]");
}

TEST(RingSpecGrammar, RejectsMalformedText) {
    for (const char* bad : {"", "zmod", "zmod:", "zmod:x", "zmod:12junk", "ring:3", "prod:(zmod:2)", "prod:(zmod:2,zmod:3",
                            "quot:(zmod:4)/[a]", "polyquot:p=2", "polyquot:p=2;f="})
        EXPECT_THROW(parse_ring_spec(bad), SpecError) << bad;
}

TEST(BuildRing, RejectsInvalidRecipes) {
    EXPECT_THROW(build_ring("zmod:0"), SpecError);
    EXPECT_THROW(build_ring("polyquot:p=4;f=0,0,1"), SpecError);
    EXPECT_THROW(build_ring("polyquot:p=2;f=1,0"), SpecError);
    EXPECT_THROW(build_ring("polyquot:p=2;f=1"), SpecError);
    EXPECT_THROW(build_ring("polyquot:p=3;f=0,5,1"), SpecError);
    EXPECT_THROW(build_ring("quot:(zmod:4)/[4]"), SpecError);
    EXPECT_THROW(build_ring("zmod:257"), CapExceeded);
    EXPECT_THROW(build_ring("prod:(zmod:16,zmod:17)"), CapExceeded);
    EXPECT_NO_THROW(build_ring("zmod:256"));
    EXPECT_THROW(build_ring("zmod:20", 16), CapExceeded);
}

TEST(BuildRing, Sizes) {
    EXPECT_EQ(ring("zmod:12")->size(), 12U);
    EXPECT_EQ(ring("polyquot:p=3;f=1,0,1")->size(), 9U);
    EXPECT_EQ(ring("polyquot:p=2;f=1,1,0,1")->size(), 8U);
    EXPECT_EQ(ring("prod:(zmod:4,zmod:3)")->size(), 12U);
    EXPECT_EQ(ring("quot:(zmod:12)/[4]")->size(), 4U);
    EXPECT_EQ(ring("quot:(zmod:12)/[4,6]")->size(), 2U);
    EXPECT_EQ(ring("quot:(prod:(zmod:4,zmod:3))/[3]")->size(), 3U);
}

TEST(BuildRing, ZeroRing) {
    auto r = ring("zmod:1");
    EXPECT_EQ(r->size(), 1U);
    EXPECT_EQ(r->zero(), r->one());
    EXPECT_EQ(as_set(nilradical_set(*r)), (std::set<Elem>{0}));
    EXPECT_EQ(as_set(units_set(*r)), (std::set<Elem>{0}));
}

TEST(BuildRing, DualNumbersOverF2) {
    auto r = ring("polyquot:p=2;f=0,0,1");
    ASSERT_EQ(r->size(), 4U);
    EXPECT_EQ(r->name(2), "x");
    EXPECT_EQ(r->name(3), "x+1");
    EXPECT_EQ(r->mul(2, 2), r->zero());
    EXPECT_EQ(as_set(nilradical_set(*r)), (std::set<Elem>{0, 2}));
}

TEST(BuildRing, DisplayNames) {
    EXPECT_EQ(ring("zmod:5")->name(3), "3");
    EXPECT_EQ(ring("prod:(zmod:2,zmod:3)")->name(5), "(1,2)");
    auto q = ring("quot:(zmod:12)/[4]");
    EXPECT_EQ(q->names(), (std::vector<std::string>{"0+I", "1+I", "2+I", "3+I"}));
    EXPECT_EQ(ring("polyquot:p=3;f=1,0,1")->name(8), "2x+2");
}

TEST(ElemPow, Examples) {
    auto z12 = ring("zmod:12");
    EXPECT_EQ(elem_pow(*z12, 2, 2), 4U);
    EXPECT_EQ(elem_pow(*z12, 5, 0), 1U);
    EXPECT_EQ(elem_pow(*ring("zmod:8"), 2, 3), 0U);
    EXPECT_EQ(pow_by_squaring(*z12, 2, 1001), elem_pow(*z12, 2, 1001));
    EXPECT_THROW(elem_pow(*z12, 12, 1), SpecError);
}

TEST(PowerCycle, Examples) {
    auto z12 = ring("zmod:12");
    EXPECT_EQ(power_cycle(*z12, 2).preperiod, 2U);
    EXPECT_EQ(power_cycle(*z12, 2).period, 2U);
    EXPECT_EQ(power_cycle(*z12, 1).preperiod, 0U);
    EXPECT_EQ(power_cycle(*z12, 1).period, 1U);
    EXPECT_EQ(power_cycle(*ring("zmod:8"), 2).preperiod, 3U);
    EXPECT_EQ(power_cycle(*ring("zmod:8"), 2).period, 1U);
}

TEST(PowerCycle, DefiningPropertyOnCorpus) {
    for (const auto& r : corpus(32)) {
        for (Elem a = 0; a < r->size(); ++a) {
            const auto c = power_cycle(*r, a);
            ASSERT_GE(c.period, 1U);
            ASSERT_LE(c.bound(), r->size() + 1);
            for (std::size_t j = 0; j < c.period; ++j)
                ASSERT_EQ(oracle::naive_pow(*r, a, c.bound() + j), oracle::naive_pow(*r, a, c.preperiod + j))
                    << r->spec_string() << " a=" << a;
            // minimality: no earlier repeat
            for (std::size_t mu = 0; mu <= c.preperiod; ++mu)
                for (std::size_t per = 1; mu + per < c.bound(); ++per)
                    ASSERT_NE(oracle::naive_pow(*r, a, mu + per), oracle::naive_pow(*r, a, mu))
                        << r->spec_string() << " a=" << a;
        }
    }
}

TEST(ElementClasses, Zmod12) {
    auto z12 = ring("zmod:12");
    EXPECT_EQ(as_set(nilradical_set(*z12)), (std::set<Elem>{0, 6}));
    EXPECT_EQ(as_set(units_set(*z12)), (std::set<Elem>{1, 5, 7, 11}));
    EXPECT_EQ(as_set(idempotents_set(*z12)), (std::set<Elem>{0, 1, 4, 9}));
    EXPECT_EQ(as_set(nilradical_set(*ring("zmod:8"))), (std::set<Elem>{0, 2, 4, 6}));
    EXPECT_EQ(as_set(nilradical_set(*ring("zmod:6"))), (std::set<Elem>{0}));
}

TEST(ElementClasses, InverseLookup) {
    auto z12 = ring("zmod:12");
    EXPECT_EQ(find_inverse(*z12, 5), 5U);
    EXPECT_EQ(find_inverse(*z12, 7), 7U);
    EXPECT_EQ(find_inverse(*z12, 2), z12->size());
}

TEST(ElementClasses, NilradicalMatchesFixedExponentOnCorpus) {
    for (const auto& r : corpus(64)) {
        EXPECT_EQ(as_set(nilradical_set(*r)), oracle::nilradical(*r)) << r->spec_string();
        const auto nil = nilradical_set(*r);
        nil.for_each([&](Elem a) {
            nil.for_each([&](Elem b) { EXPECT_TRUE(nil.contains(r->add(a, b))); });
            for (Elem t = 0; t < r->size(); ++t) EXPECT_TRUE(nil.contains(r->mul(t, a)));
        });
        idempotents_set(*r).for_each([&](Elem e) { EXPECT_EQ(r->mul(e, e), e); });
        EXPECT_TRUE(idempotents_set(*r).contains(r->zero()));
        EXPECT_TRUE(idempotents_set(*r).contains(r->one()));
    }
}

TEST(ElementClasses, ZmodNilradicalIsMultiplesOfSquarefreeKernel) {
    for (std::uint64_t n = 1; n <= 200; ++n) {
        auto r = build_ring(RingSpec::zmod(n));
        const auto rad = oracle::squarefree_part(n);
        std::set<Elem> expected;
        for (std::uint64_t a = 0; a < n; a += rad) expected.insert(static_cast<Elem>(a));
        EXPECT_EQ(as_set(nilradical_set(*r)), expected) << n;
    }
}

TEST(RingAxioms, HoldOnEveryCorpusRing) {
    for (const auto& r : corpus(32)) {
        const auto n = r->size();
        for (Elem a = 0; a < n; ++a) {
            ASSERT_EQ(r->add(a, r->zero()), a);
            ASSERT_EQ(r->mul(a, r->one()), a);
            ASSERT_EQ(r->add(a, r->neg(a)), r->zero());
            for (Elem b = 0; b < n; ++b) {
                ASSERT_EQ(r->add(a, b), r->add(b, a));
                ASSERT_EQ(r->mul(a, b), r->mul(b, a));
                for (Elem c = 0; c < n; ++c) {
                    ASSERT_EQ(r->add(r->add(a, b), c), r->add(a, r->add(b, c)));
                    ASSERT_EQ(r->mul(r->mul(a, b), c), r->mul(a, r->mul(b, c)));
                    ASSERT_EQ(r->mul(a, r->add(b, c)), r->add(r->mul(a, b), r->mul(a, c)));
                }
            }
        }
    }
}

TEST(RingSpecGrammar, CorpusSpecsRoundTrip) {
    for (const auto& r : corpus(64)) {
        const auto text = r->spec_string();
        const auto again = build_ring(text);
        EXPECT_TRUE(again->same_tables(*r)) << text;
        EXPECT_EQ(again->spec_string(), text);
    }
}

namespace {

std::string write_temp(const std::string& name, const std::string& body) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << body;
    return path.string();
}

} // namespace

TEST(TableRings, LoadsValidTable) {
    const auto path = write_temp("npure_z3.json",
                                 R"({"size":3,"add":[[0,1,2],[1,2,0],[2,0,1]],"mul":[[0,0,0],[0,1,2],[0,2,1]],"zero":0,"one":1})");
    auto r = build_ring("table:" + path);
    EXPECT_TRUE(r->same_tables(*ring("zmod:3")));
    EXPECT_EQ(r->spec_string(), "table:" + path);
}

TEST(TableRings, RejectsAxiomViolations) {
    const auto noncomm = write_temp("npure_bad1.json",
                                    R"({"size":2,"add":[[0,1],[1,0]],"mul":[[0,1],[0,1]],"zero":0,"one":1})");
    EXPECT_THROW(build_ring("table:" + noncomm), AxiomError);
    const auto no_identity = write_temp("npure_bad2.json",
                                        R"({"size":2,"add":[[0,1],[1,0]],"mul":[[0,0],[0,0]],"zero":0,"one":1})");
    EXPECT_THROW(build_ring("table:" + no_identity), AxiomError);
    const auto ragged = write_temp("npure_bad3.json", R"({"size":2,"add":[[0,1]],"mul":[[0,0],[0,1]],"zero":0,"one":1})");
    EXPECT_THROW(build_ring("table:" + ragged), Error);
    EXPECT_THROW(build_ring("table:/nonexistent/ring.json"), SpecError);
}

TEST(Homomorphisms, CanonicalMaps) {
    auto z12 = ring("zmod:12");
    const auto proj = quotient_projection(ideal(z12, {6}));
    EXPECT_EQ(proj.codomain()->size(), 6U);
    EXPECT_TRUE(proj.is_surjective());
    EXPECT_FALSE(proj.is_injective());

    const auto crt = crt_map(4, 3);
    EXPECT_TRUE(crt.is_injective());
    EXPECT_TRUE(crt.is_surjective());
    for (Elem a = 0; a < 12; ++a) EXPECT_EQ(crt(a), (a % 4) * 3 + a % 3);

    auto [p1, p2] = product_projections(ring("prod:(zmod:4,zmod:3)"));
    EXPECT_EQ(p1.codomain()->size(), 4U);
    EXPECT_EQ(p2.codomain()->size(), 3U);
    EXPECT_THROW(product_projections(z12), PreconditionError);
}

TEST(Homomorphisms, RejectsNonHoms) {
    auto z12 = ring("zmod:12");
    auto z6 = ring("zmod:6");
    std::vector<Elem> kills_one(12, 0);
    EXPECT_THROW(build_hom(z12, z6, kills_one), AxiomError);
    std::vector<Elem> not_additive(12);
    for (Elem a = 0; a < 12; ++a) not_additive[a] = static_cast<Elem>((a * a) % 6);
    EXPECT_THROW(build_hom(z12, z6, not_additive), AxiomError);
    std::vector<Elem> short_table(5, 0);
    EXPECT_THROW(build_hom(z12, z6, short_table), Error);
    // a -> a mod 5 is not well defined from Z/12
    std::vector<Elem> mod5(12);
    for (Elem a = 0; a < 12; ++a) mod5[a] = a % 5;
    EXPECT_THROW(build_hom(z12, ring("zmod:5"), mod5), AxiomError);
}
