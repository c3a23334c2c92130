#include <gtest/gtest.h>

#include "common.hpp"

using namespace npure;
using namespace testing_support;

namespace {

const RingContext& z12() {
    static const RingContext ctx(build_ring("zmod:12"));
    return ctx;
}

Ideal z12_ideal(std::vector<Elem> gens) { return generate_ideal(z12().ring_ptr(), gens); }

} // namespace

TEST(Pure, Zmod12Examples) {
    EXPECT_TRUE(is_pure(z12_ideal({3})));
    EXPECT_FALSE(is_pure(z12_ideal({2})));
    EXPECT_TRUE(is_pure(z12_ideal({})));
    EXPECT_TRUE(is_pure(z12_ideal({1})));
    std::set<std::set<Elem>> pure;
    for (const auto& i : z12().ideals())
        if (is_pure(i)) pure.insert(as_set(i.members()));
    const std::set<std::set<Elem>> expected = {
        {0}, {0, 4, 8}, {0, 3, 6, 9}, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}};
    EXPECT_EQ(pure, expected);
}

TEST(Pure, BothFormsAgreeWithOracleOnCorpus) {
    for (const auto& r : corpus(64)) {
        for (const auto& i : all_ideals(r)) {
            const bool expected = oracle::pure(*r, as_set(i.members()));
            ASSERT_EQ(is_pure_by_witness(i), expected) << subject_of(i);
            ASSERT_EQ(is_pure_by_annihilator(i), expected) << subject_of(i);
        }
    }
}

TEST(Pure, PureIdealsAreIdempotentGenerated) {
    for (const auto& r : corpus(64)) {
        std::set<std::set<Elem>> by_idempotent;
        idempotents_set(*r).for_each([&](Elem e) { by_idempotent.insert(oracle::principal(*r, e)); });
        std::set<std::set<Elem>> pure;
        for (const auto& i : all_ideals(r))
            if (is_pure(i)) pure.insert(as_set(i.members()));
        EXPECT_EQ(pure, by_idempotent) << r->spec_string();
    }
}

TEST(NPure, Zmod12Examples) {
    const auto v = is_npure(z12(), z12_ideal({2}));
    EXPECT_TRUE(v.is_npure());
    EXPECT_TRUE(v.consistent());
    EXPECT_FALSE(v.pure);
    ASSERT_TRUE(v.pure_partner.has_value());
    EXPECT_EQ(as_set(v.pure_partner->members()), (std::set<Elem>{0, 4, 8}));
    EXPECT_EQ(v.pure_partner_count, 1U);
    EXPECT_EQ(v.witnesses.size(), 6U);
    for (const auto& i : z12().ideals()) EXPECT_TRUE(is_npure(z12(), i).is_npure()) << i.describe();
}

TEST(NPure, WitnessesAreLeastValidPairs) {
    const auto& r = z12().ring();
    const auto v = is_npure(z12(), z12_ideal({2}));
    for (const auto& [a, w] : v.witnesses) {
        EXPECT_EQ(r.mul(oracle::naive_pow(r, a, w.n), r.one_minus(w.b)), r.zero());
        for (std::size_t n = 1; n < w.n; ++n)
            for (Elem b : {0, 2, 4, 6, 8, 10})
                EXPECT_NE(r.mul(oracle::naive_pow(r, a, n), r.one_minus(b)), r.zero());
    }
    EXPECT_EQ(v.witnesses.at(2).n, 2U);
    EXPECT_EQ(v.witnesses.at(2).b, 4U);
    EXPECT_EQ(v.witnesses.at(0).n, 1U);
    EXPECT_EQ(v.witnesses.at(0).b, 0U);
}

TEST(NPure, InsideNilradicalUsesZeroWitness) {
    const RingContext ctx(ring("zmod:8"));
    const auto v = is_npure(ctx, ideal(ctx.ring_ptr(), {2}));
    EXPECT_TRUE(v.is_npure());
    for (const auto& [a, w] : v.witnesses) EXPECT_EQ(w.b, 0U) << a;
}

TEST(NPure, FiveCriteriaAgreeAndMatchOracle) {
    for (const auto& r : corpus(32)) {
        const RingContext ctx(r);
        for (const auto& i : ctx.ideals()) {
            const auto v = is_npure(ctx, i);
            ASSERT_TRUE(v.consistent()) << subject_of(i);
            ASSERT_EQ(v.is_npure(), oracle::npure(*r, as_set(i.members()))) << subject_of(i);
            ASSERT_EQ(v.strongly_pi_regular, oracle::strongly_pi_regular(*r, as_set(i.members()))) << subject_of(i);
            if (v.pure) { ASSERT_TRUE(v.is_npure()); }
        }
    }
}

TEST(NPure, FiniteRingsHaveOnlyNPureIdeals) {
    // Every finite ring is zero-dimensional, so the class is everything.
    for (const auto& r : corpus(64)) {
        const RingContext ctx(r);
        for (std::size_t k = 0; k < ctx.ideals().size(); ++k) ASSERT_TRUE(ctx.is_npure_at(k)) << subject_of(ctx.ideals()[k]);
    }
}

TEST(NPure, ReducedRingsHaveSamePureAndNPureIdeals) {
    std::size_t reduced = 0;
    for (const auto& r : corpus(64)) {
        const RingContext ctx(r);
        if (!is_reduced(ctx)) continue;
        ++reduced;
        for (std::size_t k = 0; k < ctx.ideals().size(); ++k)
            EXPECT_EQ(ctx.is_pure_at(k), ctx.is_npure_at(k)) << subject_of(ctx.ideals()[k]);
    }
    EXPECT_GT(reduced, 10U);
}

TEST(StronglyPiRegular, Examples) {
    EXPECT_TRUE(is_strongly_pi_regular(z12_ideal({2})));
    EXPECT_TRUE(is_strongly_pi_regular(z12_ideal({})));
    for (const auto& i : z12().ideals()) EXPECT_EQ(is_strongly_pi_regular(i), z12().is_npure(i));
}

TEST(UniformExponent, Examples) {
    const auto w2 = uniform_exponent_witness(z12_ideal({2}));
    EXPECT_EQ(w2.n, 2U);
    EXPECT_EQ(w2.b, 4U);
    const auto w3 = uniform_exponent_witness(z12_ideal({3}));
    EXPECT_EQ(w3.n, 1U);
    EXPECT_EQ(w3.b, 9U);
    const auto w0 = uniform_exponent_witness(z12_ideal({}));
    EXPECT_EQ(w0.n, 1U);
    EXPECT_EQ(w0.b, 0U);
}

TEST(UniformExponent, LexicographicallyLeastOnZmod12) {
    const auto& r = z12().ring();
    for (const auto& i : z12().ideals()) {
        const auto w = uniform_exponent_witness(i);
        auto valid = [&](std::size_t n, Elem b) {
            for (Elem a : i.member_list())
                if (r.mul(oracle::naive_pow(r, a, n), r.one_minus(b)) != r.zero()) return false;
            return true;
        };
        EXPECT_TRUE(valid(w.n, w.b));
        for (std::size_t n = 1; n <= w.n; ++n)
            for (Elem b : i.member_list()) {
                if (n == w.n && b >= w.b) break;
                EXPECT_FALSE(valid(n, b)) << i.describe() << " n=" << n << " b=" << b;
            }
    }
}

TEST(PrincipalRadicalWitness, Examples) {
    EXPECT_EQ(principal_radical_witness(z12_ideal({2})), 2U);
    EXPECT_EQ(principal_radical_witness(z12_ideal({})), 0U);
    // N(Z12) = (6), so the zero element already has the right radical.
    EXPECT_EQ(principal_radical_witness(z12_ideal({6})), 0U);
    EXPECT_EQ(principal_radical_witness(z12_ideal({3})), 3U);
    EXPECT_EQ(principal_radical_witness(z12_ideal({1})), 1U);
}

TEST(LemmaV, Examples) {
    EXPECT_EQ(check_lemma_v(z12(), z12_ideal({2})).status, Status::pass);
    EXPECT_EQ(check_lemma_v(z12(), z12_ideal({4})).status, Status::vacuous);
    const RingContext zero(ring("zmod:1"));
    EXPECT_EQ(check_lemma_v(zero, zero.ideals().front()).status, Status::vacuous);
}

TEST(LemmaVI, Examples) {
    const RingContext z8(ring("zmod:8"));
    EXPECT_EQ(check_lemma_vi(z8).status, Status::pass);
    EXPECT_EQ(check_lemma_vi(z12()).status, Status::pass);
    const RingContext f5(ring("zmod:5"));
    EXPECT_EQ(check_lemma_vi(f5).status, Status::vacuous);
}

TEST(CorollaryIV, Examples) {
    auto v2 = check_corollary_iv(z12(), z12_ideal({2}));
    EXPECT_EQ(v2.status, Status::pass);
    auto v0 = check_corollary_iv(z12(), z12_ideal({}));
    EXPECT_EQ(v0.status, Status::pass);
    EXPECT_EQ(v0.witness["intersection"], nlohmann::json({0, 6}));
    EXPECT_EQ(check_corollary_iv(z12(), z12_ideal({1})).status, Status::pass);
}

TEST(PropositionIII, Examples) {
    EXPECT_EQ(check_proposition_iii(z12(), z12_ideal({6})).status, Status::pass);
    EXPECT_EQ(check_proposition_iii(z12(), z12_ideal({2})).status, Status::pass);
    EXPECT_EQ(check_proposition_iii(z12(), z12_ideal({1})).status, Status::pass);
}

TEST(LemmaII, Examples) {
    const auto i = z12_ideal({2});
    const auto proj = quotient_projection(z12_ideal({6}));
    auto v = check_lemma_ii(proj, i);
    EXPECT_EQ(v.status, Status::pass);
    EXPECT_EQ(check_lemma_ii(identity_hom(z12().ring_ptr()), i).status, Status::pass);
    const auto crt = crt_map(4, 3);
    EXPECT_EQ(check_lemma_ii(crt, generate_ideal(crt.domain(), {2})).status, Status::pass);
}

TEST(LemmaII, ImageOfTwoUnderCrt) {
    // (2) in Z/12 maps to (2) x Z/3 in Z/4 x Z/3.
    const auto crt = crt_map(4, 3);
    const auto image = push_forward(crt, generate_ideal(crt.domain(), {2}));
    std::set<Elem> expected;
    for (Elem a : {0, 2})
        for (Elem b : {0, 1, 2}) expected.insert(a * 3 + b);
    EXPECT_EQ(as_set(image.members()), expected);
}

TEST(Checks, PassOnSmallCorpus) {
    for (const auto& r : corpus(16)) {
        const RingContext ctx(r);
        for (const auto& i : ctx.ideals()) {
            EXPECT_NE(check_theorem_2_6(ctx, i).status, Status::fail) << subject_of(i);
            EXPECT_NE(check_proposition_v(ctx, i).status, Status::fail) << subject_of(i);
            EXPECT_NE(check_proposition_vi(ctx, i).status, Status::fail) << subject_of(i);
            EXPECT_NE(check_uniform_exponent(ctx, i).status, Status::fail) << subject_of(i);
            EXPECT_NE(check_lemma_v(ctx, i).status, Status::fail) << subject_of(i);
            EXPECT_NE(check_corollary_iv(ctx, i).status, Status::fail) << subject_of(i);
            EXPECT_NE(check_proposition_iii(ctx, i).status, Status::fail) << subject_of(i);
        }
        EXPECT_NE(check_lemma_vi(ctx).status, Status::fail) << r->spec_string();
    }
}
