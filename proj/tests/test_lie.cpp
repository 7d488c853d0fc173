#include "bicross/fixtures.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace bicross;
using fixtures::detail::vec;

namespace {

const Violation* witness(const AxiomReport& r, const std::string& id, const std::vector<std::string>& tuple) {
    const auto* e = r.find(id);
    if (e == nullptr) return nullptr;
    for (const auto& v : e->violations)
        if (v.tuple == tuple) return &v;
    return nullptr;
}

LieAlgebra rebuilt_in_original_basis(const LieAlgebra& L, const SubspacePair& pair) {
    const LieAlgebra B = build_bicocycle_sum(decompose(L, pair));
    return change_basis(B, invert_matrix(pair.adapted_matrix()), L.space);
}

}  // namespace

TEST(LieAxioms, AbelianAndSl2Pass) {
    EXPECT_TRUE(verify_lie_axioms(fixtures::abelian(3)).all_hold());
    const auto r = verify_lie_axioms(fixtures::sl2());
    EXPECT_TRUE(r.all_hold());
    EXPECT_EQ(r.find("jacobi")->checked, 27u);
}

TEST(LieAxioms, CorruptedSl2FailsJacobiAtEFH) {
    auto L = fixtures::sl2();
    L.bracket.coeffs.at(0, 1, 2) = Rational(2);
    const auto r = verify_lie_axioms(L);
    EXPECT_FALSE(r.holds("jacobi"));
    EXPECT_FALSE(r.holds("antisymmetry"));
    const auto* v = witness(r, "jacobi", {"e", "f", "h"});
    ASSERT_NE(v, nullptr);
    EXPECT_EQ(v->residual, (std::vector<std::string>{"0", "0", "2"}));
}

TEST(LieAxioms, CorruptionKeepingAntisymmetryStillBreaksJacobi) {
    auto L = fixtures::sl2();
    L.set_antisymmetric(2, 0, 0, Rational(3));
    const auto r = verify_lie_axioms(L);
    EXPECT_TRUE(r.holds("antisymmetry"));
    EXPECT_FALSE(r.holds("jacobi"));
    EXPECT_NE(witness(r, "jacobi", {"e", "f", "h"}), nullptr);
}

TEST(BuildSum, DirectSumIsBlockDiagonal) {
    const auto sl2 = fixtures::sl2();
    BicocycleSumData d(sl2.space, BasedSpace({"k"}));
    d.phi.coeffs = sl2.bracket.coeffs;
    const LieAlgebra L = build_bicocycle_sum(d);
    ASSERT_EQ(L.dim(), 4u);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k) {
                const Rational want = i < 3 && j < 3 && k < 3 ? sl2.bracket.coeffs.at(i, j, k) : Rational(0);
                EXPECT_EQ(L.bracket.coeffs.at(i, j, k), want);
            }
    EXPECT_TRUE(verify_lie_axioms(L).all_hold());
}

TEST(Decompose, Sl2Split) {
    const auto s = fixtures::sl2_split();
    const auto& d = s.data;
    EXPECT_TRUE(d.phi.coeffs.is_zero());
    EXPECT_TRUE(d.gamma.coeffs.is_zero());
    EXPECT_TRUE(d.mu.coeffs.is_zero());
    EXPECT_TRUE(d.psi.coeffs.is_zero());
    EXPECT_EQ(d.theta.coeffs.at(0, 1, 0), Rational(1));
    EXPECT_EQ(d.theta.coeffs.at(1, 0, 0), Rational(-1));
    EXPECT_EQ(d.varphi.coeffs.at(0, 0, 0), Rational(2));
    EXPECT_EQ(d.varphi.coeffs.at(0, 1, 1), Rational(-2));
    EXPECT_EQ(build_bicocycle_sum(d).bracket.coeffs, s.algebra.bracket.coeffs);
}

TEST(Decompose, AbelianGivesZeroMaps) {
    const auto item = fixtures::lie_corpus()[0];
    for (const auto& pair : item.splits) {
        const auto d = decompose(item.algebra, pair);
        for (const auto* t : {&d.phi, &d.theta, &d.mu, &d.gamma, &d.varphi, &d.psi}) EXPECT_TRUE(t->coeffs.is_zero());
    }
}

TEST(Decompose, NonabelianSkewSplit) {
    // u = a+b, v = b: [v,u] = [b,a] = -b = 0 u - v
    const auto item = fixtures::lie_corpus()[3];
    const auto d = decompose(item.algebra, item.splits.back());
    EXPECT_EQ(d.psi.coeffs.at(0, 0, 0), Rational(-1));
    EXPECT_TRUE(d.varphi.coeffs.is_zero());
    EXPECT_TRUE(d.theta.coeffs.is_zero());
    EXPECT_TRUE(d.phi.coeffs.is_zero());
}

TEST(RoundTrip, CorpusEverySplit) {
    for (const auto& item : fixtures::lie_corpus()) {
        ASSERT_GE(item.splits.size(), 2u);
        for (const auto& pair : item.splits) {
            SCOPED_TRACE(item.name);
            EXPECT_EQ(rebuilt_in_original_basis(item.algebra, pair).bracket.coeffs, item.algebra.bracket.coeffs);
            EXPECT_EQ(build_bicocycle_sum(decompose(item.algebra, pair)).bracket.coeffs,
                      adapted_algebra(item.algebra, pair).bracket.coeffs);
            EXPECT_TRUE(verify_matched_pair(decompose(item.algebra, pair)).all_hold());
        }
    }
}

TEST(MatchedPair, ZeroDataAndSl2Pass) {
    const BicocycleSumData zero(BasedSpace::numbered("m", 2), BasedSpace::numbered("h", 2));
    const auto r = verify_matched_pair(zero);
    EXPECT_TRUE(r.all_hold());
    EXPECT_EQ(r.entries.size(), 9u);
    EXPECT_TRUE(verify_matched_pair(fixtures::sl2_split().data).all_hold());
}

TEST(MatchedPair, CorruptedThetaFailsA3) {
    auto d = fixtures::sl2_split().data;
    d.theta.coeffs.at(0, 1, 0) = Rational(3);
    const auto r = verify_matched_pair(d);
    EXPECT_FALSE(r.holds("A1"));
    EXPECT_FALSE(r.holds("A3"));
    EXPECT_TRUE(r.holds("A2"));
}

TEST(MatchedPair, LiteralVariantOnlyWithFlag) {
    const auto d = fixtures::sl2_split().data;
    EXPECT_EQ(verify_matched_pair(d).find("A4-literal"), nullptr);
    VerifyOptions opt;
    opt.literal_axioms = true;
    const auto r = verify_matched_pair(d, opt);
    const auto* e = r.find("A4-literal");
    ASSERT_NE(e, nullptr);
    EXPECT_EQ(e->note, "literal");
    EXPECT_TRUE(r.holds("A4"));
}

TEST(Classify, MatchedPairWithTrivialActions) {
    const auto sl2 = fixtures::sl2();
    const auto n2 = fixtures::nonabelian2();
    BicocycleSumData d(sl2.space, n2.space);
    d.phi.coeffs = sl2.bracket.coeffs;
    d.mu.coeffs = n2.bracket.coeffs;
    const auto rec = classify_specialization(d);
    EXPECT_TRUE(rec.theta_trivial);
    EXPECT_TRUE(rec.gamma_trivial);
    EXPECT_TRUE(rec.matched_pair);
    EXPECT_EQ(rec.labels(), std::vector<std::string>{"matched_pair"});
}

TEST(Classify, Sl2IsRightUnifiedProduct) {
    const auto rec = classify_specialization(fixtures::sl2_split().data);
    EXPECT_FALSE(rec.theta_trivial);
    EXPECT_TRUE(rec.gamma_trivial);
    EXPECT_TRUE(rec.right_unified_product);
    EXPECT_FALSE(rec.left_unified_product);
    EXPECT_FALSE(rec.matched_pair);
}

// ---------------------------------------------------------------------------
// Graded family

namespace {

GradedVector term_of(const GradedBasisMap& f, long i, long j) {
    GradedVector out;
    if (auto t = f(i, j)) out.add(t->index, t->coef);
    return out;
}

}  // namespace

TEST(W1, ClosedFormValues) {
    const auto g = fixtures::w1_graded();
    const detail::GradedOps o{g};
    EXPECT_EQ(o.bracket(-1, 0).terms(), GradedVector(-1, 1).terms());
    EXPECT_TRUE(term_of(g.mu, -1, -1).is_zero());
    EXPECT_EQ(term_of(g.theta, 1, 5).terms(), GradedVector(6, 4).terms());
    EXPECT_EQ(term_of(g.varphi, -1, 1).terms(), GradedVector(0, 2).terms());
    EXPECT_EQ(term_of(g.gamma, -1, 2).terms(), GradedVector(1, 3).terms());
    EXPECT_TRUE(g.in_h(-1) && g.in_m(1) && g.in_h(2) && g.in_m(5));
}

TEST(W1, ReconstructedBracketIsWitt) {
    const auto g = fixtures::w1_graded();
    const detail::GradedOps o{g};
    for (long i = -1; i <= 9; ++i)
        for (long j = -1; i + j <= 8; ++j) {
            SCOPED_TRACE(std::to_string(i) + "," + std::to_string(j));
            const GradedVector want = i == j ? GradedVector() : GradedVector(i + j, j - i);
            EXPECT_EQ(o.bracket(i, j).terms(), want.terms());
        }
}

TEST(W1, AxiomsHoldUpToTwenty) {
    const auto r = graded_verify(fixtures::w1_graded(), 20);
    EXPECT_TRUE(r.all_hold()) << r.failing_ids().size();
    EXPECT_EQ(r.entries.size(), 10u);
    for (const auto& e : r.entries) EXPECT_GT(e.checked, 0u) << e.id;
}

TEST(W1, LowestBoundIsVacuous) {
    const auto r = graded_verify(fixtures::w1_graded(), -1);
    EXPECT_TRUE(r.all_hold());
    EXPECT_EQ(r.find("A6")->checked, 0u);
    EXPECT_THROW(graded_verify(fixtures::w1_graded(), -2), Error);
}

TEST(W1, BrokenClosedFormIsCaught) {
    auto g = fixtures::w1_graded();
    const auto theta = g.theta;
    g.theta = [theta](long i, long j) -> std::optional<GradedTerm> {
        auto t = theta(i, j);
        if (t && i == 1 && j == 5) t->coef = Rational(5);
        if (t && i == 5 && j == 1) t->coef = Rational(-5);
        return t;
    };
    const auto r = graded_verify(g, 12);
    EXPECT_FALSE(r.holds("bracket"));
    EXPECT_TRUE(r.holds("A1"));
    EXPECT_FALSE(r.all_hold());
}

TEST(W1, SweepIsThreadIndependent) {
    VerifyOptions one, four;
    four.jobs = 4;
    const auto a = graded_verify(fixtures::w1_graded(), 14, one);
    const auto b = graded_verify(fixtures::w1_graded(), 14, four);
    ASSERT_EQ(a.entries.size(), b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        EXPECT_EQ(a.entries[i].checked, b.entries[i].checked);
        EXPECT_EQ(a.entries[i].holds, b.entries[i].holds);
    }
}
