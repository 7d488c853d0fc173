#include "bicross/fixtures.hpp"

#include <gtest/gtest.h>

using namespace bicross;

namespace {

CoalgebraTensor two_dim_coalgebra() {
    CoalgebraTensor C;
    C.space = BasedSpace({"e0", "e1"});
    C.comul = Tensor3(2, 2, 2);
    C.comul.at(0, 0, 0) = C.comul.at(1, 0, 1) = C.comul.at(1, 1, 0) = Rational(1);
    C.counit = Vector{std::vector<Rational>{1, 0}};
    C.grouplike = Vector::basis(2, 0);
    return C;
}

/// Rank-4 coefficients of the threefold coproduct, expanding legs in the given order:
/// each step splits the leg at position order[s] of the current term.
std::map<std::vector<std::size_t>, Rational> expand(const CoalgebraTensor& C, std::size_t i,
                                                    const std::vector<std::size_t>& order) {
    std::map<std::vector<std::size_t>, Rational> cur{{{i}, Rational(1)}};
    for (auto pos : order) {
        std::map<std::vector<std::size_t>, Rational> next;
        for (const auto& [legs, c] : cur)
            for (std::size_t j = 0; j < C.dim(); ++j)
                for (std::size_t k = 0; k < C.dim(); ++k) {
                    const auto& w = C.comul.at(legs[pos], j, k);
                    if (w.is_zero()) continue;
                    auto l = legs;
                    l[pos] = j;
                    l.insert(l.begin() + static_cast<long>(pos) + 1, k);
                    next[l] += c * w;
                }
        cur.clear();
        for (auto& [l, c] : next)
            if (!c.is_zero()) cur.emplace(l, c);
    }
    return cur;
}

bool is_trivial_sigma(const CdccData& d) {
    for (std::size_t h = 0; h < d.H.dim(); ++h) {
        Vector want = kron(d.M.unit, d.M.unit);
        want *= d.H.coalgebra.counit[h];
        if (d.sigma.slab(h) != want) return false;
    }
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Coalgebras, bialgebras, duals

TEST(Coalgebra, Examples) {
    EXPECT_TRUE(verify_coalgebra(fixtures::grouplike_coalgebra({"g0", "g1", "g2", "g3"})).all_hold());
    auto C = two_dim_coalgebra();
    EXPECT_TRUE(verify_coalgebra(C).all_hold());
    C.counit = Vector{std::vector<Rational>{1, 1}};
    const auto r = verify_coalgebra(C);
    EXPECT_TRUE(r.holds("coassociativity"));
    ASSERT_FALSE(r.holds("counit"));
    EXPECT_EQ(r.find("counit")->violations.front().tuple, std::vector<std::string>{"e1"});
}

TEST(Coalgebra, GrouplikeMarkerIsChecked) {
    auto C = two_dim_coalgebra();
    C.grouplike = Vector::basis(2, 1);
    EXPECT_FALSE(verify_coalgebra(C).holds("grouplike"));
}

TEST(Bialgebra, GroupBialgebras) {
    EXPECT_TRUE(verify_bialgebra(fixtures::group_bialgebra(fixtures::cyclic(2))).all_hold());
    EXPECT_TRUE(verify_bialgebra(fixtures::group_bialgebra(fixtures::cyclic(4))).all_hold());
    EXPECT_TRUE(verify_bialgebra(fixtures::group_bialgebra(fixtures::s3())).all_hold());
}

TEST(Bialgebra, CorruptedMultiplicationBreaksComultiplicativity) {
    auto B = fixtures::group_bialgebra(fixtures::cyclic(4));
    B.algebra.mul.at(1, 1, 3) = Rational(1);  // g1 g1 = g2 + g3
    const auto r = verify_bialgebra(B);
    ASSERT_FALSE(r.holds("comul-multiplicative"));
    bool found = false;
    for (const auto& v : r.find("comul-multiplicative")->violations)
        found = found || v.tuple == std::vector<std::string>{"g1", "g1"};
    EXPECT_TRUE(found);
}

TEST(Dualize, Z2GivesFunctionsOnZ2) {
    const auto D = dualize(fixtures::group_bialgebra(fixtures::cyclic(2)));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                EXPECT_EQ(D.algebra.mul.at(i, j, k), Rational(i == j && j == k ? 1 : 0));
    EXPECT_EQ(D.algebra.unit, (Vector{std::vector<Rational>{1, 1}}));
    EXPECT_EQ(D.coalgebra.comul.at(1, 1, 0), Rational(1));
    EXPECT_EQ(D.algebra.space.labels[0], "g0*");
    EXPECT_TRUE(verify_bialgebra(D).all_hold());
}

TEST(Dualize, IsAnInvolution) {
    for (const auto& G : {fixtures::cyclic(4), fixtures::s3(), fixtures::q8()}) {
        const auto B = fixtures::group_bialgebra(G);
        const auto DD = dualize(dualize(B));
        EXPECT_TRUE(same_structure(DD, B));
        EXPECT_EQ(DD.algebra.space.labels, B.algebra.space.labels);
        EXPECT_EQ(DD.coalgebra.grouplike, B.coalgebra.grouplike);
    }
    const auto S = build_cdcp(fixtures::smash_z3_z2());
    EXPECT_TRUE(same_structure(dualize(dualize(S)), S));
}

TEST(Sweedler, ExpansionOrderDoesNotMatter) {
    const auto funS3 = dualize(fixtures::group_bialgebra(fixtures::s3())).coalgebra;
    for (const auto& C : {two_dim_coalgebra(), funS3}) {
        const IteratedCoproducts cache(C, 4);
        for (std::size_t i = 0; i < C.dim(); ++i) {
            const auto last = expand(C, i, {0, 1, 2});
            EXPECT_EQ(expand(C, i, {0, 0, 0}), last);
            EXPECT_EQ(expand(C, i, {0, 1, 0}), last);
            EXPECT_EQ(expand(C, i, {0, 0, 2}), last);
            std::map<std::vector<std::size_t>, Rational> cached;
            for (const auto& t : cache(i, 4)) cached[t.legs] = t.coef;
            EXPECT_EQ(cached, last);
        }
    }
}

// ---------------------------------------------------------------------------
// Bicocycle bialgebras

TEST(Bicocycle, TrivialOneDimensional) {
    BicocycleData d(fixtures::grouplike_coalgebra({"e"}), fixtures::grouplike_coalgebra({"1"}));
    for (auto* t : {&d.varphi, &d.psi, &d.phi, &d.theta, &d.mu, &d.gamma}) t->at(0, 0, 0) = Rational(1);
    EXPECT_TRUE(verify_bicocycle_conditions(d).all_hold());
    const auto B = build_bicocycle_bialgebra(d);
    EXPECT_EQ(B.dim(), 1u);
    EXPECT_TRUE(verify_bialgebra(B).all_hold());
}

TEST(Bicocycle, KZ4Split) {
    const auto s = fixtures::kz4_bialgebra_split();
    const auto& d = s.data;
    EXPECT_EQ(d.gamma.fiber(1, 1), Vector::basis(2, 1));  // gamma(g1,g1) = g2
    EXPECT_EQ(d.mu.fiber(1, 1), Vector::basis(2, 0));     // mu(g1,g1) = g0
    EXPECT_EQ(d.M.space.labels, (std::vector<std::string>{"g0", "g2"}));
    EXPECT_EQ(d.H.space.labels, (std::vector<std::string>{"g0", "g1"}));
    for (std::size_t h = 0; h < 2; ++h)
        for (std::size_t x = 0; x < 2; ++x) {
            EXPECT_EQ(d.psi.fiber(h, x), Vector::basis(2, h));
            EXPECT_EQ(d.varphi.fiber(h, x), Vector::basis(2, x));
        }
    const auto r = verify_bicocycle_conditions(d);
    EXPECT_TRUE(r.all_hold());
    for (int k = 1; k <= 14; ++k) EXPECT_NE(r.find("B" + std::to_string(k)), nullptr);

    const auto built = build_bicocycle_bialgebra(d);
    const auto moved = transport(built, product_map(s.G, s.M.inclusion, s.H.inclusion), s.G.algebra.space);
    EXPECT_EQ(moved.algebra.mul, s.G.algebra.mul);
    EXPECT_EQ(moved.coalgebra.comul, s.G.coalgebra.comul);
    EXPECT_TRUE(same_structure(moved, s.G));
}

TEST(Bicocycle, ThetaForcedTrivialStillRebuildsKZ4) {
    const auto s = fixtures::kz4_bialgebra_split();
    auto d = s.data;
    EXPECT_EQ(d.theta, trivial_theta(d.M, d.H));
    d.theta = trivial_theta(d.M, d.H);
    const auto moved = transport(build_bicocycle_bialgebra(d), product_map(s.G, s.M.inclusion, s.H.inclusion),
                                 s.G.algebra.space);
    EXPECT_TRUE(same_structure(moved, s.G));
}

TEST(Bicocycle, LiteralVariantsOnlyWithFlag) {
    const auto d = fixtures::kz4_bialgebra_split().data;
    EXPECT_EQ(verify_bicocycle_conditions(d).find("B3-literal"), nullptr);
    VerifyOptions opt;
    opt.literal_axioms = true;
    const auto r = verify_bicocycle_conditions(d, opt);
    for (const char* id : {"B3-literal", "B7-literal", "B10-literal"}) {
        const auto* e = r.find(id);
        ASSERT_NE(e, nullptr) << id;
        EXPECT_EQ(e->note, "extra-variable");
    }
}

// In M = span{g0,g2} the only other group-like value for gamma(g1,g1) is g0;
// with mu(g1,g1) = g0 this is the group algebra of Z2 x Z2.
TEST(Bicocycle, KZ4GammaToUnitGivesKleinBialgebra) {
    auto d = fixtures::kz4_bialgebra_split().data;
    d.gamma.set_fiber(1, 1, Vector::basis(2, 0));
    EXPECT_TRUE(verify_bicocycle_conditions(d).all_hold());
    const auto B = build_bicocycle_bialgebra(d);
    EXPECT_TRUE(verify_bialgebra(B).all_hold());
    for (std::size_t g = 0; g < 4; ++g) EXPECT_EQ(mul(B.algebra, Vector::basis(4, g), Vector::basis(4, g)), B.algebra.unit);
}

TEST(Bicocycle, KZ4ThetaRetargetFailsAssociativityFamily) {
    auto d = fixtures::kz4_bialgebra_split().data;
    d.theta.set_fiber(1, 1, Vector::basis(2, 1));
    const auto r = verify_bicocycle_conditions(d);
    EXPECT_FALSE(r.holds("B10"));
    EXPECT_FALSE(r.holds("B7"));
    EXPECT_TRUE(r.holds("B14"));
    EXPECT_FALSE(verify_bialgebra(build_bicocycle_bialgebra(d)).all_hold());
}

// A psi that is not a coalgebra map lies outside the construction's
// hypotheses. Here the product is still a bialgebra while conditions fail.
TEST(Bicocycle, NonCoalgebraMapDataIsOutsideTheEquivalence) {
    const auto K = fixtures::group_from({"00", "01", "10", "11"}, [](std::size_t a, std::size_t b) { return a ^ b; });
    auto d = fixtures::group_bialgebra_split(K, {0, 1}, {0, 2}).data;
    d.psi.set_fiber(1, 1, -Vector::basis(2, 1));
    const auto r = verify_bicocycle_conditions(d);
    EXPECT_FALSE(r.holds("B14"));
    EXPECT_TRUE(r.holds("NORM"));
    EXPECT_TRUE(verify_bialgebra(build_bicocycle_bialgebra(d)).all_hold());
}

TEST(Factorize, TensorProductGivesTrivialCrossData) {
    const auto s = fixtures::group_bialgebra_split(fixtures::z2xz3(), {0, 3}, {0, 1, 2});
    const auto& d = s.data;
    EXPECT_EQ(d.theta, trivial_theta(d.M, d.H));
    EXPECT_EQ(d.gamma, trivial_gamma(d.M, d.H));
    for (std::size_t h = 0; h < 3; ++h)
        for (std::size_t x = 0; x < 2; ++x) {
            EXPECT_EQ(d.varphi.fiber(h, x), Vector::basis(2, x));
            EXPECT_EQ(d.psi.fiber(h, x), Vector::basis(3, h));
        }
}

TEST(Factorize, S3IsAMatchedPair) {
    const auto s = fixtures::group_bialgebra_split(fixtures::s3(), {0, 4, 5}, {0, 1});
    EXPECT_EQ(s.data.theta, trivial_theta(s.data.M, s.data.H));
    EXPECT_EQ(s.data.gamma, trivial_gamma(s.data.M, s.data.H));
    EXPECT_TRUE(verify_bicocycle_conditions(s.data).all_hold());
    const auto moved = transport(build_bicocycle_bialgebra(s.data), product_map(s.G, s.M.inclusion, s.H.inclusion),
                                 s.G.algebra.space);
    EXPECT_TRUE(same_structure(moved, s.G));
}

TEST(Factorize, Errors) {
    const auto Z4 = fixtures::cyclic(4);
    const auto G = fixtures::group_bialgebra(Z4);
    const auto M = fixtures::group_subcoalgebra(Z4, {0, 2});
    try {
        (void)factorize_bialgebra(G, M.coalgebra, M.coalgebra, M.inclusion, M.inclusion);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotInvertible);
    }
    auto H = fixtures::group_subcoalgebra(Z4, {0, 1});
    H.inclusion(2, 1) = Rational(1);  // g1 |-> g1 + g2
    try {
        (void)factorize_bialgebra(G, M.coalgebra, H.coalgebra, M.inclusion, H.inclusion);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotCoalgebraMap);
    }
}

// ---------------------------------------------------------------------------
// Cocycle double cross products

TEST(Cdcp, TrivialM) {
    const auto H = fixtures::group_bialgebra(fixtures::cyclic(3), "h");
    const auto d = fixtures::trivial_m_cdcp(H);
    EXPECT_TRUE(verify_cdcp_conditions(d).all_hold());
    EXPECT_TRUE(same_structure(build_cdcp(d), H));
}

TEST(Cdcp, KZ4RebuildsGroupAlgebra) {
    const auto s = fixtures::group_bialgebra_split(fixtures::cyclic(4), {0, 1}, {0, 2});
    const auto d = fixtures::kz4_cdcp();
    EXPECT_TRUE(verify_cdcp_conditions(d).all_hold());
    const auto moved = transport(build_cdcp(d), product_map(s.G, s.M.inclusion, s.H.inclusion), s.G.algebra.space);
    EXPECT_TRUE(same_structure(moved, s.G));
    EXPECT_FALSE(d.theta == trivial_theta(d.M, d.H.coalgebra));
}

TEST(Cdcp, SmashProduct) {
    const auto d = fixtures::smash_z3_z2();
    EXPECT_TRUE(verify_cdcp_conditions(d).all_hold());
    EXPECT_TRUE(verify_bialgebra(build_cdcp(d)).all_hold());
}

TEST(Cdcp, PerturbedSmashThetaFailsC8) {
    auto d = fixtures::smash_z3_z2();
    d.theta.set_fiber(1, 1, Vector::basis(2, 1));
    const auto r = verify_cdcp_conditions(d);
    ASSERT_FALSE(r.holds("C8"));
    EXPECT_EQ(r.find("C8")->violations.front().tuple.size(), 3u);
    EXPECT_FALSE(verify_bialgebra(build_cdcp(d)).all_hold());
}

// ---------------------------------------------------------------------------
// Cocycle double cross coproducts and the duality pipeline

TEST(Cdcc, TrivialM) {
    const auto H = fixtures::group_bialgebra(fixtures::cyclic(3), "h");
    const auto d = fixtures::trivial_m_cdcc(H);
    EXPECT_TRUE(verify_cdcc_conditions(d).all_hold());
    EXPECT_TRUE(same_structure(build_cdcc(d), H));
}

TEST(Cdcc, DualOfKZ4) {
    const auto pipe = fixtures::dual_pipeline(fixtures::kz4_cdcp());
    EXPECT_TRUE(verify_bialgebra(pipe.dual).all_hold());
    const auto d = factorize_cdcc(pipe.dual, pipe.M, pipe.H, pipe.q, pipe.p);
    EXPECT_TRUE(verify_cdcc_conditions(d).all_hold());
    EXPECT_EQ(d.eta(), Vector::basis(2, 0));
    const auto built = build_cdcc(d);
    EXPECT_TRUE(verify_bialgebra(built).all_hold());
    const auto moved = transport(pipe.dual, coproduct_map(pipe.dual, pipe.q, pipe.p), built.algebra.space);
    EXPECT_TRUE(same_structure(moved, built));
}

TEST(Cdcc, PerturbedSigmaFailsD6) {
    auto d = fixtures::dual_kz4_cdcc();
    d.sigma.at(1, 0, 1) += Rational(1);
    const auto r = verify_cdcc_conditions(d);
    ASSERT_FALSE(r.holds("D6"));
    EXPECT_FALSE(r.find("D6")->violations.empty());
}

TEST(Cdcc, TensorProductGivesTrivialMaps) {
    const auto s = fixtures::group_bialgebra_split(fixtures::z2xz3(), {0, 3}, {0, 1, 2});
    const auto d = fixtures::dual_pipeline(induced_cdcp(s.data));
    const auto c = factorize_cdcc(d.dual, d.M, d.H, d.q, d.p);
    EXPECT_TRUE(is_trivial_sigma(c));
    for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y)
            for (std::size_t z = 0; z < 2; ++z) EXPECT_EQ(c.delta.at(x, y, z), d.source.phi.at(y, z, x));
    for (std::size_t x = 0; x < c.M.dim(); ++x) EXPECT_EQ(c.nabla.slab(x), kron(c.H.algebra.unit, Vector::basis(c.M.dim(), x)));
    for (std::size_t h = 0; h < c.H.dim(); ++h) EXPECT_EQ(c.blackdown.slab(h), kron(Vector::basis(c.H.dim(), h), c.M.unit));
    EXPECT_TRUE(verify_cdcc_conditions(c).all_hold());
}

TEST(Cdcc, DualOfS3HasTrivialSigma) {
    const auto s = fixtures::group_bialgebra_split(fixtures::s3(), {0, 4, 5}, {0, 1});
    const auto pipe = fixtures::dual_pipeline(induced_cdcp(s.data));
    const auto c = factorize_cdcc(pipe.dual, pipe.M, pipe.H, pipe.q, pipe.p);
    EXPECT_TRUE(is_trivial_sigma(c));
    EXPECT_TRUE(verify_cdcc_conditions(c).all_hold());
    const auto moved = transport(pipe.dual, coproduct_map(pipe.dual, pipe.q, pipe.p), build_cdcc(c).algebra.space);
    EXPECT_TRUE(same_structure(moved, build_cdcc(c)));
}

TEST(Cdcc, ProjectionErrors) {
    const auto pipe = fixtures::dual_pipeline(fixtures::kz4_cdcp());
    Matrix q2 = pipe.q;
    for (std::size_t r = 0; r < q2.rows(); ++r)
        for (std::size_t c = 0; c < q2.cols(); ++c) q2(r, c) *= Rational(2);
    try {
        (void)factorize_cdcc(pipe.dual, pipe.M, pipe.H, q2, pipe.p);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotAlgebraMap);
    }
}

// ---------------------------------------------------------------------------
// Specialization

TEST(Specialization, TrivialGammaMatchesCdcp) {
    const auto d = fixtures::group_bialgebra_split(fixtures::cyclic(4), {0, 1}, {0, 2}).data;
    EXPECT_EQ(d.gamma, trivial_gamma(d.M, d.H));
    EXPECT_EQ(build_bicocycle_bialgebra(d).algebra.mul, build_cdcp(induced_cdcp(d)).algebra.mul);
    const auto s3 = fixtures::group_bialgebra_split(fixtures::s3(), {0, 4, 5}, {0, 1}).data;
    EXPECT_EQ(build_bicocycle_bialgebra(s3).algebra.mul, build_cdcp(induced_cdcp(s3)).algebra.mul);
}
