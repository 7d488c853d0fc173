// Seeded random data for the equivalence fuzz tests.
#pragma once

#include "bicross/fixtures.hpp"

#include <random>
#include <vector>

namespace fuzz {

using namespace bicross;
using Rng = std::mt19937_64;

inline long pick(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational small_rational(Rng& rng) {
    static const std::vector<Rational> pool = {Rational(-2), Rational(-1), Rational(1), Rational(2), Rational(1, 2),
                                               Rational(-1, 2), Rational(3), Rational(1, 3)};
    return pool[static_cast<std::size_t>(pick(rng, 0, static_cast<long>(pool.size()) - 1))];
}

// ---------------------------------------------------------------------------
// Lie level

/// Sparse data with entries in {-2..2}; half of the samples antisymmetrize
/// the alternating maps so that A1 passes often.
inline BicocycleSumData random_sum_data(Rng& rng, std::size_t dm, std::size_t dh) {
    BicocycleSumData d(BasedSpace::numbered("m", dm), BasedSpace::numbered("h", dh));
    const bool alternate = pick(rng, 0, 1) == 1;
    BilinearMapTensor* maps[] = {&d.phi, &d.theta, &d.mu, &d.gamma, &d.varphi, &d.psi};
    const long entries = pick(rng, 1, 4);
    for (long n = 0; n < entries; ++n) {
        const auto w = static_cast<std::size_t>(pick(rng, 0, 5));
        Tensor3& t = maps[w]->coeffs;
        const auto i = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(t.dim(0)) - 1));
        const auto j = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(t.dim(1)) - 1));
        const auto k = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(t.dim(2)) - 1));
        long c = pick(rng, -2, 2);
        if (c == 0) c = 1;
        t.at(i, j, k) = Rational(c);
        if (alternate && w < 4) t.at(j, i, k) = i == j ? Rational(0) : Rational(-c);
    }
    return d;
}

inline Matrix random_invertible(Rng& rng, std::size_t n) {
    for (;;) {
        Matrix P(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) P(r, c) = Rational(pick(rng, -2, 2));
        try {
            (void)invert_matrix(P);
            return P;
        } catch (const Error&) {
        }
    }
}

/// Four-dimensional Lie algebras used to produce genuine decompositions.
inline std::vector<LieAlgebra> lie_sources() {
    std::vector<LieAlgebra> out;
    auto sum = [](const LieAlgebra& a, const LieAlgebra& b) {
        const std::size_t na = a.dim(), nb = b.dim();
        LieAlgebra L(BasedSpace::numbered("u", na + nb));
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < na; ++j)
                for (std::size_t k = 0; k < na; ++k) L.set(i, j, k, a.bracket.coeffs.at(i, j, k));
        for (std::size_t i = 0; i < nb; ++i)
            for (std::size_t j = 0; j < nb; ++j)
                for (std::size_t k = 0; k < nb; ++k) L.set(na + i, na + j, na + k, b.bracket.coeffs.at(i, j, k));
        return L;
    };
    out.push_back(sum(fixtures::sl2(), fixtures::abelian(1)));
    out.push_back(sum(fixtures::heisenberg3(), fixtures::abelian(1)));
    out.push_back(sum(fixtures::nonabelian2(), fixtures::nonabelian2()));
    out.push_back(sum(fixtures::nonabelian2(), fixtures::abelian(2)));
    out.push_back(fixtures::abelian(4));
    return out;
}

/// Either random sparse data or the decomposition of a known algebra along a
/// random split, so that both outcomes occur.
inline BicocycleSumData lie_sample(Rng& rng, std::size_t index) {
    if (index % 3 != 0) return random_sum_data(rng, 2, 2);
    static const auto sources = lie_sources();
    const auto& L = sources[static_cast<std::size_t>(pick(rng, 0, static_cast<long>(sources.size()) - 1))];
    const Matrix P = random_invertible(rng, 4);
    SubspacePair pair(L.space, {P.column(0), P.column(1)}, {P.column(2), P.column(3)});
    return decompose(L, pair);
}

// ---------------------------------------------------------------------------
// Coalgebra helpers

/// C in the basis given by the columns of P (old coordinates).
inline CoalgebraTensor rebase(const CoalgebraTensor& C, const Matrix& P) {
    const std::size_t n = C.dim();
    const Matrix Q = invert_matrix(P), QQ = kron(Q, Q);
    CoalgebraTensor out;
    out.space = BasedSpace::numbered(C.space.labels.empty() ? "c" : C.space.labels[0].substr(0, 1), n);
    out.comul = Tensor3(n, n, n);
    out.counit = Vector(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vector v = P.column(i);
        out.comul.set_slab(i, QQ.apply(comul(C, v)));
        out.counit[i] = dot(C.counit, v);
    }
    if (C.grouplike) out.grouplike = Q.apply(*C.grouplike);
    return out;
}

/// Basis {g, x - g} of a two-element group-like coalgebra {g, x} (g the point).
inline Matrix shifted_basis(const CoalgebraTensor& C) {
    const std::size_t g = C.grouplike->data()[0].is_zero() ? 1 : 0, x = 1 - g;
    Matrix P(2, 2);
    P(g, 0) = Rational(1);
    P(x, 1) = Rational(1);
    P(g, 1) = Rational(-1);
    return P;
}

/// All splits of k[G] into two-element group-like subsets containing the identity.
struct Source {
    BialgebraTensor G;
    fixtures::SubCoalgebra M, H;
};

inline std::vector<Source> four_dim_splits(bool h_subgroup_only) {
    std::vector<Source> out;
    for (const auto& G : {fixtures::cyclic(4), fixtures::group_from({"00", "01", "10", "11"}, [](std::size_t a, std::size_t b) {
                              return a ^ b;
                          })}) {
        for (std::size_t a = 1; a < 4; ++a)
            for (std::size_t b = 1; b < 4; ++b) {
                if (a == b) continue;
                if (h_subgroup_only && G.mul(b, b) != G.identity) continue;
                Source s{fixtures::group_bialgebra(G), fixtures::group_subcoalgebra(G, {0, a}),
                         fixtures::group_subcoalgebra(G, {0, b})};
                try {
                    (void)invert_matrix(product_map(s.G, s.M.inclusion, s.H.inclusion));
                    out.push_back(s);
                } catch (const Error&) {
                }
            }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Bicocycle data at 2 (x) 2

/// Genuine factorization data, optionally in a shifted (non group-like) basis.
inline BicocycleData genuine_bicocycle(Rng& rng) {
    static const auto sources = four_dim_splits(false);
    Source s = sources[static_cast<std::size_t>(pick(rng, 0, static_cast<long>(sources.size()) - 1))];
    if (pick(rng, 0, 1)) {
        const Matrix P = shifted_basis(s.M.coalgebra);
        s.M.coalgebra = rebase(s.M.coalgebra, P);
        s.M.inclusion = s.M.inclusion * P;
    }
    if (pick(rng, 0, 1)) {
        const Matrix P = shifted_basis(s.H.coalgebra);
        s.H.coalgebra = rebase(s.H.coalgebra, P);
        s.H.inclusion = s.H.inclusion * P;
    }
    return factorize_bialgebra(s.G, s.M.coalgebra, s.H.coalgebra, s.M.inclusion, s.H.inclusion);
}

/// Normalized set maps on the group-likes {e, a} and {1, b}: each free value
/// is a basis element chosen at random.
inline BicocycleData setmap_bicocycle(Rng& rng) {
    BicocycleData d(fixtures::grouplike_coalgebra({"e", "a"}), fixtures::grouplike_coalgebra({"1", "b"}));
    auto r2 = [&] { return static_cast<std::size_t>(pick(rng, 0, 1)); };
    // varphi(h,x): 1 acts trivially, b fixes e
    d.varphi.at(0, 0, 0) = d.varphi.at(0, 1, 1) = d.varphi.at(1, 0, 0) = Rational(1);
    d.varphi.at(1, 1, r2()) = Rational(1);
    d.psi.at(0, 0, 0) = d.psi.at(0, 1, 0) = d.psi.at(1, 0, 1) = Rational(1);
    d.psi.at(1, 1, r2()) = Rational(1);
    for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y) {
            const bool base = x == 0 && y == 0;
            d.phi.at(x, y, base ? 0 : r2()) = Rational(1);
            d.theta.at(x, y, base ? 0 : r2()) = Rational(1);
            d.mu.at(x, y, base ? 0 : r2()) = Rational(1);
            d.gamma.at(x, y, base ? 0 : r2()) = Rational(1);
        }
    return d;
}

/// Changes one random coefficient of one map.
inline void perturb(Rng& rng, std::vector<Tensor3*> maps) {
    Tensor3& t = *maps[static_cast<std::size_t>(pick(rng, 0, static_cast<long>(maps.size()) - 1))];
    const auto i = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(t.dim(0)) - 1));
    const auto j = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(t.dim(1)) - 1));
    const auto k = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(t.dim(2)) - 1));
    t.at(i, j, k) += small_rational(rng);
}

/// Moves the value of a set map at one non-normalized slot to another basis
/// element. Group-like data stay coalgebra maps.
inline void retarget(Rng& rng, std::vector<Tensor3*> maps) {
    Tensor3& t = *maps[static_cast<std::size_t>(pick(rng, 0, static_cast<long>(maps.size()) - 1))];
    const auto i = static_cast<std::size_t>(pick(rng, 1, static_cast<long>(t.dim(0)) - 1));
    const auto j = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(t.dim(1)) - 1));
    std::size_t k = 0;
    for (std::size_t c = 0; c < t.dim(2); ++c)
        if (!t.at(i, j, c).is_zero()) k = c;
    t.at(i, j, k) = Rational(0);
    t.at(i, j, (k + 1) % t.dim(2)) = Rational(1);
}

/// The data-type invariants (normalizations, morphism property, structure of
/// M and H) that every build assumes.
inline bool invariants_hold(const AxiomReport& r) {
    for (const auto& e : r.entries)
        if (!e.holds && (e.id == "NORM" || e.id == "B14" || e.id == "C11" || e.id == "D11" || e.id == "H-bialgebra" ||
                         e.id == "M-algebra"))
            return false;
    return true;
}

inline BicocycleData genuine_grouplike_bicocycle(Rng& rng) {
    static const auto sources = four_dim_splits(false);
    const Source& s = sources[static_cast<std::size_t>(pick(rng, 0, static_cast<long>(sources.size()) - 1))];
    return factorize_bialgebra(s.G, s.M.coalgebra, s.H.coalgebra, s.M.inclusion, s.H.inclusion);
}

inline BicocycleData bicocycle_candidate(Rng& rng, std::size_t index) {
    switch (index % 5) {
        case 0: return genuine_bicocycle(rng);
        case 1: return setmap_bicocycle(rng);
        case 2: {
            BicocycleData d = genuine_grouplike_bicocycle(rng);
            retarget(rng, {&d.phi, &d.theta, &d.mu, &d.gamma, &d.varphi, &d.psi});
            return d;
        }
        case 3: {
            BicocycleData d = genuine_grouplike_bicocycle(rng);
            retarget(rng, {&d.phi, &d.theta, &d.mu, &d.gamma});
            retarget(rng, {&d.varphi, &d.psi});
            return d;
        }
        default: {
            BicocycleData d = setmap_bicocycle(rng);
            d.theta = trivial_theta(d.M, d.H);
            d.gamma = trivial_gamma(d.M, d.H);
            return d;
        }
    }
}

/// Candidates are redrawn until the invariants hold.
inline BicocycleData bicocycle_sample(Rng& rng, std::size_t index) {
    for (;;) {
        BicocycleData d = bicocycle_candidate(rng, index);
        if (invariants_hold(verify_bicocycle_conditions(d))) return d;
    }
}

// ---------------------------------------------------------------------------
// Cdcp data at 2 (x) 2

inline CdcpData genuine_cdcp(Rng& rng) {
    static const auto sources = four_dim_splits(true);
    Source s = sources[static_cast<std::size_t>(pick(rng, 0, static_cast<long>(sources.size()) - 1))];
    if (pick(rng, 0, 1)) {
        const Matrix P = shifted_basis(s.M.coalgebra);
        s.M.coalgebra = rebase(s.M.coalgebra, P);
        s.M.inclusion = s.M.inclusion * P;
    }
    return induced_cdcp(factorize_bialgebra(s.G, s.M.coalgebra, s.H.coalgebra, s.M.inclusion, s.H.inclusion));
}

inline CdcpData genuine_grouplike_cdcp(Rng& rng) {
    static const auto sources = four_dim_splits(true);
    const Source& s = sources[static_cast<std::size_t>(pick(rng, 0, static_cast<long>(sources.size()) - 1))];
    return induced_cdcp(factorize_bialgebra(s.G, s.M.coalgebra, s.H.coalgebra, s.M.inclusion, s.H.inclusion));
}

inline CdcpData setmap_cdcp(Rng& rng) {
    BicocycleData b = setmap_bicocycle(rng);
    b.gamma = trivial_gamma(b.M, b.H);
    const auto Z2 = fixtures::cyclic(2);
    CdcpData d(b.M, fixtures::group_bialgebra(Z2, ""));
    d.H.algebra.space = d.H.coalgebra.space = BasedSpace({"1", "b"});
    d.varphi = b.varphi;
    d.psi = b.psi;
    d.phi = b.phi;
    d.theta = b.theta;
    return d;
}

inline CdcpData cdcp_candidate(Rng& rng, std::size_t index) {
    switch (index % 4) {
        case 0: return genuine_cdcp(rng);
        case 1: return setmap_cdcp(rng);
        case 2: {
            CdcpData d = genuine_grouplike_cdcp(rng);
            retarget(rng, {&d.phi, &d.theta, &d.varphi, &d.psi});
            return d;
        }
        default: {
            CdcpData d = setmap_cdcp(rng);
            retarget(rng, {&d.phi, &d.theta, &d.varphi, &d.psi});
            return d;
        }
    }
}

inline CdcpData cdcp_sample(Rng& rng, std::size_t index) {
    for (;;) {
        CdcpData d = cdcp_candidate(rng, index);
        if (invariants_hold(verify_cdcp_conditions(d))) return d;
    }
}

// ---------------------------------------------------------------------------
// Cdcc data at 2 (x) 2

/// Dual of a cdcp bialgebra factorized back; nullopt when the projections
/// are not algebra maps.
inline std::optional<CdccData> dual_of(const CdcpData& c) {
    try {
        const auto pipe = fixtures::dual_pipeline(c);
        return factorize_cdcc(pipe.dual, pipe.M, pipe.H, pipe.q, pipe.p);
    } catch (const Error&) {
        return std::nullopt;
    }
}

inline CdccData cdcc_sample(Rng& rng, std::size_t index) {
    for (;;) {
        std::optional<CdccData> d;
        switch (index % 4) {
            case 0: d = dual_of(genuine_cdcp(rng)); break;
            case 1: d = dual_of(setmap_cdcp(rng)); break;
            default: d = dual_of(cdcp_candidate(rng, index)); break;
        }
        if (d && invariants_hold(verify_cdcc_conditions(*d))) return *d;
    }
}

}  // namespace fuzz
