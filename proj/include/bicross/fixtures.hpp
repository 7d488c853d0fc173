// Small exactly known objects with their expected verification outcomes.
#pragma once

#include "bicross/graded.hpp"
#include "bicross/group.hpp"
#include "bicross/lie.hpp"
#include "bicross/quantum.hpp"

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace bicross::fixtures {

// ---------------------------------------------------------------------------
// Lie algebras

inline LieAlgebra abelian(std::size_t n) { return LieAlgebra(BasedSpace::numbered("x", n)); }

/// Basis (e, f, h): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
inline LieAlgebra sl2() {
    LieAlgebra L(BasedSpace({"e", "f", "h"}));
    L.set_antisymmetric(2, 0, 0, Rational(2));
    L.set_antisymmetric(2, 1, 1, Rational(-2));
    L.set_antisymmetric(0, 1, 2, Rational(1));
    return L;
}

/// Basis (x, y, z): [x,y] = z.
inline LieAlgebra heisenberg3() {
    LieAlgebra L(BasedSpace({"x", "y", "z"}));
    L.set_antisymmetric(0, 1, 2, Rational(1));
    return L;
}

/// Basis (a, b): [a,b] = b.
inline LieAlgebra nonabelian2() {
    LieAlgebra L(BasedSpace({"a", "b"}));
    L.set_antisymmetric(0, 1, 1, Rational(1));
    return L;
}

namespace detail {
inline Vector vec(std::initializer_list<long> xs) {
    std::vector<Rational> v;
    for (long x : xs) v.emplace_back(x);
    return Vector(std::move(v));
}
inline SubspacePair split(const LieAlgebra& L, std::vector<Vector> m, std::vector<Vector> h,
                          std::vector<std::string> ml, std::vector<std::string> hl) {
    SubspacePair p(L.space, m, h);
    p.m_labels = std::move(ml);
    p.h_labels = std::move(hl);
    return p;
}
}  // namespace detail

struct NamedLie {
    std::string name;
    LieAlgebra algebra;
    std::vector<SubspacePair> splits;  // the last one is never a coordinate split
};

/// The round-trip corpus: four algebras with at least two splits each.
inline std::vector<NamedLie> lie_corpus() {
    using detail::split;
    using detail::vec;
    std::vector<NamedLie> out;
    {
        auto L = abelian(3);
        out.push_back({"abelian3", L,
                       {split(L, {vec({1, 0, 0})}, {vec({0, 1, 0}), vec({0, 0, 1})}, {"x0"}, {"x1", "x2"}),
                        split(L, {vec({1, 0, 0}), vec({0, 1, 0})}, {vec({0, 0, 1})}, {"x0", "x1"}, {"x2"}),
                        split(L, {vec({1, 1, 0})}, {vec({0, 1, 0}), vec({0, 1, 1})}, {"x0+x1"}, {"x1", "x1+x2"})}});
    }
    {
        auto L = sl2();
        out.push_back({"sl2", L,
                       {split(L, {vec({1, 0, 0}), vec({0, 1, 0})}, {vec({0, 0, 1})}, {"e", "f"}, {"h"}),
                        split(L, {vec({1, 0, 0}), vec({0, 0, 1})}, {vec({0, 1, 0})}, {"e", "h"}, {"f"}),
                        split(L, {vec({1, 1, 0}), vec({0, 0, 1})}, {vec({1, 0, 0})}, {"e+f", "h"}, {"e"})}});
    }
    {
        auto L = heisenberg3();
        out.push_back({"heisenberg3", L,
                       {split(L, {vec({1, 0, 0}), vec({0, 1, 0})}, {vec({0, 0, 1})}, {"x", "y"}, {"z"}),
                        split(L, {vec({1, 0, 0})}, {vec({0, 1, 0}), vec({0, 0, 1})}, {"x"}, {"y", "z"}),
                        split(L, {vec({1, 1, 0}), vec({0, 0, 1})}, {vec({0, 1, 1})}, {"x+y", "z"}, {"y+z"})}});
    }
    {
        auto L = nonabelian2();
        out.push_back({"nonabelian2", L,
                       {split(L, {vec({1, 0})}, {vec({0, 1})}, {"a"}, {"b"}),
                        split(L, {vec({0, 1})}, {vec({1, 0})}, {"b"}, {"a"}),
                        split(L, {vec({1, 1})}, {vec({0, 1})}, {"a+b"}, {"b"})}});
    }
    return out;
}

struct Sl2Split {
    LieAlgebra algebra;
    SubspacePair pair;
    BicocycleSumData data;
};

/// sl2 with m = span{e, f}, h = span{h}.
inline Sl2Split sl2_split() {
    auto L = sl2();
    auto pair = detail::split(L, {detail::vec({1, 0, 0}), detail::vec({0, 1, 0})}, {detail::vec({0, 0, 1})},
                              {"e", "f"}, {"h"});
    auto data = decompose(L, pair);
    return {L, pair, data};
}

// ---------------------------------------------------------------------------
// Formal vector fields on the line, z_i = x^{i+1} d/dx, i >= -1

namespace detail {

inline long residue4(long l) { return ((l % 4) + 4) % 4; }

/// Block index k of z_l within its residue class: l = 4k, 4k+1, 4k+2 or 4k-1.
inline long block(long l) {
    switch (residue4(l)) {
        case 0: return l / 4;
        case 1: return (l - 1) / 4;
        case 2: return (l - 2) / 4;
        default: return (l + 1) / 4;
    }
}

inline std::optional<GradedTerm> term(long coef, long index) {
    if (coef == 0) return std::nullopt;
    return GradedTerm{Rational(coef), index};
}

}  // namespace detail

inline GradedLieData w1_graded(long hi = 1L << 40) {
    using detail::block;
    using detail::residue4;
    using detail::term;
    GradedLieData g;
    g.family = "w1";
    g.lo = -1;
    g.hi = hi;
    g.in_m = [](long l) { return residue4(l) == 0 || residue4(l) == 1; };
    g.bracket_fn = [](long i, long j) { return GradedTerm{Rational(j - i), i + j}; };

    g.phi = [](long i, long j) -> std::optional<GradedTerm> {
        const long k = block(i), t = block(j);
        const long ri = residue4(i), rj = residue4(j);
        if (ri == 0 && rj == 0) return term(4 * (t - k), 4 * (k + t));
        if (ri == 0 && rj == 1) return term(4 * (t - k) + 1, 4 * (k + t) + 1);
        if (ri == 1 && rj == 0) return term(-(4 * (k - t) + 1), 4 * (k + t) + 1);
        return std::nullopt;
    };
    g.theta = [](long i, long j) -> std::optional<GradedTerm> {
        const long k = block(i), t = block(j);
        if (residue4(i) == 1 && residue4(j) == 1) return term(4 * (t - k), 4 * (k + t) + 2);
        return std::nullopt;
    };
    g.mu = [](long i, long j) -> std::optional<GradedTerm> {
        const long k = block(i), t = block(j);
        if (residue4(i) == 3 && residue4(j) == 3) {
            if (t == 0 && k == 0) return std::nullopt;
            return term(4 * (t - k), 4 * (k + t - 1) + 2);
        }
        return std::nullopt;
    };
    g.gamma = [](long i, long j) -> std::optional<GradedTerm> {
        const long k = block(i), t = block(j);
        const long ri = residue4(i), rj = residue4(j);
        if (ri == 3 && rj == 2) return term(4 * (t - k) + 3, 4 * (k + t) + 1);
        if (ri == 2 && rj == 3) return term(-(4 * (k - t) + 3), 4 * (k + t) + 1);
        if (ri == 2 && rj == 2) return term(4 * (t - k), 4 * (k + t + 1));
        return std::nullopt;
    };
    g.varphi = [](long i, long j) -> std::optional<GradedTerm> {
        const long k = block(i), t = block(j);
        if (residue4(i) == 3 && residue4(j) == 1) return term(4 * (t - k) + 2, 4 * (t + k));
        return std::nullopt;
    };
    g.psi = [](long i, long j) -> std::optional<GradedTerm> {
        const long k = block(i), t = block(j);
        const long ri = residue4(i), rj = residue4(j);
        if (ri == 3 && rj == 0) return term(4 * (t - k) + 1, 4 * (t + k) - 1);
        if (ri == 2 && rj == 0) return term(4 * (t - k) - 2, 4 * (t + k) + 2);
        if (ri == 2 && rj == 1) return term(4 * (t - k) - 1, 4 * (t + k + 1) - 1);
        return std::nullopt;
    };
    return g;
}

// ---------------------------------------------------------------------------
// Finite groups

inline FiniteGroup group_from(std::vector<std::string> labels, const std::function<std::size_t(std::size_t, std::size_t)>& op,
                              std::size_t identity = 0) {
    FiniteGroup G;
    const std::size_t n = labels.size();
    G.elements = std::move(labels);
    G.identity = identity;
    G.cayley.assign(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) G.cayley[a][b] = op(a, b);
    return G;
}

inline FiniteGroup cyclic(std::size_t n) {
    std::vector<std::string> l;
    for (std::size_t i = 0; i < n; ++i) l.push_back(std::to_string(i));
    return group_from(l, [n](std::size_t a, std::size_t b) { return (a + b) % n; });
}

/// Z2 x Z3 with labels "ab".
inline FiniteGroup z2xz3() {
    std::vector<std::string> l;
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 3; ++b) l.push_back(std::to_string(a) + std::to_string(b));
    return group_from(l, [](std::size_t x, std::size_t y) {
        return ((x / 3 + y / 3) % 2) * 3 + (x % 3 + y % 3) % 3;
    });
}

/// Permutations of {1,2,3} in cycle notation; composition (pq)(i) = p(q(i)).
inline FiniteGroup s3() {
    const std::vector<std::array<int, 3>> perms = {{1, 2, 3}, {2, 1, 3}, {3, 2, 1}, {1, 3, 2}, {2, 3, 1}, {3, 1, 2}};
    const std::vector<std::string> labels = {"()", "(12)", "(13)", "(23)", "(123)", "(132)"};
    return group_from(labels, [perms](std::size_t a, std::size_t b) {
        std::array<int, 3> c{};
        for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i] - 1];
        for (std::size_t k = 0; k < perms.size(); ++k)
            if (perms[k] == c) return k;
        throw Error(ErrorKind::NotAGroup, "composition left S3");
    });
}

/// Dihedral group of order 8, elements r^a s^b with s r = r^-1 s.
inline FiniteGroup d4() {
    std::vector<std::string> l;
    for (std::size_t b = 0; b < 2; ++b)
        for (std::size_t a = 0; a < 4; ++a) {
            std::string s = a == 0 ? "" : (a == 1 ? "r" : "r" + std::to_string(a));
            if (b) s += "s";
            l.push_back(s.empty() ? "e" : s);
        }
    return group_from(l, [](std::size_t x, std::size_t y) {
        const std::size_t a = x % 4, b = x / 4, c = y % 4, d = y / 4;
        const std::size_t rot = (b ? a + 4 - c : a + c) % 4;
        return ((b + d) % 2) * 4 + rot;
    });
}

/// Quaternion group {1,-1,i,-i,j,-j,k,-k}.
inline FiniteGroup q8() {
    // unit index u in {1,i,j,k} = 0..3, sign s; element index 2u + s
    static const int table[4][4][2] = {
        {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
        {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
        {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
        {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
    };
    return group_from({"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, [](std::size_t x, std::size_t y) {
        const auto& t = table[x / 2][y / 2];
        const std::size_t sign = (x % 2 + y % 2 + static_cast<std::size_t>(t[1])) % 2;
        return static_cast<std::size_t>(t[0]) * 2 + sign;
    });
}

struct GroupSplit {
    FiniteGroup group;
    std::vector<std::size_t> M, H;
    BicocycleGroupData data;
};

inline GroupSplit group_split(FiniteGroup G, std::vector<std::size_t> M, std::vector<std::size_t> H) {
    auto d = factor_group(G, M, H);
    return {std::move(G), std::move(M), std::move(H), std::move(d)};
}

/// Z4 with M = {0,2}, H = {0,1}.
inline GroupSplit z4_group_split() { return group_split(cyclic(4), {0, 2}, {0, 1}); }
/// S3 with M = <(123)>, H = <(12)>.
inline GroupSplit s3_split() { return group_split(s3(), {0, 4, 5}, {0, 1}); }
/// Q8 with M = {1, i}, H = <j>.
inline GroupSplit q8_split() { return group_split(q8(), {0, 2}, {0, 4, 1, 5}); }

// ---------------------------------------------------------------------------
// Coalgebras and bialgebras

/// Coalgebra with every basis vector group-like; `point` is the distinguished one.
inline CoalgebraTensor grouplike_coalgebra(std::vector<std::string> labels, std::size_t point = 0) {
    const std::size_t n = labels.size();
    CoalgebraTensor C;
    C.space = BasedSpace(std::move(labels));
    C.comul = Tensor3(n, n, n);
    C.counit = Vector(n);
    for (std::size_t i = 0; i < n; ++i) {
        C.comul.at(i, i, i) = Rational(1);
        C.counit[i] = Rational(1);
    }
    if (n > 0) C.grouplike = Vector::basis(n, point);
    return C;
}

/// Group bialgebra k[G] with basis labels "g" + element label.
inline BialgebraTensor group_bialgebra(const FiniteGroup& G, const std::string& prefix = "g") {
    const std::size_t n = G.order();
    std::vector<std::string> labels;
    for (const auto& e : G.elements) labels.push_back(prefix + e);
    BialgebraTensor B;
    B.coalgebra = grouplike_coalgebra(labels, G.identity);
    B.algebra.space = B.coalgebra.space;
    B.algebra.mul = Tensor3(n, n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) B.algebra.mul.at(a, b, G.mul(a, b)) = Rational(1);
    B.algebra.unit = Vector::basis(n, G.identity);
    return B;
}

/// The group-like subcoalgebra spanned by the chosen group elements, with its
/// inclusion (columns are images in k[G]). The identity must be among them.
struct SubCoalgebra {
    CoalgebraTensor coalgebra;
    Matrix inclusion;
};

inline SubCoalgebra group_subcoalgebra(const FiniteGroup& G, const std::vector<std::size_t>& elems,
                                       const std::string& prefix = "g") {
    std::vector<std::string> labels;
    std::size_t point = elems.size();
    std::vector<Vector> cols;
    for (std::size_t k = 0; k < elems.size(); ++k) {
        labels.push_back(prefix + G.elements[elems[k]]);
        if (elems[k] == G.identity) point = k;
        cols.push_back(Vector::basis(G.order(), elems[k]));
    }
    if (point == elems.size()) throw Error(ErrorKind::PreconditionFailed, "subcoalgebra must contain the identity");
    return {grouplike_coalgebra(labels, point), Matrix::from_columns(cols, G.order())};
}

struct BialgebraSplit {
    BialgebraTensor G;
    SubCoalgebra M, H;
    BicocycleData data;
};

/// k[Z4] with M = span{g0,g2}, H = span{g0,g1}; H is not a sub-bialgebra.
inline BialgebraSplit kz4_bialgebra_split() {
    const auto Z4 = cyclic(4);
    BialgebraSplit s;
    s.G = group_bialgebra(Z4);
    s.M = group_subcoalgebra(Z4, {0, 2});
    s.H = group_subcoalgebra(Z4, {0, 1});
    s.data = factorize_bialgebra(s.G, s.M.coalgebra, s.H.coalgebra, s.M.inclusion, s.H.inclusion);
    return s;
}

/// k[G] split along group-like subsets M, H of the group.
inline BialgebraSplit group_bialgebra_split(const FiniteGroup& G, const std::vector<std::size_t>& M,
                                            const std::vector<std::size_t>& H) {
    BialgebraSplit s;
    s.G = group_bialgebra(G);
    s.M = group_subcoalgebra(G, M);
    s.H = group_subcoalgebra(G, H);
    s.data = factorize_bialgebra(s.G, s.M.coalgebra, s.H.coalgebra, s.M.inclusion, s.H.inclusion);
    return s;
}

/// k[Z4] with M = span{g0,g1} and the sub-bialgebra H = span{g0,g2} = k[Z2];
/// gamma is trivial here, so the data is a cdcp pair.
inline CdcpData kz4_cdcp() {
    return induced_cdcp(group_bialgebra_split(cyclic(4), {0, 1}, {0, 2}).data);
}

/// M = k e (one dimension), all maps forced by the normalizations.
inline CdcpData trivial_m_cdcp(const BialgebraTensor& H) {
    CdcpData d(grouplike_coalgebra({"e"}), H);
    const std::size_t dh = H.dim();
    d.phi.at(0, 0, 0) = Rational(1);
    d.theta.set_fiber(0, 0, H.algebra.unit);
    for (std::size_t h = 0; h < dh; ++h) {
        d.varphi.at(h, 0, 0) = H.coalgebra.counit[h];
        d.psi.set_fiber(h, 0, Vector::basis(dh, h));
    }
    return d;
}

/// Z2 = {h0, h1} acting on the group-likes of Z3 = {m0, m1, m2} by inversion.
inline CdcpData smash_z3_z2() {
    CdcpData d(grouplike_coalgebra({"m0", "m1", "m2"}), group_bialgebra(cyclic(2), "h"));
    for (std::size_t h = 0; h < 2; ++h)
        for (std::size_t x = 0; x < 3; ++x) {
            d.varphi.at(h, x, h == 0 ? x : (3 - x) % 3) = Rational(1);
            d.psi.at(h, x, h) = Rational(1);
        }
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 3; ++y) {
            d.phi.at(x, y, (x + y) % 3) = Rational(1);
            d.theta.at(x, y, 0) = Rational(1);
        }
    return d;
}

/// M = k with eta = id, all maps forced by the normalizations.
inline CdccData trivial_m_cdcc(const BialgebraTensor& H) {
    AlgebraTensor M;
    M.space = BasedSpace({"1"});
    M.mul = Tensor3(1, 1, 1);
    M.mul.at(0, 0, 0) = Rational(1);
    M.unit = Vector::basis(1, 0);
    M.character = Vector::basis(1, 0);
    CdccData d(M, H);
    const std::size_t dh = H.dim();
    d.nabla.set_slab(0, kron(H.algebra.unit, M.unit));
    d.delta.at(0, 0, 0) = Rational(1);
    for (std::size_t h = 0; h < dh; ++h) {
        d.blackdown.at(h, h, 0) = Rational(1);
        d.sigma.at(h, 0, 0) = H.coalgebra.counit[h];
    }
    return d;
}

/// A cdcp bialgebra dualized, with the projections dual to x |-> x (x) 1
/// and h |-> e (x) h.
struct DualPipeline {
    CdcpData source;
    BialgebraTensor built;
    BialgebraTensor dual;
    AlgebraTensor M;
    BialgebraTensor H;
    Matrix q, p;
};

inline Matrix transpose(const Matrix& A) {
    Matrix T(A.cols(), A.rows());
    for (std::size_t r = 0; r < A.rows(); ++r)
        for (std::size_t c = 0; c < A.cols(); ++c) T(c, r) = A(r, c);
    return T;
}

inline DualPipeline dual_pipeline(const CdcpData& d) {
    DualPipeline out;
    out.source = d;
    out.built = build_cdcp(d);
    out.dual = dualize(out.built);
    out.M = dual_algebra(d.M);
    out.H = dualize(d.H);
    const std::size_t dm = d.M.dim(), dh = d.H.dim();
    std::vector<Vector> icols, jcols;
    for (std::size_t x = 0; x < dm; ++x) icols.push_back(kron(Vector::basis(dm, x), d.one()));
    for (std::size_t h = 0; h < dh; ++h) jcols.push_back(kron(d.e(), Vector::basis(dh, h)));
    out.q = transpose(Matrix::from_columns(icols, dm * dh));
    out.p = transpose(Matrix::from_columns(jcols, dm * dh));
    return out;
}

/// The cdcc data of the dual of the k[Z4] cdcp fixture: M = functions on Z2
/// with eta the evaluation at the identity, H = the dual of k[Z2].
inline CdccData dual_kz4_cdcc() {
    const auto pipe = dual_pipeline(kz4_cdcp());
    return factorize_cdcc(pipe.dual, pipe.M, pipe.H, pipe.q, pipe.p);
}

}  // namespace bicross::fixtures
