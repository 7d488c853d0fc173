// Finite-dimensional coalgebras, algebras and bialgebras as coefficient
// tensors, with exact verifiers and iterated-coproduct expansion.
#pragma once

#include "bicross/kernel.hpp"
#include "bicross/report.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bicross {

/// Delta(e_i) = sum comul[i][j][k] e_j (x) e_k.
struct CoalgebraTensor {
    BasedSpace space;
    Tensor3 comul;
    Vector counit;
    std::optional<Vector> grouplike;  // distinguished group-like element, if any

    [[nodiscard]] std::size_t dim() const { return space.dim(); }
    void check_shapes() const {
        const std::size_t n = dim();
        if (comul.dim(0) != n || comul.dim(1) != n || comul.dim(2) != n || counit.size() != n ||
            (grouplike && grouplike->size() != n))
            throw Error(ErrorKind::ShapeMismatch, "coalgebra tensors do not match the space");
    }
};

/// e_i e_j = sum mul[i][j][k] e_k.
struct AlgebraTensor {
    BasedSpace space;
    Tensor3 mul;
    Vector unit;
    std::optional<Vector> character;  // distinguished algebra map to the scalars, if any

    [[nodiscard]] std::size_t dim() const { return space.dim(); }
    void check_shapes() const {
        const std::size_t n = dim();
        if (mul.dim(0) != n || mul.dim(1) != n || mul.dim(2) != n || unit.size() != n ||
            (character && character->size() != n))
            throw Error(ErrorKind::ShapeMismatch, "algebra tensors do not match the space");
    }
};

struct BialgebraTensor {
    AlgebraTensor algebra;
    CoalgebraTensor coalgebra;

    [[nodiscard]] std::size_t dim() const { return algebra.dim(); }
    void check_shapes() const {
        algebra.check_shapes();
        coalgebra.check_shapes();
        if (algebra.dim() != coalgebra.dim()) throw Error(ErrorKind::ShapeMismatch, "algebra and coalgebra differ in dimension");
    }
};

// ---------------------------------------------------------------------------
// Small tensor helpers

using Entry = std::pair<std::size_t, Rational>;

inline std::vector<Entry> nonzeros(const Vector& v) {
    std::vector<Entry> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.emplace_back(i, v[i]);
    return out;
}

struct Entry2 {
    std::size_t a, b;
    Rational c;
};

/// Nonzero entries of a flattened vector in A (x) B with |B| = db.
inline std::vector<Entry2> nonzeros2(const Vector& v, std::size_t db) {
    std::vector<Entry2> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.push_back({i / db, i % db, v[i]});
    return out;
}

/// Bilinear evaluation through a rank-3 tensor.
inline Vector apply2(const Tensor3& t, const Vector& u, const Vector& v) {
    if (u.size() != t.dim(0) || v.size() != t.dim(1)) throw Error(ErrorKind::DimensionMismatch, "bilinear arguments");
    Vector out(t.dim(2));
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j].is_zero()) continue;
            const Rational s = u[i] * v[j];
            for (std::size_t k = 0; k < t.dim(2); ++k)
                if (!t.at(i, j, k).is_zero()) out[k].add_product(s, t.at(i, j, k));
        }
    }
    return out;
}

/// Linear map V -> A (x) B stored as [i][a][b]; returns the flattened image.
inline Vector apply1(const Tensor3& t, const Vector& v) {
    if (v.size() != t.dim(0)) throw Error(ErrorKind::DimensionMismatch, "linear argument");
    Vector out(t.dim(1) * t.dim(2));
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.axpy(v[i], t.slab(i));
    return out;
}

inline Rational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot product");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s.add_product(a[i], b[i]);
    return s;
}

inline Vector mul(const AlgebraTensor& A, const Vector& u, const Vector& v) { return apply2(A.mul, u, v); }
inline Vector comul(const CoalgebraTensor& C, const Vector& v) { return apply1(C.comul, v); }

/// (a (x) b)(c (x) d) = ac (x) bd in the tensor product algebra A (x) B.
inline Vector tensor_mul(const AlgebraTensor& A, const AlgebraTensor& B, const Vector& u, const Vector& v) {
    const std::size_t db = B.dim();
    Vector out(A.dim() * db);
    for (const auto& p : nonzeros2(u, db))
        for (const auto& q : nonzeros2(v, db))
            out.axpy(p.c * q.c, kron(A.mul.fiber(p.a, q.a), B.mul.fiber(p.b, q.b)));
    return out;
}

/// Delta on A (x) B for the tensor product coalgebra, flattened as
/// ((a1 b1) (a2 b2)).
inline Vector tensor_comul(const CoalgebraTensor& A, const CoalgebraTensor& B, const Vector& v) {
    const std::size_t da = A.dim(), db = B.dim(), d = da * db;
    Vector out(d * d);
    for (const auto& p : nonzeros2(v, db))
        for (const auto& s : nonzeros2(A.comul.slab(p.a), da))
            for (const auto& t : nonzeros2(B.comul.slab(p.b), db)) {
                const std::size_t left = s.a * db + t.a, right = s.b * db + t.b;
                out[left * d + right].add_product(p.c, s.c * t.c);
            }
    return out;
}

// ---------------------------------------------------------------------------
// Iterated coproducts

struct LegTerm {
    Rational coef;
    std::vector<std::size_t> legs;
};

/// Delta^(n-1)(e_i) for n = 1..max_legs, each always expanded on the last leg.
class IteratedCoproducts {
public:
    IteratedCoproducts() = default;
    explicit IteratedCoproducts(const CoalgebraTensor& C, std::size_t max_legs = 5) : max_(max_legs) {
        const std::size_t d = C.dim();
        cache_.assign(d, std::vector<std::vector<LegTerm>>(max_legs + 1));
        for (std::size_t i = 0; i < d; ++i) {
            cache_[i][1] = {LegTerm{Rational(1), {i}}};
            for (std::size_t n = 2; n <= max_legs; ++n) {
                std::map<std::vector<std::size_t>, Rational> acc;
                for (const auto& t : cache_[i][n - 1]) {
                    const std::size_t last = t.legs.back();
                    for (std::size_t j = 0; j < d; ++j)
                        for (std::size_t k = 0; k < d; ++k) {
                            const auto& c = C.comul.at(last, j, k);
                            if (c.is_zero()) continue;
                            auto legs = t.legs;
                            legs.back() = j;
                            legs.push_back(k);
                            acc[legs] += t.coef * c;
                        }
                }
                for (auto& [legs, c] : acc)
                    if (!c.is_zero()) cache_[i][n].push_back({c, legs});
            }
        }
    }
    [[nodiscard]] const std::vector<LegTerm>& operator()(std::size_t i, std::size_t n) const {
        if (n == 0 || n > max_) throw Error(ErrorKind::IndexOutOfRange, "iterated coproduct depth");
        return cache_[i][n];
    }

private:
    std::size_t max_ = 0;
    std::vector<std::vector<std::vector<LegTerm>>> cache_;
};

// ---------------------------------------------------------------------------
// Verifiers

namespace detail {

inline std::vector<std::string> render_q(const Vector& v) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(v[i].str());
    return out;
}

inline Violation vio(std::vector<std::size_t> idx, const std::vector<std::string>& labels, const Vector& r,
                     std::string ctx = "") {
    Violation v;
    v.index = std::move(idx);
    for (auto i : v.index) v.tuple.push_back(labels[i]);
    v.residual = render_q(r);
    v.context = std::move(ctx);
    return v;
}

}  // namespace detail

inline AxiomReport verify_coalgebra(const CoalgebraTensor& C, const VerifyOptions& opt = {}) {
    C.check_shapes();
    const std::size_t n = C.dim();
    const auto& L = C.space.labels;
    AxiomReport rep;
    rep.entries.push_back(sweep("coassociativity", "(Delta x id)Delta = (id x Delta)Delta", n, opt,
                                [&](std::size_t i, std::vector<Violation>& out) {
                                    Vector left(n * n * n), right(n * n * n);
                                    for (const auto& t : nonzeros2(C.comul.slab(i), n)) {
                                        left.axpy(t.c, kron(C.comul.slab(t.a), Vector::basis(n, t.b)));
                                        right.axpy(t.c, kron(Vector::basis(n, t.a), C.comul.slab(t.b)));
                                    }
                                    if (left != right) out.push_back(detail::vio({i}, L, left - right));
                                }));
    rep.entries.push_back(sweep("counit", "(eps x id)Delta = id = (id x eps)Delta", n, opt,
                                [&](std::size_t i, std::vector<Violation>& out) {
                                    Vector l(n), r(n);
                                    for (const auto& t : nonzeros2(C.comul.slab(i), n)) {
                                        l[t.b].add_product(t.c, C.counit[t.a]);
                                        r[t.a].add_product(t.c, C.counit[t.b]);
                                    }
                                    const Vector e = Vector::basis(n, i);
                                    if (l != e) out.push_back(detail::vio({i}, L, l - e, "left"));
                                    if (r != e) out.push_back(detail::vio({i}, L, r - e, "right"));
                                }));
    if (C.grouplike) {
        const Vector& g = *C.grouplike;
        AxiomEntry e;
        e.id = "grouplike";
        e.name = "Delta(g) = g (x) g, eps(g) = 1";
        e.checked = 1;
        const Vector r = comul(C, g) - kron(g, g);
        if (!r.is_zero() || dot(C.counit, g) != Rational(1)) {
            e.holds = false;
            e.violation_count = 1;
            e.violations.push_back({{0}, {}, detail::render_q(r), "grouplike"});
        }
        rep.entries.push_back(e);
    }
    return rep;
}

inline AxiomReport verify_algebra(const AlgebraTensor& A, const VerifyOptions& opt = {}) {
    A.check_shapes();
    const std::size_t n = A.dim();
    const auto& L = A.space.labels;
    auto e = [&](std::size_t i) { return Vector::basis(n, i); };
    AxiomReport rep;
    rep.entries.push_back(sweep("associativity", "(ab)c = a(bc)", n * n * n, opt,
                                [&](std::size_t t, std::vector<Violation>& out) {
                                    const std::size_t a = t / (n * n), b = (t / n) % n, c = t % n;
                                    const Vector r = mul(A, mul(A, e(a), e(b)), e(c)) - mul(A, e(a), mul(A, e(b), e(c)));
                                    if (!r.is_zero()) out.push_back(detail::vio({a, b, c}, L, r));
                                }));
    rep.entries.push_back(sweep("unit", "1a = a = a1", n, opt, [&](std::size_t a, std::vector<Violation>& out) {
        const Vector l = mul(A, A.unit, e(a)) - e(a), r = mul(A, e(a), A.unit) - e(a);
        if (!l.is_zero()) out.push_back(detail::vio({a}, L, l, "left"));
        if (!r.is_zero()) out.push_back(detail::vio({a}, L, r, "right"));
    }));
    if (A.character) {
        const Vector& eta = *A.character;
        rep.entries.push_back(sweep("character", "eta(ab) = eta(a)eta(b), eta(1) = 1", n * n + 1, opt,
                                    [&](std::size_t t, std::vector<Violation>& out) {
                                        if (t == n * n) {
                                            if (dot(eta, A.unit) != Rational(1))
                                                out.push_back({{n, n}, {"1"}, {dot(eta, A.unit).str()}, "unit"});
                                            return;
                                        }
                                        const std::size_t a = t / n, b = t % n;
                                        const Rational r = dot(eta, mul(A, e(a), e(b))) - eta[a] * eta[b];
                                        if (!r.is_zero()) out.push_back({{a, b}, {L[a], L[b]}, {r.str()}, ""});
                                    }));
    }
    return rep;
}

inline AxiomReport verify_bialgebra(const BialgebraTensor& B, const VerifyOptions& opt = {}) {
    B.check_shapes();
    const std::size_t n = B.dim();
    const auto& A = B.algebra;
    const auto& C = B.coalgebra;
    const auto& L = A.space.labels;
    auto e = [&](std::size_t i) { return Vector::basis(n, i); };
    AxiomReport rep = verify_algebra(A, opt);
    rep.append(verify_coalgebra(C, opt));
    rep.entries.push_back(sweep("comul-multiplicative", "Delta(ab) = Delta(a)Delta(b)", n * n, opt,
                                [&](std::size_t t, std::vector<Violation>& out) {
                                    const std::size_t a = t / n, b = t % n;
                                    const Vector r = comul(C, mul(A, e(a), e(b))) -
                                                     tensor_mul(A, A, comul(C, e(a)), comul(C, e(b)));
                                    if (!r.is_zero()) out.push_back(detail::vio({a, b}, L, r));
                                }));
    rep.entries.push_back(sweep("comul-unital", "Delta(1) = 1 (x) 1", 1, opt, [&](std::size_t, std::vector<Violation>& out) {
        const Vector r = comul(C, A.unit) - kron(A.unit, A.unit);
        if (!r.is_zero()) out.push_back({{0}, {"1"}, detail::render_q(r), ""});
    }));
    rep.entries.push_back(sweep("counit-multiplicative", "eps(ab) = eps(a)eps(b)", n * n, opt,
                                [&](std::size_t t, std::vector<Violation>& out) {
                                    const std::size_t a = t / n, b = t % n;
                                    const Rational r = dot(C.counit, mul(A, e(a), e(b))) - C.counit[a] * C.counit[b];
                                    if (!r.is_zero()) out.push_back({{a, b}, {L[a], L[b]}, {r.str()}, ""});
                                }));
    rep.entries.push_back(sweep("counit-unital", "eps(1) = 1", 1, opt, [&](std::size_t, std::vector<Violation>& out) {
        const Rational r = dot(C.counit, A.unit) - Rational(1);
        if (!r.is_zero()) out.push_back({{0}, {"1"}, {r.str()}, ""});
    }));
    return rep;
}

// ---------------------------------------------------------------------------
// Duals and changes of basis

namespace detail {
inline std::string toggle_star(const std::string& s) {
    if (!s.empty() && s.back() == '*') return s.substr(0, s.size() - 1);
    return s + "*";
}
inline BasedSpace dual_space(const BasedSpace& s) {
    BasedSpace out;
    for (const auto& l : s.labels) out.labels.push_back(toggle_star(l));
    return out;
}
}  // namespace detail

/// Dual algebra of a coalgebra; the group-like becomes the character.
inline AlgebraTensor dual_algebra(const CoalgebraTensor& C) {
    const std::size_t n = C.dim();
    AlgebraTensor A;
    A.space = detail::dual_space(C.space);
    A.mul = Tensor3(n, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) A.mul.at(i, j, k) = C.comul.at(k, i, j);
    A.unit = C.counit;
    A.character = C.grouplike;
    return A;
}

/// Dual coalgebra of an algebra; the character becomes the group-like.
inline CoalgebraTensor dual_coalgebra(const AlgebraTensor& A) {
    const std::size_t n = A.dim();
    CoalgebraTensor C;
    C.space = detail::dual_space(A.space);
    C.comul = Tensor3(n, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) C.comul.at(k, i, j) = A.mul.at(i, j, k);
    C.counit = A.unit;
    C.grouplike = A.character;
    return C;
}

/// Linear dual: multiplication and comultiplication, unit and counit, and the
/// group-like and character markers trade places. An exact involution.
inline BialgebraTensor dualize(const BialgebraTensor& B) {
    B.check_shapes();
    return BialgebraTensor{dual_algebra(B.coalgebra), dual_coalgebra(B.algebra)};
}

/// B carried along the invertible map P (new coordinates = P old coordinates).
inline BialgebraTensor transport(const BialgebraTensor& B, const Matrix& P, BasedSpace labels) {
    const std::size_t n = B.dim();
    if (P.rows() != n || P.cols() != n || labels.dim() != n)
        throw Error(ErrorKind::DimensionMismatch, "transport map must be square of the bialgebra's dimension");
    const Matrix Q = invert_matrix(P);
    const Matrix PP = kron(P, P);
    BialgebraTensor out;
    out.algebra.space = labels;
    out.coalgebra.space = labels;
    out.algebra.mul = Tensor3(n, n, n);
    out.coalgebra.comul = Tensor3(n, n, n);
    out.coalgebra.counit = Vector(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vector qi = Q.column(i);
        for (std::size_t j = 0; j < n; ++j)
            out.algebra.mul.set_fiber(i, j, P.apply(mul(B.algebra, qi, Q.column(j))));
        out.coalgebra.comul.set_slab(i, PP.apply(comul(B.coalgebra, qi)));
        out.coalgebra.counit[i] = dot(B.coalgebra.counit, qi);
    }
    out.algebra.unit = P.apply(B.algebra.unit);
    if (B.coalgebra.grouplike) out.coalgebra.grouplike = P.apply(*B.coalgebra.grouplike);
    if (B.algebra.character) {
        Vector c(n);
        for (std::size_t i = 0; i < n; ++i) c[i] = dot(*B.algebra.character, Q.column(i));
        out.algebra.character = c;
    }
    return out;
}

/// Tensor equality of the structure maps (labels and markers ignored).
inline bool same_structure(const BialgebraTensor& a, const BialgebraTensor& b) {
    return a.algebra.mul == b.algebra.mul && a.algebra.unit == b.algebra.unit &&
           a.coalgebra.comul == b.coalgebra.comul && a.coalgebra.counit == b.coalgebra.counit;
}

// ---------------------------------------------------------------------------
// Morphism checks shared by the constructions

namespace detail {

/// T : A (x) B -> C given as [a][b][c]; checks Delta_C T = (T (x) T) Delta_{A(x)B}
/// and eps_C T = eps_A (x) eps_B on basis pairs.
inline void coalgebra_map_violations(const Tensor3& T, const CoalgebraTensor& CA, const CoalgebraTensor& CB,
                                     const CoalgebraTensor& CC, std::size_t a, std::size_t b, const char* name,
                                     const std::vector<std::string>& la, const std::vector<std::string>& lb,
                                     std::vector<Violation>& out) {
    const std::size_t dc = CC.dim();
    const Vector img = T.fiber(a, b);
    const Vector lhs = comul(CC, img);
    Vector rhs(dc * dc);
    for (const auto& s : nonzeros2(CA.comul.slab(a), CA.dim()))
        for (const auto& t : nonzeros2(CB.comul.slab(b), CB.dim()))
            rhs.axpy(s.c * t.c, kron(T.fiber(s.a, t.a), T.fiber(s.b, t.b)));
    if (lhs != rhs) out.push_back({{a, b}, {la[a], lb[b]}, render_q(lhs - rhs), std::string(name) + ":comul"});
    const Rational ce = dot(CC.counit, img) - CA.counit[a] * CB.counit[b];
    if (!ce.is_zero()) out.push_back({{a, b}, {la[a], lb[b]}, {ce.str()}, std::string(name) + ":counit"});
}

}  // namespace detail

}  // namespace bicross
