// Cocycle double cross coproduct: an algebra M with character eta and a
// bialgebra H glued into a bialgebra on M (x) H by four algebra maps.
#pragma once

#include "bicross/quantum/cdcp.hpp"

#include <array>
#include <string>
#include <vector>

namespace bicross {

/// nabla[x][h][x'] : x |-> x<-1> (x) x<0>,  blackdown[h][h'][x] : h |-> h[0] (x) h[1],
/// delta[x][x'][x''] : x |-> x(1) (x) x(2),  sigma[h][x][x'] : h |-> h^(1) (x) h^(2).
struct CdccData {
    AlgebraTensor M;  // character eta
    BialgebraTensor H;
    Tensor3 nabla, blackdown, delta, sigma;

    CdccData() = default;
    CdccData(AlgebraTensor m, BialgebraTensor h) : M(std::move(m)), H(std::move(h)) {
        const std::size_t dm = M.dim(), dh = H.dim();
        nabla = Tensor3(dm, dh, dm);
        blackdown = Tensor3(dh, dh, dm);
        delta = Tensor3(dm, dm, dm);
        sigma = Tensor3(dh, dm, dm);
    }

    [[nodiscard]] const Vector& eta() const { return *M.character; }

    void check_shapes() const {
        M.check_shapes();
        H.check_shapes();
        if (!M.character) throw Error(ErrorKind::ShapeMismatch, "M needs a distinguished character");
        const std::size_t dm = M.dim(), dh = H.dim();
        auto is = [](const Tensor3& t, std::size_t a, std::size_t b, std::size_t c) {
            return t.dim(0) == a && t.dim(1) == b && t.dim(2) == c;
        };
        if (!is(nabla, dm, dh, dm) || !is(blackdown, dh, dh, dm) || !is(delta, dm, dm, dm) || !is(sigma, dh, dm, dm))
            throw Error(ErrorKind::ShapeMismatch, "cdcc map tensors do not match M and H");
    }
};

namespace detail {

struct CoMaps {
    const CdccData& d;
    std::size_t dm, dh;
    explicit CoMaps(const CdccData& data) : d(data), dm(data.M.dim()), dh(data.H.dim()) {}

    [[nodiscard]] std::vector<Entry2> nab(std::size_t x) const { return nonzeros2(d.nabla.slab(x), dm); }
    [[nodiscard]] std::vector<Entry2> blk(std::size_t h) const { return nonzeros2(d.blackdown.slab(h), dm); }
    [[nodiscard]] std::vector<Entry2> del(std::size_t x) const { return nonzeros2(d.delta.slab(x), dm); }
    [[nodiscard]] std::vector<Entry2> sig(std::size_t h) const { return nonzeros2(d.sigma.slab(h), dm); }
    [[nodiscard]] std::vector<Entry2> hco(std::size_t h) const { return nonzeros2(d.H.coalgebra.comul.slab(h), dh); }

    [[nodiscard]] Vector em(std::size_t i) const { return Vector::basis(dm, i); }
    [[nodiscard]] Vector eh(std::size_t i) const { return Vector::basis(dh, i); }
    [[nodiscard]] Vector mm(const Vector& a, const Vector& b) const { return apply2(d.M.mul, a, b); }
    [[nodiscard]] Vector hm(const Vector& a, const Vector& b) const { return apply2(d.H.algebra.mul, a, b); }
    [[nodiscard]] Vector mm(std::size_t a, std::size_t b) const { return d.M.mul.fiber(a, b); }
    [[nodiscard]] Vector hm(std::size_t a, std::size_t b) const { return d.H.algebra.mul.fiber(a, b); }
};

inline Vector kron3(const Vector& a, const Vector& b, const Vector& c) { return kron(kron(a, b), c); }

}  // namespace detail

/// Tensor product algebra on M (x) H with
/// Delta(x (x) h) = (x(1) h1^(1) (x) x(2)<-1> h1^(2)<-1> h2[0])
///                  (x) (x(2)<0> h1^(2)<0> h2[1] (x) h3),
/// counit eta (x) eps.
inline BialgebraTensor build_cdcc(const CdccData& d) {
    d.check_shapes();
    const std::size_t dm = d.M.dim(), dh = d.H.dim(), n = dm * dh;
    const detail::CoMaps o(d);
    const IteratedCoproducts IH(d.H.coalgebra, 3);
    BialgebraTensor B;
    B.algebra.space = BasedSpace(detail::pair_labels(d.M.space, d.H.algebra.space));
    B.coalgebra.space = B.algebra.space;
    B.algebra.mul = Tensor3(n, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            B.algebra.mul.set_fiber(i, j, tensor_mul(d.M, d.H.algebra, Vector::basis(n, i), Vector::basis(n, j)));
    B.algebra.unit = kron(d.M.unit, d.H.algebra.unit);
    B.algebra.character = kron(d.eta(), d.H.coalgebra.counit);
    B.coalgebra.counit = kron(d.eta(), d.H.coalgebra.counit);
    B.coalgebra.grouplike = B.algebra.unit;
    B.coalgebra.comul = Tensor3(n, n, n);
    for (std::size_t x = 0; x < dm; ++x)
        for (std::size_t h = 0; h < dh; ++h) {
            Vector acc(n * n);
            for (const auto& dx : o.del(x))
                for (const auto& nb : o.nab(dx.b))
                    detail::for_legs(IH, h, 3, [&](const Rational& c3, const std::size_t* hl) {
                        for (const auto& sg : o.sig(hl[0]))
                            for (const auto& nt : o.nab(sg.b))
                                for (const auto& bd : o.blk(hl[1])) {
                                    const Vector m1 = o.mm(dx.a, sg.a);
                                    const Vector h1 = o.hm(o.hm(o.eh(nb.a), o.eh(nt.a)), o.eh(bd.a));
                                    const Vector m2 = o.mm(o.mm(o.em(nb.b), o.em(nt.b)), o.em(bd.b));
                                    acc.axpy(dx.c * nb.c * c3 * sg.c * nt.c * bd.c,
                                             kron(kron(m1, h1), kron(m2, o.eh(hl[2]))));
                                }
                    });
            B.coalgebra.comul.set_slab(x * dh + h, acc);
        }
    return B;
}

/// Conditions D1..D11, NORM, and the structure of M and H.
inline AxiomReport verify_cdcc_conditions(const CdccData& d, const VerifyOptions& opt = {}) {
    d.check_shapes();
    const std::size_t dm = d.M.dim(), dh = d.H.dim();
    const detail::CoMaps o(d);
    const Vector& eta = d.eta();
    const Vector& eps = d.H.coalgebra.counit;
    const Vector &one_m = d.M.unit, &one_h = d.H.algebra.unit;
    const BasedSpace *Ms = &d.M.space, *Hs = &d.H.algebra.space;
    using detail::kron3;
    using P = const std::size_t*;
    AxiomReport rep;
    auto cond = [&](const char* id, const char* name, std::vector<const BasedSpace*> sp,
                    std::function<Vector(const std::size_t*)> f) {
        rep.entries.push_back(detail::tuple_condition(id, name, sp, opt, f));
    };
    auto em = [&](std::size_t i) { return o.em(i); };
    auto eh = [&](std::size_t i) { return o.eh(i); };

    cond("D1", "eta(x(1))x(2) = x = x(1)eta(x(2))", {Ms}, [&](P i) {
        Vector l(dm), r(dm);
        for (const auto& t : o.del(i[0])) {
            l[t.b].add_product(t.c, eta[t.a]);
            r[t.a].add_product(t.c, eta[t.b]);
        }
        return detail::concat({l - em(i[0]), r - em(i[0])});
    });
    cond("D2", "eta(h^(1))h^(2) = eps(h)1 = h^(1)eta(h^(2))", {Hs}, [&](P i) {
        Vector l(dm), r(dm), want = one_m;
        want *= eps[i[0]];
        for (const auto& t : o.sig(i[0])) {
            l[t.b].add_product(t.c, eta[t.a]);
            r[t.a].add_product(t.c, eta[t.b]);
        }
        return detail::concat({l - want, r - want});
    });
    cond("D3", "M is a left H-comodule", {Ms}, [&](P i) {
        Vector co(dh * dh * dm), un(dm);
        for (const auto& t : o.nab(i[0])) {
            for (const auto& s : o.hco(t.a)) co.axpy(t.c * s.c, kron3(eh(s.a), eh(s.b), em(t.b)));
            for (const auto& s : o.nab(t.b)) co.axpy(-(t.c * s.c), kron3(eh(t.a), eh(s.a), em(s.b)));
            un[t.b].add_product(t.c, eps[t.a]);
        }
        return detail::concat({co, un - em(i[0])});
    });
    cond("D4", "coassociativity of delta up to sigma", {Ms}, [&](P i) {
        Vector r(dm * dm * dm);
        for (const auto& t : o.del(i[0])) {
            for (const auto& s : o.del(t.b)) r.axpy(t.c * s.c, kron3(em(t.a), em(s.a), em(s.b)));
            for (const auto& a : o.del(t.a))
                for (const auto& nb : o.nab(t.b))
                    for (const auto& sg : o.sig(nb.a))
                        r.axpy(-(t.c * a.c * nb.c * sg.c), kron3(o.mm(a.a, sg.a), o.mm(a.b, sg.b), em(nb.b)));
        }
        return r;
    });
    cond("D5", "the coaction against delta", {Ms}, [&](P i) {
        Vector r(dh * dm * dm);
        for (const auto& t : o.nab(i[0]))
            for (const auto& s : o.del(t.b)) r.axpy(t.c * s.c, kron3(eh(t.a), em(s.a), em(s.b)));
        for (const auto& t : o.del(i[0]))
            for (const auto& n1 : o.nab(t.a))
                for (const auto& n2 : o.nab(t.b))
                    for (const auto& bd : o.blk(n2.a))
                        r.axpy(-(t.c * n1.c * n2.c * bd.c), kron3(o.hm(n1.a, bd.a), o.mm(n1.b, bd.b), em(n2.b)));
        return r;
    });
    cond("D6", "sigma against delta and the coaction", {Hs}, [&](P i) {
        Vector r(dm * dm * dm);
        for (const auto& hc : o.hco(i[0])) {
            for (const auto& s1 : o.sig(hc.a))
                for (const auto& dt : o.del(s1.b))
                    for (const auto& s2 : o.sig(hc.b))
                        r.axpy(hc.c * s1.c * dt.c * s2.c, kron3(em(s1.a), o.mm(dt.a, s2.a), o.mm(dt.b, s2.b)));
            for (const auto& s1 : o.sig(hc.a))
                for (const auto& ds : o.del(s1.a))
                    for (const auto& nb : o.nab(s1.b))
                        for (const auto& sp : o.sig(nb.a))
                            for (const auto& bd : o.blk(hc.b))
                                for (const auto& sw : o.sig(bd.a))
                                    r.axpy(-(hc.c * s1.c * ds.c * nb.c * sp.c * bd.c * sw.c),
                                           kron3(o.mm(o.mm(em(ds.a), em(sp.a)), em(sw.a)),
                                                 o.mm(o.mm(em(ds.b), em(sp.b)), em(sw.b)), o.mm(nb.b, bd.b)));
        }
        return r;
    });
    cond("D7", "blackdown against delta and sigma", {Hs}, [&](P i) {
        Vector r(dh * dm * dm);
        for (const auto& hc : o.hco(i[0])) {
            for (const auto& bd : o.blk(hc.a))
                for (const auto& dz : o.del(bd.b))
                    for (const auto& sg : o.sig(hc.b))
                        r.axpy(hc.c * bd.c * dz.c * sg.c, kron3(eh(bd.a), o.mm(dz.a, sg.a), o.mm(dz.b, sg.b)));
            for (const auto& sg : o.sig(hc.a))
                for (const auto& n1 : o.nab(sg.a))
                    for (const auto& n2 : o.nab(sg.b))
                        for (const auto& b1 : o.blk(n2.a))
                            for (const auto& b2 : o.blk(hc.b))
                                for (const auto& b3 : o.blk(b2.a))
                                    r.axpy(-(hc.c * sg.c * n1.c * n2.c * b1.c * b2.c * b3.c),
                                           kron3(o.hm(o.hm(eh(n1.a), eh(b1.a)), eh(b3.a)),
                                                 o.mm(o.mm(em(n1.b), em(b1.b)), em(b3.b)), o.mm(n2.b, b2.b)));
        }
        return r;
    });
    cond("D8", "blackdown against the coproduct of H", {Hs}, [&](P i) {
        Vector r(dh * dh * dm);
        for (const auto& hc : o.hco(i[0]))
            for (const auto& b1 : o.blk(hc.a))
                for (const auto& nb : o.nab(b1.b))
                    for (const auto& b2 : o.blk(hc.b))
                        r.axpy(hc.c * b1.c * nb.c * b2.c, kron3(eh(b1.a), o.hm(nb.a, b2.a), o.mm(nb.b, b2.b)));
        for (const auto& bd : o.blk(i[0]))
            for (const auto& w : o.hco(bd.a)) r.axpy(-(bd.c * w.c), kron3(eh(w.a), eh(w.b), em(bd.b)));
        return r;
    });
    cond("D9", "x<-1>h[0] (x) x<0>h[1] = h[0]x<-1> (x) h[1]x<0>", {Ms, Hs}, [&](P i) {
        Vector r(dh * dm);
        for (const auto& nb : o.nab(i[0]))
            for (const auto& bd : o.blk(i[1])) {
                r.axpy(nb.c * bd.c, kron(o.hm(nb.a, bd.a), o.mm(nb.b, bd.b)));
                r.axpy(-(nb.c * bd.c), kron(o.hm(bd.a, nb.a), o.mm(bd.b, nb.b)));
            }
        return r;
    });
    cond("D10", "h^(1)x(1) (x) h^(2)x(2) = x(1)h^(1) (x) x(2)h^(2)", {Hs, Ms}, [&](P i) {
        Vector r(dm * dm);
        for (const auto& sg : o.sig(i[0]))
            for (const auto& dx : o.del(i[1])) {
                r.axpy(sg.c * dx.c, kron(o.mm(sg.a, dx.a), o.mm(sg.b, dx.b)));
                r.axpy(-(sg.c * dx.c), kron(o.mm(dx.a, sg.a), o.mm(dx.b, sg.b)));
            }
        return r;
    });

    // D11: each map is multiplicative and unital.
    struct AlgMap {
        const char* name;
        const Tensor3* t;
        const AlgebraTensor* src;
        const AlgebraTensor *a, *b;
    };
    const std::vector<AlgMap> maps = {{"nabla", &d.nabla, &d.M, &d.H.algebra, &d.M},
                                      {"blackdown", &d.blackdown, &d.H.algebra, &d.H.algebra, &d.M},
                                      {"delta", &d.delta, &d.M, &d.M, &d.M},
                                      {"sigma", &d.sigma, &d.H.algebra, &d.M, &d.M}};
    std::vector<std::array<std::size_t, 3>> slots;
    for (std::size_t m = 0; m < maps.size(); ++m) {
        const std::size_t s = maps[m].src->dim();
        for (std::size_t a = 0; a < s; ++a)
            for (std::size_t b = 0; b < s; ++b) slots.push_back({m, a, b});
        slots.push_back({m, s, s});  // unit
    }
    rep.entries.push_back(sweep("D11", "nabla, blackdown, delta, sigma are algebra maps", slots.size(), opt,
                                [&](std::size_t t, std::vector<Violation>& out) {
                                    auto [m, a, b] = slots[t];
                                    const auto& s = maps[m];
                                    const std::size_t n = s.src->dim();
                                    const auto& L = s.src->space.labels;
                                    if (a == n) {
                                        const Vector r = apply1(*s.t, s.src->unit) - kron(s.a->unit, s.b->unit);
                                        if (!r.is_zero())
                                            out.push_back({{m, n, n}, {"1"}, detail::render_q(r), std::string(s.name) + ":unit"});
                                        return;
                                    }
                                    const Vector r = apply1(*s.t, s.src->mul.fiber(a, b)) -
                                                     tensor_mul(*s.a, *s.b, s.t->slab(a), s.t->slab(b));
                                    if (!r.is_zero())
                                        out.push_back({{m, a, b}, {L[a], L[b]}, detail::render_q(r), s.name});
                                }));
    rep.entries.push_back(sweep("NORM", "counital normalizations of the four maps", 1, opt,
                                [&](std::size_t, std::vector<Violation>& out) {
                                    auto check = [&](const std::string& what, const Vector& r) {
                                        if (!r.is_zero()) out.push_back({{}, {}, detail::render_q(r), what});
                                    };
                                    for (std::size_t x = 0; x < dm; ++x) {
                                        Vector a(dm), b(dh), want = one_h;
                                        want *= eta[x];
                                        for (const auto& t : o.nab(x)) {
                                            a[t.b].add_product(t.c, eps[t.a]);
                                            b[t.a].add_product(t.c, eta[t.b]);
                                        }
                                        check("eps(x<-1>)x<0> = x at " + d.M.space.labels[x], a - em(x));
                                        check("x<-1>eta(x<0>) = eta(x)1 at " + d.M.space.labels[x], b - want);
                                    }
                                    for (std::size_t h = 0; h < dh; ++h) {
                                        Vector a(dh), b(dm), want = one_m;
                                        want *= eps[h];
                                        Rational s;
                                        for (const auto& t : o.blk(h)) {
                                            a[t.a].add_product(t.c, eta[t.b]);
                                            b[t.b].add_product(t.c, eps[t.a]);
                                        }
                                        for (const auto& t : o.sig(h)) s.add_product(t.c, eta[t.a] * eta[t.b]);
                                        const auto& lab = d.H.algebra.space.labels[h];
                                        check("h[0]eta(h[1]) = h at " + lab, a - eh(h));
                                        check("eps(h[0])h[1] = eps(h)1 at " + lab, b - want);
                                        if (s != eps[h])
                                            check("eta(h^(1))eta(h^(2)) = eps(h) at " + lab,
                                                  Vector(std::vector<Rational>{s - eps[h]}));
                                    }
                                }));
    rep.entries.push_back(detail::summary_entry("M-algebra", "M is an algebra with character", verify_algebra(d.M, opt)));
    rep.entries.push_back(detail::summary_entry("H-bialgebra", "H is a bialgebra", verify_bialgebra(d.H, opt)));
    return rep;
}

// ---------------------------------------------------------------------------
// Factorization

/// Recovers (nabla, blackdown, delta, sigma) from a bialgebra L and algebra
/// projections q : L -> M, p : L -> H (rows index the target basis).
inline CdccData factorize_cdcc(const BialgebraTensor& L, const AlgebraTensor& M, const BialgebraTensor& H,
                               const Matrix& q, const Matrix& p) {
    L.check_shapes();
    M.check_shapes();
    H.check_shapes();
    if (!M.character) throw Error(ErrorKind::PreconditionFailed, "M needs a distinguished character");
    const std::size_t n = L.dim(), dm = M.dim(), dh = H.dim();
    if (q.rows() != dm || q.cols() != n || p.rows() != dh || p.cols() != n)
        throw Error(ErrorKind::DimensionMismatch, "projection shapes");
    auto require_algebra_map = [&](const Matrix& f, const AlgebraTensor& T, const char* what) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (f.apply(L.algebra.mul.fiber(a, b)) != mul(T, f.column(a), f.column(b)))
                    throw Error(ErrorKind::NotAlgebraMap, std::string(what) + " is not multiplicative");
        if (f.apply(L.algebra.unit) != T.unit) throw Error(ErrorKind::NotAlgebraMap, std::string(what) + " is not unital");
    };
    require_algebra_map(q, M, "q");
    require_algebra_map(p, H.algebra, "p");
    detail::require_coalgebra_map(p, L.coalgebra, H.coalgebra, "p");

    const Matrix qp = kron(q, p), pq = kron(p, q), qq = kron(q, q);
    std::vector<Vector> cols;
    for (std::size_t l = 0; l < n; ++l) cols.push_back(qp.apply(L.coalgebra.comul.slab(l)));
    Matrix inv;
    try {
        inv = invert_matrix(Matrix::from_columns(cols, dm * dh));
    } catch (const Error&) {
        throw Error(ErrorKind::NotInvertible, "(q (x) p) Delta is not invertible");
    }
    auto F = [&](const Vector& v) { return pq.apply(comul(L.coalgebra, inv.apply(v))); };
    auto G = [&](const Vector& v) { return qq.apply(comul(L.coalgebra, inv.apply(v))); };

    CdccData d(M, H);
    for (std::size_t x = 0; x < dm; ++x) {
        const Vector x1 = kron(Vector::basis(dm, x), H.algebra.unit);
        d.nabla.set_slab(x, F(x1));
        d.delta.set_slab(x, G(x1));
    }
    for (std::size_t h = 0; h < dh; ++h) {
        const Vector h1 = kron(M.unit, Vector::basis(dh, h));
        d.blackdown.set_slab(h, F(h1));
        d.sigma.set_slab(h, G(h1));
    }
    return d;
}

/// The isomorphism L -> M (x) H, (q (x) p) Delta, as a matrix.
inline Matrix coproduct_map(const BialgebraTensor& L, const Matrix& q, const Matrix& p) {
    const Matrix qp = kron(q, p);
    std::vector<Vector> cols;
    for (std::size_t l = 0; l < L.dim(); ++l) cols.push_back(qp.apply(L.coalgebra.comul.slab(l)));
    return Matrix::from_columns(cols, q.rows() * p.rows());
}

}  // namespace bicross
