// Bialgebra on M (x) H from two coalgebras and six coalgebra maps, its
// conditions, and the factorization of a bialgebra through two subcoalgebras.
#pragma once

#include "bicross/quantum/core.hpp"

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace bicross {

/// Tensor layouts: varphi[h][x][x'], psi[h][x][h'], phi[x][x'][x''],
/// theta[x][x'][h], mu[h][h'][h''], gamma[h][h'][x].
struct BicocycleData {
    CoalgebraTensor M;  // grouplike e
    CoalgebraTensor H;  // grouplike 1
    Tensor3 varphi, psi, phi, theta, mu, gamma;

    BicocycleData() = default;
    BicocycleData(CoalgebraTensor m, CoalgebraTensor h) : M(std::move(m)), H(std::move(h)) {
        const std::size_t dm = M.dim(), dh = H.dim();
        varphi = Tensor3(dh, dm, dm);
        psi = Tensor3(dh, dm, dh);
        phi = Tensor3(dm, dm, dm);
        theta = Tensor3(dm, dm, dh);
        mu = Tensor3(dh, dh, dh);
        gamma = Tensor3(dh, dh, dm);
    }

    [[nodiscard]] const Vector& e() const { return *M.grouplike; }
    [[nodiscard]] const Vector& one() const { return *H.grouplike; }

    void check_shapes() const {
        M.check_shapes();
        H.check_shapes();
        if (!M.grouplike || !H.grouplike) throw Error(ErrorKind::ShapeMismatch, "M and H need distinguished group-likes");
        const std::size_t dm = M.dim(), dh = H.dim();
        auto is = [](const Tensor3& t, std::size_t a, std::size_t b, std::size_t c) {
            return t.dim(0) == a && t.dim(1) == b && t.dim(2) == c;
        };
        if (!is(varphi, dh, dm, dm) || !is(psi, dh, dm, dh) || !is(phi, dm, dm, dm) || !is(theta, dm, dm, dh) ||
            !is(mu, dh, dh, dh) || !is(gamma, dh, dh, dm))
            throw Error(ErrorKind::ShapeMismatch, "bicocycle map tensors do not match M and H");
    }
};

namespace detail {

inline std::vector<std::string> pair_labels(const BasedSpace& a, const BasedSpace& b) {
    std::vector<std::string> out;
    for (const auto& x : a.labels)
        for (const auto& y : b.labels) out.push_back(x + "|" + y);
    return out;
}

/// Tensor product coalgebra on A (x) B with group-like g (x) 1.
inline CoalgebraTensor tensor_coalgebra(const CoalgebraTensor& A, const CoalgebraTensor& B) {
    const std::size_t da = A.dim(), db = B.dim(), d = da * db;
    CoalgebraTensor C;
    C.space = BasedSpace(pair_labels(A.space, B.space));
    C.comul = Tensor3(d, d, d);
    C.counit = kron(A.counit, B.counit);
    for (std::size_t i = 0; i < d; ++i) C.comul.set_slab(i, tensor_comul(A, B, Vector::basis(d, i)));
    if (A.grouplike && B.grouplike) C.grouplike = kron(*A.grouplike, *B.grouplike);
    return C;
}

template <class F>
void for_legs(const IteratedCoproducts& I, std::size_t i, std::size_t n, F&& f) {
    for (const auto& t : I(i, n)) f(t.coef, t.legs.data());
}

inline Vector concat(std::initializer_list<Vector> parts) {
    std::vector<Rational> xs;
    for (const auto& p : parts) xs.insert(xs.end(), p.data().begin(), p.data().end());
    return Vector(std::move(xs));
}

/// All index tuples over the given space sizes, checked with one residual function.
inline AxiomEntry tuple_condition(std::string id, std::string name, const std::vector<const BasedSpace*>& spaces,
                                  const VerifyOptions& opt, const std::function<Vector(const std::size_t*)>& f) {
    std::size_t count = 1;
    for (auto* s : spaces) count *= s->dim();
    return sweep(std::move(id), std::move(name), count, opt, [&](std::size_t t, std::vector<Violation>& out) {
        std::vector<std::size_t> idx(spaces.size());
        for (std::size_t k = spaces.size(); k-- > 0;) {
            idx[k] = t % spaces[k]->dim();
            t /= spaces[k]->dim();
        }
        const Vector r = f(idx.data());
        if (r.is_zero()) return;
        Violation v;
        v.index = idx;
        for (std::size_t k = 0; k < idx.size(); ++k) v.tuple.push_back(spaces[k]->labels[idx[k]]);
        v.residual = render_q(r);
        out.push_back(std::move(v));
    });
}

struct SixMaps {
    const BicocycleData& d;
    [[nodiscard]] Vector em(std::size_t i) const { return Vector::basis(d.M.dim(), i); }
    [[nodiscard]] Vector eh(std::size_t i) const { return Vector::basis(d.H.dim(), i); }
    [[nodiscard]] Vector dot(const Vector& x, const Vector& y) const { return apply2(d.phi, x, y); }
    [[nodiscard]] Vector star(const Vector& h, const Vector& k) const { return apply2(d.mu, h, k); }
    [[nodiscard]] Vector th(const Vector& x, const Vector& y) const { return apply2(d.theta, x, y); }
    [[nodiscard]] Vector ga(const Vector& h, const Vector& k) const { return apply2(d.gamma, h, k); }
    [[nodiscard]] Vector vp(const Vector& h, const Vector& x) const { return apply2(d.varphi, h, x); }
    [[nodiscard]] Vector ps(const Vector& h, const Vector& x) const { return apply2(d.psi, h, x); }
};

}  // namespace detail

/// (x (x) h)(x' (x) h') = x1.[varphi(h1,x'1).gamma(psi(h2,x'2),h'1)]
///                        (x) [theta(x2,varphi(h3,x'3)) * psi(h4,x'4)] * h'2
inline BialgebraTensor build_bicocycle_bialgebra(const BicocycleData& d) {
    d.check_shapes();
    const std::size_t dm = d.M.dim(), dh = d.H.dim(), n = dm * dh;
    const IteratedCoproducts IM(d.M, 4), IH(d.H, 4);
    const detail::SixMaps o{d};
    BialgebraTensor B;
    B.coalgebra = detail::tensor_coalgebra(d.M, d.H);
    B.algebra.space = B.coalgebra.space;
    B.algebra.mul = Tensor3(n, n, n);
    B.algebra.unit = kron(d.e(), d.one());
    for (std::size_t x = 0; x < dm; ++x)
        for (std::size_t h = 0; h < dh; ++h)
            for (std::size_t x2 = 0; x2 < dm; ++x2)
                for (std::size_t h2 = 0; h2 < dh; ++h2) {
                    Vector acc(n);
                    detail::for_legs(IM, x, 2, [&](const Rational& ca, const std::size_t* a) {
                        detail::for_legs(IH, h, 4, [&](const Rational& cb, const std::size_t* b) {
                            detail::for_legs(IM, x2, 4, [&](const Rational& cc, const std::size_t* c) {
                                detail::for_legs(IH, h2, 2, [&](const Rational& cd, const std::size_t* k) {
                                    const Vector left =
                                        o.dot(o.em(a[0]), o.dot(o.vp(o.eh(b[0]), o.em(c[0])),
                                                                o.ga(o.ps(o.eh(b[1]), o.em(c[1])), o.eh(k[0]))));
                                    const Vector right =
                                        o.star(o.star(o.th(o.em(a[1]), o.vp(o.eh(b[2]), o.em(c[2]))),
                                                      o.ps(o.eh(b[3]), o.em(c[3]))),
                                               o.eh(k[1]));
                                    acc.axpy(ca * cb * cc * cd, kron(left, right));
                                });
                            });
                        });
                    });
                    B.algebra.mul.set_fiber(x * dh + h, x2 * dh + h2, acc);
                }
    return B;
}

/// Conditions B1..B14 and NORM. Free variables are quantified over all basis
/// values. With literal_axioms, the printed variants of B3, B7 and B10 are
/// added as B3-literal, B7-literal and B10-literal.
inline AxiomReport verify_bicocycle_conditions(const BicocycleData& d, const VerifyOptions& opt = {}) {
    d.check_shapes();
    const std::size_t dm = d.M.dim(), dh = d.H.dim();
    const IteratedCoproducts IM(d.M, 3), IH(d.H, 3);
    const detail::SixMaps o{d};
    const BasedSpace *Ms = &d.M.space, *Hs = &d.H.space;
    const Vector &e = d.e(), &one = d.one();
    using detail::for_legs;
    using P = const std::size_t*;
    using C = const Rational&;
    AxiomReport rep;
    auto cond = [&](const char* id, const char* name, std::vector<const BasedSpace*> sp,
                    std::function<Vector(const std::size_t*)> f) {
        rep.entries.push_back(detail::tuple_condition(id, name, sp, opt, f));
    };
    auto em = [&](std::size_t i) { return o.em(i); };
    auto eh = [&](std::size_t i) { return o.eh(i); };

    cond("B1", "e.x = x = x.e, 1*h = h = h*1", {Ms, Hs}, [&](P i) {
        const Vector x = em(i[0]), h = eh(i[1]);
        return detail::concat({o.dot(e, x) - x, o.dot(x, e) - x, o.star(one, h) - h, o.star(h, one) - h});
    });
    cond("B2", "theta(x,e) = eps(x)1 = theta(e,x), gamma(h,1) = eps(h)e = gamma(1,h)", {Ms, Hs}, [&](P i) {
        const Vector x = em(i[0]), h = eh(i[1]);
        Vector ex = one, eh_ = e;
        ex *= d.M.counit[i[0]];
        eh_ *= d.H.counit[i[1]];
        return detail::concat({o.th(x, e) - ex, o.th(e, x) - ex, o.ga(h, one) - eh_, o.ga(one, h) - eh_});
    });
    cond("B3", "varphi on products of M", {Hs, Ms, Ms, Hs}, [&](P i) {
        Vector r(dm);
        for_legs(IH, i[0], 2, [&](C c0, P h) {
            for_legs(IM, i[1], 3, [&](C c1, P a) {
                for_legs(IM, i[2], 3, [&](C c2, P b) {
                    r.axpy(c0 * c1 * c2,
                           o.dot(o.vp(eh(h[0]), o.dot(em(a[0]), em(b[0]))),
                                 o.ga(o.ps(eh(h[1]), o.dot(em(a[1]), em(b[1]))),
                                      o.star(o.th(em(a[2]), em(b[2])), eh(i[3])))));
                });
            });
        });
        for_legs(IH, i[0], 3, [&](C c0, P h) {
            for_legs(IM, i[1], 3, [&](C c1, P a) {
                for_legs(IM, i[2], 2, [&](C c2, P b) {
                    r.axpy(-(c0 * c1 * c2),
                           o.dot(o.vp(eh(h[0]), em(a[0])),
                                 o.dot(o.vp(o.ps(eh(h[1]), em(a[1])), em(b[0])),
                                       o.ga(o.ps(o.ps(eh(h[2]), em(a[2])), em(b[1])), eh(i[3])))));
                });
            });
        });
        return r;
    });
    cond("B4", "psi on products of M", {Hs, Ms, Ms, Hs}, [&](P i) {
        Vector r(dh);
        for_legs(IM, i[1], 2, [&](C c1, P a) {
            for_legs(IM, i[2], 2, [&](C c2, P b) {
                r.axpy(c1 * c2, o.star(o.ps(eh(i[0]), o.dot(em(a[0]), em(b[0]))),
                                       o.star(o.th(em(a[1]), em(b[1])), eh(i[3]))));
            });
        });
        for_legs(IH, i[0], 3, [&](C c0, P h) {
            for_legs(IM, i[1], 3, [&](C c1, P a) {
                for_legs(IM, i[2], 2, [&](C c2, P b) {
                    r.axpy(-(c0 * c1 * c2),
                           o.star(o.star(o.th(o.vp(eh(h[0]), em(a[0])), o.vp(o.ps(eh(h[1]), em(a[1])), em(b[0]))),
                                         o.ps(o.ps(eh(h[2]), em(a[2])), em(b[1]))),
                                  eh(i[3])));
                });
            });
        });
        return r;
    });
    cond("B5", "psi on products of H", {Ms, Hs, Hs, Ms}, [&](P i) {
        Vector r(dh);
        for_legs(IH, i[1], 3, [&](C c1, P h) {
            for_legs(IH, i[2], 3, [&](C c2, P k) {
                for_legs(IM, i[3], 2, [&](C c3, P b) {
                    r.axpy(c1 * c2 * c3, o.star(o.th(o.dot(em(i[0]), o.ga(eh(h[0]), eh(k[0]))),
                                                     o.vp(o.star(eh(h[1]), eh(k[1])), em(b[0]))),
                                                o.ps(o.star(eh(h[2]), eh(k[2])), em(b[1]))));
                });
            });
        });
        for_legs(IH, i[1], 2, [&](C c1, P h) {
            for_legs(IH, i[2], 3, [&](C c2, P k) {
                for_legs(IM, i[3], 3, [&](C c3, P b) {
                    r.axpy(-(c1 * c2 * c3),
                           o.star(o.star(o.th(em(i[0]), o.vp(eh(h[0]), o.vp(eh(k[0]), em(b[0])))),
                                         o.ps(eh(h[1]), o.vp(eh(k[1]), em(b[1])))),
                                  o.ps(eh(k[2]), em(b[2]))));
                });
            });
        });
        return r;
    });
    cond("B6", "M is a left H-module up to gamma", {Ms, Hs, Hs, Ms}, [&](P i) {
        Vector r(dm);
        for_legs(IH, i[1], 2, [&](C c1, P h) {
            for_legs(IH, i[2], 2, [&](C c2, P k) {
                r.axpy(c1 * c2, o.dot(o.dot(em(i[0]), o.ga(eh(h[0]), eh(k[0]))),
                                      o.vp(o.star(eh(h[1]), eh(k[1])), em(i[3]))));
            });
        });
        for_legs(IH, i[1], 2, [&](C c1, P h) {
            for_legs(IH, i[2], 3, [&](C c2, P k) {
                for_legs(IM, i[3], 3, [&](C c3, P b) {
                    r.axpy(-(c1 * c2 * c3),
                           o.dot(em(i[0]), o.dot(o.vp(eh(h[0]), o.vp(eh(k[0]), em(b[0]))),
                                                 o.ga(o.ps(eh(h[1]), o.vp(eh(k[1]), em(b[1]))),
                                                      o.ps(eh(k[2]), em(b[2]))))));
                });
            });
        });
        return r;
    });
    auto b7 = [&](P i, bool literal) {
        Vector r = o.dot(em(i[0]), o.dot(em(i[1]), em(i[2])));
        if (!literal) r *= d.H.counit[i[3]];
        for_legs(IM, i[0], 3, [&](C c0, P a) {
            for_legs(IM, i[1], 3, [&](C c1, P b) {
                for_legs(IM, i[2], 2, [&](C c2, P c) {
                    r.axpy(-(c0 * c1 * c2),
                           o.dot(o.dot(em(a[0]), em(b[0])),
                                 o.dot(o.vp(o.th(em(a[1]), em(b[1])), em(c[0])),
                                       o.ga(o.ps(o.th(em(a[2]), em(b[2])), em(c[1])), eh(i[3])))));
                });
            });
        });
        return r;
    };
    cond("B7", "associativity of phi up to theta", {Ms, Ms, Ms, Hs}, [&](P i) { return b7(i, false); });
    cond("B8", "cocycle condition for theta", {Ms, Ms, Ms, Hs}, [&](P i) {
        Vector r(dh);
        for_legs(IM, i[1], 2, [&](C c1, P b) {
            for_legs(IM, i[2], 2, [&](C c2, P c) {
                r.axpy(c1 * c2, o.star(o.th(em(i[0]), o.dot(em(b[0]), em(c[0]))),
                                       o.star(o.th(em(b[1]), em(c[1])), eh(i[3]))));
            });
        });
        for_legs(IM, i[0], 3, [&](C c0, P a) {
            for_legs(IM, i[1], 3, [&](C c1, P b) {
                for_legs(IM, i[2], 2, [&](C c2, P c) {
                    r.axpy(-(c0 * c1 * c2),
                           o.star(o.star(o.th(o.dot(em(a[0]), em(b[0])), o.vp(o.th(em(a[1]), em(b[1])), em(c[0]))),
                                         o.ps(o.th(em(a[2]), em(b[2])), em(c[1]))),
                                  eh(i[3])));
                });
            });
        });
        return r;
    });
    cond("B9", "cocycle condition for gamma", {Ms, Hs, Hs, Hs}, [&](P i) {
        Vector r(dm);
        for_legs(IH, i[1], 2, [&](C c1, P h) {
            for_legs(IH, i[2], 2, [&](C c2, P k) {
                r.axpy(c1 * c2, o.dot(o.dot(em(i[0]), o.ga(eh(h[0]), eh(k[0]))),
                                      o.ga(o.star(eh(h[1]), eh(k[1])), eh(i[3]))));
            });
        });
        for_legs(IH, i[1], 2, [&](C c1, P h) {
            for_legs(IH, i[2], 3, [&](C c2, P k) {
                for_legs(IH, i[3], 3, [&](C c3, P l) {
                    r.axpy(-(c1 * c2 * c3),
                           o.dot(em(i[0]), o.dot(o.vp(eh(h[0]), o.ga(eh(k[0]), eh(l[0]))),
                                                 o.ga(o.ps(eh(h[1]), o.ga(eh(k[1]), eh(l[1]))),
                                                      o.star(eh(k[2]), eh(l[2]))))));
                });
            });
        });
        return r;
    });
    auto b10 = [&](P i, bool literal) {
        Vector r = o.star(o.star(eh(i[1]), eh(i[2])), eh(i[3]));
        if (!literal) r *= d.M.counit[i[0]];
        for_legs(IH, i[1], 2, [&](C c1, P h) {
            for_legs(IH, i[2], 3, [&](C c2, P k) {
                for_legs(IH, i[3], 3, [&](C c3, P l) {
                    r.axpy(-(c1 * c2 * c3),
                           o.star(o.star(o.th(em(i[0]), o.vp(eh(h[0]), o.ga(eh(k[0]), eh(l[0])))),
                                         o.ps(eh(h[1]), o.ga(eh(k[1]), eh(l[1])))),
                                  o.star(eh(k[2]), eh(l[2]))));
                });
            });
        });
        return r;
    };
    cond("B10", "associativity of mu up to gamma", {Ms, Hs, Hs, Hs}, [&](P i) { return b10(i, false); });
    cond("B11", "psi and varphi commute with the coproduct", {Hs, Ms}, [&](P i) {
        Vector r(dh * dm);
        for_legs(IH, i[0], 2, [&](C c0, P h) {
            for_legs(IM, i[1], 2, [&](C c1, P a) {
                r.axpy(c0 * c1, kron(o.ps(eh(h[1]), em(a[1])), o.vp(eh(h[0]), em(a[0]))));
                r.axpy(-(c0 * c1), kron(o.ps(eh(h[0]), em(a[0])), o.vp(eh(h[1]), em(a[1]))));
            });
        });
        return r;
    });
    cond("B12", "theta and phi commute with the coproduct", {Ms, Ms}, [&](P i) {
        Vector r(dh * dm);
        for_legs(IM, i[0], 2, [&](C c0, P a) {
            for_legs(IM, i[1], 2, [&](C c1, P b) {
                r.axpy(c0 * c1, kron(o.th(em(a[1]), em(b[1])), o.dot(em(a[0]), em(b[0]))));
                r.axpy(-(c0 * c1), kron(o.th(em(a[0]), em(b[0])), o.dot(em(a[1]), em(b[1]))));
            });
        });
        return r;
    });
    cond("B13", "mu and gamma commute with the coproduct", {Hs, Hs}, [&](P i) {
        Vector r(dh * dm);
        for_legs(IH, i[0], 2, [&](C c0, P h) {
            for_legs(IH, i[1], 2, [&](C c1, P k) {
                r.axpy(c0 * c1, kron(o.star(eh(h[1]), eh(k[1])), o.ga(eh(h[0]), eh(k[0]))));
                r.axpy(-(c0 * c1), kron(o.star(eh(h[0]), eh(k[0])), o.ga(eh(h[1]), eh(k[1]))));
            });
        });
        return r;
    });

    struct MapSpec {
        const char* name;
        const Tensor3* t;
        const CoalgebraTensor *a, *b, *c;
    };
    const std::vector<MapSpec> maps = {{"varphi", &d.varphi, &d.H, &d.M, &d.M}, {"psi", &d.psi, &d.H, &d.M, &d.H},
                                       {"phi", &d.phi, &d.M, &d.M, &d.M},       {"theta", &d.theta, &d.M, &d.M, &d.H},
                                       {"mu", &d.mu, &d.H, &d.H, &d.H},         {"gamma", &d.gamma, &d.H, &d.H, &d.M}};
    std::vector<std::array<std::size_t, 3>> slots;
    for (std::size_t m = 0; m < maps.size(); ++m)
        for (std::size_t a = 0; a < maps[m].a->dim(); ++a)
            for (std::size_t b = 0; b < maps[m].b->dim(); ++b) slots.push_back({m, a, b});
    rep.entries.push_back(sweep("B14", "all six maps are coalgebra morphisms", slots.size(), opt,
                                [&](std::size_t t, std::vector<Violation>& out) {
                                    auto [m, a, b] = slots[t];
                                    const auto& s = maps[m];
                                    detail::coalgebra_map_violations(*s.t, *s.a, *s.b, *s.c, a, b, s.name,
                                                                     s.a->space.labels, s.b->space.labels, out);
                                }));

    rep.entries.push_back(sweep("NORM", "normalizations of the six maps", 1, opt,
                                [&](std::size_t, std::vector<Violation>& out) {
                                    auto check = [&](const char* what, const Vector& r) {
                                        if (!r.is_zero()) out.push_back({{}, {}, detail::render_q(r), what});
                                    };
                                    for (std::size_t x = 0; x < dm; ++x) {
                                        check("varphi(1,x) = x", o.vp(one, em(x)) - em(x));
                                        Vector ex = one;
                                        ex *= d.M.counit[x];
                                        check("psi(1,x) = eps(x)1", o.ps(one, em(x)) - ex);
                                    }
                                    for (std::size_t h = 0; h < dh; ++h) {
                                        check("psi(h,e) = h", o.ps(eh(h), e) - eh(h));
                                        Vector he = e;
                                        he *= d.H.counit[h];
                                        check("varphi(h,e) = eps(h)e", o.vp(eh(h), e) - he);
                                    }
                                    check("theta(e,e) = 1", o.th(e, e) - one);
                                    check("mu(1,1) = 1", o.star(one, one) - one);
                                    check("phi(e,e) = e", o.dot(e, e) - e);
                                    check("gamma(1,1) = e", o.ga(one, one) - e);
                                }));

    if (opt.literal_axioms) {
        cond("B3-literal", "printed variant of B3", {Hs, Ms, Ms, Hs, Ms}, [&](P i) {
            Vector r(dm);
            for_legs(IH, i[0], 2, [&](C c0, P h) {
                for_legs(IM, i[1], 2, [&](C c1, P a) {
                    for_legs(IM, i[2], 3, [&](C c2, P b) {
                        r.axpy(c0 * c1 * c2,
                               o.dot(o.vp(eh(h[0]), o.dot(em(a[0]), em(b[0]))),
                                     o.ga(o.ps(eh(h[1]), o.dot(em(a[1]), em(b[1]))),
                                          o.star(o.th(em(i[4]), em(b[2])), eh(i[3])))));
                    });
                });
            });
            for_legs(IH, i[0], 3, [&](C c0, P h) {
                for_legs(IM, i[1], 3, [&](C c1, P a) {
                    for_legs(IM, i[2], 2, [&](C c2, P b) {
                        r.axpy(-(c0 * c1 * c2),
                               o.dot(o.vp(eh(h[0]), em(a[0])),
                                     o.dot(o.vp(o.ps(eh(h[1]), em(a[1])), em(b[0])),
                                           o.ga(o.ps(o.ps(eh(h[2]), em(a[2])), em(b[1])), eh(i[3])))));
                    });
                });
            });
            return r;
        });
        cond("B7-literal", "printed variant of B7", {Ms, Ms, Ms, Hs}, [&](P i) { return b7(i, true); });
        cond("B10-literal", "printed variant of B10", {Ms, Hs, Hs, Hs}, [&](P i) { return b10(i, true); });
        for (const char* id : {"B3-literal", "B7-literal", "B10-literal"})
            for (auto& en : rep.entries)
                if (en.id == id) en.note = "extra-variable";
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Factorization

namespace detail {

/// Checks that the columns of `inc` define a coalgebra map C -> G.
inline void require_coalgebra_map(const Matrix& inc, const CoalgebraTensor& C, const CoalgebraTensor& G,
                                  const char* what) {
    if (inc.rows() != G.dim() || inc.cols() != C.dim())
        throw Error(ErrorKind::DimensionMismatch, std::string(what) + " has the wrong shape");
    const Matrix ii = kron(inc, inc);
    for (std::size_t a = 0; a < C.dim(); ++a) {
        const Vector img = inc.column(a);
        if (comul(G, img) != ii.apply(C.comul.slab(a)) || dot(G.counit, img) != C.counit[a])
            throw Error(ErrorKind::NotCoalgebraMap, std::string(what) + " is not a coalgebra map at " + C.space.labels[a]);
    }
}

/// (id (x) eps) and (eps (x) id) on a flattened vector of A (x) B.
inline Vector left_part(const Vector& v, std::size_t da, const Vector& eps_b) {
    Vector out(da);
    for (const auto& t : nonzeros2(v, eps_b.size())) out[t.a].add_product(t.c, eps_b[t.b]);
    return out;
}
inline Vector right_part(const Vector& v, const Vector& eps_a, std::size_t db) {
    Vector out(db);
    for (const auto& t : nonzeros2(v, db)) out[t.b].add_product(t.c, eps_a[t.a]);
    return out;
}

}  // namespace detail

/// Recovers the six maps from a bialgebra G and coalgebra embeddings
/// i : M -> G, j : H -> G (columns are images of basis vectors).
inline BicocycleData factorize_bialgebra(const BialgebraTensor& G, const CoalgebraTensor& M, const CoalgebraTensor& H,
                                         const Matrix& i, const Matrix& j) {
    G.check_shapes();
    M.check_shapes();
    H.check_shapes();
    if (!M.grouplike || !H.grouplike) throw Error(ErrorKind::PreconditionFailed, "M and H need distinguished group-likes");
    detail::require_coalgebra_map(i, M, G.coalgebra, "i");
    detail::require_coalgebra_map(j, H, G.coalgebra, "j");
    if (i.apply(*M.grouplike) != G.algebra.unit || j.apply(*H.grouplike) != G.algebra.unit)
        throw Error(ErrorKind::PreconditionFailed, "group-likes must map to the unit of G");
    const std::size_t dm = M.dim(), dh = H.dim();
    if (dm * dh != G.dim()) throw Error(ErrorKind::NotInvertible, "dim M * dim H differs from dim G");

    std::vector<Vector> cols;
    for (std::size_t x = 0; x < dm; ++x)
        for (std::size_t h = 0; h < dh; ++h) cols.push_back(mul(G.algebra, i.column(x), j.column(h)));
    Matrix inv;
    try {
        inv = invert_matrix(Matrix::from_columns(cols, G.dim()));
    } catch (const Error&) {
        throw Error(ErrorKind::NotInvertible, "multiplication restricted to M (x) H is not invertible");
    }

    BicocycleData d(M, H);
    for (std::size_t a = 0; a < dh; ++a)
        for (std::size_t b = 0; b < dm; ++b) {
            const Vector f = inv.apply(mul(G.algebra, j.column(a), i.column(b)));
            d.varphi.set_fiber(a, b, detail::left_part(f, dm, H.counit));
            d.psi.set_fiber(a, b, detail::right_part(f, M.counit, dh));
        }
    for (std::size_t a = 0; a < dm; ++a)
        for (std::size_t b = 0; b < dm; ++b) {
            const Vector g = inv.apply(mul(G.algebra, i.column(a), i.column(b)));
            d.phi.set_fiber(a, b, detail::left_part(g, dm, H.counit));
            d.theta.set_fiber(a, b, detail::right_part(g, M.counit, dh));
        }
    for (std::size_t a = 0; a < dh; ++a)
        for (std::size_t b = 0; b < dh; ++b) {
            const Vector r = inv.apply(mul(G.algebra, j.column(a), j.column(b)));
            d.gamma.set_fiber(a, b, detail::left_part(r, dm, H.counit));
            d.mu.set_fiber(a, b, detail::right_part(r, M.counit, dh));
        }
    return d;
}

/// The isomorphism M (x) H -> G, x (x) h |-> i(x) j(h), as a matrix.
inline Matrix product_map(const BialgebraTensor& G, const Matrix& i, const Matrix& j) {
    std::vector<Vector> cols;
    for (std::size_t x = 0; x < i.cols(); ++x)
        for (std::size_t h = 0; h < j.cols(); ++h) cols.push_back(mul(G.algebra, i.column(x), j.column(h)));
    return Matrix::from_columns(cols, G.dim());
}

}  // namespace bicross
