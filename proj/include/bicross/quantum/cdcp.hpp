// Cocycle double cross product: a coalgebra M with group-like e and a
// bialgebra H glued into a bialgebra on M (x) H by four coalgebra maps.
#pragma once

#include "bicross/quantum/bicocycle.hpp"

#include <array>
#include <string>
#include <vector>

namespace bicross {

/// varphi[h][x][x'] (the action h |> x), psi[h][x][h'], phi[x][x'][x''],
/// theta[x][x'][h].
struct CdcpData {
    CoalgebraTensor M;  // grouplike e
    BialgebraTensor H;
    Tensor3 varphi, psi, phi, theta;

    CdcpData() = default;
    CdcpData(CoalgebraTensor m, BialgebraTensor h) : M(std::move(m)), H(std::move(h)) {
        const std::size_t dm = M.dim(), dh = H.dim();
        varphi = Tensor3(dh, dm, dm);
        psi = Tensor3(dh, dm, dh);
        phi = Tensor3(dm, dm, dm);
        theta = Tensor3(dm, dm, dh);
    }

    [[nodiscard]] const Vector& e() const { return *M.grouplike; }
    [[nodiscard]] const Vector& one() const { return H.algebra.unit; }

    void check_shapes() const {
        M.check_shapes();
        H.check_shapes();
        if (!M.grouplike) throw Error(ErrorKind::ShapeMismatch, "M needs a distinguished group-like");
        const std::size_t dm = M.dim(), dh = H.dim();
        auto is = [](const Tensor3& t, std::size_t a, std::size_t b, std::size_t c) {
            return t.dim(0) == a && t.dim(1) == b && t.dim(2) == c;
        };
        if (!is(varphi, dh, dm, dm) || !is(psi, dh, dm, dh) || !is(phi, dm, dm, dm) || !is(theta, dm, dm, dh))
            throw Error(ErrorKind::ShapeMismatch, "cdcp map tensors do not match M and H");
    }
};

namespace detail {

struct FourMaps {
    const CdcpData& d;
    [[nodiscard]] Vector em(std::size_t i) const { return Vector::basis(d.M.dim(), i); }
    [[nodiscard]] Vector eh(std::size_t i) const { return Vector::basis(d.H.dim(), i); }
    [[nodiscard]] Vector dot(const Vector& x, const Vector& y) const { return apply2(d.phi, x, y); }
    [[nodiscard]] Vector hm(const Vector& h, const Vector& k) const { return apply2(d.H.algebra.mul, h, k); }
    [[nodiscard]] Vector th(const Vector& x, const Vector& y) const { return apply2(d.theta, x, y); }
    [[nodiscard]] Vector act(const Vector& h, const Vector& x) const { return apply2(d.varphi, h, x); }
    [[nodiscard]] Vector ps(const Vector& h, const Vector& x) const { return apply2(d.psi, h, x); }
};

/// One entry summarizing a sub-report; failing sub-ids become violations.
inline AxiomEntry summary_entry(std::string id, std::string name, const AxiomReport& sub) {
    AxiomEntry e;
    e.id = std::move(id);
    e.name = std::move(name);
    e.checked = sub.entries.size();
    for (const auto& s : sub.entries)
        if (!s.holds) e.violations.push_back({{}, {}, {}, s.id});
    e.violation_count = e.violations.size();
    e.holds = e.violations.empty();
    return e;
}

}  // namespace detail

/// (x (x) h)(x' (x) h') = x1.(h1 |> x'1) (x) theta(x2, h2 |> x'2) psi(h3, x'3) h'
inline BialgebraTensor build_cdcp(const CdcpData& d) {
    d.check_shapes();
    const std::size_t dm = d.M.dim(), dh = d.H.dim(), n = dm * dh;
    const IteratedCoproducts IM(d.M, 3), IH(d.H.coalgebra, 3);
    const detail::FourMaps o{d};
    BialgebraTensor B;
    B.coalgebra = detail::tensor_coalgebra(d.M, d.H.coalgebra);
    B.coalgebra.grouplike = kron(d.e(), d.one());
    B.algebra.space = B.coalgebra.space;
    B.algebra.mul = Tensor3(n, n, n);
    B.algebra.unit = kron(d.e(), d.one());
    for (std::size_t x = 0; x < dm; ++x)
        for (std::size_t h = 0; h < dh; ++h)
            for (std::size_t x2 = 0; x2 < dm; ++x2)
                for (std::size_t h2 = 0; h2 < dh; ++h2) {
                    Vector acc(n);
                    detail::for_legs(IM, x, 2, [&](const Rational& ca, const std::size_t* a) {
                        detail::for_legs(IH, h, 3, [&](const Rational& cb, const std::size_t* b) {
                            detail::for_legs(IM, x2, 3, [&](const Rational& cc, const std::size_t* c) {
                                const Vector left = o.dot(o.em(a[0]), o.act(o.eh(b[0]), o.em(c[0])));
                                const Vector right = o.hm(o.hm(o.th(o.em(a[1]), o.act(o.eh(b[1]), o.em(c[1]))),
                                                               o.ps(o.eh(b[2]), o.em(c[2]))),
                                                          o.eh(h2));
                                acc.axpy(ca * cb * cc, kron(left, right));
                            });
                        });
                    });
                    B.algebra.mul.set_fiber(x * dh + h, x2 * dh + h2, acc);
                }
    return B;
}

/// Conditions C1..C10, the coalgebra-map property (C11), NORM and the
/// bialgebra axioms of H.
inline AxiomReport verify_cdcp_conditions(const CdcpData& d, const VerifyOptions& opt = {}) {
    d.check_shapes();
    const std::size_t dm = d.M.dim(), dh = d.H.dim();
    const IteratedCoproducts IM(d.M, 3), IH(d.H.coalgebra, 3);
    const detail::FourMaps o{d};
    const BasedSpace *Ms = &d.M.space, *Hs = &d.H.algebra.space;
    const Vector &e = d.e(), &one = d.one();
    const Vector& eps_h = d.H.coalgebra.counit;
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

    cond("C1", "e.x = x = x.e", {Ms}, [&](P i) {
        const Vector x = em(i[0]);
        return detail::concat({o.dot(e, x) - x, o.dot(x, e) - x});
    });
    cond("C2", "theta(x,e) = eps(x)1 = theta(e,x)", {Ms}, [&](P i) {
        const Vector x = em(i[0]);
        Vector ex = one;
        ex *= d.M.counit[i[0]];
        return detail::concat({o.th(x, e) - ex, o.th(e, x) - ex});
    });
    cond("C3", "h |> (x.x') = (h1 |> x1).(psi(h2,x2) |> x')", {Hs, Ms, Ms}, [&](P i) {
        Vector r = o.act(eh(i[0]), o.dot(em(i[1]), em(i[2])));
        for_legs(IH, i[0], 2, [&](C c0, P h) {
            for_legs(IM, i[1], 2, [&](C c1, P a) {
                r.axpy(-(c0 * c1), o.dot(o.act(eh(h[0]), em(a[0])), o.act(o.ps(eh(h[1]), em(a[1])), em(i[2]))));
            });
        });
        return r;
    });
    cond("C4", "psi on products of M against theta", {Hs, Ms, Ms}, [&](P i) {
        Vector r(dh);
        for_legs(IM, i[1], 2, [&](C c1, P a) {
            for_legs(IM, i[2], 2, [&](C c2, P b) {
                r.axpy(c1 * c2, o.hm(o.ps(eh(i[0]), o.dot(em(a[0]), em(b[0]))), o.th(em(a[1]), em(b[1]))));
            });
        });
        for_legs(IH, i[0], 3, [&](C c0, P h) {
            for_legs(IM, i[1], 3, [&](C c1, P a) {
                for_legs(IM, i[2], 2, [&](C c2, P b) {
                    r.axpy(-(c0 * c1 * c2), o.hm(o.th(o.act(eh(h[0]), em(a[0])), o.act(o.ps(eh(h[1]), em(a[1])), em(b[0]))),
                                                 o.ps(o.ps(eh(h[2]), em(a[2])), em(b[1]))));
                });
            });
        });
        return r;
    });
    cond("C5", "psi(hh',x) = psi(h, h'1 |> x1) psi(h'2, x2)", {Hs, Hs, Ms}, [&](P i) {
        Vector r = o.ps(o.hm(eh(i[0]), eh(i[1])), em(i[2]));
        for_legs(IH, i[1], 2, [&](C c1, P k) {
            for_legs(IM, i[2], 2, [&](C c2, P a) {
                r.axpy(-(c1 * c2), o.hm(o.ps(eh(i[0]), o.act(eh(k[0]), em(a[0]))), o.ps(eh(k[1]), em(a[1]))));
            });
        });
        return r;
    });
    cond("C6", "M is a left H-module", {Hs, Hs, Ms}, [&](P i) {
        const Vector x = em(i[2]);
        return detail::concat({o.act(o.hm(eh(i[0]), eh(i[1])), x) - o.act(eh(i[0]), o.act(eh(i[1]), x)),
                               o.act(one, x) - x});
    });
    cond("C7", "associativity of phi up to theta", {Ms, Ms, Ms}, [&](P i) {
        Vector r = o.dot(em(i[0]), o.dot(em(i[1]), em(i[2])));
        for_legs(IM, i[0], 2, [&](C c0, P a) {
            for_legs(IM, i[1], 2, [&](C c1, P b) {
                r.axpy(-(c0 * c1), o.dot(o.dot(em(a[0]), em(b[0])), o.act(o.th(em(a[1]), em(b[1])), em(i[2]))));
            });
        });
        return r;
    });
    cond("C8", "cocycle condition for theta", {Ms, Ms, Ms}, [&](P i) {
        Vector r(dh);
        for_legs(IM, i[1], 2, [&](C c1, P b) {
            for_legs(IM, i[2], 2, [&](C c2, P c) {
                r.axpy(c1 * c2, o.hm(o.th(em(i[0]), o.dot(em(b[0]), em(c[0]))), o.th(em(b[1]), em(c[1]))));
            });
        });
        for_legs(IM, i[0], 3, [&](C c0, P a) {
            for_legs(IM, i[1], 3, [&](C c1, P b) {
                for_legs(IM, i[2], 2, [&](C c2, P c) {
                    r.axpy(-(c0 * c1 * c2),
                           o.hm(o.th(o.dot(em(a[0]), em(b[0])), o.act(o.th(em(a[1]), em(b[1])), em(c[0]))),
                                o.ps(o.th(em(a[2]), em(b[2])), em(c[1]))));
                });
            });
        });
        return r;
    });
    cond("C9", "psi and the action commute with the coproduct", {Hs, Ms}, [&](P i) {
        Vector r(dh * dm);
        for_legs(IH, i[0], 2, [&](C c0, P h) {
            for_legs(IM, i[1], 2, [&](C c1, P a) {
                r.axpy(c0 * c1, kron(o.ps(eh(h[1]), em(a[1])), o.act(eh(h[0]), em(a[0]))));
                r.axpy(-(c0 * c1), kron(o.ps(eh(h[0]), em(a[0])), o.act(eh(h[1]), em(a[1]))));
            });
        });
        return r;
    });
    cond("C10", "theta and phi commute with the coproduct", {Ms, Ms}, [&](P i) {
        Vector r(dh * dm);
        for_legs(IM, i[0], 2, [&](C c0, P a) {
            for_legs(IM, i[1], 2, [&](C c1, P b) {
                r.axpy(c0 * c1, kron(o.th(em(a[1]), em(b[1])), o.dot(em(a[0]), em(b[0]))));
                r.axpy(-(c0 * c1), kron(o.th(em(a[0]), em(b[0])), o.dot(em(a[1]), em(b[1]))));
            });
        });
        return r;
    });

    struct MapSpec {
        const char* name;
        const Tensor3* t;
        const CoalgebraTensor *a, *b, *c;
    };
    const CoalgebraTensor& HC = d.H.coalgebra;
    const std::vector<MapSpec> maps = {{"varphi", &d.varphi, &HC, &d.M, &d.M},
                                       {"psi", &d.psi, &HC, &d.M, &HC},
                                       {"phi", &d.phi, &d.M, &d.M, &d.M},
                                       {"theta", &d.theta, &d.M, &d.M, &HC}};
    std::vector<std::array<std::size_t, 3>> slots;
    for (std::size_t m = 0; m < maps.size(); ++m)
        for (std::size_t a = 0; a < maps[m].a->dim(); ++a)
            for (std::size_t b = 0; b < maps[m].b->dim(); ++b) slots.push_back({m, a, b});
    rep.entries.push_back(sweep("C11", "all four maps are coalgebra morphisms", slots.size(), opt,
                                [&](std::size_t t, std::vector<Violation>& out) {
                                    auto [m, a, b] = slots[t];
                                    const auto& s = maps[m];
                                    detail::coalgebra_map_violations(*s.t, *s.a, *s.b, *s.c, a, b, s.name,
                                                                     s.a->space.labels, s.b->space.labels, out);
                                }));
    rep.entries.push_back(sweep("NORM", "normalizations of the four maps", 1, opt,
                                [&](std::size_t, std::vector<Violation>& out) {
                                    auto check = [&](const char* what, const Vector& r) {
                                        if (!r.is_zero()) out.push_back({{}, {}, detail::render_q(r), what});
                                    };
                                    for (std::size_t x = 0; x < dm; ++x) {
                                        check("1 |> x = x", o.act(one, em(x)) - em(x));
                                        Vector ex = one;
                                        ex *= d.M.counit[x];
                                        check("psi(1,x) = eps(x)1", o.ps(one, em(x)) - ex);
                                    }
                                    for (std::size_t h = 0; h < dh; ++h) {
                                        check("psi(h,e) = h", o.ps(eh(h), e) - eh(h));
                                        Vector he = e;
                                        he *= eps_h[h];
                                        check("h |> e = eps(h)e", o.act(eh(h), e) - he);
                                    }
                                    check("theta(e,e) = 1", o.th(e, e) - one);
                                }));
    rep.entries.push_back(detail::summary_entry("H-bialgebra", "H is a bialgebra", verify_bialgebra(d.H, opt)));
    return rep;
}

/// The cdcp data seen by a bicocycle pair whose H carries the product mu.
inline CdcpData induced_cdcp(const BicocycleData& d) {
    d.check_shapes();
    BialgebraTensor H;
    H.coalgebra = d.H;
    H.algebra.space = d.H.space;
    H.algebra.mul = d.mu;
    H.algebra.unit = d.one();
    CdcpData c(d.M, H);
    c.varphi = d.varphi;
    c.psi = d.psi;
    c.phi = d.phi;
    c.theta = d.theta;
    return c;
}

/// gamma(h,h') = eps(h)eps(h')e.
inline Tensor3 trivial_gamma(const CoalgebraTensor& M, const CoalgebraTensor& H) {
    const std::size_t dh = H.dim();
    Tensor3 g(dh, dh, M.dim());
    for (std::size_t a = 0; a < dh; ++a)
        for (std::size_t b = 0; b < dh; ++b) {
            Vector v = *M.grouplike;
            v *= H.counit[a] * H.counit[b];
            g.set_fiber(a, b, v);
        }
    return g;
}

/// theta(x,x') = eps(x)eps(x')1.
inline Tensor3 trivial_theta(const CoalgebraTensor& M, const CoalgebraTensor& H) {
    const std::size_t dm = M.dim();
    Tensor3 t(dm, dm, H.dim());
    for (std::size_t a = 0; a < dm; ++a)
        for (std::size_t b = 0; b < dm; ++b) {
            Vector v = *H.grouplike;
            v *= M.counit[a] * M.counit[b];
            t.set_fiber(a, b, v);
        }
    return t;
}

}  // namespace bicross
