// Lie algebras on m + h assembled from six bilinear maps, and the reverse
// decomposition of a Lie algebra along two complementary subspaces.
#pragma once

#include "bicross/kernel.hpp"
#include "bicross/lie_axioms.hpp"
#include "bicross/report.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace bicross {

struct LieAlgebra {
    BasedSpace space;
    BilinearMapTensor bracket;  // (space, space -> space)

    LieAlgebra() = default;
    explicit LieAlgebra(BasedSpace s) : space(s), bracket(s, s, s) {}

    [[nodiscard]] std::size_t dim() const { return space.dim(); }
    [[nodiscard]] Vector operator()(const Vector& a, const Vector& b) const { return eval_bilinear(bracket, a, b); }
    void set(std::size_t i, std::size_t j, std::size_t k, const Rational& c) { bracket.coeffs.at(i, j, k) = c; }
    /// Sets [i,j] += c e_k and [j,i] -= c e_k.
    void set_antisymmetric(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
        bracket.coeffs.at(i, j, k) = c;
        bracket.coeffs.at(j, i, k) = -c;
    }
};

/// The six maps on (m, h). Names follow the interchange format:
///   phi    m x m -> m      theta  m x m -> h
///   mu     h x h -> h      gamma  h x h -> m
///   varphi h x m -> m      psi    h x m -> h
struct BicocycleSumData {
    BasedSpace m, h;
    BilinearMapTensor phi, theta, mu, gamma, varphi, psi;

    BicocycleSumData() = default;
    BicocycleSumData(BasedSpace m_, BasedSpace h_)
        : m(std::move(m_)), h(std::move(h_)),
          phi(m, m, m), theta(m, m, h), mu(h, h, h), gamma(h, h, m), varphi(h, m, m), psi(h, m, h) {}

    void check_shapes() const {
        auto expect = [](const BilinearMapTensor& t, const BasedSpace& l, const BasedSpace& r, const BasedSpace& c,
                         const char* name) {
            if (t.coeffs.dim(0) != l.dim() || t.coeffs.dim(1) != r.dim() || t.coeffs.dim(2) != c.dim())
                throw Error(ErrorKind::ShapeMismatch, std::string("map ") + name + " has the wrong shape");
        };
        expect(phi, m, m, m, "phi");
        expect(theta, m, m, h, "theta");
        expect(mu, h, h, h, "mu");
        expect(gamma, h, h, m, "gamma");
        expect(varphi, h, m, m, "varphi");
        expect(psi, h, m, h, "psi");
    }
};

namespace detail {

inline std::vector<std::string> render(const Vector& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(v[i].str());
    return out;
}

struct DenseSumOps {
    using M = Vector;
    using H = Vector;
    const BicocycleSumData& d;
    Vector phi(const Vector& a, const Vector& b) const { return eval_bilinear(d.phi, a, b); }
    Vector theta(const Vector& a, const Vector& b) const { return eval_bilinear(d.theta, a, b); }
    Vector mu(const Vector& a, const Vector& b) const { return eval_bilinear(d.mu, a, b); }
    Vector gamma(const Vector& a, const Vector& b) const { return eval_bilinear(d.gamma, a, b); }
    Vector varphi(const Vector& a, const Vector& b) const { return eval_bilinear(d.varphi, a, b); }
    Vector psi(const Vector& a, const Vector& b) const { return eval_bilinear(d.psi, a, b); }
};

/// Decodes t into a triple over dims (d0, d1, d2), lexicographic order.
inline std::array<std::size_t, 3> unflatten3(std::size_t t, std::size_t d1, std::size_t d2) {
    return {t / (d1 * d2), (t / d2) % d1, t % d2};
}

}  // namespace detail

/// Antisymmetry on every basis pair and Jacobi on every ordered basis triple.
inline AxiomReport verify_lie_axioms(const LieAlgebra& L, const VerifyOptions& opt = {}) {
    const std::size_t n = L.dim();
    const auto& lab = L.space.labels;
    auto basis = [&](std::size_t i) { return Vector::basis(n, i); };
    AxiomReport rep;

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) pairs.emplace_back(i, j);
    rep.entries.push_back(sweep("antisymmetry", "[x,y] + [y,x] = 0", pairs.size(), opt,
                                [&](std::size_t t, std::vector<Violation>& out) {
                                    auto [i, j] = pairs[t];
                                    Vector r = L.bracket.coeffs.fiber(i, j) + L.bracket.coeffs.fiber(j, i);
                                    if (!r.is_zero()) out.push_back({{i, j}, {lab[i], lab[j]}, detail::render(r), ""});
                                }));

    rep.entries.push_back(sweep("jacobi", "[[x,y],z] + [[y,z],x] + [[z,x],y] = 0", n * n * n, opt,
                                [&](std::size_t t, std::vector<Violation>& out) {
                                    auto [a, b, c] = detail::unflatten3(t, n, n);
                                    const Vector x = basis(a), y = basis(b), z = basis(c);
                                    Vector r = L(L(x, y), z) + L(L(y, z), x) + L(L(z, x), y);
                                    if (!r.is_zero())
                                        out.push_back({{a, b, c}, {lab[a], lab[b], lab[c]}, detail::render(r), ""});
                                }));
    return rep;
}

/// The algebra on m + h (m basis first) with the bicocycle bracket.
inline LieAlgebra build_bicocycle_sum(const BicocycleSumData& d) {
    d.check_shapes();
    const std::size_t dm = d.m.dim(), dh = d.h.dim(), n = dm + dh;
    std::vector<std::string> labels = d.m.labels;
    labels.insert(labels.end(), d.h.labels.begin(), d.h.labels.end());
    LieAlgebra L{BasedSpace(labels)};
    auto put = [&](std::size_t a, std::size_t b, const Vector& mpart, const Vector& hpart, const Rational& sign) {
        for (std::size_t k = 0; k < dm; ++k)
            if (!mpart[k].is_zero()) L.bracket.coeffs.at(a, b, k) += sign * mpart[k];
        for (std::size_t k = 0; k < dh; ++k)
            if (!hpart[k].is_zero()) L.bracket.coeffs.at(a, b, dm + k) += sign * hpart[k];
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const bool am = a < dm, bm = b < dm;
            if (am && bm) {
                put(a, b, d.phi.coeffs.fiber(a, b), d.theta.coeffs.fiber(a, b), 1);
            } else if (!am && !bm) {
                put(a, b, d.gamma.coeffs.fiber(a - dm, b - dm), d.mu.coeffs.fiber(a - dm, b - dm), 1);
            } else if (!am && bm) {  // [Z, x]
                put(a, b, d.varphi.coeffs.fiber(a - dm, b), d.psi.coeffs.fiber(a - dm, b), 1);
            } else {  // [x, Z'] = -varphi(Z', x) - psi(Z', x)
                put(a, b, d.varphi.coeffs.fiber(b - dm, a), d.psi.coeffs.fiber(b - dm, a), -1);
            }
        }
    return L;
}

/// Axioms A1..A9 in the form obtained by splitting each Jacobi sum into its
/// m- and h-components. With opt.literal_axioms the printed variant of A4 is
/// reported as an extra entry "A4-literal".
inline AxiomReport verify_matched_pair(const BicocycleSumData& d, const VerifyOptions& opt = {}) {
    d.check_shapes();
    const std::size_t dm = d.m.dim(), dh = d.h.dim();
    const detail::DenseSumOps o{d};
    const auto& ml = d.m.labels;
    const auto& hl = d.h.labels;
    auto em = [&](std::size_t i) { return Vector::basis(dm, i); };
    auto eh = [&](std::size_t i) { return Vector::basis(dh, i); };
    AxiomReport rep;

    // A1: alternation of phi, theta, mu, gamma.
    struct Alt {
        const BilinearMapTensor* t;
        const char* name;
        const std::vector<std::string>* labels;
    };
    const Alt alts[4] = {{&d.phi, "phi", &ml}, {&d.theta, "theta", &ml}, {&d.mu, "mu", &hl}, {&d.gamma, "gamma", &hl}};
    std::vector<std::array<std::size_t, 3>> a1;
    for (std::size_t w = 0; w < 4; ++w) {
        const std::size_t n = alts[w].t->coeffs.dim(0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) a1.push_back({w, i, j});
    }
    rep.entries.push_back(sweep("A1", "phi, theta, mu, gamma are alternating", a1.size(), opt,
                                [&](std::size_t t, std::vector<Violation>& out) {
                                    auto [w, i, j] = a1[t];
                                    const auto& c = alts[w].t->coeffs;
                                    Vector r = c.fiber(i, j) + c.fiber(j, i);
                                    if (!r.is_zero())
                                        out.push_back({{w, i, j},
                                                       {(*alts[w].labels)[i], (*alts[w].labels)[j]},
                                                       detail::render(r),
                                                       alts[w].name});
                                }));

    auto mmh = [&](const char* id, const char* name, auto f) {
        return sweep(id, name, dm * dm * dh, opt, [&](std::size_t t, std::vector<Violation>& out) {
            auto [a, b, c] = detail::unflatten3(t, dm, dh);
            Vector r = f(o, em(a), em(b), eh(c));
            if (!r.is_zero()) out.push_back({{a, b, c}, {ml[a], ml[b], hl[c]}, detail::render(r), ""});
        });
    };
    auto hhm = [&](const char* id, const char* name, auto f) {
        return sweep(id, name, dh * dh * dm, opt, [&](std::size_t t, std::vector<Violation>& out) {
            auto [a, b, c] = detail::unflatten3(t, dh, dm);
            Vector r = f(o, eh(a), eh(b), em(c));
            if (!r.is_zero()) out.push_back({{a, b, c}, {hl[a], hl[b], ml[c]}, detail::render(r), ""});
        });
    };
    auto mmm = [&](const char* id, const char* name, auto f) {
        return sweep(id, name, dm * dm * dm, opt, [&](std::size_t t, std::vector<Violation>& out) {
            auto [a, b, c] = detail::unflatten3(t, dm, dm);
            Vector r = f(o, em(a), em(b), em(c));
            if (!r.is_zero()) out.push_back({{a, b, c}, {ml[a], ml[b], ml[c]}, detail::render(r), ""});
        });
    };
    auto hhh = [&](const char* id, const char* name, auto f) {
        return sweep(id, name, dh * dh * dh, opt, [&](std::size_t t, std::vector<Violation>& out) {
            auto [a, b, c] = detail::unflatten3(t, dh, dh);
            Vector r = f(o, eh(a), eh(b), eh(c));
            if (!r.is_zero()) out.push_back({{a, b, c}, {hl[a], hl[b], hl[c]}, detail::render(r), ""});
        });
    };
    using O = detail::DenseSumOps;
    rep.entries.push_back(mmh("A2", "h acts on phi", axioms::a2<O>));
    rep.entries.push_back(mmh("A3", "h acts on theta; psi compatibility", axioms::a3<O>));
    rep.entries.push_back(hhm("A4", "m is an h-module up to gamma", axioms::a4<O>));
    if (opt.literal_axioms) {
        rep.entries.push_back(hhm("A4-literal", "printed variant of A4", axioms::a4_literal<O>));
        rep.entries.back().note = "literal";
    }
    rep.entries.push_back(hhm("A5", "mu and psi compatibility", axioms::a5<O>));
    rep.entries.push_back(mmm("A6", "Jacobi for phi up to theta", axioms::a6<O>));
    rep.entries.push_back(mmm("A7", "cocycle condition for theta", axioms::a7<O>));
    rep.entries.push_back(hhh("A8", "cocycle condition for gamma", axioms::a8<O>));
    rep.entries.push_back(hhh("A9", "Jacobi for mu up to gamma", axioms::a9<O>));
    return rep;
}

/// The bracket of L rewritten in the basis given by the columns of P.
inline LieAlgebra change_basis(const LieAlgebra& L, const Matrix& P, BasedSpace labels) {
    const std::size_t n = L.dim();
    const Matrix inv = invert_matrix(P);
    LieAlgebra out(std::move(labels));
    if (out.dim() != n) throw Error(ErrorKind::DimensionMismatch, "label count differs from dimension");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) out.bracket.coeffs.set_fiber(a, b, inv.apply(L(P.column(a), P.column(b))));
    return out;
}

/// L expressed in the basis adapted to pair (m basis first).
inline LieAlgebra adapted_algebra(const LieAlgebra& L, const SubspacePair& pair) {
    std::vector<std::string> labels = pair.m_space().labels;
    const auto hl = pair.h_space().labels;
    labels.insert(labels.end(), hl.begin(), hl.end());
    return change_basis(L, pair.adapted_matrix(), BasedSpace(labels));
}

/// Recovers the six maps by projecting brackets of adapted basis vectors.
inline BicocycleSumData decompose(const LieAlgebra& L, const SubspacePair& pair) {
    if (pair.ambient.dim() != L.dim()) throw Error(ErrorKind::DimensionMismatch, "split does not live in this algebra");
    const LieAlgebra A = adapted_algebra(L, pair);
    const std::size_t dm = pair.m_dim(), dh = pair.h_dim();
    BicocycleSumData d(pair.m_space(), pair.h_space());
    auto split = [&](std::size_t a, std::size_t b, Tensor3& mt, std::size_t i, std::size_t j, Tensor3& ht) {
        for (std::size_t k = 0; k < dm; ++k) mt.at(i, j, k) = A.bracket.coeffs.at(a, b, k);
        for (std::size_t k = 0; k < dh; ++k) ht.at(i, j, k) = A.bracket.coeffs.at(a, b, dm + k);
    };
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t j = 0; j < dm; ++j) split(i, j, d.phi.coeffs, i, j, d.theta.coeffs);
    for (std::size_t i = 0; i < dh; ++i)
        for (std::size_t j = 0; j < dm; ++j) split(dm + i, j, d.varphi.coeffs, i, j, d.psi.coeffs);
    for (std::size_t i = 0; i < dh; ++i)
        for (std::size_t j = 0; j < dh; ++j) split(dm + i, dm + j, d.gamma.coeffs, i, j, d.mu.coeffs);
    return d;
}

struct SpecializationRecord {
    bool theta_trivial = false;
    bool gamma_trivial = false;
    bool varphi_is_left_action = false;
    bool psi_is_right_action = false;
    bool phi_is_lie_bracket = false;
    bool mu_is_lie_bracket = false;
    std::optional<bool> theta_is_2cocycle;  // empty when phi is not a Lie bracket or psi is not an action
    std::optional<bool> gamma_is_2cocycle;  // empty when mu is not a Lie bracket or varphi is not an action
    bool matched_pair = false;
    bool left_unified_product = false;   // theta trivial, gamma not
    bool right_unified_product = false;  // gamma trivial, theta not
    bool abelian_extension = false;

    [[nodiscard]] std::vector<std::string> labels() const {
        std::vector<std::string> out;
        if (matched_pair) out.emplace_back("matched_pair");
        if (left_unified_product) out.emplace_back("left_unified_product");
        if (right_unified_product) out.emplace_back("right_unified_product");
        if (abelian_extension) out.emplace_back("abelian_extension");
        return out;
    }
};

inline SpecializationRecord classify_specialization(const BicocycleSumData& d) {
    d.check_shapes();
    const std::size_t dm = d.m.dim(), dh = d.h.dim();
    const detail::DenseSumOps o{d};
    auto em = [&](std::size_t i) { return Vector::basis(dm, i); };
    auto eh = [&](std::size_t i) { return Vector::basis(dh, i); };
    auto alternating = [](const BilinearMapTensor& t) {
        for (std::size_t i = 0; i < t.coeffs.dim(0); ++i)
            for (std::size_t j = i; j < t.coeffs.dim(1); ++j)
                if (!(t.coeffs.fiber(i, j) + t.coeffs.fiber(j, i)).is_zero()) return false;
        return true;
    };
    auto for_all3 = [](std::size_t n0, std::size_t n1, std::size_t n2, auto pred) {
        for (std::size_t a = 0; a < n0; ++a)
            for (std::size_t b = 0; b < n1; ++b)
                for (std::size_t c = 0; c < n2; ++c)
                    if (!pred(a, b, c)) return false;
        return true;
    };
    SpecializationRecord r;
    r.theta_trivial = d.theta.coeffs.is_zero();
    r.gamma_trivial = d.gamma.coeffs.is_zero();
    r.varphi_is_left_action = for_all3(dh, dh, dm, [&](auto a, auto b, auto c) {
        return o.varphi(o.mu(eh(a), eh(b)), em(c)) ==
               o.varphi(eh(a), o.varphi(eh(b), em(c))) - o.varphi(eh(b), o.varphi(eh(a), em(c)));
    });
    r.psi_is_right_action = for_all3(dh, dm, dm, [&](auto a, auto b, auto c) {
        return o.psi(eh(a), o.phi(em(b), em(c))) ==
               o.psi(o.psi(eh(a), em(b)), em(c)) - o.psi(o.psi(eh(a), em(c)), em(b));
    });
    auto jacobi = [&](const BilinearMapTensor& t, std::size_t n) {
        auto e = [&](std::size_t i) { return Vector::basis(n, i); };
        return for_all3(n, n, n, [&](auto a, auto b, auto c) {
            return (eval_bilinear(t, eval_bilinear(t, e(a), e(b)), e(c)) +
                    eval_bilinear(t, eval_bilinear(t, e(b), e(c)), e(a)) +
                    eval_bilinear(t, eval_bilinear(t, e(c), e(a)), e(b)))
                .is_zero();
        });
    };
    r.phi_is_lie_bracket = alternating(d.phi) && jacobi(d.phi, dm);
    r.mu_is_lie_bracket = alternating(d.mu) && jacobi(d.mu, dh);
    using O = detail::DenseSumOps;
    if (r.phi_is_lie_bracket && r.psi_is_right_action)
        r.theta_is_2cocycle = alternating(d.theta) && for_all3(dm, dm, dm, [&](auto a, auto b, auto c) {
                                  return axioms::a7<O>(o, em(a), em(b), em(c)).is_zero();
                              });
    if (r.mu_is_lie_bracket && r.varphi_is_left_action)
        r.gamma_is_2cocycle = alternating(d.gamma) && for_all3(dh, dh, dh, [&](auto a, auto b, auto c) {
                                  return axioms::a8<O>(o, eh(a), eh(b), eh(c)).is_zero();
                              });
    r.matched_pair = r.theta_trivial && r.gamma_trivial;
    r.left_unified_product = r.theta_trivial && !r.gamma_trivial;
    r.right_unified_product = r.gamma_trivial && !r.theta_trivial;
    const bool m_side = d.varphi.coeffs.is_zero() && r.gamma_trivial && d.mu.coeffs.is_zero() &&
                        r.phi_is_lie_bracket && r.psi_is_right_action;
    const bool h_side = d.psi.coeffs.is_zero() && r.theta_trivial && d.phi.coeffs.is_zero() &&
                        r.mu_is_lie_bracket && r.varphi_is_left_action;
    r.abelian_extension = m_side || h_side;
    return r;
}

}  // namespace bicross
