// Finite groups on M x H assembled from six maps between two pointed sets,
// and factorization of a finite group through two pointed subsets.
#pragma once

#include "bicross/error.hpp"
#include "bicross/report.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace bicross {

using Table = std::vector<std::vector<std::size_t>>;

struct FiniteGroup {
    std::vector<std::string> elements;
    Table cayley;
    std::size_t identity = 0;

    [[nodiscard]] std::size_t order() const { return elements.size(); }
    [[nodiscard]] std::size_t mul(std::size_t a, std::size_t b) const { return cayley[a][b]; }
};

struct PointedSet {
    std::vector<std::string> elements;
    std::size_t point = 0;

    [[nodiscard]] std::size_t size() const { return elements.size(); }
};

/// The six set maps, stored as tables indexed by element positions.
///   varphi[h][x] in M   psi[h][x] in H
///   phi[x][x'] in M     theta[x][x'] in H
///   mu[h][h'] in H      gamma[h][h'] in M
struct BicocycleGroupData {
    PointedSet M, H;
    Table varphi, psi, phi, theta, mu, gamma;

    [[nodiscard]] std::size_t e() const { return M.point; }
    [[nodiscard]] std::size_t one() const { return H.point; }
    /// Index of (x, h) in the product set.
    [[nodiscard]] std::size_t pack(std::size_t x, std::size_t h) const { return x * H.size() + h; }
    [[nodiscard]] std::pair<std::size_t, std::size_t> unpack(std::size_t g) const { return {g / H.size(), g % H.size()}; }

    void check_shapes() const {
        const std::size_t m = M.size(), n = H.size();
        auto expect = [](const Table& t, std::size_t rows, std::size_t cols, std::size_t range, const char* name) {
            bool ok = t.size() == rows;
            for (const auto& row : t) {
                ok = ok && row.size() == cols;
                for (auto v : row) ok = ok && v < range;
            }
            if (!ok) throw Error(ErrorKind::ShapeMismatch, std::string("table ") + name + " has the wrong shape");
        };
        if (M.point >= m || H.point >= n) throw Error(ErrorKind::ShapeMismatch, "point outside its set");
        expect(varphi, n, m, m, "varphi");
        expect(psi, n, m, n, "psi");
        expect(phi, m, m, m, "phi");
        expect(theta, m, m, n, "theta");
        expect(mu, n, n, n, "mu");
        expect(gamma, n, n, m, "gamma");
    }
};

/// Closure, identity, associativity and inverses, exhaustively.
inline AxiomReport verify_group_axioms(const FiniteGroup& G, const VerifyOptions& opt = {}) {
    const std::size_t n = G.order();
    const auto& L = G.elements;
    AxiomReport rep;
    bool closed = G.cayley.size() == n && G.identity < n;
    for (const auto& row : G.cayley) {
        closed = closed && row.size() == n;
        for (auto v : row) closed = closed && v < n;
    }
    AxiomEntry c;
    c.id = "closure";
    c.name = "table entries are elements";
    c.checked = n * n;
    c.holds = closed;
    c.violation_count = closed ? 0 : 1;
    rep.entries.push_back(c);
    if (!closed) return rep;

    rep.entries.push_back(sweep("identity", "e g = g = g e", n, opt, [&](std::size_t g, std::vector<Violation>& out) {
        if (G.mul(G.identity, g) != g || G.mul(g, G.identity) != g)
            out.push_back({{g}, {L[g]}, {L[G.mul(G.identity, g)], L[G.mul(g, G.identity)]}, ""});
    }));
    rep.entries.push_back(sweep("associativity", "(ab)c = a(bc)", n * n * n, opt,
                                [&](std::size_t t, std::vector<Violation>& out) {
                                    const std::size_t a = t / (n * n), b = (t / n) % n, cc = t % n;
                                    const std::size_t l = G.mul(G.mul(a, b), cc), r = G.mul(a, G.mul(b, cc));
                                    if (l != r) out.push_back({{a, b, cc}, {L[a], L[b], L[cc]}, {L[l], L[r]}, ""});
                                }));
    rep.entries.push_back(sweep("inverses", "every element has a two-sided inverse", n, opt,
                                [&](std::size_t g, std::vector<Violation>& out) {
                                    for (std::size_t h = 0; h < n; ++h)
                                        if (G.mul(g, h) == G.identity && G.mul(h, g) == G.identity) return;
                                    out.push_back({{g}, {L[g]}, {}, ""});
                                }));
    rep.entries.push_back(sweep("latin", "each row and column is a permutation", n, opt,
                                [&](std::size_t g, std::vector<Violation>& out) {
                                    std::vector<bool> row(n), col(n);
                                    for (std::size_t h = 0; h < n; ++h) {
                                        row[G.mul(g, h)] = true;
                                        col[G.mul(h, g)] = true;
                                    }
                                    for (std::size_t h = 0; h < n; ++h)
                                        if (!row[h] || !col[h]) {
                                            out.push_back({{g}, {L[g]}, {}, ""});
                                            return;
                                        }
                                }));
    return rep;
}

/// (x,h)(x',h') = (x.[varphi(h,x').gamma(psi(h,x'),h')], [theta(x,varphi(h,x')) * psi(h,x')] * h')
inline std::pair<std::size_t, std::size_t> bicocycle_multiply(const BicocycleGroupData& d, std::size_t x, std::size_t h,
                                                              std::size_t x2, std::size_t h2) {
    const std::size_t a = d.varphi[h][x2], b = d.psi[h][x2];
    const std::size_t xm = d.phi[x][d.phi[a][d.gamma[b][h2]]];
    const std::size_t hm = d.mu[d.mu[d.theta[x][a]][b]][h2];
    return {xm, hm};
}

/// Labels "(x,h)" for the product set.
inline std::vector<std::string> product_labels(const BicocycleGroupData& d) {
    std::vector<std::string> out;
    for (const auto& x : d.M.elements)
        for (const auto& h : d.H.elements) out.push_back("(" + x + "," + h + ")");
    return out;
}

/// The multiplication table on M x H, without any check.
inline FiniteGroup bicocycle_product_table(const BicocycleGroupData& d) {
    d.check_shapes();
    const std::size_t n = d.M.size() * d.H.size();
    FiniteGroup G;
    G.elements = product_labels(d);
    G.identity = d.pack(d.e(), d.one());
    G.cayley.assign(n, std::vector<std::size_t>(n));
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t k = 0; k < n; ++k) {
            auto [x, h] = d.unpack(g);
            auto [x2, h2] = d.unpack(k);
            auto [xm, hm] = bicocycle_multiply(d, x, h, x2, h2);
            G.cayley[g][k] = d.pack(xm, hm);
        }
    return G;
}

/// Failing normalization identities, as readable strings.
inline std::vector<std::string> normalization_failures(const BicocycleGroupData& d) {
    d.check_shapes();
    std::vector<std::string> bad;
    const std::size_t e = d.e(), one = d.one();
    for (std::size_t x = 0; x < d.M.size(); ++x) {
        if (d.varphi[one][x] != x) bad.push_back("varphi(1," + d.M.elements[x] + ") != " + d.M.elements[x]);
        if (d.psi[one][x] != one) bad.push_back("psi(1," + d.M.elements[x] + ") != 1");
    }
    for (std::size_t h = 0; h < d.H.size(); ++h) {
        if (d.varphi[h][e] != e) bad.push_back("varphi(" + d.H.elements[h] + ",e) != e");
        if (d.psi[h][e] != h) bad.push_back("psi(" + d.H.elements[h] + ",e) != " + d.H.elements[h]);
    }
    if (d.phi[e][e] != e) bad.emplace_back("e.e != e");
    if (d.mu[one][one] != one) bad.emplace_back("1*1 != 1");
    if (d.theta[e][e] != one) bad.emplace_back("theta(e,e) != 1");
    if (d.gamma[one][one] != e) bad.emplace_back("gamma(1,1) != e");
    return bad;
}

class NotAGroupError : public Error {
public:
    NotAGroupError(const std::string& what, ConditionReport report)
        : Error(ErrorKind::NotAGroup, what), report_(std::move(report)) {}
    [[nodiscard]] const ConditionReport& report() const { return report_; }

private:
    ConditionReport report_;
};

ConditionReport verify_group_conditions(const BicocycleGroupData& d, const VerifyOptions& opt = {});

/// Builds and checks the group. Throws NormalizationViolated, or
/// NotAGroupError carrying the group-axiom and condition reports.
inline FiniteGroup build_bicocycle_group(const BicocycleGroupData& d, const VerifyOptions& opt = {}) {
    const auto bad = normalization_failures(d);
    if (!bad.empty()) throw Error(ErrorKind::NormalizationViolated, bad.front());
    FiniteGroup G = bicocycle_product_table(d);
    AxiomReport axioms = verify_group_axioms(G, opt);
    if (!axioms.all_hold()) {
        ConditionReport rep = axioms;
        rep.append(verify_group_conditions(d, opt));
        throw NotAGroupError("product table fails: " + axioms.failing_ids().front(), rep);
    }
    return G;
}

/// One-sided inverses in M (for .) and H (for *), found by exhaustive search.
struct InverseWitnesses {
    std::vector<std::optional<std::size_t>> x_right, x_left, h_right, h_left;
};

inline InverseWitnesses inverse_witnesses(const BicocycleGroupData& d) {
    InverseWitnesses w;
    const std::size_t m = d.M.size(), n = d.H.size();
    w.x_right.resize(m);
    w.x_left.resize(m);
    w.h_right.resize(n);
    w.h_left.resize(n);
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
            if (!w.x_right[x] && d.phi[x][y] == d.e()) w.x_right[x] = y;
            if (!w.x_left[x] && d.phi[y][x] == d.e()) w.x_left[x] = y;
        }
    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t k = 0; k < n; ++k) {
            if (!w.h_right[h] && d.mu[h][k] == d.one()) w.h_right[h] = k;
            if (!w.h_left[h] && d.mu[k][h] == d.one()) w.h_left[h] = k;
        }
    return w;
}

namespace detail {

/// Enumerates a tuple of `arity` coordinates where coordinate i ranges over
/// sizes[i]; index t decodes lexicographically.
inline std::vector<std::size_t> decode(std::size_t t, const std::vector<std::size_t>& sizes) {
    std::vector<std::size_t> out(sizes.size());
    for (std::size_t i = sizes.size(); i-- > 0;) {
        out[i] = t % sizes[i];
        t /= sizes[i];
    }
    return out;
}

inline std::size_t product_of(const std::vector<std::size_t>& sizes) {
    std::size_t p = 1;
    for (auto s : sizes) p *= s;
    return p;
}

}  // namespace detail

/// Conditions G1..G12, INV-R, INV-L and the normalization identities (NORM).
/// Every variable that occurs in an equation is quantified, including those
/// that appear on one side only.
inline ConditionReport verify_group_conditions(const BicocycleGroupData& d, const VerifyOptions& opt) {
    d.check_shapes();
    const std::size_t m = d.M.size(), n = d.H.size();
    const std::size_t e = d.e(), one = d.one();
    const auto& ML = d.M.elements;
    const auto& HL = d.H.elements;
    auto dot = [&](std::size_t a, std::size_t b) { return d.phi[a][b]; };
    auto star = [&](std::size_t a, std::size_t b) { return d.mu[a][b]; };
    auto act = [&](std::size_t h, std::size_t x) { return d.varphi[h][x]; };
    auto ract = [&](std::size_t h, std::size_t x) { return d.psi[h][x]; };
    auto th = [&](std::size_t a, std::size_t b) { return d.theta[a][b]; };
    auto ga = [&](std::size_t a, std::size_t b) { return d.gamma[a][b]; };
    ConditionReport rep;

    // kinds: 'M' or 'H' per variable; f returns (lhs, rhs, lhs_is_in_M).
    auto cond = [&](const char* id, const char* name, const std::string& kinds, auto f) {
        std::vector<std::size_t> sizes;
        for (char k : kinds) sizes.push_back(k == 'M' ? m : n);
        return sweep(id, name, detail::product_of(sizes), opt, [&](std::size_t t, std::vector<Violation>& out) {
            const auto v = detail::decode(t, sizes);
            auto [lhs, rhs, in_m] = f(v);
            if (lhs == rhs) return;
            Violation viol;
            viol.index = v;
            for (std::size_t i = 0; i < v.size(); ++i) viol.tuple.push_back(kinds[i] == 'M' ? ML[v[i]] : HL[v[i]]);
            const auto& lab = in_m ? ML : HL;
            viol.residual = {lab[lhs], lab[rhs]};
            out.push_back(std::move(viol));
        });
    };
    using R = std::tuple<std::size_t, std::size_t, bool>;

    rep.entries.push_back(cond("G1", "e.x = x = x.e", "M", [&](const auto& v) {
        const std::size_t x = v[0];
        return R{dot(e, x) == x ? dot(x, e) : dot(e, x), x, true};
    }));
    rep.entries.push_back(cond("G2", "1*h = h = h*1", "H", [&](const auto& v) {
        const std::size_t h = v[0];
        return R{star(one, h) == h ? star(h, one) : star(one, h), h, false};
    }));
    rep.entries.push_back(cond("G3", "theta(x,e) = 1 = theta(e,x)", "M", [&](const auto& v) {
        const std::size_t x = v[0];
        return R{th(x, e) == one ? th(e, x) : th(x, e), one, false};
    }));
    rep.entries.push_back(cond("G4", "gamma(h,1) = e = gamma(1,h)", "H", [&](const auto& v) {
        const std::size_t h = v[0];
        return R{ga(h, one) == e ? ga(one, h) : ga(h, one), e, true};
    }));
    // vars h, x', x'', h''
    rep.entries.push_back(cond("G5", "left action on the product", "HMMH", [&](const auto& v) {
        const std::size_t h = v[0], x1 = v[1], x2 = v[2], h2 = v[3];
        const std::size_t lhs = dot(act(h, dot(x1, x2)), ga(ract(h, dot(x1, x2)), star(th(x1, x2), h2)));
        const std::size_t rhs = dot(act(h, x1), dot(act(ract(h, x1), x2), ga(ract(ract(h, x1), x2), h2)));
        return R{lhs, rhs, true};
    }));
    rep.entries.push_back(cond("G6", "right action and theta", "HMMH", [&](const auto& v) {
        const std::size_t h = v[0], x1 = v[1], x2 = v[2], h2 = v[3];
        const std::size_t lhs = star(ract(h, dot(x1, x2)), star(th(x1, x2), h2));
        const std::size_t rhs = star(star(th(act(h, x1), act(ract(h, x1), x2)), ract(ract(h, x1), x2)), h2);
        return R{lhs, rhs, false};
    }));
    // vars x, h, h', x''
    rep.entries.push_back(cond("G7", "right action on the product", "MHHM", [&](const auto& v) {
        const std::size_t x = v[0], h = v[1], h1 = v[2], x2 = v[3];
        const std::size_t lhs = star(th(dot(x, ga(h, h1)), act(star(h, h1), x2)), ract(star(h, h1), x2));
        const std::size_t rhs = star(star(th(x, act(h, act(h1, x2))), ract(h, act(h1, x2))), ract(h1, x2));
        return R{lhs, rhs, false};
    }));
    rep.entries.push_back(cond("G8", "M is a left H-module up to gamma", "MHHM", [&](const auto& v) {
        const std::size_t x = v[0], h = v[1], h1 = v[2], x2 = v[3];
        const std::size_t lhs = dot(dot(x, ga(h, h1)), act(star(h, h1), x2));
        const std::size_t rhs = dot(x, dot(act(h, act(h1, x2)), ga(ract(h, act(h1, x2)), ract(h1, x2))));
        return R{lhs, rhs, true};
    }));
    // vars x, x', x'', h''
    rep.entries.push_back(cond("G9", "associativity of . up to theta", "MMMH", [&](const auto& v) {
        const std::size_t x = v[0], x1 = v[1], x2 = v[2], h2 = v[3];
        const std::size_t lhs = dot(x, dot(x1, x2));
        const std::size_t rhs = dot(dot(x, x1), dot(act(th(x, x1), x2), ga(ract(th(x, x1), x2), h2)));
        return R{lhs, rhs, true};
    }));
    rep.entries.push_back(cond("G10", "cocycle condition for theta", "MMMH", [&](const auto& v) {
        const std::size_t x = v[0], x1 = v[1], x2 = v[2], h2 = v[3];
        const std::size_t lhs = star(th(x, dot(x1, x2)), star(th(x1, x2), h2));
        const std::size_t rhs = star(star(th(dot(x, x1), act(th(x, x1), x2)), ract(th(x, x1), x2)), h2);
        return R{lhs, rhs, false};
    }));
    // vars x, h, h', h''
    rep.entries.push_back(cond("G11", "cocycle condition for gamma", "MHHH", [&](const auto& v) {
        const std::size_t x = v[0], h = v[1], h1 = v[2], h2 = v[3];
        const std::size_t lhs = dot(dot(x, ga(h, h1)), ga(star(h, h1), h2));
        const std::size_t rhs = dot(x, dot(act(h, ga(h1, h2)), ga(ract(h, ga(h1, h2)), star(h1, h2))));
        return R{lhs, rhs, true};
    }));
    rep.entries.push_back(cond("G12", "associativity of * up to gamma", "MHHH", [&](const auto& v) {
        const std::size_t x = v[0], h = v[1], h1 = v[2], h2 = v[3];
        const std::size_t lhs = star(star(h, h1), h2);
        const std::size_t rhs = star(star(th(x, act(h, ga(h1, h2))), ract(h, ga(h1, h2))), star(h1, h2));
        return R{lhs, rhs, false};
    }));

    const InverseWitnesses w = inverse_witnesses(d);
    auto inv_entry = [&](const char* id, const char* name, const std::vector<std::optional<std::size_t>>& xs,
                         const std::vector<std::optional<std::size_t>>& hs) {
        AxiomEntry a;
        a.id = id;
        a.name = name;
        a.checked = m + n;
        for (std::size_t x = 0; x < m; ++x)
            if (!xs[x]) a.violations.push_back({{0, x}, {ML[x]}, {}, "M"});
        for (std::size_t h = 0; h < n; ++h)
            if (!hs[h]) a.violations.push_back({{1, h}, {HL[h]}, {}, "H"});
        a.violation_count = a.violations.size();
        if (a.violations.size() > opt.max_violations) a.violations.resize(opt.max_violations);
        a.holds = a.violation_count == 0;
        return a;
    };
    rep.entries.push_back(inv_entry("INV-R", "x.x^r = e and h*h^r = 1 have solutions", w.x_right, w.h_right));
    rep.entries.push_back(inv_entry("INV-L", "x^l.x = e and h^l*h = 1 have solutions", w.x_left, w.h_left));

    AxiomEntry norm;
    norm.id = "NORM";
    norm.name = "normalization identities";
    norm.checked = 2 * (m + n) + 4;
    for (const auto& s : normalization_failures(d)) norm.violations.push_back({{norm.violations.size()}, {}, {s}, ""});
    norm.violation_count = norm.violations.size();
    norm.holds = norm.violations.empty();
    rep.entries.push_back(norm);
    return rep;
}

/// Inverse of (x,h) from the closed formula (e,h)^-1 (x,1)^-1 with
/// (x,1)^-1 = (x^r, theta(x,x^r)^r) and (e,h)^-1 = (gamma(h^l,h)^l, h^l).
/// With printed_order the two factors are multiplied the other way round.
inline std::optional<std::pair<std::size_t, std::size_t>> inversion_formula(const BicocycleGroupData& d, std::size_t x,
                                                                            std::size_t h, bool printed_order = false) {
    const InverseWitnesses w = inverse_witnesses(d);
    if (!w.x_right[x] || !w.h_left[h]) return std::nullopt;
    const std::size_t xr = *w.x_right[x], hl = *w.h_left[h];
    const auto a = w.h_right[d.theta[x][xr]];
    const auto b = w.x_left[d.gamma[hl][h]];
    if (!a || !b) return std::nullopt;
    if (printed_order) return bicocycle_multiply(d, xr, *a, *b, hl);
    return bicocycle_multiply(d, *b, hl, xr, *a);
}

/// Recovers the six maps of G relative to the subsets M and H (element
/// indices of G) by unique factorization g = m h. The points of M and H are
/// the group identity. Throws NotBijective or PreconditionFailed.
inline BicocycleGroupData factor_group(const FiniteGroup& G, const std::vector<std::size_t>& Msub,
                                       const std::vector<std::size_t>& Hsub) {
    const std::size_t m = Msub.size(), n = Hsub.size();
    if (m * n != G.order()) throw Error(ErrorKind::NotBijective, "|M||H| differs from |G|");
    std::vector<std::optional<std::pair<std::size_t, std::size_t>>> where(G.order());
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t g = G.mul(Msub[a], Hsub[b]);
            if (where[g]) throw Error(ErrorKind::NotBijective, "element " + G.elements[g] + " factors twice");
            where[g] = std::make_pair(a, b);
        }
    auto find = [&](const std::vector<std::size_t>& s) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i] == G.identity) return i;
        return std::nullopt;
    };
    const auto pe = find(Msub), p1 = find(Hsub);
    if (!pe || !p1) throw Error(ErrorKind::PreconditionFailed, "both subsets must contain the identity");
    BicocycleGroupData d;
    for (auto g : Msub) d.M.elements.push_back(G.elements[g]);
    for (auto g : Hsub) d.H.elements.push_back(G.elements[g]);
    d.M.point = *pe;
    d.H.point = *p1;
    d.varphi.assign(n, std::vector<std::size_t>(m));
    d.psi = d.varphi;
    d.phi.assign(m, std::vector<std::size_t>(m));
    d.theta = d.phi;
    d.gamma.assign(n, std::vector<std::size_t>(n));
    d.mu = d.gamma;
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t a = 0; a < m; ++a) {
            auto [x, h] = *where[G.mul(Hsub[b], Msub[a])];
            d.varphi[b][a] = x;
            d.psi[b][a] = h;
        }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t a2 = 0; a2 < m; ++a2) {
            auto [x, h] = *where[G.mul(Msub[a], Msub[a2])];
            d.phi[a][a2] = x;
            d.theta[a][a2] = h;
        }
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t b2 = 0; b2 < n; ++b2) {
            auto [x, h] = *where[G.mul(Hsub[b], Hsub[b2])];
            d.gamma[b][b2] = x;
            d.mu[b][b2] = h;
        }
    return d;
}

/// For each product index (x,h), the element x h of G.
inline std::vector<std::size_t> product_bijection(const FiniteGroup& G, const std::vector<std::size_t>& Msub,
                                                  const std::vector<std::size_t>& Hsub) {
    std::vector<std::size_t> out;
    for (auto a : Msub)
        for (auto b : Hsub) out.push_back(G.mul(a, b));
    return out;
}

struct SubsetPair {
    std::vector<std::size_t> M, H;
    friend bool operator==(const SubsetPair&, const SubsetPair&) = default;
};

/// All (M, H) with identity in both, |M| = m_size and bijective product map.
/// Throws BudgetExceeded once more than `budget` candidate pairs are examined.
inline std::vector<SubsetPair> search_factorizations(const FiniteGroup& G, std::size_t m_size,
                                                     std::size_t budget = 1'000'000) {
    const std::size_t n = G.order();
    if (m_size == 0 || n % m_size != 0)
        throw Error(ErrorKind::PreconditionFailed, "m_size must divide the group order");
    const std::size_t h_size = n / m_size;
    std::vector<std::size_t> others;
    for (std::size_t g = 0; g < n; ++g)
        if (g != G.identity) others.push_back(g);
    auto subsets = [&](std::size_t k) {
        // subsets of size k containing the identity, in lexicographic order of `others`
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> pick;
        auto rec = [&](auto&& self, std::size_t from) -> void {
            if (pick.size() + 1 == k) {
                std::vector<std::size_t> s{G.identity};
                s.insert(s.end(), pick.begin(), pick.end());
                out.push_back(s);
                return;
            }
            for (std::size_t i = from; i < others.size(); ++i) {
                pick.push_back(others[i]);
                self(self, i + 1);
                pick.pop_back();
            }
        };
        rec(rec, 0);
        return out;
    };
    const auto Ms = subsets(m_size), Hs = subsets(h_size);
    std::vector<SubsetPair> found;
    std::size_t examined = 0;
    std::vector<char> seen(n);
    for (const auto& Ms_ : Ms)
        for (const auto& Hs_ : Hs) {
            if (++examined > budget) throw Error(ErrorKind::BudgetExceeded, "factorization search budget exhausted");
            std::fill(seen.begin(), seen.end(), 0);
            bool ok = true;
            for (auto a : Ms_) {
                for (auto b : Hs_) {
                    const std::size_t g = G.mul(a, b);
                    if (seen[g]) {
                        ok = false;
                        break;
                    }
                    seen[g] = 1;
                }
                if (!ok) break;
            }
            if (ok) found.push_back({Ms_, Hs_});
        }
    return found;
}

}  // namespace bicross
