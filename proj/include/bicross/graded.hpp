// Lazily evaluated Z-graded data: a basis z_i (i >= lo) split by a predicate
// into m and h, six maps given by closed-form coefficient functions, and a
// range-bounded verifier.
#pragma once

#include "bicross/error.hpp"
#include "bicross/lie_axioms.hpp"
#include "bicross/rational.hpp"
#include "bicross/report.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bicross {

struct GradedTerm {
    Rational coef;
    long index = 0;
};

/// Finite combination of graded basis vectors z_i.
class GradedVector {
public:
    GradedVector() = default;
    GradedVector(long index, const Rational& coef) { add(index, coef); }

    void add(long index, const Rational& coef) {
        if (coef.is_zero()) return;
        auto [it, fresh] = terms_.emplace(index, coef);
        if (!fresh) {
            it->second += coef;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const std::map<long, Rational>& terms() const { return terms_; }

    GradedVector& operator+=(const GradedVector& o) {
        for (const auto& [i, c] : o.terms_) add(i, c);
        return *this;
    }
    GradedVector& operator-=(const GradedVector& o) {
        for (const auto& [i, c] : o.terms_) add(i, -c);
        return *this;
    }
    friend bool operator==(const GradedVector& a, const GradedVector& b) { return a.terms_ == b.terms_; }

    [[nodiscard]] std::vector<std::string> render() const {
        std::vector<std::string> out;
        for (const auto& [i, c] : terms_) out.push_back(c.str() + "*z" + std::to_string(i));
        return out;
    }

private:
    std::map<long, Rational> terms_;
};

/// Closed-form basis map: (i, j) -> coefficient * z_index, or nothing for 0.
using GradedBasisMap = std::function<std::optional<GradedTerm>(long, long)>;

struct GradedLieData {
    std::string family;
    long lo = -1;
    long hi = 1L << 40;                     // largest index the closed forms accept
    std::function<bool(long)> in_m;         // z_i in m; otherwise in h
    std::function<GradedTerm(long, long)> bracket_fn;
    GradedBasisMap phi, theta, mu, gamma, varphi, psi;

    [[nodiscard]] bool in_h(long i) const { return !in_m(i); }
};

namespace detail {

/// Applies a closed-form map bilinearly while checking the grading.
struct GradedOps {
    using M = GradedVector;
    using H = GradedVector;
    const GradedLieData& g;

    GradedVector apply(const GradedBasisMap& f, const char* name, bool left_m, bool right_m, bool out_m,
                       const GradedVector& a, const GradedVector& b) const {
        GradedVector out;
        for (const auto& [i, ci] : a.terms())
            for (const auto& [j, cj] : b.terms()) {
                if (g.in_m(i) != left_m || g.in_m(j) != right_m)
                    throw Error(ErrorKind::IndexOutOfRange, std::string(name) + " applied outside its domain");
                auto t = f(i, j);
                if (!t || t->coef.is_zero()) continue;
                if (t->index != i + j || t->index < g.lo || t->index > g.hi || g.in_m(t->index) != out_m)
                    throw Error(ErrorKind::IndexOutOfRange, std::string(name) + "(z" + std::to_string(i) + ", z" +
                                                                std::to_string(j) + ") produced z" +
                                                                std::to_string(t->index));
                out.add(t->index, ci * cj * t->coef);
            }
        return out;
    }
    GradedVector phi(const GradedVector& a, const GradedVector& b) const { return apply(g.phi, "phi", true, true, true, a, b); }
    GradedVector theta(const GradedVector& a, const GradedVector& b) const { return apply(g.theta, "theta", true, true, false, a, b); }
    GradedVector mu(const GradedVector& a, const GradedVector& b) const { return apply(g.mu, "mu", false, false, false, a, b); }
    GradedVector gamma(const GradedVector& a, const GradedVector& b) const { return apply(g.gamma, "gamma", false, false, true, a, b); }
    GradedVector varphi(const GradedVector& a, const GradedVector& b) const { return apply(g.varphi, "varphi", false, true, true, a, b); }
    GradedVector psi(const GradedVector& a, const GradedVector& b) const { return apply(g.psi, "psi", false, true, false, a, b); }

    /// The bicocycle bracket of two basis vectors.
    [[nodiscard]] GradedVector bracket(long i, long j) const {
        const GradedVector zi(i, 1), zj(j, 1);
        GradedVector r;
        if (g.in_m(i) && g.in_m(j)) {
            r += phi(zi, zj);
            r += theta(zi, zj);
        } else if (g.in_h(i) && g.in_h(j)) {
            r += gamma(zi, zj);
            r += mu(zi, zj);
        } else if (g.in_h(i)) {
            r += varphi(zi, zj);
            r += psi(zi, zj);
        } else {
            r -= varphi(zj, zi);
            r -= psi(zj, zi);
        }
        return r;
    }
};

}  // namespace detail

/// Checks the reconstructed bracket against bracket_fn on all pairs with
/// index sum <= sum_bound, and A1..A9 on all tuples with index sum <= sum_bound.
inline AxiomReport graded_verify(const GradedLieData& g, long sum_bound, const VerifyOptions& opt = {}) {
    if (sum_bound < g.lo) throw Error(ErrorKind::IndexOutOfRange, "sum bound below the lowest index");
    const detail::GradedOps o{g};
    const long lo = g.lo;
    auto key = [lo](long i) { return static_cast<std::size_t>(i - lo); };
    auto name = [](long i) { return "z" + std::to_string(i); };
    AxiomReport rep;

    std::vector<std::array<long, 2>> pairs;
    for (long i = lo; i <= sum_bound - lo; ++i)
        for (long j = lo; i + j <= sum_bound; ++j) pairs.push_back({i, j});
    rep.entries.push_back(sweep("bracket", "reconstructed bracket equals the closed form", pairs.size(), opt,
                                [&](std::size_t t, std::vector<Violation>& out) {
                                    auto [i, j] = pairs[t];
                                    const GradedTerm want = g.bracket_fn(i, j);
                                    GradedVector r = o.bracket(i, j);
                                    r -= GradedVector(want.index, want.coef);
                                    if (!r.is_zero()) out.push_back({{key(i), key(j)}, {name(i), name(j)}, r.render(), ""});
                                }));

    // A1 on the four alternating maps.
    std::vector<std::array<long, 3>> a1;
    for (auto [i, j] : pairs) {
        if (j < i) continue;
        if (g.in_m(i) && g.in_m(j)) {
            a1.push_back({0, i, j});
            a1.push_back({1, i, j});
        } else if (g.in_h(i) && g.in_h(j)) {
            a1.push_back({2, i, j});
            a1.push_back({3, i, j});
        }
    }
    std::sort(a1.begin(), a1.end());
    static const char* alt_names[4] = {"phi", "theta", "mu", "gamma"};
    rep.entries.push_back(sweep("A1", "phi, theta, mu, gamma are alternating", a1.size(), opt,
                                [&](std::size_t t, std::vector<Violation>& out) {
                                    auto [w, i, j] = a1[t];
                                    const GradedVector zi(i, 1), zj(j, 1);
                                    GradedVector r;
                                    switch (w) {
                                        case 0: r = o.phi(zi, zj); r += o.phi(zj, zi); break;
                                        case 1: r = o.theta(zi, zj); r += o.theta(zj, zi); break;
                                        case 2: r = o.mu(zi, zj); r += o.mu(zj, zi); break;
                                        default: r = o.gamma(zi, zj); r += o.gamma(zj, zi); break;
                                    }
                                    if (!r.is_zero())
                                        out.push_back({{static_cast<std::size_t>(w), key(i), key(j)},
                                                       {name(i), name(j)}, r.render(), alt_names[w]});
                                }));

    // Triples of the given class pattern with bounded index sum.
    auto triples = [&](bool am, bool bm, bool cm) {
        std::vector<std::array<long, 3>> out;
        for (long a = lo; a <= sum_bound - 2 * lo; ++a) {
            if (g.in_m(a) != am) continue;
            for (long b = lo; a + b <= sum_bound - lo; ++b) {
                if (g.in_m(b) != bm) continue;
                for (long c = lo; a + b + c <= sum_bound; ++c)
                    if (g.in_m(c) == cm) out.push_back({a, b, c});
            }
        }
        return out;
    };
    auto run = [&](const char* id, const char* label, const std::vector<std::array<long, 3>>& ts, auto f) {
        return sweep(id, label, ts.size(), opt, [&](std::size_t t, std::vector<Violation>& out) {
            auto [a, b, c] = ts[t];
            GradedVector r = f(o, GradedVector(a, 1), GradedVector(b, 1), GradedVector(c, 1));
            if (!r.is_zero()) out.push_back({{key(a), key(b), key(c)}, {name(a), name(b), name(c)}, r.render(), ""});
        });
    };
    using O = detail::GradedOps;
    const auto mmh = triples(true, true, false), hhm = triples(false, false, true);
    const auto mmm = triples(true, true, true), hhh = triples(false, false, false);
    rep.entries.push_back(run("A2", "h acts on phi", mmh, axioms::a2<O>));
    rep.entries.push_back(run("A3", "h acts on theta; psi compatibility", mmh, axioms::a3<O>));
    rep.entries.push_back(run("A4", "m is an h-module up to gamma", hhm, axioms::a4<O>));
    if (opt.literal_axioms) {
        rep.entries.push_back(run("A4-literal", "printed variant of A4", hhm, axioms::a4_literal<O>));
        rep.entries.back().note = "literal";
    }
    rep.entries.push_back(run("A5", "mu and psi compatibility", hhm, axioms::a5<O>));
    rep.entries.push_back(run("A6", "Jacobi for phi up to theta", mmm, axioms::a6<O>));
    rep.entries.push_back(run("A7", "cocycle condition for theta", mmm, axioms::a7<O>));
    rep.entries.push_back(run("A8", "cocycle condition for gamma", hhh, axioms::a8<O>));
    rep.entries.push_back(run("A9", "Jacobi for mu up to gamma", hhh, axioms::a9<O>));
    return rep;
}

}  // namespace bicross
