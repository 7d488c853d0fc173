// Residuals of the nine matched-pair axioms, written once for any map
// backend. Each residual is one component of a Jacobi sum on m + h and is
// zero exactly when the axiom holds on that tuple.
//
// Ops must provide the types M and H (vector-like, closed under + and -) and
//   phi(M,M)->M  theta(M,M)->H  mu(H,H)->H  gamma(H,H)->M
//   varphi(H,M)->M  psi(H,M)->H
#pragma once

namespace bicross::axioms {

// J(x, y, z) for x, y in m and z in h: m-component.
template <class O>
typename O::M a2(const O& o, const typename O::M& x, const typename O::M& y, const typename O::H& z) {
    auto r = o.gamma(o.theta(x, y), z);
    r -= o.varphi(z, o.phi(x, y));
    r -= o.phi(o.varphi(z, y), x);
    r -= o.varphi(o.psi(z, y), x);
    r += o.phi(o.varphi(z, x), y);
    r += o.varphi(o.psi(z, x), y);
    return r;
}

// J(x, y, z) for x, y in m and z in h: h-component.
template <class O>
typename O::H a3(const O& o, const typename O::M& x, const typename O::M& y, const typename O::H& z) {
    auto r = o.mu(o.theta(x, y), z);
    r -= o.psi(z, o.phi(x, y));
    r -= o.psi(o.psi(z, y), x);
    r -= o.theta(o.varphi(z, y), x);
    r += o.psi(o.psi(z, x), y);
    r += o.theta(o.varphi(z, x), y);
    return r;
}

// J(z, w, x) for z, w in h and x in m: m-component.
template <class O>
typename O::M a4(const O& o, const typename O::H& z, const typename O::H& w, const typename O::M& x) {
    auto r = o.phi(o.gamma(z, w), x);
    r += o.varphi(o.mu(z, w), x);
    r -= o.varphi(z, o.varphi(w, x));
    r += o.gamma(o.psi(w, x), z);
    r += o.varphi(w, o.varphi(z, x));
    r -= o.gamma(o.psi(z, x), w);
    return r;
}

// The printed variant of a4, rearranged as lhs - rhs.
template <class O>
typename O::M a4_literal(const O& o, const typename O::H& z, const typename O::H& w, const typename O::M& x) {
    auto r = o.varphi(o.mu(z, w), x);
    r -= o.varphi(z, o.varphi(w, x));
    r += o.varphi(z, o.varphi(w, x));
    r -= o.gamma(o.psi(z, x), w);
    r -= o.gamma(z, o.psi(w, x));
    r += o.phi(o.gamma(z, w), x);
    return r;
}

// J(z, w, x) for z, w in h and x in m: h-component.
template <class O>
typename O::H a5(const O& o, const typename O::H& z, const typename O::H& w, const typename O::M& x) {
    auto r = o.psi(o.mu(z, w), x);
    r += o.theta(o.gamma(z, w), x);
    r += o.mu(o.psi(w, x), z);
    r -= o.psi(z, o.varphi(w, x));
    r -= o.mu(o.psi(z, x), w);
    r += o.psi(w, o.varphi(z, x));
    return r;
}

// J(x, y, v) on m: m-component.
template <class O>
typename O::M a6(const O& o, const typename O::M& x, const typename O::M& y, const typename O::M& v) {
    auto term = [&](const auto& a, const auto& b, const auto& c) {
        auto t = o.phi(o.phi(a, b), c);
        t += o.varphi(o.theta(a, b), c);
        return t;
    };
    auto r = term(x, y, v);
    r += term(y, v, x);
    r += term(v, x, y);
    return r;
}

// J(x, y, v) on m: h-component.
template <class O>
typename O::H a7(const O& o, const typename O::M& x, const typename O::M& y, const typename O::M& v) {
    auto term = [&](const auto& a, const auto& b, const auto& c) {
        auto t = o.psi(o.theta(a, b), c);
        t += o.theta(o.phi(a, b), c);
        return t;
    };
    auto r = term(x, y, v);
    r += term(y, v, x);
    r += term(v, x, y);
    return r;
}

// J(z, w, u) on h: m-component.
template <class O>
typename O::M a8(const O& o, const typename O::H& z, const typename O::H& w, const typename O::H& u) {
    auto term = [&](const auto& a, const auto& b, const auto& c) {
        auto t = o.gamma(o.mu(a, b), c);
        t -= o.varphi(c, o.gamma(a, b));
        return t;
    };
    auto r = term(z, w, u);
    r += term(w, u, z);
    r += term(u, z, w);
    return r;
}

// J(z, w, u) on h: h-component.
template <class O>
typename O::H a9(const O& o, const typename O::H& z, const typename O::H& w, const typename O::H& u) {
    auto term = [&](const auto& a, const auto& b, const auto& c) {
        auto t = o.mu(o.mu(a, b), c);
        t -= o.psi(c, o.gamma(a, b));
        return t;
    };
    auto r = term(z, w, u);
    r += term(w, u, z);
    r += term(u, z, w);
    return r;
}

}  // namespace bicross::axioms
