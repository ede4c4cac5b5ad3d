#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qappell/appell.hpp"
#include "qappell/errors.hpp"
#include "qappell/multipoly.hpp"
#include "qappell/report.hpp"
#include "qappell/truncseries.hpp"

namespace qappell {

// sum_k weights[k] * D_q^k p / [k]_q! with D_q acting on var. Applied to a
// polynomial the sum is finite: it stops at k = deg_var(p), no truncation error.
inline MultiPoly apply_diff_operator(const MultiPoly& p, Var var,
                                     const std::vector<MultiPoly>& weights,
                                     const QContext& ctx) {
    MultiPoly r;
    MultiPoly dk = p;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        if (dk.is_zero()) break;
        if (!weights[k].is_zero())
            r += (weights[k] * dk).scaled(ctx.q_factorial(static_cast<long>(k)).inverse());
        dk = dk.q_derive(var, ctx);
    }
    return r;
}

// T(yD_q|u) = sum_k u^binom2(k) y^k D_{q,x}^k / [k]_q!; sends x^n to R_n(x,y;u|q).
inline MultiPoly apply_T(const MultiPoly& p, const QContext& ctx) {
    if (p.depends_on(Var::y)) throw Error("operator input must be free of y");
    int d = p.degree(Var::x);
    std::vector<MultiPoly> w;
    w.reserve(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k)
        w.push_back(MultiPoly::variable(Var::y, k).scaled(ctx.u_binom2(k)));
    return apply_diff_operator(p, Var::x, w, ctx);
}

// Coefficient-wise image of a series with x-polynomial coefficients.
inline TruncSeries apply_T_series(const TruncSeries& s) {
    TruncSeries r(s.order(), s.ctx());
    for (int n = 0; n <= s.order(); ++n) r.set_coeff(n, apply_T(s.coeff(n), s.context()));
    return r;
}

// sum_k u^binom2(k) a_k y^k D_q^k / [k]_q!  (the order-alpha exponential operator)
inline MultiPoly apply_appell_op(const AppellFamily& F, const MultiPoly& p, Var var) {
    const QContext& ctx = F.context();
    int d = p.degree(var);
    if (d > F.order()) throw IndexOutOfRange("operator needs family numbers beyond its order");
    std::vector<MultiPoly> w;
    w.reserve(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k)
        w.push_back(MultiPoly::variable(Var::y, k).scaled(ctx.u_binom2(k) * F.number(k)));
    return apply_diff_operator(p, var, w, ctx);
}

// sum_k P_k(x;u) y^k D_q^k / [k]_q!  (the bivariate-coefficient operator)
inline MultiPoly apply_appell_op_bivar(const AppellFamily& F, const MultiPoly& p, Var var) {
    const QContext& ctx = F.context();
    int d = p.degree(var);
    if (d > F.order()) throw IndexOutOfRange("operator needs family numbers beyond its order");
    std::vector<MultiPoly> w;
    w.reserve(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k)
        w.push_back(appell_poly(F, k, Var::x) * MultiPoly::variable(Var::y, k));
    return apply_diff_operator(p, var, w, ctx);
}

// Q_n(x,y;u) = sum_k [n k]_q u^binom2(k) a_k y^k x^{n-k}
inline MultiPoly quasi_homog(const AppellFamily& F, int n) {
    if (n < 0 || n > F.order()) throw IndexOutOfRange("polynomial index beyond family order");
    const QContext& ctx = F.context();
    MultiPoly p;
    for (int k = 0; k <= n; ++k) {
        Rational c = ctx.q_binomial(n, k) * ctx.u_binom2(k) * F.number(k);
        if (c.is_zero()) continue;
        ExpVec e{0, 0, 0, 0, 0};
        e[static_cast<int>(Var::x)] = n - k;
        e[static_cast<int>(Var::y)] = k;
        p += MultiPoly::monomial(c, e);
    }
    return p;
}

// Q_n(x,y,z;u) = sum_k [n k]_q P_k(x;u) y^k z^{n-k}
inline MultiPoly quasi_trivar(const AppellFamily& F, int n) {
    if (n < 0 || n > F.order()) throw IndexOutOfRange("polynomial index beyond family order");
    const QContext& ctx = F.context();
    MultiPoly p;
    for (int k = 0; k <= n; ++k) {
        ExpVec e{0, 0, 0, 0, 0};
        e[static_cast<int>(Var::y)] = k;
        e[static_cast<int>(Var::z)] = n - k;
        p += appell_poly(F, k, Var::x).scaled(ctx.q_binomial(n, k)) *
             MultiPoly::monomial(Rational(1), e);
    }
    return p;
}

// Independent route: the bivariate-coefficient operator applied to z^n.
inline MultiPoly quasi_trivar_operator(const AppellFamily& F, int n) {
    return apply_appell_op_bivar(F, MultiPoly::variable(Var::z, n), Var::z);
}

namespace detail {

inline void stamp(VerificationReport& rep, const AppellFamily& F, int order) {
    rep.params["family"] = F.label();
    rep.params["q"] = F.context().q().str();
    rep.params["u"] = F.context().u().str();
    rep.order = order;
}

} // namespace detail

// sum_n Q_n(x,y,z;u) t^n/[n]_q!  ==  e_q(zt) * A^alpha(yt) * e_q(xy*t, u).
// The deformed factor's argument is x*y*t: the t-coefficients of the right
// side must be polynomials, which pins that reading.
inline VerificationReport quasi_genfun_check(const AppellFamily& F, int N) {
    if (N > F.order()) throw IndexOutOfRange("verification order beyond family order");
    const CtxPtr& ctx = F.ctx();
    VerificationReport rep;
    rep.identity = "quasi-trivariate-generating-function";
    detail::stamp(rep, F, N);
    rep.note("deformed exponential factor taken with argument x*y*t");

    TruncSeries lhs(N, ctx);
    for (int n = 0; n <= N; ++n) lhs.set_coeff(n, quasi_trivar(F, n));

    MultiPoly xy = MultiPoly::variable(Var::x) * MultiPoly::variable(Var::y);
    TruncSeries rhs = TruncSeries::exp_small(MultiPoly::variable(Var::z), N, ctx)
                          .mul(F.determining_series().arg_scaled(MultiPoly::variable(Var::y)))
                          .mul(TruncSeries::deformed_exp(xy, ctx->u(), N, ctx));

    for (int n = 0; n <= N; ++n)
        rep.require(lhs.coeff(n) == rhs.coeff(n), n, lhs.coeff(n), rhs.coeff(n));
    return rep;
}

// sum_n q^binom2(n) Q_n(x,y,z;u) t^n/[n]_q!
//   ==  E_q(zt) * sum_k q^binom2(k) P_k(x;u) (ty)^k / ((-(1-q)zt;q)_k [k]_q!).
inline VerificationReport quasi_weighted_genfun_check(const AppellFamily& F, int N) {
    if (N > F.order()) throw IndexOutOfRange("verification order beyond family order");
    const QContext& c = F.context();
    if (c.q_is_one()) throw QIsOne("the weighted generating identity divides by (1-q)");
    const CtxPtr& ctx = F.ctx();
    VerificationReport rep;
    rep.identity = "quasi-trivariate-weighted-generating-function";
    detail::stamp(rep, F, N);

    TruncSeries lhs(N, ctx);
    for (int n = 0; n <= N; ++n)
        lhs.set_coeff(n, quasi_trivar(F, n).scaled(c.q_pow(binom2(n))));

    Rational one_minus_q = Rational(1) - c.q();
    MultiPoly neg_arg = MultiPoly::variable(Var::z).scaled(-one_minus_q);
    TruncSeries sum(N, ctx);
    for (int k = 0; k <= N; ++k) {
        TruncSeries invpoch = TruncSeries::pochhammer_t(neg_arg, k, N, ctx).inv();
        MultiPoly ck = (appell_poly(F, k, Var::x) * MultiPoly::variable(Var::y, k))
                           .scaled(c.q_pow(binom2(k)) / c.q_factorial(k));
        sum = sum.add(invpoch.mul_t_monomial(k, ck));
    }
    TruncSeries rhs = TruncSeries::exp_big(MultiPoly::variable(Var::z), N, ctx).mul(sum);

    for (int n = 0; n <= N; ++n)
        rep.require(lhs.coeff(n) == rhs.coeff(n), n, lhs.coeff(n), rhs.coeff(n));
    return rep;
}

// Shift laws the bilinear expansions lean on, checked as truncated series:
//   e_q(q^k zt) = e_q(zt) * ((1-q)zt;q)_k
//   E_q(q^k zt) * (-(1-q)zt;q)_k = E_q(zt)
inline VerificationReport exp_shift_law_check(int k_max, int N, const CtxPtr& ctx) {
    VerificationReport rep;
    rep.identity = "exponential-shift-laws";
    rep.params["q"] = ctx->q().str();
    rep.params["u"] = ctx->u().str();
    rep.order = N;
    Rational one_minus_q = Rational(1) - ctx->q();
    MultiPoly zv = MultiPoly::variable(Var::z);
    TruncSeries eq = TruncSeries::exp_small(zv, N, ctx);
    TruncSeries Eq = TruncSeries::exp_big(zv, N, ctx);
    for (int k = 0; k <= k_max; ++k) {
        Rational qk = ctx->q_pow(k);
        TruncSeries lhs_small = TruncSeries::exp_small(zv.scaled(qk), N, ctx);
        TruncSeries rhs_small =
            eq.mul(TruncSeries::pochhammer_t(zv.scaled(one_minus_q), k, N, ctx));
        for (int n = 0; n <= N; ++n)
            rep.require(lhs_small.coeff(n) == rhs_small.coeff(n), json{{"k", k}, {"n", n}},
                        lhs_small.coeff(n), rhs_small.coeff(n));
        TruncSeries lhs_big =
            TruncSeries::exp_big(zv.scaled(qk), N, ctx)
                .mul(TruncSeries::pochhammer_t(zv.scaled(-one_minus_q), k, N, ctx));
        for (int n = 0; n <= N; ++n)
            rep.require(lhs_big.coeff(n) == Eq.coeff(n), json{{"k", k}, {"n", n}},
                        lhs_big.coeff(n), Eq.coeff(n));
    }
    return rep;
}

// The inner expansion of the bilinear (Mehler-type) proof:
//   sum_n (ywt)^n/[n]_q! P_{n+k}(x;u)
//     == sum_{i<=k} [k i]_q u^binom2(k-i) x^{k-i} A_{q,i}(ywt) e_q(q^i u^{k-i} ywx t, u)
// where A_{q,i} is the determining series with its first i coefficients dropped.
inline VerificationReport mehler_inner_check(const AppellFamily& F, int k, int N) {
    if (k < 0 || k > N) throw IndexOutOfRange("shift index must satisfy 0 <= k <= N");
    if (F.order() < N + k)
        throw IndexOutOfRange("family order too small: need order >= N + k");
    const QContext& c = F.context();
    const CtxPtr& ctx = F.ctx();
    VerificationReport rep;
    rep.identity = "mehler-inner-shifted-expansion";
    detail::stamp(rep, F, N);
    rep.params["k"] = std::to_string(k);

    MultiPoly yw = MultiPoly::variable(Var::y) * MultiPoly::variable(Var::w);
    MultiPoly ywx = yw * MultiPoly::variable(Var::x);

    TruncSeries lhs(N, ctx);
    MultiPoly ywpow = MultiPoly::one();
    for (int n = 0; n <= N; ++n) {
        lhs.set_coeff(n, ywpow * appell_poly(F, n + k, Var::x));
        if (n < N) ywpow *= yw;
    }

    TruncSeries det = F.determining_series();
    TruncSeries rhs(N, ctx);
    for (int i = 0; i <= k; ++i) {
        TruncSeries Ai = det.shifted(i).arg_scaled(yw);
        TruncSeries ex = TruncSeries::deformed_exp(
            ywx.scaled(c.q_pow(i) * c.u().pow(k - i)), c.u(), N, ctx);
        Rational s = c.q_binomial(k, i) * c.u_binom2(k - i);
        MultiPoly xpow = MultiPoly::variable(Var::x, k - i).scaled(s);
        rhs = rhs.add(Ai.mul(ex).scaled(xpow));
    }

    for (int n = 0; n <= N; ++n)
        rep.require(lhs.coeff(n) == rhs.coeff(n), n, lhs.coeff(n), rhs.coeff(n));
    return rep;
}

// Mehler-type bilinear expansion:
//   sum_n Q_n^{(alpha)}(x,y,z;u) P_n^{(beta)}(w) t^n/[n]_q!
//     == e_q(wzt) sum_i A^{alpha}_{q,i}(ywt)(yt)^i/[i]_q!
//        sum_k u^binom2(k) A^{beta}_{q,k+i}(zt) ((1-q)wzt;q)_{k+i} (xyt)^k/[k]_q!
//              e_q(q^i u^k ywx t, u)
// P^{(beta)}(w) is the undeformed polynomial of the beta family; each shifted
// determining series uses its own family's coefficients; the final deformed
// exponential has argument y*w*x*t. The i,k sums stop at i+k = N: every term
// carries at least t^{i+k}.
inline VerificationReport mehler_verify(const AppellFamily& Fa, const AppellFamily& Gb,
                                        int N) {
    require_same_ctx(Fa.context(), Gb.context());
    const QContext& c = Fa.context();
    if (c.q_is_one()) throw QIsOne("the bilinear expansion divides by (1-q)");
    if (Fa.degenerate() || Gb.degenerate())
        throw DegeneracyError("bilinear expansion needs nonvanishing determining series");
    if (Fa.order() < N || Gb.order() < N)
        throw IndexOutOfRange("family order too small: need order >= N");
    const CtxPtr& ctx = Fa.ctx();

    VerificationReport rep;
    rep.identity = "mehler-bilinear-expansion";
    rep.params["family_alpha"] = Fa.label();
    rep.params["family_beta"] = Gb.label();
    rep.params["q"] = c.q().str();
    rep.params["u"] = c.u().str();
    rep.order = N;
    rep.note("undeformed polynomials of the second family enter the left side");
    rep.note("each shifted determining series uses its own family's coefficients");
    rep.note("final deformed exponential argument is q^i u^k * y*w*x * t");

    TruncSeries lhs(N, ctx);
    for (int n = 0; n <= N; ++n)
        lhs.set_coeff(n, quasi_trivar(Fa, n) * appell_poly_with_u(Gb, n, Var::w, Rational(1)));

    MultiPoly wz = MultiPoly::variable(Var::w) * MultiPoly::variable(Var::z);
    MultiPoly yw = MultiPoly::variable(Var::y) * MultiPoly::variable(Var::w);
    MultiPoly ywx = yw * MultiPoly::variable(Var::x);
    Rational one_minus_q = Rational(1) - c.q();

    TruncSeries detA = Fa.determining_series();
    TruncSeries detB = Gb.determining_series();

    TruncSeries rhs(N, ctx);
    for (int i = 0; i <= N; ++i) {
        TruncSeries Ai = detA.shifted(i).arg_scaled(yw); // order N-i
        for (int k = 0; i + k <= N; ++k) {
            TruncSeries Bki = detB.shifted(i + k).arg_scaled(MultiPoly::variable(Var::z));
            TruncSeries poch =
                TruncSeries::pochhammer_t(wz.scaled(one_minus_q), i + k, N - i - k, ctx);
            TruncSeries ex = TruncSeries::deformed_exp(
                ywx.scaled(c.q_pow(i) * c.u().pow(k)), c.u(), N - i - k, ctx);
            TruncSeries core = Ai.mul(Bki).mul(poch).mul(ex); // order N-i-k, exact there
            Rational s = c.u().pow(binom2(k)) / (c.q_factorial(i) * c.q_factorial(k));
            ExpVec me{0, 0, 0, 0, 0};
            me[static_cast<int>(Var::x)] = k; // (yt)^i (xyt)^k, the t part shifts indices
            me[static_cast<int>(Var::y)] = i + k;
            rhs = rhs.add(core.mul_t_monomial(i + k, MultiPoly::monomial(s, me), N));
        }
    }
    rhs = rhs.mul(TruncSeries::deformed_exp(wz, Rational(1), N, ctx));

    for (int n = 0; n <= N; ++n)
        rep.require(lhs.coeff(n) == rhs.coeff(n), n, lhs.coeff(n), rhs.coeff(n));
    return rep;
}

// Rogers-type double expansion on the (t,s) triangle:
//   sum_{n,m} Q_{n+m}(x,y,z;u) t^n/[n]_q! s^m/[m]_q!
//     == e_q(zt) e_q(zs) sum_n P_n(x;u) y^n/[n]_q!
//          sum_{k<=n} [n k]_q t^k s^{n-k} ((1-q)zs;q)_k
inline VerificationReport rogers_verify(const AppellFamily& F, int N) {
    const QContext& c = F.context();
    if (c.q_is_one()) throw QIsOne("the double expansion divides by (1-q)");
    if (F.order() < N) throw IndexOutOfRange("family order too small: need order >= N");
    const CtxPtr& ctx = F.ctx();

    VerificationReport rep;
    rep.identity = "rogers-double-expansion";
    detail::stamp(rep, F, N);

    BiTruncSeries lhs(N, ctx);
    for (int n = 0; n <= N; ++n)
        for (int m = 0; n + m <= N; ++m) lhs.set_coeff(n, m, quasi_trivar(F, n + m));

    // The inner double sum, assembled from raw monomials t^k s^{n-k+j}.
    Rational one_minus_q = Rational(1) - c.q();
    MultiPoly zfac = MultiPoly::variable(Var::z).scaled(one_minus_q);
    BiTruncSeries sum(N, ctx);
    for (int n = 0; n <= N; ++n) {
        MultiPoly pn = (appell_poly(F, n, Var::x) * MultiPoly::variable(Var::y, n))
                           .scaled(c.q_factorial(n).inverse());
        for (int k = 0; k <= n; ++k) {
            // ((1-q)zs;q)_k expanded in powers of s
            std::vector<MultiPoly> poch{MultiPoly::one()};
            MultiPoly qj_zfac = zfac;
            for (int j = 0; j < k; ++j) {
                poch.push_back(MultiPoly());
                for (int d = static_cast<int>(poch.size()) - 1; d >= 1; --d)
                    poch[static_cast<std::size_t>(d)] -= poch[static_cast<std::size_t>(d - 1)] * qj_zfac;
                qj_zfac = qj_zfac.scaled(c.q());
            }
            Rational bin = c.q_binomial(n, k);
            for (int j = 0; j < static_cast<int>(poch.size()); ++j) {
                if (poch[static_cast<std::size_t>(j)].is_zero()) continue;
                sum.add_raw_monomial(k, n - k + j,
                                     (pn * poch[static_cast<std::size_t>(j)]).scaled(bin));
            }
        }
    }
    MultiPoly zv = MultiPoly::variable(Var::z);
    BiTruncSeries rhs = BiTruncSeries::outer(TruncSeries::exp_small(zv, N, ctx),
                                             TruncSeries::exp_small(zv, N, ctx))
                            .mul(sum);

    for (int n = 0; n <= N; ++n)
        for (int m = 0; n + m <= N; ++m)
            rep.require(lhs.coeff(n, m) == rhs.coeff(n, m), json::array({n, m}),
                        lhs.coeff(n, m), rhs.coeff(n, m));
    return rep;
}

// P_n(x;u) = u^binom2(n) Q_n(x, u^{1-n}; u): substituting u^{1-n} for y in the
// homogeneous quasi-polynomial recovers the univariate family (u != 0).
// In the trivariate family, Q_n(y,1,x;u) = P_n(x,y;u): the first slot carries
// the deformation, so it lands in the deformed (second) argument of P.
inline VerificationReport relating_identity_check(const AppellFamily& F, int n_max) {
    if (n_max > F.order()) throw IndexOutOfRange("n_max beyond family order");
    const QContext& c = F.context();
    if (c.u_is_zero() && n_max >= 2)
        throw DeformationZero("the y-substitution needs a negative power of u");
    VerificationReport rep;
    rep.identity = "quasi-to-appell-relating-identities";
    detail::stamp(rep, F, n_max);
    rep.note("deformation exponent 1-n used in the y-substitution");
    rep.note("trivariate slots read as Q_n(y,1,x;u) = P_n(x,y;u)");

    for (int n = 0; n <= n_max; ++n) {
        MultiPoly lhs1 = quasi_homog(F, n)
                             .substitute(Var::y, MultiPoly::constant(c.u_pow(1 - n)))
                             .scaled(c.u_binom2(n));
        MultiPoly rhs1 = appell_poly(F, n, Var::x);
        rep.require(lhs1 == rhs1, json{{"identity", "univariate"}, {"n", n}}, lhs1, rhs1);

        MultiPoly lhs2 = quasi_trivar(F, n)
                             .substitute(Var::y, MultiPoly::one())
                             .substitute(Var::x, MultiPoly::variable(Var::y))
                             .substitute(Var::z, MultiPoly::variable(Var::x));
        MultiPoly rhs2 = appell_bivar(F, n);
        rep.require(lhs2 == rhs2, json{{"identity", "bivariate"}, {"n", n}}, lhs2, rhs2);
    }
    return rep;
}

} // namespace qappell
