#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qappell/errors.hpp"
#include "qappell/multipoly.hpp"
#include "qappell/report.hpp"
#include "qappell/truncseries.hpp"

namespace qappell {

enum class NamedKind { bernoulli, euler, genocchi };

inline const char* to_string(NamedKind k) {
    switch (k) {
        case NamedKind::bernoulli: return "bernoulli";
        case NamedKind::euler: return "euler";
        case NamedKind::genocchi: return "genocchi";
    }
    return "?";
}

// A deformed q-Appell family: a determining base series A_q(t) with scalar
// coefficients, an integer order alpha, and the derived number sequence
// a_n = coefficients of A_q(t)^alpha. vanish_order() is the order of
// vanishing of the base at t = 0; families with a vanishing base (Genocchi
// type) are carried as degenerate: positive orders work, negative orders
// are rejected.
class AppellFamily {
public:
    static AppellFamily from_series(TruncSeries base, long alpha,
                                    std::string label = "custom") {
        if (!base.has_scalar_coeffs())
            throw NonScalarCoefficients("determining series must have variable-free coefficients");
        int nu = base.vanishing_order();
        if (nu > base.order())
            throw ZeroConstantTerm("determining series is identically zero");
        if (alpha < 0 && nu > 0)
            throw ZeroConstantTerm("negative order of a determining series vanishing at t = 0");
        TruncSeries det = base.ipow(alpha);
        std::vector<Rational> a;
        a.reserve(static_cast<std::size_t>(det.order()) + 1);
        for (int n = 0; n <= det.order(); ++n) a.push_back(det.coeff(n).constant_value());
        return AppellFamily(std::move(base), alpha, std::move(a), nu, std::move(label));
    }

    // bernoulli: base = inverse of (e_q(t)-1)/t  (coefficients 1/[m+1]_q);
    // euler:     base = inverse of (e_q(t)+1)/2;
    // genocchi:  base = t * (euler base), vanishing order 1.
    static AppellFamily named(NamedKind kind, long alpha, int order, CtxPtr ctx) {
        TruncSeries base(order, ctx);
        switch (kind) {
            case NamedKind::bernoulli: {
                std::vector<Rational> c;
                for (int m = 0; m <= order; ++m)
                    c.push_back(ctx->q_number(m + 1).inverse());
                base = TruncSeries::from_scalar_coeffs(c, ctx).inv();
                break;
            }
            case NamedKind::euler: {
                base = euler_base(order, ctx);
                break;
            }
            case NamedKind::genocchi: {
                base = euler_base(order, ctx).mul_t_monomial(1, MultiPoly::one());
                break;
            }
        }
        std::string label = std::string(to_string(kind)) + "(" + std::to_string(alpha) + ")";
        return from_series(std::move(base), alpha, std::move(label));
    }

    const TruncSeries& base() const { return base_; }
    long alpha() const { return alpha_; }
    int order() const { return base_.order(); }
    int vanish_order() const { return vanish_; }
    bool degenerate() const { return vanish_ > 0; }
    const CtxPtr& ctx() const { return base_.ctx(); }
    const QContext& context() const { return base_.context(); }
    const std::string& label() const { return label_; }

    // a_n^{(alpha)}
    const std::vector<Rational>& numbers() const { return a_; }
    const Rational& number(int n) const {
        if (n < 0 || n >= static_cast<int>(a_.size()))
            throw IndexOutOfRange("family number index beyond series order");
        return a_[static_cast<std::size_t>(n)];
    }

    TruncSeries determining_series() const {
        return TruncSeries::from_scalar_coeffs(a_, base_.ctx());
    }

private:
    AppellFamily(TruncSeries base, long alpha, std::vector<Rational> a, int vanish,
                 std::string label)
        : base_(std::move(base)), alpha_(alpha), a_(std::move(a)), vanish_(vanish),
          label_(std::move(label)) {}

    static TruncSeries euler_base(int order, const CtxPtr& ctx) {
        std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(1, 2));
        c[0] = Rational(1);
        return TruncSeries::from_scalar_coeffs(c, ctx).inv();
    }

    TruncSeries base_;
    long alpha_;
    std::vector<Rational> a_;
    int vanish_;
    std::string label_;
};

// P_n(v;u0) = sum_k [n k]_q u0^binom2(n-k) a_k v^{n-k}
inline MultiPoly appell_poly_with_u(const AppellFamily& F, int n, Var v,
                                    const Rational& u0) {
    if (n < 0 || n > F.order()) throw IndexOutOfRange("polynomial index beyond family order");
    const QContext& ctx = F.context();
    MultiPoly p;
    for (int k = 0; k <= n; ++k) {
        Rational c = ctx.q_binomial(n, k) * u0.pow(binom2(n - k)) * F.number(k);
        p += MultiPoly::monomial(c, MultiPoly::exp_of(v, n - k));
    }
    return p;
}

// The deformed polynomial P_n(v;u) of the family.
inline MultiPoly appell_poly(const AppellFamily& F, int n, Var v = Var::x) {
    return appell_poly_with_u(F, n, v, F.context().u());
}

// The undeformed polynomial P_n(v) (u = 1).
inline MultiPoly appell_poly_classical(const AppellFamily& F, int n, Var v = Var::x) {
    return appell_poly_with_u(F, n, v, Rational(1));
}

// Homogeneous polynomials R_n(x,y;u|q) = sum_k [n k]_q u^binom2(n-k) x^k y^{n-k};
// the order-0 case of the bivariate family.
inline MultiPoly homog_R(int n, const QContext& ctx) {
    MultiPoly p;
    for (int k = 0; k <= n; ++k) {
        Rational c = ctx.q_binomial(n, k) * ctx.u_binom2(n - k);
        ExpVec e{0, 0, 0, 0, 0};
        e[static_cast<int>(Var::x)] = k;
        e[static_cast<int>(Var::y)] = n - k;
        p += MultiPoly::monomial(c, e);
    }
    return p;
}

// Three equivalent expansions of the bivariate polynomial P_n(x,y;u).
enum class BivarRoute {
    classical_x, // sum_k [n k]_q u^binom2(n-k) P_k(x) y^{n-k}
    deformed_y,  // sum_k [n k]_q P_k(y;u) x^{n-k}
    homog_conv,  // sum_k [n k]_q a_k R_{n-k}(x,y;u|q)
};

inline MultiPoly appell_bivar(const AppellFamily& F, int n,
                              BivarRoute route = BivarRoute::homog_conv) {
    if (n < 0 || n > F.order()) throw IndexOutOfRange("polynomial index beyond family order");
    const QContext& ctx = F.context();
    MultiPoly p;
    switch (route) {
        case BivarRoute::classical_x:
            for (int k = 0; k <= n; ++k) {
                Rational c = ctx.q_binomial(n, k) * ctx.u_binom2(n - k);
                p += appell_poly_classical(F, k, Var::x).scaled(c) *
                     MultiPoly::variable(Var::y, n - k);
            }
            break;
        case BivarRoute::deformed_y:
            for (int k = 0; k <= n; ++k) {
                p += appell_poly(F, k, Var::y).scaled(ctx.q_binomial(n, k)) *
                     MultiPoly::variable(Var::x, n - k);
            }
            break;
        case BivarRoute::homog_conv:
            for (int k = 0; k <= n; ++k) {
                Rational c = ctx.q_binomial(n, k) * F.number(k);
                if (c.is_zero()) continue;
                p += homog_R(n - k, ctx).scaled(c);
            }
            break;
    }
    return p;
}

// The sequence A_n(a;u) (a polynomial in the variable a) defined by
//   sum_k [n k]_q u^{k(k-n)} a^k A_{n-k}(a;u) = 1,   A_0 = 1.
// The u^{k(k-n)} weights carry negative powers of u, hence u != 0.
inline std::vector<MultiPoly> a_sequence_table(int nmax, const QContext& ctx) {
    if (ctx.u_is_zero())
        throw DeformationZero("the deformation-quotient sequence needs u != 0");
    std::vector<MultiPoly> A;
    A.reserve(static_cast<std::size_t>(nmax) + 1);
    A.push_back(MultiPoly::one());
    for (int n = 1; n <= nmax; ++n) {
        MultiPoly rhs = MultiPoly::one();
        for (int k = 1; k <= n; ++k) {
            Rational c = ctx.q_binomial(n, k) * ctx.u_pow(static_cast<long>(k) * (k - n));
            rhs -= A[static_cast<std::size_t>(n - k)].scaled(c) * MultiPoly::variable(Var::a, k);
        }
        A.push_back(std::move(rhs));
    }
    return A;
}

inline MultiPoly a_sequence(int n, const QContext& ctx) {
    if (n < 0) throw IndexOutOfRange("sequence index must be nonnegative");
    return a_sequence_table(n, ctx).back();
}

// Rebuilds P_n(x,y;u) through the A-sequence:
//   sum_k [n k]_q u^binom2(k) A_k(a0;u) y^k P_{n-k}(x, a0*y; u).
// Contract: equals appell_bivar(F, n) for every rational a0.
inline MultiPoly reproduce_via_a_sequence(const AppellFamily& F, int n, const Rational& a0) {
    if (n < 0 || n > F.order()) throw IndexOutOfRange("polynomial index beyond family order");
    const QContext& ctx = F.context();
    std::vector<MultiPoly> A = a_sequence_table(n, ctx);
    std::map<Var, Rational> at{{Var::a, a0}};
    MultiPoly p;
    for (int k = 0; k <= n; ++k) {
        Rational c = ctx.q_binomial(n, k) * ctx.u_binom2(k) *
                     A[static_cast<std::size_t>(k)].eval(at);
        if (c.is_zero()) continue;
        MultiPoly tail = appell_bivar(F, n - k).scale_var(Var::y, a0);
        p += tail.scaled(c) * MultiPoly::variable(Var::y, k);
    }
    return p;
}

// sum_k [n k]_q P_k^{(alpha)}(x) P_{n-k}^{(beta)}(y;u) over two families;
// when they share a base this is the bivariate order-(alpha+beta) polynomial.
inline MultiPoly addition_convolve(const AppellFamily& F, const AppellFamily& G, int n) {
    require_same_ctx(F.context(), G.context());
    if (n < 0 || n > F.order() || n > G.order())
        throw IndexOutOfRange("polynomial index beyond family order");
    const QContext& ctx = F.context();
    MultiPoly p;
    for (int k = 0; k <= n; ++k) {
        p += (appell_poly_classical(F, k, Var::x) * appell_poly(G, n - k, Var::y))
                 .scaled(ctx.q_binomial(n, k));
    }
    return p;
}

// Checks the four equivalent descriptions of a deformed q-Appell sequence
// against each other for n <= n_max:
//   (1) the derivative recursion D_q P_n(x;u) = [n]_q P_{n-1}(ux;u),
//   (2) the explicit double sum over the numbers a_k,
//   (3) coefficient extraction from A_q(t)^alpha e_q(xt,u),
//   (4) the operator sum (sum_k u^binom2(n-k) a_k D_q^k/[k]_q!) x^n.
inline VerificationReport characterization_check(const AppellFamily& F, int n_max) {
    if (F.degenerate())
        throw DegeneracyError("characterization needs a nonvanishing determining series");
    if (n_max > F.order()) throw IndexOutOfRange("n_max beyond family order");
    const QContext& ctx = F.context();
    VerificationReport rep;
    rep.identity = "appell-characterization-four-routes";
    rep.params["family"] = F.label();
    rep.params["q"] = ctx.q().str();
    rep.params["u"] = ctx.u().str();
    rep.order = n_max;

    TruncSeries gf = F.determining_series().mul(
        TruncSeries::deformed_exp(MultiPoly::variable(Var::x), ctx.u(), F.order(), F.ctx()));

    MultiPoly prev;
    for (int n = 0; n <= n_max; ++n) {
        MultiPoly explicit_sum = appell_poly(F, n); // route (2), the reference
        if (n > 0) {
            MultiPoly lhs = explicit_sum.q_derive(Var::x, ctx);
            MultiPoly rhs = prev.scale_var(Var::x, ctx.u()).scaled(ctx.q_number(n));
            rep.require(lhs == rhs, json{{"route", 1}, {"n", n}}, lhs, rhs);
        }
        rep.require(gf.coeff(n) == explicit_sum, json{{"route", 3}, {"n", n}}, gf.coeff(n),
                    explicit_sum);
        MultiPoly op_sum;
        for (int k = 0; k <= n; ++k) {
            Rational c = ctx.u_binom2(n - k) * F.number(k) / ctx.q_factorial(k);
            op_sum += MultiPoly::variable(Var::x, n).q_derive_k(Var::x, k, ctx).scaled(c);
        }
        rep.require(op_sum == explicit_sum, json{{"route", 4}, {"n", n}}, op_sum, explicit_sum);
        prev = std::move(explicit_sum);
    }
    return rep;
}

} // namespace qappell
