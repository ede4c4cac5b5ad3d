#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "qappell/operators.hpp"

using namespace qappell;

namespace {

CtxPtr make_ctx(Rational q, Rational u) {
    return std::make_shared<QContext>(std::move(q), std::move(u));
}

MultiPoly X(int e = 1) { return MultiPoly::variable(Var::x, e); }
MultiPoly Y(int e = 1) { return MultiPoly::variable(Var::y, e); }
MultiPoly Z(int e = 1) { return MultiPoly::variable(Var::z, e); }

AppellFamily base_one(int order, const CtxPtr& ctx) {
    return AppellFamily::from_series(TruncSeries::one(order, ctx), 1, "base1");
}

} // namespace

TEST_CASE("the exponential operator T sends x^n to R_n") {
    auto ctx = make_ctx(Rational(1, 2), Rational(1, 3));
    const QContext& c = *ctx;
    CHECK(apply_T(MultiPoly::one(), c) == MultiPoly::one());
    for (int n = 0; n <= 8; ++n) CHECK(apply_T(X(n), c) == homog_R(n, c));
    CHECK_THROWS_AS(apply_T(Y(), c), Error);
}

TEST_CASE("T maps undeformed family polynomials to the bivariate ones") {
    auto ctx = make_ctx(Rational(2), Rational(1, 2));
    AppellFamily B = AppellFamily::named(NamedKind::bernoulli, 1, 6, ctx);
    for (int n = 0; n <= 6; ++n)
        CHECK(apply_T(appell_poly_classical(B, n), *ctx) == appell_bivar(B, n));
}

TEST_CASE("T applied to the generating series gives the bivariate one") {
    auto ctx = make_ctx(Rational(1, 2), Rational(1, 3));
    SUBCASE("trivial series") {
        CHECK(apply_T_series(TruncSeries::one(6, ctx)) == TruncSeries::one(6, ctx));
    }
    SUBCASE("plain exponential picks up the deformed one") {
        TruncSeries ex = TruncSeries::exp_small(X(), 6, ctx);
        TruncSeries expect = ex.mul(TruncSeries::deformed_exp(Y(), ctx->u(), 6, ctx));
        CHECK(apply_T_series(ex) == expect);
    }
    SUBCASE("generating series of a named family") {
        AppellFamily B = AppellFamily::named(NamedKind::bernoulli, 1, 6, ctx);
        TruncSeries gf = B.determining_series().mul(TruncSeries::exp_small(X(), 6, ctx));
        TruncSeries expect = gf.mul(TruncSeries::deformed_exp(Y(), ctx->u(), 6, ctx));
        CHECK(apply_T_series(gf) == expect);
    }
}

TEST_CASE("homogeneous quasi-polynomials") {
    auto ctx = make_ctx(Rational(1, 2), Rational(1, 3));
    SUBCASE("base 1 gives x^n") {
        AppellFamily one = base_one(8, ctx);
        for (int n = 0; n <= 8; ++n) CHECK(quasi_homog(one, n) == X(n));
    }
    SUBCASE("operator route agrees") {
        AppellFamily E = AppellFamily::named(NamedKind::euler, 1, 8, ctx);
        for (int n = 0; n <= 8; ++n)
            CHECK(quasi_homog(E, n) == apply_appell_op(E, X(n), Var::x));
    }
    SUBCASE("x-derivative recursion") {
        AppellFamily B = AppellFamily::named(NamedKind::bernoulli, 2, 8, ctx);
        for (int n = 1; n <= 8; ++n)
            CHECK(quasi_homog(B, n).q_derive(Var::x, *ctx) ==
                  quasi_homog(B, n - 1).scaled(ctx->q_number(n)));
    }
    SUBCASE("y-derivative shifts the number sequence") {
        const QContext& c = *ctx;
        AppellFamily B = AppellFamily::named(NamedKind::bernoulli, 1, 8, ctx);
        for (int n = 1; n <= 8; ++n) {
            MultiPoly expect;
            for (int k = 0; k <= n - 1; ++k) {
                Rational co = c.q_binomial(n - 1, k) * c.u_binom2(k) * B.number(k + 1) *
                              c.u().pow(k);
                expect += (Y(k) * X(n - 1 - k)).scaled(co);
            }
            CHECK(quasi_homog(B, n).q_derive(Var::y, c) == expect.scaled(c.q_number(n)));
        }
    }
}

TEST_CASE("trivariate quasi-polynomials") {
    auto ctx = make_ctx(Rational(1, 2), Rational(1, 3));
    AppellFamily E = AppellFamily::named(NamedKind::euler, 1, 8, ctx);
    SUBCASE("n = 0 is the leading number") {
        CHECK(quasi_trivar(E, 0) == MultiPoly::constant(E.number(0)));
    }
    SUBCASE("direct sum equals the operator route") {
        for (int n = 0; n <= 8; ++n) CHECK(quasi_trivar(E, n) == quasi_trivar_operator(E, n));
        AppellFamily G = AppellFamily::named(NamedKind::genocchi, 1, 8, ctx);
        for (int n = 0; n <= 8; ++n) CHECK(quasi_trivar(G, n) == quasi_trivar_operator(G, n));
    }
    SUBCASE("derivative table") {
        const QContext& c = *ctx;
        AppellFamily B = AppellFamily::named(NamedKind::bernoulli, 1, 8, ctx);
        for (int n = 1; n <= 8; ++n) {
            // in x: the surviving argument is u*x, forced by the univariate recursion
            CHECK(quasi_trivar(B, n).q_derive(Var::x, c) ==
                  (quasi_trivar(B, n - 1).scale_var(Var::x, c.u()) * Y())
                      .scaled(c.q_number(n)));
            // in z: plain index shift
            CHECK(quasi_trivar(B, n).q_derive(Var::z, c) ==
                  quasi_trivar(B, n - 1).scaled(c.q_number(n)));
            // in y: shifts the polynomial index
            MultiPoly expect;
            for (int k = 0; k <= n - 1; ++k)
                expect += (appell_poly(B, k + 1, Var::x) * Y(k) * Z(n - 1 - k))
                              .scaled(c.q_binomial(n - 1, k));
            CHECK(quasi_trivar(B, n).q_derive(Var::y, c) == expect.scaled(c.q_number(n)));
        }
    }
    SUBCASE("the x-derivative keeps the plain argument only at u = 1") {
        auto ctx1 = make_ctx(Rational(1, 2), Rational(1));
        AppellFamily B1 = AppellFamily::named(NamedKind::bernoulli, 1, 6, ctx1);
        for (int n = 1; n <= 6; ++n)
            CHECK(quasi_trivar(B1, n).q_derive(Var::x, *ctx1) ==
                  (quasi_trivar(B1, n - 1) * Y()).scaled(ctx1->q_number(n)));
        // ... and fails without the u-rescaling when u != 1
        AppellFamily B = AppellFamily::named(NamedKind::bernoulli, 1, 6, ctx);
        CHECK(quasi_trivar(B, 2).q_derive(Var::x, *ctx) !=
              (quasi_trivar(B, 1) * Y()).scaled(ctx->q_number(2)));
    }
}

TEST_CASE("relating identities between quasi and plain families") {
    for (auto [q, u] : {std::pair{Rational(1, 2), Rational(1, 3)},
                        std::pair{Rational(2), Rational(2)}}) {
        auto ctx = make_ctx(q, u);
        for (auto kind : {NamedKind::bernoulli, NamedKind::euler}) {
            AppellFamily F = AppellFamily::named(kind, 1, 6, ctx);
            VerificationReport rep = relating_identity_check(F, 6);
            CHECK(rep.pass);
        }
    }
    SUBCASE("the printed exponent 1-2n fails for u != 1") {
        auto ctx = make_ctx(Rational(1, 2), Rational(1, 3));
        const QContext& c = *ctx;
        AppellFamily B = AppellFamily::named(NamedKind::bernoulli, 1, 4, ctx);
        int n = 2;
        MultiPoly wrong = quasi_homog(B, n)
                              .substitute(Var::y, MultiPoly::constant(c.u_pow(1 - 2 * n)))
                              .scaled(c.u_binom2(n));
        CHECK(wrong != appell_poly(B, n));
    }
    SUBCASE("matching argument slots: Q_n(x,1,y;u) equals P_n with swapped arguments") {
        auto ctx = make_ctx(Rational(1, 2), Rational(1, 3));
        AppellFamily B = AppellFamily::named(NamedKind::bernoulli, 1, 6, ctx);
        for (int n = 0; n <= 6; ++n) {
            MultiPoly q_sub = quasi_trivar(B, n)
                                  .substitute(Var::y, MultiPoly::one())
                                  .substitute(Var::z, Y()); // Q_n(x,1,y;u), slots (x,z)->(x,y)
            MultiPoly p_swapped = appell_bivar(B, n)
                                      .substitute(Var::x, Z())
                                      .substitute(Var::y, X())
                                      .substitute(Var::z, Y()); // P_n(y,x;u)
            CHECK(q_sub == p_swapped);
        }
    }
    SUBCASE("u = 0 is rejected beyond n = 1") {
        auto ctx = make_ctx(Rational(1, 2), Rational(0));
        AppellFamily B = AppellFamily::named(NamedKind::bernoulli, 1, 6, ctx);
        CHECK_THROWS_AS(relating_identity_check(B, 6), DeformationZero);
    }
}

TEST_CASE("trivariate generating function") {
    for (auto [q, u] : {std::pair{Rational(1, 2), Rational(1, 3)},
                        std::pair{Rational(2, 3), Rational(0)},
                        std::pair{Rational(3), Rational(9)}}) {
        auto ctx = make_ctx(q, u);
        CHECK(quasi_genfun_check(base_one(5, ctx), 5).pass);
        CHECK(quasi_genfun_check(AppellFamily::named(NamedKind::bernoulli, 1, 6, ctx), 6).pass);
        CHECK(quasi_genfun_check(AppellFamily::named(NamedKind::genocchi, 1, 6, ctx), 6).pass);
    }
}

TEST_CASE("weighted trivariate generating function") {
    for (auto [q, u] : {std::pair{Rational(1, 2), Rational(1, 3)},
                        std::pair{Rational(2, 3), Rational(1, 2)},
                        std::pair{Rational(2), Rational(4)}}) {
        auto ctx = make_ctx(q, u);
        CHECK(quasi_weighted_genfun_check(base_one(4, ctx), 4).pass);
        CHECK(quasi_weighted_genfun_check(AppellFamily::named(NamedKind::euler, 1, 5, ctx), 5).pass);
    }
    SUBCASE("y = 0 slice leaves only the big exponential") {
        auto ctx = make_ctx(Rational(1, 2), Rational(1, 3));
        AppellFamily E = AppellFamily::named(NamedKind::euler, 1, 5, ctx);
        TruncSeries Eq = TruncSeries::exp_big(Z(), 5, ctx);
        for (int n = 0; n <= 5; ++n) {
            MultiPoly lhs = quasi_trivar(E, n)
                                .substitute(Var::y, MultiPoly())
                                .scaled(ctx->q_pow(binom2(n)));
            // only the k = n slot of the direct sum survives at y-degree 0 ... which is z^n
            CHECK(lhs == Eq.coeff(n).scaled(E.number(0)));
        }
    }
    SUBCASE("q = 1 is rejected") {
        auto ctx = make_ctx(Rational(1), Rational(1, 2));
        CHECK_THROWS_AS(quasi_weighted_genfun_check(base_one(4, ctx), 4), QIsOne);
    }
}

TEST_CASE("exponential shift laws") {
    for (auto q : {Rational(1, 2), Rational(2, 3), Rational(2), Rational(3)}) {
        auto ctx = make_ctx(q, Rational(1, 3));
        CHECK(exp_shift_law_check(6, 6, ctx).pass);
    }
}

TEST_CASE("inner shifted expansion of the bilinear formula") {
    auto ctx = make_ctx(Rational(1, 2), Rational(1, 3));
    SUBCASE("k = 0 is the plain generating identity") {
        AppellFamily B = AppellFamily::named(NamedKind::bernoulli, 1, 5, ctx);
        CHECK(mehler_inner_check(B, 0, 5).pass);
    }
    SUBCASE("base 1 at k = 1") {
        AppellFamily one = base_one(6, ctx);
        CHECK(mehler_inner_check(one, 1, 5).pass);
    }
    SUBCASE("named families, k <= 3") {
        for (int k = 0; k <= 3; ++k) {
            AppellFamily B = AppellFamily::named(NamedKind::bernoulli, 1, 5 + k, ctx);
            AppellFamily E = AppellFamily::named(NamedKind::euler, 1, 5 + k, ctx);
            CHECK(mehler_inner_check(B, k, 5).pass);
            CHECK(mehler_inner_check(E, k, 5).pass);
        }
    }
    SUBCASE("family order must cover the shift") {
        AppellFamily B = AppellFamily::named(NamedKind::bernoulli, 1, 5, ctx);
        CHECK_THROWS_AS(mehler_inner_check(B, 2, 5), IndexOutOfRange);
    }
}

TEST_CASE("bilinear (Mehler-type) expansion") {
    SUBCASE("base 1 against base 1: collapses to two exponentials") {
        auto ctx = make_ctx(Rational(1, 2), Rational(1, 3));
        AppellFamily one = base_one(5, ctx);
        VerificationReport rep = mehler_verify(one, one, 5);
        CHECK(rep.pass);
    }
    SUBCASE("bernoulli against euler at two grid points") {
        for (auto [q, u] : {std::pair{Rational(1, 2), Rational(1, 3)},
                            std::pair{Rational(2), Rational(2)}}) {
            auto ctx = make_ctx(q, u);
            AppellFamily B = AppellFamily::named(NamedKind::bernoulli, 1, 5, ctx);
            AppellFamily E = AppellFamily::named(NamedKind::euler, 1, 5, ctx);
            CHECK(mehler_verify(B, E, 5).pass);
        }
    }
    SUBCASE("rejections") {
        auto ctx1 = make_ctx(Rational(1), Rational(1, 2));
        AppellFamily one1 = base_one(5, ctx1);
        CHECK_THROWS_AS(mehler_verify(one1, one1, 5), QIsOne);
        auto ctx = make_ctx(Rational(1, 2), Rational(1, 3));
        AppellFamily G = AppellFamily::named(NamedKind::genocchi, 1, 5, ctx);
        AppellFamily one = base_one(5, ctx);
        CHECK_THROWS_AS(mehler_verify(G, one, 5), DegeneracyError);
    }
}

TEST_CASE("double (Rogers-type) expansion") {
    SUBCASE("base 1") {
        auto ctx = make_ctx(Rational(1, 2), Rational(1, 3));
        CHECK(rogers_verify(base_one(4, ctx), 4).pass);
    }
    SUBCASE("bernoulli and genocchi") {
        for (auto [q, u] : {std::pair{Rational(1, 2), Rational(2)},
                            std::pair{Rational(2, 3), Rational(1, 2)}}) {
            auto ctx = make_ctx(q, u);
            CHECK(rogers_verify(AppellFamily::named(NamedKind::bernoulli, 1, 5, ctx), 5).pass);
            CHECK(rogers_verify(AppellFamily::named(NamedKind::genocchi, 1, 5, ctx), 5).pass);
        }
    }
    SUBCASE("q = 1 is rejected") {
        auto ctx = make_ctx(Rational(1), Rational(1, 2));
        CHECK_THROWS_AS(rogers_verify(base_one(4, ctx), 4), QIsOne);
    }
}
