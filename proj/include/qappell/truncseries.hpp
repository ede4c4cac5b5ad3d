#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "qappell/errors.hpp"
#include "qappell/multipoly.hpp"
#include "qappell/qcontext.hpp"
#include "qappell/rational.hpp"

namespace qappell {

using CtxPtr = std::shared_ptr<const QContext>;

inline void require_same_ctx(const QContext& a, const QContext& b) {
    if (!same_params(a, b))
        throw ContextMismatch("operands built over different (q,u) parameters");
}

// Formal power series in t truncated at order N, stored in the q-divided-power
// normalization: coeff(n) is the coefficient of t^n/[n]_q!. Multiplication is
// therefore the q-binomial convolution. Binary operations take the min of the
// operand orders.
class TruncSeries {
public:
    TruncSeries(int order, CtxPtr ctx)
        : order_(check_order(order)), ctx_(std::move(ctx)),
          c_(static_cast<std::size_t>(order_) + 1) {}

    static TruncSeries one(int order, CtxPtr ctx) {
        TruncSeries s(order, std::move(ctx));
        s.c_[0] = MultiPoly::one();
        return s;
    }
    static TruncSeries from_coeffs(std::vector<MultiPoly> coeffs, CtxPtr ctx) {
        if (coeffs.empty()) throw Error("series needs at least the order-0 coefficient");
        TruncSeries s(static_cast<int>(coeffs.size()) - 1, std::move(ctx));
        s.c_ = std::move(coeffs);
        return s;
    }
    static TruncSeries from_scalar_coeffs(const std::vector<Rational>& coeffs, CtxPtr ctx) {
        std::vector<MultiPoly> c;
        c.reserve(coeffs.size());
        for (const auto& r : coeffs) c.push_back(MultiPoly::constant(r));
        return from_coeffs(std::move(c), std::move(ctx));
    }
    // c * t^m / [m]_q! placed at index m (divided-power coefficient = c).
    static TruncSeries divided_monomial(MultiPoly c, int m, int order, CtxPtr ctx) {
        TruncSeries s(order, std::move(ctx));
        if (m < 0 || m > order) throw IndexOutOfRange("monomial index beyond series order");
        s.c_[static_cast<std::size_t>(m)] = std::move(c);
        return s;
    }

    // The deformed exponential of c*t: coefficient of t^n/[n]_q! is
    // u0^binom2(n) c^n. With u0 = 0 this is exactly 1 + c*t (0^0 = 1).
    static TruncSeries deformed_exp(const MultiPoly& c, const Rational& u0, int order,
                                    CtxPtr ctx) {
        TruncSeries s(order, std::move(ctx));
        MultiPoly cpow = MultiPoly::one();
        for (int n = 0; n <= order; ++n) {
            Rational w = u0.pow(binom2(n));
            if (!w.is_zero()) s.c_[static_cast<std::size_t>(n)] = cpow.scaled(w);
            if (n < order) cpow *= c;
        }
        return s;
    }
    static TruncSeries exp_small(const MultiPoly& c, int order, CtxPtr ctx) {
        return deformed_exp(c, Rational(1), order, std::move(ctx));
    }
    static TruncSeries exp_big(const MultiPoly& c, int order, CtxPtr ctx) {
        Rational q = ctx->q();
        return deformed_exp(c, q, order, std::move(ctx));
    }

    // (arg; q)_k as a polynomial in t: prod_{j<k} (1 - q^j * arg * t).
    static TruncSeries pochhammer_t(const MultiPoly& arg, int k, int order, CtxPtr ctx) {
        TruncSeries s = one(order, ctx);
        Rational qpow(1);
        for (int j = 0; j < k; ++j) {
            TruncSeries lin = one(order, ctx);
            if (order >= 1) lin.c_[1] = arg.scaled(-qpow); // [1]_q! = 1
            s = s.mul(lin);
            qpow *= ctx->q();
        }
        return s;
    }

    int order() const { return order_; }
    const CtxPtr& ctx() const { return ctx_; }
    const QContext& context() const { return *ctx_; }
    const MultiPoly& coeff(int n) const {
        if (n < 0 || n > order_) throw IndexOutOfRange("series coefficient index out of range");
        return c_[static_cast<std::size_t>(n)];
    }
    void set_coeff(int n, MultiPoly p) {
        if (n < 0 || n > order_) throw IndexOutOfRange("series coefficient index out of range");
        c_[static_cast<std::size_t>(n)] = std::move(p);
    }

    bool is_zero() const {
        for (const auto& p : c_)
            if (!p.is_zero()) return false;
        return true;
    }
    // Index of the first nonzero coefficient; order()+1 when identically zero.
    int vanishing_order() const {
        for (int n = 0; n <= order_; ++n)
            if (!c_[static_cast<std::size_t>(n)].is_zero()) return n;
        return order_ + 1;
    }
    bool has_scalar_coeffs() const {
        for (const auto& p : c_)
            if (!p.is_constant()) return false;
        return true;
    }

    TruncSeries add(const TruncSeries& o) const {
        require_same_ctx(*ctx_, *o.ctx_);
        int n = std::min(order_, o.order_);
        TruncSeries r(n, ctx_);
        for (int i = 0; i <= n; ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }
    TruncSeries sub(const TruncSeries& o) const {
        require_same_ctx(*ctx_, *o.ctx_);
        int n = std::min(order_, o.order_);
        TruncSeries r(n, ctx_);
        for (int i = 0; i <= n; ++i) r.c_[i] = c_[i] - o.c_[i];
        return r;
    }
    TruncSeries scaled(const Rational& s) const {
        TruncSeries r(order_, ctx_);
        for (int i = 0; i <= order_; ++i) r.c_[i] = c_[i].scaled(s);
        return r;
    }
    TruncSeries scaled(const MultiPoly& p) const {
        TruncSeries r(order_, ctx_);
        for (int i = 0; i <= order_; ++i) r.c_[i] = c_[i] * p;
        return r;
    }

    // Cauchy product in the divided-power normalization:
    // (A*B)_n = sum_k [n k]_q A_k B_{n-k}.
    TruncSeries mul(const TruncSeries& o) const {
        require_same_ctx(*ctx_, *o.ctx_);
        int n = std::min(order_, o.order_);
        TruncSeries r(n, ctx_);
        for (int i = 0; i <= n; ++i) {
            MultiPoly acc;
            for (int k = 0; k <= i; ++k) {
                const MultiPoly& ak = c_[static_cast<std::size_t>(k)];
                const MultiPoly& bk = o.c_[static_cast<std::size_t>(i - k)];
                if (ak.is_zero() || bk.is_zero()) continue;
                acc += (ak * bk).scaled(ctx_->q_binomial(i, k));
            }
            r.c_[static_cast<std::size_t>(i)] = std::move(acc);
        }
        return r;
    }

    // Multiplicative inverse by triangular recursion; needs a nonzero
    // scalar constant term.
    TruncSeries inv() const {
        if (c_[0].is_zero())
            throw ZeroConstantTerm("series with zero constant term has no inverse");
        if (!c_[0].is_constant())
            throw NonScalarCoefficients("series inversion needs a scalar constant term");
        Rational a0 = c_[0].constant_value();
        TruncSeries r(order_, ctx_);
        r.c_[0] = MultiPoly::constant(a0.inverse());
        for (int n = 1; n <= order_; ++n) {
            MultiPoly acc;
            for (int k = 1; k <= n; ++k) {
                const MultiPoly& ak = c_[static_cast<std::size_t>(k)];
                const MultiPoly& bk = r.c_[static_cast<std::size_t>(n - k)];
                if (ak.is_zero() || bk.is_zero()) continue;
                acc += (ak * bk).scaled(ctx_->q_binomial(n, k));
            }
            r.c_[static_cast<std::size_t>(n)] = (-acc).scaled(a0.inverse());
        }
        return r;
    }

    // Integer power; negative exponents go through inv().
    TruncSeries ipow(long alpha) const {
        if (alpha < 0) return inv().ipow(-alpha);
        TruncSeries r = one(order_, ctx_);
        for (long i = 0; i < alpha; ++i) r = r.mul(*this);
        return r;
    }

    // Drops the first k coefficients: result_n = coeff(n+k), order N-k.
    TruncSeries shifted(int k) const {
        if (k < 0 || k > order_) throw IndexOutOfRange("shift amount beyond series order");
        TruncSeries r(order_ - k, ctx_);
        for (int n = 0; n + k <= order_; ++n) r.c_[static_cast<std::size_t>(n)] = c_[static_cast<std::size_t>(n + k)];
        return r;
    }

    // t -> c*t: coefficient n picks up c^n.
    TruncSeries arg_scaled(const MultiPoly& c) const {
        TruncSeries r(order_, ctx_);
        MultiPoly cpow = MultiPoly::one();
        for (int n = 0; n <= order_; ++n) {
            r.c_[static_cast<std::size_t>(n)] = c_[static_cast<std::size_t>(n)] * cpow;
            if (n < order_) cpow *= c;
        }
        return r;
    }
    TruncSeries arg_scaled(const Rational& c) const {
        TruncSeries r(order_, ctx_);
        for (int n = 0; n <= order_; ++n)
            r.c_[static_cast<std::size_t>(n)] = c_[static_cast<std::size_t>(n)].scaled(c.pow(n));
        return r;
    }

    // Multiply by the raw monomial c * t^m (exact at every kept index):
    // result_n = ([n]_q!/[n-m]_q!) * c * coeff(n-m). The result order may be
    // raised up to order()+m, since the product is known exactly there.
    TruncSeries mul_t_monomial(int m, const MultiPoly& c, int target_order = -1) const {
        if (m < 0) throw IndexOutOfRange("t-monomial with negative exponent");
        if (target_order < 0) target_order = order_;
        if (target_order > order_ + m)
            throw IndexOutOfRange("t-monomial product not determined to the requested order");
        TruncSeries r(target_order, ctx_);
        for (int n = m; n <= target_order; ++n) {
            const MultiPoly& src = c_[static_cast<std::size_t>(n - m)];
            if (src.is_zero()) continue;
            Rational f = ctx_->q_factorial(n) / ctx_->q_factorial(n - m);
            r.c_[static_cast<std::size_t>(n)] = (src * c).scaled(f);
        }
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.order_ == b.order_ && same_params(*a.ctx_, *b.ctx_) && a.c_ == b.c_;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    // Compare up to order n; reports the first differing index via *diff.
    static bool agree_up_to(const TruncSeries& a, const TruncSeries& b, int n,
                            int* diff = nullptr) {
        require_same_ctx(*a.ctx_, *b.ctx_);
        if (n > a.order_ || n > b.order_)
            throw IndexOutOfRange("comparison order beyond operand order");
        for (int i = 0; i <= n; ++i) {
            if (a.coeff(i) != b.coeff(i)) {
                if (diff) *diff = i;
                return false;
            }
        }
        return true;
    }

private:
    static int check_order(int order) {
        if (order < 0) throw Error("series order must be nonnegative");
        return order;
    }

    int order_;
    CtxPtr ctx_;
    std::vector<MultiPoly> c_;
};

// Truncated series in two formal variables t and s on the triangle n+m <= N,
// stored as coefficients of t^n s^m / ([n]_q! [m]_q!).
class BiTruncSeries {
public:
    BiTruncSeries(int order, CtxPtr ctx)
        : order_(order), ctx_(std::move(ctx)) {
        if (order < 0) throw Error("series order must be nonnegative");
        c_.resize(static_cast<std::size_t>(order_) + 1);
        for (int n = 0; n <= order_; ++n)
            c_[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(order_ - n) + 1);
    }

    static BiTruncSeries one(int order, CtxPtr ctx) {
        BiTruncSeries s(order, std::move(ctx));
        s.c_[0][0] = MultiPoly::one();
        return s;
    }

    // Places A_n * B_m at (n,m): the product (series in t) x (series in s).
    static BiTruncSeries outer(const TruncSeries& At, const TruncSeries& Bs) {
        require_same_ctx(At.context(), Bs.context());
        int n = std::min(At.order(), Bs.order());
        BiTruncSeries r(n, At.ctx());
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j) r.c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = At.coeff(i) * Bs.coeff(j);
        return r;
    }

    int order() const { return order_; }
    const CtxPtr& ctx() const { return ctx_; }
    const MultiPoly& coeff(int n, int m) const {
        check_index(n, m);
        return c_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
    }
    void set_coeff(int n, int m, MultiPoly p) {
        check_index(n, m);
        c_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] = std::move(p);
    }

    // Adds the raw monomial c * t^a s^b (converting to divided-power storage).
    void add_raw_monomial(int a, int b, const MultiPoly& c) {
        if (a < 0 || b < 0 || a + b > order_) return; // beyond the kept triangle
        c_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] +=
            c.scaled(ctx_->q_factorial(a) * ctx_->q_factorial(b));
    }

    BiTruncSeries add(const BiTruncSeries& o) const {
        require_same_ctx(*ctx_, *o.ctx_);
        int n = std::min(order_, o.order_);
        BiTruncSeries r(n, ctx_);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j) r.c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = coeff(i, j) + o.coeff(i, j);
        return r;
    }

    // (P*Q)(n,m) = sum_{k<=n} sum_{j<=m} [n k]_q [m j]_q P(k,j) Q(n-k,m-j).
    BiTruncSeries mul(const BiTruncSeries& o) const {
        require_same_ctx(*ctx_, *o.ctx_);
        int n = std::min(order_, o.order_);
        BiTruncSeries r(n, ctx_);
        for (int i = 0; i <= n; ++i) {
            for (int j = 0; i + j <= n; ++j) {
                MultiPoly acc;
                for (int k = 0; k <= i; ++k) {
                    for (int l = 0; l <= j; ++l) {
                        const MultiPoly& p = coeff(k, l);
                        const MultiPoly& s = o.coeff(i - k, j - l);
                        if (p.is_zero() || s.is_zero()) continue;
                        acc += (p * s).scaled(ctx_->q_binomial(i, k) * ctx_->q_binomial(j, l));
                    }
                }
                r.c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(acc);
            }
        }
        return r;
    }

    friend bool operator==(const BiTruncSeries& a, const BiTruncSeries& b) {
        return a.order_ == b.order_ && same_params(*a.ctx_, *b.ctx_) && a.c_ == b.c_;
    }
    friend bool operator!=(const BiTruncSeries& a, const BiTruncSeries& b) { return !(a == b); }

private:
    void check_index(int n, int m) const {
        if (n < 0 || m < 0 || n + m > order_)
            throw IndexOutOfRange("bi-series index outside the triangle");
    }

    int order_;
    CtxPtr ctx_;
    std::vector<std::vector<MultiPoly>> c_;
};

} // namespace qappell
