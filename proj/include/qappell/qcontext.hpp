#pragma once

#include <vector>

#include "qappell/errors.hpp"
#include "qappell/rational.hpp"

namespace qappell {

// The rational parameter pair (q,u) plus memo tables for q-numbers,
// q-factorials and q-binomials. Tables are filled once at construction;
// lookups beyond the prefill bound recompute from scratch, so a QContext
// is immutable and safe to share across threads.
//
// [n]_q is the power sum 1 + q + ... + q^{n-1}, so q = 1 is a legal
// parameter here; operations whose defining formula divides by (1-q)
// reject q = 1 themselves (QIsOne).
class QContext {
public:
    explicit QContext(Rational q, Rational u = Rational(1), int prefill = 64)
        : q_(std::move(q)), u_(std::move(u)) {
        if (prefill < 0) prefill = 0;
        qnum_.reserve(static_cast<std::size_t>(prefill) + 1);
        qfact_.reserve(static_cast<std::size_t>(prefill) + 1);
        qnum_.push_back(Rational(0));
        qfact_.push_back(Rational(1));
        Rational qpow(1); // q^n while filling row n+1
        for (int n = 1; n <= prefill; ++n) {
            qnum_.push_back(qnum_.back() + qpow);
            qpow *= q_;
            qfact_.push_back(qfact_.back() * qnum_.back());
        }
    }

    const Rational& q() const { return q_; }
    const Rational& u() const { return u_; }
    bool q_is_one() const { return q_.is_one(); }
    bool u_is_zero() const { return u_.is_zero(); }

    // [n]_q = sum_{i<n} q^i
    Rational q_number(long n) const {
        if (n < 0) throw IndexOutOfRange("q_number of a negative index");
        if (n < static_cast<long>(qnum_.size())) return qnum_[static_cast<std::size_t>(n)];
        return q_number_fresh(q_, n);
    }

    // [n]_q! = [1]_q [2]_q ... [n]_q
    Rational q_factorial(long n) const {
        if (n < 0) throw IndexOutOfRange("q_factorial of a negative index");
        if (n < static_cast<long>(qfact_.size())) return qfact_[static_cast<std::size_t>(n)];
        Rational r = qfact_.back();
        for (long k = static_cast<long>(qfact_.size()); k <= n; ++k) r *= q_number(k);
        return r;
    }

    // [n k]_q = [n]_q! / ([k]_q! [n-k]_q!); zero outside 0 <= k <= n.
    Rational q_binomial(long n, long k) const {
        if (n < 0 || k < 0 || k > n) return Rational(0);
        return q_factorial(n) / (q_factorial(k) * q_factorial(n - k));
    }

    // (a0;q)_n = prod_{k<n} (1 - q^k a0)
    Rational q_pochhammer(const Rational& a0, long n) const {
        if (n < 0) throw IndexOutOfRange("q_pochhammer of a negative length");
        Rational r(1), qpow(1);
        for (long k = 0; k < n; ++k) {
            r *= Rational(1) - qpow * a0;
            qpow *= q_;
        }
        return r;
    }

    Rational q_pow(long e) const { return q_.pow(e); }
    Rational u_pow(long e) const {
        if (u_.is_zero() && e < 0)
            throw DeformationZero("u = 0 where a negative power of u is required");
        return u_.pow(e);
    }
    // u^binom2(m); binom2(0) = binom2(1) = 0, so u = 0 is fine for m <= 1.
    Rational u_binom2(long m) const { return u_.pow(binom2(m)); }

    // From-scratch path, bypasses the memo tables (test oracle).
    static Rational q_number_fresh(const Rational& q, long n) {
        Rational r(0), qpow(1);
        for (long i = 0; i < n; ++i) {
            r += qpow;
            qpow *= q;
        }
        return r;
    }

    friend bool same_params(const QContext& a, const QContext& b) {
        return a.q_ == b.q_ && a.u_ == b.u_;
    }

private:
    Rational q_, u_;
    std::vector<Rational> qnum_;
    std::vector<Rational> qfact_;
};

} // namespace qappell
