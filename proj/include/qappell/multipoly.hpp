#pragma once

#include <array>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qappell/errors.hpp"
#include "qappell/qcontext.hpp"
#include "qappell/rational.hpp"

namespace qappell {

// The fixed variable list. Term order and all serialization use x < y < z < w < a.
enum class Var : int { x = 0, y = 1, z = 2, w = 3, a = 4 };

inline constexpr int kNumVars = 5;
inline constexpr const char* kVarNames[kNumVars] = {"x", "y", "z", "w", "a"};

using ExpVec = std::array<int, kNumVars>;

// Graded lexicographic: total degree first, then lex with x most significant.
struct GradedLexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        int da = 0, db = 0;
        for (int i = 0; i < kNumVars; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return da < db;
        return a < b;
    }
};

// Sparse polynomial over Rational in the five canonical variables.
// Invariant: no stored coefficient is zero; the zero polynomial is the
// empty map. Values are immutable in spirit: every operation returns a
// fresh polynomial.
class MultiPoly {
public:
    // Exponents are expected to stay small (twice the series order of the
    // enclosing computation); this guard only catches runaway growth.
    static constexpr int kDegreeGuard = 4096;

    using TermMap = std::map<ExpVec, Rational, GradedLexLess>;

    MultiPoly() = default;

    static MultiPoly constant(Rational c) {
        MultiPoly p;
        if (!c.is_zero()) p.terms_.emplace(ExpVec{0, 0, 0, 0, 0}, std::move(c));
        return p;
    }
    static MultiPoly one() { return constant(Rational(1)); }
    static MultiPoly variable(Var v, int exp = 1) {
        return monomial(Rational(1), exp_of(v, exp));
    }
    static MultiPoly monomial(Rational c, const ExpVec& e) {
        check_exponents(e);
        MultiPoly p;
        if (!c.is_zero()) p.terms_.emplace(e, std::move(c));
        return p;
    }
    static ExpVec exp_of(Var v, int exp) {
        if (exp < 0 || exp > kDegreeGuard) throw Error("monomial exponent out of range");
        ExpVec e{0, 0, 0, 0, 0};
        e[static_cast<int>(v)] = exp;
        return e;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == ExpVec{0, 0, 0, 0, 0});
    }
    // Value of a constant polynomial (zero for the empty one).
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw Error("constant_value of a non-constant polynomial");
        return terms_.begin()->second;
    }

    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    int degree(Var v) const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(v)]);
        return d;
    }
    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int i = 0; i < kNumVars; ++i) s += e[i];
            d = std::max(d, s);
        }
        return d;
    }
    bool depends_on(Var v) const {
        for (const auto& [e, c] : terms_)
            if (e[static_cast<int>(v)] > 0) return true;
        return false;
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                ExpVec e;
                for (int i = 0; i < kNumVars; ++i) e[i] = ea[i] + eb[i];
                check_exponents(e);
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly scaled(const Rational& c) const {
        MultiPoly r;
        if (c.is_zero()) return r;
        r.terms_ = terms_;
        for (auto& [e, v] : r.terms_) v *= c;
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) {
        return !(a == b);
    }

    // Jackson derivative in one variable, term-wise: var^k -> [k]_q var^{k-1}.
    // The sum form of [k]_q keeps q = 1 legal (where it is d/dvar).
    MultiPoly q_derive(Var v, const QContext& ctx) const {
        const int vi = static_cast<int>(v);
        MultiPoly r;
        for (const auto& [e, c] : terms_) {
            if (e[vi] == 0) continue;
            ExpVec en = e;
            en[vi] -= 1;
            r.add_term(en, c * ctx.q_number(e[vi]));
        }
        return r;
    }

    // k-fold Jackson derivative: var^n -> ([n]_q!/[n-k]_q!) var^{n-k}, zero for k > n.
    MultiPoly q_derive_k(Var v, long k, const QContext& ctx) const {
        if (k < 0) throw IndexOutOfRange("q_derive_k with negative iteration count");
        if (k == 0) return *this;
        const int vi = static_cast<int>(v);
        MultiPoly r;
        for (const auto& [e, c] : terms_) {
            if (e[vi] < k) continue;
            Rational f(1);
            for (long j = e[vi] - k + 1; j <= e[vi]; ++j) f *= ctx.q_number(j);
            ExpVec en = e;
            en[vi] -= static_cast<int>(k);
            r.add_term(en, c * f);
        }
        return r;
    }

    // var -> factor * var; each term picks up factor^(exponent of var).
    MultiPoly scale_var(Var v, const Rational& factor) const {
        const int vi = static_cast<int>(v);
        MultiPoly r;
        for (const auto& [e, c] : terms_) {
            if (factor.is_zero() && e[vi] > 0) continue;
            r.add_term(e, e[vi] == 0 ? c : c * factor.pow(e[vi]));
        }
        return r;
    }

    // var -> repl (a full polynomial); powers of repl are cached.
    MultiPoly substitute(Var v, const MultiPoly& repl) const {
        const int vi = static_cast<int>(v);
        std::vector<MultiPoly> pow{MultiPoly::one()};
        MultiPoly r;
        for (const auto& [e, c] : terms_) {
            while (static_cast<int>(pow.size()) <= e[vi]) pow.push_back(pow.back() * repl);
            ExpVec rest = e;
            rest[vi] = 0;
            r += pow[static_cast<std::size_t>(e[vi])] * monomial(c, rest);
        }
        return r;
    }

    Rational eval(const std::map<Var, Rational>& point) const {
        Rational total(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < kNumVars; ++i) {
                if (e[i] == 0) continue;
                auto it = point.find(static_cast<Var>(i));
                if (it == point.end())
                    throw MissingAssignment(std::string("no value assigned to variable ") +
                                            kVarNames[i]);
                t *= it->second.pow(e[i]);
            }
            total += t;
        }
        return total;
    }

    // Canonical listing, one term per (exponent, coefficient) pair in term order.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c.str();
            for (int i = 0; i < kNumVars; ++i) {
                if (e[i] == 0) continue;
                os << "*" << kVarNames[i];
                if (e[i] > 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
        return os << p.str();
    }

private:
    static void check_exponents(const ExpVec& e) {
        for (int i = 0; i < kNumVars; ++i)
            if (e[i] < 0 || e[i] > kDegreeGuard) throw Error("polynomial degree guard tripped");
    }

    void add_term(const ExpVec& e, Rational c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, std::move(c));
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    TermMap terms_;
};

} // namespace qappell
