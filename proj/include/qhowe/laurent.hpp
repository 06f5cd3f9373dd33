#pragma once

// Exact arithmetic in Z[q,q^-1] and its fraction field QQ(q), plus the
// quantum-combinatorics constructors [n], [n]!, and the quantum binomial.
//
// Every operator entry in the library lives in one of these two types.
// No floating point anywhere; coefficients are GMP integers.

#include <gmpxx.h>

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qhowe/errors.hpp"

namespace qhowe {

using Int = mpz_class;
using Rat = mpq_class;

class LaurentPoly {
public:
    // exponent -> coefficient; invariant: no zero coefficient is stored
    using TermMap = std::map<long, Int>;

    LaurentPoly() = default;
    LaurentPoly(long c) { if (c != 0) terms_[0] = c; }
    LaurentPoly(const Int& c) { if (c != 0) terms_[0] = c; }

    static LaurentPoly term(Int c, long e) {
        LaurentPoly p;
        if (c != 0) p.terms_[e] = std::move(c);
        return p;
    }
    // the monomial q^e
    static LaurentPoly q(long e = 1) { return term(1, e); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
    }
    Int coeff(long e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Int(0) : it->second;
    }
    long min_exp() const { return terms_.begin()->first; }   // pre: nonzero
    long max_exp() const { return terms_.rbegin()->first; }  // pre: nonzero

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    // multiply by the monomial q^e
    LaurentPoly shifted(long e) const {
        LaurentPoly r;
        for (const auto& [ex, c] : terms_) r.terms_[ex + e] = c;
        return r;
    }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // specialization q := 1
    Int eval_one() const {
        Int s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    // the involution q -> -q^{-1}: c*q^e -> c*(-1)^e*q^{-e}
    LaurentPoly substitute_neg_inv() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[-e] = (e % 2 == 0) ? c : -c;
        return r;
    }

    // Canonical text form: terms ascending by exponent, " + "/" - " joins,
    // `c*q^e` with c*=+-1 omitted, ^e omitted when e=1, q^0 omitted entirely.
    // [2] renders as "q^-1 + q".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            const bool neg = c < 0;
            Int a = neg ? Int(-c) : c;
            if (first) {
                if (neg) out << "-";
                first = false;
            } else {
                out << (neg ? " - " : " + ");
            }
            if (e == 0) {
                out << a.get_str();
            } else {
                if (a != 1) out << a.get_str() << "*";
                if (e == 1) out << "q";
                else out << "q^" << e;
            }
        }
        return out.str();
    }

private:
    void add_term(long e, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

namespace detail {

// Dense ascending-coefficient polynomial over Z, used only inside division
// and gcd. Trailing zeros trimmed.
using ZVec = std::vector<Int>;

inline void zv_trim(ZVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline ZVec to_dense(const LaurentPoly& p, long& min_exp) {
    min_exp = p.is_zero() ? 0 : p.min_exp();
    ZVec a;
    if (p.is_zero()) return a;
    a.assign(static_cast<size_t>(p.max_exp() - min_exp) + 1, Int(0));
    for (const auto& [e, c] : p.terms()) a[static_cast<size_t>(e - min_exp)] = c;
    return a;
}

inline LaurentPoly from_dense(const ZVec& a, long min_exp) {
    LaurentPoly p;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) p += LaurentPoly::term(a[i], min_exp + static_cast<long>(i));
    return p;
}

// Ordinary polynomial long division over Z from the top degree. If B | A in
// Z[x] then each step's integer division is exact and the remainder ends at
// zero; returns false as soon as exactness fails.
inline bool zv_divide_exact(const ZVec& A, const ZVec& B, ZVec& Q) {
    if (B.empty()) return false;
    if (A.empty()) { Q.clear(); return true; }
    if (A.size() < B.size()) return false;
    ZVec R = A;
    Q.assign(A.size() - B.size() + 1, Int(0));
    const Int& lb = B.back();
    for (size_t k = A.size(); k-- >= B.size();) {
        if (R[k] == 0) { if (k == B.size() - 1) break; continue; }
        Int qk, rem;
        mpz_tdiv_qr(qk.get_mpz_t(), rem.get_mpz_t(), R[k].get_mpz_t(), lb.get_mpz_t());
        if (rem != 0) return false;
        Q[k - (B.size() - 1)] = qk;
        for (size_t j = 0; j < B.size(); ++j) R[k - (B.size() - 1) + j] -= qk * B[j];
        if (k == B.size() - 1) break;
    }
    zv_trim(R);
    return R.empty();
}

inline Int zv_content(const ZVec& a) {
    Int g = 0;
    for (const Int& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

inline ZVec zv_scale_down(ZVec a, const Int& g) {
    if (g == 1) return a;
    for (Int& c : a) c /= g;
    return a;
}

// Pseudo-remainder of A by B (deg A >= deg B >= 0), primitive part taken.
inline ZVec zv_prem_primitive(ZVec A, const ZVec& B) {
    const Int& lb = B.back();
    while (!A.empty() && A.size() >= B.size()) {
        Int la = A.back();
        size_t shift = A.size() - B.size();
        for (Int& c : A) c *= lb;
        for (size_t j = 0; j < B.size(); ++j) A[shift + j] -= la * B[j];
        zv_trim(A);
    }
    Int g = zv_content(A);
    if (g > 1) A = zv_scale_down(std::move(A), g);
    return A;
}

// gcd over Z[x] via primitive pseudo-remainder sequence; result primitive
// with positive leading coefficient, times gcd of contents.
inline ZVec zv_gcd(ZVec A, ZVec B) {
    zv_trim(A);
    zv_trim(B);
    if (A.empty()) A.swap(B);
    if (B.empty()) {
        if (!A.empty() && A.back() < 0)
            for (Int& c : A) c = -c;
        return A;
    }
    Int ca = zv_content(A), cb = zv_content(B);
    Int cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    A = zv_scale_down(std::move(A), ca);
    B = zv_scale_down(std::move(B), cb);
    if (A.size() < B.size()) A.swap(B);
    while (!B.empty()) {
        ZVec R = zv_prem_primitive(A, B);
        A.swap(B);
        B = std::move(R);
    }
    if (A.back() < 0)
        for (Int& c : A) c = -c;
    for (Int& c : A) c *= cg;
    return A;
}

} // namespace detail

// Exact quotient in Z[q,q^-1]; throws NotDivisible when none exists.
inline LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw NotDivisible("div_exact: division by zero");
    if (a.is_zero()) return LaurentPoly();
    long ma = 0, mb = 0;
    detail::ZVec A = detail::to_dense(a, ma);
    detail::ZVec B = detail::to_dense(b, mb);
    detail::ZVec Q;
    if (!detail::zv_divide_exact(A, B, Q))
        throw NotDivisible("div_exact: " + a.str() + " not divisible by " + b.str());
    return detail::from_dense(Q, ma - mb);
}

// gcd in Z[q,q^-1], normalized to min exponent 0 and positive leading
// coefficient (unique up to the units +-q^e, so this choice is canonical).
inline LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly();
    long ma = 0, mb = 0;
    detail::ZVec A = detail::to_dense(a, ma);
    detail::ZVec B = detail::to_dense(b, mb);
    return detail::from_dense(detail::zv_gcd(std::move(A), std::move(B)), 0);
}

// An element of QQ(q) as a reduced fraction of integer Laurent polynomials.
// Canonical form: gcd(num,den) is a unit, den's lowest-exponent term has
// exponent 0 and positive coefficient; equal values compare equal bitwise.
class RatFun {
public:
    RatFun() : num_(), den_(1) {}
    RatFun(long c) : num_(c), den_(1) {}
    RatFun(const Int& c) : num_(c), den_(1) {}
    RatFun(LaurentPoly p) : num_(std::move(p)), den_(1) {}
    RatFun(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw Singular("RatFun: division by zero");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFun operator-() const {
        RatFun r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    RatFun inverse() const {
        if (is_zero()) throw Singular("RatFun: inverse of zero");
        return RatFun(den_, num_);
    }

    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    RatFun substitute_neg_inv() const {
        return RatFun(num_.substitute_neg_inv(), den_.substitute_neg_inv());
    }

    // specialization q := 1 (den must not vanish there)
    Rat eval_one() const {
        Int d = den_.eval_one();
        if (d == 0) throw Singular("RatFun: denominator vanishes at q=1");
        Rat r(num_.eval_one(), d);
        r.canonicalize();
        return r;
    }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        return num_.str() + " / " + den_.str();
    }

private:
    void normalize() {
        if (den_.is_zero()) throw Singular("RatFun: zero denominator");
        if (num_.is_zero()) {
            den_ = LaurentPoly(1);
            return;
        }
        LaurentPoly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = div_exact(num_, g);
            den_ = div_exact(den_, g);
        }
        // unit normalization: den's lowest term gets exponent 0, coeff > 0
        long s = den_.min_exp();
        if (s != 0) {
            den_ = den_.shifted(-s);
            num_ = num_.shifted(-s);
        }
        if (den_.coeff(0) < 0) {
            den_ = -den_;
            num_ = -num_;
        }
    }

    LaurentPoly num_, den_;
};

// [n] = q^{n-1} + q^{n-3} + ... + q^{-n+1}; [0] = 0; [-n] = -[n].
inline LaurentPoly qint(long n) {
    if (n == 0) return LaurentPoly();
    if (n < 0) return -qint(-n);
    LaurentPoly p;
    for (long j = 0; j < n; ++j) p += LaurentPoly::q(n - 1 - 2 * j);
    return p;
}

// [n]! = [1][2]...[n]; [0]! = 1.
inline LaurentPoly qfact(long n) {
    if (n < 0) throw std::invalid_argument("qfact: negative argument");
    LaurentPoly p(1);
    for (long j = 2; j <= n; ++j) p *= qint(j);
    return p;
}

// Quantum binomial [n]! / ([k]! [n-k]!), computed by exact division so the
// divisibility itself is asserted on every call.
inline LaurentPoly qbinom(long n, long k) {
    if (k < 0 || k > n) throw std::invalid_argument("qbinom: need 0 <= k <= n");
    return div_exact(qfact(n), qfact(k) * qfact(n - k));
}

inline LaurentPoly substitute_neg_inv(const LaurentPoly& p) { return p.substitute_neg_inv(); }

} // namespace qhowe
