/**
 * @file qscalar.hpp
 * @brief Exact arithmetic in the quadratic field Q(v) with v^2 = q.
 *
 * A QScalar is a + b*v with exact rational a, b and a fixed prime power q.
 * When q is a perfect square, v is rational and b is folded into a at
 * construction, so equality stays a plain coordinate comparison.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <string>

#include "qhall/errors.hpp"

namespace qhall {

using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Integer square root test: returns r > 0 with r*r == n, or 0.
inline unsigned exact_sqrt(unsigned n) {
    for (unsigned r = 1; r * r <= n; ++r)
        if (r * r == n) return r;
    return 0;
}

class QScalar {
public:
    QScalar() : q_(0) {}

    QScalar(Rational a, Rational b, unsigned q) : a_(std::move(a)), b_(std::move(b)), q_(q) {
        if (q_ < 2) throw input_error("QScalar: q must be a prime power >= 2");
        fold();
    }

    static QScalar integer(long n, unsigned q) { return QScalar(Rational(n), Rational(0), q); }
    static QScalar zero(unsigned q) { return integer(0, q); }
    static QScalar one(unsigned q) { return integer(1, q); }

    /// v^k for any integer k (negative powers use v^{-1} = v/q).
    static QScalar v_power(long k, unsigned q) {
        // v^{2t} = q^t and v^{2t+1} = q^t * v, with t = floor(k/2).
        long t = (k >= 0) ? k / 2 : (k - ((k % 2) ? 1 : 0)) / 2;
        Rational qt = rational_power(q, t);
        if (k % 2 == 0) return QScalar(qt, Rational(0), q);
        return QScalar(Rational(0), qt, q);
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    unsigned q() const { return q_; }
    bool has_context() const { return q_ != 0; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    friend bool operator==(const QScalar& x, const QScalar& y) {
        if (x.q_ != 0 && y.q_ != 0 && x.q_ != y.q_) return false;
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QScalar& x, const QScalar& y) { return !(x == y); }

    friend QScalar operator-(const QScalar& x) { return QScalar(-x.a_, -x.b_, x.q_, tag{}); }

    friend QScalar operator+(const QScalar& x, const QScalar& y) {
        unsigned q = merge(x, y);
        return QScalar(x.a_ + y.a_, x.b_ + y.b_, q, tag{});
    }
    friend QScalar operator-(const QScalar& x, const QScalar& y) {
        unsigned q = merge(x, y);
        return QScalar(x.a_ - y.a_, x.b_ - y.b_, q, tag{});
    }
    friend QScalar operator*(const QScalar& x, const QScalar& y) {
        unsigned q = merge(x, y);
        // (a1 + b1 v)(a2 + b2 v) = a1 a2 + q b1 b2 + (a1 b2 + b1 a2) v
        return QScalar(x.a_ * y.a_ + Rational(q) * x.b_ * y.b_,
                       x.a_ * y.b_ + x.b_ * y.a_, q, tag{});
    }
    friend QScalar operator/(const QScalar& x, const QScalar& y) { return x * y.inverse(); }

    QScalar& operator+=(const QScalar& y) { return *this = *this + y; }
    QScalar& operator-=(const QScalar& y) { return *this = *this - y; }
    QScalar& operator*=(const QScalar& y) { return *this = *this * y; }
    QScalar& operator/=(const QScalar& y) { return *this = *this / y; }

    /// Field inverse; throws on zero.
    QScalar inverse() const {
        if (is_zero()) throw std::domain_error("QScalar: division by zero");
        if (q_ == 0) throw context_mismatch("QScalar: inverse needs a q context");
        // 1/(a + b v) = (a - b v) / (a^2 - q b^2).  The norm is nonzero: for
        // non-square q, v is irrational over Q; for square q, b == 0 already.
        Rational norm = a_ * a_ - Rational(q_) * b_ * b_;
        return QScalar(a_ / norm, -b_ / norm, q_, tag{});
    }

    QScalar pow(long n) const {
        if (q_ == 0) throw context_mismatch("QScalar: pow needs a q context");
        if (n < 0) return inverse().pow(-n);
        QScalar r = QScalar::one(q_);
        QScalar base = *this;
        while (n > 0) {
            if (n & 1) r *= base;
            base *= base;
            n >>= 1;
        }
        return r;
    }

    /// Canonical rendering "a + b*v" (exact rationals, minimal form).
    std::string str() const {
        if (b_ == 0) return a_.str();
        Rational babs = b_ < 0 ? Rational(-b_) : b_;
        std::string vterm = (babs == 1) ? "v" : "(" + babs.str() + ")*v";
        if (a_ == 0) return (b_ < 0 ? "-" : "") + vterm;
        return a_.str() + (b_ < 0 ? " - " : " + ") + vterm;
    }

    /// Pretty form: prints exact v-powers as "v^k" when possible.
    std::string pretty() const;

    friend std::ostream& operator<<(std::ostream& os, const QScalar& x) { return os << x.str(); }

    friend bool lex_less(const QScalar& x, const QScalar& y) {
        if (x.a_ != y.a_) return x.a_ < y.a_;
        return x.b_ < y.b_;
    }

    static Rational rational_power(unsigned base, long e) {
        Rational r(1);
        BigInt b(base);
        for (long i = 0; i < (e >= 0 ? e : -e); ++i) r *= Rational(b);
        if (e < 0) r = Rational(1) / r;
        return r;
    }

private:
    struct tag {};
    QScalar(Rational a, Rational b, unsigned q, tag) : a_(std::move(a)), b_(std::move(b)), q_(q) {
        fold();
    }

    static unsigned merge(const QScalar& x, const QScalar& y) {
        if (x.q_ == 0) return y.q_;
        if (y.q_ == 0) return x.q_;
        if (x.q_ != y.q_)
            throw context_mismatch("QScalar: mixed q contexts (" + std::to_string(x.q_) + " vs " +
                                   std::to_string(y.q_) + ")");
        return x.q_;
    }

    void fold() {
        if (q_ == 0) return;
        if (unsigned r = exact_sqrt(q_); r != 0 && b_ != 0) {
            a_ += Rational(r) * b_;
            b_ = 0;
        }
    }

    Rational a_, b_;
    unsigned q_;
};

inline std::string QScalar::pretty() const {
    if (q_ == 0 || is_zero()) return str();
    // Try x == r * v^k with r in {1,-1} and |k| small.
    for (long k = -24; k <= 24; ++k) {
        QScalar p = v_power(k, q_);
        if (*this == p) return k == 0 ? "1" : (k == 1 ? "v" : "v^" + std::to_string(k));
        if (*this == -p) return k == 0 ? "-1" : (k == 1 ? "-v" : "-v^" + std::to_string(k));
    }
    return str();
}

} // namespace qhall
