/**
 * @file gf.hpp
 * @brief Table-based finite fields GF(p^E) and their subfield lattice.
 *
 * One ambient field per species context; every vertex field F_{q^{f_i}} and
 * every bimodule field F_{q^{lcm}} is the unique subfield of matching size,
 * so field inclusions are literal and need no embedding maps.
 *
 * Elements are packed base-p digit strings (coefficients of powers of the
 * root of the defining irreducible).  Addition is digitwise, multiplication
 * goes through exp/log tables.
 */
#pragma once

#include <Eigen/Core>

#include <cassert>
#include <cstdint>
#include <memory>
#include <numeric>
#include <vector>

#include "qhall/errors.hpp"

namespace qhall {

namespace gfdetail {

// Dense polynomials over F_p, lowest degree first, used only while building tables.
using Poly = std::vector<int>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

inline Poly poly_mod(Poly a, const Poly& m, int p) {
    trim(a);
    while (a.size() >= m.size()) {
        int c = a.back() % p;
        size_t shift = a.size() - m.size();
        if (c != 0) {
            // leading coefficient of m is 1 (monic)
            for (size_t i = 0; i < m.size(); ++i)
                a[i + shift] = ((a[i + shift] - c * m[i]) % p + p) % p;
        }
        trim(a);
        if (a.size() < m.size()) break;
    }
    return a;
}

inline Poly poly_powmod(Poly base, uint64_t e, const Poly& m, int p) {
    Poly r{1};
    base = poly_mod(std::move(base), m, p);
    while (e > 0) {
        if (e & 1) r = poly_mod(poly_mul(r, base, p), m, p);
        base = poly_mod(poly_mul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

inline Poly poly_gcd(Poly a, Poly b, int p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic
        int lead = b.back();
        int inv = 1;
        for (int t = 1; t < p; ++t)
            if (t * lead % p == 1) { inv = t; break; }
        Poly bm = b;
        for (int& c : bm) c = c * inv % p;
        a = poly_mod(std::move(a), bm, p);
        std::swap(a, b);
    }
    return a;
}

inline std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> fs;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) fs.push_back(n);
    return fs;
}

} // namespace gfdetail

class GFTable {
public:
    GFTable(int p, int deg) : p_(p), deg_(deg) {
        size_ = 1;
        for (int i = 0; i < deg; ++i) size_ *= static_cast<uint64_t>(p);
        if (size_ > (1u << 24))
            throw guard_exceeded("GF table too large: p^deg = " + std::to_string(size_));
        build();
    }

    int p() const { return p_; }
    int degree() const { return deg_; }
    uint64_t size() const { return size_; }

    uint32_t zero() const { return 0; }
    uint32_t one() const { return 1; }
    uint32_t gen() const { return gen_; }

    uint32_t add(uint32_t a, uint32_t b) const {
        if (p_ == 2) return a ^ b;
        uint32_t r = 0, mult = 1;
        for (int i = 0; i < deg_; ++i) {
            int da = (a / mult) % p_ + (b / mult) % p_;
            r += static_cast<uint32_t>(da % p_) * mult;
            mult *= static_cast<uint32_t>(p_);
        }
        return r;
    }

    uint32_t neg(uint32_t a) const {
        if (p_ == 2) return a;
        uint32_t r = 0, mult = 1;
        for (int i = 0; i < deg_; ++i) {
            int da = (p_ - (a / mult) % p_) % p_;
            r += static_cast<uint32_t>(da) * mult;
            mult *= static_cast<uint32_t>(p_);
        }
        return r;
    }

    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        uint64_t k = static_cast<uint64_t>(logt_[a]) + logt_[b];
        uint64_t n = size_ - 1;
        return expt_[k >= n ? k - n : k];
    }

    uint32_t inv(uint32_t a) const {
        if (a == 0) throw std::domain_error("GF: inverse of zero");
        uint64_t n = size_ - 1;
        return expt_[(n - logt_[a]) % n];
    }

    uint32_t pow(uint32_t a, uint64_t e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        uint64_t n = size_ - 1;
        return expt_[(static_cast<uint64_t>(logt_[a]) % n) * (e % n) % n];
    }

    /// Frobenius a -> a^{p^t}.
    uint32_t frob(uint32_t a, int t) const {
        uint64_t pe = 1;
        for (int i = 0; i < t % deg_; ++i) pe *= static_cast<uint64_t>(p_);
        return pow(a, pe);
    }

    /// Subfield membership: x in GF(p^d) iff x^{p^d} = x (d | deg).
    bool in_subfield(uint32_t a, int d) const { return frob(a, d) == a; }

    /// Fixed generator of the subfield GF(p^d)^x.
    uint32_t subfield_gen(int d) const {
        if (deg_ % d != 0) throw std::logic_error("GF: not a subfield degree");
        uint64_t pd = 1;
        for (int i = 0; i < d; ++i) pd *= static_cast<uint64_t>(p_);
        return expt_[(size_ - 1) / (pd - 1) % (size_ - 1)];
    }

    /// Trace from GF(p^b) down to GF(p^d), for x in GF(p^b), d | b | deg.
    uint32_t trace(uint32_t x, int b, int d) const {
        assert(b % d == 0 && in_subfield(x, b));
        uint32_t s = 0;
        for (int t = 0; t < b / d; ++t) s = add(s, frob(x, d * t));
        return s;
    }

private:
    void build() {
        using namespace gfdetail;
        // Lexicographically smallest monic irreducible of degree deg over F_p.
        Poly f;
        for (uint64_t tail = 0; tail < size_; ++tail) {
            Poly cand(deg_ + 1, 0);
            cand[deg_] = 1;
            uint64_t t = tail;
            for (int i = 0; i < deg_; ++i) { cand[i] = static_cast<int>(t % p_); t /= p_; }
            if (is_irreducible(cand)) { f = cand; break; }
        }
        if (f.empty()) throw std::logic_error("GF: no irreducible found");
        modulus_ = f;

        // Primitive element: smallest packed value of full multiplicative order.
        auto factors = prime_factors(size_ - 1);
        uint32_t g = (size_ == 2) ? 1 : 0;
        for (uint64_t cand = 2; g == 0 && cand < size_; ++cand) {
            Poly cp = unpack(static_cast<uint32_t>(cand));
            bool primitive = true;
            for (uint64_t ell : factors) {
                Poly r = poly_powmod(cp, (size_ - 1) / ell, f, p_);
                if (r.size() == 1 && r[0] == 1) { primitive = false; break; }
            }
            if (primitive) { g = static_cast<uint32_t>(cand); break; }
        }
        if (g == 0) throw std::logic_error("GF: no primitive element found");

        expt_.assign(size_ - 1, 0);
        logt_.assign(size_, 0);
        Poly acc{1};
        Poly gp = unpack(g);
        for (uint64_t k = 0; k < size_ - 1; ++k) {
            expt_[k] = pack(acc);
            logt_[expt_[k]] = static_cast<uint32_t>(k);
            acc = poly_mod(poly_mul(acc, gp, p_), f, p_);
        }
        gen_ = g;
    }

    bool is_irreducible(const gfdetail::Poly& f) const {
        using namespace gfdetail;
        // x^{p^deg} == x mod f, and x^{p^{deg/l}} - x coprime to f for primes l | deg.
        Poly x{0, 1};
        uint64_t pe = 1;
        for (int i = 0; i < deg_; ++i) pe *= static_cast<uint64_t>(p_);
        Poly xq = x;
        for (int i = 0; i < deg_; ++i) xq = poly_powmod(xq, static_cast<uint64_t>(p_), f, p_);
        Poly diff = xq;
        diff.resize(std::max<size_t>(diff.size(), 2), 0);
        diff[1] = ((diff[1] - 1) % p_ + p_) % p_;
        diff = poly_mod(std::move(diff), f, p_);
        if (!diff.empty()) return false;
        for (uint64_t ell : prime_factors(static_cast<uint64_t>(deg_))) {
            Poly xe = x;
            for (int i = 0; i < deg_ / static_cast<int>(ell); ++i)
                xe = poly_powmod(xe, static_cast<uint64_t>(p_), f, p_);
            Poly d = xe;
            d.resize(std::max<size_t>(d.size(), 2), 0);
            d[1] = ((d[1] - 1) % p_ + p_) % p_;
            trim(d);
            Poly g = poly_gcd(d, f, p_);
            if (g.size() != 1) return false;
        }
        return true;
    }

    gfdetail::Poly unpack(uint32_t a) const {
        gfdetail::Poly r(deg_, 0);
        for (int i = 0; i < deg_; ++i) { r[i] = static_cast<int>(a % p_); a /= static_cast<uint32_t>(p_); }
        gfdetail::trim(r);
        return r;
    }
    uint32_t pack(const gfdetail::Poly& a) const {
        uint32_t r = 0, mult = 1;
        for (int i = 0; i < deg_; ++i) {
            if (i < static_cast<int>(a.size())) r += static_cast<uint32_t>(a[i]) * mult;
            mult *= static_cast<uint32_t>(p_);
        }
        return r;
    }

    int p_, deg_;
    uint64_t size_;
    uint32_t gen_ = 0;
    gfdetail::Poly modulus_;
    std::vector<uint32_t> expt_, logt_;
};

/// Field element bound to its table.  A default-constructed element is the
/// untyped zero; untyped 0/1 literals exist so Eigen can value-initialize
/// accumulators and identities, and adopt a table on first contact.
struct GFEl {
    uint32_t v = 0;
    const GFTable* F = nullptr;

    GFEl() = default;
    GFEl(int literal) : v(static_cast<uint32_t>(literal)) { assert(literal == 0 || literal == 1); }
    GFEl(uint32_t value, const GFTable* table) : v(value), F(table) {}

    bool is_zero() const { return v == 0; }

    /// Bind an untyped literal to a table (0 -> 0, 1 -> multiplicative unit).
    static uint32_t bound(GFEl x, const GFTable* F) {
        if (x.F) { assert(x.F == F); return x.v; }
        assert(x.v <= 1);
        return x.v; // 0 and 1 are packed the same way in every table
    }

    friend GFEl operator+(GFEl a, GFEl b) {
        const GFTable* F = a.F ? a.F : b.F;
        if (!F) {
            assert(a.v == 0 || b.v == 0);
            return {a.v | b.v, nullptr};
        }
        return {F->add(bound(a, F), bound(b, F)), F};
    }
    friend GFEl operator-(GFEl a, GFEl b) {
        const GFTable* F = a.F ? a.F : b.F;
        if (!F) {
            assert(b.v == 0);
            return a;
        }
        return {F->sub(bound(a, F), bound(b, F)), F};
    }
    friend GFEl operator-(GFEl a) {
        if (!a.F) {
            assert(a.v == 0);
            return a;
        }
        return {a.F->neg(a.v), a.F};
    }
    friend GFEl operator*(GFEl a, GFEl b) {
        const GFTable* F = a.F ? a.F : b.F;
        if (a.v == 0 || b.v == 0) return {0, F};
        if (!F) return {1, nullptr}; // 1 * 1
        return {F->mul(bound(a, F), bound(b, F)), F};
    }
    friend GFEl operator/(GFEl a, GFEl b) {
        assert(b.F && b.v != 0);
        return {b.F->mul(a.v, b.F->inv(b.v)), b.F};
    }
    GFEl& operator+=(GFEl b) { return *this = *this + b; }
    GFEl& operator-=(GFEl b) { return *this = *this - b; }
    GFEl& operator*=(GFEl b) { return *this = *this * b; }

    GFEl inv() const {
        assert(F);
        return {F->inv(v), F};
    }

    friend bool operator==(GFEl a, GFEl b) {
        if (a.v == 0 && b.v == 0) return true;
        assert(!a.F || !b.F || a.F == b.F);
        return a.v == b.v;
    }
    friend bool operator!=(GFEl a, GFEl b) { return !(a == b); }
};

using GFMat = Eigen::Matrix<GFEl, Eigen::Dynamic, Eigen::Dynamic>;
using GFVec = Eigen::Matrix<GFEl, Eigen::Dynamic, 1>;

} // namespace qhall

namespace Eigen {
template <>
struct NumTraits<qhall::GFEl> {
    using Real = qhall::GFEl;
    using NonInteger = qhall::GFEl;
    using Literal = qhall::GFEl;
    using Nested = qhall::GFEl;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 4,
        MulCost = 4
    };
    static inline Real epsilon() { return {}; }
    static inline Real dummy_precision() { return {}; }
    static inline int digits10() { return 0; }
};
} // namespace Eigen
