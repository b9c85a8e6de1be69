/**
 * @file qpoly.hpp
 * @brief The quantum polynomial algebra P_w of a word, its graded dual, and
 *        the word-indexed maps T_w (dual -> free) and S_w (shuffle -> P_w).
 *
 * Exponent monomials t^a multiply by
 *   t^a t^b = v^{sum_{k<l} b_k a_l (alpha_{i_k}, alpha_{i_l})} t^{a+b};
 * the dual basis t_a comultiplies with the transpose weights.
 */
#pragma once

#include "qhall/freealg.hpp"

namespace qhall {

using Expo = std::vector<int>;

struct QPolyContext {
    const RootDatum* rd = nullptr;
    unsigned q = 2;
    Word w; // 0-based vertices

    size_t len() const { return w.size(); }
    QScalar v(long k) const { return QScalar::v_power(k, q); }
    long sym_letters(int a, int b) const { return static_cast<long>(rd->f[a]) * rd->C(a, b); }
    bool same(const QPolyContext& o) const { return rd == o.rd && q == o.q && w == o.w; }
};

struct QPolyElement {
    const QPolyContext* ctx = nullptr;
    bool dual = false;
    std::map<Expo, QScalar> terms;

    void add_term(const Expo& a, const QScalar& c) {
        if (c.is_zero()) return;
        if (a.size() != ctx->len())
            throw context_mismatch("qpoly: exponent length does not match the word");
        auto [it, fresh] = terms.emplace(a, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    QScalar coeff(const Expo& a) const {
        auto it = terms.find(a);
        return it == terms.end() ? QScalar::zero(ctx->q) : it->second;
    }
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const QPolyElement& x, const QPolyElement& y) {
        return x.dual == y.dual && x.terms == y.terms;
    }
    friend QPolyElement operator+(const QPolyElement& x, const QPolyElement& y) {
        QPolyElement r = x;
        for (const auto& [a, c] : y.terms) r.add_term(a, c);
        return r;
    }
    friend QPolyElement operator*(const QScalar& c, const QPolyElement& x) {
        QPolyElement r{x.ctx, x.dual, {}};
        for (const auto& [a, t] : x.terms) r.add_term(a, c * t);
        return r;
    }
    friend QPolyElement operator-(const QPolyElement& x, const QPolyElement& y) {
        return x + (-QScalar::one(x.ctx->q)) * y;
    }
};

inline QPolyElement qp_basis(const QPolyContext& ctx, const Expo& a, bool dual = false) {
    QPolyElement x{&ctx, dual, {}};
    x.add_term(a, QScalar::one(ctx.q));
    return x;
}
inline Expo qp_zero_expo(const QPolyContext& ctx) { return Expo(ctx.len(), 0); }
inline QPolyElement qp_one(const QPolyContext& ctx) { return qp_basis(ctx, qp_zero_expo(ctx)); }

/// Generator t_k (0-based position).
inline QPolyElement qp_gen(const QPolyContext& ctx, size_t k) {
    Expo a = qp_zero_expo(ctx);
    a[k] = 1;
    return qp_basis(ctx, a);
}

/// t^a t^b = v^{sum_{k<l} b_k a_l (alpha_{i_k}, alpha_{i_l})} t^{a+b}.
inline QPolyElement qp_mul(const QPolyElement& x, const QPolyElement& y) {
    if (!x.ctx->same(*y.ctx)) throw context_mismatch("qp_mul: different word contexts");
    if (x.dual || y.dual) throw context_mismatch("qp_mul: dual elements do not multiply");
    const QPolyContext& ctx = *x.ctx;
    QPolyElement r{&ctx, false, {}};
    for (const auto& [a, ca] : x.terms)
        for (const auto& [b, cb] : y.terms) {
            long vpow = 0;
            for (size_t k = 0; k < ctx.len(); ++k)
                for (size_t l = k + 1; l < ctx.len(); ++l)
                    vpow += static_cast<long>(b[k]) * a[l] * ctx.sym_letters(ctx.w[k], ctx.w[l]);
            Expo sum(ctx.len());
            for (size_t k = 0; k < ctx.len(); ++k) sum[k] = a[k] + b[k];
            r.add_term(sum, ca * cb * ctx.v(vpow));
        }
    return r;
}

struct QPolyTensor {
    const QPolyContext* ctx = nullptr;
    std::map<std::pair<Expo, Expo>, QScalar> terms;
    void add_term(const Expo& a, const Expo& b, const QScalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms.emplace(std::make_pair(a, b), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    QScalar coeff(const Expo& a, const Expo& b) const {
        auto it = terms.find({a, b});
        return it == terms.end() ? QScalar::zero(ctx->q) : it->second;
    }
};

/// Delta(t_a) = sum_{b+c=a} v^{sum_{k<l} c_k b_l (alpha_{i_k},alpha_{i_l})} t_b (x) t_c.
inline QPolyTensor qp_dual_comul(const QPolyElement& x) {
    if (!x.dual) throw context_mismatch("qp_dual_comul: needs a dual element");
    const QPolyContext& ctx = *x.ctx;
    QPolyTensor r{&ctx, {}};
    for (const auto& [a, ca] : x.terms) {
        Expo c(ctx.len(), 0);
        auto rec = [&](auto&& self, size_t k) -> void {
            if (k == ctx.len()) {
                Expo b(ctx.len());
                for (size_t t = 0; t < ctx.len(); ++t) b[t] = a[t] - c[t];
                long vpow = 0;
                for (size_t kk = 0; kk < ctx.len(); ++kk)
                    for (size_t ll = kk + 1; ll < ctx.len(); ++ll)
                        vpow += static_cast<long>(c[kk]) * b[ll] *
                                ctx.sym_letters(ctx.w[kk], ctx.w[ll]);
                r.add_term(b, c, ca * ctx.v(vpow));
                return;
            }
            for (c[k] = 0; c[k] <= a[k]; ++c[k]) self(self, k + 1);
            c[k] = 0;
        };
        rec(rec, 0);
    }
    return r;
}

/// z_w(a) = prod_k v_{i_k}^{-a_k(a_k-1)/2} / prod_k [a_k]_{i_k}!.
inline QScalar z_w(const QPolyContext& ctx, const Expo& a) {
    QScalar z = QScalar::one(ctx.q);
    for (size_t k = 0; k < ctx.len(); ++k) {
        const int f = ctx.rd->f[ctx.w[k]];
        z *= ctx.v(-static_cast<long>(f) * a[k] * (a[k] - 1) / 2);
        z /= quantum_factorial(static_cast<unsigned>(a[k]), static_cast<unsigned>(f), ctx.q);
    }
    return z;
}

/// h_w(a) = prod_k v_{i_k}^{a_k(a_k-1)/2} * v^{sum_{k<l} a_k a_l <alpha_{i_k}, alpha_{i_l}>}.
inline QScalar h_w(const QPolyContext& ctx, const Expo& a) {
    QScalar h = QScalar::one(ctx.q);
    long vpow = 0;
    for (size_t k = 0; k < ctx.len(); ++k)
        vpow += static_cast<long>(ctx.rd->f[ctx.w[k]]) * a[k] * (a[k] - 1) / 2;
    for (size_t k = 0; k < ctx.len(); ++k)
        for (size_t l = k + 1; l < ctx.len(); ++l) {
            IntVec ek = IntVec::Zero(ctx.rd->n), el = IntVec::Zero(ctx.rd->n);
            ek[ctx.w[k]] = 1;
            el[ctx.w[l]] = 1;
            vpow += static_cast<long>(a[k]) * a[l] * ctx.rd->euler(ek, el);
        }
    return h * ctx.v(vpow);
}

/// The word i_1^{a_1} i_2^{a_2} ... i_m^{a_m}.
inline FWord expand_word(const QPolyContext& ctx, const Expo& a) {
    FWord u;
    for (size_t k = 0; k < ctx.len(); ++k)
        for (int t = 0; t < a[k]; ++t) u.push_back(ctx.w[k]);
    return u;
}

/// T_w: P_w^* -> F, t_a |-> z_w(a) x_{i_1}^{a_1} ... x_{i_m}^{a_m}.
inline FreeElement map_T_w(const QPolyElement& x, const WordContext& target) {
    if (!x.dual) throw context_mismatch("map_T_w: needs a dual element");
    FreeElement r{&target, {}};
    for (const auto& [a, c] : x.terms) r.add_term(expand_word(*x.ctx, a), c * z_w(*x.ctx, a));
    return r;
}

/// All exponent vectors a with (i_1^{a_1} ... i_m^{a_m}) equal to the word u.
inline std::vector<Expo> word_expansions(const QPolyContext& ctx, const FWord& u) {
    std::vector<Expo> out;
    Expo a(ctx.len(), 0);
    auto rec = [&](auto&& self, size_t k, size_t pos) -> void {
        if (k == ctx.len()) {
            if (pos == u.size()) out.push_back(a);
            return;
        }
        a[k] = 0;
        self(self, k + 1, pos);
        int count = 0;
        size_t p = pos;
        while (p < u.size() && u[p] == ctx.w[k]) {
            ++p;
            ++count;
            a[k] = count;
            self(self, k + 1, p);
        }
        a[k] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

/// S_w: F* -> P_w, y_u |-> sum over expansions z_w(a) t^a.
inline QPolyElement map_S_w(const ShuffleElement& y, const QPolyContext& ctx) {
    QPolyElement r{&ctx, false, {}};
    for (const auto& [u, c] : y.terms)
        for (const Expo& a : word_expansions(ctx, u)) r.add_term(a, c * z_w(ctx, a));
    return r;
}

/// Braid-move isomorphism P_{w1} -> P_{w2} when w2 = short_braid_move(w1, k):
/// swaps the k-th and (k+1)-st exponent slots (primal or dual coordinates).
inline QPolyElement braid_iso(const QPolyContext& from, const QPolyContext& to, size_t k,
                              const QPolyElement& x) {
    if (x.ctx != &from) throw context_mismatch("braid_iso: element not in source algebra");
    if (from.rd != to.rd || from.q != to.q || from.len() != to.len())
        throw context_mismatch("braid_iso: incompatible algebras");
    Word expect = from.w;
    if (k + 1 >= expect.size()) throw input_error("braid_iso: position out of range");
    std::swap(expect[k], expect[k + 1]);
    if (expect != to.w) throw input_error("braid_iso: words are not related by the move");
    IntVec ea = IntVec::Zero(from.rd->n), eb = IntVec::Zero(from.rd->n);
    ea[from.w[k]] = 1;
    eb[from.w[k + 1]] = 1;
    if (from.rd->sym(ea, eb) != 0)
        throw input_error("braid_iso: adjacent letters are not orthogonal");
    QPolyElement r{&to, x.dual, {}};
    for (const auto& [a, c] : x.terms) {
        Expo b = a;
        std::swap(b[k], b[k + 1]);
        r.add_term(b, c);
    }
    return r;
}

} // namespace qhall
