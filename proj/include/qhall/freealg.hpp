/**
 * @file freealg.hpp
 * @brief The free bialgebra F on x_i and the quantum shuffle algebra F*.
 *
 * Both live on sparse word -> QScalar maps over a shared context (root
 * datum, q, word-length cap).  F multiplies by concatenation and
 * comultiplies through the twisted tensor algebra; F* multiplies by
 * v-weighted shuffles and comultiplies by deconcatenation.
 */
#pragma once

#include "qhall/qbinom.hpp"
#include "qhall/root_datum.hpp"

#include <map>

namespace qhall {

using FWord = std::vector<int>; // letters are 0-based vertices

struct WordContext {
    const RootDatum* rd = nullptr;
    unsigned q = 2;
    int cap = 8; // maximum supported word length

    QScalar v(long k) const { return QScalar::v_power(k, q); }
    long sym_letters(int a, int b) const {
        return static_cast<long>(rd->f[a]) * rd->C(a, b);
    }
    long euler_letters(int a, int b) const {
        IntVec ea = IntVec::Zero(rd->n), eb = IntVec::Zero(rd->n);
        ea[a] = 1;
        eb[b] = 1;
        return rd->euler(ea, eb);
    }
    void check_len(size_t len) const {
        if (static_cast<int>(len) > cap)
            throw guard_exceeded("word length " + std::to_string(len) + " exceeds cap " +
                                 std::to_string(cap));
    }
    IntVec weight(const FWord& w) const {
        IntVec d = IntVec::Zero(rd->n);
        for (int j : w) d[j] += 1;
        return d;
    }
};

template <class Tag>
struct WordElement {
    const WordContext* ctx = nullptr;
    std::map<FWord, QScalar> terms;

    void add_term(const FWord& w, const QScalar& c) {
        if (c.is_zero()) return;
        ctx->check_len(w.size());
        auto [it, fresh] = terms.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    QScalar coeff(const FWord& w) const {
        auto it = terms.find(w);
        return it == terms.end() ? QScalar::zero(ctx->q) : it->second;
    }
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const WordElement& a, const WordElement& b) {
        return a.terms == b.terms;
    }
    friend WordElement operator+(const WordElement& a, const WordElement& b) {
        WordElement r = a;
        for (const auto& [w, c] : b.terms) r.add_term(w, c);
        return r;
    }
    friend WordElement operator*(const QScalar& c, const WordElement& a) {
        WordElement r{a.ctx, {}};
        for (const auto& [w, t] : a.terms) r.add_term(w, c * t);
        return r;
    }
    friend WordElement operator-(const WordElement& a, const WordElement& b) {
        return a + (-QScalar::one(a.ctx->q)) * b;
    }
};

struct FreeTag {};
struct ShuffleTag {};
using FreeElement = WordElement<FreeTag>;       // x_u coordinates
using ShuffleElement = WordElement<ShuffleTag>; // y_u coordinates

inline FreeElement free_basis(const WordContext& ctx, const FWord& w) {
    FreeElement x{&ctx, {}};
    x.add_term(w, QScalar::one(ctx.q));
    return x;
}
inline FreeElement free_one(const WordContext& ctx) { return free_basis(ctx, {}); }
inline ShuffleElement shuffle_basis(const WordContext& ctx, const FWord& w) {
    ShuffleElement y{&ctx, {}};
    y.add_term(w, QScalar::one(ctx.q));
    return y;
}

/// Multiplication of F: word concatenation, bilinear.
inline FreeElement free_mul(const FreeElement& a, const FreeElement& b) {
    FreeElement r{a.ctx, {}};
    for (const auto& [u, cu] : a.terms)
        for (const auto& [z, cz] : b.terms) {
            FWord w = u;
            w.insert(w.end(), z.begin(), z.end());
            r.add_term(w, cu * cz);
        }
    return r;
}

/// Sparse element of F (x) F with the twisted multiplication
/// (u1 (x) z1)(u2 (x) z2) = v^{(|z1|,|u2|)} u1u2 (x) z1z2.
struct FreeTensor {
    const WordContext* ctx = nullptr;
    std::map<std::pair<FWord, FWord>, QScalar> terms;

    void add_term(const FWord& a, const FWord& b, const QScalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms.emplace(std::make_pair(a, b), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    QScalar coeff(const FWord& a, const FWord& b) const {
        auto it = terms.find({a, b});
        return it == terms.end() ? QScalar::zero(ctx->q) : it->second;
    }
    friend bool operator==(const FreeTensor& x, const FreeTensor& y) { return x.terms == y.terms; }
};

inline FreeTensor free_tensor_mul(const FreeTensor& x, const FreeTensor& y) {
    const WordContext& ctx = *x.ctx;
    FreeTensor r{&ctx, {}};
    for (const auto& [uz, c1] : x.terms)
        for (const auto& [uz2, c2] : y.terms) {
            const auto& [u1, z1] = uz;
            const auto& [u2, z2] = uz2;
            long tw = static_cast<long>(ctx.rd->sym(ctx.weight(z1), ctx.weight(u2)));
            FWord u = u1;
            u.insert(u.end(), u2.begin(), u2.end());
            FWord z = z1;
            z.insert(z.end(), z2.begin(), z2.end());
            r.add_term(u, z, c1 * c2 * ctx.v(tw));
        }
    return r;
}

/// Delta_F: generators are primitive, extended as an algebra map into the
/// twisted tensor algebra.
inline FreeTensor free_comul(const FreeElement& x) {
    const WordContext& ctx = *x.ctx;
    FreeTensor r{&ctx, {}};
    for (const auto& [w, c] : x.terms) {
        FreeTensor t{&ctx, {}};
        t.add_term({}, {}, QScalar::one(ctx.q));
        for (int j : w) {
            FreeTensor gen{&ctx, {}};
            gen.add_term({j}, {}, QScalar::one(ctx.q));
            gen.add_term({}, {j}, QScalar::one(ctx.q));
            t = free_tensor_mul(t, gen);
        }
        for (const auto& [ab, tc] : t.terms) r.add_term(ab.first, ab.second, c * tc);
    }
    return r;
}

/// Closed form of Delta_F on the monomial x_{i_1}^{a_1} ... x_{i_m}^{a_m}.
inline FreeTensor free_comul_closed(const WordContext& ctx, const FWord& letters,
                                    const std::vector<int>& exps) {
    FreeTensor r{&ctx, {}};
    const size_t m = letters.size();
    std::vector<int> c(m, 0);
    auto expand = [&](const std::vector<int>& e) {
        FWord w;
        for (size_t k = 0; k < m; ++k)
            for (int t = 0; t < e[k]; ++t) w.push_back(letters[k]);
        return w;
    };
    auto rec = [&](auto&& self, size_t k) -> void {
        if (k == m) {
            std::vector<int> b(m);
            for (size_t t = 0; t < m; ++t) b[t] = exps[t] - c[t];
            QScalar coeff = QScalar::one(ctx.q);
            long vpow = 0;
            for (size_t t = 0; t < m; ++t) {
                int f = ctx.rd->f[letters[t]];
                vpow += static_cast<long>(f) * b[t] * c[t];
                coeff *= quantum_binomial(static_cast<unsigned>(exps[t]),
                                          static_cast<unsigned>(c[t]),
                                          static_cast<unsigned>(f), ctx.q);
            }
            for (size_t kk = 0; kk < m; ++kk)
                for (size_t ll = kk + 1; ll < m; ++ll)
                    vpow += static_cast<long>(c[kk]) * b[ll] *
                            ctx.sym_letters(letters[kk], letters[ll]);
            r.add_term(expand(b), expand(c), coeff * ctx.v(vpow));
            return;
        }
        for (c[k] = 0; c[k] <= exps[k]; ++c[k]) self(self, k + 1);
        c[k] = 0;
    };
    rec(rec, 0);
    return r;
}

/// Shuffle product on F*: sum over (r,s)-shuffles with crossing weights
/// (alpha_{j_k}, alpha_{j_l}) per inverted pair.
inline ShuffleElement shuffle_mul(const ShuffleElement& a, const ShuffleElement& b) {
    const WordContext& ctx = *a.ctx;
    ShuffleElement out{&ctx, {}};
    for (const auto& [u1, c1] : a.terms)
        for (const auto& [u2, c2] : b.terms) {
            const size_t r = u1.size(), s = u2.size();
            ctx.check_len(r + s);
            // Choose the positions of u1's letters among 0..r+s-1.
            std::vector<int> pos(r);
            auto rec = [&](auto&& self, size_t k, int next) -> void {
                if (k == r) {
                    FWord w(r + s, -1);
                    for (size_t t = 0; t < r; ++t) w[static_cast<size_t>(pos[t])] = u1[t];
                    std::vector<int> qpos;
                    for (size_t p = 0; p < r + s; ++p)
                        if (w[p] < 0) qpos.push_back(static_cast<int>(p));
                    for (size_t l = 0; l < s; ++l) w[static_cast<size_t>(qpos[l])] = u2[l];
                    long vpow = 0;
                    for (size_t k1 = 0; k1 < r; ++k1)
                        for (size_t l = 0; l < s; ++l)
                            if (pos[k1] > qpos[l])
                                vpow += ctx.sym_letters(u1[k1], u2[l]);
                    out.add_term(w, c1 * c2 * ctx.v(vpow));
                    return;
                }
                for (int p = next; p <= static_cast<int>(r + s - (r - k)); ++p) {
                    pos[k] = p;
                    self(self, k + 1, p + 1);
                }
            };
            rec(rec, 0, 0);
        }
    return out;
}

/// Deconcatenation comultiplication of F*.
struct ShuffleTensor {
    const WordContext* ctx = nullptr;
    std::map<std::pair<FWord, FWord>, QScalar> terms;
    void add_term(const FWord& a, const FWord& b, const QScalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms.emplace(std::make_pair(a, b), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    friend bool operator==(const ShuffleTensor& x, const ShuffleTensor& y) {
        return x.terms == y.terms;
    }
};

inline ShuffleTensor shuffle_comul(const ShuffleElement& y) {
    ShuffleTensor r{y.ctx, {}};
    for (const auto& [u, c] : y.terms)
        for (size_t cut = 0; cut <= u.size(); ++cut) {
            FWord a(u.begin(), u.begin() + static_cast<long>(cut));
            FWord b(u.begin() + static_cast<long>(cut), u.end());
            r.add_term(a, b, c);
        }
    return r;
}

/// Evaluation pairing <y, x>: dual bases on words.
inline QScalar eval_pairing(const ShuffleElement& y, const FreeElement& x) {
    QScalar s = QScalar::zero(y.ctx->q);
    for (const auto& [w, c] : y.terms) {
        auto it = x.terms.find(w);
        if (it != x.terms.end()) s += c * it->second;
    }
    return s;
}

/// Pairing of tensors: <y1 (x) y2, x1 (x) x2> = <y1,x1><y2,x2>.
inline QScalar eval_pairing_tensor(const ShuffleTensor& y, const FreeTensor& x) {
    QScalar s = QScalar::zero(y.ctx->q);
    for (const auto& [ab, c1] : y.terms) {
        auto it = x.terms.find(ab);
        if (it != x.terms.end()) s += c1 * it->second;
    }
    return s;
}

/// Divided power x_i^{[r]} = x_i^r / [r]_i!.
inline FreeElement divided_power(const WordContext& ctx, int i, int r) {
    FWord w(static_cast<size_t>(r), i);
    QScalar c = QScalar::one(ctx.q) / quantum_factorial(static_cast<unsigned>(r),
                                                        static_cast<unsigned>(ctx.rd->f[i]),
                                                        ctx.q);
    FreeElement x{&ctx, {}};
    x.add_term(w, c);
    return x;
}

/// Quantum Serre element: sum_r (-1)^r x_i^{[r]} x_j x_i^{[1-c_ij-r]}.
inline FreeElement serre_element(const WordContext& ctx, int i, int j) {
    if (i == j) throw input_error("serre_element: needs two distinct vertices");
    const int top = 1 - ctx.rd->C(i, j);
    FreeElement s{&ctx, {}};
    for (int r = 0; r <= top; ++r) {
        FreeElement term = free_mul(free_mul(divided_power(ctx, i, r), free_basis(ctx, {j})),
                                    divided_power(ctx, i, top - r));
        QScalar sign = (r % 2 == 0) ? QScalar::one(ctx.q) : -QScalar::one(ctx.q);
        s = s + sign * term;
    }
    return s;
}

} // namespace qhall
