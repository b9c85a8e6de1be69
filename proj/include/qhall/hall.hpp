/**
 * @file hall.hpp
 * @brief The twisted Ringel-Hall bialgebra H(Q) and its graded dual.
 *
 * Elements are sparse maps isoclass -> QScalar.  Dual elements (coordinates
 * in the delta basis) reuse the same representation with a flag; the
 * non-degenerate form ([M],[N]) = delta_{M,N} / |Aut M| is the bridge.
 */
#pragma once

#include "qhall/repcat.hpp"

namespace qhall {

struct HallElement {
    RepCategory* cat = nullptr;
    bool dual = false;
    std::map<Mult, QScalar> terms;

    void add_term(const Mult& m, const QScalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    QScalar coeff(const Mult& m) const {
        auto it = terms.find(m);
        return it == terms.end() ? QScalar::zero(cat->q()) : it->second;
    }
    bool is_zero() const { return terms.empty(); }

    friend bool operator==(const HallElement& a, const HallElement& b) {
        return a.dual == b.dual && a.terms == b.terms;
    }
};

inline HallElement hall_basis(RepCategory& cat, const Mult& m, bool dual = false) {
    HallElement x{&cat, dual, {}};
    x.add_term(m, QScalar::one(cat.q()));
    return x;
}

inline HallElement hall_zero(RepCategory& cat, bool dual = false) { return {&cat, dual, {}}; }

/// The unit [0].
inline HallElement hall_unit(RepCategory& cat) { return hall_basis(cat, zero_class(cat.nu())); }

inline void check_same(const HallElement& x, const HallElement& y) {
    if (x.cat != y.cat || x.dual != y.dual)
        throw context_mismatch("hall: mixed contexts or primal/dual flags");
}

inline HallElement operator+(const HallElement& x, const HallElement& y) {
    check_same(x, y);
    HallElement r = x;
    for (const auto& [m, c] : y.terms) r.add_term(m, c);
    return r;
}

inline HallElement operator*(const QScalar& c, const HallElement& x) {
    HallElement r{x.cat, x.dual, {}};
    for (const auto& [m, t] : x.terms) r.add_term(m, c * t);
    return r;
}

inline HallElement operator-(const HallElement& x, const HallElement& y) {
    return x + (-QScalar::one(x.cat->q())) * y;
}

/// [M] * [N] = sum_L v^{<|M|,|N|>} F^L_{M,N} [L], extended bilinearly.
inline HallElement hall_mul(const HallElement& x, const HallElement& y) {
    check_same(x, y);
    if (x.dual) throw context_mismatch("hall_mul: dual elements multiply through the coproduct");
    RepCategory& cat = *x.cat;
    HallElement r = hall_zero(cat);
    for (const auto& [m, cm] : x.terms)
        for (const auto& [n, cn] : y.terms) {
            QScalar twist = cat.vq(cat.rd().euler(cat.dim_of(m), cat.dim_of(n)));
            IntVec d = cat.dim_of(m) + cat.dim_of(n);
            for (const Mult& L : cat.classes_with_dim(d)) {
                long long F = cat.hall_number(L, m, n);
                if (F == 0) continue;
                r.add_term(L, cm * cn * twist * QScalar::integer(F, cat.q()));
            }
        }
    return r;
}

/// Sparse element of H(Q) (x) H(Q).
struct HallTensor {
    RepCategory* cat = nullptr;
    std::map<std::pair<Mult, Mult>, QScalar> terms;

    void add_term(const Mult& a, const Mult& b, const QScalar& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(a, b);
        auto [it, fresh] = terms.emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    QScalar coeff(const Mult& a, const Mult& b) const {
        auto it = terms.find({a, b});
        return it == terms.end() ? QScalar::zero(cat->q()) : it->second;
    }
    friend bool operator==(const HallTensor& a, const HallTensor& b) { return a.terms == b.terms; }
};

/// Delta([L]) = sum v^{<|M|,|N|>} |Aut M||Aut N|/|Aut L| F^L_{M,N} [M] (x) [N].
inline HallTensor hall_comul(const HallElement& x) {
    RepCategory& cat = *x.cat;
    HallTensor t{&cat, {}};
    for (const auto& [L, cL] : x.terms) {
        QScalar autL = QScalar::integer(cat.aut_of(L), cat.q());
        for (const auto& [pair, count] : cat.subquots(L)) {
            const auto& [m, n] = pair;
            QScalar c = cat.vq(cat.rd().euler(cat.dim_of(m), cat.dim_of(n))) *
                        QScalar::integer(cat.aut_of(m), cat.q()) *
                        QScalar::integer(cat.aut_of(n), cat.q()) / autL *
                        QScalar::integer(count, cat.q());
            t.add_term(m, n, cL * c);
        }
    }
    return t;
}

/// Twisted multiplication on the tensor square:
/// (U1 (x) V1)(U2 (x) V2) = v^{(|V1|,|U2|)} U1*U2 (x) V1*V2.
inline HallTensor tensor_mul(const HallTensor& x, const HallTensor& y) {
    RepCategory& cat = *x.cat;
    HallTensor r{&cat, {}};
    for (const auto& [ab, c1] : x.terms)
        for (const auto& [cd, c2] : y.terms) {
            const auto& [u1, v1] = ab;
            const auto& [u2, v2] = cd;
            QScalar twist = cat.vq(cat.rd().sym(cat.dim_of(v1), cat.dim_of(u2)));
            HallElement left = hall_mul(hall_basis(cat, u1), hall_basis(cat, u2));
            HallElement right = hall_mul(hall_basis(cat, v1), hall_basis(cat, v2));
            for (const auto& [a, ca] : left.terms)
                for (const auto& [b, cb] : right.terms)
                    r.add_term(a, b, c1 * c2 * twist * ca * cb);
        }
    return r;
}

/// The symmetric form; ([M],[N]) = delta/|Aut M| on primal elements, its
/// inverse on dual ones, and the evaluation pairing across the flag.
inline QScalar hall_pairing(const HallElement& x, const HallElement& y) {
    if (x.cat != y.cat) throw context_mismatch("hall_pairing: mixed categories");
    RepCategory& cat = *x.cat;
    QScalar s = QScalar::zero(cat.q());
    for (const auto& [m, cm] : x.terms) {
        auto it = y.terms.find(m);
        if (it == y.terms.end()) continue;
        QScalar prod = cm * it->second;
        if (x.dual && y.dual)
            prod *= QScalar::integer(cat.aut_of(m), cat.q());
        else if (!x.dual && !y.dual)
            prod /= QScalar::integer(cat.aut_of(m), cat.q());
        s += prod;
    }
    return s;
}

/// psi(a) = (a, -): coordinates of a in the delta basis (and back).
inline HallElement dualize(const HallElement& x) {
    RepCategory& cat = *x.cat;
    HallElement r{&cat, !x.dual, {}};
    for (const auto& [m, c] : x.terms) {
        QScalar autm = QScalar::integer(cat.aut_of(m), cat.q());
        r.add_term(m, x.dual ? c * autm : c / autm);
    }
    return r;
}

/// Counit: coefficient of [0].
inline QScalar hall_counit(const HallElement& x) { return x.coeff(zero_class(x.cat->nu())); }

/// Induced form on the tensor square: (a (x) b, c (x) d) = (a,c)(b,d).
inline QScalar tensor_pairing(const HallTensor& x, const HallTensor& y, bool dual_left = false) {
    RepCategory& cat = *x.cat;
    QScalar s = QScalar::zero(cat.q());
    for (const auto& [ab, c1] : x.terms)
        for (const auto& [cd, c2] : y.terms) {
            const auto& [a, b] = ab;
            const auto& [c, d] = cd;
            if (a != c || b != d) continue;
            QScalar prod = c1 * c2;
            if (!dual_left)
                prod /= QScalar::integer(cat.aut_of(a), cat.q()) *
                        QScalar::integer(cat.aut_of(b), cat.q());
            s += prod;
        }
    return s;
}

} // namespace qhall
