/**
 * @file maps.hpp
 * @brief Feigin-type maps between the dual Hall algebra, the shuffle
 *        algebra and the quantum polynomial algebra, plus the triangular
 *        expansion that witnesses injectivity.
 *
 * Phi: F -> H(Q), x_i -> [S_i].
 * Omega = Phi^*: delta_[M] -> sum_u v^{sum_{k<l} <a_{j_k}, a_{j_l}>} F^M_{S_*} y_u.
 * int_w = (Phi o T_w)^*: delta_[M] -> sum_a v^{...} F^M_{S^{a_1}, ...} t^a.
 * F_w: x_j -> sum_{i_k = j} t_k, evaluated through P_w.
 */
#pragma once

#include "qhall/hall.hpp"
#include "qhall/qpoly.hpp"

namespace qhall {

struct MapContext {
    RepCategory* cat = nullptr;
    WordContext wctx;          // free / shuffle algebras
    QPolyContext pctx;         // P_w for the chosen word
    DirectedPartition parts;   // defaults to P_*
    Enumeration order;         // e_D, refines the partition

    unsigned q() const { return cat->q(); }
};

/// Context for a word; the partition defaults to P_* (whose word is w0).
inline MapContext make_map_context(RepCategory& cat, std::optional<Word> word = std::nullopt,
                                   std::optional<DirectedPartition> partition = std::nullopt,
                                   int word_cap = 8) {
    MapContext ctx;
    ctx.cat = &cat;
    ctx.parts = partition ? *partition : cat.ar().proj_partition();
    ctx.order = enumeration_from_partition(cat.ar(), ctx.parts, cat.hom_table());
    Word w = word ? *word : cat.ar().word_of_partition(ctx.parts);
    ctx.wctx = WordContext{&cat.rd(), cat.q(), word_cap};
    ctx.pctx = QPolyContext{&cat.rd(), cat.q(), std::move(w)};
    return ctx;
}

/// Phi: F -> H(Q), words go to products of simples.
inline HallElement phi_map(RepCategory& cat, const FreeElement& x) {
    HallElement r = hall_zero(cat);
    for (const auto& [w, c] : x.terms) {
        HallElement prod = hall_unit(cat);
        for (int j : w) prod = hall_mul(prod, hall_basis(cat, cat.simple_power(j, 1)));
        r = r + c * prod;
    }
    return r;
}

/// All words with the given vertex-count weight, lexicographically.
inline std::vector<FWord> words_with_weight(const RootDatum& rd, const IntVec& weight) {
    std::vector<FWord> out;
    FWord cur;
    IntVec rem = weight;
    const int total = weight.sum();
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == total) {
            out.push_back(cur);
            return;
        }
        for (int j = 0; j < rd.n; ++j) {
            if (rem[j] == 0) continue;
            rem[j] -= 1;
            cur.push_back(j);
            self(self);
            cur.pop_back();
            rem[j] += 1;
        }
    };
    rec(rec);
    return out;
}

/// Omega: dual Hall -> shuffle algebra (the quantum shuffle character).
inline ShuffleElement map_omega(const MapContext& ctx, const HallElement& x) {
    if (!x.dual) throw context_mismatch("map_omega: needs a dual Hall element");
    RepCategory& cat = *ctx.cat;
    ShuffleElement r{&ctx.wctx, {}};
    for (const auto& [m, cm] : x.terms) {
        IntVec d = cat.dim_of(m);
        ctx.wctx.check_len(static_cast<size_t>(d.sum()));
        for (const FWord& u : words_with_weight(cat.rd(), d)) {
            std::vector<int> ones(u.size(), 1);
            long long F = cat.filtration_semisimple(m, u, ones);
            if (F == 0) continue;
            long vpow = 0;
            for (size_t k = 0; k < u.size(); ++k)
                for (size_t l = k + 1; l < u.size(); ++l)
                    vpow += ctx.wctx.euler_letters(u[k], u[l]);
            r.add_term(u, cm * ctx.wctx.v(vpow) * QScalar::integer(F, cat.q()));
        }
    }
    return r;
}

/// All exponent vectors along w with sum a_k alpha_{i_k} = d.
inline std::vector<Expo> exponents_with_weight(const QPolyContext& ctx, const IntVec& d) {
    std::vector<Expo> out;
    Expo a(ctx.len(), 0);
    IntVec rem = d;
    auto rec = [&](auto&& self, size_t k) -> void {
        if ((rem.array() < 0).any()) return;
        if (k == ctx.len()) {
            if (rem.sum() == 0) out.push_back(a);
            return;
        }
        const int cap = rem[ctx.w[k]];
        for (int c = 0; c <= cap; ++c) {
            a[k] = c;
            rem[ctx.w[k]] -= c;
            self(self, k + 1);
            rem[ctx.w[k]] += c;
        }
        a[k] = 0;
    };
    rec(rec, 0);
    return out;
}

/// int_w: dual Hall -> P_w (the generalized Feigin homomorphism).
inline QPolyElement map_int_w(const MapContext& ctx, const HallElement& x) {
    if (!x.dual) throw context_mismatch("map_int_w: needs a dual Hall element");
    RepCategory& cat = *ctx.cat;
    QPolyElement r{&ctx.pctx, false, {}};
    for (const auto& [m, cm] : x.terms)
        for (const Expo& a : exponents_with_weight(ctx.pctx, cat.dim_of(m))) {
            long long F = cat.filtration_semisimple(m, ctx.pctx.w, a);
            if (F == 0) continue;
            r.add_term(a, cm * h_w(ctx.pctx, a) * QScalar::integer(F, cat.q()));
        }
    return r;
}

/// Feigin evaluation F_w on the free algebra: x_j -> sum_{i_k = j} t_k.
inline QPolyElement feigin_eval(const MapContext& ctx, const FreeElement& x) {
    QPolyElement r{&ctx.pctx, false, {}};
    for (const auto& [word, c] : x.terms) {
        QPolyElement prod = qp_one(ctx.pctx);
        for (int j : word) {
            QPolyElement gen{&ctx.pctx, false, {}};
            for (size_t k = 0; k < ctx.pctx.len(); ++k)
                if (ctx.pctx.w[k] == j) gen = gen + qp_gen(ctx.pctx, k);
            prod = qp_mul(prod, gen);
        }
        r = r + c * prod;
    }
    return r;
}

/// Phi o T_w on dual polynomial elements.
inline HallElement phi_T_w(const MapContext& ctx, const QPolyElement& x) {
    return phi_map(*ctx.cat, map_T_w(x, ctx.wctx));
}

/// The dual Hall product, defined by adjointness against hall_comul:
/// coefficient of delta_L in x <> y is <x (x) y, Delta [L]>.
inline HallElement dual_hall_mul(const HallElement& x, const HallElement& y) {
    if (!x.dual || !y.dual) throw context_mismatch("dual_hall_mul: needs dual elements");
    RepCategory& cat = *x.cat;
    HallElement r = hall_zero(cat, true);
    std::map<IntVec, std::vector<Mult>, IntVecLess> seen;
    for (const auto& [m, cm] : x.terms)
        for (const auto& [n, cn] : y.terms) {
            IntVec d = cat.dim_of(m) + cat.dim_of(n);
            auto it = seen.find(d);
            if (it == seen.end()) it = seen.emplace(d, cat.classes_with_dim(d)).first;
            for (const Mult& L : it->second) {
                HallTensor dl = hall_comul(hall_basis(cat, L));
                QScalar c = dl.coeff(m, n);
                if (!c.is_zero()) r.add_term(L, cm * cn * c);
            }
        }
    return r;
}

// ---------------------------------------------------------------------------
// Triangular expansion
// ---------------------------------------------------------------------------

struct TriangularExpansion {
    QScalar h;                                  // h_w(v(M))
    std::vector<std::pair<Mult, QScalar>> terms; // normalized, sorted by <=_e
    bool leading_ok = false;                    // leading class M with coefficient 1
};

/// Phi o T_w applied to the dual monomial of the generated vector of M,
/// normalized by h_w and ordered by the partition's enumeration.
inline TriangularExpansion triangular_expand(const MapContext& ctx, const Mult& m) {
    RepCategory& cat = *ctx.cat;
    std::vector<int> gv = generated_vector(cat.ar(), ctx.parts, m);
    if (gv.size() != ctx.pctx.len())
        throw context_mismatch("triangular_expand: word does not match the partition");
    QPolyElement ta = qp_basis(ctx.pctx, gv, true);
    HallElement image = phi_T_w(ctx, ta);
    TriangularExpansion out;
    out.h = h_w(ctx.pctx, gv);
    HallElement normalized = out.h.inverse() * image;
    for (const auto& [L, c] : normalized.terms) out.terms.emplace_back(L, c);
    std::sort(out.terms.begin(), out.terms.end(),
              [&](const auto& a, const auto& b) {
                  return order_compare(ctx.order, a.first, b.first) < 0;
              });
    out.leading_ok = !out.terms.empty() && out.terms.front().first == m &&
                     out.terms.front().second == QScalar::one(cat.q());
    if (!out.leading_ok)
        throw validation_error("triangular_expand: leading term is not [M] (order violation)");
    return out;
}

// ---------------------------------------------------------------------------
// Composition / adjointness report
// ---------------------------------------------------------------------------

struct CompositionReport {
    long checked = 0;
    std::vector<std::string> violations;
};

inline std::string class_debug_name(const Mult& m) {
    std::string s = "[";
    for (size_t k = 0; k < m.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(m[k]);
    }
    return s + "]";
}

/// For every isoclass M of total dimension <= cap:
///  (a) int_w(delta_M) = S_w(Omega(delta_M));
///  (b) coefficient of t^a in int_w(delta_M) equals <delta_M, Phi T_w(t_a)>;
///  (c) coefficient of y_u in Omega(delta_M) equals <delta_M, Phi(x_u)>.
inline CompositionReport verify_compositions(const MapContext& ctx, int cap) {
    RepCategory& cat = *ctx.cat;
    CompositionReport rep;
    IntVec d = IntVec::Zero(cat.rd().n);
    auto locate = [&](const Mult& m) { return class_debug_name(m); };
    auto per_class = [&](const Mult& m) {
        HallElement dm = hall_basis(cat, m, true);
        QPolyElement lhs = map_int_w(ctx, dm);
        ShuffleElement om = map_omega(ctx, dm);
        QPolyElement rhs = map_S_w(om, ctx.pctx);
        ++rep.checked;
        if (!(lhs == rhs))
            rep.violations.push_back("int_w != S_w o Omega at M = " + locate(m));
        for (const Expo& a : exponents_with_weight(ctx.pctx, cat.dim_of(m))) {
            QScalar via_adj = phi_T_w(ctx, qp_basis(ctx.pctx, a, true)).coeff(m);
            ++rep.checked;
            if (!(lhs.coeff(a) == via_adj))
                rep.violations.push_back("adjointness of int_w fails at M = " + locate(m));
        }
        for (const FWord& u : words_with_weight(cat.rd(), cat.dim_of(m))) {
            QScalar via_phi = phi_map(cat, free_basis(ctx.wctx, u)).coeff(m);
            ++rep.checked;
            if (!(om.coeff(u) == via_phi))
                rep.violations.push_back("Omega pairing fails at M = " + locate(m));
        }
    };
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i == cat.rd().n) {
            for (const Mult& m : cat.classes_with_dim(d)) per_class(m);
            return;
        }
        for (int t = 0; t <= remaining; ++t) {
            d[i] = t;
            self(self, i + 1, remaining - t);
        }
        d[i] = 0;
    };
    rec(rec, 0, cap);
    return rep;
}

} // namespace qhall
