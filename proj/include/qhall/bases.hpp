/**
 * @file bases.hpp
 * @brief Monomial bases E^{(M)} with unitriangular Hall expansion, and the
 *        characterization sets S(M, D_*).
 */
#pragma once

#include "qhall/maps.hpp"

namespace qhall {

/// E_i^{[a]} = [S_i]^{* a} / [a]_i! = v_i^{a^2 - a} [S_i^a].
inline HallElement hall_divided_power(RepCategory& cat, int vertex, int a) {
    const int f = cat.rd().f[vertex];
    QScalar c = cat.vq(static_cast<long>(f) * a * (a - 1));
    HallElement r = hall_zero(cat);
    r.add_term(cat.simple_power(vertex, a), c);
    return r;
}

/// E^{[a]} = E_1^{[a_1]} ... E_n^{[a_n]}, with the closed form
/// prod_i v_i^{-a_i} sum_{dim M = a} v^{<|M|,|M|>} [M] asserted against it.
inline HallElement divided_power_monomial(RepCategory& cat, const IntVec& a) {
    HallElement prod = hall_unit(cat);
    for (int i = 0; i < cat.rd().n; ++i)
        prod = hall_mul(prod, hall_divided_power(cat, i, a[i]));

    HallElement closed = hall_zero(cat);
    long pref = 0;
    for (int i = 0; i < cat.rd().n; ++i) pref -= static_cast<long>(cat.rd().f[i]) * a[i];
    for (const Mult& m : cat.classes_with_dim(a)) {
        IntVec d = cat.dim_of(m);
        closed.add_term(m, cat.vq(pref + cat.rd().euler(d, d)));
    }
    if (!(prod == closed))
        throw validation_error("divided_power_monomial: closed form disagrees with the product");
    return prod;
}

/// Dimension vectors of the parts M_(k) of the class m under the partition.
inline std::vector<IntVec> part_dims(RepCategory& cat, const DirectedPartition& parts,
                                     const Mult& m) {
    std::vector<IntVec> out;
    for (const auto& part : parts) {
        IntVec d = IntVec::Zero(cat.rd().n);
        for (int idx : part)
            d += m[static_cast<size_t>(idx)] * cat.ar().canonical_order()[static_cast<size_t>(idx)];
        out.push_back(d);
    }
    return out;
}

struct MonomialExpansion {
    HallElement element;                          // E^{(M)}
    std::vector<std::pair<Mult, QScalar>> gamma;  // coefficients, sorted by <=_e
    bool unitriangular = false;
};

/// E^{(M)} = v^{-dim Hom(M,M)} prod_i v_i^{m_i} E^{[dim M_(1)]} ... E^{[dim M_(s)]}.
/// Checks gamma_M^M = 1, support in {L : M <=_e L}, and the filtration-sum
/// identity E^{(M)} = sum_{dim N_k = dim M_(k)} sum_L F^L_{N_1..N_s} [L].
inline MonomialExpansion monomial_for_module(const MapContext& ctx, const Mult& m) {
    RepCategory& cat = *ctx.cat;
    MonomialExpansion out;
    IntVec dim = cat.dim_of(m);
    long pref = -cat.hom_classes(m, m);
    for (int i = 0; i < cat.rd().n; ++i) pref += static_cast<long>(cat.rd().f[i]) * dim[i];

    HallElement e = hall_unit(cat);
    auto dims = part_dims(cat, ctx.parts, m);
    for (const IntVec& d : dims) e = hall_mul(e, divided_power_monomial(cat, d));
    out.element = cat.vq(pref) * e;

    // Independent route: iterated filtration numbers over per-part classes.
    HallElement viaF = hall_zero(cat);
    std::vector<std::vector<Mult>> choices;
    for (const IntVec& d : dims) choices.push_back(cat.classes_with_dim(d));
    for (const Mult& L : cat.classes_with_dim(dim)) {
        long long total = 0;
        std::vector<Mult> pick(choices.size());
        auto rec = [&](auto&& self, size_t k) -> void {
            if (k == choices.size()) {
                total += cat.filtration_count(L, pick);
                return;
            }
            for (const Mult& n : choices[k]) {
                pick[k] = n;
                self(self, k + 1);
            }
        };
        rec(rec, 0);
        if (total != 0) viaF.add_term(L, QScalar::integer(total, cat.q()));
    }
    if (!(out.element == viaF))
        throw validation_error("monomial_for_module: filtration-sum identity fails");

    for (const auto& [L, c] : out.element.terms) out.gamma.emplace_back(L, c);
    std::sort(out.gamma.begin(), out.gamma.end(), [&](const auto& a, const auto& b) {
        return order_compare(ctx.order, a.first, b.first) < 0;
    });
    out.unitriangular = true;
    for (const auto& [L, c] : out.gamma) {
        int cmp = order_compare(ctx.order, m, L);
        if (cmp > 0) out.unitriangular = false;          // some L strictly below M
        if (cmp == 0 && !(c == QScalar::one(cat.q()))) out.unitriangular = false;
    }
    if (out.gamma.empty() || !(out.gamma.front().first == m)) out.unitriangular = false;
    if (!out.unitriangular)
        throw validation_error("monomial_for_module: expansion is not unitriangular");
    return out;
}

/// S(M, D_*) = { a : F^M_{S_{i_1}^{a_1}, ...} != 0 } along the partition word.
inline std::vector<Expo> characterization_set(const MapContext& ctx, const Mult& m) {
    RepCategory& cat = *ctx.cat;
    std::vector<Expo> out;
    for (const Expo& a : exponents_with_weight(ctx.pctx, cat.dim_of(m)))
        if (cat.filtration_semisimple(m, ctx.pctx.w, a) != 0) out.push_back(a);
    return out;
}

} // namespace qhall
