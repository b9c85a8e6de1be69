/**
 * @file rep.hpp
 * @brief Concrete species representations over F_q.
 *
 * A representation stores per-vertex F_i-dimensions m_i and one flat
 * F_q-matrix per arrow (the bimodule map evaluated at 1).  Morphism spaces
 * are kernels of explicit F_q-linear systems; indecomposables are built by
 * BGP source reflections applied to simples along the admissible vertex
 * sequence n, n-1, ..., 1 (cyclically).
 */
#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "qhall/species.hpp"

namespace qhall {

struct QuiverShape {
    std::vector<std::pair<int, int>> arrows;
};

inline QuiverShape base_shape(const RootDatum& rd) { return {rd.arrows}; }

struct ConcreteRep {
    const SpeciesContext* sp = nullptr;
    QuiverShape shape;
    IntVec m;
    std::vector<GFMat> theta; // per arrow, (f_j m_j) x (f_i m_i) over F_q

    int n_flat(int i) const { return sp->vertex_field(i).f * m[i]; }
    int total_fq_dim() const {
        int t = 0;
        for (int i = 0; i < m.size(); ++i) t += n_flat(i);
        return t;
    }
    bool is_zero() const { return m.maxCoeff() == 0; }
};

inline ConcreteRep zero_rep(const SpeciesContext& sp, const QuiverShape& shape) {
    ConcreteRep r;
    r.sp = &sp;
    r.shape = shape;
    r.m = IntVec::Zero(sp.rd().n);
    for (size_t a = 0; a < shape.arrows.size(); ++a) r.theta.push_back(gf_zeros(0, 0, sp.amb()));
    return r;
}

inline ConcreteRep simple_rep(const SpeciesContext& sp, const QuiverShape& shape, int k) {
    ConcreteRep r = zero_rep(sp, shape);
    r.m[k] = 1;
    for (size_t a = 0; a < shape.arrows.size(); ++a) {
        auto [i, j] = shape.arrows[a];
        r.theta[a] = gf_zeros(r.n_flat(j), r.n_flat(i), sp.amb());
    }
    return r;
}

inline ConcreteRep direct_sum(const ConcreteRep& x, const ConcreteRep& y) {
    if (x.sp != y.sp || x.shape.arrows != y.shape.arrows)
        throw context_mismatch("direct_sum: mismatched representation contexts");
    ConcreteRep r;
    r.sp = x.sp;
    r.shape = x.shape;
    r.m = x.m + y.m;
    for (size_t a = 0; a < x.theta.size(); ++a) {
        auto [i, j] = r.shape.arrows[a];
        const SpeciesContext& sp = *r.sp;
        int fi = sp.vertex_field(i).f, fj = sp.vertex_field(j).f;
        GFMat t = gf_zeros(fj * r.m[j], fi * r.m[i], sp.amb());
        // Vertex coordinates of x come first, then y's.
        t.block(0, 0, x.theta[a].rows(), x.theta[a].cols()) = x.theta[a];
        t.block(x.theta[a].rows(), x.theta[a].cols(), y.theta[a].rows(), y.theta[a].cols()) =
            y.theta[a];
        r.theta.push_back(std::move(t));
    }
    return r;
}

/// Multiplication-by-xi_i operator on the flat coordinates of V_i.
inline GFMat vertex_structure_op(const ConcreteRep& v, int i) {
    const auto& W = v.sp->vertex_field(i);
    return v.sp->vertex_mult_op(W, v.m[i], W.xi);
}

/// The operator A(m) = phi(- (x) m): V_i -> V_j for arrow a: i -> j and m in F_L,
/// recovered from Theta by expanding m in the products xi_i^k xi_j^t.
inline GFMat arrow_action(const ConcreteRep& v, size_t a, const SpeciesContext::ArrowData& ad,
                          GFEl mel) {
    const SpeciesContext& sp = *v.sp;
    auto [i, j] = v.shape.arrows[a];
    const auto& Fi = sp.vertex_field(i);
    const auto& Fj = sp.vertex_field(j);
    const auto& FL = sp.field_of_degree(ad.L);
    auto mc = sp.coords(FL, mel);
    GFMat out = gf_zeros(v.n_flat(j), v.n_flat(i), sp.amb());
    // Cache xi-power multiplication operators per call; sizes are tiny.
    std::vector<GFMat> xi_pows, xj_pows;
    GFMat cur = gf_identity(v.n_flat(i), sp.amb());
    for (int k = 0; k < Fi.f; ++k) {
        xi_pows.push_back(cur);
        if (k + 1 < Fi.f) cur = sp.vertex_mult_op(Fi, v.m[i], Fi.xi) * cur;
    }
    cur = gf_identity(v.n_flat(j), sp.amb());
    for (int t = 0; t < Fj.f; ++t) {
        xj_pows.push_back(cur);
        if (t + 1 < Fj.f) cur = sp.vertex_mult_op(Fj, v.m[j], Fj.xi) * cur;
    }
    for (int s = 0; s < ad.L; ++s) {
        if (mc[static_cast<size_t>(s)].is_zero()) continue;
        for (int k = 0; k < Fi.f; ++k)
            for (int t = 0; t < Fj.f; ++t) {
                GFEl c = mc[static_cast<size_t>(s)] * ad.zeta_coeff[static_cast<size_t>(s)]
                                                                   [static_cast<size_t>(k * Fj.f + t)];
                if (c.is_zero()) continue;
                GFMat term = xj_pows[static_cast<size_t>(t)] * v.theta[a] *
                             xi_pows[static_cast<size_t>(k)];
                for (Eigen::Index rr = 0; rr < out.rows(); ++rr)
                    for (Eigen::Index cc = 0; cc < out.cols(); ++cc)
                        out(rr, cc) += c * term(rr, cc);
            }
    }
    return out;
}

/// Check the minimal-polynomial constraint that makes Theta a species map.
inline bool arrow_constraint_ok(const ConcreteRep& v) {
    const SpeciesContext& sp = *v.sp;
    for (size_t a = 0; a < v.shape.arrows.size(); ++a) {
        auto [i, j] = v.shape.arrows[a];
        auto ad = sp.edge_data(i, j);
        const auto& Fi = sp.vertex_field(i);
        const auto& Fj = sp.vertex_field(j);
        GFMat xi = sp.vertex_mult_op(Fi, v.m[i], Fi.xi);
        GFMat acc = gf_zeros(v.n_flat(j), v.n_flat(i), sp.amb());
        GFMat xik = gf_identity(v.n_flat(i), sp.amb());
        for (size_t k = 0; k < ad.mu.size(); ++k) {
            GFMat term = sp.vertex_mult_op(Fj, v.m[j], ad.mu[k]) * v.theta[a] * xik;
            for (Eigen::Index rr = 0; rr < acc.rows(); ++rr)
                for (Eigen::Index cc = 0; cc < acc.cols(); ++cc) acc(rr, cc) += term(rr, cc);
            if (k + 1 < ad.mu.size()) xik = xi * xik;
        }
        for (Eigen::Index rr = 0; rr < acc.rows(); ++rr)
            for (Eigen::Index cc = 0; cc < acc.cols(); ++cc)
                if (!acc(rr, cc).is_zero()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Morphism spaces
// ---------------------------------------------------------------------------

/// Basis of Hom(v, w): each morphism is one flat matrix per vertex.
inline std::vector<std::vector<GFMat>> hom_basis(const ConcreteRep& v, const ConcreteRep& w) {
    if (v.sp != w.sp || v.shape.arrows != w.shape.arrows)
        throw context_mismatch("hom: mismatched representation contexts");
    const SpeciesContext& sp = *v.sp;
    const int n = sp.rd().n;
    std::vector<int> offset(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i)
        offset[static_cast<size_t>(i) + 1] = offset[static_cast<size_t>(i)] + w.n_flat(i) * v.n_flat(i);
    const int nvars = offset[static_cast<size_t>(n)];
    if (nvars == 0) return {};

    auto var = [&](int i, Eigen::Index r, Eigen::Index c) {
        return offset[static_cast<size_t>(i)] + static_cast<int>(r) * v.n_flat(i) +
               static_cast<int>(c);
    };

    std::vector<Eigen::Index> rows;
    // Count equations: one block per vertex (F_i-linearity), one per arrow.
    Eigen::Index neq = 0;
    for (int i = 0; i < n; ++i) neq += static_cast<Eigen::Index>(w.n_flat(i)) * v.n_flat(i);
    for (auto [i, j] : v.shape.arrows) neq += static_cast<Eigen::Index>(w.n_flat(j)) * v.n_flat(i);

    GFMat sys = gf_zeros(neq, nvars, sp.amb());
    Eigen::Index eq = 0;
    // f_i X_i^v = X_i^w f_i
    for (int i = 0; i < n; ++i) {
        GFMat xv = vertex_structure_op(v, i), xw = vertex_structure_op(w, i);
        for (Eigen::Index r = 0; r < w.n_flat(i); ++r)
            for (Eigen::Index c = 0; c < v.n_flat(i); ++c) {
                for (Eigen::Index t = 0; t < v.n_flat(i); ++t)
                    sys(eq, var(i, r, t)) += xv(t, c);
                for (Eigen::Index t = 0; t < w.n_flat(i); ++t)
                    sys(eq, var(i, t, c)) -= xw(r, t);
                ++eq;
            }
    }
    // Theta^w f_i = f_j Theta^v
    for (size_t a = 0; a < v.shape.arrows.size(); ++a) {
        auto [i, j] = v.shape.arrows[a];
        for (Eigen::Index r = 0; r < w.n_flat(j); ++r)
            for (Eigen::Index c = 0; c < v.n_flat(i); ++c) {
                for (Eigen::Index t = 0; t < w.n_flat(i); ++t)
                    sys(eq, var(i, t, c)) += w.theta[a](r, t);
                for (Eigen::Index t = 0; t < v.n_flat(j); ++t)
                    sys(eq, var(j, r, t)) -= v.theta[a](t, c);
                ++eq;
            }
    }

    GFMat K = gf_kernel(std::move(sys), sp.amb());
    std::vector<std::vector<GFMat>> basis;
    for (Eigen::Index col = 0; col < K.cols(); ++col) {
        std::vector<GFMat> f;
        for (int i = 0; i < n; ++i) {
            GFMat fi = gf_zeros(w.n_flat(i), v.n_flat(i), sp.amb());
            for (Eigen::Index r = 0; r < w.n_flat(i); ++r)
                for (Eigen::Index c = 0; c < v.n_flat(i); ++c) fi(r, c) = K(var(i, r, c), col);
            f.push_back(std::move(fi));
        }
        basis.push_back(std::move(f));
    }
    return basis;
}

inline int hom_dim(const ConcreteRep& v, const ConcreteRep& w) {
    return static_cast<int>(hom_basis(v, w).size());
}

/// dim Ext^1(v, w) as the cokernel of Hom_0(v,w) -> C(v,w) from the standard
/// projective resolution of a hereditary species; independent of the Euler
/// matrix, so it cross-checks the hom solver against the root datum.
inline long ext_dim_resolution(const ConcreteRep& v, const ConcreteRep& w) {
    const SpeciesContext& sp = *v.sp;
    long dimC = 0, dimH0 = 0;
    for (size_t a = 0; a < v.shape.arrows.size(); ++a) {
        auto [i, j] = v.shape.arrows[a];
        dimC += static_cast<long>(v.m[i]) * w.m[j] * sp.edge_data(i, j).L;
    }
    for (int i = 0; i < sp.rd().n; ++i)
        dimH0 += static_cast<long>(sp.vertex_field(i).f) * v.m[i] * w.m[i];
    return dimC - dimH0 + hom_dim(v, w);
}

// ---------------------------------------------------------------------------
// Structured bases (F-stable subspaces with canonical coordinates)
// ---------------------------------------------------------------------------

/// Greedy F-structured basis of span(cands) modulo span(mod).  R is the
/// multiplication-by-generator operator, f the field degree; both spans must
/// be R-stable.  Returned columns are grouped (w, Rw, ..., R^{f-1}w) so the
/// induced generator action has canonical companion form.
inline GFMat structured_basis(const GFMat& cands, const GFMat& mod, const GFMat& R, int f,
                              const GFTable* A) {
    const Eigen::Index D = R.rows();
    GFMat span = gf_zeros(D, 0, A);
    if (mod.cols() > 0) span = mod;
    GFMat out = gf_zeros(D, 0, A);
    for (Eigen::Index c = 0; c < cands.cols(); ++c) {
        GFVec w = cands.col(c);
        if (span.cols() > 0 && gf_in_span(span, w, A)) continue;
        if (span.cols() == 0) {
            bool allzero = true;
            for (Eigen::Index r = 0; r < D; ++r)
                if (!w(r).is_zero()) { allzero = false; break; }
            if (allzero) continue;
        }
        GFVec t = w;
        for (int s = 0; s < f; ++s) {
            span.conservativeResize(Eigen::NoChange, span.cols() + 1);
            span.col(span.cols() - 1) = t;
            out.conservativeResize(Eigen::NoChange, out.cols() + 1);
            out.col(out.cols() - 1) = t;
            if (s + 1 < f) t = R * t;
        }
    }
    return out;
}

/// Structured complement of span(sub) inside the full space.
inline GFMat structured_complement(const GFMat& sub, const GFMat& R, int f, const GFTable* A) {
    const Eigen::Index D = R.rows();
    GFMat cands = gf_identity(D, A);
    return structured_basis(cands, sub, R, f, A);
}

// ---------------------------------------------------------------------------
// Sub- and quotient representations
// ---------------------------------------------------------------------------

/// Structured flat bases, one per vertex (each with a multiple of f_i columns).
using SubspaceTuple = std::vector<GFMat>;

/// Is the subspace tuple closed under all arrow maps?
inline bool subrep_closed(const ConcreteRep& v, const SubspaceTuple& bases) {
    const SpeciesContext& sp = *v.sp;
    for (size_t a = 0; a < v.shape.arrows.size(); ++a) {
        auto [i, j] = v.shape.arrows[a];
        if (bases[static_cast<size_t>(i)].cols() == 0) continue;
        GFMat image = v.theta[a] * bases[static_cast<size_t>(i)];
        if (!gf_solve(bases[static_cast<size_t>(j)], image, sp.amb()))
            return false;
    }
    return true;
}

inline ConcreteRep sub_rep(const ConcreteRep& v, const SubspaceTuple& bases) {
    const SpeciesContext& sp = *v.sp;
    ConcreteRep r;
    r.sp = v.sp;
    r.shape = v.shape;
    r.m = IntVec::Zero(sp.rd().n);
    for (int i = 0; i < sp.rd().n; ++i)
        r.m[i] = static_cast<int>(bases[static_cast<size_t>(i)].cols()) / sp.vertex_field(i).f;
    for (size_t a = 0; a < v.shape.arrows.size(); ++a) {
        auto [i, j] = v.shape.arrows[a];
        auto sol = gf_solve(bases[static_cast<size_t>(j)],
                            GFMat(v.theta[a] * bases[static_cast<size_t>(i)]), sp.amb());
        if (!sol) throw validation_error("sub_rep: subspace tuple is not arrow-closed");
        r.theta.push_back(std::move(*sol));
    }
    return r;
}

inline ConcreteRep quotient_rep(const ConcreteRep& v, const SubspaceTuple& bases) {
    const SpeciesContext& sp = *v.sp;
    ConcreteRep r;
    r.sp = v.sp;
    r.shape = v.shape;
    r.m = IntVec::Zero(sp.rd().n);
    std::vector<GFMat> comp(static_cast<size_t>(sp.rd().n));
    for (int i = 0; i < sp.rd().n; ++i) {
        const int f = sp.vertex_field(i).f;
        comp[static_cast<size_t>(i)] =
            structured_complement(bases[static_cast<size_t>(i)], vertex_structure_op(v, i), f,
                                  sp.amb());
        r.m[i] = static_cast<int>(comp[static_cast<size_t>(i)].cols()) / f;
    }
    for (size_t a = 0; a < v.shape.arrows.size(); ++a) {
        auto [i, j] = v.shape.arrows[a];
        const GFMat& Bi = comp[static_cast<size_t>(i)];
        GFMat full = gf_zeros(v.n_flat(j),
                              bases[static_cast<size_t>(j)].cols() + comp[static_cast<size_t>(j)].cols(),
                              sp.amb());
        if (bases[static_cast<size_t>(j)].cols() > 0)
            full.block(0, 0, v.n_flat(j), bases[static_cast<size_t>(j)].cols()) =
                bases[static_cast<size_t>(j)];
        if (comp[static_cast<size_t>(j)].cols() > 0)
            full.block(0, bases[static_cast<size_t>(j)].cols(), v.n_flat(j),
                       comp[static_cast<size_t>(j)].cols()) = comp[static_cast<size_t>(j)];
        auto sol = gf_solve(full, GFMat(v.theta[a] * Bi), sp.amb());
        if (!sol) throw validation_error("quotient_rep: inconsistent quotient system");
        GFMat t = gf_zeros(r.n_flat(j), r.n_flat(i), sp.amb());
        if (t.rows() > 0 && t.cols() > 0)
            t = sol->block(bases[static_cast<size_t>(j)].cols(), 0, r.n_flat(j), r.n_flat(i));
        r.theta.push_back(std::move(t));
    }
    return r;
}

// ---------------------------------------------------------------------------
// BGP reflection at a source, and indecomposables by reflection walks
// ---------------------------------------------------------------------------

namespace repdetail {

/// F_j-basis {zeta^t} of F_L and its trace-dual over F_j.
inline std::pair<std::vector<GFEl>, std::vector<GFEl>> relative_dual_basis(
    const SpeciesContext& sp, const SpeciesContext::Field& FL, const SpeciesContext::Field& Fj) {
    const int d = FL.f / Fj.f;
    std::vector<GFEl> basis;
    for (int t = 0; t < d; ++t) {
        GFEl x = sp.one();
        for (int s = 0; s < t; ++s) x *= FL.xi;
        basis.push_back(x);
    }
    GFMat gram = gf_zeros(d, d, sp.amb());
    for (int s = 0; s < d; ++s)
        for (int t = 0; t < d; ++t)
            gram(s, t) = sp.el(sp.amb()->trace((basis[static_cast<size_t>(s)] *
                                                basis[static_cast<size_t>(t)]).v,
                                               sp.e() * FL.f, sp.e() * Fj.f));
    auto inv = gf_solve(gram, gf_identity(d, sp.amb()), sp.amb());
    if (!inv) throw validation_error("species: degenerate relative trace form");
    std::vector<GFEl> dual;
    for (int s = 0; s < d; ++s) {
        GFEl x = sp.zero();
        for (int t = 0; t < d; ++t) x += (*inv)(t, s) * basis[static_cast<size_t>(t)];
        dual.push_back(x);
    }
    return {basis, dual};
}

/// y (x) lambda in V_j (x)_{F_j} F_L, flat coordinates (r', s') -> r'*L + s'.
inline GFVec tensor_up(const SpeciesContext& sp, int j, const SpeciesContext::Field& FL,
                       int mj, const GFVec& y, GFEl lambda) {
    const auto& Fj = sp.vertex_field(j);
    GFVec out = gf_zeros(static_cast<Eigen::Index>(mj) * FL.f, 1, sp.amb()).col(0);
    for (int r = 0; r < mj; ++r) {
        GFEl z = sp.zero();
        for (int u = 0; u < Fj.f; ++u)
            z += y(r * Fj.f + u) * Fj.basis[static_cast<size_t>(u)];
        z *= lambda;
        auto c = sp.coords(FL, z);
        for (int s = 0; s < FL.f; ++s) out(r * FL.f + s) = c[static_cast<size_t>(s)];
    }
    return out;
}

} // namespace repdetail

inline QuiverShape flip_at(const QuiverShape& shape, int k) {
    QuiverShape s = shape;
    for (auto& [i, j] : s.arrows)
        if (i == k || j == k) std::swap(i, j);
    return s;
}

/// BGP reflection functor at a source k (all incident arrows leave k).
inline ConcreteRep reflect_source(const ConcreteRep& v, int k) {
    const SpeciesContext& sp = *v.sp;
    std::vector<size_t> out_arrows;
    for (size_t a = 0; a < v.shape.arrows.size(); ++a) {
        auto [i, j] = v.shape.arrows[a];
        if (j == k) throw validation_error("reflect_source: vertex is not a source");
        if (i == k) out_arrows.push_back(a);
    }
    const auto& Fk = sp.vertex_field(k);

    // Target space of Gamma: stacked V_j (x)_{F_j} (kMj)^*, one block per arrow.
    struct Block {
        size_t a;
        int j;
        SpeciesContext::ArrowData ad;
        const SpeciesContext::Field* FL;
        Eigen::Index offset, dim;
    };
    std::vector<Block> blocks;
    Eigen::Index target_dim = 0;
    for (size_t a : out_arrows) {
        auto [i, j] = v.shape.arrows[a];
        Block b;
        b.a = a;
        b.j = j;
        b.ad = sp.edge_data(k, j);
        b.FL = &sp.field_of_degree(b.ad.L);
        b.offset = target_dim;
        b.dim = static_cast<Eigen::Index>(v.m[j]) * b.ad.L;
        target_dim += b.dim;
        blocks.push_back(std::move(b));
    }

    // Gamma(v) = sum_s phi(v (x) b_s) (x) b*_s, per block.
    GFMat gamma = gf_zeros(target_dim, v.n_flat(k), sp.amb());
    for (const Block& b : blocks) {
        auto [bas, dual] = repdetail::relative_dual_basis(sp, *b.FL, sp.vertex_field(b.j));
        for (size_t s = 0; s < bas.size(); ++s) {
            GFMat As = arrow_action(v, b.a, b.ad, bas[s]);
            for (Eigen::Index c = 0; c < v.n_flat(k); ++c) {
                GFVec y = As.col(c);
                GFVec t = repdetail::tensor_up(sp, b.j, *b.FL, v.m[b.j], y, dual[s]);
                for (Eigen::Index r = 0; r < b.dim; ++r)
                    gamma(b.offset + r, c) += t(r);
            }
        }
    }

    // Right multiplication by xi_k on the stacked target.
    GFMat R = gf_zeros(target_dim, target_dim, sp.amb());
    for (const Block& b : blocks) {
        GFMat small = sp.mult_matrix(*b.FL, Fk.xi);
        for (int r = 0; r < v.m[b.j]; ++r)
            R.block(b.offset + static_cast<Eigen::Index>(r) * b.ad.L,
                    b.offset + static_cast<Eigen::Index>(r) * b.ad.L, b.ad.L, b.ad.L) = small;
    }

    GFMat C = structured_complement(gamma, R, Fk.f, sp.amb());

    ConcreteRep r;
    r.sp = v.sp;
    r.shape = flip_at(v.shape, k);
    r.m = v.m;
    r.m[k] = static_cast<int>(C.cols()) / Fk.f;
    r.theta = v.theta;

    // Combined solve matrix [gamma | C] for quotient coordinates.
    GFMat full = gf_zeros(target_dim, gamma.cols() + C.cols(), sp.amb());
    if (gamma.cols() > 0) full.block(0, 0, target_dim, gamma.cols()) = gamma;
    if (C.cols() > 0) full.block(0, gamma.cols(), target_dim, C.cols()) = C;

    for (const Block& b : blocks) {
        // New arrow j -> k: v |-> class of iota(v (x) 1).
        GFMat t = gf_zeros(r.n_flat(k), v.n_flat(b.j), sp.amb());
        for (Eigen::Index c = 0; c < v.n_flat(b.j); ++c) {
            GFVec unit = gf_zeros(v.n_flat(b.j), 1, sp.amb()).col(0);
            unit(c) = sp.one();
            GFVec up = repdetail::tensor_up(sp, b.j, *b.FL, v.m[b.j], unit, sp.one());
            GFVec amb = gf_zeros(target_dim, 1, sp.amb()).col(0);
            for (Eigen::Index rr = 0; rr < b.dim; ++rr) amb(b.offset + rr) = up(rr);
            auto sol = gf_solve(full, GFMat(amb), sp.amb());
            if (!sol) throw validation_error("reflect_source: vector escapes [image | complement]");
            for (Eigen::Index rr = 0; rr < r.n_flat(k); ++rr)
                t(rr, c) = (*sol)(gamma.cols() + rr, 0);
        }
        r.theta[b.a] = std::move(t);
    }
    return r;
}

/// Indecomposable with the given positive-root dimension vector, built by
/// reflecting a simple back along the admissible sink sequence.
inline ConcreteRep build_root_rep(const SpeciesContext& sp, const IntVec& beta) {
    const RootDatum& rd = sp.rd();
    const int n = rd.n;
    QuiverShape shape = base_shape(rd);
    IntVec cur = beta;
    std::vector<std::pair<int, QuiverShape>> trail; // (vertex reflected at, shape before)

    auto is_simple = [&](const IntVec& d) {
        return d.sum() == 1 && d.maxCoeff() == 1;
    };

    int steps = 0;
    const int max_steps = 20 * (rd.nu() + 1) * n;
    int k = n - 1;
    while (!is_simple(cur)) {
        if (++steps > max_steps)
            throw validation_error("build_root_rep: reflection walk did not terminate");
        IntVec next = rd.reflect(k, cur);
        if ((next.array() < 0).any())
            throw validation_error("build_root_rep: reflection left the positive cone");
        trail.emplace_back(k, shape);
        shape = flip_at(shape, k);
        cur = next;
        k = (k == 0) ? n - 1 : k - 1;
    }

    int simple_vertex = 0;
    for (int i = 0; i < n; ++i)
        if (cur[i] == 1) simple_vertex = i;
    ConcreteRep rep = simple_rep(sp, shape, simple_vertex);
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
        rep = reflect_source(rep, it->first);
        if (rep.shape.arrows != it->second.arrows)
            throw validation_error("build_root_rep: shape bookkeeping error");
    }
    if (rep.m != beta) throw validation_error("build_root_rep: dimension vector mismatch");
    if (!arrow_constraint_ok(rep))
        throw validation_error("build_root_rep: species constraint violated");
    return rep;
}

// ---------------------------------------------------------------------------
// Endomorphism rings
// ---------------------------------------------------------------------------

/// Visit every F_q-combination of the given endomorphism basis.
template <class Fn>
inline void for_each_combination(const SpeciesContext& sp,
                                 const std::vector<std::vector<GFMat>>& basis, Fn&& fn) {
    const auto& elems = sp.base_elements();
    const int n = sp.rd().n;
    std::vector<GFMat> current;
    if (basis.empty()) return;
    for (int i = 0; i < n; ++i)
        current.push_back(gf_zeros(basis[0][static_cast<size_t>(i)].rows(),
                                   basis[0][static_cast<size_t>(i)].cols(), sp.amb()));
    auto rec = [&](auto&& self, size_t level) -> void {
        if (level == basis.size()) {
            fn(current);
            return;
        }
        for (const GFEl& c : elems) {
            std::vector<GFMat> saved;
            if (!c.is_zero()) {
                saved = current;
                for (int i = 0; i < n; ++i) {
                    const GFMat& b = basis[level][static_cast<size_t>(i)];
                    for (Eigen::Index r = 0; r < b.rows(); ++r)
                        for (Eigen::Index cc = 0; cc < b.cols(); ++cc)
                            current[static_cast<size_t>(i)](r, cc) += c * b(r, cc);
                }
            }
            self(self, level + 1);
            if (!c.is_zero()) current = std::move(saved);
        }
    };
    rec(rec, 0);
}

inline bool endo_invertible(const std::vector<GFMat>& f) {
    for (const GFMat& fi : f)
        if (!gf_invertible(fi)) return false;
    return true;
}

inline bool endo_nilpotent(const std::vector<GFMat>& f) {
    for (const GFMat& fi : f) {
        if (fi.rows() == 0) continue;
        GFMat p = fi;
        for (Eigen::Index k = 1; k < fi.rows(); ++k) p = GFMat(p * fi);
        for (Eigen::Index r = 0; r < p.rows(); ++r)
            for (Eigen::Index c = 0; c < p.cols(); ++c)
                if (!p(r, c).is_zero()) return false;
    }
    return true;
}

/// Local endomorphism ring: every endomorphism invertible or nilpotent.
inline bool has_local_endo_ring(const ConcreteRep& v) {
    auto basis = hom_basis(v, v);
    bool local = true;
    for_each_combination(*v.sp, basis, [&](const std::vector<GFMat>& f) {
        if (!local) return;
        if (!endo_invertible(f) && !endo_nilpotent(f)) local = false;
    });
    return local;
}

/// |Aut(v)| by enumerating the endomorphism space (guarded).
inline long long aut_size(const ConcreteRep& v, int end_dim_guard = 16) {
    auto basis = hom_basis(v, v);
    if (static_cast<int>(basis.size()) > end_dim_guard)
        throw guard_exceeded("aut_size: dim End = " + std::to_string(basis.size()) +
                             " exceeds guard " + std::to_string(end_dim_guard));
    if (v.is_zero()) return 1;
    long long count = 0;
    for_each_combination(*v.sp, basis, [&](const std::vector<GFMat>& f) {
        if (endo_invertible(f)) ++count;
    });
    return count;
}

} // namespace qhall
