/**
 * @file subrep.hpp
 * @brief Exhaustive subrepresentation enumeration.
 *
 * Per-vertex F_i-subspaces are enumerated exactly once each through reduced
 * row echelon canonical forms over the vertex field; a tuple of subspaces is
 * a subrepresentation iff it is closed under every arrow matrix.
 */
#pragma once

#include <functional>

#include "qhall/rep.hpp"

namespace qhall {

/// All elements of the given subfield, deterministic order (0 first).
inline std::vector<GFEl> field_elements(const SpeciesContext& sp,
                                        const SpeciesContext::Field& W) {
    std::vector<GFEl> out{sp.zero()};
    uint64_t n = 1;
    for (int s = 0; s < W.f; ++s) n *= sp.q();
    GFEl x = sp.one();
    for (uint64_t k = 0; k + 1 < n; ++k) {
        out.push_back(x);
        x *= W.xi;
    }
    return out;
}

/// Structured flat F_q basis from rows over the vertex field W:
/// row r contributes the orbit (xi^0 r, ..., xi^{f-1} r).
inline GFMat flatten_rows(const SpeciesContext& sp, const SpeciesContext::Field& W,
                          const std::vector<std::vector<GFEl>>& rows, int m) {
    const int f = W.f;
    GFMat out = gf_zeros(static_cast<Eigen::Index>(f) * m,
                         static_cast<Eigen::Index>(f) * rows.size(), sp.amb());
    for (size_t ri = 0; ri < rows.size(); ++ri) {
        GFEl scale = sp.one();
        for (int s = 0; s < f; ++s) {
            for (int c = 0; c < m; ++c) {
                auto coords = sp.coords(W, rows[ri][static_cast<size_t>(c)] * scale);
                for (int u = 0; u < f; ++u)
                    out(static_cast<Eigen::Index>(c) * f + u,
                        static_cast<Eigen::Index>(ri) * f + s) = coords[static_cast<size_t>(u)];
            }
            scale *= W.xi;
        }
    }
    return out;
}

/// All F_i-subspaces of F_i^{m} (every dimension), as structured flat bases.
inline std::vector<GFMat> vertex_subspaces(const SpeciesContext& sp, int vertex, int m) {
    const auto& W = sp.vertex_field(vertex);
    auto elems = field_elements(sp, W);
    std::vector<GFMat> out;

    std::vector<int> pivots;
    auto emit_for_pivots = [&]() {
        const int k = static_cast<int>(pivots.size());
        // Free positions: (r, c) with c > pivots[r], c not a pivot column.
        std::vector<std::pair<int, int>> free_pos;
        std::vector<bool> is_pivot(static_cast<size_t>(m), false);
        for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
        for (int r = 0; r < k; ++r)
            for (int c = pivots[static_cast<size_t>(r)] + 1; c < m; ++c)
                if (!is_pivot[static_cast<size_t>(c)]) free_pos.emplace_back(r, c);

        std::vector<std::vector<GFEl>> rows(static_cast<size_t>(k),
                                            std::vector<GFEl>(static_cast<size_t>(m), sp.zero()));
        for (int r = 0; r < k; ++r) rows[static_cast<size_t>(r)][static_cast<size_t>(pivots[static_cast<size_t>(r)])] = sp.one();

        std::vector<size_t> odo(free_pos.size(), 0);
        while (true) {
            for (size_t t = 0; t < free_pos.size(); ++t)
                rows[static_cast<size_t>(free_pos[t].first)][static_cast<size_t>(free_pos[t].second)] =
                    elems[odo[t]];
            out.push_back(flatten_rows(sp, W, rows, m));
            size_t t = 0;
            for (; t < odo.size(); ++t) {
                if (++odo[t] < elems.size()) break;
                odo[t] = 0;
            }
            if (t == odo.size()) break;
        }
    };

    // All pivot-column combinations of every size (including the empty space).
    auto rec = [&](auto&& self, int next, int remaining) -> void {
        if (remaining == 0) {
            emit_for_pivots();
            return;
        }
        for (int c = next; c <= m - remaining; ++c) {
            pivots.push_back(c);
            self(self, c + 1, remaining - 1);
            pivots.pop_back();
        }
    };
    for (int k = 0; k <= m; ++k) rec(rec, 0, k);
    return out;
}

/// Number of F-subspaces of F^m (all dimensions) for |F| = Q: Gaussian-binomial sum.
inline long long grassmannian_total(long long Q, int m) {
    // [m choose k]_Q via the q-Pascal recursion in integers.
    std::vector<std::vector<long long>> binom(static_cast<size_t>(m) + 1,
                                              std::vector<long long>(static_cast<size_t>(m) + 1, 0));
    for (int n = 0; n <= m; ++n) {
        binom[static_cast<size_t>(n)][0] = 1;
        for (int k = 1; k <= n; ++k) {
            long long a = binom[static_cast<size_t>(n) - 1][static_cast<size_t>(k) - 1];
            long long b = (k <= n - 1) ? binom[static_cast<size_t>(n) - 1][static_cast<size_t>(k)] : 0;
            long long Qk = 1;
            for (int t = 0; t < k; ++t) Qk *= Q;
            binom[static_cast<size_t>(n)][static_cast<size_t>(k)] = a + Qk * b;
        }
    }
    long long total = 0;
    for (int k = 0; k <= m; ++k) total += binom[static_cast<size_t>(m)][static_cast<size_t>(k)];
    return total;
}

/// Enumerate all subrepresentations of v; fn(sub, quot, bases) per hit.
inline void enumerate_subreps(
    const ConcreteRep& v, int fq_dim_guard,
    const std::function<void(const ConcreteRep&, const ConcreteRep&, const SubspaceTuple&)>& fn) {
    const SpeciesContext& sp = *v.sp;
    if (v.total_fq_dim() > fq_dim_guard)
        throw guard_exceeded("enumerate_subreps: total F_q-dimension " +
                             std::to_string(v.total_fq_dim()) + " exceeds guard " +
                             std::to_string(fq_dim_guard));
    const int n = sp.rd().n;
    std::vector<std::vector<GFMat>> per_vertex;
    long long bound = 1;
    for (int i = 0; i < n; ++i) {
        per_vertex.push_back(vertex_subspaces(sp, i, v.m[i]));
        long long Q = 1;
        for (int s = 0; s < sp.vertex_field(i).f; ++s) Q *= sp.q();
        long long expect = grassmannian_total(Q, v.m[i]);
        if (static_cast<long long>(per_vertex.back().size()) != expect)
            throw validation_error("enumerate_subreps: Grassmannian count mismatch");
        bound *= expect;
    }

    long long hits = 0;
    SubspaceTuple tuple(static_cast<size_t>(n));
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            if (!subrep_closed(v, tuple)) return;
            ++hits;
            fn(sub_rep(v, tuple), quotient_rep(v, tuple), tuple);
            return;
        }
        for (const GFMat& b : per_vertex[static_cast<size_t>(i)]) {
            tuple[static_cast<size_t>(i)] = b;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    if (hits > bound) throw validation_error("enumerate_subreps: more subreps than subspace tuples");
}

} // namespace qhall
