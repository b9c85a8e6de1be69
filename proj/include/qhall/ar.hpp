/**
 * @file ar.hpp
 * @brief Auslander-Reiten combinatorics on dimension vectors.
 *
 * tau is the Coxeter transformation for the admissible vertex order; the
 * sign/direction convention is fixed at construction by requiring that tau
 * kills exactly the projective roots (identified through the Euler form),
 * not by documentation.  Everything here is dimension-vector level; hom
 * tables from the concrete oracle are passed in where an enumeration needs
 * them.
 */
#pragma once

#include <optional>

#include "qhall/root_datum.hpp"

namespace qhall {

using Enumeration = std::vector<int>;          // position -> canonical indecomposable index
using DirectedPartition = std::vector<std::vector<int>>; // parts of canonical indices
using Word = std::vector<int>;                 // 0-based vertices

class ARData {
public:
    explicit ARData(const RootDatum& rd) : rd_(&rd) {
        const int n = rd.n;
        // Reflection matrices R_i = I - e_i * (row i of C).
        std::vector<IntMat> R;
        for (int i = 0; i < n; ++i) {
            IntMat m = IntMat::Identity(n, n);
            for (int j = 0; j < n; ++j) m(i, j) -= rd.C(i, j);
            R.push_back(std::move(m));
        }
        IntMat fwd = IntMat::Identity(n, n);
        for (int i = 0; i < n; ++i) fwd = fwd * R[static_cast<size_t>(i)]; // applies R_{n-1} first
        IntMat bwd = IntMat::Identity(n, n);
        for (int i = n - 1; i >= 0; --i) bwd = bwd * R[static_cast<size_t>(i)];

        find_proj_inj();
        // Pick the candidate that kills exactly the projective roots.
        if (kills_exactly(fwd, proj_)) {
            cox_ = fwd;
            cox_inv_ = bwd;
        } else if (kills_exactly(bwd, proj_)) {
            cox_ = bwd;
            cox_inv_ = fwd;
        } else {
            throw validation_error("ARData: no Coxeter candidate kills exactly the projectives");
        }
        if (!kills_exactly(cox_inv_, inj_))
            throw validation_error("ARData: tau^{-1} does not kill exactly the injectives");

        build_canonical_order();
    }

    const RootDatum& rd() const { return *rd_; }

    /// tau on positive roots; nullopt iff projective.
    std::optional<IntVec> tau(const IntVec& dim) const {
        IntVec img = cox_ * dim;
        if ((img.array() < 0).any()) return std::nullopt;
        return img;
    }
    std::optional<IntVec> tau_inv(const IntVec& dim) const {
        IntVec img = cox_inv_ * dim;
        if ((img.array() < 0).any()) return std::nullopt;
        return img;
    }

    const std::vector<IntVec>& proj_dims() const { return proj_; } // indexed by vertex
    const std::vector<IntVec>& inj_dims() const { return inj_; }

    /// Unique (vertex i, power k) with M = tau^k I_i, by iterating tau^{-1}.
    std::pair<int, int> theta_tau(const IntVec& dim) const {
        IntVec cur = dim;
        for (int k = 0; k <= 4 * static_cast<int>(rd_->positive_roots.size()); ++k) {
            for (int i = 0; i < rd_->n; ++i)
                if (cur == inj_[static_cast<size_t>(i)]) return {i, k};
            auto next = tau_inv(cur);
            if (!next) throw validation_error("theta_tau: walked off the injectives");
            cur = *next;
        }
        throw validation_error("theta_tau: did not terminate");
    }

    /// Canonical indecomposable order: tau^t I_n, ..., tau^t I_1, ..., I_n, ..., I_1
    /// with vanished terms dropped.
    const std::vector<IntVec>& canonical_order() const { return order_; }

    int canonical_index(const IntVec& dim) const {
        for (size_t k = 0; k < order_.size(); ++k)
            if (order_[k] == dim) return static_cast<int>(k);
        throw input_error("canonical_index: not an indecomposable dimension vector");
    }

    /// Injective slices I_k = {tau^{k-1} I_j} and projective slices
    /// P_k = {tau^{-k+1} P_j}, as canonical indices.
    const std::vector<std::vector<int>>& inj_slices() const { return islices_; }
    const std::vector<std::vector<int>>& proj_slices() const { return pslices_; }

    /// The canonical injective-based enumeration (identity permutation).
    Enumeration inj_enumeration() const {
        Enumeration e(order_.size());
        for (size_t k = 0; k < order_.size(); ++k) e[k] = static_cast<int>(k);
        return e;
    }

    DirectedPartition proj_partition() const { return pslices_; }

    /// Word of an enumeration: i_k = theta_tau(e(nu + 1 - k)).
    Word word_from_enumeration(const Enumeration& e) const {
        const size_t nu = order_.size();
        Word w(nu);
        for (size_t k = 0; k < nu; ++k)
            w[k] = theta_tau(order_[static_cast<size_t>(e[nu - 1 - k])]).first;
        return w;
    }

    /// Support vertices (increasing) of the direct sum of a set of indecomposables.
    std::vector<int> part_support(const std::vector<int>& part) const {
        IntVec d = IntVec::Zero(rd_->n);
        for (int idx : part) d += order_[static_cast<size_t>(idx)];
        std::vector<int> s;
        for (int i = 0; i < rd_->n; ++i)
            if (d[i] != 0) s.push_back(i);
        return s;
    }

    /// Word associated to a directed partition: concatenated sorted supports.
    Word word_of_partition(const DirectedPartition& parts) const {
        Word w;
        for (const auto& part : parts)
            for (int i : part_support(part)) w.push_back(i);
        return w;
    }

private:
    void find_proj_inj() {
        const RootDatum& rd = *rd_;
        proj_.assign(static_cast<size_t>(rd.n), IntVec());
        inj_.assign(static_cast<size_t>(rd.n), IntVec());
        for (const IntVec& b : rd.positive_roots) {
            for (int i = 0; i < rd.n; ++i) {
                bool isP = true, isI = true;
                for (int l = 0; l < rd.n; ++l) {
                    IntVec el = IntVec::Zero(rd.n);
                    el[l] = 1;
                    long want = (l == i) ? rd.f[i] : 0;
                    if (rd.euler(b, el) != want) isP = false;
                    if (rd.euler(el, b) != want) isI = false;
                }
                if (isP) proj_[static_cast<size_t>(i)] = b;
                if (isI) inj_[static_cast<size_t>(i)] = b;
            }
        }
        for (int i = 0; i < rd.n; ++i)
            if (proj_[static_cast<size_t>(i)].size() == 0 || inj_[static_cast<size_t>(i)].size() == 0)
                throw validation_error("ARData: could not identify P_i or I_i among the roots");
    }

    bool kills_exactly(const IntMat& cand, const std::vector<IntVec>& killed) const {
        const RootDatum& rd = *rd_;
        for (const IntVec& b : rd.positive_roots) {
            IntVec img = cand * b;
            bool pos = (img.array() >= 0).all();
            bool in_killed = false;
            for (const IntVec& k : killed)
                if (b == k) { in_killed = true; break; }
            if (in_killed == pos) return false;
            if (pos && !rd.is_positive_root(img)) return false;
        }
        return true;
    }

    void build_canonical_order() {
        const RootDatum& rd = *rd_;
        // Injective slices: islices_[k] lists tau^k I_j (j ascending) while nonzero.
        std::vector<std::vector<IntVec>> islice_dims;
        {
            std::vector<IntVec> cur = inj_;
            while (true) {
                std::vector<IntVec> nonzero;
                for (const IntVec& d : cur)
                    if (d.size() != 0) nonzero.push_back(d);
                if (nonzero.empty()) break;
                islice_dims.push_back(cur);
                std::vector<IntVec> next(cur.size(), IntVec());
                for (size_t j = 0; j < cur.size(); ++j)
                    if (cur[j].size() != 0)
                        if (auto t = tau(cur[j])) next[j] = *t;
                cur = std::move(next);
            }
        }
        // Canonical order: deepest slice first, and j descending inside a slice.
        for (auto it = islice_dims.rbegin(); it != islice_dims.rend(); ++it)
            for (int j = rd.n - 1; j >= 0; --j)
                if ((*it)[static_cast<size_t>(j)].size() != 0)
                    order_.push_back((*it)[static_cast<size_t>(j)]);
        if (static_cast<int>(order_.size()) != rd.nu())
            throw validation_error("ARData: canonical order misses indecomposables");

        for (const auto& slice : islice_dims) {
            std::vector<int> s;
            for (int j = 0; j < rd.n; ++j)
                if (slice[static_cast<size_t>(j)].size() != 0)
                    s.push_back(canonical_index(slice[static_cast<size_t>(j)]));
            islices_.push_back(std::move(s));
        }
        // Projective slices.
        std::vector<IntVec> cur = proj_;
        while (true) {
            std::vector<int> s;
            for (int j = 0; j < rd.n; ++j)
                if (cur[static_cast<size_t>(j)].size() != 0)
                    s.push_back(canonical_index(cur[static_cast<size_t>(j)]));
            if (s.empty()) break;
            pslices_.push_back(std::move(s));
            std::vector<IntVec> next(cur.size(), IntVec());
            for (size_t j = 0; j < cur.size(); ++j)
                if (cur[j].size() != 0)
                    if (auto t = tau_inv(cur[j])) next[j] = *t;
            cur = std::move(next);
        }
        if (pslices_.size() != islices_.size())
            throw validation_error("ARData: slice counts s != t");
        for (size_t k = 0; k < pslices_.size(); ++k)
            if (pslices_[k].size() != islices_[k].size())
                throw validation_error("ARData: |P_k| != |I_k|");
    }

    const RootDatum* rd_;
    IntMat cox_, cox_inv_;
    std::vector<IntVec> proj_, inj_;
    std::vector<IntVec> order_;
    std::vector<std::vector<int>> islices_, pslices_;
};

// ---------------------------------------------------------------------------
// Multiplicity vectors, the total order, generated vectors, braid moves
// ---------------------------------------------------------------------------

/// M <_e N: lexicographic on multiplicities read in enumeration order.
inline int order_compare(const Enumeration& e, const std::vector<int>& multM,
                         const std::vector<int>& multN) {
    for (int idx : e) {
        int a = multM[static_cast<size_t>(idx)], b = multN[static_cast<size_t>(idx)];
        if (a != b) return a < b ? -1 : 1;
    }
    return 0;
}

/// Generated vector of the isoclass with the given multiplicities, along the
/// word of the directed partition.
inline std::vector<int> generated_vector(const ARData& ar, const DirectedPartition& parts,
                                         const std::vector<int>& mult) {
    std::vector<int> out;
    for (const auto& part : parts) {
        IntVec d = IntVec::Zero(ar.rd().n);
        for (int idx : part)
            d += mult[static_cast<size_t>(idx)] * ar.canonical_order()[static_cast<size_t>(idx)];
        for (int i : ar.part_support(part)) out.push_back(d[i]);
    }
    return out;
}

/// Swap positions k, k+1; requires orthogonal letters.
inline Word short_braid_move(const RootDatum& rd, const Word& w, size_t k) {
    if (k + 1 >= w.size()) throw input_error("short_braid_move: position out of range");
    IntVec a = IntVec::Zero(rd.n), b = IntVec::Zero(rd.n);
    a[w[k]] = 1;
    b[w[k + 1]] = 1;
    if (rd.sym(a, b) != 0)
        throw input_error("short_braid_move: adjacent letters are not orthogonal");
    Word out = w;
    std::swap(out[k], out[k + 1]);
    return out;
}

/// Enumeration refining a directed partition: within each part, a topological
/// order with Hom(later, earlier) = 0, lowest canonical index first on ties.
/// hom_table(i, j) = dim Hom of canonical indecomposables i -> j.
inline Enumeration enumeration_from_partition(const ARData& ar, const DirectedPartition& parts,
                                              const IntMat& hom_table) {
    Enumeration e;
    for (const auto& part : parts) {
        std::vector<int> remaining = part;
        std::sort(remaining.begin(), remaining.end());
        while (!remaining.empty()) {
            int chosen = -1;
            for (int cand : remaining) {
                // cand is placeable if no other remaining element maps into it.
                bool ok = true;
                for (int other : remaining) {
                    if (other == cand) continue;
                    if (hom_table(other, cand) != 0) { ok = false; break; }
                }
                if (ok) { chosen = cand; break; }
            }
            if (chosen < 0)
                throw validation_error("enumeration_from_partition: no valid order (Hom cycle)");
            e.push_back(chosen);
            remaining.erase(std::find(remaining.begin(), remaining.end(), chosen));
        }
    }
    if (e.size() != ar.canonical_order().size())
        throw input_error("enumeration_from_partition: parts do not cover the indecomposables");
    return e;
}

} // namespace qhall
