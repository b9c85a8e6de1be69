/**
 * @file repcat.hpp
 * @brief Isoclass-level oracle for rep(Q, d) over F_q.
 *
 * Caches the canonical indecomposables (built by reflection functors and
 * validated by dimension vectors, local endomorphism rings and AR duality),
 * the hom table, automorphism counts, and the subquotient tables that all
 * Hall/filtration numbers are derived from.
 */
#pragma once

#include <map>
#include <numeric>

#include "qhall/ar.hpp"
#include "qhall/qscalar.hpp"
#include "qhall/rep.hpp"
#include "qhall/subrep.hpp"

namespace qhall {

struct Guards {
    int subrep_fq_dim = 12; // max total F_q-dimension for subrep enumeration
    int end_dim = 16;       // max dim End for brute-force Aut counting
    int word_len = 8;       // shuffle/free word length cap
};

/// Isoclass: multiplicities over the canonical indecomposable list.
using Mult = std::vector<int>;

inline Mult zero_class(int nu) { return Mult(static_cast<size_t>(nu), 0); }

class RepCategory {
public:
    RepCategory(const RootDatum& rd, unsigned q, Guards guards = {})
        : rd_(&rd), q_(q), guards_(guards), ar_(rd), sp_(rd, q) {
        const auto& order = ar_.canonical_order();
        nu_ = static_cast<int>(order.size());
        for (const IntVec& beta : order) {
            ConcreteRep rep = build_root_rep(sp_, beta);
            if (!has_local_endo_ring(rep))
                throw validation_error("RepCategory: constructed root rep is decomposable");
            indec_.push_back(std::move(rep));
        }
        hom_ = IntMat::Zero(nu_, nu_);
        for (int i = 0; i < nu_; ++i)
            for (int j = 0; j < nu_; ++j)
                hom_(i, j) = hom_dim(indec_[static_cast<size_t>(i)], indec_[static_cast<size_t>(j)]);
        simple_class_.assign(static_cast<size_t>(rd.n), -1);
        for (int i = 0; i < rd.n; ++i) {
            IntVec e = IntVec::Zero(rd.n);
            e[i] = 1;
            simple_class_[static_cast<size_t>(i)] = ar_.canonical_index(e);
        }
        validate_enumeration_property();
        validate_ar_duality();
    }

    const RootDatum& rd() const { return *rd_; }
    unsigned q() const { return q_; }
    const Guards& guards() const { return guards_; }
    const ARData& ar() const { return ar_; }
    const SpeciesContext& species() const { return sp_; }
    int nu() const { return nu_; }
    const ConcreteRep& indec(int k) const { return indec_[static_cast<size_t>(k)]; }
    const IntMat& hom_table() const { return hom_; }
    int simple_class_index(int vertex) const { return simple_class_[static_cast<size_t>(vertex)]; }

    long ext_indec(int i, int j) const {
        return hom_(i, j) - rd_->euler(ar_.canonical_order()[static_cast<size_t>(i)],
                                       ar_.canonical_order()[static_cast<size_t>(j)]);
    }

    QScalar vq(long k) const { return QScalar::v_power(k, q_); }

    // -- isoclasses ---------------------------------------------------------

    IntVec dim_of(const Mult& m) const {
        IntVec d = IntVec::Zero(rd_->n);
        for (int k = 0; k < nu_; ++k)
            d += m[static_cast<size_t>(k)] * ar_.canonical_order()[static_cast<size_t>(k)];
        return d;
    }

    int total_dim(const Mult& m) const { return dim_of(m).sum(); }

    Mult simple_power(int vertex, int a) const {
        Mult m = zero_class(nu_);
        m[static_cast<size_t>(simple_class_[static_cast<size_t>(vertex)])] = a;
        return m;
    }

    ConcreteRep realize(const Mult& m) const {
        ConcreteRep r = zero_rep(sp_, base_shape(*rd_));
        for (int k = 0; k < nu_; ++k)
            for (int c = 0; c < m[static_cast<size_t>(k)]; ++c)
                r = direct_sum(r, indec_[static_cast<size_t>(k)]);
        return r;
    }

    /// Krull-Schmidt multiplicities of an arbitrary representation, from hom
    /// counts against the indecomposables (unitriangular back-substitution).
    Mult identify(const ConcreteRep& v) const {
        std::vector<long> h(static_cast<size_t>(nu_));
        for (int i = 0; i < nu_; ++i) h[static_cast<size_t>(i)] = hom_dim(indec_[static_cast<size_t>(i)], v);
        Mult a = zero_class(nu_);
        for (int i = nu_ - 1; i >= 0; --i) {
            long rest = h[static_cast<size_t>(i)];
            for (int j = i + 1; j < nu_; ++j) rest -= static_cast<long>(a[static_cast<size_t>(j)]) * hom_(i, j);
            if (rest % hom_(i, i) != 0 || rest < 0)
                throw validation_error("identify: inconsistent hom counts");
            a[static_cast<size_t>(i)] = static_cast<int>(rest / hom_(i, i));
        }
        if (dim_of(a) != v.m) throw validation_error("identify: dimension vector mismatch");
        return a;
    }

    long hom_classes(const Mult& x, const Mult& y) const {
        long h = 0;
        for (int i = 0; i < nu_; ++i)
            for (int j = 0; j < nu_; ++j)
                h += static_cast<long>(x[static_cast<size_t>(i)]) * y[static_cast<size_t>(j)] * hom_(i, j);
        return h;
    }

    /// All isoclasses with the given dimension vector, in lexicographic
    /// multiplicity order.
    std::vector<Mult> classes_with_dim(const IntVec& d) const {
        std::vector<Mult> out;
        Mult cur = zero_class(nu_);
        IntVec rem = d;
        auto rec = [&](auto&& self, int k) -> void {
            if ((rem.array() < 0).any()) return;
            if (k == nu_) {
                if (rem.sum() == 0) out.push_back(cur);
                return;
            }
            const IntVec& root = ar_.canonical_order()[static_cast<size_t>(k)];
            int cap = 1 << 20;
            for (int i = 0; i < rd_->n; ++i)
                if (root[i] > 0) cap = std::min(cap, rem[i] / root[i]);
            for (int c = 0; c <= cap; ++c) {
                cur[static_cast<size_t>(k)] = c;
                rem -= c * root;
                self(self, k + 1);
                rem += c * root;
            }
            cur[static_cast<size_t>(k)] = 0;
        };
        rec(rec, 0);
        return out;
    }

    // -- counting oracles ---------------------------------------------------

    long long aut_of(const Mult& m) {
        auto it = aut_cache_.find(m);
        if (it != aut_cache_.end()) return it->second;
        long long a = aut_size(realize(m), guards_.end_dim);
        aut_cache_.emplace(m, a);
        return a;
    }

    /// Multiset of (quotient class, sub class) pairs over all subreps of m.
    const std::map<std::pair<Mult, Mult>, long long>& subquots(const Mult& m) {
        auto it = subquot_cache_.find(m);
        if (it != subquot_cache_.end()) return it->second;
        std::map<std::pair<Mult, Mult>, long long> table;
        ConcreteRep big = realize(m);
        enumerate_subreps(big, guards_.subrep_fq_dim,
                          [&](const ConcreteRep& sub, const ConcreteRep& quot, const SubspaceTuple&) {
                              table[{identify(quot), identify(sub)}] += 1;
                          });
        return subquot_cache_.emplace(m, std::move(table)).first->second;
    }

    /// Hall number F^L_{M, N} (M the quotient, N the sub).
    long long hall_number(const Mult& L, const Mult& M, const Mult& N) {
        if (dim_of(L) != dim_of(M) + dim_of(N)) return 0;
        const auto& t = subquots(L);
        auto it = t.find({M, N});
        return it == t.end() ? 0 : it->second;
    }

    /// Iterated filtration number F^L_{X_1, ..., X_t} (X_1 the top quotient).
    long long filtration_count(const Mult& L, const std::vector<Mult>& parts) {
        std::map<std::pair<Mult, size_t>, long long> memo;
        std::vector<IntVec> suffix_dim(parts.size() + 1, IntVec::Zero(rd_->n));
        for (size_t k = parts.size(); k-- > 0;)
            suffix_dim[k] = suffix_dim[k + 1] + dim_of(parts[k]);
        auto rec = [&](auto&& self, const Mult& cur, size_t pos) -> long long {
            if (pos == parts.size()) return total_dim(cur) == 0 ? 1 : 0;
            if (dim_of(cur) != suffix_dim[pos]) return 0;
            auto key = std::make_pair(cur, pos);
            auto mit = memo.find(key);
            if (mit != memo.end()) return mit->second;
            long long total = 0;
            for (const auto& [pair, count] : subquots(cur))
                if (pair.first == parts[pos]) total += count * self(self, pair.second, pos + 1);
            memo.emplace(key, total);
            return total;
        };
        return rec(rec, L, 0);
    }

    /// F^L over semisimple parts S_{w_1}^{a_1}, ..., S_{w_t}^{a_t}.
    long long filtration_semisimple(const Mult& L, const Word& w, const std::vector<int>& a) {
        std::vector<Mult> parts;
        for (size_t k = 0; k < w.size(); ++k)
            parts.push_back(simple_power(w[k], a[k]));
        return filtration_count(L, parts);
    }

    /// E(a, w): all isoclasses of dimension sum a_k alpha_{w_k} with a
    /// nonzero filtration number.
    std::vector<Mult> exact_set(const std::vector<int>& a, const Word& w) {
        IntVec d = IntVec::Zero(rd_->n);
        for (size_t k = 0; k < w.size(); ++k) d[w[k]] += a[k];
        std::vector<Mult> out;
        for (const Mult& x : classes_with_dim(d))
            if (filtration_semisimple(x, w, a) != 0) out.push_back(x);
        return out;
    }

    // -- tau on isoclass indices --------------------------------------------

    std::optional<int> tau_indec(int k) const {
        auto t = ar_.tau(ar_.canonical_order()[static_cast<size_t>(k)]);
        if (!t) return std::nullopt;
        return ar_.canonical_index(*t);
    }
    std::optional<int> tau_inv_indec(int k) const {
        auto t = ar_.tau_inv(ar_.canonical_order()[static_cast<size_t>(k)]);
        if (!t) return std::nullopt;
        return ar_.canonical_index(*t);
    }

private:
    void validate_enumeration_property() const {
        for (int i = 0; i < nu_; ++i)
            for (int j = 0; j < i; ++j) {
                if (hom_(i, j) != 0)
                    throw validation_error("canonical order: Hom(e(i), e(j)) != 0 for j < i");
                if (ext_indec(j, i) != 0)
                    throw validation_error("canonical order: Ext(e(j), e(i)) != 0 for j < i");
            }
    }

    /// dim Ext^1(X, Y) = dim Hom(Y, tauX) for non-projective X (all indec Y).
    void validate_ar_duality() const {
        for (int x = 0; x < nu_; ++x) {
            auto tx = tau_indec(x);
            if (!tx) continue;
            for (int y = 0; y < nu_; ++y)
                if (ext_indec(x, y) != hom_(y, *tx))
                    throw validation_error("AR duality cross-check failed (tau convention bug)");
        }
    }

    const RootDatum* rd_;
    unsigned q_;
    Guards guards_;
    ARData ar_;
    SpeciesContext sp_;
    int nu_ = 0;
    std::vector<ConcreteRep> indec_;
    IntMat hom_;
    std::vector<int> simple_class_;
    std::map<Mult, long long> aut_cache_;
    std::map<Mult, std::map<std::pair<Mult, Mult>, long long>> subquot_cache_;
};

} // namespace qhall
