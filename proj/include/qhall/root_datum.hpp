/**
 * @file root_datum.hpp
 * @brief Cartan/root data of a finite-type valued quiver.
 *
 * Holds the valuation matrix d, symmetrizer f, Cartan matrix C, Euler-form
 * matrix E and the positive roots, together with the simple-reflection and
 * Weyl-word machinery.  Vertices are 1-based externally and 0-based in code.
 */
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qhall/errors.hpp"

namespace qhall {

using IntVec = Eigen::VectorXi;
using IntMat = Eigen::MatrixXi;

/// Lexicographic comparison for Eigen integer vectors (column vectors).
struct IntVecLess {
    bool operator()(const IntVec& x, const IntVec& y) const {
        if (x.size() != y.size()) return x.size() < y.size();
        for (Eigen::Index i = 0; i < x.size(); ++i)
            if (x[i] != y[i]) return x[i] < y[i];
        return false;
    }
};

struct QuiverSpec {
    int n = 0;
    std::vector<std::pair<int, int>> arrows; // 0-based (i, j), i -> j
    IntMat d;                                // n x n valuations
    IntVec f;                                // symmetrizer
};

class RootDatum {
public:
    int n = 0;
    std::vector<std::pair<int, int>> arrows;
    IntMat d; // valuations, d(i,i) = 0
    IntVec f; // positive symmetrizer
    IntMat C; // Cartan matrix
    IntMat E; // Euler-form matrix
    std::vector<IntVec> positive_roots; // deterministic (lex-sorted) order

    int nu() const { return static_cast<int>(positive_roots.size()); }

    /// Euler form <a, b> = a^T E b.
    long euler(const IntVec& a, const IntVec& b) const {
        check_len(a);
        check_len(b);
        return static_cast<long>((a.transpose() * E * b)(0, 0));
    }

    /// Symmetric form (a, b) = <a,b> + <b,a>.
    long sym(const IntVec& a, const IntVec& b) const { return euler(a, b) + euler(b, a); }

    /// Simple reflection r_i acting on the root lattice.
    IntVec reflect(int i, const IntVec& beta) const {
        check_vertex(i);
        check_len(beta);
        IntVec r = beta;
        long c = 0;
        for (int j = 0; j < n; ++j) c += static_cast<long>(C(i, j)) * beta[j];
        r[i] -= static_cast<int>(c);
        return r;
    }

    /// Action of the word (i_1 ... i_m): r_{i_1} o ... o r_{i_m}, rightmost first.
    IntVec word_action(const std::vector<int>& word, IntVec beta) const {
        for (auto it = word.rbegin(); it != word.rend(); ++it) beta = reflect(*it, beta);
        return beta;
    }

    struct WordInfo {
        bool reduced = false;
        bool longest = false;
        int inversions = 0;
    };

    /// Reducedness by inversion counting; longest = reduced, sends simples to
    /// negatives, and has length nu.
    WordInfo word_info(const std::vector<int>& word) const {
        WordInfo info;
        for (const IntVec& root : positive_roots) {
            IntVec img = word_action(word, root);
            bool neg = true;
            for (int i = 0; i < n; ++i)
                if (img[i] > 0) { neg = false; break; }
            if (neg) ++info.inversions;
        }
        info.reduced = (info.inversions == static_cast<int>(word.size()));
        // w = w0 iff w(Pi) = -Pi: every simple root maps to a negative simple root.
        bool flips_simples = true;
        for (int i = 0; i < n && flips_simples; ++i) {
            IntVec a = IntVec::Zero(n);
            a[i] = 1;
            IntVec img = -word_action(word, a);
            flips_simples = img.minCoeff() >= 0 && img.sum() == 1 && img.maxCoeff() == 1;
        }
        info.longest = info.reduced && flips_simples &&
                       static_cast<int>(word.size()) == nu();
        return info;
    }

    bool is_positive_root(const IntVec& v) const {
        return std::binary_search(positive_roots.begin(), positive_roots.end(), v, IntVecLess{});
    }

    int root_index(const IntVec& v) const {
        auto it = std::lower_bound(positive_roots.begin(), positive_roots.end(), v, IntVecLess{});
        if (it == positive_roots.end() || !(*it == v))
            throw input_error("root_index: not a positive root");
        return static_cast<int>(it - positive_roots.begin());
    }

    void check_vertex(int i) const {
        if (i < 0 || i >= n) throw input_error("vertex index out of range");
    }
    void check_len(const IntVec& v) const {
        if (v.size() != n) throw input_error("vector length mismatch");
    }
};

/// Build and validate a RootDatum from a quiver spec.  Positive roots are
/// generated by closing the simples under all simple reflections.
inline RootDatum build_root_datum(const QuiverSpec& spec) {
    RootDatum rd;
    rd.n = spec.n;
    rd.arrows = spec.arrows;
    rd.d = spec.d;
    rd.f = spec.f;
    const int n = rd.n;
    if (n <= 0) throw input_error("quiver: need at least one vertex");
    if (rd.d.rows() != n || rd.d.cols() != n || rd.f.size() != n)
        throw input_error("quiver: d must be n x n and f length n");

    for (int i = 0; i < n; ++i) {
        if (rd.f[i] <= 0) throw input_error("quiver: symmetrizer entries must be positive");
        if (rd.d(i, i) != 0) throw input_error("quiver: d_ii must be 0");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (rd.d(i, j) < 0) throw input_error("quiver: valuations must be nonnegative");
            if (rd.f[i] * rd.d(i, j) != rd.f[j] * rd.d(j, i))
                throw input_error("quiver: f_i d_ij != f_j d_ji (not symmetrizable)");
            if (i != j && (rd.d(i, j) == 0) != (rd.d(j, i) == 0))
                throw input_error("quiver: d_ij and d_ji must vanish together");
        }

    std::set<std::pair<int, int>> seen_edges;
    for (auto [i, j] : rd.arrows) {
        if (i < 0 || i >= n || j < 0 || j >= n) throw input_error("quiver: arrow vertex out of range");
        if (i >= j) throw input_error("quiver: arrows must go from smaller to larger vertex");
        if (rd.d(i, j) == 0) throw input_error("quiver: arrow on an edge with d_ij = 0");
        if (!seen_edges.insert({i, j}).second) throw input_error("quiver: duplicate arrow");
    }
    // Every valued edge must carry exactly one arrow.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rd.d(i, j) != 0 && !seen_edges.count({i, j}))
                throw input_error("quiver: edge without an arrow (orientation must respect vertex order)");

    rd.C = IntMat::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rd.C(i, j) = (i == j) ? 2 : -rd.d(i, j);

    // Symmetrized form (a_i, a_j) = f_i C_ij must be positive definite (finite type).
    Eigen::MatrixXd sym(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sym(i, j) = static_cast<double>(rd.f[i] * rd.C(i, j));
    Eigen::LLT<Eigen::MatrixXd> llt(sym);
    if (llt.info() != Eigen::Success)
        throw input_error("quiver: symmetrized form is not positive definite (not finite type)");

    rd.E = IntMat::Zero(n, n);
    for (int i = 0; i < n; ++i) rd.E(i, i) = rd.f[i];
    for (auto [i, j] : rd.arrows) rd.E(i, j) = -rd.f[i] * rd.d(i, j);
    // E + E^T must equal the symmetrized form.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rd.E(i, j) + rd.E(j, i) != rd.f[i] * rd.C(i, j))
                throw validation_error("root datum: E + E^T != symmetrized form");

    // Reflection closure of the simples, keeping nonnegative vectors.
    std::set<IntVec, IntVecLess> roots;
    std::vector<IntVec> frontier;
    for (int i = 0; i < n; ++i) {
        IntVec a = IntVec::Zero(n);
        a[i] = 1;
        roots.insert(a);
        frontier.push_back(a);
    }
    while (!frontier.empty()) {
        std::vector<IntVec> next;
        for (const IntVec& r : frontier)
            for (int i = 0; i < n; ++i) {
                IntVec s = rd.reflect(i, r);
                if ((s.array() < 0).any()) continue;
                if (roots.insert(s).second) next.push_back(s);
            }
        frontier = std::move(next);
        if (roots.size() > 4096)
            throw input_error("quiver: positive-root closure does not terminate (not finite type)");
    }
    rd.positive_roots.assign(roots.begin(), roots.end());
    return rd;
}

} // namespace qhall
