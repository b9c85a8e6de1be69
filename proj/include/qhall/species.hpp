/**
 * @file species.hpp
 * @brief The field tower of a valued quiver over F_q.
 *
 * Everything lives inside one ambient field GF(p^{e*lcm(f)}): the base field
 * F_q, each vertex field F_i = F_{q^{f_i}}, and each arrow field
 * F_{q^{lcm(f_i,f_j)}} carrying the canonical bimodule.  Vertex spaces are
 * F_q-flattened: V_i = F_q^{f_i m_i} with coordinate layout (r, s) -> r*f_i+s
 * over the power basis {xi_i^s} of F_i.
 *
 * Arrow data is stored as the single F_q-matrix Theta = phi(- (x) 1); the
 * general bimodule action phi(- (x) m) is recovered by expanding m in
 * products xi_i^k xi_j^t.  Well-definedness of that recovery is exactly the
 * minimal-polynomial constraint checked by arrow_constraint_ok.
 */
#pragma once

#include <map>
#include <memory>
#include <numeric>

#include "qhall/gflinalg.hpp"
#include "qhall/root_datum.hpp"

namespace qhall {

/// q = p^e for a prime p, or throws.
inline std::pair<int, int> prime_power_split(unsigned q) {
    for (int p = 2; p <= static_cast<int>(q); ++p) {
        bool prime = p >= 2;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) { prime = false; break; }
        if (!prime) continue;
        if (q % static_cast<unsigned>(p) == 0) {
            unsigned m = q;
            int e = 0;
            while (m % static_cast<unsigned>(p) == 0) { m /= static_cast<unsigned>(p); ++e; }
            if (m != 1) throw input_error("q = " + std::to_string(q) + " is not a prime power");
            return {p, e};
        }
    }
    throw input_error("q = " + std::to_string(q) + " is not a prime power");
}

class SpeciesContext {
public:
    /// A subfield of the ambient field, of degree f over F_q.
    struct Field {
        int f = 1;                 // degree over F_q
        GFEl xi;                   // fixed generator (primitive element of the subfield)
        std::vector<GFEl> basis;   // xi^s, s < f
        std::vector<GFEl> dual;    // trace-dual basis over F_q
    };

    struct ArrowData {
        int L = 1;                                 // lcm(f_i, f_j), degree over F_q
        std::vector<GFEl> mu;                      // minpoly of xi_i over F_j, coeffs in F_j
        std::vector<std::vector<GFEl>> zeta_coeff; // per s < L: c_{kt} with
                                                   // zeta^s = sum c_{kt} xi_i^k xi_j^t
    };

    SpeciesContext(const RootDatum& rd, unsigned q) : rd_(&rd), q_(q) {
        auto [p, e] = prime_power_split(q);
        p_ = p;
        e_ = e;
        int l = 1;
        for (int i = 0; i < rd.n; ++i) l = std::lcm(l, rd.f[i]);
        amb_ = std::make_shared<GFTable>(p, e * l);
        base_ = make_field(1);
        for (int i = 0; i < rd.n; ++i) vertex_.push_back(field_of_degree(rd.f[i]));
        for (auto [i, j] : rd.arrows) arrow_.push_back(make_arrow(i, j));
    }

    const RootDatum& rd() const { return *rd_; }
    unsigned q() const { return q_; }
    const GFTable* amb() const { return amb_.get(); }
    const Field& base() const { return base_; }
    const Field& vertex_field(int i) const { return vertex_[static_cast<size_t>(i)]; }
    const Field& field_of_degree(int f) const {
        auto it = by_degree_.find(f);
        if (it == by_degree_.end()) it = by_degree_.emplace(f, make_field(f)).first;
        return it->second;
    }
    const ArrowData& arrow_data(int a) const { return arrow_[static_cast<size_t>(a)]; }

    /// Data for an ad-hoc oriented edge (used while reflecting): src -> dst.
    ArrowData edge_data(int src, int dst) const { return make_arrow(src, dst); }

    GFEl el(uint32_t v) const { return {v, amb_.get()}; }
    GFEl zero() const { return el(0); }
    GFEl one() const { return el(1); }

    /// All q elements of the base field F_q, in a fixed order.
    const std::vector<GFEl>& base_elements() const {
        if (base_list_.empty()) {
            base_list_.push_back(zero());
            GFEl g = base_.xi, x = one();
            for (unsigned k = 0; k + 1 < q_; ++k) { base_list_.push_back(x); x = x * g; }
        }
        return base_list_;
    }

    /// F_q-coordinates of x in the power basis of the given field.
    std::vector<GFEl> coords(const Field& W, GFEl x) const {
        std::vector<GFEl> c(static_cast<size_t>(W.f));
        for (int s = 0; s < W.f; ++s)
            c[static_cast<size_t>(s)] =
                el(amb_->trace((x * W.dual[static_cast<size_t>(s)]).v, e_ * W.f, e_));
        return c;
    }

    GFEl from_coords(const Field& W, const std::vector<GFEl>& c) const {
        GFEl x = zero();
        for (int s = 0; s < W.f; ++s) x += c[static_cast<size_t>(s)] * W.basis[static_cast<size_t>(s)];
        return x;
    }

    /// f x f matrix over F_q of multiplication by c on the field W.
    GFMat mult_matrix(const Field& W, GFEl c) const {
        GFMat m = gf_zeros(W.f, W.f, amb_.get());
        for (int s = 0; s < W.f; ++s) {
            auto col = coords(W, c * W.basis[static_cast<size_t>(s)]);
            for (int t = 0; t < W.f; ++t) m(t, s) = col[static_cast<size_t>(t)];
        }
        return m;
    }

    /// Block-diagonal multiplication by c in W on W^m, flattened over F_q.
    GFMat vertex_mult_op(const Field& W, int m, GFEl c) const {
        GFMat small = mult_matrix(W, c);
        GFMat big = gf_zeros(W.f * m, W.f * m, amb_.get());
        for (int r = 0; r < m; ++r) big.block(r * W.f, r * W.f, W.f, W.f) = small;
        return big;
    }

    int p() const { return p_; }
    int e() const { return e_; }

private:
    Field make_field(int f) const {
        Field W;
        W.f = f;
        W.xi = el(amb_->subfield_gen(e_ * f));
        for (int s = 0; s < f; ++s) W.basis.push_back(pow_el(W.xi, s));
        // Trace-dual basis: invert the Gram matrix Tr(xi^{s+t}) over F_q.
        GFMat gram = gf_zeros(f, f, amb_.get());
        for (int s = 0; s < f; ++s)
            for (int t = 0; t < f; ++t)
                gram(s, t) = el(amb_->trace((W.basis[static_cast<size_t>(s)] *
                                             W.basis[static_cast<size_t>(t)]).v,
                                            e_ * f, e_));
        auto inv = gf_solve(gram, gf_identity(f, amb_.get()), amb_.get());
        if (!inv) throw validation_error("species: degenerate trace form");
        for (int s = 0; s < f; ++s) {
            GFEl d = zero();
            for (int t = 0; t < f; ++t) d += (*inv)(t, s) * W.basis[static_cast<size_t>(t)];
            W.dual.push_back(d);
        }
        return W;
    }

    GFEl pow_el(GFEl x, int k) const {
        GFEl r = one();
        for (int i = 0; i < k; ++i) r *= x;
        return r;
    }

    ArrowData make_arrow(int i, int j) const {
        const Field& Fi = vertex_[static_cast<size_t>(i)];
        const Field& Fj = vertex_[static_cast<size_t>(j)];
        ArrowData a;
        a.L = std::lcm(Fi.f, Fj.f);
        const Field& FL = field_of_degree(a.L);

        // Minimal polynomial of xi_i over F_j: product of (x - conjugates).
        int g = std::gcd(Fi.f, Fj.f);
        int deg = Fi.f / g;
        std::vector<GFEl> poly{one()}; // coefficients, low degree first
        for (int t = 0; t < deg; ++t) {
            GFEl conj = el(amb_->frob(Fi.xi.v, e_ * Fj.f * t));
            // poly *= (x - conj)
            std::vector<GFEl> next(poly.size() + 1, zero());
            for (size_t s = 0; s < poly.size(); ++s) {
                next[s + 1] += poly[s];
                next[s] -= poly[s] * conj;
            }
            poly = std::move(next);
        }
        a.mu = poly;

        // Expansion of each zeta^s in the products xi_i^k xi_j^t.
        GFMat P = gf_zeros(a.L, Fi.f * Fj.f, amb_.get());
        for (int k = 0; k < Fi.f; ++k)
            for (int t = 0; t < Fj.f; ++t) {
                GFEl prod = pow_el(Fi.xi, k) * pow_el(Fj.xi, t);
                auto c = coords(FL, prod);
                for (int s = 0; s < a.L; ++s) P(s, k * Fj.f + t) = c[static_cast<size_t>(s)];
            }
        for (int s = 0; s < a.L; ++s) {
            GFVec rhs = gf_zeros(a.L, 1, amb_.get()).col(0);
            rhs(s) = one();
            auto sol = gf_solve(P, rhs, amb_.get());
            if (!sol) throw validation_error("species: bimodule products do not span F_L");
            std::vector<GFEl> cs(static_cast<size_t>(Fi.f * Fj.f));
            for (int u = 0; u < Fi.f * Fj.f; ++u) cs[static_cast<size_t>(u)] = (*sol)(u, 0);
            a.zeta_coeff.push_back(std::move(cs));
        }
        return a;
    }

    const RootDatum* rd_;
    unsigned q_;
    int p_ = 0, e_ = 0;
    std::shared_ptr<GFTable> amb_;
    Field base_;
    std::vector<Field> vertex_;
    std::vector<ArrowData> arrow_;
    mutable std::map<int, Field> by_degree_;
    mutable std::vector<GFEl> base_list_;
};

} // namespace qhall
