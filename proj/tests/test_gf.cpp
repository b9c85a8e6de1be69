#include <doctest.h>

#include "qhall/gf.hpp"
#include "qhall/gflinalg.hpp"

using namespace qhall;

TEST_CASE("GF(p^k) tables satisfy field axioms") {
    for (auto [p, d] : {std::pair{2, 4}, {3, 2}, {5, 2}, {2, 6}}) {
        GFTable F(p, d);
        CHECK(F.size() == static_cast<uint64_t>(std::pow(p, d)));
        // generator has full order
        CHECK(F.pow(F.gen(), F.size() - 1) == F.one());
        for (uint32_t a = 0; a < std::min<uint64_t>(F.size(), 16); ++a)
            for (uint32_t b = 0; b < std::min<uint64_t>(F.size(), 16); ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                CHECK(F.mul(a, F.add(b, 1)) == F.add(F.mul(a, b), a));
                if (a != 0) CHECK(F.mul(a, F.inv(a)) == F.one());
            }
        // Frobenius is additive
        for (uint32_t a = 0; a < std::min<uint64_t>(F.size(), 12); ++a)
            for (uint32_t b = 0; b < std::min<uint64_t>(F.size(), 12); ++b)
                CHECK(F.frob(F.add(a, b), 1) == F.add(F.frob(a, 1), F.frob(b, 1)));
    }
}

TEST_CASE("subfields, traces, relative data") {
    GFTable F(2, 6); // GF(64), subfields GF(2), GF(4), GF(8)
    for (int d : {1, 2, 3, 6}) {
        uint32_t g = F.subfield_gen(d);
        CHECK(F.in_subfield(g, d));
        // order of g is 2^d - 1
        uint64_t ord = (1ull << d) - 1;
        CHECK(F.pow(g, ord) == F.one());
        for (uint64_t t = 1; t < ord; ++t) CHECK(F.pow(g, t) != F.one());
    }
    // Trace lands in the subfield and is F_{2^d}-linear over the subfield.
    for (uint32_t x = 0; x < 64; ++x) {
        CHECK(F.in_subfield(F.trace(x, 6, 2), 2));
        CHECK(F.in_subfield(F.trace(x, 6, 3), 3));
    }
}

TEST_CASE("exact linear algebra over GF") {
    GFTable F(3, 1);
    auto el = [&](uint32_t v) { return GFEl{v, &F}; };
    GFMat m = gf_zeros(3, 3, &F);
    m(0, 0) = el(1); m(0, 1) = el(1); m(0, 2) = el(0);
    m(1, 0) = el(0); m(1, 1) = el(1); m(1, 2) = el(1);
    m(2, 0) = el(1); m(2, 1) = el(0); m(2, 2) = el(1);
    CHECK(gf_rank(m) == 3); // det = 2 in F_3
    CHECK(gf_invertible(m));

    // Rank-deficient matrix: kernel basis actually annihilates.
    GFMat s = gf_zeros(2, 3, &F);
    s(0, 0) = el(1); s(0, 1) = el(0); s(0, 2) = el(2);
    s(1, 0) = el(0); s(1, 1) = el(1); s(1, 2) = el(1);
    GFMat K = gf_kernel(s, &F);
    CHECK(K.cols() == 1);
    GFMat prod = s * K;
    for (Eigen::Index r = 0; r < prod.rows(); ++r)
        for (Eigen::Index c = 0; c < prod.cols(); ++c) CHECK(prod(r, c).is_zero());

    // Solve round-trip.
    GFMat b = gf_zeros(3, 1, &F);
    b(0, 0) = el(2); b(1, 0) = el(1); b(2, 0) = el(2);
    auto x = gf_solve(m, b, &F);
    REQUIRE(x.has_value());
    GFMat mx = m * *x;
    for (Eigen::Index r = 0; r < 3; ++r) CHECK(mx(r, 0) == b(r, 0));
}
