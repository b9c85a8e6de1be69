#include <doctest.h>

#include "qhall/config.hpp"
#include "qhall/freealg.hpp"

using namespace qhall;

namespace {

RootDatum make(const std::string& json) { return build_root_datum(parse_quiver_json(json)); }

const char* A2 = R"({"n":2,"arrows":[[1,2]],"d":{"1,2":1,"2,1":1},"f":[1,1]})";
const char* B2 = R"({"n":2,"arrows":[[1,2]],"d":{"1,2":1,"2,1":2},"f":[2,1]})";

} // namespace

TEST_CASE("free product is concatenation") {
    RootDatum rd = make(A2);
    WordContext ctx{&rd, 2, 8};
    CHECK(free_mul(free_basis(ctx, {0}), free_basis(ctx, {1})) == free_basis(ctx, {0, 1}));
    FreeElement x = free_basis(ctx, {0, 1});
    CHECK(free_mul(free_one(ctx), x) == x);
    FreeElement sum = free_basis(ctx, {0}) + free_basis(ctx, {1});
    CHECK(free_mul(sum, free_basis(ctx, {0})) ==
          free_basis(ctx, {0, 0}) + free_basis(ctx, {1, 0}));
}

TEST_CASE("comultiplication of monomials") {
    RootDatum rd = make(A2);
    WordContext ctx{&rd, 2, 8};
    // Delta(x_1^2) = x_1^2 (x) 1 + v_1 [2]_1 x_1 (x) x_1 + 1 (x) x_1^2.
    FreeTensor d = free_comul(free_basis(ctx, {0, 0}));
    CHECK(d.coeff({0, 0}, {}) == QScalar::one(2));
    CHECK(d.coeff({}, {0, 0}) == QScalar::one(2));
    CHECK(d.coeff({0}, {0}) == ctx.v(1) * quantum_int(2, 1, 2));
    CHECK(d.terms.size() == 3);

    // Generators are primitive.
    FreeTensor dg = free_comul(free_basis(ctx, {1}));
    CHECK(dg.terms.size() == 2);

    // Recursive vs closed form on x_{(1,2)}.
    CHECK(free_comul(free_basis(ctx, {0, 1})) == free_comul_closed(ctx, {0, 1}, {1, 1}));
}

TEST_CASE("recursive and closed comultiplication agree (A2/B2, sum a <= 4)") {
    for (const char* qv : {A2, B2}) {
        RootDatum rd = make(qv);
        WordContext ctx{&rd, 2, 8};
        for (int a0 = 0; a0 <= 4; ++a0)
            for (int a1 = 0; a0 + a1 <= 4; ++a1) {
                FWord mono;
                for (int t = 0; t < a0; ++t) mono.push_back(0);
                for (int t = 0; t < a1; ++t) mono.push_back(1);
                CHECK(free_comul(free_basis(ctx, mono)) ==
                      free_comul_closed(ctx, {0, 1}, {a0, a1}));
            }
    }
}

TEST_CASE("shuffle product and deconcatenation") {
    RootDatum rd = make(A2);
    WordContext ctx{&rd, 2, 8};
    ShuffleElement p = shuffle_mul(shuffle_basis(ctx, {0}), shuffle_basis(ctx, {1}));
    CHECK(p.coeff({0, 1}) == QScalar::one(2));
    CHECK(p.coeff({1, 0}) == ctx.v(-1));
    CHECK(p.terms.size() == 2);

    ShuffleElement y = shuffle_basis(ctx, {0, 1});
    CHECK(shuffle_mul(shuffle_basis(ctx, {}), y) == y);

    ShuffleTensor mu = shuffle_comul(y);
    CHECK(mu.terms.size() == 3);
    CHECK(mu.terms.count({{}, {0, 1}}) == 1);
    CHECK(mu.terms.count({{0}, {1}}) == 1);
    CHECK(mu.terms.count({{0, 1}, {}}) == 1);
}

TEST_CASE("shuffle associativity and unit on short words") {
    RootDatum rd = make(A2);
    WordContext ctx{&rd, 2, 12};
    std::vector<FWord> words;
    for (int len = 0; len <= 3; ++len) {
        std::vector<FWord> level{{}};
        for (int t = 0; t < len; ++t) {
            std::vector<FWord> next;
            for (const FWord& w : level)
                for (int j = 0; j < 2; ++j) {
                    FWord e = w;
                    e.push_back(j);
                    next.push_back(e);
                }
            level = next;
        }
        if (len > 0) words.insert(words.end(), level.begin(), level.end());
    }
    // associativity on a sample grid of triples of length <= 3 words
    for (size_t i = 0; i < words.size(); i += 3)
        for (size_t j = 0; j < words.size(); j += 4)
            for (size_t k = 0; k < words.size(); k += 5) {
                ShuffleElement a = shuffle_basis(ctx, words[i]);
                ShuffleElement b = shuffle_basis(ctx, words[j]);
                ShuffleElement c = shuffle_basis(ctx, words[k]);
                CHECK(shuffle_mul(shuffle_mul(a, b), c) == shuffle_mul(a, shuffle_mul(b, c)));
            }
    for (const FWord& w : words)
        CHECK(shuffle_mul(shuffle_basis(ctx, {}), shuffle_basis(ctx, w)) ==
              shuffle_basis(ctx, w));
}

TEST_CASE("evaluation pairing and product/coproduct adjointness") {
    RootDatum rd = make(A2);
    WordContext ctx{&rd, 2, 8};
    CHECK(eval_pairing(shuffle_basis(ctx, {0, 1}), free_basis(ctx, {0, 1})) == QScalar::one(2));
    CHECK(eval_pairing(shuffle_basis(ctx, {0, 1}), free_basis(ctx, {1, 0})).is_zero());

    // <y_{u1} y_{u2}, x> = <y_{u1} (x) y_{u2}, Delta_F(x)> for words up to length 3.
    std::vector<FWord> words{{}, {0}, {1}, {0, 1}, {1, 0}, {0, 0}, {1, 1}, {0, 1, 0}, {1, 0, 1}};
    for (const FWord& u1 : words)
        for (const FWord& u2 : words)
            for (const FWord& x : words) {
                if (u1.size() + u2.size() != x.size()) continue;
                ShuffleTensor yy{&ctx, {}};
                yy.add_term(u1, u2, QScalar::one(2));
                QScalar lhs = eval_pairing(shuffle_mul(shuffle_basis(ctx, u1),
                                                       shuffle_basis(ctx, u2)),
                                           free_basis(ctx, x));
                QScalar rhs = eval_pairing_tensor(yy, free_comul(free_basis(ctx, x)));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("Serre elements") {
    RootDatum rd = make(A2);
    WordContext ctx{&rd, 2, 8};
    // x_1^2 x_2 / [2]_1 - x_1 x_2 x_1 + x_2 x_1^2 / [2]_1.
    FreeElement s = serre_element(ctx, 0, 1);
    QScalar inv2 = QScalar::one(2) / quantum_int(2, 1, 2);
    CHECK(s.coeff({0, 0, 1}) == inv2);
    CHECK(s.coeff({0, 1, 0}) == -QScalar::one(2));
    CHECK(s.coeff({1, 0, 0}) == inv2);
    CHECK(s.terms.size() == 3);
    CHECK_THROWS_AS(serre_element(ctx, 1, 1), input_error);

    // c_{21} = -2 in B2: four terms with [2]_2, [3]_2 denominators.
    RootDatum b2 = make(B2);
    WordContext bctx{&b2, 2, 8};
    FreeElement sb = serre_element(bctx, 1, 0);
    CHECK(sb.terms.size() == 4);
    // r = 2 term: +x_2^{[2]} x_1 x_2^{[1]}, weight f_2 = 1 divided powers.
    CHECK(sb.coeff({1, 1, 0, 1}) == QScalar::one(2) / quantum_factorial(2, 1, 2));
    // r = 3 term: -x_2^{[3]} x_1.
    CHECK(sb.coeff({1, 1, 1, 0}) == -(QScalar::one(2) / quantum_factorial(3, 1, 2)));

    // c_{ij} = 0 case: commutator, in A1 x A1.
    RootDatum a11 = build_root_datum(
        parse_quiver_json(R"({"n":2,"arrows":[],"d":{},"f":[1,1]})"));
    WordContext actx{&a11, 2, 8};
    FreeElement c = serre_element(actx, 0, 1);
    CHECK(c.coeff({0, 1}) == QScalar::one(2));
    CHECK(c.coeff({1, 0}) == -QScalar::one(2));
    CHECK(c.terms.size() == 2);
}

TEST_CASE("word cap guard") {
    RootDatum rd = make(A2);
    WordContext ctx{&rd, 2, 3};
    CHECK_THROWS_AS(free_mul(free_basis(ctx, {0, 1}), free_basis(ctx, {0, 1})), guard_exceeded);
}
