#include <doctest.h>

#include "qhall/config.hpp"
#include "qhall/hall.hpp"

using namespace qhall;

namespace {

RootDatum make(const std::string& json) { return build_root_datum(parse_quiver_json(json)); }

const char* A2 = R"({"n":2,"arrows":[[1,2]],"d":{"1,2":1,"2,1":1},"f":[1,1]})";
const char* A3 = R"({"n":3,"arrows":[[1,2],[2,3]],"d":{"1,2":1,"2,1":1,"2,3":1,"3,2":1},"f":[1,1,1]})";

// A2 canonical indices: 0 = S2, 1 = P1, 2 = S1.
Mult S1() { return {0, 0, 1}; }
Mult S2() { return {1, 0, 0}; }
Mult P1() { return {0, 1, 0}; }
Mult SS() { return {1, 0, 1}; }

} // namespace

TEST_CASE("hall multiplication on A2 at q = 2") {
    RootDatum rd = make(A2);
    RepCategory cat(rd, 2);
    QScalar vinv = cat.vq(-1);

    HallElement prod = hall_mul(hall_basis(cat, S1()), hall_basis(cat, S2()));
    CHECK(prod.terms.size() == 2);
    CHECK(prod.coeff(P1()) == vinv);
    CHECK(prod.coeff(SS()) == vinv);

    HallElement rev = hall_mul(hall_basis(cat, S2()), hall_basis(cat, S1()));
    CHECK(rev.terms.size() == 1);
    CHECK(rev.coeff(SS()) == QScalar::one(2));

    // [0] is a two-sided unit.
    HallElement x = prod;
    CHECK(hall_mul(hall_unit(cat), x) == x);
    CHECK(hall_mul(x, hall_unit(cat)) == x);
}

TEST_CASE("hall comultiplication on A2") {
    RootDatum rd = make(A2);
    Mult zero = zero_class(3);
    for (unsigned q : {2u, 3u}) {
        RepCategory cat(rd, q);
        HallTensor d = hall_comul(hall_basis(cat, P1()));
        CHECK(d.coeff(P1(), zero) == QScalar::one(q));
        CHECK(d.coeff(zero, P1()) == QScalar::one(q));
        // v^{-1} (q-1) [S1] (x) [S2]
        CHECK(d.coeff(S1(), S2()) == cat.vq(-1) * QScalar::integer(q - 1, q));
        CHECK(d.terms.size() == 3);

        // Simples are primitive.
        HallTensor ds = hall_comul(hall_basis(cat, S1()));
        CHECK(ds.terms.size() == 2);
        CHECK(ds.coeff(S1(), zero) == QScalar::one(q));
        CHECK(ds.coeff(zero, S1()) == QScalar::one(q));

        // Delta[0] = [0] (x) [0].
        HallTensor d0 = hall_comul(hall_unit(cat));
        CHECK(d0.terms.size() == 1);
        CHECK(d0.coeff(zero, zero) == QScalar::one(q));
    }
}

TEST_CASE("pairing, dual flag, counit") {
    RootDatum rd = make(A2);
    RepCategory cat2(rd, 2);
    CHECK(hall_pairing(hall_basis(cat2, P1()), hall_basis(cat2, P1())) == QScalar::one(2));
    CHECK(hall_pairing(hall_basis(cat2, P1()), hall_basis(cat2, SS())).is_zero());

    RepCategory cat3(rd, 3);
    CHECK(hall_pairing(hall_basis(cat3, S1()), hall_basis(cat3, S1())) ==
          QScalar(Rational(1, 2), Rational(0), 3));

    // dualize is the pairing-induced coordinate change, and is involutive.
    HallElement x = hall_mul(hall_basis(cat3, S1()), hall_basis(cat3, S2()));
    HallElement xd = dualize(x);
    CHECK(xd.dual);
    CHECK(dualize(xd) == x);
    // <dualize(x), y> (evaluation) = (x, y) (form)
    HallElement y = hall_basis(cat3, P1());
    CHECK(hall_pairing(xd, y) == hall_pairing(x, y));

    CHECK(hall_counit(hall_unit(cat2)) == QScalar::one(2));
    CHECK(hall_counit(hall_basis(cat2, P1())).is_zero());
}

TEST_CASE("grading of hall_mul") {
    RootDatum rd = make(A2);
    RepCategory cat(rd, 2);
    HallElement prod = hall_mul(hall_basis(cat, P1()), hall_basis(cat, S1()));
    IntVec want = cat.dim_of(P1()) + cat.dim_of(S1());
    for (const auto& [m, c] : prod.terms) CHECK(cat.dim_of(m) == want);
}

TEST_CASE("associativity on indecomposable triples (A2/A3, q in {2,3})") {
    for (const char* qv : {A2, A3})
        for (unsigned q : {2u, 3u}) {
            RootDatum rd = make(qv);
            RepCategory cat(rd, q);
            for (int i = 0; i < cat.nu(); ++i)
                for (int j = 0; j < cat.nu(); ++j)
                    for (int k = 0; k < cat.nu(); ++k) {
                        Mult a = zero_class(cat.nu()), b = a, c = a;
                        a[static_cast<size_t>(i)] = b[static_cast<size_t>(j)] =
                            c[static_cast<size_t>(k)] = 1;
                        HallElement left = hall_mul(hall_mul(hall_basis(cat, a), hall_basis(cat, b)),
                                                    hall_basis(cat, c));
                        HallElement right = hall_mul(hall_basis(cat, a),
                                                     hall_mul(hall_basis(cat, b), hall_basis(cat, c)));
                        CHECK(left == right);
                    }
        }
}

TEST_CASE("Green compatibility and form adjointness (A2/A3, q in {2,3})") {
    for (const char* qv : {A2, A3})
        for (unsigned q : {2u, 3u}) {
            RootDatum rd = make(qv);
            RepCategory cat(rd, q);
            std::vector<Mult> gens;
            for (int i = 0; i < rd.n; ++i) gens.push_back(cat.simple_power(i, 1));
            // the projective cover of the first simple has the full support root
            IntVec top = cat.ar().proj_dims()[0];
            gens.push_back(zero_class(cat.nu()));
            gens.back()[static_cast<size_t>(cat.ar().canonical_index(top))] = 1;

            for (const Mult& x : gens)
                for (const Mult& y : gens) {
                    HallElement hx = hall_basis(cat, x), hy = hall_basis(cat, y);
                    // Delta(x * y) = Delta(x) * Delta(y) in the twisted square.
                    CHECK(hall_comul(hall_mul(hx, hy)) ==
                          tensor_mul(hall_comul(hx), hall_comul(hy)));
                    // (x (x) y, Delta z) = (x * y, z) for z running over products.
                    HallElement z = hall_mul(hx, hy);
                    for (const auto& [zm, zc] : z.terms) {
                        HallTensor xy{&cat, {}};
                        xy.add_term(x, y, QScalar::one(q));
                        CHECK(tensor_pairing(xy, hall_comul(hall_basis(cat, zm))) ==
                              hall_pairing(hall_mul(hx, hy), hall_basis(cat, zm)));
                    }
                }
        }
}
