#include <doctest.h>

#include "qhall/config.hpp"
#include "qhall/root_datum.hpp"

using namespace qhall;

namespace {

QuiverSpec a2_spec() {
    QuiverSpec s;
    s.n = 2;
    s.arrows = {{0, 1}};
    s.d = IntMat::Zero(2, 2);
    s.d(0, 1) = s.d(1, 0) = 1;
    s.f = IntVec::Ones(2);
    return s;
}

QuiverSpec b2_spec() {
    QuiverSpec s;
    s.n = 2;
    s.arrows = {{0, 1}};
    s.d = IntMat::Zero(2, 2);
    s.d(0, 1) = 1;
    s.d(1, 0) = 2;
    s.f = IntVec(2);
    s.f << 2, 1;
    return s;
}

} // namespace

TEST_CASE("root enumeration by reflection closure") {
    RootDatum a2 = build_root_datum(a2_spec());
    CHECK(a2.nu() == 3);
    IntVec p1(2);
    p1 << 1, 1;
    CHECK(a2.is_positive_root(p1));

    RootDatum b2 = build_root_datum(b2_spec());
    CHECK(b2.nu() == 4);

    QuiverSpec a1;
    a1.n = 1;
    a1.d = IntMat::Zero(1, 1);
    a1.f = IntVec::Ones(1);
    CHECK(build_root_datum(a1).nu() == 1);
}

TEST_CASE("invalid quivers are rejected") {
    QuiverSpec s = a2_spec();
    s.arrows = {{1, 0}};
    CHECK_THROWS_AS(build_root_datum(s), input_error); // orientation against vertex order

    QuiverSpec kron = a2_spec();
    kron.d(0, 1) = kron.d(1, 0) = 2; // Kronecker: indefinite form
    CHECK_THROWS_AS(build_root_datum(kron), input_error);

    QuiverSpec bad = b2_spec();
    bad.f << 1, 1; // not a symmetrizer for this d
    CHECK_THROWS_AS(build_root_datum(bad), input_error);
}

TEST_CASE("Euler and symmetric forms") {
    RootDatum a2 = build_root_datum(a2_spec());
    IntVec e1(2), e2(2), p1(2);
    e1 << 1, 0;
    e2 << 0, 1;
    p1 << 1, 1;
    CHECK(a2.euler(e1, e2) == -1);
    CHECK(a2.euler(e2, e1) == 0);
    CHECK(a2.sym(e1, e2) == -1);
    CHECK(a2.euler(p1, e1) == 1);
    for (int i = 0; i < 2; ++i) {
        IntVec a = IntVec::Zero(2);
        a[i] = 1;
        CHECK(a2.euler(a, a) == a2.f[i]);
    }

    RootDatum b2 = build_root_datum(b2_spec());
    for (int i = 0; i < 2; ++i) {
        IntVec a = IntVec::Zero(2);
        a[i] = 1;
        CHECK(b2.euler(a, a) == b2.f[i]);
    }
}

TEST_CASE("weyl word predicates") {
    RootDatum a2 = build_root_datum(a2_spec());

    auto w0 = a2.word_info({0, 1, 0});
    CHECK(w0.reduced);
    CHECK(w0.longest);

    auto rr = a2.word_info({0, 0});
    CHECK_FALSE(rr.reduced);

    auto empty = a2.word_info({});
    CHECK(empty.reduced);
    CHECK_FALSE(empty.longest);

    // Each simple reflection permutes the other positive roots and negates its own.
    for (int i = 0; i < a2.n; ++i) {
        int negated = 0;
        for (const IntVec& r : a2.positive_roots) {
            IntVec img = a2.reflect(i, r);
            if ((img.array() >= 0).all())
                CHECK(a2.is_positive_root(img));
            else
                ++negated;
        }
        CHECK(negated == 1);
    }
}

TEST_CASE("quiver JSON parsing") {
    RootDatum rd = build_root_datum(parse_quiver_json(
        R"({"n":2,"arrows":[[1,2]],"d":{"1,2":1,"2,1":1},"f":[1,1]})"));
    CHECK(rd.nu() == 3);

    CHECK_THROWS_AS(parse_quiver_json("{oops"), input_error);
    CHECK_THROWS_AS(build_root_datum(parse_quiver_json(
                        R"({"n":2,"arrows":[[1,2]],"d":{"1,2":2,"2,1":2}})")),
                    input_error);
    CHECK_THROWS_AS(load_quiver_file("/nonexistent/quiver.json"), input_error);
}
