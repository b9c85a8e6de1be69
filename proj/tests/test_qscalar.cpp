#include <doctest.h>

#include "qhall/qbinom.hpp"
#include "qhall/qscalar.hpp"

using namespace qhall;

TEST_CASE("field arithmetic in Q(v), v^2 = q") {
    const unsigned q = 2;
    QScalar one = QScalar::one(q);
    QScalar v = QScalar::v_power(1, q);

    CHECK(one * v == v);
    CHECK(v * v == QScalar::integer(2, q));

    // (0 + 1v)^{-1} at q=2 is (1/2)v; independent check: product with v is 1.
    QScalar vinv = v.inverse();
    CHECK(vinv == QScalar(Rational(0), Rational(1, 2), q));
    CHECK(vinv * v == one);

    CHECK_THROWS_AS(QScalar::zero(q).inverse(), std::domain_error);
    CHECK_THROWS_AS(QScalar::one(2) + QScalar::one(3), context_mismatch);

    // Random-ish field axioms at each configured q.
    for (unsigned qq : {2u, 3u, 4u}) {
        QScalar x(Rational(3, 5), Rational(-2, 7), qq);
        QScalar y(Rational(-1, 2), Rational(4, 3), qq);
        QScalar z(Rational(9, 4), Rational(1, 6), qq);
        CHECK((x + y) * z == x * z + y * z);
        CHECK(x * (y * z) == (x * y) * z);
        if (!x.is_zero()) CHECK(x * x.inverse() == QScalar::one(qq));
    }
}

TEST_CASE("perfect-square q folds v into the rational part") {
    QScalar x(Rational(1), Rational(3), 4); // v = 2
    CHECK(x.b() == 0);
    CHECK(x.a() == 7);
    CHECK(QScalar::v_power(-1, 4) == QScalar(Rational(1, 2), Rational(0), 4));
}

TEST_CASE("quantum integers and binomials") {
    const unsigned q = 2;
    // [2] at weight 1: v + v^{-1} = (3/2) v.
    CHECK(quantum_int(2, 1, q) == QScalar(Rational(0), Rational(3, 2), q));
    // binom(n, 0) = 1.
    for (unsigned n = 0; n <= 6; ++n) CHECK(quantum_binomial(n, 0, 2, q) == QScalar::one(q));
    // binom(3,1) = [3] = v^2 + 1 + v^{-2}.
    QScalar three = QScalar::v_power(2, q) + QScalar::one(q) + QScalar::v_power(-2, q);
    CHECK(quantum_binomial(3, 1, 1, q) == three);
    CHECK(quantum_int(3, 1, q) == three);

    CHECK_THROWS_AS(quantum_binomial(3, 4, 1, q), std::domain_error);
}

TEST_CASE("Pascal identity, symmetry and factorial recursion") {
    for (unsigned q : {2u, 3u, 4u})
        for (unsigned w = 1; w <= 3; ++w)
            for (unsigned n = 1; n <= 8; ++n) {
                CHECK(quantum_factorial(n, w, q) ==
                      quantum_int(n, w, q) * quantum_factorial(n - 1, w, q));
                for (unsigned k = 1; k <= n; ++k) {
                    QScalar lhs = quantum_binomial(n, k, w, q);
                    // binom(n-1, n) does not occur: that term is zero when k = n.
                    QScalar rhs = QScalar::v_power(static_cast<long>((n - k) * w), q) *
                                  quantum_binomial(n - 1, k - 1, w, q);
                    if (k < n)
                        rhs += QScalar::v_power(-static_cast<long>(k * w), q) *
                               quantum_binomial(n - 1, k, w, q);
                    CHECK(lhs == rhs);
                    CHECK(lhs == quantum_binomial(n, n - k, w, q));
                }
            }
}

TEST_CASE("rendering") {
    QScalar x(Rational(1, 2), Rational(-3, 4), 2);
    CHECK(x.str() == "1/2 - (3/4)*v");
    CHECK(QScalar::v_power(-1, 2).pretty() == "v^-1");
    CHECK(QScalar::v_power(1, 3).pretty() == "v");
    CHECK((-QScalar::one(3)).pretty() == "-1");
}
