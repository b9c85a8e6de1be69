/**
 * @file qbinom.hpp
 * @brief Balanced quantum integers, factorials and binomials.
 *
 * All quantities are taken in the variable v_w = v^weight, so
 * [n]_w = v^{-w(n-1)} + v^{-w(n-3)} + ... + v^{w(n-1)}.
 */
#pragma once

#include "qhall/qscalar.hpp"

namespace qhall {

inline QScalar quantum_int(unsigned n, unsigned weight, unsigned q) {
    QScalar s = QScalar::zero(q);
    for (unsigned j = 0; j < n; ++j)
        s += QScalar::v_power(static_cast<long>(weight) * (2L * j - (long(n) - 1)), q);
    return s;
}

inline QScalar quantum_factorial(unsigned n, unsigned weight, unsigned q) {
    QScalar r = QScalar::one(q);
    for (unsigned k = 2; k <= n; ++k) r *= quantum_int(k, weight, q);
    return r;
}

inline QScalar quantum_binomial(unsigned n, unsigned k, unsigned weight, unsigned q) {
    if (k > n) throw std::domain_error("quantum_binomial: k > n");
    return quantum_factorial(n, weight, q) /
           (quantum_factorial(k, weight, q) * quantum_factorial(n - k, weight, q));
}

} // namespace qhall
