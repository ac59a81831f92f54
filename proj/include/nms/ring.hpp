#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "nms/errors.hpp"

namespace nms {

// 128-bit integers keep coordinates of multi-million-letter words exact.
using Int = __int128;

std::string to_string(Int v);

// lambda_m = (m + sqrt(m^2+4))/2, the inflation multiplier of the family m.
inline double lambda(int m) {
    return (m + std::sqrt(static_cast<double>(m) * m + 4.0)) / 2.0;
}

// Algebraic conjugate lambda_m' = (m - sqrt(m^2+4))/2, always in (-1, 0).
inline double lambda_conj(int m) {
    return (m - std::sqrt(static_cast<double>(m) * m + 4.0)) / 2.0;
}

// Sign of t + b*sqrt(D) for integers t, b and non-square D > 0. Exact.
int sign_with_sqrt(Int t, Int b, Int D);

// Sign of p + q*lambda_m (exact) and of p + q*lambda_m' (exact).
int sign_value(Int p, Int q, int m);
int sign_conj(Int p, Int q, int m);

// Element p + q*lambda_m of Z[lambda_m]. Multiplication closes via the
// minimal polynomial lambda^2 = m*lambda + 1, so p and q stay integers.
struct RingElt {
    Int p{0};
    Int q{0};
    int m{1};

    RingElt() = default;
    RingElt(Int p_, Int q_, int m_) : p(p_), q(q_), m(m_) {}

    static RingElt zero(int m) { return {0, 0, m}; }
    static RingElt one(int m) { return {1, 0, m}; }
    static RingElt lambda(int m) { return {0, 1, m}; }

    // Lossy evaluations; all combinatorics stays on (p, q).
    double value() const { return static_cast<double>(p) + static_cast<double>(q) * nms::lambda(m); }
    double star() const { return static_cast<double>(p) + static_cast<double>(q) * lambda_conj(m); }

    bool operator==(const RingElt& o) const { return p == o.p && q == o.q && m == o.m; }
    bool operator!=(const RingElt& o) const { return !(*this == o); }
};

inline void require_same_family(const RingElt& x, const RingElt& y) {
    if (x.m != y.m)
        throw FamilyMismatch("ring elements from different noble means families: m=" +
                             std::to_string(x.m) + " vs m=" + std::to_string(y.m));
}

inline RingElt operator+(const RingElt& x, const RingElt& y) {
    require_same_family(x, y);
    return {x.p + y.p, x.q + y.q, x.m};
}

inline RingElt operator-(const RingElt& x, const RingElt& y) {
    require_same_family(x, y);
    return {x.p - y.p, x.q - y.q, x.m};
}

inline RingElt operator-(const RingElt& x) { return {-x.p, -x.q, x.m}; }

// (p1 + q1 L)(p2 + q2 L) = p1 p2 + q1 q2 + (p1 q2 + q1 p2 + m q1 q2) L.
inline RingElt operator*(const RingElt& x, const RingElt& y) {
    require_same_family(x, y);
    return {x.p * y.p + x.q * y.q, x.p * y.q + x.q * y.p + x.m * x.q * y.q, x.m};
}

// lambda_m^n as an exact ring element, n >= 0.
RingElt pow_lambda(int m, int n);

std::string to_string(const RingElt& x);

// A point of the lattice L_m = {(x, x') : x in Z[lambda_m]}.
struct LatticePoint {
    double physical;
    double internal;
    RingElt source;

    explicit LatticePoint(const RingElt& x)
        : physical(x.value()), internal(x.star()), source(x) {}
};

}  // namespace nms
