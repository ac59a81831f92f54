#include "nms/ring.hpp"

#include <algorithm>

namespace nms {

std::string to_string(Int v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

int sign_with_sqrt(Int t, Int b, Int D) {
    if (b == 0) return t > 0 ? 1 : (t < 0 ? -1 : 0);
    if (t >= 0 && b > 0) return 1;
    if (t <= 0 && b < 0) return -1;
    // t and b have opposite signs; compare t^2 against b^2 D. D is never a
    // perfect square here (m^2+4 is square only for m=0), so equality would
    // force t = b = 0, excluded above.
    Int t2 = t * t;
    Int bd = b * b * D;
    if (t > 0) return t2 > bd ? 1 : -1;
    return t2 < bd ? 1 : -1;
}

int sign_value(Int p, Int q, int m) {
    // 2(p + q*lambda) = 2p + qm + q*sqrt(m^2+4)
    return sign_with_sqrt(2 * p + q * m, q, static_cast<Int>(m) * m + 4);
}

int sign_conj(Int p, Int q, int m) {
    // 2(p + q*lambda') = 2p + qm - q*sqrt(m^2+4)
    return sign_with_sqrt(2 * p + q * m, -q, static_cast<Int>(m) * m + 4);
}

RingElt pow_lambda(int m, int n) {
    RingElt acc = RingElt::one(m);
    const RingElt lam = RingElt::lambda(m);
    for (int i = 0; i < n; ++i) acc = acc * lam;
    return acc;
}

std::string to_string(const RingElt& x) {
    return to_string(x.p) + (x.q < 0 ? "" : "+") + to_string(x.q) + "*lambda_" + std::to_string(x.m);
}

}  // namespace nms
