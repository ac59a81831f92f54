#include "nms/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace nms {

ControlPointSet realize(const Word& w, int m) {
    ControlPointSet out;
    out.m = m;
    out.points.reserve(w.letters.size());
    RingElt pos = RingElt::zero(m);
    const RingElt lam = RingElt::lambda(m);
    const RingElt one = RingElt::one(m);
    for (char c : w.letters) {
        out.points.push_back({pos, c});
        pos = pos + (c == 'a' ? lam : one);
    }
    out.extent = pos;
    if (w.origin > 0 && static_cast<std::size_t>(w.origin) < w.letters.size()) {
        const RingElt shift = out.points[static_cast<std::size_t>(w.origin)].pos;
        for (auto& pt : out.points) pt.pos = pt.pos - shift;
        out.extent = out.extent - shift;
    }
    return out;
}

std::vector<LiftedPoint> lift(const ControlPointSet& ps) {
    std::vector<LiftedPoint> out;
    out.reserve(ps.points.size());
    for (const auto& pt : ps.points)
        out.push_back({pt.pos.value(), pt.pos.star(), pt.letter});
    return out;
}

double InternalBound::value(int m) const {
    return (static_cast<double>(a) + static_cast<double>(b) * lambda_conj(m)) /
           static_cast<double>(den);
}

namespace {

// sign of (a + b*lambda') / den - (p + q*lambda'), den > 0
int compare_bound_point(const InternalBound& bd, const RingElt& x) {
    const Int d = bd.den;
    return sign_conj(bd.a - d * x.p, bd.b - d * x.q, x.m);
}

}  // namespace

bool Window::contains(const RingElt& x) const {
    const int lo_cmp = compare_bound_point(lo, x);  // lo - x
    const int hi_cmp = compare_bound_point(hi, x);  // hi - x
    if (lo_cmp > 0 || hi_cmp < 0) return false;
    if (lo_cmp == 0 && !lo.closed) return false;
    if (hi_cmp == 0 && !hi.closed) return false;
    return true;
}

bool Window::closure_contains(const RingElt& x) const {
    return compare_bound_point(lo, x) <= 0 && compare_bound_point(hi, x) >= 0;
}

int compare_bounds(const InternalBound& b1, const InternalBound& b2, int m) {
    // (a1 + b1 L')/d1 - (a2 + b2 L')/d2, d1 d2 > 0
    return sign_conj(b1.a * b2.den - b2.a * b1.den, b1.b * b2.den - b2.b * b1.den, m);
}

Window window(int m, int i, const std::string& seed) {
    if (m < 1 || i < 0 || i > m) throw ConfigError("window: need 0 <= i <= m");
    Window w;
    w.m = m;
    w.i = i;
    if (i == 0) {
        w.kind = Window::Kind::Singular;
        w.seed = seed;
        if (seed == "aa") {
            w.lo = {0, 1, 1, true};   // [lambda', 1)
            w.hi = {1, 0, 1, false};
        } else if (seed == "ab") {
            w.lo = {0, 1, 1, false};  // (lambda', 1]
            w.hi = {1, 0, 1, true};
        } else {
            throw ConfigError("window: i=0 needs seed \"aa\" or \"ab\"");
        }
    } else if (i == m) {
        w.kind = Window::Kind::Singular;
        w.seed = seed;
        if (seed == "aa") {
            w.lo = {-1, 0, 1, false};  // (-1, -lambda']
            w.hi = {0, -1, 1, true};
        } else if (seed == "ba") {
            w.lo = {-1, 0, 1, true};   // [-1, -lambda')
            w.hi = {0, -1, 1, false};
        } else {
            throw ConfigError("window: i=m needs seed \"aa\" or \"ba\"");
        }
    } else {
        // i*tau + [lambda', 1] with tau = -(lambda'+1)/m
        w.kind = Window::Kind::Generic;
        w.lo = {-i, m - i, m, true};
        w.hi = {m - i, -i, m, true};
    }
    return w;
}

Window super_window(int m) {
    Window w;
    w.kind = Window::Kind::Super;
    w.m = m;
    w.lo = {-1, 1, 1, true};  // [lambda'-1, 1-lambda']
    w.hi = {1, -1, 1, true};
    return w;
}

MeyerReport meyer_check(const ControlPointSet& ps) {
    MeyerReport rep;
    rep.points = ps.points.size();
    if (ps.points.size() < 2) return rep;
    double min_gap = 0.0, max_gap = 0.0;
    for (std::size_t j = 1; j < ps.points.size(); ++j) {
        const double gap = ps.points[j].pos.value() - ps.points[j - 1].pos.value();
        if (j == 1 || gap < min_gap) min_gap = gap;
        if (j == 1 || gap > max_gap) max_gap = gap;
    }
    rep.min_gap = min_gap;
    rep.max_gap = max_gap;
    rep.uniformly_discrete = min_gap >= 1.0 - 1e-9;
    rep.relatively_dense = max_gap <= lambda(ps.m) + 1e-9;
    return rep;
}

StripDataset strip_export(int m, int pq_max) {
    StripDataset out;
    out.m = m;
    for (int p = -pq_max; p <= pq_max; ++p)
        for (int q = -pq_max; q <= pq_max; ++q)
            out.lattice.emplace_back(RingElt{p, q, m});
    for (int i = 0; i <= m; ++i) out.windows.push_back(window(m, i));
    out.windows.push_back(super_window(m));
    return out;
}

Histogram histogram(const std::vector<LiftedPoint>& pts, int bins, double lo, double hi) {
    if (bins < 1 || !(hi > lo)) throw ConfigError("histogram: bad bins or bounds");
    Histogram h;
    h.lo = lo;
    h.hi = hi;
    h.count_a.assign(static_cast<std::size_t>(bins), 0);
    h.count_b.assign(static_cast<std::size_t>(bins), 0);
    const double scale = bins / (hi - lo);
    for (const auto& pt : pts) {
        const double t = (pt.internal - lo) * scale;
        if (t < 0.0 || t >= static_cast<double>(bins)) continue;
        const auto bin = static_cast<std::size_t>(t);
        (pt.letter == 'a' ? h.count_a : h.count_b)[bin]++;
    }
    return h;
}

long long Histogram::total() const {
    long long t = 0;
    for (std::size_t j = 0; j < count_a.size(); ++j) t += count_a[j] + count_b[j];
    return t;
}

double Histogram::a_fraction() const {
    long long a = 0;
    for (long long c : count_a) a += c;
    const long long t = total();
    return t == 0 ? 0.0 : static_cast<double>(a) / static_cast<double>(t);
}

}  // namespace nms
