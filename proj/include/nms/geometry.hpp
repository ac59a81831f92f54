#pragma once

#include <string>
#include <vector>

#include "nms/ring.hpp"
#include "nms/subst.hpp"

namespace nms {

// Left endpoint of one letter interval: a spans lambda_m, b spans 1.
struct ControlPoint {
    RingElt pos;
    char letter;
};

struct ControlPointSet {
    int m = 1;
    std::vector<ControlPoint> points;
    RingElt extent;  // coordinate just past the last interval

    std::size_t size() const { return points.size(); }
};

// Geometric realisation of a word: cumulative interval lengths in Z[lambda_m],
// exact. If the word carries an origin marker, the marked letter sits at 0;
// otherwise the first letter does.
ControlPointSet realize(const Word& w, int m);

struct LiftedPoint {
    double physical;
    double internal;
    char letter;
};

// Star map into internal space, point by point.
std::vector<LiftedPoint> lift(const ControlPointSet& ps);

// Exact internal-space bound (a + b*lambda_m') / den with open/closed flag.
struct InternalBound {
    Int a = 0;
    Int b = 0;
    long long den = 1;
    bool closed = true;

    double value(int m) const;
};

// Window in internal space. Generic windows (0 < i < m) are closed intervals
// i*tau_m + [lambda', 1]; the singular ones (i = 0 and i = m) are half-open,
// distinguished by the legal two-letter seed; the super window
// [lambda'-1, 1-lambda'] covers every random realisation.
struct Window {
    enum class Kind { Generic, Singular, Super };

    Kind kind = Kind::Super;
    int m = 1;
    int i = 0;          // unused for the super window
    std::string seed;   // "aa", "ab" (i=0) or "aa", "ba" (i=m); empty otherwise
    InternalBound lo;
    InternalBound hi;

    // Membership of star(x), decided by exact ring comparisons.
    bool contains(const RingElt& x) const;
    // Membership of the closure [lo, hi] regardless of the open/closed flags.
    bool closure_contains(const RingElt& x) const;

    double lo_value() const { return lo.value(m); }
    double hi_value() const { return hi.value(m); }
};

Window window(int m, int i, const std::string& seed = "aa");
Window super_window(int m);

// sign of (b1 - b2) with both bounds read as exact numbers; > 0 when b1 > b2.
int compare_bounds(const InternalBound& b1, const InternalBound& b2, int m);

// Desk-scale Meyer surrogate: gap statistics of a finite patch. The minimal
// gap certifies uniform discreteness, the maximal gap relative denseness.
struct MeyerReport {
    std::size_t points = 0;
    double min_gap = 0.0;
    double max_gap = 0.0;
    bool uniformly_discrete = false;  // min_gap >= 1 (b interval length)
    bool relatively_dense = false;    // max_gap <= lambda_m
};

MeyerReport meyer_check(const ControlPointSet& ps);

// Lattice points of L_m in a coefficient box, plus the window stack; the data
// behind the strip picture.
struct StripDataset {
    int m = 1;
    std::vector<LatticePoint> lattice;  // all p + q*lambda with |p|,|q| <= pq_max
    std::vector<Window> windows;        // W_{m,0..m} (seed "aa") and W_m
};

StripDataset strip_export(int m, int pq_max);

// Histogram of internal coordinates split by letter tag.
struct Histogram {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<long long> count_a;
    std::vector<long long> count_b;

    long long total() const;
    double a_fraction() const;
};

Histogram histogram(const std::vector<LiftedPoint>& pts, int bins, double lo, double hi);

}  // namespace nms
