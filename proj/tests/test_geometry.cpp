#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nms/geometry.hpp"
#include "nms/subst.hpp"

using namespace nms;

TEST_CASE("realize places letter intervals end to end") {
    // a spans lambda, b spans 1; no origin marker means the word starts at 0
    const auto ab = realize(Word{"ab"}, 1);
    REQUIRE(ab.size() == 2);
    CHECK(ab.points[0].letter == 'a');
    CHECK(ab.points[0].pos == RingElt::zero(1));
    CHECK(ab.points[1].letter == 'b');
    CHECK(ab.points[1].pos == RingElt::lambda(1));
    CHECK(ab.extent == RingElt{1, 1, 1});

    const auto ba = realize(Word{"ba"}, 1);
    CHECK(ba.points[1].pos == RingElt{1, 0, 1});
    CHECK(ba.extent == RingElt{1, 1, 1});
}

TEST_CASE("origin marker shifts the marked letter to zero") {
    const auto ps = realize(Word{"aba", 2}, 1);
    CHECK(ps.points[2].pos == RingElt::zero(1));
    CHECK(ps.points[1].pos == RingElt{-1, 0, 1});   // the b spanning [-1, 0)
    CHECK(ps.points[0].pos == RingElt{-1, -1, 1});  // -1 - lambda
}

TEST_CASE("consecutive gaps are exactly lambda or 1") {
    RandomSubst rs(2, {0.3, 0.3, 0.4}, 99);
    const Word w = rs.iterate(Word{"b"}, 8);
    const auto ps = realize(w, 2);
    for (std::size_t j = 0; j + 1 < ps.size(); ++j) {
        const RingElt gap = ps.points[j + 1].pos - ps.points[j].pos;
        if (ps.points[j].letter == 'a')
            CHECK(gap == RingElt::lambda(2));
        else
            CHECK(gap == RingElt{1, 0, 2});
    }
}

TEST_CASE("realisation of an image has lambda times the extent") {
    // inflation compatibility: realising zeta(w) stretches the support by lambda
    for (int m = 1; m <= 2; ++m) {
        for (int i = 0; i <= m; ++i) {
            const Word w{"abab"};
            const auto before = realize(w, m);
            const auto after = realize(apply_nms(NmsRule(m, i), w), m);
            CHECK(after.extent == before.extent * RingElt::lambda(m));
        }
    }
}

TEST_CASE("lift pairs each point with its star image") {
    const auto ps = realize(Word{"aab"}, 1);
    const auto pts = lift(ps);
    REQUIRE(pts.size() == 3);
    for (std::size_t j = 0; j < pts.size(); ++j) {
        CHECK(pts[j].physical == doctest::Approx(ps.points[j].pos.value()));
        CHECK(pts[j].internal == doctest::Approx(ps.points[j].pos.star()));
        CHECK(pts[j].letter == ps.points[j].letter);
    }
}

TEST_CASE("window endpoints match the closed-form values") {
    // generic window i*tau + [lambda', 1], tau = -(lambda' + 1)/m
    const double lp2 = lambda_conj(2);
    const double tau2 = -(lp2 + 1.0) / 2.0;
    const Window w21 = window(2, 1);
    CHECK(w21.lo_value() == doctest::Approx(tau2 + lp2).epsilon(1e-12));
    CHECK(w21.hi_value() == doctest::Approx(tau2 + 1.0).epsilon(1e-12));
    CHECK(w21.lo.closed);
    CHECK(w21.hi.closed);

    const Window sup = super_window(1);
    CHECK(sup.lo_value() == doctest::Approx(lambda_conj(1) - 1.0).epsilon(1e-12));
    CHECK(sup.hi_value() == doctest::Approx(1.0 - lambda_conj(1)).epsilon(1e-12));
    CHECK(sup.hi_value() == doctest::Approx(1.6180339887).epsilon(1e-9));
}

TEST_CASE("singular windows are half open and seed dependent") {
    const Window aa0 = window(1, 0, "aa");
    const Window ab0 = window(1, 0, "ab");
    CHECK(aa0.lo.closed);
    CHECK_FALSE(aa0.hi.closed);
    CHECK_FALSE(ab0.lo.closed);
    CHECK(ab0.hi.closed);
    // same closure, opposite endpoints included
    CHECK(compare_bounds(aa0.lo, ab0.lo, 1) == 0);
    CHECK(compare_bounds(aa0.hi, ab0.hi, 1) == 0);
    CHECK(aa0.contains(RingElt{0, 1, 1}));        // star = lambda' = lower endpoint
    CHECK_FALSE(ab0.contains(RingElt{0, 1, 1}));
    CHECK(ab0.contains(RingElt{1, 0, 1}));        // star = 1 = upper endpoint
    CHECK_FALSE(aa0.contains(RingElt{1, 0, 1}));

    const Window aam = window(1, 1, "aa");
    const Window bam = window(1, 1, "ba");
    CHECK_FALSE(aam.lo.closed);
    CHECK(aam.hi.closed);
    CHECK(bam.lo.closed);
    CHECK_FALSE(bam.hi.closed);
    CHECK(aam.lo_value() == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(aam.hi_value() == doctest::Approx(-lambda_conj(1)).epsilon(1e-12));
}

TEST_CASE("window membership agrees with floating point away from endpoints") {
    const Window w = window(2, 1);
    for (long long p = -6; p <= 6; ++p) {
        for (long long q = -6; q <= 6; ++q) {
            const RingElt x{p, q, 2};
            const double s = x.star();
            if (std::abs(s - w.lo_value()) < 1e-9 || std::abs(s - w.hi_value()) < 1e-9) continue;
            CHECK(w.contains(x) == (s > w.lo_value() && s < w.hi_value()));
        }
    }
}

TEST_CASE("the union of letter windows sits strictly inside the super window") {
    for (int m = 1; m <= 3; ++m) {
        const Window sup = super_window(m);
        for (int i = 0; i <= m; ++i) {
            const Window w = window(m, i);
            CHECK(compare_bounds(w.lo, sup.lo, m) > 0);
            CHECK(compare_bounds(sup.hi, w.hi, m) > 0);
        }
        // the union does not exhaust the super window: merge the (overlapping,
        // already i-ordered) intervals and compare Lebesgue measures
        // (windows shift left as i grows, so walk i downward for ascending lo)
        double union_len = 0.0, cur_lo = window(m, m).lo_value(), cur_hi = window(m, m).hi_value();
        for (int i = m - 1; i >= 0; --i) {
            const Window w = window(m, i);
            if (w.lo_value() <= cur_hi) {
                cur_hi = std::max(cur_hi, w.hi_value());
            } else {
                union_len += cur_hi - cur_lo;
                cur_lo = w.lo_value();
                cur_hi = w.hi_value();
            }
        }
        union_len += cur_hi - cur_lo;
        const double super_len = sup.hi_value() - sup.lo_value();
        CHECK(union_len < super_len - 1e-9);
    }
}

TEST_CASE("random realisations stay inside the super window") {
    const Window sup = super_window(1);
    for (std::uint64_t s = 1; s <= 5; ++s) {
        RandomSubst rs(1, {0.5, 0.5}, s);
        const auto ps = realize(rs.iterate(Word{"b"}, 18), 1);
        for (const auto& cp : ps.points) CHECK(sup.contains(cp.pos));
    }
}

TEST_CASE("deterministic control points stay inside one singular window closure") {
    // the fixed rule a -> ab projects into the closure of W_{1,1} for seed aa
    const Window w = window(1, 1, "aa");
    Word word{"b"};
    for (int k = 0; k < 18; ++k) word = apply_nms(NmsRule(1, 1), word);
    const auto ps = realize(word, 1);
    CHECK(ps.size() > 2500);
    for (const auto& cp : ps.points) CHECK(w.closure_contains(cp.pos));
}

TEST_CASE("gap statistics of a large random patch") {
    RandomSubst rs(1, {0.5, 0.5}, 7);
    const auto ps = realize(rs.iterate(Word{"b"}, 20), 1);
    const auto rep = meyer_check(ps);
    CHECK(rep.points == ps.size());
    CHECK(rep.min_gap == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.max_gap == doctest::Approx(lambda(1)).epsilon(1e-12));
    CHECK(rep.uniformly_discrete);
    CHECK(rep.relatively_dense);
}

TEST_CASE("strip export carries the lattice box and the window stack") {
    const auto ds = strip_export(2, 3);
    CHECK(ds.m == 2);
    CHECK(ds.lattice.size() == 49);  // (2*3+1)^2
    CHECK(ds.windows.size() == 4);   // W_{2,0}, W_{2,1}, W_{2,2}, super
    CHECK(ds.windows.back().kind == Window::Kind::Super);
    for (const auto& pt : ds.lattice) {
        CHECK(pt.physical == doctest::Approx(pt.source.value()));
        CHECK(pt.internal == doctest::Approx(pt.source.star()));
    }
}

TEST_CASE("histogram splits counts by letter and reports the a fraction") {
    std::vector<LiftedPoint> pts{
        {0.0, -0.5, 'a'}, {1.0, 0.25, 'a'}, {2.0, 0.25, 'b'}, {3.0, 0.75, 'a'}};
    const auto h = histogram(pts, 4, -1.0, 1.0);
    CHECK(h.total() == 4);
    CHECK(h.count_a[1] == 1);
    CHECK(h.count_a[2] == 1);
    CHECK(h.count_b[2] == 1);
    CHECK(h.count_a[3] == 1);
    CHECK(h.a_fraction() == doctest::Approx(0.75));
    // out-of-range points are dropped
    const auto h2 = histogram({{0.0, 5.0, 'a'}}, 4, -1.0, 1.0);
    CHECK(h2.total() == 0);
}

TEST_CASE("histogram of a long realisation matches the letter frequency") {
    RandomSubst rs(1, {0.5, 0.5}, 31);
    const auto pts = lift(realize(rs.iterate(Word{"b"}, 22), 1));
    const auto h = histogram(pts, 40, -2.0, 2.0);
    CHECK(h.total() == static_cast<long long>(pts.size()));
    CHECK(h.a_fraction() == doctest::Approx(0.618).epsilon(0.01));
}
