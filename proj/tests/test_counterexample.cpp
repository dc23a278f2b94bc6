#include "doctest.h"

#include "ultra/counterexample.hpp"

#include <random>

using namespace ultra;

namespace {

Radius rad(long long num, long long den = 1) { return Radius(Rat(Int(num), Int(den))); }

NormValue nv(Int p, long long num, long long den = 1) {
    return NormValue(std::move(p), Valuation(Rat(Int(num), Int(den))));
}

} // namespace

TEST_CASE("ball diameter is the norm ladder value at or below the radius") {
    PadicSpace q5{5, 24};
    Padic c = Padic::zero(5);
    CHECK(norm_eq(ball_diameter(q5, c, rad(1, 2)), nv(5, 1)));
    CHECK(norm_eq(ball_diameter(q5, c, rad(1, 5)), nv(5, 1)));
    CHECK(norm_eq(ball_diameter(q5, c, rad(7)), nv(5, -1)));

    EisSpace e4{2, 4, 24};
    CHECK(norm_eq(ball_diameter(e4, EisElement::zero(2, 4), rad(17, 20)), nv(2, 1, 4)));

    CHECK_THROWS_AS(ball_diameter(q5, c, rad(0)), radii_invalid);

    // Exact relative defect where the diameter is rational.
    REQUIRE(diameter_gap(5, 1, rad(1, 2)).has_value());
    CHECK(*diameter_gap(5, 1, rad(1, 2)) == Rat(3, 5));
    CHECK(*diameter_gap(5, 1, rad(1, 5)) == Rat(0));
    CHECK(*diameter_gap(2, 4, rad(1, 2)) == Rat(0));
    // 2^(-1/4) is irrational: no rational defect to report.
    CHECK_FALSE(diameter_gap(2, 4, rad(17, 20)).has_value());

    // The diameter never exceeds the radius, and hits it exactly on ladder
    // radii only.
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long long> d(1, 30);
    for (int i = 0; i < 200; ++i) {
        Radius r(Rat(Int(d(rng)), Int(d(rng))));
        NormValue diam = ball_diameter(q5, c, r);
        CHECK(cmp_norm_radius(diam, r) <= 0);
        std::optional<Rat> gap = diameter_gap(5, 1, r);
        REQUIRE(gap.has_value());
        CHECK((cmp_norm_radius(diam, r) == 0) == (*gap == 0));
    }
}

TEST_CASE("fixed levels have positive norm gaps, the tower fills every interval") {
    std::mt19937_64 rng(1234);
    GapProbe g5 = denseness_gap_probe(5, 1, 300, rng);
    CHECK(g5.samples == 300);
    CHECK(g5.positive);
    CHECK(cmp_gaps(5, g5.worst_r, g5.worst_exponent, rad(1, 2), Rat(1)) >= 0);

    GapProbe g24 = denseness_gap_probe(2, 4, 300, rng);
    CHECK(g24.positive);

    TowerGapProbe t = tower_gap_probe(2, 1024, 150, rng);
    CHECK(t.samples == 150);
    CHECK(t.all_filled);
    CHECK(t.max_level <= 1024);
    CHECK(t.max_level > 1);
}

TEST_CASE("one avoidance step slides the ball off the point") {
    Tower tw{2, 1024};
    EisElement zero1 = EisElement::zero(2, 1);
    TowerSpace space{2, 1024, 24};

    // Strict dense witness in (1/2, 1) is pi at level 2; the shifted ball
    // avoids the origin.
    EisElement c1 = avoid_ball_step(tw, zero1, rad(1), rad(1, 2), zero1, 24);
    CHECK(c1.level() == 2);
    CHECK(norm_eq(c1.norm(), nv(2, 1, 2)));
    CHECK_FALSE(space.dist_within(c1, zero1, rad(1, 2)));
    CHECK(space.dist_within(c1, zero1, rad(1)));
    // The two candidate balls were disjoint: the centers are farther apart
    // than the new radius.
    CHECK(radius_lt_norm(rad(1, 2), space.dist(c1, zero1)));

    // Between 4/5 and 9/10 the smallest-denominator power is 2^(-1/4).
    EisElement c2 = avoid_ball_step(tw, zero1, rad(9, 10), rad(4, 5), zero1, 24);
    CHECK(c2.level() == 4);
    CHECK(norm_eq(c2.norm(), nv(2, 1, 4)));

    // A point already outside the enclosing ball keeps the center.
    EisElement far = EisElement::from_padic(1, Padic::from_rational(2, Rat(1, 4), 24));
    EisElement c3 = avoid_ball_step(tw, zero1, rad(1), rad(1, 2), far, 24);
    CHECK(c3.is_zero());

    CHECK_THROWS_AS(avoid_ball_step(tw, zero1, rad(1, 2), rad(1, 2), zero1, 24), radii_invalid);
    CHECK_THROWS_AS(avoid_ball_step(tw, zero1, rad(1, 2), rad(0), zero1, 24), radii_invalid);
}

TEST_CASE("the default five-step chain certifies all its invariants") {
    Tower tw{2, 1024};
    std::vector<Radius> radii = default_radius_schedule(5);
    REQUIRE(radii.size() == 6);
    CHECK(radii[0].value() == Rat(1));
    CHECK(radii[1].value() == Rat(3, 4));
    CHECK(radii[5].value() == Rat(7, 12));

    std::vector<EisElement> seq = default_dense_seq(2, 5, 24);
    REQUIRE(seq.size() == 5);
    CHECK(seq[0].is_zero());

    SchikhofChain chain = schikhof_chain(tw, seq, radii, EisElement::zero(2, 1), 24);
    REQUIRE(chain.steps.size() == 5);
    CHECK(chain.pass());
    CHECK(chain.nested);
    CHECK(chain.excluded);
    CHECK(chain.last_in_all);
    CHECK(chain.avoided_all);
    // Only the first step needs a shift (every later point differs from the
    // center in norm already), so the centers stay at level 3.
    CHECK(chain.max_level == 3);
    CHECK(chain.steps[0].index == 1);
    CHECK(norm_eq(chain.steps[0].center.norm(), nv(2, 1, 3)));
}

TEST_CASE("a chain whose avoided points chase the centers shifts every step") {
    Tower tw{2, 1024};
    std::vector<Radius> radii = default_radius_schedule(5);

    // Feed the chain its own center trajectory: each step must then move.
    std::vector<EisElement> seq;
    EisElement c = EisElement::zero(2, 1);
    for (std::size_t n = 1; n <= 5; ++n) {
        seq.push_back(c);
        c = tw.add(c, norm_dense_witness(2, radii[n], radii[n - 1], tw.level_cap, 64));
    }
    SchikhofChain chain = schikhof_chain(tw, seq, radii, EisElement::zero(2, 1), 64);
    CHECK(chain.pass());
    CHECK(chain.max_level <= 1024);
    CHECK(chain.max_level > 4);
    // Every step really moved: consecutive centers sit farther apart than
    // the new radius (that distance is the witness norm).
    TowerSpace space{2, 1024, 64};
    for (std::size_t n = 1; n < chain.steps.size(); ++n)
        CHECK(radius_lt_norm(chain.steps[n].radius,
                             space.dist(chain.steps[n].center, chain.steps[n - 1].center)));
}

TEST_CASE("chain preconditions are enforced") {
    Tower tw{2, 1024};
    EisElement z = EisElement::zero(2, 1);
    std::vector<EisElement> seq = default_dense_seq(2, 2, 24);

    CHECK_THROWS_AS(schikhof_chain(tw, seq, {rad(1), rad(3, 4)}, z, 24), precondition_failed);
    CHECK_THROWS_AS(schikhof_chain(tw, seq, {rad(1), rad(3, 4), rad(3, 4)}, z, 24),
                    radii_invalid);
    CHECK_THROWS_AS(schikhof_chain(tw, seq, {rad(1), rad(3, 4), rad(2, 5)}, z, 24),
                    radii_invalid);
    std::vector<EisElement> dup = {z, EisElement::zero(2, 4)};
    CHECK_THROWS_AS(schikhof_chain(tw, dup, {rad(1), rad(3, 4), rad(2, 3)}, z, 24),
                    precondition_failed);
}

TEST_CASE("a ten-step chain stays within the level cap with exact certificates") {
    Tower tw{2, 1024};
    std::vector<Radius> radii = default_radius_schedule(10);
    std::vector<EisElement> seq = default_dense_seq(2, 10, 64);
    SchikhofChain chain = schikhof_chain(tw, seq, radii, EisElement::zero(2, 1), 64);
    REQUIRE(chain.steps.size() == 10);
    CHECK(chain.pass());
    CHECK(chain.max_level <= 1024);
}
