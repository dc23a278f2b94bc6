#pragma once

#include "ultra/ballcalc.hpp"

#include <optional>
#include <random>
#include <vector>

// The ball-avoidance construction: in a field whose norms are dense in
// (0, oo) one can shrink any ball by an arbitrarily small amount and still
// slide it off any given point, because between the new radius and the old
// one there is an attained distance. Iterating yields a strictly nested
// chain of balls, each excluding one more point of a supplied sequence,
// with radii pinned above half the starting radius. Over a fixed finite
// level the norms are a discrete ladder and the first step already fails:
// a ball's true diameter is the ladder value at or below its radius.

namespace ultra {

// Exact diameter of the closed ball B(c, r) when the value group is
// (1/e)Z: the largest attainable norm <= r.
NormValue ball_diameter(const PadicSpace& s, const Padic& c, const Radius& r);
NormValue ball_diameter(const EisSpace& s, const EisElement& c, const Radius& r);

// Exponent q with diameter = p^(-q) at level e.
Rat diameter_exponent(const Int& p, unsigned e, const Radius& r);

// Relative defect (r - diam)/r as an exact rational; available when the
// diameter is rational (integral exponent), which covers every level-1
// radius. Zero exactly when r is an attained norm.
std::optional<Rat> diameter_gap(const Int& p, unsigned e, const Radius& r);

// Order two defects (r1, q1), (r2, q2) by gap size without leaving exact
// arithmetic: gap1 < gap2 iff p^(q2-q1) > r1/r2, a p-power-vs-rational
// comparison. Returns -1, 0, 1.
int cmp_gaps(const Int& p, const Radius& r1, const Rat& q1, const Radius& r2, const Rat& q2);

// Sample radii at a fixed level and report the worst relative defect. The
// defect is positive for every radius outside the discrete norm ladder, so
// a fixed level is never densely normed.
struct GapProbe {
    std::size_t samples = 0;
    std::size_t exact_hits = 0; // sampled radii lying on the ladder
    Radius worst_r = Radius(Rat(1));
    Rat worst_exponent = Rat(0);
    bool positive = false; // worst defect is strictly positive
};
GapProbe denseness_gap_probe(const Int& p, unsigned e, std::size_t samples,
                             std::mt19937_64& rng);

// Sample interval pairs 0 < r1 < r2 and fill each with a dense witness,
// verifying r1 < |z| < r2 exactly. Levels adapt per interval.
struct TowerGapProbe {
    std::size_t samples = 0;
    bool all_filled = true;
    unsigned max_level = 1;
};
TowerGapProbe tower_gap_probe(const Int& p, unsigned level_cap, std::size_t samples,
                              std::mt19937_64& rng);

// One avoidance step: a center c1 with B(c1, r1) inside B(c0, r0) and z
// outside B(c1, r1). The two candidates are c0 and c0 + w for a dense
// witness r1 < |w| < r0; their radius-r1 balls are disjoint, so at most
// one can hold z. Both postconditions are re-checked before returning.
EisElement avoid_ball_step(const Tower& tw, const EisElement& c0, const Radius& r0,
                           const Radius& r1, const EisElement& z,
                           unsigned prec = default_padic_precision);

struct ChainStep {
    std::size_t index = 0; // n, starting at 1
    EisElement center;     // center of B_n
    Radius radius;         // r_n
    EisElement excluded;   // a_{n-1}, outside B_n
};

struct SchikhofChain {
    std::vector<ChainStep> steps;
    // Certificates, each decided exactly.
    bool nested = true;      // B_n inside B_{n-1}
    bool excluded = true;    // a_{n-1} outside B_n for every step
    bool last_in_all = true; // the final center lies in every ball
    bool avoided_all = true; // every excluded point stays outside the final ball
    unsigned max_level = 1;  // largest tower level among the centers

    bool pass() const { return nested && excluded && last_in_all && avoided_all; }
};

// r_0 = 1 and r_n = 1/2 + 1/(2(n+1)): strictly decreasing, all above 1/2.
std::vector<Radius> default_radius_schedule(std::size_t n);

// A fixed supply of pairwise-distinct low-level tower elements to avoid:
// 0, 1, -1, pi, -pi, pi^2, ... at level 4.
std::vector<EisElement> default_dense_seq(const Int& p, std::size_t n,
                                          unsigned prec = default_padic_precision);

// Iterate the avoidance step along dense_seq with the given radii
// (radii[0] is the starting ball's). The returned chain carries its own
// exactly-checked certificates; radii must decrease strictly and stay
// above radii[0]/2.
SchikhofChain schikhof_chain(const Tower& tw, const std::vector<EisElement>& dense_seq,
                             const std::vector<Radius>& radii, const EisElement& c0,
                             unsigned prec = default_padic_precision);

} // namespace ultra
