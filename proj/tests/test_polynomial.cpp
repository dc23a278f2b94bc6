#include "doctest.h"

#include "ultra/polynomial.hpp"

#include <random>

using namespace ultra;

namespace {

PolyOf<PadicOps> from_rats(const PadicOps& k, std::vector<Rat> cs) {
    PolyOf<PadicOps> f;
    for (const Rat& c : cs) f.push_back(Padic::from_rational(k.p, c, k.prec));
    return f;
}

PolyOf<PadicOps> random_poly(std::mt19937_64& rng, const PadicOps& k, int deg) {
    std::uniform_int_distribution<long long> coef(-50, 50);
    PolyOf<PadicOps> f;
    for (int i = 0; i < deg; ++i)
        f.push_back(Padic::from_rational(k.p, Rat(coef(rng)), k.prec));
    f.push_back(k.one());
    return f;
}

} // namespace

TEST_CASE("gauss norm is the max coefficient norm") {
    PadicOps k{5, 24};
    // X^2 - (1/5) X + 25: norms 1, 5, 5^(-2); the middle coefficient wins.
    auto f = from_rats(k, {Rat(25), Rat(-1, 5), Rat(1)});
    CHECK(gauss_norm(k, f).str() == "5^(1)");
    // Monic linear with unit root: everything has norm 1.
    auto g = from_rats(k, {Rat(-6), Rat(1)});
    CHECK(gauss_norm(k, g).str() == "5^(0)");
    CHECK(gauss_norm(k, PolyOf<PadicOps>{}).str() == "0");
}

TEST_CASE("gauss norm is multiplicative") {
    std::mt19937_64 rng(211);
    const Int primes[3] = {2, 5, 7};
    for (int i = 0; i < 400; ++i) {
        PadicOps k{primes[i % 3], 32};
        auto f = random_poly(rng, k, 1 + i % 4);
        auto g = random_poly(rng, k, 1 + (i / 2) % 4);
        try {
            NormValue lhs = gauss_norm(k, poly_mul(k, f, g));
            NormValue rhs = gauss_norm(k, f) * gauss_norm(k, g);
            CHECK(norm_eq(lhs, rhs));
        } catch (const precision_loss&) {
            // A convolution sum may cancel; multiplicativity is only claimed
            // for products that stay representable.
        }
    }
}

TEST_CASE("evaluation: value and derivative at a point") {
    PadicOps k{7, 12};
    auto f = from_rats(k, {Rat(-2), Rat(0), Rat(1)}); // X^2 - 2
    Padic three = Padic::from_int(7, 3, 12);
    auto [v, d] = eval_and_derivative(k, f, three);
    CHECK(distinguish(v, Padic::from_int(7, 7, 12)) == Distinction::equal);
    CHECK(distinguish(d, Padic::from_int(7, 6, 12)) == Distinction::equal);
}

TEST_CASE("eval_checked turns root cancellation into a floor") {
    PadicOps k{5, 8};
    Padic r = Padic::from_int(5, 6, 8);
    auto f = poly_from_roots(k, {r, Padic::from_int(5, 1, 8)});
    // At a root every tracked digit cancels: no certified value, but a floor
    // at the working precision.
    auto at_root = eval_checked(k, f, r);
    CHECK_FALSE(at_root.has_value);
    CHECK_FALSE(at_root.floor.is_infinite());
    CHECK(at_root.floor >= Valuation::integer(8));
    // Away from the roots the value is certified.
    auto away = eval_checked(k, f, Padic::from_int(5, 3, 8));
    CHECK(away.has_value);
    CHECK(distinguish(away.value, Padic::from_int(5, (3 - 6) * (3 - 1), 8)) ==
          Distinction::equal);
}

TEST_CASE("hensel lift: square root of 2 in Q_7") {
    PadicOps k{7, 24};
    auto f = from_rats(k, {Rat(-2), Rat(0), Rat(1)});
    Padic a0 = Padic::from_int(7, 3, 24);
    HenselResult res = hensel_lift(k, f, a0, 3);
    // Independent check in plain modular arithmetic: the lifted residue
    // squared is 2 mod 7^3 = 343, and the seed pins the branch: 108 mod 7 = 3.
    Int rep = res.root.unit() % 343; // valuation 0, so the unit is the residue
    CHECK(res.root.val_int() == 0);
    CHECK(rep == 108);
    CHECK((rep * rep) % 343 == 2);
    // Residual valuations at least double each step (seed val 1, deriv val 0).
    REQUIRE(res.residual_valuations.size() >= 2);
    for (size_t i = 1; i < res.residual_valuations.size(); ++i)
        CHECK(res.residual_valuations[i] >= 2 * res.residual_valuations[i - 1]);
}

TEST_CASE("hensel lift: square root of 6 in Q_5") {
    PadicOps k{5, 24};
    auto f = from_rats(k, {Rat(-6), Rat(0), Rat(1)});
    HenselResult res = hensel_lift(k, f, Padic::from_int(5, 1, 24), 3);
    Int rep = res.root.unit() % 125;
    CHECK(rep == 16); // 1 + 3*5 + 0*25, and 16^2 = 256 = 6 + 2*125
    CHECK((rep * rep) % 125 == 6);
}

TEST_CASE("hensel lift: high target against a fresh modular oracle") {
    PadicOps k{7, 140};
    auto f = from_rats(k, {Rat(-2), Rat(0), Rat(1)});
    HenselResult res = hensel_lift(k, f, Padic::from_int(7, 3, 140), 120);
    Int mod = int_pow(7, 120);
    Int rep = res.root.unit() % mod;
    CHECK((rep * rep - 2) % mod == 0);
}

TEST_CASE("hensel lift rejects bad seeds and shaky conditions") {
    PadicOps k{2, 16};
    // X^2 + X + 1 has no root mod 2: |f(1)| = 1 is not below |f'(1)|^2 = 1.
    auto f = from_rats(k, {Rat(1), Rat(1), Rat(1)});
    CHECK_THROWS_AS(hensel_lift(k, f, Padic::from_int(2, 1, 16), 3),
                    hensel_condition_failed);
    // Derivative vanishing at the seed.
    auto sq = from_rats(k, {Rat(-2), Rat(0), Rat(1)});
    CHECK_THROWS_AS(hensel_lift(k, sq, Padic::zero(2), 3), hensel_condition_failed);
    // Non-monic and fractional coefficients are preconditions.
    auto nonmonic = from_rats(k, {Rat(1), Rat(2)});
    CHECK_THROWS_AS(hensel_lift(k, nonmonic, Padic::from_int(2, 1, 16), 3), not_monic);
    PadicOps k5{5, 16};
    auto frac = from_rats(k5, {Rat(1, 5), Rat(0), Rat(1)});
    CHECK_THROWS_AS(hensel_lift(k5, frac, Padic::from_int(5, 1, 16), 3),
                    precondition_failed);
}

TEST_CASE("hensel lift: seeds that are already roots") {
    PadicOps k{2, 16};
    // X^2 - X at the exact zero: the residual is exactly zero, no floor.
    auto f = from_rats(k, {Rat(0), Rat(-1), Rat(1)});
    HenselResult exact = hensel_lift(k, f, Padic::zero(2), 5);
    CHECK(exact.root.is_zero());
    CHECK(exact.residual_valuations.empty());
    CHECK_FALSE(exact.residual_below_floor);
    // X - 3 at 3: the residual cancels below the 16 tracked digits, which
    // already clears the target; the flag records the weaker guarantee.
    auto lin = from_rats(k, {Rat(-3), Rat(1)});
    HenselResult close = hensel_lift(k, lin, Padic::from_int(2, 3, 16), 5);
    CHECK(close.root.same_representation(Padic::from_int(2, 3, 16)));
    CHECK(close.residual_below_floor);
    // Same seed with a target beyond the tracked digits cannot be served.
    CHECK_THROWS_AS(hensel_lift(k, lin, Padic::from_int(2, 3, 16), 20), precision_loss);
}

TEST_CASE("insufficient working precision is reported, not glossed over") {
    PadicOps k{7, 4}; // only 4 digits tracked
    auto f = from_rats(k, {Rat(-2), Rat(0), Rat(1)});
    CHECK_THROWS_AS(hensel_lift(k, f, Padic::from_int(7, 3, 4), 12), precision_loss);
}

TEST_CASE("root continuity, part 1: perturbed polynomial at a root") {
    PadicOps k{5, 24};
    // f = (X-1)(X-6) = X^2 - 7X + 6, alpha = 6 = 1 + 5; g = X^2 - 1.
    auto f = from_rats(k, {Rat(6), Rat(-7), Rat(1)});
    auto g = from_rats(k, {Rat(-1), Rat(0), Rat(1)});
    Padic alpha = Padic::from_int(5, 6, 24);
    RootsBoundCert cert = roots_bound_part1(k, f, g, alpha);
    CHECK(cert.pass);
    CHECK(cert.decided);
    // |g(6)| = |35| = 5^(-1); |f-g|_G = |{7, -7X}|_G = 1, |f|_G = 1.
    CHECK(cert.lhs.exact);
    CHECK(cert.lhs.lower.str() == "5^(-1)");
    CHECK(cert.rhs.lower.str() == "5^(0)");

    // g = (X-1)^2: g(alpha) = 25, and |f-g|_G drops to 5^(-1).
    auto g2 = from_rats(k, {Rat(1), Rat(-2), Rat(1)});
    RootsBoundCert cert2 = roots_bound_part1(k, f, g2, alpha);
    CHECK(cert2.pass);
    CHECK(cert2.decided);
    CHECK(cert2.lhs.lower.str() == "5^(-2)");
    CHECK(cert2.rhs.lower.str() == "5^(-1)");
}

TEST_CASE("root continuity, part 1: trivial and error cases") {
    PadicOps k{5, 16};
    Padic r1 = Padic::from_int(5, 1, 16), r2 = Padic::from_int(5, 6, 16);
    auto f = poly_from_roots(k, {r1, r2});
    // g identical to f: the bound holds but cannot be separated at finite
    // precision; the certificate says so instead of overclaiming.
    RootsBoundCert cert = roots_bound_part1(k, f, f, r2);
    CHECK(cert.pass);
    CHECK_FALSE(cert.decided);

    // alpha with a certified nonzero residue is rejected.
    CHECK_THROWS_AS(roots_bound_part1(k, f, f, Padic::from_int(5, 3, 16)),
                    root_check_failed);
    // Degree and monicity preconditions.
    auto lin = poly_from_roots(k, {r1});
    CHECK_THROWS_AS(roots_bound_part1(k, f, lin, r1), degree_mismatch);
    auto scaled = f;
    scaled[2] = Padic::from_int(5, 5, 16);
    CHECK_THROWS_AS(roots_bound_part1(k, f, scaled, r1), not_monic);
}

TEST_CASE("root continuity, part 2: the close root is named") {
    PadicOps k{5, 24};
    Padic one = Padic::from_int(5, 1, 24);
    Padic r = Padic::from_int(5, 6, 24);       // 1 + 5
    Padic s = Padic::from_int(5, -4, 24);      // 1 - 5
    RootsBoundCert cert = roots_bound_part2(k, {one, r}, {one, s}, 1);
    CHECK(cert.pass);
    CHECK(cert.decided);
    REQUIRE(cert.witness.has_value());
    // Both of g's roots sit at distance 5^(-1) from alpha = 1 + 5; the bound
    // (|f-g|_G)^(1/2) * |f|_G = 5^(-1/2) clears it either way.
    CHECK(cert.lhs.lower.str() == "5^(-1)");
    CHECK(cert.rhs.lower.str() == "5^(-1/2)");

    // Identical root lists: distance is exactly zero by construction.
    RootsBoundCert triv = roots_bound_part2(k, {one, r}, {one, r}, 1);
    CHECK(triv.pass);
    CHECK(triv.decided);
    CHECK(*triv.witness == 1);
    CHECK(triv.lhs.exact);
    CHECK(triv.lhs.lower.is_zero());
}

TEST_CASE("root continuity over the ramified tower") {
    TowerOps k{Tower{2, 64}, 24};
    EisElement pi = EisElement::uniformizer_power(2, 2, 1, 24);
    EisElement mpi = -pi;
    // f = (X - pi)(X + pi) = X^2 - 2, built from its roots; the linear
    // coefficient cancels into a pure O-term, which the certificates absorb.
    // g moves one root to pi + 2, so f - g = 2X + 2 pi with Gauss norm 1/2.
    EisElement moved = k.add(pi, EisElement::from_padic(2, Padic::from_int(2, 2, 24)));
    RootsBoundCert c1 = roots_bound_part1(
        k, poly_from_roots(k, {pi, mpi}), poly_from_roots(k, {moved, mpi}), pi);
    CHECK(c1.pass);
    CHECK(c1.decided);
    // |g(pi)| = |(-2)(2 pi)| = 2^(-5/2) against |f-g|_G * |f|_G = 2^(-1).
    CHECK(c1.lhs.lower.str() == "2^(-5/2)");
    CHECK(c1.rhs.lower.str() == "2^(-1)");
    RootsBoundCert c2 = roots_bound_part2(k, {pi, mpi}, {moved, mpi}, 0);
    CHECK(c2.pass);
    CHECK(c2.decided);
    // The closest root of g to pi is -pi, not the moved one: |2 pi| = 2^(-3/2)
    // beats |2| = 2^(-1). The bound (|f-g|_G)^(1/2) * |f|_G = 2^(-1/2) clears
    // both candidates.
    REQUIRE(c2.witness.has_value());
    CHECK(*c2.witness == 1);
    CHECK(c2.lhs.lower.str() == "2^(-3/2)");
    CHECK(c2.rhs.lower.str() == "2^(-1/2)");
}

TEST_CASE("random factored pairs: both certificates pass decisively") {
    std::mt19937_64 rng(223);
    const Int primes[2] = {5, 7};
    int done = 0;
    for (int attempt = 0; done < 120; ++attempt) {
        REQUIRE(attempt < 3000);
        PadicOps k{primes[attempt % 2], 40};
        std::uniform_int_distribution<long long> coef(-40, 40);
        std::uniform_int_distribution<int> deg(1, 4);
        int n = deg(rng);
        std::vector<Padic> froots, groots;
        for (int i = 0; i < n; ++i) {
            froots.push_back(Padic::from_rational(k.p, Rat(coef(rng)), k.prec));
            groots.push_back(Padic::from_rational(k.p, Rat(coef(rng)), k.prec));
        }
        try {
            size_t idx = (size_t)(attempt % n);
            auto f = poly_from_roots(k, froots);
            auto g = poly_from_roots(k, groots);
            RootsBoundCert c1 = roots_bound_part1(k, f, g, froots[idx]);
            RootsBoundCert c2 = roots_bound_part2(k, froots, groots, idx);
            CHECK(c1.pass);
            CHECK(c2.pass);
            CHECK(c2.decided);
            ++done;
        } catch (const precision_loss&) {
            // Root collisions can cancel below precision; resample.
        }
    }
}
