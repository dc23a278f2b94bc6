#include <algorithm>
#include <random>
#include <string>

#include "ultra/ballcalc.hpp"
#include "ultra/cli.hpp"
#include "ultra/counterexample.hpp"
#include "ultra/eisenstein.hpp"
#include "ultra/errors.hpp"
#include "ultra/linalg.hpp"
#include "ultra/padic.hpp"
#include "ultra/polynomial.hpp"
#include "ultra/seqmodel.hpp"
#include "ultra/tree_space.hpp"

// The `verify all` sweep: one certificate per suite, each counting sampled
// instances that satisfied a cross-module invariant. Every suite owns a
// generator seeded by (seed, suite index), so results do not depend on the
// order the suites run in, and two runs with the same seed agree byte for
// byte. Samples whose arithmetic loses certification are skipped and
// reported in the witness, never silently counted as passes.

namespace ultra {

namespace {

std::mt19937_64 suite_rng(const CliOptions& o, std::uint64_t idx) {
    return std::mt19937_64(o.seed ^ (0x9E3779B97F4A7C15ULL * (idx + 1)));
}

Certificate tally(std::string claim, std::size_t passed, std::size_t checked,
                  std::size_t skipped = 0) {
    std::string witness;
    if (skipped) witness = std::to_string(skipped) + " samples skipped";
    return {std::move(claim), std::to_string(passed), "=", std::to_string(checked),
            std::move(witness), passed == checked && checked > 0};
}

Rat small_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-40, 40);
    std::uniform_int_distribution<long long> den(1, 12);
    return Rat(Int(num(rng)), Int(den(rng)));
}

Certificate ultrametric_padic(const CliOptions& o, std::mt19937_64 rng) {
    std::size_t passed = 0, checked = 0;
    for (Int p : {Int(2), Int(3), Int(5)}) {
        PadicSpace s{p, o.prec};
        for (std::size_t t = 0; t < o.trials; ++t) {
            Padic x = random_point(s, rng), y = random_point(s, rng), z = random_point(s, rng);
            ++checked;
            if (ultrametric_triple_ok(s, x, y, z)) ++passed;
        }
    }
    return tally("verify.ultrametric.padic", passed, checked);
}

Certificate ultrametric_eis(const CliOptions& o, std::mt19937_64 rng) {
    std::size_t passed = 0, checked = 0;
    for (unsigned e : {2u, 3u, 4u}) {
        EisSpace s{o.prime, e, o.prec};
        for (std::size_t t = 0; t < o.trials; ++t) {
            EisElement x = random_point(s, rng), y = random_point(s, rng),
                       z = random_point(s, rng);
            ++checked;
            if (ultrametric_triple_ok(s, x, y, z)) ++passed;
        }
    }
    return tally("verify.ultrametric.eis", passed, checked);
}

Certificate ultrametric_tower(const CliOptions& o, std::mt19937_64 rng) {
    TowerSpace s{o.prime, std::min(o.level_cap, 64u), o.prec};
    std::size_t passed = 0;
    for (std::size_t t = 0; t < o.trials; ++t) {
        EisElement x = random_point(s, rng), y = random_point(s, rng), z = random_point(s, rng);
        if (ultrametric_triple_ok(s, x, y, z)) ++passed;
    }
    return tally("verify.ultrametric.tower", passed, o.trials);
}

Certificate ultrametric_tree(const CliOptions& o, std::mt19937_64 rng) {
    std::size_t passed = 0, checked = 0;
    for (int i = 0; i < 4; ++i) {
        TreeSpace s = random_tree(rng, 25);
        for (std::size_t t = 0; t < o.trials / 4 + 1; ++t) {
            std::size_t x = random_point(s, rng), y = random_point(s, rng),
                        z = random_point(s, rng);
            ++checked;
            if (ultrametric_triple_ok(s, x, y, z)) ++passed;
        }
    }
    return tally("verify.ultrametric.tree", passed, checked);
}

Certificate balls_dichotomy(const CliOptions& o, std::mt19937_64 rng) {
    PadicSpace s{o.prime, o.prec};
    PadicOps k{o.prime, o.prec};
    std::uniform_int_distribution<long long> expo(-3, 3);
    std::uniform_int_distribution<long long> scale(1, 6);
    std::size_t passed = 0;
    for (std::size_t t = 0; t < o.trials; ++t) {
        Ball<PadicSpace> b1{random_point(s, rng),
                            Radius{rat_pow(o.prime, expo(rng)) * scale(rng)}};
        Ball<PadicSpace> b2{random_point(s, rng),
                            Radius{rat_pow(o.prime, expo(rng)) * scale(rng)}};
        if (dichotomy_check(s, b1, b2).pass) ++passed;
    }
    return tally("verify.balls.dichotomy", passed, o.trials);
}

Certificate balls_tree_families(const CliOptions& o, std::mt19937_64 rng) {
    std::size_t passed = 0, applicable = 0, chains = 0, chains_ok = 0;
    for (std::size_t t = 0; t < o.trials; ++t) {
        TreeSpace s = random_tree(rng, 20);
        std::uniform_int_distribution<std::size_t> count(2, 5);
        std::vector<Ball<TreeSpace>> family;
        std::size_t m = count(rng);
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t c = random_point(s, rng);
            // Radii drawn from the realized distance set keep intersections likely.
            Rat r = s.dist(random_point(s, rng), random_point(s, rng));
            family.push_back({c, Radius{r}});
        }
        PairwiseSummary sum = check_pairwise_to_total(s, family);
        if (sum.applicable) {
            ++applicable;
            if (sum.pass) ++passed;
        }
        // Same-center antitone chain: radii sorted downward must nest and
        // share the final center.
        std::vector<Radius> radii;
        for (const auto& b : family) radii.push_back(b.radius);
        std::sort(radii.begin(), radii.end(), [](const Radius& a, const Radius& b) {
            return b < a;
        });
        std::vector<Ball<TreeSpace>> chain;
        for (const Radius& r : radii) chain.push_back({family.front().center, r});
        ++chains;
        try {
            check_antitone_chain(s, chain);
            ++chains_ok;
        } catch (const not_a_chain&) {
        }
    }
    Certificate c = tally("verify.balls.tree-families", passed + chains_ok,
                          applicable + chains);
    c.witness = std::to_string(applicable) + " pairwise-intersecting families, " +
                std::to_string(chains) + " chains";
    return c;
}

Certificate linalg_oracle(const CliOptions& o, std::mt19937_64 rng) {
    std::size_t passed = 0, checked = 0, skipped = 0;
    std::uniform_int_distribution<std::size_t> nd(2, 4);
    for (std::size_t t = 0; t < o.trials; ++t) {
        PadicOps k{o.prime, o.prec};
        std::size_t n = nd(rng);
        std::size_t dim = 1 + (rng() % 2);
        if (dim >= n) dim = n - 1;
        MatOf<PadicOps> v = random_spanning(k, n, dim, rng);
        VecOf<PadicOps> x = random_vector(k, n, rng);
        try {
            NormValue lib = dist_to_subspace(k, x, v);
            NormValue oracle = dist_oracle_small(k, x, v);
            ++checked;
            if (cmp_norms(lib, oracle) == 0) ++passed;
        } catch (const precision_loss&) {
            ++skipped;
        }
    }
    return tally("verify.linalg.distance-oracle", passed, checked, skipped);
}

Certificate linalg_projection(const CliOptions& o, std::mt19937_64 rng) {
    std::size_t passed = 0, checked = 0, skipped = 0;
    std::uniform_int_distribution<std::size_t> nd(2, 4);
    for (std::size_t t = 0; t < o.trials / 4 + 1; ++t) {
        PadicOps k{o.prime, o.prec};
        std::size_t n = nd(rng);
        std::size_t dim = 1 + (rng() % (n - 1));
        MatOf<PadicOps> v = random_spanning(k, n, dim, rng);
        try {
            Echelon<PadicOps> ech = echelonize(k, v, n);
            Complement<PadicOps> comp = orth_complement_and_projection(k, ech);
            bool ok = ech.rank() + comp.basis.size() == n;
            for (const auto& row : ech.rows)
                ok = ok && image_matches(k, comp.projector, row, row);
            for (const auto& w : comp.basis) ok = ok && is_morth(k, w, ech);
            for (int j = 0; j < 3; ++j) {
                VecOf<PadicOps> x = random_vector(k, n, rng);
                VecOf<PadicOps> px = apply(k, comp.projector, x);
                ok = ok && image_matches(k, comp.projector, px, px);
                ok = ok && norm_le(vec_norm(k, px), vec_norm(k, x));
            }
            ++checked;
            if (ok) ++passed;
        } catch (const precision_loss&) {
            ++skipped;
        }
    }
    return tally("verify.linalg.projection", passed, checked, skipped);
}

Certificate linalg_extension(const CliOptions& o, std::mt19937_64 rng) {
    std::size_t passed = 0, checked = 0, skipped = 0;
    std::uniform_int_distribution<std::size_t> md(1, 2);
    for (std::size_t t = 0; t < o.trials / 4 + 1; ++t) {
        PadicOps k{o.prime, o.prec};
        std::size_t m = md(rng);
        std::size_t n = m + 1 + (rng() % 2);
        MatOf<PadicOps> spanning = random_spanning(k, n, m, rng);
        MatOf<PadicOps> fvals;
        for (std::size_t i = 0; i < m; ++i) fvals.push_back({random_scalar(k, rng)});
        try {
            Extension<PadicOps> ext = hahn_banach_extend(k, spanning, fvals, n, 1);
            bool ok = true;
            for (std::size_t i = 0; i < m; ++i) {
                VecOf<PadicOps> y = apply(k, ext.matrix, spanning[i]);
                ok = ok && distinguish(y[0], fvals[i][0]) == Distinction::equal;
            }
            ok = ok && cmp_norms(operator_norm(k, ext.matrix),
                                 functional_norm_on(k, ext.basis, ext.basis_values)) == 0;
            ++checked;
            if (ok) ++passed;
        } catch (const precision_loss&) {
            ++skipped;
        }
    }
    return tally("verify.linalg.extension", passed, checked, skipped);
}

Certificate poly_roots_bounds(const CliOptions& o, std::mt19937_64 rng) {
    PadicOps k{o.prime, o.prec};
    std::uniform_int_distribution<std::size_t> deg(1, 3);
    std::size_t passed = 0, checked = 0;
    for (std::size_t t = 0; t < o.trials / 2 + 1; ++t) {
        std::size_t d = deg(rng);
        std::vector<Padic> fr, gr;
        for (std::size_t i = 0; i < d; ++i) {
            fr.push_back(Padic::from_rational(o.prime, small_rat(rng), o.prec));
            gr.push_back(Padic::from_rational(o.prime, small_rat(rng), o.prec));
        }
        PolyOf<PadicOps> f = poly_from_roots(k, fr);
        PolyOf<PadicOps> g = poly_from_roots(k, gr);
        RootsBoundCert c1 = roots_bound_part1(k, f, g, fr[0]);
        RootsBoundCert c2 = roots_bound_part2(k, fr, gr, 0);
        ++checked;
        if (c1.pass && c2.pass) ++passed;
    }
    return tally("verify.poly.roots-bound", passed, checked);
}

Certificate poly_hensel(const CliOptions& o, std::mt19937_64 rng) {
    PadicOps k{o.prime, o.prec};
    std::uniform_int_distribution<long long> root(0, 100), gap(1, 50), noise(0, 3);
    long long target = std::min<long long>(o.prec / 2, 16);
    std::size_t passed = 0;
    for (std::size_t t = 0; t < o.trials / 2 + 1; ++t) {
        long long r = root(rng);
        long long d = gap(rng);
        if (d % o.prime == 0) ++d; // keep the two roots separated mod p
        long long s = r + d;
        Rat rr(r), ss(s);
        PolyOf<PadicOps> f = {Padic::from_rational(o.prime, rr * ss, o.prec),
                              Padic::from_rational(o.prime, -(rr + ss), o.prec),
                              Padic::from_int(o.prime, 1, o.prec)};
        Rat seed = rr + rat_pow(o.prime, 2) * noise(rng);
        HenselResult res = hensel_lift(k, f, Padic::from_rational(o.prime, seed, o.prec),
                                       target);
        bool ok = res.residual_valuations.empty() ||
                  res.residual_valuations.back() >= target;
        ApproxVal<PadicOps> at = eval_checked(k, f, res.root);
        ok = ok && (!at.has_value || at.value.val_int() >= target);
        if (ok) ++passed;
    }
    return tally("verify.poly.hensel", passed, o.trials / 2 + 1);
}

Certificate witness_norm_dense(const CliOptions& o, std::mt19937_64 rng) {
    std::uniform_int_distribution<long long> lo(1, 56), width(1, 12);
    std::size_t passed = 0;
    for (std::size_t t = 0; t < o.trials; ++t) {
        Rat a(Int(lo(rng)), Int(16));
        Rat b = a + Rat(Int(width(rng)), Int(32));
        Radius ra{a}, rb{b};
        EisElement z = norm_dense_witness(o.prime, ra, rb, o.level_cap, o.prec);
        bool ok = radius_lt_norm(ra, z.norm()) && norm_lt_radius(z.norm(), rb);
        auto [u, v] = find_rational_power(o.prime, ra, rb);
        EisElement zv = z.pow(v.convert_to<unsigned long long>());
        EisElement pu = EisElement::from_padic(
            z.level(), Padic::from_int(o.prime, 1, o.prec).shift(u.convert_to<long long>()));
        ok = ok && distinguish(zv, pu) == Distinction::equal;
        if (ok) ++passed;
    }
    return tally("verify.witness.norm-dense", passed, o.trials);
}

Certificate seq_quotient(const CliOptions& o, std::mt19937_64 rng) {
    PadicOps k{o.prime, o.prec};
    std::uniform_int_distribution<std::size_t> dims(1, 3), plen(0, 2);
    auto random_rep = [&](std::size_t dim) {
        std::vector<VecOf<PadicOps>> prefix;
        std::size_t m = plen(rng);
        for (std::size_t i = 0; i < m; ++i) prefix.push_back(random_vector(k, dim, rng));
        return make_seq(k, std::move(prefix), random_vector(k, dim, rng));
    };
    std::size_t passed = 0, checked = 0, skipped = 0;
    for (std::size_t t = 0; t < o.trials; ++t) {
        std::size_t dim = dims(rng);
        SeqRep a = random_rep(dim), b = random_rep(dim);
        try {
            bool ok = true;
            NormValue qa = quotient_norm_seq(k, a);
            // Strong triangle inequality on classes.
            NormValue qs = quotient_norm_seq(k, seq_add(k, a, b));
            NormValue mx = norm_max(qa, quotient_norm_seq(k, b));
            ok = ok && cmp_norms(qs, mx) <= 0;
            // Null perturbations leave the class norm alone.
            std::vector<VecOf<PadicOps>> junk{random_vector(k, dim, rng)};
            SeqRep null = make_seq(k, std::move(junk), VecOf<PadicOps>(dim, k.zero()));
            ok = ok && in_c0(k, null);
            ok = ok && cmp_norms(quotient_norm_seq(k, seq_add(k, a, null)), qa) == 0;
            // Class norm never exceeds the representative's sup norm.
            ok = ok && norm_le(qa, sup_norm(k, a));
            // Diagonal embedding is isometric.
            VecOf<PadicOps> x = random_vector(k, dim, rng);
            ok = ok && cmp_norms(quotient_norm_seq(k, diagonal_embed(k, x)),
                                 vec_norm(k, x)) == 0;
            ++checked;
            if (ok) ++passed;
        } catch (const precision_loss&) {
            ++skipped;
        }
    }
    return tally("verify.seq.quotient", passed, checked, skipped);
}

Certificate immediacy(const CliOptions& o, std::mt19937_64 rng) {
    PadicOps k{o.prime, o.prec};
    std::uniform_int_distribution<std::size_t> nd(1, 3);
    std::uniform_int_distribution<long long> entry(0, 80);
    std::size_t passed = 0;
    std::size_t total = o.trials / 4 + 1;
    for (std::size_t t = 0; t < total; ++t) {
        std::size_t n = nd(rng);
        std::size_t cols = 1 + (rng() % n);
        // Lower unitriangular columns with integral entries: an isometry,
        // immediate exactly when it is square.
        MatOf<PadicOps> a(n, VecOf<PadicOps>(cols, k.zero()));
        for (std::size_t j = 0; j < cols; ++j) {
            a[j][j] = k.one();
            for (std::size_t i = j + 1; i < n; ++i)
                a[i][j] = Padic::from_int(o.prime, entry(rng), o.prec);
        }
        Immediacy res = is_immediate(k, a, rng);
        bool ok = res.immediate == (cols == n);
        if (!res.immediate) ok = ok && !vec_norm(k, res.witness).is_zero();
        if (ok) ++passed;
    }
    return tally("verify.linalg.immediacy", passed, total);
}

Certificate chain_default(const CliOptions& o, std::mt19937_64) {
    Tower tw{o.prime, o.level_cap};
    std::vector<Radius> radii = default_radius_schedule(4);
    std::vector<EisElement> seq = default_dense_seq(o.prime, 4, o.prec);
    SchikhofChain chain =
        schikhof_chain(tw, seq, radii, EisElement::zero(o.prime, 1), o.prec);
    Certificate c = tally("verify.witness.chain", chain.pass() ? 1 : 0, 1);
    c.witness = "4 steps, max level " + std::to_string(chain.max_level);
    return c;
}

} // namespace

Report run_verification(const CliOptions& opt) {
    Report rep;
    rep.input("prime", opt.prime.str());
    rep.input("prec", std::to_string(opt.prec));
    rep.input("level-cap", std::to_string(opt.level_cap));
    rep.input("seed", std::to_string(opt.seed));
    rep.input("trials", std::to_string(opt.trials));

    Certificate (*suites[])(const CliOptions&, std::mt19937_64) = {
        ultrametric_padic, ultrametric_eis,   ultrametric_tower, ultrametric_tree,
        balls_dichotomy,   balls_tree_families, linalg_oracle,   linalg_projection,
        linalg_extension,  poly_roots_bounds, poly_hensel,       witness_norm_dense,
        seq_quotient,      immediacy,         chain_default,
    };
    std::uint64_t idx = 0;
    for (auto* suite : suites) {
        rep.certify(suite(opt, suite_rng(opt, idx)));
        ++idx;
    }
    return rep;
}

} // namespace ultra
