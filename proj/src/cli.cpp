#include "ultra/cli.hpp"

#include <functional>
#include <ostream>
#include <random>
#include <utility>

#include "CLI11.hpp"

#include "ultra/ballcalc.hpp"
#include "ultra/counterexample.hpp"
#include "ultra/eisenstein.hpp"
#include "ultra/errors.hpp"
#include "ultra/linalg.hpp"
#include "ultra/padic.hpp"
#include "ultra/parse.hpp"
#include "ultra/polynomial.hpp"
#include "ultra/seqmodel.hpp"
#include "ultra/tree_space.hpp"

namespace ultra {

namespace {

// Exponent of p in a nonzero integer, by plain trial division. The report
// oracles use this instead of the p-adic machinery so a norm printed by the
// library is checked against an independent count.
long long prime_exponent(Int n, const Int& p) {
    long long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

NormValue rational_norm(const Int& p, const Rat& q) {
    if (q == 0) return NormValue::zero(p);
    long long v = prime_exponent(rat_num(q), p) - prime_exponent(rat_den(q), p);
    return NormValue(p, Valuation::integer(v));
}

// Inverse of a modulo m for gcd(a, m) = 1, by the extended Euclid loop.
Int mod_inverse(Int a, const Int& m) {
    Int r0 = m, r1 = ((a % m) + m) % m, t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0 != 1) throw precondition_failed("mod_inverse: arguments are not coprime");
    return ((t0 % m) + m) % m;
}

VecOf<PadicOps> vec_from_rats(const PadicOps& k, const std::vector<Rat>& v) {
    VecOf<PadicOps> out;
    out.reserve(v.size());
    for (const Rat& q : v) out.push_back(Padic::from_rational(k.p, q, k.prec));
    return out;
}

MatOf<PadicOps> mat_from_rats(const PadicOps& k, const std::vector<std::vector<Rat>>& m) {
    if (m.empty()) throw precondition_failed("matrix must have at least one row");
    MatOf<PadicOps> out;
    out.reserve(m.size());
    for (const auto& row : m) {
        if (row.size() != m.front().size())
            throw precondition_failed("matrix rows must all have the same length");
        out.push_back(vec_from_rats(k, row));
    }
    return out;
}

Certificate count_cert(std::string claim, std::size_t passed, std::size_t checked,
                       std::string witness = "") {
    return {std::move(claim), std::to_string(passed), "=", std::to_string(checked),
            std::move(witness), passed == checked};
}

// Translates a root-continuity certificate. Decided passes print the exact
// separation (upper of the left bound against lower of the right); undecided
// passes and failures print the consistency window instead, so the printed
// relation is true exactly when pass says it is.
Certificate rb_cert(std::string claim, const RootsBoundCert& c) {
    Certificate out;
    out.claim = std::move(claim);
    out.relation = "<=";
    if (c.pass && c.decided) {
        out.lhs = c.lhs.upper.str();
        out.rhs = c.rhs.lower.str();
    } else {
        out.lhs = c.lhs.lower.str();
        out.rhs = c.rhs.upper.str();
    }
    out.pass = c.pass;
    out.witness = c.detail;
    if (c.witness) out.witness += ", root index " + std::to_string(*c.witness);
    return out;
}

void echo_field(const CliOptions& o, Report& rep) { rep.input("prime", o.prime.str()); }

// ---- padic ----

void cmd_padic_norm(const CliOptions& o, const std::string& value_text, Report& rep) {
    Rat q = parse_rat(value_text);
    echo_field(o, rep);
    rep.input("value", rat_str(q));
    NormValue lib = Padic::from_rational(o.prime, q, o.prec).norm();
    NormValue oracle = rational_norm(o.prime, q);
    rep.certify({"padic.norm.matches-valuation-count", lib.str(), "=", oracle.str(),
                 "valuation " + oracle.valuation().str(), cmp_norms(lib, oracle) == 0});
}

void cmd_padic_arith(const CliOptions& o, const std::string& op, const std::string& a_text,
                     const std::string& b_text, Report& rep) {
    Rat a = parse_rat(a_text), b = parse_rat(b_text);
    echo_field(o, rep);
    rep.input("op", op);
    rep.input("a", rat_str(a));
    rep.input("b", rat_str(b));
    Padic x = Padic::from_rational(o.prime, a, o.prec);
    Padic y = Padic::from_rational(o.prime, b, o.prec);
    Rat r;
    Padic s = Padic::zero(o.prime);
    if (op == "add") {
        r = a + b;
        s = x + y;
    } else if (op == "sub") {
        r = a - b;
        s = x - y;
    } else if (op == "mul") {
        r = a * b;
        s = x * y;
    } else if (op == "div") {
        if (b == 0) throw division_by_zero("padic arith: b = 0");
        r = a / b;
        s = x / y;
    } else {
        throw precondition_failed("padic arith: op must be add, sub, mul or div");
    }
    Distinction d = distinguish(s, Padic::from_rational(o.prime, r, o.prec));
    std::string gap = "0";
    if (d == Distinction::distinct)
        gap = PadicSpace{o.prime, o.prec}.dist(s, Padic::from_rational(o.prime, r, o.prec)).str();
    rep.certify({"padic.arith.matches-rational", gap, "=", "0",
                 "result " + s.str() + " vs exact " + rat_str(r) + ", verdict " +
                     distinction_str(d),
                 d == Distinction::equal});
}

void cmd_padic_dist(const CliOptions& o, const std::string& a_text, const std::string& b_text,
                    Report& rep) {
    Rat a = parse_rat(a_text), b = parse_rat(b_text);
    echo_field(o, rep);
    rep.input("a", rat_str(a));
    rep.input("b", rat_str(b));
    PadicSpace s{o.prime, o.prec};
    NormValue lib = s.dist(Padic::from_rational(o.prime, a, o.prec),
                           Padic::from_rational(o.prime, b, o.prec));
    NormValue oracle = rational_norm(o.prime, a - b);
    rep.certify({"padic.dist.matches-rational", lib.str(), "=", oracle.str(), "",
                 cmp_norms(lib, oracle) == 0});
}

// ---- eis ----

void cmd_eis_norm(const CliOptions& o, long long level, long long power, Report& rep) {
    if (level < 1 || static_cast<unsigned long long>(level) > o.level_cap)
        throw precondition_failed("eis norm: level must lie in [1, level cap]");
    echo_field(o, rep);
    rep.input("level", std::to_string(level));
    rep.input("power", std::to_string(power));
    EisElement z =
        EisElement::uniformizer_power(o.prime, static_cast<unsigned>(level), power, o.prec);
    NormValue lib = z.norm();
    NormValue expect(o.prime, Valuation(Rat(power, level)));
    rep.certify({"eis.norm.uniformizer-power", lib.str(), "=", expect.str(),
                 "element " + z.str(), cmp_norms(lib, expect) == 0});
}

void cmd_eis_witness(const CliOptions& o, const std::string& low, const std::string& high,
                     Report& rep) {
    Rat a = parse_rat(low), b = parse_rat(high);
    echo_field(o, rep);
    rep.input("low", rat_str(a));
    rep.input("high", rat_str(b));
    Radius ra{a}, rb{b};
    EisElement z = norm_dense_witness(o.prime, ra, rb, o.level_cap, o.prec);
    NormValue nz = z.norm();
    rep.certify({"witness.norm.above-low", rat_str(a), "<", nz.str(), "witness " + z.str(),
                 radius_lt_norm(ra, nz)});
    rep.certify({"witness.norm.below-high", nz.str(), "<", rat_str(b), "",
                 norm_lt_radius(nz, rb)});
    // The witness is a pure uniformizer power, so raising it to its level
    // must land exactly on an integer power of p: same representation, no
    // noise term on either side.
    auto [u, v] = find_rational_power(o.prime, ra, rb);
    EisElement zv = z.pow(v.convert_to<unsigned long long>());
    EisElement pu = EisElement::from_padic(
        z.level(), Padic::from_int(o.prime, 1, o.prec).shift(u.convert_to<long long>()));
    Distinction d = distinguish(zv, pu);
    std::string gap = "0";
    if (d == Distinction::distinct)
        gap = TowerSpace{o.prime, o.level_cap, o.prec}.dist(zv, pu).str();
    bool exact = d == Distinction::equal && zv.noise().is_infinite() && pu.noise().is_infinite();
    rep.certify({"witness.power.exact", gap, "=", "0",
                 "z^" + v.str() + " = " + o.prime.str() + "^" + u.str() +
                     ", representations exact, verdict " + distinction_str(d),
                 exact});
}

// ---- poly ----

void cmd_poly_roots_bound(const CliOptions& o, int part, const std::string& f_text,
                          const std::string& g_text, const std::string& alpha_text,
                          const std::string& f_roots_text, const std::string& g_roots_text,
                          long long alpha_index, Report& rep) {
    PadicOps k{o.prime, o.prec};
    echo_field(o, rep);
    rep.input("part", std::to_string(part));
    if (part == 1) {
        if (f_text.empty() || g_text.empty() || alpha_text.empty())
            throw precondition_failed("poly roots-bound --part 1 needs --f, --g and --alpha");
        std::vector<Rat> fc = parse_rat_vector(f_text), gc = parse_rat_vector(g_text);
        Rat alpha = parse_rat(alpha_text);
        rep.input("f", rat_vector_str(fc));
        rep.input("g", rat_vector_str(gc));
        rep.input("alpha", rat_str(alpha));
        RootsBoundCert c =
            roots_bound_part1(k, vec_from_rats(k, fc), vec_from_rats(k, gc),
                              Padic::from_rational(o.prime, alpha, o.prec));
        rep.certify(rb_cert("poly.roots-bound.value-at-root", c));
    } else if (part == 2) {
        if (f_roots_text.empty() || g_roots_text.empty())
            throw precondition_failed(
                "poly roots-bound --part 2 needs --f-roots and --g-roots");
        std::vector<Rat> fr = parse_rat_vector(f_roots_text);
        std::vector<Rat> gr = parse_rat_vector(g_roots_text);
        rep.input("f-roots", rat_vector_str(fr));
        rep.input("g-roots", rat_vector_str(gr));
        rep.input("alpha-index", std::to_string(alpha_index));
        if (alpha_index < 0) throw precondition_failed("alpha index must be non-negative");
        RootsBoundCert c = roots_bound_part2(k, vec_from_rats(k, fr), vec_from_rats(k, gr),
                                             static_cast<std::size_t>(alpha_index));
        rep.certify(rb_cert("poly.roots-bound.close-root", c));
    } else {
        throw precondition_failed("poly roots-bound: --part must be 1 or 2");
    }
}

void cmd_poly_hensel(const CliOptions& o, const std::string& f_text,
                     const std::string& x0_text, long long target, Report& rep) {
    PadicOps k{o.prime, o.prec};
    std::vector<Rat> fc = parse_rat_vector(f_text);
    Rat x0 = parse_rat(x0_text);
    echo_field(o, rep);
    rep.input("f", rat_vector_str(fc));
    rep.input("x0", rat_str(x0));
    rep.input("target", std::to_string(target));
    PolyOf<PadicOps> f = vec_from_rats(k, fc);
    Padic a0 = Padic::from_rational(o.prime, x0, o.prec);
    HenselResult res = hensel_lift(k, f, a0, target);

    // Final residual valuation against the target. An empty trace means the
    // seed residual already vanished (exactly, or below the tracked digits).
    std::string final_val =
        res.residual_valuations.empty()
            ? (res.residual_below_floor ? std::to_string(target) : "inf")
            : std::to_string(res.residual_valuations.back());
    bool reached = res.residual_valuations.empty() ||
                   res.residual_valuations.back() >= target;
    rep.certify({"hensel.residual.reaches-target", final_val, ">=", std::to_string(target),
                 "root " + res.root.str(), reached});

    // Quadratic convergence, recounted from the recorded trace.
    Padic d0 = poly_eval(k, poly_derivative(k, f), a0);
    long long dv = d0.val_int();
    std::size_t ok = 0, steps = 0;
    std::string trace;
    for (std::size_t i = 0; i < res.residual_valuations.size(); ++i) {
        if (i) {
            ++steps;
            if (res.residual_valuations[i] >= 2 * res.residual_valuations[i - 1] - 2 * dv)
                ++ok;
            trace += " ";
        }
        trace += std::to_string(res.residual_valuations[i]);
    }
    rep.certify(count_cert("hensel.residual.doubles", ok, steps,
                           "valuations [" + trace + "], derivative valuation " +
                               std::to_string(dv)));

    // Independent recheck with modular integer arithmetic: read the lifted
    // root back as an integer mod p^target and evaluate f there directly.
    if (res.root.is_zero() || res.root.val_int() >= 0) {
        Int pm = int_pow(o.prime, Int(target));
        Int r = 0;
        if (!res.root.is_zero()) {
            long long avail = res.root.val_int() + res.root.precision();
            if (avail < target)
                throw precision_loss("hensel oracle: root carries " + std::to_string(avail) +
                                     " digits but the target needs " + std::to_string(target));
            r = (res.root.unit() * int_pow(o.prime, Int(res.root.val_int()))) % pm;
        }
        Int acc = 0, rpow = 1;
        for (const Rat& c : fc) {
            Int num = rat_num(c) % pm, den = rat_den(c) % pm;
            acc = (acc + num * mod_inverse(den, pm) % pm * rpow) % pm;
            rpow = rpow * r % pm;
        }
        acc = ((acc % pm) + pm) % pm;
        rep.certify({"hensel.oracle.residue", acc.str(), "=", "0",
                     "f(root) mod " + o.prime.str() + "^" + std::to_string(target),
                     acc == 0});
    }
}

// ---- balls ----

void cmd_balls_dichotomy(const CliOptions& o, const std::string& c1, const std::string& r1,
                         const std::string& c2, const std::string& r2, Report& rep) {
    Rat qc1 = parse_rat(c1), qr1 = parse_rat(r1), qc2 = parse_rat(c2), qr2 = parse_rat(r2);
    echo_field(o, rep);
    rep.input("c1", rat_str(qc1));
    rep.input("r1", rat_str(qr1));
    rep.input("c2", rat_str(qc2));
    rep.input("r2", rat_str(qr2));
    PadicSpace s{o.prime, o.prec};
    Ball<PadicSpace> b1{Padic::from_rational(o.prime, qc1, o.prec), Radius{qr1}};
    Ball<PadicSpace> b2{Padic::from_rational(o.prime, qc2, o.prec), Radius{qr2}};
    DichotomySummary d = dichotomy_check(s, b1, b2);
    Radius rmax = b1.radius <= b2.radius ? b2.radius : b1.radius;
    NormValue dist = s.dist(b1.center, b2.center);
    std::string verdict = d.disjoint ? "disjoint"
                          : d.nested_12 ? "first ball inside second"
                                        : "second ball inside first";
    rep.certify({"balls.dichotomy", dist.str(), d.disjoint ? ">" : "<=", rmax.str(),
                 verdict, d.pass});
}

void cmd_balls_subset(const CliOptions& o, const std::string& tree_text, const std::string& c1,
                      const std::string& r1, const std::string& c2, const std::string& r2,
                      Report& rep) {
    (void)o;
    TreeSpace s = TreeSpace::parse(tree_text);
    Rat qr1 = parse_rat(r1), qr2 = parse_rat(r2);
    rep.input("tree", s.str());
    rep.input("c1", c1);
    rep.input("r1", rat_str(qr1));
    rep.input("c2", c2);
    rep.input("r2", rat_str(qr2));
    Ball<TreeSpace> b1{s.leaf_index(c1), Radius{qr1}};
    Ball<TreeSpace> b2{s.leaf_index(c2), Radius{qr2}};
    const Rat& d = s.dist(b1.center, b2.center);
    rep.certify({"balls.subset.radii", rat_str(qr1), "<=", rat_str(qr2), "",
                 b1.radius <= b2.radius});
    rep.certify({"balls.subset.center-distance", rat_str(d), "<=", rat_str(qr2), "",
                 s.dist_within(b1.center, b2.center, b2.radius)});
    // The formal criterion must agree with leaf-by-leaf enumeration.
    bool formal = formal_subset(s, b1, b2);
    std::size_t inside1 = 0, also2 = 0;
    for (std::size_t i = 0; i < s.leaf_count(); ++i) {
        if (!contains(s, b1, i)) continue;
        ++inside1;
        if (contains(s, b2, i)) ++also2;
    }
    rep.certify({"balls.subset.pointwise-agrees", std::to_string(also2), "=",
                 std::to_string(inside1),
                 "formal verdict " + std::string(formal ? "subset" : "not a subset"),
                 formal == (also2 == inside1)});
}

// ---- linalg ----

void cmd_linalg_dist(const CliOptions& o, const std::string& vec_text,
                     const std::string& mat_text, Report& rep) {
    PadicOps k{o.prime, o.prec};
    std::vector<Rat> xv = parse_rat_vector(vec_text);
    std::vector<std::vector<Rat>> mv = parse_rat_matrix(mat_text);
    echo_field(o, rep);
    rep.input("vector", rat_vector_str(xv));
    rep.input("matrix", rat_matrix_str(mv));
    VecOf<PadicOps> x = vec_from_rats(k, xv);
    MatOf<PadicOps> rows = mat_from_rats(k, mv);
    if (rows.front().size() != x.size())
        throw precondition_failed("vector and matrix rows must have the same length");
    Echelon<PadicOps> ech = echelonize(k, rows, x.size());
    NormValue d = dist_to_subspace(k, x, ech);
    if (ech.rank() <= 2) {
        NormValue oracle = dist_oracle_small(k, x, rows);
        rep.certify({"linalg.dist.matches-oracle", d.str(), "=", oracle.str(),
                     "echelon rank " + std::to_string(ech.rank()),
                     cmp_norms(d, oracle) == 0});
    } else {
        rep.certify({"linalg.dist.bounded-by-norm", d.str(), "<=", vec_norm(k, x).str(),
                     "echelon rank " + std::to_string(ech.rank()) +
                         ", zero vector gives the bound",
                     norm_le(d, vec_norm(k, x))});
    }
}

void cmd_linalg_project(const CliOptions& o, const std::string& mat_text, Report& rep) {
    PadicOps k{o.prime, o.prec};
    std::vector<std::vector<Rat>> mv = parse_rat_matrix(mat_text);
    echo_field(o, rep);
    rep.input("matrix", rat_matrix_str(mv));
    rep.input("seed", std::to_string(o.seed));
    rep.input("trials", std::to_string(o.trials));
    MatOf<PadicOps> rows = mat_from_rats(k, mv);
    std::size_t n = rows.front().size();
    Echelon<PadicOps> ech = echelonize(k, rows, n);
    Complement<PadicOps> comp = orth_complement_and_projection(k, ech);

    rep.certify({"linalg.project.dimension-split",
                 std::to_string(ech.rank() + comp.basis.size()), "=", std::to_string(n), "",
                 ech.rank() + comp.basis.size() == n});

    std::size_t id_ok = 0;
    for (const auto& v : ech.rows)
        if (image_matches(k, comp.projector, v, v)) ++id_ok;
    rep.certify(count_cert("linalg.project.identity-on-subspace", id_ok, ech.rank()));

    std::size_t morth_ok = 0;
    for (const auto& w : comp.basis)
        if (is_morth(k, w, ech)) ++morth_ok;
    rep.certify(count_cert("linalg.complement.orthogonal", morth_ok, comp.basis.size()));

    std::mt19937_64 rng(o.seed);
    std::size_t idem = 0, contract = 0, checked = 0;
    for (std::size_t t = 0; t < o.trials; ++t) {
        VecOf<PadicOps> x = random_vector(k, n, rng);
        try {
            VecOf<PadicOps> px = apply(k, comp.projector, x);
            if (image_matches(k, comp.projector, px, px)) ++idem;
            if (norm_le(vec_norm(k, px), vec_norm(k, x))) ++contract;
            ++checked;
        } catch (const precision_loss&) {
            // A sample the projector cannot certify is skipped, not counted.
        }
    }
    rep.certify(count_cert("linalg.project.idempotent", idem, checked,
                           std::to_string(o.trials - checked) + " samples skipped"));
    rep.certify(count_cert("linalg.project.contractive", contract, checked));
}

void cmd_linalg_extend(const CliOptions& o, const std::string& mat_text,
                       const std::string& vals_text, Report& rep) {
    PadicOps k{o.prime, o.prec};
    std::vector<std::vector<Rat>> mv = parse_rat_matrix(mat_text);
    std::vector<Rat> fv = parse_rat_vector(vals_text);
    echo_field(o, rep);
    rep.input("matrix", rat_matrix_str(mv));
    rep.input("values", rat_vector_str(fv));
    if (fv.size() != mv.size())
        throw precondition_failed("one value per spanning vector required");
    MatOf<PadicOps> spanning = mat_from_rats(k, mv);
    std::size_t n = spanning.front().size();
    MatOf<PadicOps> fvals;
    fvals.reserve(fv.size());
    for (const Rat& q : fv) fvals.push_back({Padic::from_rational(o.prime, q, o.prec)});
    Extension<PadicOps> ext = hahn_banach_extend(k, spanning, fvals, n, 1);

    std::size_t agree = 0;
    for (std::size_t i = 0; i < spanning.size(); ++i) {
        VecOf<PadicOps> y = apply(k, ext.matrix, spanning[i]);
        if (distinguish(y[0], fvals[i][0]) == Distinction::equal) ++agree;
    }
    rep.certify(count_cert("extend.agrees-on-domain", agree, spanning.size()));

    NormValue fn = functional_norm_on(k, ext.basis, ext.basis_values);
    NormValue on = operator_norm(k, ext.matrix);
    rep.certify({"extend.norm-preserved", on.str(), "=", fn.str(), "", cmp_norms(on, fn) == 0});
}

// ---- witness ----

void cmd_witness_schikhof(const CliOptions& o, long long steps, const std::string& radii_text,
                          Report& rep) {
    if (steps < 1) throw precondition_failed("witness schikhof: need at least one step");
    echo_field(o, rep);
    rep.input("steps", std::to_string(steps));
    std::vector<Radius> radii;
    if (radii_text.empty()) {
        radii = default_radius_schedule(static_cast<std::size_t>(steps));
    } else {
        for (const Rat& q : parse_rat_vector(radii_text)) radii.emplace_back(q);
        if (radii.size() != static_cast<std::size_t>(steps) + 1)
            throw precondition_failed("witness schikhof: need steps + 1 radii");
    }
    std::string radii_echo;
    for (const Radius& r : radii) radii_echo += (radii_echo.empty() ? "" : ", ") + r.str();
    rep.input("radii", "(" + radii_echo + ")");

    Tower tw{o.prime, o.level_cap};
    std::vector<EisElement> seq =
        default_dense_seq(o.prime, static_cast<std::size_t>(steps), o.prec);
    EisElement c0 = EisElement::zero(o.prime, 1);
    SchikhofChain chain = schikhof_chain(tw, seq, radii, c0, o.prec);

    // Recount every chain certificate from the raw steps; the library's own
    // booleans must agree with the recount.
    TowerSpace space{o.prime, o.level_cap, o.prec};
    std::size_t nested = 0, excluded = 0, last_in = 0, avoided = 0;
    const EisElement* prev = &c0;
    const Radius* prev_r = &radii[0];
    for (const ChainStep& st : chain.steps) {
        if (space.dist_within(st.center, *prev, *prev_r)) ++nested;
        if (!space.dist_within(st.excluded, st.center, st.radius)) ++excluded;
        prev = &st.center;
        prev_r = &st.radius;
    }
    const ChainStep& lastst = chain.steps.back();
    if (space.dist_within(lastst.center, c0, radii[0])) ++last_in;
    for (const ChainStep& st : chain.steps) {
        if (space.dist_within(lastst.center, st.center, st.radius)) ++last_in;
        if (!space.dist_within(st.excluded, lastst.center, lastst.radius)) ++avoided;
    }

    std::size_t nsteps = chain.steps.size();
    rep.certify(count_cert("chain.steps", nsteps, static_cast<std::size_t>(steps)));
    Certificate c = count_cert("chain.nested", nested, nsteps);
    c.pass = c.pass && chain.nested;
    rep.certify(std::move(c));
    c = count_cert("chain.excluded-point-outside", excluded, nsteps);
    c.pass = c.pass && chain.excluded;
    rep.certify(std::move(c));
    c = count_cert("chain.last-center-in-every-ball", last_in, nsteps + 1);
    c.pass = c.pass && chain.last_in_all;
    rep.certify(std::move(c));
    c = count_cert("chain.excluded-avoid-final-ball", avoided, nsteps);
    c.pass = c.pass && chain.avoided_all;
    rep.certify(std::move(c));

    Rat rmin = radii[0].value();
    for (const Radius& r : radii)
        if (r.value() < rmin) rmin = r.value();
    rep.certify({"chain.radii.above-half-start", rat_str(rmin), ">",
                 rat_str(radii[0].value() / 2), "", rmin > radii[0].value() / 2});
    rep.certify({"chain.level-cap", std::to_string(chain.max_level), "<=",
                 std::to_string(o.level_cap), "", chain.max_level <= o.level_cap});
}

// ---- seq ----

void cmd_seq_quotient_norm(const CliOptions& o, const std::string& rep_text, Report& rep) {
    PadicOps k{o.prime, o.prec};
    SeqText st = parse_seq_text(rep_text);
    echo_field(o, rep);
    rep.input("rep", seq_text_str(st));
    std::vector<VecOf<PadicOps>> prefix;
    for (const auto& v : st.prefix) prefix.push_back(vec_from_rats(k, v));
    SeqRep a = make_seq(k, std::move(prefix), vec_from_rats(k, st.tail));

    NormValue qn = quotient_norm_seq(k, a);
    NormValue oracle = NormValue::zero(o.prime);
    for (const Rat& q : st.tail) oracle = norm_max(oracle, rational_norm(o.prime, q));
    rep.certify({"seq.quotient-norm.equals-tail-norm", qn.str(), "=", oracle.str(), "",
                 cmp_norms(qn, oracle) == 0});
    NormValue sup = sup_norm(k, a);
    rep.certify({"seq.quotient-norm.bounded-by-sup", qn.str(), "<=", sup.str(),
                 "representative " + seq_str(k, a), norm_le(qn, sup)});
}

void cmd_seq_embed(const CliOptions& o, const std::string& vec_text, Report& rep) {
    PadicOps k{o.prime, o.prec};
    std::vector<Rat> xv = parse_rat_vector(vec_text);
    echo_field(o, rep);
    rep.input("vector", rat_vector_str(xv));
    rep.input("seed", std::to_string(o.seed));
    rep.input("trials", std::to_string(o.trials));
    VecOf<PadicOps> x = vec_from_rats(k, xv);
    SeqRep emb = diagonal_embed(k, x);
    rep.certify({"seq.embed.isometric", quotient_norm_seq(k, emb).str(), "=",
                 vec_norm(k, x).str(), "image " + seq_str(k, emb),
                 cmp_norms(quotient_norm_seq(k, emb), vec_norm(k, x)) == 0});

    // Additivity against random partners, skipping samples whose vector sum
    // cannot be certified.
    std::mt19937_64 rng(o.seed);
    std::size_t ok = 0, checked = 0;
    for (std::size_t t = 0; t < o.trials; ++t) {
        VecOf<PadicOps> y = random_vector(k, x.size(), rng);
        try {
            VecOf<PadicOps> sum(x.size(), k.zero());
            for (std::size_t i = 0; i < x.size(); ++i) sum[i] = k.add(x[i], y[i]);
            SeqRep lhs = seq_add(k, emb, diagonal_embed(k, y));
            SeqRep rhs = diagonal_embed(k, sum);
            ++checked;
            if (lhs.prefix.empty() && rhs.prefix.empty() &&
                vectors_equal(k, lhs.tail, rhs.tail))
                ++ok;
        } catch (const precision_loss&) {
        }
    }
    rep.certify(count_cert("seq.embed.additive", ok, checked,
                           std::to_string(o.trials - checked) + " samples skipped"));
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
    Report rep;
    rep.command = "ultracli";
    for (const auto& a : args) rep.command += " " + a;

    CLI::App app{"exact calculator for ultrametric analysis", "ultracli"};
    app.require_subcommand(1);

    std::string prime_text = "2";
    CliOptions opt;
    app.add_option("--prime", prime_text, "prime p of the base field");
    app.add_option("--prec", opt.prec, "working precision in p-adic digits");
    app.add_option("--level-cap", opt.level_cap, "largest allowed tower level");
    app.add_option("--seed", opt.seed, "seed for randomized sweeps");
    app.add_option("--trials", opt.trials, "sample count for randomized sweeps");

    std::function<void(const CliOptions&, Report&)> action;

    // padic
    auto* padic = app.add_subcommand("padic", "field arithmetic on Q_p");
    std::string pd_value, pd_op, pd_a, pd_b;
    auto* pd_norm = padic->add_subcommand("norm", "norm of a rational, checked");
    pd_norm->add_option("--value", pd_value)->required();
    pd_norm->callback([&] {
        action = [&](const CliOptions& o, Report& r) { cmd_padic_norm(o, pd_value, r); };
    });
    auto* pd_arith = padic->add_subcommand("arith", "one arithmetic step vs exact rationals");
    pd_arith->add_option("--op", pd_op)->required();
    pd_arith->add_option("--a", pd_a)->required();
    pd_arith->add_option("--b", pd_b)->required();
    pd_arith->callback([&] {
        action = [&](const CliOptions& o, Report& r) { cmd_padic_arith(o, pd_op, pd_a, pd_b, r); };
    });
    auto* pd_dist = padic->add_subcommand("dist", "distance between two rationals");
    pd_dist->add_option("--a", pd_a)->required();
    pd_dist->add_option("--b", pd_b)->required();
    pd_dist->callback([&] {
        action = [&](const CliOptions& o, Report& r) { cmd_padic_dist(o, pd_a, pd_b, r); };
    });

    // eis
    auto* eis = app.add_subcommand("eis", "totally ramified extensions of Q_p");
    long long eis_level = 2, eis_power = 1;
    std::string eis_low, eis_high;
    auto* eis_norm = eis->add_subcommand("norm", "norm of a uniformizer power");
    eis_norm->add_option("--level", eis_level)->required();
    eis_norm->add_option("--power", eis_power)->required();
    eis_norm->callback([&] {
        action = [&](const CliOptions& o, Report& r) { cmd_eis_norm(o, eis_level, eis_power, r); };
    });
    auto* eis_wit = eis->add_subcommand("witness", "element with norm inside an interval");
    eis_wit->add_option("--low", eis_low)->required();
    eis_wit->add_option("--high", eis_high)->required();
    eis_wit->callback([&] {
        action = [&](const CliOptions& o, Report& r) { cmd_eis_witness(o, eis_low, eis_high, r); };
    });

    // poly
    auto* poly = app.add_subcommand("poly", "polynomial root certificates");
    int poly_part = 0;
    std::string poly_f, poly_g, poly_alpha, poly_froots, poly_groots, poly_x0;
    long long poly_alpha_index = 0, poly_target = 8;
    auto* poly_rb = poly->add_subcommand("roots-bound", "root-continuity certificate");
    poly_rb->add_option("--part", poly_part)->required();
    poly_rb->add_option("--f", poly_f);
    poly_rb->add_option("--g", poly_g);
    poly_rb->add_option("--alpha", poly_alpha);
    poly_rb->add_option("--f-roots", poly_froots);
    poly_rb->add_option("--g-roots", poly_groots);
    poly_rb->add_option("--alpha-index", poly_alpha_index);
    poly_rb->callback([&] {
        action = [&](const CliOptions& o, Report& r) {
            cmd_poly_roots_bound(o, poly_part, poly_f, poly_g, poly_alpha, poly_froots,
                                 poly_groots, poly_alpha_index, r);
        };
    });
    auto* poly_h = poly->add_subcommand("hensel", "Newton lift with modular recheck");
    poly_h->add_option("--f", poly_f)->required();
    poly_h->add_option("--x0", poly_x0)->required();
    poly_h->add_option("--target", poly_target)->required();
    poly_h->callback([&] {
        action = [&](const CliOptions& o, Report& r) {
            cmd_poly_hensel(o, poly_f, poly_x0, poly_target, r);
        };
    });

    // balls
    auto* balls = app.add_subcommand("balls", "closed-ball calculus");
    std::string ba_c1, ba_r1, ba_c2, ba_r2, ba_tree;
    auto* ba_dich = balls->add_subcommand("dichotomy", "two balls miss or nest");
    ba_dich->add_option("--c1", ba_c1)->required();
    ba_dich->add_option("--r1", ba_r1)->required();
    ba_dich->add_option("--c2", ba_c2)->required();
    ba_dich->add_option("--r2", ba_r2)->required();
    ba_dich->callback([&] {
        action = [&](const CliOptions& o, Report& r) {
            cmd_balls_dichotomy(o, ba_c1, ba_r1, ba_c2, ba_r2, r);
        };
    });
    auto* ba_sub = balls->add_subcommand("subset", "assert containment on a tree space");
    ba_sub->add_option("--tree", ba_tree)->required();
    ba_sub->add_option("--c1", ba_c1)->required();
    ba_sub->add_option("--r1", ba_r1)->required();
    ba_sub->add_option("--c2", ba_c2)->required();
    ba_sub->add_option("--r2", ba_r2)->required();
    ba_sub->callback([&] {
        action = [&](const CliOptions& o, Report& r) {
            cmd_balls_subset(o, ba_tree, ba_c1, ba_r1, ba_c2, ba_r2, r);
        };
    });

    // linalg
    auto* linalg = app.add_subcommand("linalg", "normed linear algebra over Q_p");
    std::string la_vec, la_mat, la_vals;
    auto* la_dist = linalg->add_subcommand("dist", "distance to a spanned subspace");
    la_dist->add_option("--vector", la_vec)->required();
    la_dist->add_option("--matrix", la_mat)->required();
    la_dist->callback([&] {
        action = [&](const CliOptions& o, Report& r) { cmd_linalg_dist(o, la_vec, la_mat, r); };
    });
    auto* la_proj = linalg->add_subcommand("project", "orthogonal complement and projection");
    la_proj->add_option("--matrix", la_mat)->required();
    la_proj->callback([&] {
        action = [&](const CliOptions& o, Report& r) { cmd_linalg_project(o, la_mat, r); };
    });
    auto* la_ext = linalg->add_subcommand("extend", "norm-preserving functional extension");
    la_ext->add_option("--matrix", la_mat)->required();
    la_ext->add_option("--values", la_vals)->required();
    la_ext->callback([&] {
        action = [&](const CliOptions& o, Report& r) {
            cmd_linalg_extend(o, la_mat, la_vals, r);
        };
    });

    // witness
    auto* wit = app.add_subcommand("witness", "constructive counterexample chains");
    long long wit_steps = 5;
    std::string wit_radii;
    auto* wit_sch = wit->add_subcommand("schikhof", "nested balls avoiding a dense sequence");
    wit_sch->add_option("--steps", wit_steps)->required();
    wit_sch->add_option("--radii", wit_radii);
    wit_sch->callback([&] {
        action = [&](const CliOptions& o, Report& r) {
            cmd_witness_schikhof(o, wit_steps, wit_radii, r);
        };
    });

    // seq
    auto* seq = app.add_subcommand("seq", "bounded-sequence quotient model");
    std::string seq_rep, seq_vec;
    auto* seq_qn = seq->add_subcommand("quotient-norm", "norm of a class modulo null parts");
    seq_qn->add_option("--rep", seq_rep)->required();
    seq_qn->callback([&] {
        action = [&](const CliOptions& o, Report& r) { cmd_seq_quotient_norm(o, seq_rep, r); };
    });
    auto* seq_em = seq->add_subcommand("embed", "diagonal embedding of a vector");
    seq_em->add_option("--vector", seq_vec)->required();
    seq_em->callback([&] {
        action = [&](const CliOptions& o, Report& r) { cmd_seq_embed(o, seq_vec, r); };
    });

    // verify
    auto* verify = app.add_subcommand("verify", "cross-module invariant sweeps");
    auto* verify_all = verify->add_subcommand("all", "run every invariant suite");
    verify_all->callback([&] {
        action = [&](const CliOptions& o, Report& r) {
            Report vr = run_verification(o);
            r.inputs = std::move(vr.inputs);
            r.certificates = std::move(vr.certificates);
        };
    });

    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
        sub->require_subcommand(1);
        for (auto* leaf : sub->get_subcommands({})) leaf->fallthrough();
    }

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
        opt.prime = Int(prime_text);
        if (opt.prime < 2) throw precondition_failed("--prime must be at least 2");
        if (opt.prec < 1) throw precondition_failed("--prec must be at least 1");
        if (!action) throw precondition_failed("no subcommand selected");
        action(opt, rep);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        rep.error = std::string("usage: ") + e.what();
        out << rep.render();
        return 2;
    } catch (const ultra_error& e) {
        rep.error = e.what();
        out << rep.render();
        return 2;
    } catch (const std::exception& e) {
        rep.error = std::string("internal: ") + e.what();
        out << rep.render();
        return 2;
    }
    out << rep.render();
    return rep.all_pass() ? 0 : 1;
}

} // namespace ultra
