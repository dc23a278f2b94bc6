#pragma once

#include "ultra/polynomial.hpp"

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

// Finite-dimensional linear algebra over (K^n, max norm) for K = Q_p or a
// fixed Eisenstein level, built around one primitive: max-norm-pivoted
// elimination. The pivot entry of each surviving row dominates the row, and
// rows are eliminated downward only, so every multiplier has norm <= 1 and
// no row norm ever grows. The resulting rows satisfy the orthogonal-basis
// identity ||sum l_i b_i|| = max |l_i| ||b_i||: in the pivot column of the
// first row attaining the max, every later row is zero and every earlier
// contribution is strictly smaller, so the leading term survives.
//
// That identity is what turns elimination into exact distance computation.
// Reducing x against the echelon rows subtracts, at each pivot column, the
// exact multiple that clears it; the residual is zero on pivot columns by
// construction, and no choice of coefficients can push the residual norm
// lower (any competing combination w either stays below the residual norm
// or reveals itself in its own leading pivot column). Distance to the
// subspace is therefore the max norm of the residual, with no search.
//
// Reduction is carried out in floor-tracked arithmetic (ApproxVal): a digit
// range that cancels completely becomes an explicit O(p^floor) instead of an
// exception, and the final norm is certified exactly when some surviving
// entry dominates every floor. Asking for the distance of a vector that lies
// in the subspace along a generic arithmetic path is the one question this
// cannot answer (the residual is all floors), and it throws precision_loss
// rather than asserting membership it cannot see.

namespace ultra {

template <class K>
using VecOf = std::vector<typename K::Elem>;
template <class K>
using MatOf = std::vector<VecOf<K>>;

// Max norm over the entries; certification rules are the Gauss norm's.
template <class K>
NormValue vec_norm(const K& k, const VecOf<K>& v) {
    return gauss_norm(k, v);
}

// Operator norm of a matrix between max-normed spaces: the maximal entry
// norm, attained on a standard basis vector.
template <class K>
NormValue operator_norm(const K& k, const MatOf<K>& a) {
    Int p = k.norm(k.zero()).prime();
    NormValue best = NormValue::zero(p);
    NormValue ceiling = NormValue::zero(p);
    for (const auto& row : a)
        for (const auto& c : row) {
            if (k.certified(c)) best = norm_max(best, k.norm(c));
            else if (!k.is_zero(c)) ceiling = norm_max(ceiling, NormValue(p, k.abs_prec(c)));
        }
    if (!ceiling.is_zero() && norm_lt(best, ceiling))
        throw precision_loss("operator norm not certified: a cancelled entry may reach " +
                             ceiling.str());
    return best;
}

inline NormValue norm_ratio(const NormValue& num, const NormValue& den) {
    if (num.is_zero()) return num;
    if (den.is_zero()) throw division_by_zero("norm ratio with zero denominator");
    return NormValue(num.prime(), num.valuation() + (-den.valuation()));
}

template <class K>
VecOf<K> unit_vec(const K& k, std::size_t n, std::size_t j) {
    VecOf<K> e(n, k.zero());
    e.at(j) = k.one();
    return e;
}

template <class K>
ApproxVal<K> approx_neg(const K& k, ApproxVal<K> a) {
    if (a.has_value) a.value = k.neg(a.value);
    return a;
}

template <class K>
ApproxVal<K> approx_sub(const K& k, const ApproxVal<K>& a, const ApproxVal<K>& b) {
    return approx_add(k, a, approx_neg(k, b));
}

// Divide by a certified element: the value part divides, the floor shifts.
template <class K>
ApproxVal<K> approx_div_elem(const K& k, const ApproxVal<K>& a, const typename K::Elem& b) {
    if (!k.certified(b)) throw precondition_failed("division by an uncertified element");
    ApproxVal<K> out = ApproxVal<K>::exact_zero(k);
    if (a.has_value) {
        out.value = k.div(a.value, b);
        out.has_value = k.certified(out.value);
        out.floor = k.abs_prec(out.value);
    }
    if (!a.floor.is_infinite()) out.floor = min(out.floor, a.floor + (-k.val(b)));
    if (out.has_value && k.val(out.value) >= out.floor) out.has_value = false;
    return out;
}

// Collapse to a plain element: certified values and exact zeros pass, a
// finite floor means the entry is genuinely unknown at this precision.
template <class K>
typename K::Elem approx_to_elem(const K& k, const ApproxVal<K>& a) {
    if (a.has_value) return a.value;
    if (a.floor.is_infinite()) return k.zero();
    throw precision_loss("entry known only as O(p^" + a.floor.str() + ")");
}

// Echelon form of a spanning list. rows are the surviving orthogonal
// vectors in pivot-selection order; pivots[i] is the column whose entry
// dominates rows[i]; transform[i] expresses rows[i] over the input list;
// dependencies holds the coefficient rows of inputs that eliminated to
// exactly zero (used to check linear maps for consistency).
template <class K>
struct Echelon {
    std::size_t ambient = 0;
    MatOf<K> rows;
    std::vector<std::size_t> pivots;
    MatOf<K> transform;
    MatOf<K> dependencies;

    std::size_t rank() const { return rows.size(); }
    bool is_pivot(std::size_t col) const {
        for (std::size_t c : pivots)
            if (c == col) return true;
        return false;
    }
};

template <class K>
Echelon<K> echelonize(const K& k, const MatOf<K>& spanning, std::size_t ambient) {
    Echelon<K> out;
    out.ambient = ambient;
    for (const auto& v : spanning)
        if (v.size() != ambient)
            throw precondition_failed("spanning vector of wrong dimension");

    MatOf<K> work = spanning;
    std::size_t m = work.size();
    MatOf<K> trans(m, VecOf<K>(m, k.zero()));
    for (std::size_t i = 0; i < m; ++i) trans[i][i] = k.one();
    std::vector<char> processed(m, 0);

    for (;;) {
        // Pivot: maximal certified entry norm among unprocessed rows, ties
        // broken by smallest row then smallest column.
        bool found = false;
        std::size_t pr = 0, pc = 0;
        Int p = k.norm(k.zero()).prime();
        NormValue best = NormValue::zero(p);
        for (std::size_t r = 0; r < m; ++r) {
            if (processed[r]) continue;
            for (std::size_t c = 0; c < ambient; ++c) {
                const auto& e = work[r][c];
                if (!k.certified(e)) continue;
                if (!found || norm_lt(best, k.norm(e))) {
                    found = true;
                    best = k.norm(e);
                    pr = r;
                    pc = c;
                }
            }
        }
        // An uncertified entry whose ceiling reaches the chosen maximum
        // makes the selection (hence the whole basis) ambiguous.
        for (std::size_t r = 0; r < m; ++r) {
            if (processed[r]) continue;
            for (std::size_t c = 0; c < ambient; ++c) {
                const auto& e = work[r][c];
                if (k.certified(e) || k.is_zero(e)) continue;
                NormValue ceil(p, k.abs_prec(e));
                if (!found || !norm_lt(ceil, best))
                    throw precision_loss("pivot selection indeterminate: entry known only up "
                                         "to O(p^" + k.abs_prec(e).str() + ")");
            }
        }
        if (!found) break;

        processed[pr] = 1;
        out.rows.push_back(work[pr]);
        out.pivots.push_back(pc);
        out.transform.push_back(trans[pr]);

        for (std::size_t r = 0; r < m; ++r) {
            if (processed[r] || k.is_zero(work[r][pc])) continue;
            typename K::Elem mu = k.div(work[r][pc], work[pr][pc]);
            for (std::size_t c = 0; c < ambient; ++c) {
                if (c == pc) {
                    // Eliminated exactly: the true multiplier clears it.
                    work[r][c] = k.zero();
                    continue;
                }
                if (k.is_zero(work[pr][c])) continue;
                work[r][c] = k.sub(work[r][c], k.mul(mu, work[pr][c]));
            }
            for (std::size_t t = 0; t < m; ++t) {
                if (k.is_zero(trans[pr][t])) continue;
                trans[r][t] = k.sub(trans[r][t], k.mul(mu, trans[pr][t]));
            }
        }
    }

    // Whatever remains eliminated to exactly zero: record the dependency.
    for (std::size_t r = 0; r < m; ++r)
        if (!processed[r]) out.dependencies.push_back(trans[r]);
    return out;
}

// Residual and coordinates of x against an echelon basis. residual[c] is
// exactly zero on every pivot column whose multiplier was determined (the
// subtracted multiple clears it as a field identity, and an indeterminate
// multiplier's uncertainty flows into the other columns as floors).
template <class K>
struct Reduction {
    std::vector<ApproxVal<K>> residual;
    std::vector<ApproxVal<K>> coords;
};

template <class K>
Reduction<K> reduce_against(const K& k, const Echelon<K>& v, const VecOf<K>& x) {
    if (x.size() != v.ambient) throw precondition_failed("vector of wrong dimension");
    Reduction<K> out;
    out.residual.reserve(x.size());
    for (const auto& e : x) out.residual.push_back(ApproxVal<K>::from_elem(k, e));
    for (std::size_t i = 0; i < v.rows.size(); ++i) {
        std::size_t c = v.pivots[i];
        ApproxVal<K> rc = out.residual[c];
        if (!rc.has_value && rc.floor.is_infinite()) {
            out.coords.push_back(ApproxVal<K>::exact_zero(k));
            continue;
        }
        ApproxVal<K> mu = approx_div_elem(k, rc, v.rows[i][c]);
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (j == c || k.is_zero(v.rows[i][j])) continue;
            out.residual[j] = approx_sub(
                k, out.residual[j],
                approx_mul(k, mu, ApproxVal<K>::from_elem(k, v.rows[i][j])));
        }
        out.residual[c] = ApproxVal<K>::exact_zero(k);
        out.coords.push_back(std::move(mu));
    }
    return out;
}

// Certified max norm of a reduction residual. Exact when every floored
// entry sits below some certified entry; all-exact-zero is distance zero.
template <class K>
NormValue residual_norm(const K& k, const std::vector<ApproxVal<K>>& r) {
    Int p = k.norm(k.zero()).prime();
    NormValue best = NormValue::zero(p);
    NormValue ceiling = NormValue::zero(p);
    for (const auto& e : r) {
        if (e.has_value) best = norm_max(best, k.norm(e.value));
        else if (!e.floor.is_infinite()) ceiling = norm_max(ceiling, NormValue(p, e.floor));
    }
    if (!ceiling.is_zero() && norm_lt(best, ceiling))
        throw precision_loss("residual norm not certified: a cancelled entry may reach " +
                             ceiling.str() + ", above the certified maximum " + best.str());
    return best;
}

template <class K>
NormValue dist_to_subspace(const K& k, const VecOf<K>& x, const Echelon<K>& v) {
    return residual_norm(k, reduce_against(k, v, x).residual);
}

template <class K>
NormValue dist_to_subspace(const K& k, const VecOf<K>& x, const MatOf<K>& spanning) {
    return dist_to_subspace(k, x, echelonize(k, spanning, x.size()));
}

// The quotient norm of [x] in K^n / V is the distance to V.
template <class K>
NormValue quotient_norm(const K& k, const VecOf<K>& x, const MatOf<K>& spanning) {
    return dist_to_subspace(k, x, spanning);
}

// Birkhoff-James orthogonality of x to a subspace (or a single vector):
// ||x|| equals the distance. Decided by the exact distance computation, not
// by sampling. Not symmetric, and the zero vector is orthogonal to everything.
template <class K>
bool is_morth(const K& k, const VecOf<K>& x, const Echelon<K>& v) {
    return norm_eq(dist_to_subspace(k, x, v), vec_norm(k, x));
}

template <class K>
bool is_morth(const K& k, const VecOf<K>& x, const MatOf<K>& spanning) {
    return is_morth(k, x, echelonize(k, spanning, x.size()));
}

template <class K>
bool is_orth(const K& k, const VecOf<K>& x, const VecOf<K>& y) {
    return is_morth(k, x, MatOf<K>{y});
}

// Apply a matrix (rows of length n) to a vector, floor-tracked.
template <class K>
std::vector<ApproxVal<K>> apply_approx(const K& k, const MatOf<K>& a, const VecOf<K>& x) {
    std::vector<ApproxVal<K>> out;
    out.reserve(a.size());
    for (const auto& row : a) {
        if (row.size() != x.size()) throw precondition_failed("matrix/vector size mismatch");
        ApproxVal<K> acc = ApproxVal<K>::exact_zero(k);
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (k.is_zero(row[j]) || k.is_zero(x[j])) continue;
            acc = approx_add(k, acc,
                             approx_mul(k, ApproxVal<K>::from_elem(k, row[j]),
                                        ApproxVal<K>::from_elem(k, x[j])));
        }
        out.push_back(std::move(acc));
    }
    return out;
}

template <class K>
VecOf<K> apply(const K& k, const MatOf<K>& a, const VecOf<K>& x) {
    VecOf<K> out;
    auto approx = apply_approx(k, a, x);
    out.reserve(approx.size());
    for (const auto& e : approx) out.push_back(approx_to_elem(k, e));
    return out;
}

// True when every entry of Ax agrees with y on their joint digits (exact
// zeros included); a certified discrepancy returns false.
template <class K>
bool image_matches(const K& k, const MatOf<K>& a, const VecOf<K>& x, const VecOf<K>& y) {
    auto approx = apply_approx(k, a, x);
    if (approx.size() != y.size()) throw precondition_failed("image/vector size mismatch");
    for (std::size_t i = 0; i < y.size(); ++i) {
        ApproxVal<K> d = approx_sub(k, approx[i], ApproxVal<K>::from_elem(k, y[i]));
        if (d.has_value) return false;
    }
    return true;
}

// Orthogonal complement and projection. The complement is spanned by the
// standard basis vectors outside the pivot set (each is its own reduction
// residual), and P sends x to the corrective combination x - res(x), which
// lands in V, fixes V at precision, and never increases the norm.
template <class K>
struct Complement {
    MatOf<K> basis;     // spanning rows of W
    MatOf<K> projector; // n x n matrix of P
};

template <class K>
Complement<K> orth_complement_and_projection(const K& k, const Echelon<K>& v) {
    std::size_t n = v.ambient;
    Complement<K> out;
    out.projector.assign(n, VecOf<K>(n, k.zero()));
    for (std::size_t j = 0; j < n; ++j) {
        VecOf<K> ej = unit_vec(k, n, j);
        if (!v.is_pivot(j)) {
            // e_j vanishes on every pivot column, so its reduction residual
            // is e_j itself and P e_j = 0 exactly; no arithmetic needed.
            out.basis.push_back(std::move(ej));
            continue;
        }
        Reduction<K> red = reduce_against(k, v, ej);
        for (std::size_t i = 0; i < n; ++i) {
            ApproxVal<K> pij = approx_sub(k, ApproxVal<K>::from_elem(k, ej[i]),
                                          red.residual[i]);
            out.projector[i][j] = approx_to_elem(k, pij);
        }
    }
    return out;
}

// A nonzero vector orthogonal to V: the first standard basis vector outside
// the pivot set (its reduction residual is itself). Orthogonality and
// nonzeroness are re-verified before returning.
template <class K>
VecOf<K> morth_vector(const K& k, const Echelon<K>& v) {
    if (v.rank() >= v.ambient)
        throw subspace_is_full("no orthogonal vector: subspace has full dimension " +
                               std::to_string(v.ambient));
    std::size_t j = 0;
    while (v.is_pivot(j)) ++j;
    VecOf<K> a = unit_vec(k, v.ambient, j);
    if (vec_norm(k, a).is_zero() || !is_morth(k, a, v))
        throw ultra_error("internal: orthogonal witness failed its own certificate");
    return a;
}

// Norm of a linear map defined on an orthogonal (echelon) basis by the
// vectors it sends them to: max over rows of ||value|| / ||row||.
template <class K>
NormValue functional_norm_on(const K& k, const Echelon<K>& v, const MatOf<K>& values) {
    if (values.size() != v.rank())
        throw precondition_failed("one value per basis vector required");
    Int p = k.norm(k.zero()).prime();
    NormValue best = NormValue::zero(p);
    for (std::size_t i = 0; i < values.size(); ++i)
        best = norm_max(best, norm_ratio(vec_norm(k, values[i]), vec_norm(k, v.rows[i])));
    return best;
}

// Norm-preserving extension F = f ∘ P of a map given on a spanning list of
// D. The echelon transform rewrites f on the orthogonal basis; dependencies
// among the spanning vectors must map to zero or the data is inconsistent.
template <class K>
struct Extension {
    Echelon<K> basis;      // echelon form of D
    MatOf<K> basis_values; // f on the echelon rows
    MatOf<K> matrix;       // F, codomain-dim x ambient-dim
};

template <class K>
Extension<K> hahn_banach_extend(const K& k, const MatOf<K>& spanning, const MatOf<K>& fvals,
                                std::size_t ambient, std::size_t codomain) {
    if (fvals.size() != spanning.size())
        throw precondition_failed("one value per spanning vector required");
    for (const auto& y : fvals)
        if (y.size() != codomain) throw precondition_failed("value of wrong dimension");

    Extension<K> out;
    out.basis = echelonize(k, spanning, ambient);

    auto combine = [&](const VecOf<K>& coeffs) {
        std::vector<ApproxVal<K>> acc(codomain, ApproxVal<K>::exact_zero(k));
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            if (k.is_zero(coeffs[j])) continue;
            ApproxVal<K> cj = ApproxVal<K>::from_elem(k, coeffs[j]);
            for (std::size_t t = 0; t < codomain; ++t)
                acc[t] = approx_add(
                    k, acc[t], approx_mul(k, cj, ApproxVal<K>::from_elem(k, fvals[j][t])));
        }
        return acc;
    };

    for (const auto& dep : out.basis.dependencies) {
        auto img = combine(dep);
        for (const auto& e : img)
            if (e.has_value)
                throw inconsistent_map("dependent spanning vectors map to different values");
    }

    for (const auto& t : out.basis.transform) {
        auto img = combine(t);
        VecOf<K> g;
        g.reserve(codomain);
        for (const auto& e : img) g.push_back(approx_to_elem(k, e));
        out.basis_values.push_back(std::move(g));
    }

    out.matrix.assign(codomain, VecOf<K>(ambient, k.zero()));
    for (std::size_t j = 0; j < ambient; ++j) {
        Reduction<K> red = reduce_against(k, out.basis, unit_vec(k, ambient, j));
        std::vector<ApproxVal<K>> col(codomain, ApproxVal<K>::exact_zero(k));
        for (std::size_t i = 0; i < red.coords.size(); ++i) {
            const ApproxVal<K>& mu = red.coords[i];
            if (!mu.has_value && mu.floor.is_infinite()) continue;
            for (std::size_t t = 0; t < codomain; ++t)
                col[t] = approx_add(
                    k, col[t],
                    approx_mul(k, mu, ApproxVal<K>::from_elem(k, out.basis_values[i][t])));
        }
        for (std::size_t t = 0; t < codomain; ++t)
            out.matrix[t][j] = approx_to_elem(k, col[t]);
    }
    return out;
}

// Solve M x = rhs for square certified M by the same pivoting rule as
// echelonize, then back-substitution. Throws division_by_zero if M is
// singular at the working precision.
template <class K>
VecOf<K> solve_square(const K& k, MatOf<K> m, VecOf<K> rhs) {
    std::size_t n = m.size();
    if (rhs.size() != n) throw precondition_failed("solve: size mismatch");
    for (const auto& row : m)
        if (row.size() != n) throw precondition_failed("solve: matrix not square");

    std::vector<std::size_t> pivot_col;
    std::vector<char> col_used(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
        bool found = false;
        std::size_t pr = s, pc = 0;
        Int p = k.norm(k.zero()).prime();
        NormValue best = NormValue::zero(p);
        for (std::size_t r = s; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                if (col_used[c] || !k.certified(m[r][c])) continue;
                if (!found || norm_lt(best, k.norm(m[r][c]))) {
                    found = true;
                    best = k.norm(m[r][c]);
                    pr = r;
                    pc = c;
                }
            }
        if (!found) throw division_by_zero("solve: matrix singular at working precision");
        if (pr != s) {
            std::swap(m[pr], m[s]);
            std::swap(rhs[pr], rhs[s]);
        }
        col_used[pc] = 1;
        pivot_col.push_back(pc);
        for (std::size_t r = s + 1; r < n; ++r) {
            if (k.is_zero(m[r][pc])) continue;
            typename K::Elem mu = k.div(m[r][pc], m[s][pc]);
            for (std::size_t c = 0; c < n; ++c) {
                if (c == pc) {
                    m[r][c] = k.zero();
                    continue;
                }
                if (k.is_zero(m[s][c])) continue;
                m[r][c] = k.sub(m[r][c], k.mul(mu, m[s][c]));
            }
            rhs[r] = k.sub(rhs[r], k.mul(mu, rhs[s]));
        }
    }

    VecOf<K> x(n, k.zero());
    for (std::size_t s = n; s-- > 0;) {
        typename K::Elem acc = rhs[s];
        for (std::size_t t = s + 1; t < n; ++t) {
            if (k.is_zero(m[s][pivot_col[t]]) || k.is_zero(x[pivot_col[t]])) continue;
            acc = k.sub(acc, k.mul(m[s][pivot_col[t]], x[pivot_col[t]]));
        }
        if (!k.is_zero(acc)) acc = k.div(acc, m[s][pivot_col[s]]);
        x[pivot_col[s]] = std::move(acc);
    }
    return x;
}

// Fixed-level Eisenstein coefficient field. Division inverts through the
// multiplication matrix over Q_p, so the whole module instantiates over
// ramified levels as well.
EisElement eis_invert(const EisElement& a, unsigned prec = default_padic_precision);

struct EisOps {
    using Elem = EisElement;
    Int p;
    unsigned e = 2;
    unsigned prec = default_padic_precision;

    Tower tw() const { return Tower{p, e}; }
    Elem zero() const { return EisElement::zero(p, e); }
    Elem one() const {
        return EisElement::from_padic(e, Padic::from_int(p, 1, prec));
    }
    Elem add(const Elem& a, const Elem& b) const { return tw().add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return tw().sub(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return tw().mul(a, b); }
    Elem div(const Elem& a, const Elem& b) const {
        if (b.is_zero()) throw division_by_zero("division by exact zero");
        return tw().mul(a, eis_invert(b, prec));
    }
    Elem neg(const Elem& a) const { return -a; }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool certified(const Elem& a) const { return a.has_certified_digit(); }
    Valuation val(const Elem& a) const { return a.valuation(); }
    NormValue norm(const Elem& a) const { return a.norm(); }
    Valuation abs_prec(const Elem& a) const { return a.info_ceiling(); }
    Distinction compare(const Elem& a, const Elem& b) const { return distinguish(a, b, e); }
    std::string str(const Elem& a) const { return a.str(); }
};

// Brute-force distance reference for dim V <= 2: enumerate the candidate
// multipliers at which some residual coordinate vanishes (plus zero), take
// the best. Entirely independent of the elimination path.
NormValue dist_oracle_small(const PadicOps& k, const VecOf<PadicOps>& x,
                            const MatOf<PadicOps>& spanning);

// Samplers for the property harnesses (deterministic in the engine state).
Padic random_scalar(const PadicOps& k, std::mt19937_64& rng);
VecOf<PadicOps> random_vector(const PadicOps& k, std::size_t n, std::mt19937_64& rng);
MatOf<PadicOps> random_spanning(const PadicOps& k, std::size_t n, std::size_t dim,
                                std::mt19937_64& rng);

// Checks ||d + la|| = max(||d||, ||l a||) on random d in span(v), scalars l.
// Requires a orthogonal to v. Samples that lose precision are skipped and
// not counted.
struct IsometrySamples {
    std::size_t checked = 0;
    bool pass = true;
};
IsometrySamples product_sum_isometry_check(const PadicOps& k, const Echelon<PadicOps>& v,
                                           const VecOf<PadicOps>& a, std::mt19937_64& rng,
                                           std::size_t trials);

// Immediacy of an isometric embedding K^k -> K^n given by the matrix a
// (n rows, k columns): no nonzero vector of the codomain is orthogonal to
// the range iff the range is everything. When it is not, the witness is a
// verified nonzero orthogonal vector.
struct Immediacy {
    bool immediate = false;
    VecOf<PadicOps> witness; // empty when immediate
};
Immediacy is_immediate(const PadicOps& k, const MatOf<PadicOps>& a, std::mt19937_64& rng,
                       std::size_t samples = 32);

} // namespace ultra
