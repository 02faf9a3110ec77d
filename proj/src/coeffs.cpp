#include "skeinlab/coeffs.hpp"

#include "skeinlab/conway.hpp"
#include "skeinlab/hecke.hpp"

#include <algorithm>

namespace skeinlab {

StdFormDecomp decompose(const BiLaurent& P, int n, long w) {
    if (n < 1) throw std::invalid_argument("decompose: need n >= 1");
    StdFormDecomp d;
    d.n = n;
    d.w = w;
    d.p.assign(n, LaurentPoly("z"));
    d.h.assign(n, LaurentPoly("z"));

    // Q = P * (vz)^{n-1} * v^{-w} must be a polynomial in v^2 and z with
    // v-exponents in [0, 2(n-1)].
    const BiLaurent Q = P.shifted((n - 1) - w, n - 1);
    for (const auto& [k, c] : Q.terms()) {
        const auto [ev, ez] = k;
        if (ev < 0 || ev > 2 * (n - 1) || ev % 2 != 0)
            throw NotStandardForm("v-exponent " + std::to_string(ev) +
                                  " outside the standard grid");
        if (ez < 0)
            throw NotStandardForm("negative z-exponent " + std::to_string(ez) +
                                  " after clearing (vz)^{n-1}");
        d.p[ev / 2].add_term(ez, c);
    }
    for (int j = 0; j < n; ++j) d.h[j] = d.p[j].shifted(-(n - 1));
    return d;
}

std::vector<LaurentPoly> laurent_coeffs(const StdFormDecomp& d) { return d.h; }

LaurentPoly specialize(const BiLaurent& P, Specialization which) {
    if (which == Specialization::conway) return P.at_v_one();

    const LaurentPoly s2 = LaurentPoly::monomial(1, 2, "s");
    const LaurentPoly one_s = LaurentPoly::one("s");
    const LaurentPoly s_minus_sinv =
        LaurentPoly::monomial(1, 1, "s") - LaurentPoly::monomial(1, -1, "s");

    // Clear negative z-powers first: z -> s - s^-1 is not invertible.
    const long minz = P.min_z().value_or(0);
    const long m = std::max(0L, -minz);
    const BiLaurent cleared = P.shifted(0, m);
    const LaurentPoly num = substitute(
        cleared, which == Specialization::jones ? s2 : one_s, s_minus_sinv);
    if (m == 0) return num;
    return exact_div(num, pow(s_minus_sinv, static_cast<unsigned long>(m)));
}

InvariantSet invariants(const BraidWord& b) {
    InvariantSet r;
    r.P = homflypt(b);
    r.decomp = decompose(r.P, b.n, writhe(b));
    r.nabla = specialize(r.P, Specialization::conway);
    r.jones = specialize(r.P, Specialization::jones);
    r.alex = specialize(r.P, Specialization::alexander);
    return r;
}

namespace {

// p_j of the decomposition, with p_j = 0 for j >= n.
const LaurentPoly& p_or_zero(const StdFormDecomp& d, long j) {
    static const LaurentPoly zero("z");
    return (j >= 0 && j < static_cast<long>(d.p.size())) ? d.p[j] : zero;
}

// (C_{2j-a} - 1)/z^2 for a = 3 or a = 1, via exact division and,
// independently, via the closed binomial sum (for a = 3 that is
// sum_{i=0}^{j-3} binom(2j-4-i, i) z^{2j-6-2i}); returns nullopt when the
// two routes disagree.
std::optional<LaurentPoly> reduced_weight(long j, int a) {
    const LaurentPoly num = conway_torus(2 * j - a) - LaurentPoly::one("z");
    const LaurentPoly via_div =
        num.is_zero() ? LaurentPoly("z")
                      : exact_div(num, LaurentPoly::monomial(1, 2, "z"));
    LaurentPoly via_binom("z");
    const long top = j - 1 - (a + 1) / 2;  // j-3 for a=3, j-2 for a=1
    for (long i = 0; i <= top; ++i)
        via_binom.add_term(2 * (top - i), binomial(2 * j - a - 1 - i, i));
    if (via_div != via_binom) return std::nullopt;
    return via_div;
}

}  // namespace

bool low_coeff_forms_check(const BraidWord& b) {
    const int n = b.n;
    const long w = writhe(b);
    const BiLaurent P = homflypt(b);
    const StdFormDecomp d = decompose(P, n, w);
    const LaurentPoly nabla = specialize(P, Specialization::conway);

    LaurentPoly q0("z"), q2("z"), tail("z");
    for (long j = 3; j < n; ++j) {
        const auto w0 = reduced_weight(j, 3);
        const auto w2 = reduced_weight(j, 1);
        if (!w0 || !w2) return false;  // the two q-routes disagreed
        q0 += *w0 * d.p[j];
        q2 += *w2 * d.p[j];
        tail += d.p[j];
    }

    const LaurentPoly lead0 = (conway_torus(w + 4 - n) - nabla).shifted(n - 3);
    const LaurentPoly lead2 = (conway_torus(w + 2 - n) - nabla).shifted(n - 3);
    if (p_or_zero(d, 0) != lead0 - q0) return false;
    if (p_or_zero(d, 2) != lead2 - q2) return false;
    const LaurentPoly p1 =
        nabla.shifted(n - 1) - p_or_zero(d, 0) - p_or_zero(d, 2) - tail;
    return p_or_zero(d, 1) == p1;
}

namespace {

// Polynomial-form member of the weighted-sum family:
// sum_j C_{2j-1-kappa} p_j == (-1)^kappa z^{n-1} C_{kappa+2+w-n}.
bool weighted_sum_holds(const StdFormDecomp& d, long kappa) {
    LaurentPoly lhs("z");
    for (long j = 0; j < d.n; ++j) lhs += conway_torus(2 * j - 1 - kappa) * d.p[j];
    LaurentPoly rhs = conway_torus(kappa + 2 + d.w - d.n).shifted(d.n - 1);
    if (parity_sign(kappa) == -1) rhs = -rhs;
    return lhs == rhs;
}

}  // namespace

bool weighted_sum_check(const BraidWord& b, long kappa_lo, long kappa_hi) {
    const StdFormDecomp d = decompose(homflypt(b), b.n, writhe(b));
    if (!weighted_sum_holds(d, 2)) return false;  // C_{2j-3} row
    if (!weighted_sum_holds(d, 0)) return false;  // C_{2j-1} row
    for (long kappa = kappa_lo; kappa <= kappa_hi; ++kappa)
        if (!weighted_sum_holds(d, kappa)) return false;
    return true;
}

bool two_weight_family_check(const LaurentPoly& A0, const LaurentPoly& A1, const BraidWord& b) {
    const StdFormDecomp d = decompose(homflypt(b), b.n, writhe(b));
    const LaurentPoly z = LaurentPoly::monomial(1, 1, "z");
    LaurentPoly lhs("z");
    for (long j = 0; j < d.n; ++j) {
        const LaurentPoly Aj =
            exact_div(A0 * conway_torus(-2 * j + 2) - A1 * conway_torus(-2 * j), z);
        lhs += Aj * d.h[j];
    }
    const long kappa = d.w - d.n;
    const LaurentPoly rhs =
        exact_div(A0 * conway_torus(kappa + 3) - A1 * conway_torus(kappa + 1), z);
    return lhs == rhs;
}

bool mirror_stabilization_check(const BraidWord& b) {
    const int n = b.n;
    const long w = writhe(b);
    const BiLaurent P = homflypt(b);
    const StdFormDecomp d = decompose(P, n, w);

    // Mirror: p_{j,mirror}(z) = (-1)^{n-1} p_{n-1-j}(-z) = (-1)^{w+n-1} p_{n-1-j}(z).
    {
        const StdFormDecomp m = decompose(homflypt(mirror(b)), n, -w);
        for (int j = 0; j < n; ++j) {
            LaurentPoly a = d.p[n - 1 - j].negate_variable();
            if (parity_sign(n - 1) == -1) a = -a;
            LaurentPoly c = d.p[n - 1 - j];
            if (parity_sign(w + n - 1) == -1) c = -c;
            if (m.p[j] != a || m.p[j] != c) return false;
        }
    }
    // Positive stabilization: P unchanged, p_j -> z p_j, new top coefficient 0.
    {
        const BraidWord bp = stabilize(b, +1);
        const BiLaurent Pp = homflypt(bp);
        if (Pp != P) return false;
        const StdFormDecomp s = decompose(Pp, n + 1, w + 1);
        for (int j = 0; j < n; ++j) {
            if (s.p[j] != d.p[j].shifted(1)) return false;
            if (s.h[j] != d.h[j]) return false;
        }
        if (!s.p[n].is_zero()) return false;
    }
    // Negative stabilization: index shift, new p_0 = 0.
    {
        const BraidWord bm = stabilize(b, -1);
        const BiLaurent Pm = homflypt(bm);
        if (Pm != P) return false;
        const StdFormDecomp s = decompose(Pm, n + 1, w - 1);
        if (!s.p[0].is_zero()) return false;
        for (int j = 1; j <= n; ++j) {
            if (s.p[j] != d.p[j - 1].shifted(1)) return false;
            if (s.h[j] != d.h[j - 1]) return false;
        }
    }
    return true;
}

}  // namespace skeinlab
