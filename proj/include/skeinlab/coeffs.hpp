/**
 * @file coeffs.hpp
 * @brief Standard-form coefficient extraction from the Homflypt polynomial.
 *
 * For the closure of b in B_n with writhe w, the invariant P always fits
 *
 *     P = v^w * sum_{j=0}^{n-1} p_j(z) v^{2j} / (v z)^{n-1},
 *
 * with each p_j an ordinary polynomial in z.  decompose() extracts the p_j
 * (and the Laurent versions h_j = p_j / z^{n-1}) and fails loudly when the
 * input does not have that shape.  On top of the decomposition sit the
 * specializations (Conway, Jones, Alexander) and exact checkers for the
 * relations tying p_0, p_1, p_2 and the weighted h_j sums to the torus
 * family C_p.
 */
#pragma once

#include "skeinlab/algebra.hpp"
#include "skeinlab/braid.hpp"

#include <vector>

namespace skeinlab {

/// Thrown when a polynomial cannot be written in the standard closure form.
struct NotStandardForm : std::runtime_error {
    explicit NotStandardForm(const std::string& what) : std::runtime_error(what) {}
};

/// Standard-form data of a closure invariant.
struct StdFormDecomp {
    int n = 1;
    long w = 0;
    std::vector<LaurentPoly> p;  ///< p_0..p_{n-1}, ordinary polynomials in z
    std::vector<LaurentPoly> h;  ///< h_j = p_j / z^{n-1}
};

/**
 * @brief Extracts p_0..p_{n-1} from P for strand count n and writhe w.
 *
 * Multiplies by (vz)^{n-1} v^{-w} and reads off the v-graded slices; any
 * odd or out-of-range v-exponent, or a negative z-exponent, throws
 * NotStandardForm.
 */
StdFormDecomp decompose(const BiLaurent& P, int n, long w);

/// The Laurent coefficients h_j of the decomposition.
std::vector<LaurentPoly> laurent_coeffs(const StdFormDecomp& d);

enum class Specialization {
    conway,     ///< v -> 1, variable stays z
    jones,      ///< v -> s^2, z -> s - s^-1 (t = s^2)
    alexander,  ///< v -> 1,   z -> s - s^-1
};

/**
 * @brief Specialize P; Jones/Alexander land in the variable "s".
 *
 * Negative z-powers are cleared by multiplying through before substituting
 * and divided back out exactly afterwards (always exact for closure
 * invariants).
 */
LaurentPoly specialize(const BiLaurent& P, Specialization which);

/// All specializations plus the engine polynomial for one word.
struct InvariantSet {
    BiLaurent P;
    StdFormDecomp decomp;
    LaurentPoly nabla;  // Conway, in z
    LaurentPoly jones;  // in s, t = s^2
    LaurentPoly alex;   // in s
};
InvariantSet invariants(const BraidWord& b);

/**
 * @brief Exact check of the p_0/p_1/p_2 closed forms for the closure of b:
 *
 *   p_0 = z^{n-3} { C_{w+4-n} - nabla } - q_0
 *   p_1 = z^{n-1} nabla - p_0 - p_2 - sum_{j>=3} p_j
 *   p_2 = z^{n-3} { C_{w+2-n} - nabla } - q_2
 *
 * with q_0 = sum_{j>=3} z^-2 (C_{2j-3} - 1) p_j and q_2 the same with
 * C_{2j-1}.  The q-sums are computed both by exact division and by their
 * closed binomial expansions; a mismatch between the two routes also
 * fails the check.
 */
bool low_coeff_forms_check(const BraidWord& b);

/**
 * @brief Exact check of the weighted h_j sum rules for the closure of b,
 * in polynomial form (both sides cleared by z^{n-1}):
 *
 *   sum_j C_{2j-3} h_j = C_{4+w-n}
 *   sum_j C_{2j-1} h_j = C_{2+w-n}
 *   sum_j C_{2j-1-kappa} h_j = (-1)^kappa C_{kappa+2+w-n}   for each kappa
 *
 * The first two are the kappa = 2 and kappa = 0 members; they are checked
 * explicitly and the family is checked for kappa in [kappa_lo, kappa_hi].
 */
bool weighted_sum_check(const BraidWord& b, long kappa_lo, long kappa_hi);

/**
 * @brief Exact check of the two-weight combination family: with
 * A_j = { A0 C_{-2j+2} - A1 C_{-2j} } / z and kappa = w - n,
 *
 *   sum_j A_j h_j = { A0 C_{kappa+3} - A1 C_{kappa+1} } / z.
 */
bool two_weight_family_check(const LaurentPoly& A0, const LaurentPoly& A1, const BraidWord& b);

/**
 * @brief Exact coefficient-level checks of mirroring and stabilization:
 * mirror reverses and alternates the p_j, positive stabilization multiplies
 * them by z (new top coefficient 0), negative stabilization shifts the
 * index up (new p_0 = 0); h_j are unchanged / index-shifted accordingly.
 */
bool mirror_stabilization_check(const BraidWord& b);

}  // namespace skeinlab
