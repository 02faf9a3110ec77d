#pragma once

/// \file threebraid.hpp
/// \brief Everything specific to three-strand braids: closed forms for P,
///        V, and the coefficient polynomials; the equal-P decision; the
///        landscape property; the omega conjugacy representatives with
///        closed-form Alexander polynomials; augmentation identities for
///        full-twist prefixes; and the equal-V survey.

#include "skeinlab/coeffs.hpp"
#include "skeinlab/corpus.hpp"

#include <optional>
#include <utility>

namespace skeinlab {

/// Coefficient polynomials of a three-strand closure directly from writhe
/// and the Conway polynomial:
///   p_0 = C_{w+1} - nabla,  p_2 = C_{w-1} - nabla,  p_1 = z^2 nabla - p_0 - p_2.
/// The conway argument is supplied externally (engine or oracle) so this
/// stays free of its own skein recursion.  Throws std::invalid_argument
/// unless b.n == 3.
StdFormDecomp p3_closed(const BraidWord& b, const LaurentPoly& conway);

/// Closed form for the full polynomial of a three-strand closure:
///   P = P_{T_w} P_{O_2} - nabla v^w (P_{O_3} - 1),
/// with the two-strand torus closed form for P_{T_w} and delta, delta^2 for
/// the unlink values.  nabla comes from the engine.  Must equal the engine
/// P; throws std::invalid_argument unless b.n == 3.
BiLaurent p3_lemma1(const BraidWord& b);

/// Jones polynomial of a three-strand closure from its Alexander polynomial
/// (engine normalization), in the variable s (t = s^2):
///   V = t^{(w-2)/2} { t^{w+1} + eps_w (1+t+t^2) } - (1+t+t^2) t^{w-1} Delta.
LaurentPoly jones3(const BraidWord& b, const LaurentPoly& alexander);

/// Which clause of the equal-P criterion fired.
enum class EqualPCase {
    none,          ///< prediction: P differs
    same_writhe,   ///< equal writhe, equal Conway
    writhe_gap,    ///< writhe differs by 2 and nabla = C_{w_hi - 1}
    opposite_two,  ///< writhes +2 / -2 with nabla = 1
};

struct EqualPDecision {
    bool equal = false;
    EqualPCase which = EqualPCase::none;
};

/// Predicts P-equality of two three-strand closures from writhes and Conway
/// polynomials alone.  nb/nc are the Conway polynomials of b's and c's
/// closures.
EqualPDecision equal_p_predict(long wb, const LaurentPoly& nb,
                               long wc, const LaurentPoly& nc);

/// Convenience wrapper computing writhes and Conway polynomials via the
/// engine.  Throws std::invalid_argument unless both words have n == 3.
EqualPDecision equal_p_decision(const BraidWord& b, const BraidWord& c);

/// Degree landscape of a three-strand decomposition: true iff
/// deg p_0 <= deg p_1 or deg p_2 <= deg p_1, where the zero polynomial has
/// degree -infinity (so a zero endpoint always satisfies its side).
bool landscape_check(const StdFormDecomp& d);

/// One of the seven conjugacy-representative families of three-strand
/// words.  alpha denotes the two-letter block sigma_2 sigma_1, eta the
/// alternating product of sigma_2^{-e_k} sigma_1^{E_k} blocks.
///
///   0: alpha^{3d}           1: alpha^{3d+1}        2: alpha^{3d+2}
///   3: alpha^{3d+1} sigma_2 4: alpha^{3d} sigma_2^{-e}
///   5: alpha^{3d} sigma_1^{E}
///   6: alpha^{3d} prod_k sigma_2^{-e_k} sigma_1^{E_k}
struct OmegaClass {
    int index = 0;  ///< family number, 0..6
    long d = 0;     ///< twist parameter, any integer
    long e = 1;     ///< family 4 exponent, >= 1
    long E = 1;     ///< family 5 exponent, >= 1
    std::vector<std::pair<long, long>> eta;  ///< family 6 blocks (e_k, E_k), each >= 1
};

/// Literal braid word of the family representative.  Throws
/// std::invalid_argument on a bad index or non-positive exponent.
BraidWord omega_rep(const OmegaClass& c);

/// Closed-form Alexander polynomial of the representative's closure, in s
/// (t = s^2), evaluated exactly; division by G = t^2 + t + 1 must be exact
/// or InexactDivision propagates.  Family 6 adds the engine's Alexander
/// polynomial of the eta closure to the closed-form correction term.
LaurentPoly omega_alexander(const OmegaClass& c);

/// Augmentation identities for full-twist prefixes: for a > 0 and a
/// three-strand word g with w = w(g),
///   nabla(alpha^3 g)    = nabla(g) + C_{w+5} - C_{w+1}
///   nabla(alpha^{3a} g) = nabla(g) + sum_j C_{w+6j-1} - sum_j C_{w+6j-5}
///   nabla(alpha^{-3a} g)= nabla(g) + sum_j C_{w-6j+1} - sum_j C_{w-6j+5}
/// plus the same three shapes for P with v^{6...} weights and two-strand
/// torus values.  All six are engine-checked exactly.
bool augmented_identities(long a, const BraidWord& g);

/// Recognizes g as an alternating product sigma_2^{-e_1} sigma_1^{E_1} ...
/// sigma_2^{-e_r} sigma_1^{E_r} (after free reduction) and returns the
/// (e_k, E_k) pairs, or nullopt when g has no such factorization.
std::optional<std::vector<std::pair<long, long>>>
eta_factorization(const BraidWord& g);

/// Checks on the alternating-product closures (blocks as returned by
/// eta_factorization, E_i the column sums):
///  * leading coefficients of nabla: with E = E_1 + E_2 > the block count r
///    pinned down by the expansion, coeff of z^{E-2} is (-1)^{E_2+1} and
///    coeff of z^{E-4} is (-1)^{E_2+1}(E-3-r); requires E_1, E_2 > 1;
///  * the matching Alexander statement: coeff of s^{E-2} is (-1)^{E_2+1}
///    and coeff of s^{E-4} is -(-1)^{E_2+1}(r+1);
///  * for r = 2, the exact product form
///    nabla = (-1)^{E_2+1} { C_{E_2} C_{E_1} - prod_k C_{e_k} C_{E_k'} }.
struct EtaChecks {
    bool leading_applicable = false;  ///< E_1 > 1 and E_2 > 1
    bool leading_ok = true;           ///< nabla leading coefficients
    bool alexander_ok = true;         ///< Alexander leading coefficients
    bool product_applicable = false;  ///< exactly two blocks
    bool product_ok = true;           ///< r = 2 exact product form
    bool all() const {
        return leading_ok && alexander_ok && product_ok;
    }
};
EtaChecks eta_product_checks(const std::vector<std::pair<long, long>>& blocks);

/// The distinct-P / equal-Conway pair family: for x > y > 0 with x = y
/// (mod 2), returns
///   beta  = alpha^{3x} sigma_2^{-3x-3y-1} sigma_1,
///   gamma = alpha^{3y} sigma_2^{-3x-3y-1} sigma_1.
/// Their closures share a nonzero Conway polynomial yet have different P.
/// Throws std::invalid_argument when the constraints fail.
std::pair<BraidWord, BraidWord> example1_instance(long x, long y);

/// Predicted Alexander pair for equal-V closures with writhes a = b + 2k,
/// k > 1 (knot case mu = 1: k = 2, a = 2(4p+1); two-component case mu = 2:
/// k odd, a = k(4p+3)).  Returns (Delta_beta, Delta_gamma) in s with the
/// engine's normalization recovered by shifting the published t^{a/2-1} /
/// t^{b/2} prefactors away; the p = 0 knot case returns (1, 1).  Throws
/// std::invalid_argument on inconsistent parameters.
std::pair<LaurentPoly, LaurentPoly>
lemma2_predicted_deltas(long k, long p, long a, long b, int mu);

/// One row of the equal-V survey.
struct SurveyRow {
    std::string word;      ///< rendered canonical word
    long w = 0;            ///< writhe
    int mu = 0;            ///< closure component count
    std::uint64_t v_hash = 0;
    std::uint64_t p_hash = 0;
    std::size_t bucket = 0;  ///< equal-V bucket id, by first appearance
    std::string jones;       ///< serialized V (kept for --full output)
    std::string homfly;      ///< serialized P (kept for --full output)
};

struct SurveyReport {
    int max_len = 0;
    std::size_t buckets = 0;
    std::size_t violations = 0;          ///< equal-V buckets with > 1 distinct P
    std::size_t cross_writhe_pairs = 0;  ///< same-bucket writhe pairs screened
    std::size_t screen_failures = 0;     ///< screened pairs breaking the predicted shape
    std::vector<std::string> notes;      ///< human-readable counterexample notes
    std::vector<SurveyRow> rows;
};

/// Enumerates all canonical three-strand words of length <= max_len,
/// buckets them by exact Jones polynomial, and verifies that every bucket
/// carries a single P.  Same-bucket pairs of distinct writhe are further
/// screened against the equal-V classification (component count, writhe
/// parity, and the predicted Conway/Alexander shapes).  Deterministic: row
/// order, bucket ids, and counts are independent of thread count.
SurveyReport survey_equal_v(int max_len);

/// CSV rendering: word,w,mu,v_hash,p_hash,bucket and, when full is set,
/// jones and homfly columns.
std::string survey_csv(const SurveyReport& report, bool full);

} // namespace skeinlab
