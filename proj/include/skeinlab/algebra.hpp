/**
 * @file algebra.hpp
 * @brief Sparse Laurent polynomials over arbitrary-precision integers.
 *
 * Two exact coefficient rings back everything else in the library:
 *
 *  - LaurentPoly: one-variable Laurent polynomials Z[x, x^-1], kept as a
 *    sorted exponent->coefficient map.  Each polynomial carries a variable
 *    tag ("z", "s", "t", "A"); the tag is a semantic label only, but mixing
 *    tags in arithmetic is a hard error so that e.g. a Conway polynomial in
 *    z can never silently combine with a Jones polynomial in s.
 *  - BiLaurent: two-variable Laurent polynomials Z[v, v^-1, z, z^-1] with
 *    fixed variable names (v, z), used for the link invariant itself.
 *
 * All arithmetic is exact.  Division is exact division: if the quotient
 * does not exist in the Laurent ring, InexactDivision is thrown — callers
 * rely on that as a tripwire for engine bugs rather than a recoverable
 * condition.
 */
#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skeinlab {

/// Arbitrary-precision integer coefficient type.
using Int = mpz_class;

/// Thrown when an exact division has a nonzero remainder.
struct InexactDivision : std::runtime_error {
    explicit InexactDivision(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a substitution would need the inverse of a non-unit.
struct NonInvertibleSubstitution : std::runtime_error {
    explicit NonInvertibleSubstitution(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when two polynomials with different variable tags meet.
struct VariableMismatch : std::runtime_error {
    explicit VariableMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// (-1)^k for any integer k.
inline int parity_sign(long k) { return (k % 2 == 0) ? 1 : -1; }

/**
 * @brief Binomial coefficient C(n, k) as a big integer.
 * @pre n >= 0.  Returns 0 for k < 0 or k > n.
 */
Int binomial(long n, long k);

/**
 * @brief One-variable sparse Laurent polynomial with integer coefficients.
 *
 * Invariant: no zero coefficients are stored; the zero polynomial has an
 * empty term map.  Exponents may be negative.
 */
class LaurentPoly {
public:
    /// Zero polynomial in the given variable.
    explicit LaurentPoly(std::string var = "z") : var_(std::move(var)) {}

    /// Constant polynomial.
    LaurentPoly(const Int& c, std::string var) : var_(std::move(var)) {
        if (c != 0) terms_[0] = c;
    }

    /// c * var^e.
    static LaurentPoly monomial(const Int& c, long e, std::string var);
    /// Convenience: 1 in the given variable.
    static LaurentPoly one(std::string var) { return LaurentPoly(Int(1), std::move(var)); }

    const std::string& var() const { return var_; }
    const std::map<long, Int>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// True when the polynomial is c * var^e for a single term.
    bool is_monomial() const { return terms_.size() == 1; }
    /// True when the only exponent present is 0 (or the polynomial is 0).
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }

    /// Smallest exponent with nonzero coefficient; nullopt for 0.
    std::optional<long> min_exp() const;
    /// Largest exponent with nonzero coefficient; nullopt for 0.
    std::optional<long> max_exp() const;
    /// Coefficient of var^e (0 when absent).
    Int coeff(long e) const;

    /// Adds c * var^e in place.
    void add_term(long e, const Int& c);

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    /// Scalar multiple.
    LaurentPoly scaled(const Int& c) const;
    /// Multiplication by var^k (exponent shift).
    LaurentPoly shifted(long k) const;

    bool operator==(const LaurentPoly& o) const {
        return var_ == o.var_ && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /**
     * @brief Evaluate at an integer point.
     *
     * Negative exponents require value = +1 or -1 (the only integer units);
     * anything else throws NonInvertibleSubstitution.
     */
    Int eval(const Int& value) const;

    /**
     * @brief Composition: substitute @p value for this polynomial's variable.
     *
     * The result lives in @p value's variable.  Negative exponents of *this
     * require @p value to be a unit monomial (coefficient +-1); otherwise
     * NonInvertibleSubstitution is thrown.
     */
    LaurentPoly substitute(const LaurentPoly& value) const;

    /// Substitute var -> -var (negates odd-exponent coefficients).
    LaurentPoly negate_variable() const;

    /// Mirror exponents: var -> var^-1.
    LaurentPoly reciprocal_variable() const;

    /// Canonical text form, e.g. "z^-1 - 2 + z" with ascending exponents.
    std::string str() const;
    /// Canonical serialization used for hashing: "var|exp:coeff|...".
    std::string canonical() const;

private:
    void check_var(const LaurentPoly& o, const char* op) const;

    std::string var_;
    std::map<long, Int> terms_;
};

/// x^n for n >= 0.
LaurentPoly pow(const LaurentPoly& base, unsigned long n);

/**
 * @brief Exact division in Z[x, x^-1].
 * @throws InexactDivision when @p den does not divide @p num exactly;
 *         division by zero also reports InexactDivision.
 */
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

/**
 * @brief Polynomial gcd, normalized primitive with positive leading coefficient.
 *
 * Inputs are first multiplied by the power of the variable clearing negative
 * exponents; the gcd is then the rational-coefficient polynomial gcd made
 * primitive over Z with positive leading coefficient.  gcd(x, 0) is the
 * normalization of x.  Both arguments zero is an error.
 */
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/**
 * @brief Two-variable sparse Laurent polynomial in (v, z) over Z.
 *
 * Term keys are (v-exponent, z-exponent) pairs in lexicographic order.
 * No zero coefficients are stored.
 */
class BiLaurent {
public:
    using Key = std::pair<long, long>;

    BiLaurent() = default;
    explicit BiLaurent(const Int& c) {
        if (c != 0) terms_[{0, 0}] = c;
    }

    /// c * v^ev * z^ez.
    static BiLaurent monomial(const Int& c, long ev, long ez);
    static BiLaurent one() { return BiLaurent(Int(1)); }
    /// Injects a one-variable polynomial as powers of z (v-degree 0).
    static BiLaurent from_z(const LaurentPoly& p);
    /// Injects a one-variable polynomial as powers of v (z-degree 0).
    static BiLaurent from_v(const LaurentPoly& p);

    const std::map<Key, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int coeff(long ev, long ez) const;
    void add_term(long ev, long ez, const Int& c);

    std::optional<long> min_v() const;
    std::optional<long> max_v() const;
    std::optional<long> min_z() const;
    std::optional<long> max_z() const;

    /// z-polynomial coefficient of v^a.
    LaurentPoly v_slice(long a) const;
    /// All v-exponents that occur, ascending.
    std::vector<long> v_exponents() const;

    BiLaurent operator-() const;
    BiLaurent operator+(const BiLaurent& o) const;
    BiLaurent operator-(const BiLaurent& o) const;
    BiLaurent operator*(const BiLaurent& o) const;
    BiLaurent& operator+=(const BiLaurent& o) { return *this = *this + o; }
    BiLaurent& operator-=(const BiLaurent& o) { return *this = *this - o; }
    BiLaurent& operator*=(const BiLaurent& o) { return *this = *this * o; }

    BiLaurent scaled(const Int& c) const;
    /// Multiplication by v^dv * z^dz.
    BiLaurent shifted(long dv, long dz) const;

    bool operator==(const BiLaurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const BiLaurent& o) const { return !(*this == o); }

    /// Sets v = 1, collapsing to a Laurent polynomial in z.
    LaurentPoly at_v_one() const;

    /// Canonical text form with v-major ordering.
    std::string str() const;
    /// Canonical serialization used for hashing.
    std::string canonical() const;

private:
    std::map<Key, Int> terms_;
};

/// p^n for n >= 0.
BiLaurent pow(const BiLaurent& base, unsigned long n);

/**
 * @brief Exact division in Z[v, v^-1, z, z^-1].
 *
 * Performed as recursive exact division: by leading v-slices, with the
 * slice quotients computed by one-variable exact division in z.
 * @throws InexactDivision when the quotient does not exist.
 */
BiLaurent exact_div(const BiLaurent& num, const BiLaurent& den);

/**
 * @brief Substitute v -> @p vval, z -> @p zval (both in the same variable).
 *
 * Negative v- or z-exponents require the corresponding value to be a unit
 * monomial; otherwise NonInvertibleSubstitution is thrown.
 */
LaurentPoly substitute(const BiLaurent& p, const LaurentPoly& vval, const LaurentPoly& zval);

}  // namespace skeinlab
