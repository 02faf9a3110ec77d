#include "skeinlab/algebra.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace skeinlab {

Int binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative upper index");
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::monomial(const Int& c, long e, std::string var) {
    LaurentPoly p(std::move(var));
    if (c != 0) p.terms_[e] = c;
    return p;
}

std::optional<long> LaurentPoly::min_exp() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

std::optional<long> LaurentPoly::max_exp() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
}

Int LaurentPoly::coeff(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(long e, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPoly::check_var(const LaurentPoly& o, const char* op) const {
    if (var_ != o.var_)
        throw VariableMismatch(std::string("LaurentPoly ") + op + ": '" + var_ + "' vs '" +
                               o.var_ + "'");
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(var_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check_var(o, "+");
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    check_var(o, "-");
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_var(o, "*");
    LaurentPoly r(var_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Int& c) const {
    LaurentPoly r(var_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly r(var_);
    for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
    return r;
}

Int LaurentPoly::eval(const Int& value) const {
    Int acc = 0;
    for (const auto& [e, c] : terms_) {
        if (e >= 0) {
            Int p;
            mpz_pow_ui(p.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(e));
            acc += c * p;
        } else {
            if (value == 1) {
                acc += c;
            } else if (value == -1) {
                acc += c * parity_sign(e);
            } else {
                throw NonInvertibleSubstitution(
                    "eval: negative exponent at a non-unit integer");
            }
        }
    }
    return acc;
}

namespace {

bool is_unit_monomial(const LaurentPoly& p) {
    if (!p.is_monomial()) return false;
    const Int& c = p.terms().begin()->second;
    return c == 1 || c == -1;
}

// value^e for arbitrary integer e; requires value to be a unit monomial
// when e < 0.  `cache` keys powers by exponent.
const LaurentPoly& cached_power(const LaurentPoly& value, long e,
                                std::map<long, LaurentPoly>& cache) {
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    LaurentPoly r = LaurentPoly::one(value.var());
    if (e >= 0) {
        if (value.is_monomial()) {
            const auto& [ve, vc] = *value.terms().begin();
            Int c;
            mpz_pow_ui(c.get_mpz_t(), vc.get_mpz_t(), static_cast<unsigned long>(e));
            r = LaurentPoly::monomial(c, ve * e, value.var());
        } else {
            r = pow(value, static_cast<unsigned long>(e));
        }
    } else {
        if (!is_unit_monomial(value))
            throw NonInvertibleSubstitution(
                "substitute: negative exponent needs a unit monomial value");
        const auto& [ve, vc] = *value.terms().begin();
        r = LaurentPoly::monomial(vc == 1 ? Int(1) : Int(parity_sign(e)), ve * e, value.var());
    }
    return cache.emplace(e, std::move(r)).first->second;
}

}  // namespace

LaurentPoly LaurentPoly::substitute(const LaurentPoly& value) const {
    LaurentPoly acc(value.var());
    std::map<long, LaurentPoly> cache;
    for (const auto& [e, c] : terms_) acc += cached_power(value, e, cache).scaled(c);
    return acc;
}

LaurentPoly LaurentPoly::negate_variable() const {
    LaurentPoly r(var_);
    for (const auto& [e, c] : terms_) r.terms_[e] = (e % 2 == 0) ? c : -c;
    return r;
}

LaurentPoly LaurentPoly::reciprocal_variable() const {
    LaurentPoly r(var_);
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << var_;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

std::string LaurentPoly::canonical() const {
    std::ostringstream os;
    os << var_;
    for (const auto& [e, c] : terms_) os << "|" << e << ":" << c.get_str();
    return os.str();
}

LaurentPoly pow(const LaurentPoly& base, unsigned long n) {
    LaurentPoly r = LaurentPoly::one(base.var());
    LaurentPoly b = base;
    while (n > 0) {
        if (n & 1) r *= b;
        n >>= 1;
        if (n > 0) b *= b;
    }
    return r;
}

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw InexactDivision("exact_div: division by zero");
    if (num.is_zero()) return LaurentPoly(num.var());
    if (num.var() != den.var())
        throw VariableMismatch("exact_div: '" + num.var() + "' vs '" + den.var() + "'");

    // Shift both operands to ordinary polynomials with nonzero constant term;
    // in the Laurent ring the shift is a unit, so exactness is unaffected.
    const long nshift = *num.min_exp();
    const long dshift = *den.min_exp();
    LaurentPoly r = num.shifted(-nshift);
    const LaurentPoly d = den.shifted(-dshift);
    const long ddeg = *d.max_exp();
    const Int dlead = d.coeff(ddeg);

    LaurentPoly q(num.var());
    while (!r.is_zero()) {
        const long rdeg = *r.max_exp();
        if (rdeg < ddeg) throw InexactDivision("exact_div: nonzero remainder");
        const Int rlead = r.coeff(rdeg);
        if (!mpz_divisible_p(rlead.get_mpz_t(), dlead.get_mpz_t()))
            throw InexactDivision("exact_div: leading coefficient not divisible");
        const LaurentPoly t = LaurentPoly::monomial(rlead / dlead, rdeg - ddeg, num.var());
        q += t;
        r -= t * d;
    }
    return q.shifted(nshift - dshift);
}

namespace {

// gcd of all coefficients, always nonnegative.
Int content(const LaurentPoly& p) {
    Int g = 0;
    for (const auto& [e, c] : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// Divide out the content and force a positive leading coefficient.
LaurentPoly primitive_part(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    Int g = content(p);
    if (p.coeff(*p.max_exp()) < 0) g = -g;
    LaurentPoly r(p.var());
    for (const auto& [e, c] : p.terms()) r.add_term(e, c / g);
    return r;
}

// Pseudo-remainder of ordinary polynomials: lc(b)^(deg a - deg b + 1) * a mod b.
LaurentPoly pseudo_rem(LaurentPoly a, const LaurentPoly& b) {
    const long bdeg = *b.max_exp();
    const Int blead = b.coeff(bdeg);
    while (!a.is_zero() && *a.max_exp() >= bdeg) {
        const long adeg = *a.max_exp();
        const Int alead = a.coeff(adeg);
        a = a.scaled(blead) - b.shifted(adeg - bdeg).scaled(alead);
    }
    return a;
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.var() != b.var())
        throw VariableMismatch("gcd: '" + a.var() + "' vs '" + b.var() + "'");
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");

    // Clear negative exponents only; a leftover monomial factor is a genuine
    // common factor of the polynomial parts and must survive (e.g. z | z^3+2z).
    auto clear_neg = [](const LaurentPoly& p) {
        if (p.is_zero()) return p;
        const long m = *p.min_exp();
        return m < 0 ? p.shifted(-m) : p;
    };
    LaurentPoly x = primitive_part(clear_neg(a));
    LaurentPoly y = primitive_part(clear_neg(b));
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (*x.max_exp() < *y.max_exp()) std::swap(x, y);
    while (!y.is_zero()) {
        LaurentPoly r = pseudo_rem(x, y);
        x = y;
        y = primitive_part(r);
    }
    return primitive_part(x);
}

// ------------------------------------------------------------------ BiLaurent

BiLaurent BiLaurent::monomial(const Int& c, long ev, long ez) {
    BiLaurent p;
    if (c != 0) p.terms_[{ev, ez}] = c;
    return p;
}

BiLaurent BiLaurent::from_z(const LaurentPoly& p) {
    BiLaurent r;
    for (const auto& [e, c] : p.terms()) r.terms_[{0, e}] = c;
    return r;
}

BiLaurent BiLaurent::from_v(const LaurentPoly& p) {
    BiLaurent r;
    for (const auto& [e, c] : p.terms()) r.terms_[{e, 0}] = c;
    return r;
}

Int BiLaurent::coeff(long ev, long ez) const {
    auto it = terms_.find({ev, ez});
    return it == terms_.end() ? Int(0) : it->second;
}

void BiLaurent::add_term(long ev, long ez, const Int& c) {
    if (c == 0) return;
    Key k{ev, ez};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_[k] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::optional<long> BiLaurent::min_v() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.first;
}

std::optional<long> BiLaurent::max_v() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.first;
}

std::optional<long> BiLaurent::min_z() const {
    if (terms_.empty()) return std::nullopt;
    long m = terms_.begin()->first.second;
    for (const auto& [k, c] : terms_) m = std::min(m, k.second);
    return m;
}

std::optional<long> BiLaurent::max_z() const {
    if (terms_.empty()) return std::nullopt;
    long m = terms_.begin()->first.second;
    for (const auto& [k, c] : terms_) m = std::max(m, k.second);
    return m;
}

LaurentPoly BiLaurent::v_slice(long a) const {
    LaurentPoly r("z");
    for (auto it = terms_.lower_bound({a, std::numeric_limits<long>::min()});
         it != terms_.end() && it->first.first == a; ++it)
        r.add_term(it->first.second, it->second);
    return r;
}

std::vector<long> BiLaurent::v_exponents() const {
    std::vector<long> out;
    for (const auto& [k, c] : terms_)
        if (out.empty() || out.back() != k.first) out.push_back(k.first);
    return out;
}

BiLaurent BiLaurent::operator-() const {
    BiLaurent r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

BiLaurent BiLaurent::operator+(const BiLaurent& o) const {
    BiLaurent r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

BiLaurent BiLaurent::operator-(const BiLaurent& o) const {
    BiLaurent r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

BiLaurent BiLaurent::operator*(const BiLaurent& o) const {
    BiLaurent r;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_)
            r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return r;
}

BiLaurent BiLaurent::scaled(const Int& c) const {
    BiLaurent r;
    if (c == 0) return r;
    for (const auto& [k, k2] : terms_) r.terms_[k] = k2 * c;
    return r;
}

BiLaurent BiLaurent::shifted(long dv, long dz) const {
    BiLaurent r;
    for (const auto& [k, c] : terms_) r.terms_[{k.first + dv, k.second + dz}] = c;
    return r;
}

LaurentPoly BiLaurent::at_v_one() const {
    LaurentPoly r("z");
    for (const auto& [k, c] : terms_) r.add_term(k.second, c);
    return r;
}

std::string BiLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool need_coeff = (a != 1) || (k.first == 0 && k.second == 0);
        bool printed = false;
        if (need_coeff) {
            os << a.get_str();
            printed = true;
        }
        auto put = [&](const char* name, long e) {
            if (e == 0) return;
            if (printed) os << "*";
            os << name;
            if (e != 1) os << "^" << e;
            printed = true;
        };
        put("v", k.first);
        put("z", k.second);
    }
    return os.str();
}

std::string BiLaurent::canonical() const {
    std::ostringstream os;
    os << "v,z";
    for (const auto& [k, c] : terms_)
        os << "|" << k.first << "," << k.second << ":" << c.get_str();
    return os.str();
}

BiLaurent pow(const BiLaurent& base, unsigned long n) {
    BiLaurent r = BiLaurent::one();
    BiLaurent b = base;
    while (n > 0) {
        if (n & 1) r *= b;
        n >>= 1;
        if (n > 0) b *= b;
    }
    return r;
}

BiLaurent exact_div(const BiLaurent& num, const BiLaurent& den) {
    if (den.is_zero()) throw InexactDivision("exact_div: division by zero");
    if (num.is_zero()) return BiLaurent();

    // Any exact quotient q satisfies min_v(q) = min_v(num) - min_v(den);
    // passing below that bound proves the division inexact.
    const long qmin_bound = *num.min_v() - *den.min_v();
    const long dlead_v = *den.max_v();
    const LaurentPoly dlead = den.v_slice(dlead_v);

    BiLaurent r = num;
    BiLaurent q;
    while (!r.is_zero()) {
        const long rlead_v = *r.max_v();
        const long qv = rlead_v - dlead_v;
        if (qv < qmin_bound) throw InexactDivision("exact_div: nonzero remainder (v)");
        const LaurentPoly qslice = exact_div(r.v_slice(rlead_v), dlead);
        BiLaurent qterm = BiLaurent::from_z(qslice).shifted(qv, 0);
        q += qterm;
        r -= qterm * den;
    }
    return q;
}

LaurentPoly substitute(const BiLaurent& p, const LaurentPoly& vval, const LaurentPoly& zval) {
    if (vval.var() != zval.var())
        throw VariableMismatch("substitute: values in '" + vval.var() + "' vs '" +
                               zval.var() + "'");
    LaurentPoly acc(vval.var());
    std::map<long, LaurentPoly> vcache, zcache;
    for (const auto& [k, c] : p.terms()) {
        const LaurentPoly& pv = cached_power(vval, k.first, vcache);
        const LaurentPoly& pz = cached_power(zval, k.second, zcache);
        acc += (pv * pz).scaled(c);
    }
    return acc;
}

}  // namespace skeinlab
