#include "skeinlab/hecke.hpp"

#include "skeinlab/conway.hpp"

#include <cstdlib>

namespace skeinlab {

HeckeElement HeckeElement::identity(int n) {
    HeckeElement x(n);
    x.add_term(Perm::identity(n), BiLaurent::one());
    return x;
}

void HeckeElement::add_term(const Perm& w, const BiLaurent& c) {
    if (static_cast<int>(w.img.size()) != n_)
        throw std::invalid_argument("HeckeElement::add_term: wrong symmetric group");
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HeckeElement hecke_mul_ti(const HeckeElement& x, int i) {
    if (i < 1 || i > x.strands() - 1)
        throw std::invalid_argument("hecke_mul_ti: generator index out of range");
    static const BiLaurent z = BiLaurent::monomial(1, 0, 1);
    HeckeElement r(x.strands());
    for (const auto& [w, c] : x.terms()) {
        if (w(i) < w(i + 1)) {  // length goes up
            r.add_term(w.swapped(i), c);
        } else {
            r.add_term(w, c * z);
            r.add_term(w.swapped(i), c);
        }
    }
    return r;
}

HeckeElement hecke_mul_gen(const HeckeElement& x, int i, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("hecke_mul_gen: bad sign");
    HeckeElement t = hecke_mul_ti(x, i);
    HeckeElement r(x.strands());
    if (sign > 0) {
        const BiLaurent v = BiLaurent::monomial(1, 1, 0);
        for (const auto& [w, c] : t.terms()) r.add_term(w, c * v);
    } else {
        // v^-1 (x T_i - z x)
        const BiLaurent vinv = BiLaurent::monomial(1, -1, 0);
        const BiLaurent vinv_z = BiLaurent::monomial(1, -1, 1);
        for (const auto& [w, c] : t.terms()) r.add_term(w, c * vinv);
        for (const auto& [w, c] : x.terms()) r.add_term(w, -(c * vinv_z));
    }
    return r;
}

HeckeElement hecke_image(const BraidWord& b) {
    HeckeElement x = HeckeElement::identity(b.n);
    for (int l : b.letters) x = hecke_mul_gen(x, std::abs(l), l > 0 ? 1 : -1);
    return x;
}

namespace {

// One trace level: splits terms of H_n into those fixing strand n (no tau)
// and the rest (one tau factor, after rewriting T_w = T_u T_{n-1} ... T_j
// and absorbing all but T_{n-1} back into H_{n-1}).
void trace_level(const std::map<Perm, BiLaurent>& terms, int n, int taudeg, TracePoly& out) {
    if (n == 1) {
        for (const auto& [w, c] : terms) out.c[taudeg] += c;
        return;
    }
    std::map<Perm, BiLaurent> plain;
    std::map<Perm, BiLaurent> bumped;
    auto accumulate = [](std::map<Perm, BiLaurent>& m, const Perm& w, const BiLaurent& c) {
        auto it = m.find(w);
        if (it == m.end()) {
            m.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) m.erase(it);
        }
    };
    for (const auto& [w, c] : terms) {
        if (w(n) == n) {
            accumulate(plain, w.drop_position(n), c);
        } else {
            const int j = w.preimage(n);
            HeckeElement prod(n - 1);
            prod.add_term(w.drop_position(j), c);
            for (int g = n - 2; g >= j; --g) prod = hecke_mul_ti(prod, g);
            for (const auto& [w2, c2] : prod.terms()) accumulate(bumped, w2, c2);
        }
    }
    if (!plain.empty()) trace_level(plain, n - 1, taudeg, out);
    if (!bumped.empty()) trace_level(bumped, n - 1, taudeg + 1, out);
}

}  // namespace

TracePoly ocneanu_trace(const HeckeElement& x) {
    TracePoly out;
    out.c.assign(x.strands(), BiLaurent());
    trace_level(x.terms(), x.strands(), 0, out);
    return out;
}

BiLaurent homflypt(const BraidWord& b) {
    const int n = b.n;
    const TracePoly t = ocneanu_trace(hecke_image(b));
    const unsigned long K = static_cast<unsigned long>(n - 1);

    // P = delta^{n-1} * sum_k c_k tau^k  with  tau = z/(1-v^2),
    // assembled over the common denominator z^{n-1} (1-v^2)^K and divided
    // out exactly.
    const BiLaurent one_minus_v2 = BiLaurent(1) - BiLaurent::monomial(1, 2, 0);
    const BiLaurent vinv_minus_v =
        BiLaurent::monomial(1, -1, 0) - BiLaurent::monomial(1, 1, 0);
    BiLaurent num;
    for (unsigned long k = 0; k <= K; ++k) {
        if (t.c[k].is_zero()) continue;
        num += t.c[k].shifted(0, static_cast<long>(k)) * pow(one_minus_v2, K - k);
    }
    num *= pow(vinv_minus_v, K);
    const BiLaurent den = pow(one_minus_v2, K).shifted(0, static_cast<long>(K));
    return exact_div(num, den);
}

BiLaurent split_factor() {
    return BiLaurent::monomial(1, -1, -1) - BiLaurent::monomial(1, 1, -1);
}

BiLaurent torus_homflypt_closed(long p) {
    BiLaurent r = BiLaurent::from_z(conway_torus(p + 1)) -
                  BiLaurent::from_z(conway_torus(p - 1)).shifted(2, 0);
    return r.shifted(p - 1, -1);
}

bool check_skein_triple(const BraidWord& b, size_t position) {
    if (position >= b.letters.size())
        throw std::invalid_argument("check_skein_triple: position out of range");
    BraidWord plus = b, minus = b, zero = b;
    const int idx = std::abs(b.letters[position]);
    plus.letters[position] = idx;
    minus.letters[position] = -idx;
    zero.letters.erase(zero.letters.begin() + static_cast<long>(position));

    const BiLaurent lhs = homflypt(plus);
    const BiLaurent rhs = homflypt(zero).shifted(1, 1) + homflypt(minus).shifted(2, 0);
    return lhs == rhs;
}

ReductionReport check_reduction_formulas(const BraidWord& b, int i, long e) {
    if (i < 1 || i > b.n - 1)
        throw std::invalid_argument("check_reduction_formulas: index out of range");
    ReductionReport rep;

    const BraidWord be = concat(b, generator_power(i, e, b.n));
    const BraidWord bp = concat(b, generator_power(i, 1, b.n));
    const BraidWord bm = concat(b, generator_power(i, -1, b.n));

    const BiLaurent P = homflypt(b);
    const BiLaurent Pe = homflypt(be);
    const BiLaurent Pp = homflypt(bp);
    const BiLaurent Pm = homflypt(bm);

    // nabla versions at v = 1.
    {
        const LaurentPoly n0 = P.at_v_one(), ne = Pe.at_v_one();
        const LaurentPoly np = Pp.at_v_one(), nm = Pm.at_v_one();
        rep.conway_plus = (ne == conway_torus(e) * np + conway_torus(e - 1) * n0);
        rep.conway_minus = (ne == conway_torus(e) * nm + conway_torus(e + 1) * n0);
    }

    rep.homfly_plus =
        (Pe == BiLaurent::from_z(conway_torus(e)).shifted(e - 1, 0) * Pp +
                   BiLaurent::from_z(conway_torus(e - 1)).shifted(e, 0) * P);
    rep.homfly_minus =
        (Pe == BiLaurent::from_z(conway_torus(e)).shifted(e + 1, 0) * Pm +
                   BiLaurent::from_z(conway_torus(e + 1)).shifted(e, 0) * P);

    // Clustered split: needs all sigma_i occurrences of the freely reduced
    // b*sigma_i^e inside one syllable; the torus factor takes that
    // syllable's exponent.
    int syllables_with_i = 0;
    long cluster_exp = 0;
    for (const Syllable& s : syllables(be)) {
        if (s.index == i) {
            ++syllables_with_i;
            cluster_exp = s.exponent;
        }
    }
    if (syllables_with_i <= 1) {
        const BiLaurent left = homflypt(psi(i, be.n, be));
        const BiLaurent right = homflypt(psi(0, i, be));
        rep.cluster = (Pe == left * torus_homflypt_closed(cluster_exp) * right);
    }
    return rep;
}

}  // namespace skeinlab
